/*!
  \file synthesizer.hpp
  \brief Covering a function with several lattices of one dimension

  Terms longer than the longest lattice path (LB) are shortened first: a
  prefix of LB literals is replaced by a fresh auxiliary variable whose
  product gets a lattice of its own. The remaining terms are then covered
  greedily: the whole list on one lattice, else on two lattices, else the
  first half is handled (one lattice, the larger part of a two-lattice
  split, or recursively) and the rest is processed again.
*/
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "decomposer.hpp"

namespace latsyn
{

struct aux_definition
{
  /*! \brief Auxiliary variable code (26, 27, ...). */
  literal aux;
  term product;
};

struct split_terms_result
{
  /*! \brief Terms sorted by length (stable), long terms rewritten with auxiliary variables. */
  sop function;
  /*! \brief `origin[i]` is the input index of `function[i]`. */
  std::vector<uint32_t> origin;
  std::vector<aux_definition> aux;
};

/*! \brief Throws for `lb < 2`. */
split_terms_result split_long_terms( sop const& f, uint32_t lb );

struct plan_lattice
{
  lattice_assignment lattice;
  /*! \brief The sub-function placed on this lattice (auxiliary codes included). */
  sop function;
  /*! \brief 0-based input term indices realized here; empty for auxiliary lattices. */
  std::vector<uint32_t> terms;
  /*! \brief Set when the lattice realizes an auxiliary definition. */
  std::optional<literal> defines;
};

struct synthesis_plan
{
  lattice_dim dim;
  std::vector<plan_lattice> lattices;
  std::vector<aux_definition> aux;
};

struct synth_params
{
  search_budget budget;
};

struct synth_stats
{
  uint64_t map_calls{ 0 };
  uint64_t decompositions{ 0 };
  double seconds{ 0.0 };
};

struct synth_result
{
  /*! \brief `solution` when every inner search was exhaustive, `inconclusive` otherwise. */
  map_status status{ map_status::solution };
  std::optional<synthesis_plan> plan;
  synth_stats stats;
};

synth_result synthesize( sop const& f, lattice_dim dim, synth_params const& ps = {} );

/*! \brief OR of the main lattices with auxiliary variables replaced by their lattices' functions. */
sop expand_plan( synthesis_plan const& plan );

} // namespace latsyn
