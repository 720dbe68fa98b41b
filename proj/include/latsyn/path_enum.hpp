/*!
  \file path_enum.hpp
  \brief Irredundant source-to-destination paths of a lattice

  A path is irredundant when no other path visits a subset of its cells.
  The depth-first enumeration rejects an extension x -> y as soon as y
  touches any node of the partial path other than x; this keeps the path
  chordless, which is exactly the minimality condition, so no superset
  filtering is needed afterwards.
*/
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lattice_graph.hpp"

namespace latsyn
{

/*! \brief Cell sequence from a top-row cell to a bottom-row cell. */
using basic_path = std::vector<uint16_t>;

/*! \brief Canonical order: shorter first, then lexicographic cell sequence. */
bool path_less( basic_path const& a, basic_path const& b ) noexcept;

struct path_set
{
  lattice_dim dim;
  std::vector<basic_path> paths;

  std::size_t size() const noexcept { return paths.size(); }
  bool operator==( path_set const& ) const = default;
};

struct enumerate_params
{
  /*! \brief Worker threads; subtrees below the source are split among them. */
  uint32_t jobs{ 1u };
};

path_set enumerate_paths( lattice_dim dim, enumerate_params const& ps = {} );

/*! \brief All simple paths, then removal of proper cell-set supersets (oracle; r, c <= 4). */
path_set brute_force_paths( lattice_dim dim );

/*! \brief Length of the longest path (LB); 0 for an empty set. */
uint32_t longest_path_len( path_set const& paths ) noexcept;

std::string serialize_paths( path_set const& paths );

/*! \brief Parses a path file; the dimension is recovered from the distinct first cells. */
path_set parse_paths( std::string_view text );

} // namespace latsyn
