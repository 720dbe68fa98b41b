/*!
  \file solver.hpp
  \brief Lattice assignments, their SOP function, and random function libraries

  The function of a lattice is the OR over its irredundant paths of the
  product of the literals on the path. Paths holding constant zero or a
  complementary pair cancel; the surviving products are absorbed and
  returned in canonical term order, without further minimization.
*/
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "path_enum.hpp"
#include "sop.hpp"

namespace latsyn
{

/*! \brief r x c grid of literal codes, row-major. */
struct lattice_assignment
{
  lattice_dim dim;
  std::vector<literal> codes;

  literal at( uint32_t row, uint32_t col ) const { return codes.at( row * dim.cols + col ); }
  bool operator==( lattice_assignment const& ) const = default;
};

lattice_assignment parse_lattice( std::string_view text );
std::string serialize_lattice( lattice_assignment const& lat );

/*! \brief Grid with letters (a, b', ...) and 0/1 for constants. */
std::string pretty_lattice( lattice_assignment const& lat );

enum class solve_mode
{
  /*! \brief Path products, cancellation and absorption only. */
  exact,
  /*! \brief Exact result followed by one complementary-pair merging pass. */
  merge_complementary_pairs
};

sop solve_lattice( lattice_assignment const& lat, solve_mode mode = solve_mode::exact );

/*! \brief Variant reusing precomputed paths; `paths.dim` must equal `lat.dim`. */
sop solve_lattice( lattice_assignment const& lat, path_set const& paths, solve_mode mode = solve_mode::exact );

/*! \brief One pass over equal-size term pairs p*x, p*x' of `f`.
 *
 * Every such pair contributes p; all terms taking part in a pair are removed.
 * The result is not absorbed again.
 */
sop merge_complementary_pairs( sop const& f );

/*! \brief `equivalent( solve_lattice( lat ), f )`. */
bool verify_witness( lattice_assignment const& lat, sop const& f, uint32_t max_variables = 20u );

struct library_params
{
  lattice_dim dim{ 3u, 3u };
  uint32_t num_vars{ 5u };
  uint32_t trials{ 20u };
  uint64_t seed{ 1u };
  uint32_t jobs{ 1u };
};

struct library_entry
{
  uint32_t trial{ 0u };
  uint64_t seed{ 0u };
  lattice_assignment lattice;
  sop function;
};

/*! \brief [0..n-1, 1000, 999, ..., 1000-(n-1), 101, 100] */
std::vector<literal> library_literal_range( uint32_t num_vars );

/*! \brief Trial i draws its cells from mt19937_64 seeded with `seed + i`. */
std::vector<library_entry> generate_library( library_params const& ps );

/*! \brief First line `<entries> <seed>`, then per entry: lattice, blank line, function, blank line. */
std::string serialize_library( std::vector<library_entry> const& entries, uint64_t seed );
std::string serialize_library_paper_style( std::vector<library_entry> const& entries );

struct parsed_library
{
  uint64_t seed{ 0u };
  std::vector<library_entry> entries;
};

/*! \brief Reads the canonical library format. */
parsed_library parse_library( std::string_view text );

} // namespace latsyn
