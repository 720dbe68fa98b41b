/*!
  \file mapper.hpp
  \brief Backtracking placement of an SOP function onto a lattice

  Terms are examined in a permutation order. Each term is housed on one
  unused path, shortest paths first: the path's free cells receive the
  term's literals or constant one so that the path product is exactly the
  term. As a last alternative a term may be deferred, hoping it is realized
  by a combination of other path products. When every term is handled, all
  still-unassigned cells are set to constant zero and the lattice function
  must be equivalent to the target.

  Two prunings keep the search exact: every completely assigned path must
  cancel or contain a target term, and the target must stay below the OR of
  the partial path products (unassigned cells read as one).

  Because deferral is always available, every examination order reaches
  the same set of final assignments. One complete order therefore decides
  solvability; further orders are only tried after a budget truncation.
*/
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "path_enum.hpp"
#include "solver.hpp"
#include "sop.hpp"

namespace latsyn
{

struct search_budget
{
  /*! \brief Examination orders tried after truncated searches. */
  std::optional<uint64_t> max_orders;
  /*! \brief Placements tried per (term, path) at one search node. */
  std::optional<uint64_t> max_placements_per_term_path;
  std::optional<double> time_limit_seconds;

  bool unlimited() const noexcept { return !max_orders && !max_placements_per_term_path && !time_limit_seconds; }

  /*! \brief Reads LATSYN_MAX_ORDERS, LATSYN_MAX_PLACEMENTS and LATSYN_TIME_LIMIT. */
  static search_budget from_environment();
};

enum class poi_kind
{
  saved_escape_path,
  covered_escape_multi_option,
  path_saved_by_xx,
  zero_on_lattice_var,
  term_hiding,
  placed_by_xx,
  examination_order
};

/*! \brief Point of interest of a solution; term and path numbers are 1-based, cells 0-based. */
struct poi_event
{
  poi_kind kind;
  std::vector<uint32_t> values;

  std::string to_string() const;
  bool operator==( poi_event const& ) const = default;
};

struct mapping_solution
{
  lattice_assignment assignment;
  /*! \brief 1-based term indices in examination order. */
  std::vector<uint32_t> order;
  std::vector<poi_event> poi;
};

enum class map_status
{
  solution,
  no_solution,
  inconclusive
};

std::string to_string( map_status s );

struct map_stats
{
  uint64_t orders{ 0 };
  uint64_t nodes{ 0 };
  uint64_t placements{ 0 };
  uint64_t leaves{ 0 };
  double seconds{ 0.0 };
};

struct map_result
{
  map_status status{ map_status::no_solution };
  std::optional<mapping_solution> solution;
  map_stats stats;
};

/*! \brief Maps `f` onto the lattice described by `paths`. */
map_result map_function( sop const& f, path_set const& paths, search_budget const& budget = {} );
map_result map_function( sop const& f, lattice_dim dim, search_budget const& budget = {} );

/*! \brief Cell contents during the search; `std::nullopt` is an unassigned cell. */
using cell_state = std::vector<std::optional<literal>>;

/*! \brief All ways to house `t` on `path` given `state`, in search order.
 *
 * Each placement lists the value of every path cell. Fixed cells must hold a
 * literal of `t` or constant one; free cells receive a literal of `t` or
 * constant one; the literals on the path are exactly those of `t`.
 */
std::vector<std::vector<literal>> house_term( term const& t, basic_path const& path, cell_state const& state );

enum class path_status
{
  dangling,
  matched,
  eliminated_xx,
  eliminated_zero,
  absorbed
};

/*! \brief Classification of every path in `state`.
 *
 * A path is matched when its fixed cells spell a target term exactly and no
 * cell is free; eliminated when its fixed cells hold zero or x x'; absorbed
 * when it is fully fixed and its product is a proper superset of a target
 * term; dangling otherwise.
 */
std::vector<path_status> eliminate_and_absorb( cell_state const& state, path_set const& paths, sop const& f );

/*! \brief Sets every unassigned cell to zero and keeps the result iff it realizes `f`. */
std::optional<lattice_assignment> fix_dangling( cell_state const& state, path_set const& paths, sop const& f );

} // namespace latsyn
