/*!
  \file decomposer.hpp
  \brief Realizing a function as the OR of two lattices of the same size

  Pair sizes are tried from the most unbalanced split (n-1, 1) down to the
  balanced one. Within a pair size, the larger part runs over term subsets
  in lexicographic combination order; for balanced splits only subsets
  holding the first term are used, so every partition is visited once.
*/
#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mapper.hpp"

namespace latsyn
{

struct split_pair
{
  uint32_t size_a;
  uint32_t size_b;

  bool operator==( split_pair const& ) const = default;
};

/*! \brief (n-1, 1), (n-2, 2), ..., (ceil(n/2), floor(n/2)); throws for n < 2. */
std::vector<split_pair> split_schedule( uint32_t n );

/*! \brief Mapping verdicts keyed by function, valid for one path set. */
class mapping_cache
{
public:
  explicit mapping_cache( path_set paths ) : paths_( std::move( paths ) ) {}

  path_set const& paths() const noexcept { return paths_; }

  /*! \brief Cached `map_function`; inconclusive results are recomputed. */
  map_result map( sop const& f, search_budget const& budget );

  uint64_t hits() const noexcept { return hits_; }
  uint64_t misses() const noexcept { return misses_; }

private:
  path_set paths_;
  std::map<std::string, map_result> results_;
  std::mutex mutex_;
  uint64_t hits_{ 0 };
  uint64_t misses_{ 0 };
};

struct sub_function
{
  /*! \brief 0-based indices into the decomposed function. */
  std::vector<uint32_t> terms;
  sop function;
  mapping_solution solution;
};

struct decomposition
{
  split_pair pair;
  sub_function a;
  sub_function b;
};

struct decompose_params
{
  search_budget budget;
  /*! \brief Stop after this many schedule pairs (no early stop by default). */
  std::optional<uint32_t> max_pairs;
};

struct decompose_stats
{
  uint64_t pairs{ 0 };
  uint64_t subsets{ 0 };
  uint64_t map_calls{ 0 };
  double seconds{ 0.0 };
};

struct decompose_result
{
  /*! \brief `solution` on success; `no_solution` only after an exhaustive, budget-free search. */
  map_status status{ map_status::no_solution };
  std::optional<decomposition> result;
  decompose_stats stats;
};

/*! \brief Earliest pair of the schedule, earliest subset, for which both parts map. */
decompose_result decompose_two( sop const& f, mapping_cache& cache, decompose_params const& ps = {} );
decompose_result decompose_two( sop const& f, lattice_dim dim, decompose_params const& ps = {} );

/*! \brief Searches a single pair size only. */
decompose_result decompose_at( sop const& f, split_pair pair, mapping_cache& cache, decompose_params const& ps = {} );

} // namespace latsyn
