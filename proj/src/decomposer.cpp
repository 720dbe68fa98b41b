#include <latsyn/decomposer.hpp>

#include <chrono>

namespace latsyn
{

namespace
{

sop select_terms( sop const& f, std::vector<uint32_t> const& indices )
{
  std::vector<term> terms;
  for ( auto const i : indices )
  {
    terms.push_back( f[i] );
  }
  return sop( std::move( terms ) );
}

/* advances `c` to the next k-combination of 0..n-1 in lexicographic order */
bool next_combination( std::vector<uint32_t>& c, uint32_t n )
{
  auto const k = static_cast<uint32_t>( c.size() );
  for ( auto i = k; i-- > 0u; )
  {
    if ( c[i] < n - k + i )
    {
      ++c[i];
      for ( auto j = i + 1u; j < k; ++j )
      {
        c[j] = c[j - 1u] + 1u;
      }
      return true;
    }
  }
  return false;
}

enum class pair_verdict
{
  found,
  failed,
  unknown
};

pair_verdict search_pair( sop const& f, split_pair pair, mapping_cache& cache, decompose_params const& ps, decompose_result& out )
{
  auto const n = static_cast<uint32_t>( f.size() );
  std::vector<uint32_t> subset( pair.size_a );
  for ( uint32_t i = 0; i < pair.size_a; ++i )
  {
    subset[i] = i;
  }
  bool unknown = false;
  ++out.stats.pairs;
  do
  {
    if ( pair.size_a == pair.size_b && subset.front() != 0u )
    {
      break;
    }
    ++out.stats.subsets;
    std::vector<uint32_t> rest;
    for ( uint32_t i = 0, j = 0; i < n; ++i )
    {
      if ( j < subset.size() && subset[j] == i )
      {
        ++j;
      }
      else
      {
        rest.push_back( i );
      }
    }
    auto const fa = select_terms( f, subset );
    ++out.stats.map_calls;
    auto const ra = cache.map( fa, ps.budget );
    if ( ra.status == map_status::no_solution )
    {
      continue;
    }
    auto const fb = select_terms( f, rest );
    ++out.stats.map_calls;
    auto const rb = cache.map( fb, ps.budget );
    if ( rb.status == map_status::no_solution )
    {
      continue;
    }
    if ( ra.status == map_status::solution && rb.status == map_status::solution )
    {
      out.status = map_status::solution;
      out.result = decomposition{ pair, { subset, fa, *ra.solution }, { rest, fb, *rb.solution } };
      return pair_verdict::found;
    }
    unknown = true;
  } while ( next_combination( subset, n ) );
  return unknown ? pair_verdict::unknown : pair_verdict::failed;
}

} // namespace

std::vector<split_pair> split_schedule( uint32_t n )
{
  if ( n < 2u )
  {
    throw error( "a split needs at least two terms" );
  }
  std::vector<split_pair> pairs;
  for ( uint32_t b = 1; b <= n / 2u; ++b )
  {
    pairs.push_back( { n - b, b } );
  }
  return pairs;
}

map_result mapping_cache::map( sop const& f, search_budget const& budget )
{
  auto const key = serialize_function( f );
  {
    std::lock_guard lock( mutex_ );
    if ( auto const it = results_.find( key ); it != results_.end() && it->second.status != map_status::inconclusive )
    {
      ++hits_;
      return it->second;
    }
  }
  auto result = map_function( f, paths_, budget );
  std::lock_guard lock( mutex_ );
  ++misses_;
  results_[key] = result;
  return result;
}

decompose_result decompose_at( sop const& f, split_pair pair, mapping_cache& cache, decompose_params const& ps )
{
  auto const start = std::chrono::steady_clock::now();
  if ( pair.size_a + pair.size_b != f.size() || pair.size_b == 0u || pair.size_a < pair.size_b )
  {
    throw error( "split pair does not match the function's term count" );
  }
  decompose_result out;
  auto const verdict = search_pair( f, pair, cache, ps, out );
  out.status = verdict == pair_verdict::found ? map_status::solution : verdict == pair_verdict::failed ? map_status::no_solution : map_status::inconclusive;
  out.stats.seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
  return out;
}

decompose_result decompose_two( sop const& f, mapping_cache& cache, decompose_params const& ps )
{
  auto const start = std::chrono::steady_clock::now();
  decompose_result out;
  bool unknown = false;
  auto const schedule = split_schedule( static_cast<uint32_t>( f.size() ) );
  for ( std::size_t i = 0; i < schedule.size(); ++i )
  {
    if ( ps.max_pairs && i >= *ps.max_pairs )
    {
      unknown = true;
      break;
    }
    auto const verdict = search_pair( f, schedule[i], cache, ps, out );
    if ( verdict == pair_verdict::found )
    {
      break;
    }
    unknown = unknown || verdict == pair_verdict::unknown;
  }
  if ( !out.result )
  {
    out.status = unknown ? map_status::inconclusive : map_status::no_solution;
  }
  out.stats.seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
  return out;
}

decompose_result decompose_two( sop const& f, lattice_dim dim, decompose_params const& ps )
{
  mapping_cache cache( enumerate_paths( dim ) );
  return decompose_two( f, cache, ps );
}

} // namespace latsyn
