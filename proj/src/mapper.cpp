#include <latsyn/mapper.hpp>
#include <latsyn/truth_table.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <numeric>

namespace latsyn
{

namespace
{

using clock_type = std::chrono::steady_clock;

/* cell encoding inside the search: 0..63 literal bits, then constants */
constexpr uint8_t cell_one = 64u;
constexpr uint8_t cell_zero = 65u;
constexpr uint8_t cell_free = 255u;

constexpr uint64_t low_half = 0xffffffffull;

bool cancels( uint64_t mask ) noexcept
{
  return ( mask & ( mask >> 32u ) & low_half ) != 0u;
}

/* Local view of one mapping problem: variables renumbered 0..V-1, a literal
   is bit i (positive) or bit 32+i (complemented). */
struct problem
{
  problem( sop const& f, path_set const& ps ) : function( f ), paths( ps ), universe( f.variables() )
  {
    if ( universe.size() > 20u )
    {
      throw limit_error( "mapping a function over " + std::to_string( universe.size() ) + " variables (bound 20)" );
    }
    for ( auto const& t : f.terms() )
    {
      uint64_t mask = 0u;
      std::vector<uint8_t> lits;
      for ( auto const l : t.literals() )
      {
        auto const bit = bit_of( l );
        mask |= uint64_t{ 1 } << bit;
        lits.push_back( bit );
        literal_of[bit] = l;
      }
      term_masks.push_back( mask );
      term_lits.push_back( std::move( lits ) );
    }
    f_table = to_truth_table( f, universe );

    cell_paths.resize( paths.dim.cells() );
    for ( uint32_t p = 0; p < paths.size(); ++p )
    {
      for ( auto const cell : paths.paths[p] )
      {
        cell_paths[cell].push_back( p );
      }
    }
  }

  uint8_t bit_of( literal l ) const
  {
    auto const pos = static_cast<uint8_t>( universe.position( l.variable() ) );
    return l.is_complemented() ? static_cast<uint8_t>( pos + 32u ) : pos;
  }

  cube_mask cube_of( uint64_t mask ) const
  {
    return make_cube( mask & low_half, mask >> 32u );
  }

  sop const& function;
  path_set const& paths;
  variable_universe universe;
  std::vector<uint64_t> term_masks;
  /* literal bits of each term in ascending literal code order */
  std::vector<std::vector<uint8_t>> term_lits;
  literal literal_of[64];
  truth_table f_table;
  std::vector<std::vector<uint32_t>> cell_paths;
};

enum class outcome
{
  found,
  exhausted,
  truncated,
  timed_out
};

class search
{
public:
  search( problem const& pb, search_budget const& budget, clock_type::time_point start, map_stats& stats )
      : pb_( pb ), budget_( budget ), start_( start ), stats_( stats )
  {
  }

  outcome run( std::vector<uint32_t> const& order )
  {
    order_ = order;
    auto const num_cells = pb_.paths.dim.cells();
    cells_.assign( num_cells, cell_free );
    unassigned_.resize( pb_.paths.size() );
    for ( uint32_t p = 0; p < pb_.paths.size(); ++p )
    {
      unassigned_[p] = static_cast<uint32_t>( pb_.paths.paths[p].size() );
    }
    owner_.assign( pb_.paths.size(), -1 );
    deferred_.assign( pb_.term_masks.size(), 0u );
    repeated_.assign( pb_.term_masks.size(), 0u );
    truncated_ = timed_out_ = false;

    if ( dfs( 0u ) )
    {
      return outcome::found;
    }
    if ( timed_out_ )
    {
      return outcome::timed_out;
    }
    return truncated_ ? outcome::truncated : outcome::exhausted;
  }

  mapping_solution solution() const;

private:
  bool out_of_time()
  {
    if ( !budget_.time_limit_seconds || ( stats_.nodes & 1023u ) != 0u )
    {
      return timed_out_;
    }
    std::chrono::duration<double> const elapsed = clock_type::now() - start_;
    timed_out_ = timed_out_ || elapsed.count() > *budget_.time_limit_seconds;
    return timed_out_;
  }

  uint64_t fixed_mask( uint32_t p ) const noexcept
  {
    uint64_t mask = 0u;
    for ( auto const cell : pb_.paths.paths[p] )
    {
      if ( cells_[cell] < cell_one )
      {
        mask |= uint64_t{ 1 } << cells_[cell];
      }
    }
    return mask;
  }

  /* a completely assigned path must cancel or contain a target term */
  bool acceptable_complete_path( uint32_t p ) const
  {
    auto const mask = fixed_mask( p );
    if ( cancels( mask ) )
    {
      return true;
    }
    return std::any_of( pb_.term_masks.begin(), pb_.term_masks.end(), [mask]( auto tm ) { return ( tm & ~mask ) == 0u; } );
  }

  /* the target must stay below the OR of all partial products */
  bool target_still_coverable()
  {
    truth_table upper( pb_.universe.size() );
    bool any = false;
    for ( uint32_t p = 0; p < pb_.paths.size(); ++p )
    {
      auto const mask = fixed_mask( p );
      if ( cancels( mask ) )
      {
        continue;
      }
      if ( mask == 0u )
      {
        return true;
      }
      upper.add_cube( pb_.cube_of( mask ) );
      any = true;
    }
    return any && pb_.f_table.is_subset_of( upper );
  }

  bool complete_assignment_works()
  {
    ++stats_.leaves;
    std::vector<uint64_t> products;
    for ( uint32_t p = 0; p < pb_.paths.size(); ++p )
    {
      if ( unassigned_[p] == 0u )
      {
        auto const mask = fixed_mask( p );
        if ( !cancels( mask ) )
        {
          products.push_back( mask );
        }
      }
    }
    bool simple = true;
    for ( auto const tm : pb_.term_masks )
    {
      simple = simple && std::any_of( products.begin(), products.end(), [tm]( auto m ) { return ( m & ~tm ) == 0u; } );
    }
    if ( simple )
    {
      return true;
    }
    truth_table realized( pb_.universe.size() );
    for ( auto const m : products )
    {
      realized.add_cube( pb_.cube_of( m ) );
    }
    return pb_.f_table.is_subset_of( realized );
  }

  bool dfs( uint32_t k )
  {
    ++stats_.nodes;
    if ( out_of_time() )
    {
      return false;
    }
    if ( k == order_.size() )
    {
      return complete_assignment_works();
    }
    auto const t = order_[k];
    auto const size = pb_.term_lits[t].size();
    for ( uint32_t p = 0; p < pb_.paths.size(); ++p )
    {
      if ( pb_.paths.paths[p].size() < size || owner_[p] >= 0 )
      {
        continue;
      }
      if ( try_path( k, t, p ) )
      {
        return true;
      }
      if ( timed_out_ )
      {
        return false;
      }
    }
    deferred_[t] = 1u;
    if ( dfs( k + 1u ) )
    {
      return true;
    }
    deferred_[t] = 0u;
    return false;
  }

  bool try_path( uint32_t k, uint32_t t, uint32_t p )
  {
    auto const tm = pb_.term_masks[t];
    auto const& cells = pb_.paths.paths[p];
    uint64_t covered = 0u;
    free_.clear();
    for ( auto const cell : cells )
    {
      auto const v = cells_[cell];
      if ( v == cell_free )
      {
        free_.push_back( cell );
      }
      else if ( v == cell_one )
      {
        continue;
      }
      else if ( v == cell_zero || ( ( tm >> v ) & 1u ) == 0u )
      {
        return false;
      }
      else
      {
        covered |= uint64_t{ 1 } << v;
      }
    }
    auto const need = tm & ~covered;
    if ( static_cast<std::size_t>( std::popcount( need ) ) > free_.size() )
    {
      return false;
    }
    placements_here_ = 0u;
    auto const free_cells = free_;
    return place( k, t, p, free_cells, 0u, need );
  }

  bool place( uint32_t k, uint32_t t, uint32_t p, std::vector<uint16_t> const& free_cells, std::size_t j, uint64_t need )
  {
    if ( j == free_cells.size() )
    {
      if ( need != 0u )
      {
        return false;
      }
      ++stats_.placements;
      if ( budget_.max_placements_per_term_path && ++placements_here_ > *budget_.max_placements_per_term_path )
      {
        truncated_ = true;
        return false;
      }
      return commit( k, t, p, free_cells );
    }
    auto const remaining = free_cells.size() - j - 1u;
    auto const cell = free_cells[j];
    for ( auto const bit : pb_.term_lits[t] )
    {
      auto const rest = need & ~( uint64_t{ 1 } << bit );
      if ( static_cast<std::size_t>( std::popcount( rest ) ) > remaining )
      {
        continue;
      }
      cells_[cell] = bit;
      if ( place( k, t, p, free_cells, j + 1u, rest ) )
      {
        return true;
      }
      cells_[cell] = cell_free;
      if ( truncated_ && budget_.max_placements_per_term_path && placements_here_ > *budget_.max_placements_per_term_path )
      {
        return false;
      }
      if ( timed_out_ )
      {
        return false;
      }
    }
    if ( static_cast<std::size_t>( std::popcount( need ) ) <= remaining )
    {
      cells_[cell] = cell_one;
      if ( place( k, t, p, free_cells, j + 1u, need ) )
      {
        return true;
      }
      cells_[cell] = cell_free;
    }
    return false;
  }

  bool commit( uint32_t k, uint32_t t, uint32_t p, std::vector<uint16_t> const& free_cells )
  {
    bool ok = true;
    for ( auto const cell : free_cells )
    {
      for ( auto const q : pb_.cell_paths[cell] )
      {
        if ( --unassigned_[q] == 0u && q != p && ok )
        {
          ok = acceptable_complete_path( q );
        }
      }
    }
    ok = ok && target_still_coverable();

    bool found = false;
    if ( ok )
    {
      owner_[p] = static_cast<int32_t>( t );
      repeated_[t] = static_cast<uint8_t>( path_repeats_literal( p ) );
      auto const saved = placements_here_;
      found = dfs( k + 1u );
      placements_here_ = saved;
      if ( !found )
      {
        owner_[p] = -1;
        repeated_[t] = 0u;
      }
    }
    if ( !found )
    {
      for ( auto const cell : free_cells )
      {
        for ( auto const q : pb_.cell_paths[cell] )
        {
          ++unassigned_[q];
        }
      }
    }
    return found;
  }

  bool path_repeats_literal( uint32_t p ) const
  {
    uint64_t seen = 0u;
    for ( auto const cell : pb_.paths.paths[p] )
    {
      auto const v = cells_[cell];
      if ( v < cell_one )
      {
        if ( ( seen >> v ) & 1u )
        {
          return true;
        }
        seen |= uint64_t{ 1 } << v;
      }
    }
    return false;
  }

  problem const& pb_;
  search_budget const& budget_;
  clock_type::time_point start_;
  map_stats& stats_;

  std::vector<uint32_t> order_;
  std::vector<uint8_t> cells_;
  std::vector<uint32_t> unassigned_;
  std::vector<int32_t> owner_;
  std::vector<uint8_t> deferred_;
  std::vector<uint8_t> repeated_;
  std::vector<uint16_t> free_;
  uint64_t placements_here_{ 0u };
  bool truncated_{ false };
  bool timed_out_{ false };
};

mapping_solution search::solution() const
{
  mapping_solution sol;
  auto const& paths = pb_.paths;
  sol.assignment.dim = paths.dim;
  for ( auto const v : cells_ )
  {
    sol.assignment.codes.push_back( v == cell_one ? literal::one() : v < cell_one ? pb_.literal_of[v] : literal::zero() );
  }
  for ( auto const t : order_ )
  {
    sol.order.push_back( t + 1u );
  }

  std::vector<uint64_t> products;
  std::vector<uint8_t> saved_terms( pb_.term_masks.size(), 0u );
  std::vector<uint8_t> zero_cells( cells_.size(), 0u );
  std::vector<poi_event> by_xx;
  for ( uint32_t p = 0; p < paths.size(); ++p )
  {
    bool has_zero = false;
    for ( auto const cell : paths.paths[p] )
    {
      if ( cells_[cell] == cell_free )
      {
        zero_cells[cell] = 1u;
        has_zero = true;
      }
    }
    if ( has_zero )
    {
      continue;
    }
    auto const mask = fixed_mask( p );
    if ( cancels( mask ) )
    {
      if ( owner_[p] < 0 )
      {
        by_xx.push_back( { poi_kind::path_saved_by_xx, { p + 1u } } );
      }
      continue;
    }
    products.push_back( mask );
    if ( owner_[p] >= 0 )
    {
      continue;
    }
    for ( uint32_t t = 0; t < pb_.term_masks.size(); ++t )
    {
      if ( !deferred_[t] && ( pb_.term_masks[t] & ~mask ) == 0u )
      {
        saved_terms[t] = 1u;
        break;
      }
    }
  }

  for ( uint32_t t = 0; t < pb_.term_masks.size(); ++t )
  {
    if ( saved_terms[t] )
    {
      sol.poi.push_back( { repeated_[t] ? poi_kind::covered_escape_multi_option : poi_kind::saved_escape_path, { t + 1u } } );
    }
  }
  sol.poi.insert( sol.poi.end(), by_xx.begin(), by_xx.end() );
  for ( uint32_t cell = 0; cell < zero_cells.size(); ++cell )
  {
    if ( zero_cells[cell] )
    {
      sol.poi.push_back( { poi_kind::zero_on_lattice_var, { cell } } );
    }
  }
  for ( uint32_t t = 0; t < pb_.term_masks.size(); ++t )
  {
    if ( !deferred_[t] )
    {
      continue;
    }
    auto const tm = pb_.term_masks[t];
    bool by_pair = false;
    for ( auto const m : products )
    {
      auto const extra = m & ~tm;
      if ( ( tm & ~m ) != 0u || std::popcount( extra ) != 1 )
      {
        continue;
      }
      auto const bit = static_cast<uint32_t>( std::countr_zero( extra ) );
      auto const partner = tm | ( uint64_t{ 1 } << ( bit < 32u ? bit + 32u : bit - 32u ) );
      by_pair = by_pair || std::find( products.begin(), products.end(), partner ) != products.end();
    }
    sol.poi.push_back( { by_pair ? poi_kind::placed_by_xx : poi_kind::term_hiding, { t + 1u } } );
  }
  sol.poi.push_back( { poi_kind::examination_order, sol.order } );
  return sol;
}

std::optional<double> env_number( char const* name )
{
  auto const* value = std::getenv( name );
  if ( value == nullptr || *value == '\0' )
  {
    return std::nullopt;
  }
  char* end = nullptr;
  auto const x = std::strtod( value, &end );
  if ( end == value || *end != '\0' || x <= 0.0 )
  {
    throw error( std::string( "environment variable " ) + name + " must be a positive number" );
  }
  return x;
}

} // namespace

search_budget search_budget::from_environment()
{
  search_budget b;
  if ( auto const x = env_number( "LATSYN_MAX_ORDERS" ) )
  {
    b.max_orders = static_cast<uint64_t>( *x );
  }
  if ( auto const x = env_number( "LATSYN_MAX_PLACEMENTS" ) )
  {
    b.max_placements_per_term_path = static_cast<uint64_t>( *x );
  }
  b.time_limit_seconds = env_number( "LATSYN_TIME_LIMIT" );
  return b;
}

std::string poi_event::to_string() const
{
  auto const first = values.empty() ? std::string( "?" ) : std::to_string( values.front() );
  switch ( kind )
  {
  case poi_kind::saved_escape_path:
    return "Term " + first + " saved escape path";
  case poi_kind::covered_escape_multi_option:
    return "Term " + first + " covered escape path by picking multi options";
  case poi_kind::path_saved_by_xx:
    return "Path " + first + " saved by xx'";
  case poi_kind::zero_on_lattice_var:
    return "Zero on lattice var " + first;
  case poi_kind::term_hiding:
    return "Term " + first + " was present but hiding";
  case poi_kind::placed_by_xx:
    return "Term " + first + " was placed by xx'";
  case poi_kind::examination_order:
  {
    std::string s = "Term examination order";
    for ( auto const v : values )
    {
      s += " " + std::to_string( v );
    }
    return s;
  }
  }
  return {};
}

std::string to_string( map_status s )
{
  switch ( s )
  {
  case map_status::solution:
    return "solution";
  case map_status::no_solution:
    return "no solution";
  case map_status::inconclusive:
    return "inconclusive";
  }
  return {};
}

map_result map_function( sop const& f, path_set const& paths, search_budget const& budget )
{
  auto const start = clock_type::now();
  problem const pb( f, paths );
  map_result result;

  std::vector<uint32_t> order( f.size() );
  std::iota( order.begin(), order.end(), 0u );
  result.status = map_status::inconclusive;
  while ( true )
  {
    ++result.stats.orders;
    search s( pb, budget, start, result.stats );
    auto const o = s.run( order );
    if ( o == outcome::found )
    {
      result.status = map_status::solution;
      result.solution = s.solution();
      break;
    }
    if ( o == outcome::exhausted )
    {
      result.status = map_status::no_solution;
      break;
    }
    if ( o == outcome::timed_out || !std::next_permutation( order.begin(), order.end() ) ||
         ( budget.max_orders && result.stats.orders >= *budget.max_orders ) )
    {
      break;
    }
  }
  result.stats.seconds = std::chrono::duration<double>( clock_type::now() - start ).count();
  return result;
}

map_result map_function( sop const& f, lattice_dim dim, search_budget const& budget )
{
  return map_function( f, enumerate_paths( dim ), budget );
}

std::vector<std::vector<literal>> house_term( term const& t, basic_path const& path, cell_state const& state )
{
  std::vector<literal> choices( t.literals().begin(), t.literals().end() );
  choices.push_back( literal::one() );

  std::vector<literal> current( path.size() );
  std::vector<std::vector<literal>> out;
  auto const rec = [&]( auto&& self, std::size_t j ) -> void {
    if ( j == path.size() )
    {
      auto const product = normalize_term( current );
      if ( product && *product == t )
      {
        out.push_back( current );
      }
      return;
    }
    if ( auto const fixed = state.at( path[j] ) )
    {
      if ( !fixed->is_one() && !t.contains( *fixed ) )
      {
        return;
      }
      current[j] = *fixed;
      self( self, j + 1u );
      return;
    }
    for ( auto const c : choices )
    {
      current[j] = c;
      self( self, j + 1u );
    }
  };
  rec( rec, 0u );
  return out;
}

std::vector<path_status> eliminate_and_absorb( cell_state const& state, path_set const& paths, sop const& f )
{
  std::vector<path_status> status;
  for ( auto const& p : paths.paths )
  {
    std::vector<literal> fixed;
    bool complete = true;
    for ( auto const cell : p )
    {
      if ( auto const v = state.at( cell ) )
      {
        fixed.push_back( *v );
      }
      else
      {
        complete = false;
      }
    }
    if ( std::any_of( fixed.begin(), fixed.end(), []( auto l ) { return l.is_zero(); } ) )
    {
      status.push_back( path_status::eliminated_zero );
      continue;
    }
    auto const product = normalize_term( fixed );
    if ( !product )
    {
      status.push_back( path_status::eliminated_xx );
      continue;
    }
    if ( complete && std::find( f.terms().begin(), f.terms().end(), *product ) != f.terms().end() )
    {
      status.push_back( path_status::matched );
      continue;
    }
    auto const absorbed = complete && std::any_of( f.terms().begin(), f.terms().end(), [&]( auto const& t ) { return t.is_subset_of( *product ); } );
    status.push_back( absorbed ? path_status::absorbed : path_status::dangling );
  }
  return status;
}

std::optional<lattice_assignment> fix_dangling( cell_state const& state, path_set const& paths, sop const& f )
{
  lattice_assignment lat{ paths.dim, {} };
  for ( auto const& v : state )
  {
    lat.codes.push_back( v ? *v : literal::zero() );
  }
  if ( !equivalent( solve_lattice( lat, paths ), f ) )
  {
    return std::nullopt;
  }
  return lat;
}

} // namespace latsyn
