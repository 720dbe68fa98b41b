#include <latsyn/path_enum.hpp>

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <thread>

namespace latsyn
{

bool path_less( basic_path const& a, basic_path const& b ) noexcept
{
  if ( a.size() != b.size() )
  {
    return a.size() < b.size();
  }
  return a < b;
}

namespace
{

class path_dfs
{
public:
  explicit path_dfs( lattice_graph const& g ) : g_( g ), on_path_( g.num_nodes(), 0u )
  {
    on_path_[g.source()] = 1u;
  }

  void run_from( uint32_t first )
  {
    if ( !extendable( g_.source(), first ) )
    {
      return;
    }
    step( first );
  }

  std::vector<basic_path> take() { return std::move( out_ ); }

private:
  bool extendable( uint32_t from, uint32_t to ) const noexcept
  {
    if ( on_path_[to] )
    {
      return false;
    }
    for ( auto const z : g_.children( to ) )
    {
      if ( z != from && on_path_[z] )
      {
        return false;
      }
    }
    return true;
  }

  void step( uint32_t cell )
  {
    on_path_[cell] = 1u;
    path_.push_back( static_cast<uint16_t>( cell ) );
    for ( auto const next : g_.children( cell ) )
    {
      if ( !extendable( cell, next ) )
      {
        continue;
      }
      if ( next == g_.destination() )
      {
        out_.push_back( path_ );
      }
      else
      {
        step( next );
      }
    }
    path_.pop_back();
    on_path_[cell] = 0u;
  }

  lattice_graph const& g_;
  std::vector<uint8_t> on_path_;
  basic_path path_;
  std::vector<basic_path> out_;
};

} // namespace

path_set enumerate_paths( lattice_dim dim, enumerate_params const& ps )
{
  check_dim( dim );
  lattice_graph const g( dim );
  auto const firsts = g.children( g.source() );

  std::vector<std::vector<basic_path>> parts( firsts.size() );
  auto const work = [&]( std::size_t begin, std::size_t stride ) {
    for ( auto i = begin; i < firsts.size(); i += stride )
    {
      path_dfs dfs( g );
      dfs.run_from( firsts[i] );
      parts[i] = dfs.take();
    }
  };

  auto const jobs = std::clamp<std::size_t>( ps.jobs, 1u, firsts.size() );
  if ( jobs == 1u )
  {
    work( 0u, 1u );
  }
  else
  {
    std::vector<std::jthread> threads;
    for ( std::size_t t = 0; t < jobs; ++t )
    {
      threads.emplace_back( work, t, jobs );
    }
  }

  path_set result{ dim, {} };
  for ( auto& part : parts )
  {
    std::move( part.begin(), part.end(), std::back_inserter( result.paths ) );
  }
  std::sort( result.paths.begin(), result.paths.end(), path_less );
  return result;
}

path_set brute_force_paths( lattice_dim dim )
{
  check_dim( dim, 4u );
  lattice_graph const g( dim );

  std::vector<basic_path> all;
  std::vector<uint8_t> visited( g.num_nodes(), 0u );
  basic_path path;
  auto const dfs = [&]( auto&& self, uint32_t cell ) -> void {
    visited[cell] = 1u;
    path.push_back( static_cast<uint16_t>( cell ) );
    for ( auto const next : g.children( cell ) )
    {
      if ( next == g.destination() )
      {
        all.push_back( path );
      }
      else if ( next != g.source() && !visited[next] )
      {
        self( self, next );
      }
    }
    path.pop_back();
    visited[cell] = 0u;
  };
  for ( auto const first : g.children( g.source() ) )
  {
    dfs( dfs, first );
  }

  std::vector<std::vector<uint16_t>> sets;
  sets.reserve( all.size() );
  for ( auto const& p : all )
  {
    auto s = p;
    std::sort( s.begin(), s.end() );
    sets.push_back( std::move( s ) );
  }

  std::vector<std::size_t> order( all.size() );
  for ( std::size_t i = 0; i < order.size(); ++i )
  {
    order[i] = i;
  }
  std::sort( order.begin(), order.end(), [&]( auto a, auto b ) { return path_less( all[a], all[b] ); } );

  path_set result{ dim, {} };
  std::set<std::vector<uint16_t>> seen;
  for ( auto const i : order )
  {
    bool redundant = !seen.insert( sets[i] ).second;
    for ( std::size_t j = 0; j < all.size() && !redundant; ++j )
    {
      redundant = sets[j].size() < sets[i].size() &&
                  std::includes( sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end() );
    }
    if ( !redundant )
    {
      result.paths.push_back( all[i] );
    }
  }
  return result;
}

uint32_t longest_path_len( path_set const& paths ) noexcept
{
  std::size_t longest = 0u;
  for ( auto const& p : paths.paths )
  {
    longest = std::max( longest, p.size() );
  }
  return static_cast<uint32_t>( longest );
}

std::string serialize_paths( path_set const& paths )
{
  std::ostringstream os;
  os << paths.size() << ' ' << paths.dim.cells() << '\n';
  for ( auto const& p : paths.paths )
  {
    os << p.size();
    for ( auto const cell : p )
    {
      os << ' ' << cell;
    }
    os << '\n';
  }
  return os.str();
}

path_set parse_paths( std::string_view text )
{
  std::vector<long> values;
  std::istringstream is{ std::string( text ) };
  std::string token;
  while ( is >> token )
  {
    long v = 0;
    auto const [ptr, ec] = std::from_chars( token.data(), token.data() + token.size(), v );
    if ( ec != std::errc{} || ptr != token.data() + token.size() )
    {
      throw format_error( "path file: '" + token + "' is not an integer" );
    }
    values.push_back( v );
  }
  if ( values.size() < 2u || values[0] < 0 || values[1] <= 0 )
  {
    throw format_error( "path file must start with '<num_paths> <num_cells>'" );
  }
  auto const num_paths = static_cast<std::size_t>( values[0] );
  auto const num_cells = static_cast<uint32_t>( values[1] );
  std::size_t pos = 2u;
  std::vector<basic_path> paths;
  std::set<uint16_t> firsts;
  for ( std::size_t i = 0; i < num_paths; ++i )
  {
    if ( pos >= values.size() || values[pos] <= 0 || pos + 1u + static_cast<std::size_t>( values[pos] ) > values.size() )
    {
      throw format_error( "path file: path " + std::to_string( i + 1u ) + " is truncated" );
    }
    auto const len = static_cast<std::size_t>( values[pos++] );
    basic_path p;
    for ( std::size_t k = 0; k < len; ++k )
    {
      auto const cell = values[pos++];
      if ( cell < 0 || cell >= static_cast<long>( num_cells ) )
      {
        throw format_error( "path file: cell " + std::to_string( cell ) + " out of range" );
      }
      p.push_back( static_cast<uint16_t>( cell ) );
    }
    firsts.insert( p.front() );
    paths.push_back( std::move( p ) );
  }
  if ( pos != values.size() )
  {
    throw format_error( "path file: trailing data after " + std::to_string( num_paths ) + " paths" );
  }
  if ( firsts.empty() || num_cells % firsts.size() != 0u )
  {
    throw format_error( "path file: cannot infer the lattice dimension" );
  }
  lattice_dim const dim{ static_cast<uint32_t>( num_cells / firsts.size() ), static_cast<uint32_t>( firsts.size() ) };
  check_dim( dim );
  lattice_graph const g( dim );
  for ( auto const& p : paths )
  {
    if ( g.row( p.front() ) != 0u || g.row( p.back() ) + 1u != dim.rows )
    {
      throw format_error( "path file: a path does not run from the top row to the bottom row" );
    }
    for ( std::size_t k = 1; k < p.size(); ++k )
    {
      auto const ch = g.children( p[k - 1u] );
      if ( std::find( ch.begin(), ch.end(), p[k] ) == ch.end() )
      {
        throw format_error( "path file: cells " + std::to_string( p[k - 1u] ) + " and " + std::to_string( p[k] ) + " are not adjacent" );
      }
    }
  }
  std::sort( paths.begin(), paths.end(), path_less );
  return { dim, std::move( paths ) };
}

} // namespace latsyn
