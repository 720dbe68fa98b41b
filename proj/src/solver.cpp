#include <latsyn/solver.hpp>

#include "text_util.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <thread>

namespace latsyn
{

namespace
{

/* parses "r c" and r grid rows starting at `pos` */
lattice_assignment parse_lattice_block( std::span<detail::int_line const> lines, std::size_t& pos )
{
  if ( pos >= lines.size() || lines[pos].values.size() != 2u )
  {
    throw format_error( "a lattice must start with a line 'rows cols'" );
  }
  auto const rows = lines[pos].values[0];
  auto const cols = lines[pos].values[1];
  if ( rows <= 0 || cols <= 0 )
  {
    throw format_error( "line " + std::to_string( lines[pos].number ) + ": lattice dimension must be positive" );
  }
  lattice_assignment lat{ { static_cast<uint32_t>( rows ), static_cast<uint32_t>( cols ) }, {} };
  check_dim( lat.dim );
  ++pos;
  for ( long i = 0; i < rows; ++i, ++pos )
  {
    if ( pos >= lines.size() )
    {
      throw format_error( "lattice has " + std::to_string( i ) + " rows, expected " + std::to_string( rows ) );
    }
    auto const& [line_no, values] = lines[pos];
    if ( values.size() != static_cast<std::size_t>( cols ) )
    {
      throw format_error( "line " + std::to_string( line_no ) + ": expected " + std::to_string( cols ) + " codes, got " + std::to_string( values.size() ) );
    }
    for ( auto const v : values )
    {
      lat.codes.push_back( literal::from_code( v ) );
    }
  }
  return lat;
}

void write_grid( std::ostream& os, lattice_assignment const& lat )
{
  for ( uint32_t i = 0; i < lat.dim.rows; ++i )
  {
    for ( uint32_t j = 0; j < lat.dim.cols; ++j )
    {
      os << ( j == 0u ? "" : " " ) << lat.at( i, j ).code();
    }
    os << '\n';
  }
}

/* uniform index in [0, n) from raw 64-bit output, identical on every platform */
std::size_t draw_index( std::mt19937_64& rng, std::size_t n )
{
  auto const bound = static_cast<uint64_t>( n );
  auto const limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % bound;
  uint64_t x;
  do
  {
    x = rng();
  } while ( x >= limit );
  return static_cast<std::size_t>( x % bound );
}

} // namespace

lattice_assignment parse_lattice( std::string_view text )
{
  auto const lines = detail::integer_lines( text );
  std::size_t pos = 0u;
  auto lat = parse_lattice_block( lines, pos );
  if ( pos != lines.size() )
  {
    throw format_error( "line " + std::to_string( lines[pos].number ) + ": lattice has more rows than declared" );
  }
  return lat;
}

std::string serialize_lattice( lattice_assignment const& lat )
{
  std::ostringstream os;
  os << lat.dim.rows << ' ' << lat.dim.cols << '\n';
  write_grid( os, lat );
  return os.str();
}

std::string pretty_lattice( lattice_assignment const& lat )
{
  std::ostringstream os;
  for ( uint32_t i = 0; i < lat.dim.rows; ++i )
  {
    for ( uint32_t j = 0; j < lat.dim.cols; ++j )
    {
      auto const name = to_pretty( lat.at( i, j ) );
      os << name << std::string( j + 1u == lat.dim.cols ? 0u : 4u - std::min<std::size_t>( name.size(), 3u ), ' ' );
    }
    os << '\n';
  }
  return os.str();
}

sop solve_lattice( lattice_assignment const& lat, solve_mode mode )
{
  return solve_lattice( lat, enumerate_paths( lat.dim ), mode );
}

sop solve_lattice( lattice_assignment const& lat, path_set const& paths, solve_mode mode )
{
  if ( !( paths.dim == lat.dim ) )
  {
    throw error( "path set of " + to_string( paths.dim ) + " used for a " + to_string( lat.dim ) + " lattice" );
  }
  if ( lat.codes.size() != lat.dim.cells() )
  {
    throw format_error( "lattice holds " + std::to_string( lat.codes.size() ) + " codes, expected " + std::to_string( lat.dim.cells() ) );
  }

  std::vector<term> products;
  std::vector<literal> lits;
  for ( auto const& p : paths.paths )
  {
    lits.clear();
    for ( auto const cell : p )
    {
      lits.push_back( lat.codes[cell] );
    }
    if ( auto t = normalize_term( lits ) )
    {
      products.push_back( std::move( *t ) );
    }
  }
  std::sort( products.begin(), products.end() );
  products.erase( std::unique( products.begin(), products.end() ), products.end() );

  /* sorted by size, so only earlier terms can be proper subsets */
  std::vector<term> kept;
  for ( auto& t : products )
  {
    auto const absorbed = std::any_of( kept.begin(), kept.end(), [&]( auto const& k ) { return k.is_subset_of( t ); } );
    if ( !absorbed )
    {
      kept.push_back( std::move( t ) );
    }
  }
  sop f( std::move( kept ) );
  return mode == solve_mode::exact ? f : merge_complementary_pairs( f );
}

sop merge_complementary_pairs( sop const& f )
{
  auto const& terms = f.terms();
  std::vector<bool> source( terms.size(), false );
  std::vector<term> merged;
  for ( std::size_t i = 0; i < terms.size(); ++i )
  {
    for ( std::size_t j = i + 1u; j < terms.size(); ++j )
    {
      auto const& a = terms[i];
      auto const& b = terms[j];
      if ( a.size() != b.size() || a.empty() )
      {
        continue;
      }
      std::vector<literal> only_a, only_b, common;
      std::set_difference( a.literals().begin(), a.literals().end(), b.literals().begin(), b.literals().end(), std::back_inserter( only_a ) );
      if ( only_a.size() != 1u )
      {
        continue;
      }
      std::set_difference( b.literals().begin(), b.literals().end(), a.literals().begin(), a.literals().end(), std::back_inserter( only_b ) );
      if ( !only_a.front().is_complement_of( only_b.front() ) )
      {
        continue;
      }
      std::set_intersection( a.literals().begin(), a.literals().end(), b.literals().begin(), b.literals().end(), std::back_inserter( common ) );
      merged.push_back( *normalize_term( common ) );
      source[i] = source[j] = true;
    }
  }

  std::vector<term> result;
  for ( std::size_t i = 0; i < terms.size(); ++i )
  {
    if ( !source[i] )
    {
      result.push_back( terms[i] );
    }
  }
  result.insert( result.end(), merged.begin(), merged.end() );
  std::sort( result.begin(), result.end() );
  result.erase( std::unique( result.begin(), result.end() ), result.end() );
  return sop( std::move( result ) );
}

bool verify_witness( lattice_assignment const& lat, sop const& f, uint32_t max_variables )
{
  return equivalent( solve_lattice( lat ), f, max_variables );
}

std::vector<literal> library_literal_range( uint32_t num_vars )
{
  if ( num_vars < 1u || num_vars > literal::max_letter + 1u )
  {
    throw error( "number of variables must be between 1 and 26" );
  }
  std::vector<literal> range;
  for ( uint16_t v = 0; v < num_vars; ++v )
  {
    range.push_back( literal::positive( v ) );
  }
  for ( uint16_t v = 0; v < num_vars; ++v )
  {
    range.push_back( literal::negative( v ) );
  }
  range.push_back( literal::one() );
  range.push_back( literal::zero() );
  return range;
}

std::vector<library_entry> generate_library( library_params const& ps )
{
  check_dim( ps.dim );
  if ( ps.trials < 1u )
  {
    throw error( "at least one trial is required" );
  }
  auto const range = library_literal_range( ps.num_vars );
  auto const paths = enumerate_paths( ps.dim );

  std::vector<library_entry> entries( ps.trials );
  auto const work = [&]( std::size_t begin, std::size_t stride ) {
    for ( auto i = begin; i < entries.size(); i += stride )
    {
      auto& e = entries[i];
      e.trial = static_cast<uint32_t>( i );
      e.seed = ps.seed + i;
      std::mt19937_64 rng( e.seed );
      e.lattice.dim = ps.dim;
      for ( uint32_t k = 0; k < ps.dim.cells(); ++k )
      {
        e.lattice.codes.push_back( range[draw_index( rng, range.size() )] );
      }
      e.function = solve_lattice( e.lattice, paths );
    }
  };
  auto const jobs = std::clamp<std::size_t>( ps.jobs, 1u, entries.size() );
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
  return entries;
}

std::string serialize_library( std::vector<library_entry> const& entries, uint64_t seed )
{
  std::ostringstream os;
  os << entries.size() << ' ' << seed << '\n';
  for ( auto const& e : entries )
  {
    os << serialize_lattice( e.lattice ) << '\n'
       << serialize_function( e.function ) << '\n';
  }
  return os.str();
}

std::string serialize_library_paper_style( std::vector<library_entry> const& entries )
{
  std::ostringstream os;
  for ( auto const& e : entries )
  {
    os << e.lattice.dim.rows << ' ' << e.lattice.dim.cols << "           // trial " << e.trial << ", seed " << e.seed << "\n-----\n";
    write_grid( os, e.lattice );
    os << "-----\n\n"
       << e.function.size() << "           // product terms\n-----\n";
    auto const body = serialize_function( e.function );
    os << body.substr( body.find( '\n' ) + 1u ) << "-----\n\n";
  }
  return os.str();
}

parsed_library parse_library( std::string_view text )
{
  auto const lines = detail::integer_lines( text );
  if ( lines.empty() || lines.front().values.size() != 2u || lines.front().values[0] < 0 )
  {
    throw format_error( "library must start with '<entries> <seed>'" );
  }
  parsed_library lib;
  lib.seed = static_cast<uint64_t>( lines.front().values[1] );
  auto const n = static_cast<std::size_t>( lines.front().values[0] );
  std::size_t pos = 1u;
  for ( std::size_t i = 0; i < n; ++i )
  {
    library_entry e;
    e.trial = static_cast<uint32_t>( i );
    e.seed = lib.seed + i;
    e.lattice = parse_lattice_block( lines, pos );
    e.function = detail::parse_function_block( lines, pos ).function;
    lib.entries.push_back( std::move( e ) );
  }
  if ( pos != lines.size() )
  {
    throw format_error( "library declares " + std::to_string( n ) + " entries but has trailing data" );
  }
  return lib;
}

} // namespace latsyn
