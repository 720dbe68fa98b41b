#include <doctest.h>

#include <latsyn/solver.hpp>

#include "oracles.hpp"
#include "test_util.hpp"

#include <random>

using namespace latsyn;
using latsyn::test::make_sop;

namespace
{

lattice_assignment random_lattice( std::mt19937_64& rng, lattice_dim dim, uint32_t num_vars )
{
  auto const range = library_literal_range( num_vars );
  lattice_assignment lat{ dim, {} };
  for ( uint32_t k = 0; k < dim.cells(); ++k )
  {
    lat.codes.push_back( range[rng() % range.size()] );
  }
  return lat;
}

/* raw listing lines, normalized one by one and never absorbed */
std::vector<term> listing_terms( std::string const& text )
{
  std::vector<term> terms;
  std::istringstream is( text );
  std::size_t n = 0;
  is >> n;
  for ( std::size_t i = 0; i < n; ++i )
  {
    std::size_t k = 0;
    is >> k;
    std::vector<literal> lits;
    for ( std::size_t j = 0; j < k; ++j )
    {
      long c = 0;
      is >> c;
      lits.push_back( literal::from_code( c ) );
    }
    terms.push_back( *normalize_term( lits ) );
  }
  std::sort( terms.begin(), terms.end() );
  return terms;
}

} // namespace

TEST_CASE( "lattice file format" )
{
  auto const lat = parse_lattice( "3 3\n1000 998 1000\n101 0 1\n1 999 1\n" );
  CHECK( lat.dim == lattice_dim{ 3, 3 } );
  CHECK( lat.at( 1, 0 ).is_one() );
  CHECK( lat.at( 2, 1 ).code() == 999 );
  CHECK( parse_lattice( serialize_lattice( lat ) ) == lat );
  CHECK_THROWS_AS( parse_lattice( "2 2\n0 1\n" ), format_error );
  CHECK_THROWS_AS( parse_lattice( "2 2\n0 1\n2 3 4\n" ), format_error );
  CHECK_THROWS_AS( parse_lattice( "1 2\n0 600\n" ), literal_error );
  CHECK_THROWS_AS( parse_lattice( "1 1\n0\n5\n" ), format_error );
  CHECK_THROWS_AS( parse_lattice( "9 1\n0\n0\n0\n0\n0\n0\n0\n0\n0\n" ), limit_error );
}

TEST_CASE( "two-cell product with a repeated literal" )
{
  /* column-major listing 0 1 2 101 1 2 1 998 101, stored row-major */
  auto const lat = test::load_lattice( "fig13c.lat" );
  CHECK( solve_lattice( lat ) == make_sop( { { 1, 2 }, { 1, 998 } } ) );
}

TEST_CASE( "constant lattices" )
{
  for ( lattice_dim d : { lattice_dim{ 1, 1 }, lattice_dim{ 3, 3 }, lattice_dim{ 4, 2 } } )
  {
    lattice_assignment zero{ d, std::vector<literal>( d.cells(), literal::zero() ) };
    CHECK( solve_lattice( zero ).is_constant_zero() );
    lattice_assignment one{ d, std::vector<literal>( d.cells(), literal::one() ) };
    CHECK( solve_lattice( one ) == sop::constant_one() );
  }
  /* one all-ones column absorbs everything else */
  auto lat = parse_lattice( "3 3\n101 0 1\n101 2 3\n101 998 4\n" );
  CHECK( solve_lattice( lat ) == sop::constant_one() );
}

TEST_CASE( "6x6 grid with 51 listed terms" )
{
  auto const lat = test::load_lattice( "fig15.lat" );
  auto const listing = listing_terms( test::read_data( "fig16b.fn" ) );
  REQUIRE( listing.size() == 51u );
  auto const exact = solve_lattice( lat );
  CHECK( exact.size() == 59u );
  CHECK( equivalent( exact, sop( listing ) ) );
  auto const merged = solve_lattice( lat, solve_mode::merge_complementary_pairs );
  CHECK( merged.terms() == listing );
}

TEST_CASE( "sample library entry" )
{
  auto const lat = test::load_lattice( "sample_library_entry.lat" );
  auto const expected = make_sop( { { 998, 0 }, { 1000, 1 } } );
  CHECK( equivalent( solve_lattice( lat ), expected ) );
  CHECK( same_terms( solve_lattice( lat, solve_mode::merge_complementary_pairs ), expected ) );
}

TEST_CASE( "complementary pair merging" )
{
  CHECK( merge_complementary_pairs( make_sop( { { 1, 2 }, { 1, 998 } } ) ) == make_sop( { { 1 } } ) );
  CHECK( merge_complementary_pairs( make_sop( { { 1, 2 }, { 3, 998 } } ) ) == canonical( make_sop( { { 1, 2 }, { 3, 998 } } ) ) );
  CHECK( merge_complementary_pairs( make_sop( { { 0 }, { 1000 } } ) ) == sop::constant_one() );
  std::mt19937_64 rng( 41 );
  for ( int i = 0; i < 200; ++i )
  {
    auto const f = absorb( test::random_sop( rng, 5, 8 ) );
    CHECK( equivalent( merge_complementary_pairs( f ), f ) );
  }
}

TEST_CASE( "distinct-variable lattices reproduce the path sets" )
{
  for ( lattice_dim d : { lattice_dim{ 2, 2 }, lattice_dim{ 3, 3 }, lattice_dim{ 4, 4 }, lattice_dim{ 3, 5 } } )
  {
    lattice_assignment lat{ d, {} };
    for ( uint16_t k = 0; k < d.cells(); ++k )
    {
      lat.codes.push_back( literal::positive( k ) );
    }
    auto const paths = enumerate_paths( d );
    auto const f = solve_lattice( lat, paths );
    CHECK( f.size() == paths.size() );
    for ( auto const& p : paths.paths )
    {
      std::vector<literal> lits;
      for ( auto const cell : p )
      {
        lits.push_back( literal::positive( cell ) );
      }
      auto const t = *normalize_term( lits );
      CHECK( std::find( f.terms().begin(), f.terms().end(), t ) != f.terms().end() );
    }
    CHECK( verify_witness( lat, f ) );
  }
}

TEST_CASE( "solve agrees with grid connectivity" )
{
  std::mt19937_64 rng( 43 );
  for ( int i = 0; i < 300; ++i )
  {
    lattice_dim const d{ 1u + static_cast<uint32_t>( rng() % 4 ), 1u + static_cast<uint32_t>( rng() % 4 ) };
    auto const lat = random_lattice( rng, d, 1u + static_cast<uint32_t>( rng() % 5 ) );
    CHECK( test::realizes( lat, solve_lattice( lat ) ) );
  }
}

TEST_CASE( "solver output is normalized" )
{
  std::mt19937_64 rng( 47 );
  for ( int i = 0; i < 300; ++i )
  {
    lattice_dim const d{ 2u + static_cast<uint32_t>( rng() % 3 ), 2u + static_cast<uint32_t>( rng() % 3 ) };
    auto const f = solve_lattice( random_lattice( rng, d, 4 ) );
    CHECK( absorb( f ) == f );
    CHECK( canonical( f ) == f );
    for ( auto const& t : f.terms() )
    {
      for ( auto const l : t.literals() )
      {
        CHECK_FALSE( l.is_constant() );
        CHECK_FALSE( ( l.is_complemented() && t.contains( literal::positive( l.variable() ) ) ) );
      }
    }
  }
}

TEST_CASE( "library generation" )
{
  auto const range = library_literal_range( 5 );
  std::vector<uint16_t> codes;
  for ( auto const l : range )
  {
    codes.push_back( l.code() );
  }
  CHECK( codes == std::vector<uint16_t>{ 0, 1, 2, 3, 4, 1000, 999, 998, 997, 996, 101, 100 } );
  CHECK_THROWS_AS( library_literal_range( 0 ), error );
  CHECK_THROWS_AS( library_literal_range( 27 ), error );

  library_params ps;
  ps.trials = 20;
  ps.seed = 99;
  auto const lib = generate_library( ps );
  CHECK( lib.size() == 20u );
  for ( auto const& e : lib )
  {
    CHECK( verify_witness( e.lattice, e.function ) );
    for ( auto const l : e.lattice.codes )
    {
      CHECK( std::find( codes.begin(), codes.end(), l.code() ) != codes.end() );
    }
  }
  auto const text = serialize_library( lib, ps.seed );
  CHECK( serialize_library( generate_library( ps ), ps.seed ) == text );
  ps.jobs = 4;
  CHECK( serialize_library( generate_library( ps ), ps.seed ) == text );

  auto const back = parse_library( text );
  CHECK( back.seed == 99u );
  REQUIRE( back.entries.size() == lib.size() );
  for ( std::size_t i = 0; i < lib.size(); ++i )
  {
    CHECK( back.entries[i].lattice == lib[i].lattice );
    CHECK( back.entries[i].function == lib[i].function );
    CHECK( back.entries[i].seed == lib[i].seed );
  }
  ps.seed = 100;
  CHECK( serialize_library( generate_library( ps ), ps.seed ) != text );
  CHECK( serialize_library_paper_style( lib ).find( "-----" ) != std::string::npos );
}
