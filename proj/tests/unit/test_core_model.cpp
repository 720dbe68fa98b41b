#include <doctest.h>

#include <latsyn/sop.hpp>

#include "test_util.hpp"

using namespace latsyn;
using latsyn::test::make_sop;

TEST_CASE( "literal codes" )
{
  CHECK( literal::from_code( 0 ).complement().code() == 1000 );
  CHECK( literal::from_code( 3 ).complement().code() == 997 );
  CHECK( literal::from_code( 7 ).complement().complement().code() == 7 );
  CHECK_THROWS_WITH_AS( literal::zero().complement(), "constants have no complement", literal_error );
  CHECK_THROWS_AS( literal::one().complement(), literal_error );
  CHECK_THROWS_AS( literal::from_code( 30 ).complement(), literal_error );

  for ( long c : { 102L, 500L, 974L, 1001L, -1L } )
  {
    CHECK_THROWS_AS( literal::from_code( c ), literal_error );
  }
  for ( long c = 0; c <= 25; ++c )
  {
    auto const l = literal::from_code( c );
    CHECK( l.complement().complement() == l );
    CHECK( l.is_complement_of( l.complement() ) );
  }
  CHECK( literal::from_code( 26 ).is_aux() );
  CHECK( literal::from_code( 99 ).is_aux() );
  CHECK( to_pretty( literal::from_code( 997 ) ) == "d'" );
  CHECK( to_pretty( literal::from_code( 27 ) ) == "x2" );
  CHECK( to_pretty( literal::zero() ) == "0" );
}

TEST_CASE( "normalize_term" )
{
  auto const t = normalize_term( { 0, 1, 1, 2 } );
  REQUIRE( t );
  CHECK( *t == *normalize_term( { 2, 1, 0 } ) );
  CHECK( t->size() == 3u );

  auto const u = normalize_term( { 101, 1, 2 } );
  REQUIRE( u );
  CHECK( *u == *normalize_term( { 1, 2 } ) );

  CHECK_FALSE( normalize_term( { 4, 996, 3 } ) );
  CHECK_FALSE( normalize_term( { 1, 100 } ) );
  auto const one = normalize_term( { 101, 101 } );
  REQUIRE( one );
  CHECK( one->empty() );
  CHECK_THROWS_AS( normalize_term( { 1, 500 } ), literal_error );

  std::mt19937_64 rng( 7 );
  for ( int i = 0; i < 200; ++i )
  {
    std::vector<literal> lits;
    for ( int k = 0; k < 6; ++k )
    {
      auto const v = static_cast<uint16_t>( rng() % 5 );
      lits.push_back( rng() % 3 == 0 ? literal::one() : ( rng() % 2 ? literal::positive( v ) : literal::negative( v ) ) );
    }
    auto const a = normalize_term( lits );
    std::shuffle( lits.begin(), lits.end(), rng );
    auto const b = normalize_term( lits );
    CHECK( a.has_value() == b.has_value() );
    if ( a )
    {
      CHECK( *a == *b );
      CHECK( *normalize_term( a->literals() ) == *a );
    }
  }
}

TEST_CASE( "absorb" )
{
  auto const f = make_sop( { { 0, 1, 2 }, { 0, 3, 4, 1, 2 } } );
  CHECK( absorb( f ) == make_sop( { { 0, 1, 2 } } ) );
  CHECK( absorb( sop{} ).is_constant_zero() );
  CHECK( absorb( make_sop( { { 1 }, { 1 }, { 2 } } ) ) == make_sop( { { 1 }, { 2 } } ) );
  CHECK( absorb( make_sop( { { 1, 2 }, { 101 } } ) ) == sop::constant_one() );

  std::mt19937_64 rng( 11 );
  for ( int i = 0; i < 200; ++i )
  {
    auto const g = test::random_sop( rng, 1 + i % 6, 8 );
    auto const h = absorb( g );
    CHECK( equivalent( g, h ) );
    CHECK( absorb( h ) == h );
    for ( std::size_t a = 0; a < h.size(); ++a )
    {
      for ( std::size_t b = 0; b < h.size(); ++b )
      {
        CHECK( ( a == b || !h[a].is_subset_of( h[b] ) ) );
      }
    }
  }
}

TEST_CASE( "function file format" )
{
  auto const p = parse_function( "3\n2 997 999\n4 997 5 4 998\n2 1000 5" );
  CHECK( p.warnings.empty() );
  REQUIRE( p.function.size() == 3u );
  CHECK( to_pretty( p.function ) == "b'd' + c'd'ef + a'f" );

  auto const one = parse_function( "1\n1 101\n" );
  CHECK( one.function.is_constant_one() );
  CHECK( serialize_function( one.function ) == "1\n1 101\n" );
  CHECK( parse_function( "0\n" ).function.is_constant_zero() );

  auto const w = parse_function( "3\n2 0 1\n3 0 1 2\n2 4 996\n" );
  CHECK( w.function == make_sop( { { 0, 1 } } ) );
  CHECK( w.warnings.size() == 2u );

  CHECK_THROWS_AS( parse_function( "2\n2 0 1\n" ), format_error );
  CHECK_THROWS_AS( parse_function( "1\n3 0 1\n" ), format_error );
  CHECK_THROWS_AS( parse_function( "1\n1 500\n" ), literal_error );
  CHECK_THROWS_AS( parse_function( "1\n1 x\n" ), format_error );
  CHECK_THROWS_AS( parse_function( "" ), format_error );

  std::mt19937_64 rng( 3 );
  for ( int i = 0; i < 200; ++i )
  {
    auto const f = absorb( test::random_sop( rng, 6, 6 ) );
    CHECK( parse_function( serialize_function( f ) ).function == f );
  }
}

TEST_CASE( "evaluate" )
{
  truth_assignment a;
  a.set( 0, true );
  a.set( 1, true );
  CHECK( evaluate( make_sop( { { 0, 1 } } ), a ) );
  CHECK_FALSE( evaluate( sop{}, a ) );
  CHECK( evaluate( sop::constant_one(), a ) );

  truth_assignment b;
  b.set( 1, true );
  b.set( 2, false );
  CHECK( evaluate( make_sop( { { 1, 2 }, { 1, 998 } } ), b ) );
  CHECK_THROWS_AS( evaluate( make_sop( { { 3 } } ), b ), error );
}

TEST_CASE( "equivalent" )
{
  CHECK( equivalent( make_sop( { { 1, 2 }, { 1, 998 } } ), make_sop( { { 1 } } ) ) );
  /* F'DE + F'D'E = F'E */
  CHECK( equivalent( make_sop( { { 995, 3, 4 }, { 995, 997, 4 } } ), make_sop( { { 995, 4 } } ) ) );
  CHECK_FALSE( equivalent( make_sop( { { 0 } } ), make_sop( { { 1000 } } ) ) );
  CHECK( equivalent( sop{}, sop{} ) );
  CHECK( equivalent( make_sop( { { 0 }, { 1000 } } ), sop::constant_one() ) );

  std::vector<term> wide;
  for ( long v = 0; v < 21; ++v )
  {
    wide.push_back( *normalize_term( { v } ) );
  }
  CHECK_THROWS_AS( equivalent( sop( wide ), sop( wide ) ), limit_error );
  CHECK( equivalent( sop( wide ), sop( wide ), 21u ) );

  std::mt19937_64 rng( 5 );
  for ( int i = 0; i < 300; ++i )
  {
    auto const nv = 1u + static_cast<uint32_t>( i % 8 );
    auto const f = test::random_sop( rng, nv, 5 );
    auto const g = i % 3 == 0 ? absorb( f ) : test::random_sop( rng, nv, 5 );
    CHECK( equivalent( f, g ) == test::naive_equivalent( f, g ) );
  }
}

TEST_CASE( "implies" )
{
  auto const f = make_sop( { { 995, 3, 4 }, { 995, 997, 4 } } );
  CHECK( implies( *normalize_term( { 995, 4 } ), f ) );
  CHECK( implies( *normalize_term( { 995, 4, 1 } ), f ) );
  CHECK_FALSE( implies( *normalize_term( { 4 } ), f ) );
  CHECK( implies( *normalize_term( { 1 } ), sop::constant_one() ) );
  CHECK_FALSE( implies( *normalize_term( { 1 } ), sop{} ) );
}
