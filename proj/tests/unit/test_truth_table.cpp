#include <doctest.h>

#include <latsyn/simd/tt_kernels.hpp>
#include <latsyn/truth_table.hpp>

#include "test_util.hpp"

#include <random>

using namespace latsyn;

namespace
{

std::vector<uint64_t> random_words( std::mt19937_64& rng, std::size_t n )
{
  std::vector<uint64_t> w( n );
  for ( auto& x : w )
  {
    x = rng();
  }
  return w;
}

} // namespace

TEST_CASE( "truth table of single literals" )
{
  variable_universe const u( { 3, 7 } );
  auto const tt = to_truth_table( test::make_sop( { { 3 } } ), u );
  CHECK( tt.num_vars() == 2u );
  CHECK( tt.count_ones() == 2u );
  CHECK( tt.bit( 1 ) );
  CHECK_FALSE( tt.bit( 2 ) );
  auto const nt = to_truth_table( test::make_sop( { { 993 } } ), u );
  CHECK( nt.bit( 1 ) );
  CHECK_FALSE( nt.bit( 2 ) );
  CHECK( nt.count_ones() == 2u );
}

TEST_CASE( "truth table against explicit evaluation" )
{
  std::mt19937_64 rng( 17 );
  for ( uint32_t nv = 1; nv <= 10; ++nv )
  {
    for ( int i = 0; i < 10; ++i )
    {
      auto const f = test::random_sop( rng, nv, 6 );
      auto const u = variable_universe::of( { &f } );
      auto const tt = to_truth_table( f, u );
      for ( uint64_t m = 0; m < ( uint64_t{ 1 } << u.size() ); ++m )
      {
        truth_assignment a;
        for ( uint32_t k = 0; k < u.size(); ++k )
        {
          a.set( u.variables()[k], ( m >> k ) & 1u );
        }
        CHECK( tt.bit( m ) == evaluate( f, a ) );
      }
      for ( auto const& t : f.terms() )
      {
        CHECK( tt.contains_cube( make_cube( t, u ) ) );
      }
    }
  }
}

TEST_CASE( "scalar and avx2 kernels agree" )
{
  auto const& ref = simd::kernels_for( simd::backend::scalar );
  if ( !simd::backend_supported( simd::backend::avx2 ) )
  {
    MESSAGE( "AVX2 not supported on this CPU; only the scalar backend is exercised" );
    return;
  }
  auto const& vec = simd::kernels_for( simd::backend::avx2 );
  CHECK( &ref != &vec );

  std::mt19937_64 rng( 23 );
  for ( std::size_t n : { 1u, 2u, 3u, 4u, 5u, 7u, 8u, 16u, 33u, 64u, 1024u } )
  {
    for ( int rep = 0; rep < 20; ++rep )
    {
      auto const a = random_words( rng, n );
      auto b = random_words( rng, n );

      auto x = a, y = a;
      ref.and_assign( x.data(), b.data(), n );
      vec.and_assign( y.data(), b.data(), n );
      CHECK( x == y );
      x = a, y = a;
      ref.or_assign( x.data(), b.data(), n );
      vec.or_assign( y.data(), b.data(), n );
      CHECK( x == y );

      CHECK( ref.popcount( a.data(), n ) == vec.popcount( a.data(), n ) );
      CHECK( ref.equal( a.data(), b.data(), n ) == vec.equal( a.data(), b.data(), n ) );
      CHECK( vec.equal( a.data(), a.data(), n ) );

      /* make b a superset of a in most words so both subset outcomes occur */
      auto sup = a;
      for ( std::size_t i = 0; i < n; ++i )
      {
        sup[i] |= b[i];
      }
      if ( rep % 2 == 1 )
      {
        sup[rng() % n] &= ~( uint64_t{ 1 } << ( rng() % 64 ) );
      }
      CHECK( ref.is_subset( a.data(), sup.data(), n ) == vec.is_subset( a.data(), sup.data(), n ) );

      auto const low = rng();
      auto const care = n > 1 ? rng() % n : 0u;
      auto const value = rng() & care;
      x = a, y = a;
      ref.or_cube( x.data(), n, low, care, value );
      vec.or_cube( y.data(), n, low, care, value );
      CHECK( x == y );
      CHECK( ref.cube_subset( x.data(), n, low, care, value ) );
      CHECK( vec.cube_subset( y.data(), n, low, care, value ) );
      CHECK( ref.cube_subset( a.data(), n, low, care, value ) == vec.cube_subset( a.data(), n, low, care, value ) );
    }
  }
}

TEST_CASE( "backend switching keeps results" )
{
  std::mt19937_64 rng( 29 );
  auto const before = simd::active_backend();
  for ( int i = 0; i < 50; ++i )
  {
    auto const f = test::random_sop( rng, 12, 10 );
    auto const g = absorb( f );
    REQUIRE( simd::set_backend( simd::backend::scalar ) );
    auto const s = equivalent( f, g );
    auto const tts = to_truth_table( f, variable_universe::of( { &f } ) );
    if ( simd::set_backend( simd::backend::avx2 ) )
    {
      CHECK( equivalent( f, g ) == s );
      CHECK( to_truth_table( f, variable_universe::of( { &f } ) ) == tts );
    }
  }
  simd::set_backend( before );
}
