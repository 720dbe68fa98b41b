#include <doctest.h>

#include <latsyn/synthesizer.hpp>

#include "oracles.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <random>

using namespace latsyn;
using latsyn::test::load_function;
using latsyn::test::make_sop;

namespace
{

void check_plan( sop const& f, synth_result const& r )
{
  REQUIRE( r.plan );
  CHECK( equivalent( expand_plan( *r.plan ), f ) );
  std::vector<uint32_t> covered;
  for ( auto const& pl : r.plan->lattices )
  {
    CHECK( latsyn::test::realizes( pl.lattice, pl.function ) );
    covered.insert( covered.end(), pl.terms.begin(), pl.terms.end() );
  }
  std::sort( covered.begin(), covered.end() );
  CHECK( std::adjacent_find( covered.begin(), covered.end() ) == covered.end() );
  CHECK( covered.size() == f.size() );
}

} // namespace

TEST_CASE( "split_long_terms extracts prefixes into auxiliary variables" )
{
  auto const f = make_sop( { { 0, 1, 2, 3, 4, 5, 6 } } );
  auto const s = split_long_terms( f, 5 );
  REQUIRE( s.aux.size() == 1u );
  CHECK( s.aux[0].aux.code() == 26 );
  CHECK( s.aux[0].product == *normalize_term( { 0, 1, 2, 3, 4 } ) );
  CHECK( s.function == make_sop( { { 5, 6, 26 } } ) );
  CHECK( to_pretty( s.function ) == "fgx1" );
}

TEST_CASE( "split_long_terms on a twelve-literal term" )
{
  auto const f = make_sop( { { 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11 } } );
  auto const s = split_long_terms( f, 5 );
  REQUIRE( s.aux.size() == 2u );
  CHECK( s.aux[0].product == *normalize_term( { 0, 1, 2, 3, 4 } ) );
  CHECK( s.aux[1].product == *normalize_term( { 5, 6, 7, 8, 9 } ) );
  CHECK( s.function == make_sop( { { 10, 11, 26, 27 } } ) );

  auto const r = synthesize( f, { 3, 3 } );
  REQUIRE( r.plan );
  CHECK( r.plan->lattices.size() == 3u );
  check_plan( f, r );
}

TEST_CASE( "split_long_terms sorts by length and keeps short terms" )
{
  auto const f = make_sop( { { 0, 1, 2 }, { 3 }, { 4, 1000 } } );
  auto const s = split_long_terms( f, 5 );
  CHECK( s.aux.empty() );
  CHECK( s.function == make_sop( { { 3 }, { 4, 1000 }, { 0, 1, 2 } } ) );
  CHECK( s.origin == std::vector<uint32_t>{ 1, 2, 0 } );
  CHECK_THROWS_AS( split_long_terms( f, 1 ), error );
}

TEST_CASE( "synthesize q with an auxiliary lattice" )
{
  auto const f = load_function( "synth_q.fn" );
  auto const r = synthesize( f, { 3, 3 } );
  CHECK( r.status == map_status::solution );
  REQUIRE( r.plan );
  CHECK( r.plan->lattices.size() == 3u );
  REQUIRE( r.plan->aux.size() == 1u );
  CHECK( to_pretty( r.plan->aux[0].product ) == "abcde" );
  check_plan( f, r );
}

TEST_CASE( "synthesize the eight-term example on three lattices" )
{
  auto const f = load_function( "synth_example2.fn" );
  auto const r = synthesize( f, { 3, 3 } );
  CHECK( r.status == map_status::solution );
  REQUIRE( r.plan );
  CHECK( r.plan->lattices.size() == 3u );
  std::vector<std::size_t> sizes;
  for ( auto const& pl : r.plan->lattices )
  {
    sizes.push_back( pl.terms.size() );
  }
  std::sort( sizes.begin(), sizes.end() );
  CHECK( sizes == std::vector<std::size_t>{ 2, 3, 3 } );
  check_plan( f, r );
}

TEST_CASE( "a directly mappable function needs one lattice" )
{
  auto const f = load_function( "example1.fn" );
  auto const r = synthesize( f, { 3, 3 } );
  REQUIRE( r.plan );
  CHECK( r.plan->lattices.size() == 1u );
  CHECK( r.plan->aux.empty() );
  CHECK( same_terms( expand_plan( *r.plan ), solve_lattice( r.plan->lattices[0].lattice ) ) );
  check_plan( f, r );
}

TEST_CASE( "synthesized plans expand to the input" )
{
  std::mt19937_64 rng( 5 );
  for ( int i = 0; i < 25; ++i )
  {
    auto const f = latsyn::test::random_sop( rng, 5, 6 );
    CAPTURE( to_pretty( f ) );
    auto const r = synthesize( f, { 2, 3 } );
    check_plan( f, r );
  }

  library_params ps;
  ps.dim = { 3, 3 };
  ps.trials = 10;
  ps.seed = 99;
  for ( auto const& e : generate_library( ps ) )
  {
    auto const r = synthesize( e.function, ps.dim );
    check_plan( e.function, r );
  }
}

TEST_CASE( "expand_plan rejects dangling auxiliary variables" )
{
  auto const f = make_sop( { { 0, 1, 2, 3, 4, 5, 6 } } );
  auto r = synthesize( f, { 3, 3 } );
  REQUIRE( r.plan );
  auto& lattices = r.plan->lattices;
  lattices.erase( std::remove_if( lattices.begin(), lattices.end(), []( auto const& pl ) { return pl.defines.has_value(); } ), lattices.end() );
  CHECK_THROWS_AS( expand_plan( *r.plan ), error );
}

TEST_CASE( "constant functions" )
{
  auto const zero = synthesize( sop{}, { 2, 2 } );
  REQUIRE( zero.plan );
  CHECK( expand_plan( *zero.plan ).is_constant_zero() );
  auto const one = synthesize( sop( { term{} } ), { 2, 2 } );
  REQUIRE( one.plan );
  CHECK( expand_plan( *one.plan ).is_constant_one() );
}
