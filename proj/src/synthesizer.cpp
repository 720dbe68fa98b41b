#include <latsyn/synthesizer.hpp>

#include <algorithm>
#include <chrono>
#include <numeric>

namespace latsyn
{

split_terms_result split_long_terms( sop const& f, uint32_t lb )
{
  if ( lb < 2u )
  {
    throw error( "the longest path must hold at least two literals" );
  }
  std::vector<uint32_t> order( f.size() );
  std::iota( order.begin(), order.end(), 0u );
  std::stable_sort( order.begin(), order.end(), [&]( auto a, auto b ) { return f[a].size() < f[b].size(); } );

  split_terms_result out;
  uint16_t next_aux = literal::first_aux;
  std::vector<term> terms;
  for ( auto const i : order )
  {
    std::vector<literal> lits( f[i].literals().begin(), f[i].literals().end() );
    while ( lits.size() > lb )
    {
      if ( next_aux > literal::max_variable )
      {
        throw limit_error( "out of auxiliary variable codes" );
      }
      std::vector<literal> chunk( lits.begin(), lits.begin() + lb );
      auto const aux = literal::positive( next_aux++ );
      out.aux.push_back( { aux, *normalize_term( chunk ) } );
      lits.erase( lits.begin(), lits.begin() + lb );
      lits.push_back( aux );
      std::sort( lits.begin(), lits.end() );
    }
    terms.push_back( *normalize_term( lits ) );
    out.origin.push_back( i );
  }
  out.function = sop( std::move( terms ) );
  return out;
}

namespace
{

class cover_builder
{
public:
  cover_builder( split_terms_result const& split, mapping_cache& cache, synth_params const& ps, synth_result& result )
      : split_( split ), cache_( cache ), ps_( ps ), result_( result )
  {
  }

  /* `items` are indices into split_.function */
  void cover( std::vector<uint32_t> items )
  {
    while ( !items.empty() )
    {
      auto const f = select( items );
      if ( auto const r = map( f ); r.status == map_status::solution )
      {
        keep( items, *r.solution );
        return;
      }
      if ( items.size() >= 2u )
      {
        if ( auto const d = decompose( f ); d.result )
        {
          keep( pick( items, d.result->a.terms ), d.result->a.solution );
          keep( pick( items, d.result->b.terms ), d.result->b.solution );
          return;
        }
      }
      else
      {
        throw error( "term " + to_pretty( f[0] ) + " does not fit on any path of the lattice" );
      }

      auto const half = ( items.size() + 1u ) / 2u;
      std::vector<uint32_t> const first( items.begin(), items.begin() + half );
      std::vector<uint32_t> const second( items.begin() + half, items.end() );
      auto const f1 = select( first );
      if ( auto const r = map( f1 ); r.status == map_status::solution )
      {
        keep( first, *r.solution );
        items = second;
        continue;
      }
      if ( first.size() >= 2u )
      {
        if ( auto const d = decompose( f1 ); d.result )
        {
          auto const& larger = d.result->a.terms.size() >= d.result->b.terms.size() ? d.result->a : d.result->b;
          auto const& smaller = &larger == &d.result->a ? d.result->b : d.result->a;
          keep( pick( first, larger.terms ), larger.solution );
          items = pick( first, smaller.terms );
          items.insert( items.end(), second.begin(), second.end() );
          continue;
        }
      }
      cover( first );
      items = second;
    }
  }

private:
  sop select( std::vector<uint32_t> const& items ) const
  {
    std::vector<term> terms;
    for ( auto const i : items )
    {
      terms.push_back( split_.function[i] );
    }
    return sop( std::move( terms ) );
  }

  static std::vector<uint32_t> pick( std::vector<uint32_t> const& items, std::vector<uint32_t> const& positions )
  {
    std::vector<uint32_t> out;
    for ( auto const p : positions )
    {
      out.push_back( items[p] );
    }
    return out;
  }

  map_result map( sop const& f )
  {
    ++result_.stats.map_calls;
    auto r = cache_.map( f, ps_.budget );
    note( r.status );
    return r;
  }

  decompose_result decompose( sop const& f )
  {
    ++result_.stats.decompositions;
    decompose_params dp;
    dp.budget = ps_.budget;
    auto d = decompose_two( f, cache_, dp );
    note( d.status );
    return d;
  }

  void note( map_status s )
  {
    if ( s == map_status::inconclusive )
    {
      result_.status = map_status::inconclusive;
    }
  }

  void keep( std::vector<uint32_t> const& items, mapping_solution const& sol )
  {
    plan_lattice pl;
    pl.lattice = sol.assignment;
    pl.function = select( items );
    for ( auto const i : items )
    {
      pl.terms.push_back( split_.origin[i] );
    }
    std::sort( pl.terms.begin(), pl.terms.end() );
    result_.plan->lattices.push_back( std::move( pl ) );
  }

  split_terms_result const& split_;
  mapping_cache& cache_;
  synth_params const& ps_;
  synth_result& result_;
};

} // namespace

synth_result synthesize( sop const& f, lattice_dim dim, synth_params const& ps )
{
  auto const start = std::chrono::steady_clock::now();
  mapping_cache cache( enumerate_paths( dim ) );
  auto const lb = longest_path_len( cache.paths() );

  synth_result result;
  result.plan = synthesis_plan{ dim, {}, {} };
  if ( f.is_constant_zero() )
  {
    result.plan->lattices.push_back( { { dim, std::vector<literal>( dim.cells(), literal::zero() ) }, f, {}, std::nullopt } );
    return result;
  }
  auto const split = split_long_terms( f, lb );
  result.plan->aux = split.aux;

  for ( auto const& def : split.aux )
  {
    sop const product( { def.product } );
    ++result.stats.map_calls;
    auto const r = cache.map( product, ps.budget );
    if ( r.status != map_status::solution )
    {
      throw error( "auxiliary product " + to_pretty( def.product ) + " could not be placed" );
    }
    result.plan->lattices.push_back( { r.solution->assignment, product, {}, def.aux } );
  }

  std::vector<uint32_t> items( split.function.size() );
  std::iota( items.begin(), items.end(), 0u );
  cover_builder( split, cache, ps, result ).cover( items );

  result.stats.seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
  return result;
}

sop expand_plan( synthesis_plan const& plan )
{
  std::vector<term> terms;
  for ( auto const& pl : plan.lattices )
  {
    if ( !pl.defines )
    {
      auto const g = solve_lattice( pl.lattice );
      terms.insert( terms.end(), g.terms().begin(), g.terms().end() );
    }
  }

  std::vector<std::pair<literal, sop>> subst;
  for ( auto const& pl : plan.lattices )
  {
    if ( pl.defines )
    {
      subst.emplace_back( *pl.defines, solve_lattice( pl.lattice ) );
    }
  }
  std::sort( subst.begin(), subst.end(), []( auto const& a, auto const& b ) { return b.first < a.first; } );

  for ( auto const& [aux, g] : subst )
  {
    std::vector<term> next;
    for ( auto const& t : terms )
    {
      if ( !t.contains( aux ) )
      {
        next.push_back( t );
        continue;
      }
      std::vector<literal> rest;
      for ( auto const l : t.literals() )
      {
        if ( l != aux )
        {
          rest.push_back( l );
        }
      }
      for ( auto const& u : g.terms() )
      {
        auto lits = rest;
        lits.insert( lits.end(), u.literals().begin(), u.literals().end() );
        if ( auto const product = normalize_term( lits ) )
        {
          next.push_back( *product );
        }
      }
    }
    terms = std::move( next );
  }
  for ( auto const& t : terms )
  {
    for ( auto const l : t.literals() )
    {
      if ( l.is_aux() && std::none_of( subst.begin(), subst.end(), [l]( auto const& s ) { return s.first == l; } ) )
      {
        throw error( "auxiliary variable " + to_pretty( l ) + " has no defining lattice" );
      }
    }
  }
  return canonical( absorb( sop( std::move( terms ) ) ) );
}

} // namespace latsyn
