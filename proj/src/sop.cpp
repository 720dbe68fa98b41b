#include <latsyn/sop.hpp>
#include <latsyn/truth_table.hpp>

#include "text_util.hpp"

#include <algorithm>
#include <sstream>

namespace latsyn
{

bool term::contains( literal l ) const noexcept
{
  return std::binary_search( lits_.begin(), lits_.end(), l );
}

bool term::is_subset_of( term const& other ) const noexcept
{
  return std::includes( other.lits_.begin(), other.lits_.end(), lits_.begin(), lits_.end() );
}

std::strong_ordering term::operator<=>( term const& other ) const noexcept
{
  if ( auto const c = lits_.size() <=> other.lits_.size(); c != 0 )
  {
    return c;
  }
  return std::lexicographical_compare_three_way( lits_.begin(), lits_.end(), other.lits_.begin(), other.lits_.end() );
}

std::optional<term> normalize_term( std::span<literal const> codes )
{
  term t;
  t.lits_.reserve( codes.size() );
  for ( auto const l : codes )
  {
    if ( l.is_zero() )
    {
      return std::nullopt;
    }
    if ( !l.is_one() )
    {
      t.lits_.push_back( l );
    }
  }
  std::sort( t.lits_.begin(), t.lits_.end() );
  t.lits_.erase( std::unique( t.lits_.begin(), t.lits_.end() ), t.lits_.end() );
  for ( auto const l : t.lits_ )
  {
    if ( l.is_complemented() && t.contains( literal::positive( l.variable() ) ) )
    {
      return std::nullopt;
    }
  }
  return t;
}

std::optional<term> normalize_term( std::initializer_list<long> codes )
{
  std::vector<literal> lits;
  lits.reserve( codes.size() );
  for ( auto const c : codes )
  {
    lits.push_back( literal::from_code( c ) );
  }
  return normalize_term( lits );
}

bool sop::is_constant_one() const noexcept
{
  return std::any_of( terms_.begin(), terms_.end(), []( auto const& t ) { return t.empty(); } );
}

std::vector<uint16_t> sop::variables() const
{
  std::vector<uint16_t> vars;
  for ( auto const& t : terms_ )
  {
    for ( auto const l : t.literals() )
    {
      vars.push_back( l.variable() );
    }
  }
  std::sort( vars.begin(), vars.end() );
  vars.erase( std::unique( vars.begin(), vars.end() ), vars.end() );
  return vars;
}

sop absorb( sop const& f )
{
  auto const& terms = f.terms();
  std::vector<term> kept;
  kept.reserve( terms.size() );
  for ( std::size_t i = 0; i < terms.size(); ++i )
  {
    bool redundant = false;
    for ( std::size_t j = 0; j < terms.size() && !redundant; ++j )
    {
      if ( i == j || !terms[j].is_subset_of( terms[i] ) )
      {
        continue;
      }
      /* equal terms: keep the first occurrence only */
      redundant = terms[j].size() < terms[i].size() || j < i;
    }
    if ( !redundant )
    {
      kept.push_back( terms[i] );
    }
  }
  return sop( std::move( kept ) );
}

sop canonical( sop const& f )
{
  auto terms = f.terms();
  std::sort( terms.begin(), terms.end() );
  return sop( std::move( terms ) );
}

bool same_terms( sop const& f, sop const& g )
{
  return canonical( f ) == canonical( g );
}

parsed_function detail::parse_function_block( std::span<int_line const> lines, std::size_t& pos )
{
  if ( pos >= lines.size() || lines[pos].values.size() != 1u )
  {
    throw format_error( "a function must start with a line holding the term count" );
  }
  auto const n = lines[pos].values.front();
  if ( n < 0 )
  {
    throw format_error( "line " + std::to_string( lines[pos].number ) + ": negative term count" );
  }
  if ( static_cast<std::size_t>( n ) > lines.size() - pos - 1u )
  {
    throw format_error( "term count " + std::to_string( n ) + " exceeds the " + std::to_string( lines.size() - pos - 1u ) + " remaining lines" );
  }
  auto const first = pos + 1u;
  pos = first + static_cast<std::size_t>( n );

  parsed_function result;
  std::vector<term> terms;
  for ( std::size_t i = first; i < pos; ++i )
  {
    auto const& [line_no, values] = lines[i];
    auto const index = i - first + 1u;
    auto const k = values.front();
    if ( k < 0 || static_cast<std::size_t>( k ) != values.size() - 1u )
    {
      throw format_error( "line " + std::to_string( line_no ) + ": literal count " + std::to_string( k ) + " does not match " + std::to_string( values.size() - 1u ) + " codes" );
    }
    std::vector<literal> lits;
    for ( std::size_t j = 1; j < values.size(); ++j )
    {
      lits.push_back( literal::from_code( values[j] ) );
    }
    auto t = normalize_term( lits );
    if ( !t )
    {
      result.warnings.push_back( "term " + std::to_string( index ) + " is cancelled (contains 0 or x x') and was dropped" );
      continue;
    }
    if ( t->size() != lits.size() && !( t->empty() && lits.size() == 1u ) )
    {
      result.warnings.push_back( "term " + std::to_string( index ) + " had repeated or constant-one literals" );
    }
    terms.push_back( std::move( *t ) );
  }
  sop f( std::move( terms ) );
  result.function = absorb( f );
  if ( result.function.size() != f.size() )
  {
    result.warnings.push_back( std::to_string( f.size() - result.function.size() ) + " duplicate or superset term(s) absorbed" );
  }
  return result;
}

parsed_function parse_function( std::string_view text )
{
  auto const lines = detail::integer_lines( text );
  std::size_t pos = 0u;
  auto result = detail::parse_function_block( lines, pos );
  if ( pos != lines.size() )
  {
    throw format_error( "term count " + std::to_string( lines.front().values.front() ) + " does not match " + std::to_string( lines.size() - 1u ) + " term lines" );
  }
  return result;
}

std::string serialize_function( sop const& f )
{
  std::ostringstream os;
  os << f.size() << '\n';
  for ( auto const& t : f.terms() )
  {
    if ( t.empty() )
    {
      os << "1 " << literal::one_code << '\n';
      continue;
    }
    os << t.size();
    for ( auto const l : t.literals() )
    {
      os << ' ' << l.code();
    }
    os << '\n';
  }
  return os.str();
}

std::string to_pretty( term const& t )
{
  if ( t.empty() )
  {
    return "1";
  }
  std::vector<literal> lits( t.literals().begin(), t.literals().end() );
  std::stable_sort( lits.begin(), lits.end(), []( auto a, auto b ) { return a.variable() < b.variable(); } );
  std::string s;
  for ( auto const l : lits )
  {
    s += to_pretty( l );
  }
  return s;
}

std::string to_pretty( sop const& f )
{
  if ( f.is_constant_zero() )
  {
    return "0";
  }
  std::string s;
  for ( auto const& t : f.terms() )
  {
    if ( !s.empty() )
    {
      s += " + ";
    }
    s += to_pretty( t );
  }
  return s;
}

void truth_assignment::set( uint16_t variable, bool value )
{
  if ( variable > literal::max_variable )
  {
    throw literal_error( "variable index out of range" );
  }
  if ( values_.size() <= variable )
  {
    values_.resize( variable + 1u, -1 );
  }
  values_[variable] = value ? 1 : 0;
}

std::optional<bool> truth_assignment::get( uint16_t variable ) const noexcept
{
  if ( variable >= values_.size() || values_[variable] < 0 )
  {
    return std::nullopt;
  }
  return values_[variable] == 1;
}

bool evaluate( term const& t, truth_assignment const& a )
{
  bool result = true;
  for ( auto const l : t.literals() )
  {
    auto const v = a.get( l.variable() );
    if ( !v )
    {
      throw error( "no value for variable " + to_pretty( literal::positive( l.variable() ) ) );
    }
    result = result && ( *v != l.is_complemented() );
  }
  return result;
}

bool evaluate( sop const& f, truth_assignment const& a )
{
  bool result = false;
  for ( auto const& t : f.terms() )
  {
    /* evaluate every term so that missing variables are always reported */
    result = evaluate( t, a ) || result;
  }
  return result;
}

bool equivalent( sop const& f, sop const& g, uint32_t max_variables )
{
  auto const universe = variable_universe::of( { &f, &g } );
  if ( universe.size() > max_variables )
  {
    throw limit_error( "equivalence check over " + std::to_string( universe.size() ) + " variables exceeds the bound of " + std::to_string( max_variables ) );
  }
  return to_truth_table( f, universe ) == to_truth_table( g, universe );
}

bool implies( term const& t, sop const& f, uint32_t max_variables )
{
  for ( auto const& u : f.terms() )
  {
    if ( u.is_subset_of( t ) )
    {
      return true;
    }
  }
  sop const ts( { t } );
  auto const universe = variable_universe::of( { &ts, &f } );
  if ( universe.size() > max_variables )
  {
    throw limit_error( "implication check over " + std::to_string( universe.size() ) + " variables exceeds the bound of " + std::to_string( max_variables ) );
  }
  return to_truth_table( f, universe ).contains_cube( make_cube( t, universe ) );
}

} // namespace latsyn
