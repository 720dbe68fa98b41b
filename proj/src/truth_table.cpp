#include <latsyn/truth_table.hpp>
#include <latsyn/simd/tt_kernels.hpp>

#include <algorithm>

namespace latsyn
{

namespace
{

constexpr uint64_t projections[6] = {
    0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
    0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };

uint64_t valid_bits( uint32_t num_vars ) noexcept
{
  return num_vars >= 6u ? ~uint64_t{ 0 } : ( uint64_t{ 1 } << ( 1u << num_vars ) ) - 1u;
}

} // namespace

variable_universe::variable_universe( std::vector<uint16_t> variables ) : variables_( std::move( variables ) )
{
  std::sort( variables_.begin(), variables_.end() );
  variables_.erase( std::unique( variables_.begin(), variables_.end() ), variables_.end() );
  for ( std::size_t i = 0; i < variables_.size(); ++i )
  {
    if ( variables_[i] > literal::max_variable )
    {
      throw literal_error( "variable index out of range" );
    }
    positions_[variables_[i]] = static_cast<int16_t>( i );
  }
}

variable_universe variable_universe::of( std::initializer_list<sop const*> functions )
{
  std::vector<uint16_t> vars;
  for ( auto const* f : functions )
  {
    auto const v = f->variables();
    vars.insert( vars.end(), v.begin(), v.end() );
  }
  return variable_universe( std::move( vars ) );
}

int variable_universe::position( uint16_t variable ) const noexcept
{
  return variable < positions_.size() ? positions_[variable] : -1;
}

truth_table::truth_table( uint32_t num_vars )
    : num_vars_( num_vars ),
      words_( num_vars <= 6u ? 1u : std::size_t{ 1 } << ( num_vars - 6u ), 0u )
{
  if ( num_vars > 32u )
  {
    throw limit_error( "truth table over more than 32 variables" );
  }
}

bool truth_table::bit( uint64_t index ) const noexcept
{
  return ( ( words_[index >> 6u] >> ( index & 63u ) ) & 1u ) != 0u;
}

uint64_t truth_table::count_ones() const
{
  return simd::kernels().popcount( words_.data(), words_.size() );
}

bool truth_table::is_subset_of( truth_table const& other ) const
{
  return simd::kernels().is_subset( words_.data(), other.words_.data(), words_.size() );
}

truth_table& truth_table::operator|=( truth_table const& other )
{
  simd::kernels().or_assign( words_.data(), other.words_.data(), words_.size() );
  return *this;
}

truth_table& truth_table::operator&=( truth_table const& other )
{
  simd::kernels().and_assign( words_.data(), other.words_.data(), words_.size() );
  return *this;
}

bool truth_table::operator==( truth_table const& other ) const
{
  return num_vars_ == other.num_vars_ && simd::kernels().equal( words_.data(), other.words_.data(), words_.size() );
}

void truth_table::add_cube( cube_mask const& cube )
{
  if ( !cube.contradictory )
  {
    simd::kernels().or_cube( words_.data(), words_.size(), cube.low & valid_bits( num_vars_ ), cube.care, cube.value );
  }
}

bool truth_table::contains_cube( cube_mask const& cube ) const
{
  return cube.contradictory ||
         simd::kernels().cube_subset( words_.data(), words_.size(), cube.low & valid_bits( num_vars_ ), cube.care, cube.value );
}

cube_mask make_cube( uint64_t positive, uint64_t negative )
{
  cube_mask cube;
  if ( ( positive & negative ) != 0u )
  {
    cube.contradictory = true;
  }
  for ( uint32_t pos = 0; pos < 6u; ++pos )
  {
    if ( ( positive >> pos ) & 1u )
    {
      cube.low &= projections[pos];
    }
    if ( ( negative >> pos ) & 1u )
    {
      cube.low &= ~projections[pos];
    }
  }
  cube.care = ( positive | negative ) >> 6u;
  cube.value = positive >> 6u;
  return cube;
}

cube_mask make_cube( term const& t, variable_universe const& universe )
{
  uint64_t positive = 0u, negative = 0u;
  for ( auto const l : t.literals() )
  {
    auto const pos = universe.position( l.variable() );
    if ( pos < 0 )
    {
      throw error( "variable " + to_pretty( literal::positive( l.variable() ) ) + " is not in the universe" );
    }
    ( l.is_complemented() ? negative : positive ) |= uint64_t{ 1 } << pos;
  }
  return make_cube( positive, negative );
}

truth_table to_truth_table( sop const& f, variable_universe const& universe )
{
  truth_table tt( universe.size() );
  for ( auto const& t : f.terms() )
  {
    tt.add_cube( make_cube( t, universe ) );
  }
  return tt;
}

} // namespace latsyn
