#include "tt_kernels_impl.hpp"

#include <bit>

namespace latsyn::simd::detail
{

namespace
{

void and_assign_scalar( uint64_t* dst, uint64_t const* src, std::size_t n )
{
  for ( std::size_t i = 0; i < n; ++i )
  {
    dst[i] &= src[i];
  }
}

void or_assign_scalar( uint64_t* dst, uint64_t const* src, std::size_t n )
{
  for ( std::size_t i = 0; i < n; ++i )
  {
    dst[i] |= src[i];
  }
}

bool is_subset_scalar( uint64_t const* a, uint64_t const* b, std::size_t n )
{
  for ( std::size_t i = 0; i < n; ++i )
  {
    if ( ( a[i] & ~b[i] ) != 0u )
    {
      return false;
    }
  }
  return true;
}

bool equal_scalar( uint64_t const* a, uint64_t const* b, std::size_t n )
{
  for ( std::size_t i = 0; i < n; ++i )
  {
    if ( a[i] != b[i] )
    {
      return false;
    }
  }
  return true;
}

uint64_t popcount_scalar( uint64_t const* a, std::size_t n )
{
  uint64_t total = 0u;
  for ( std::size_t i = 0; i < n; ++i )
  {
    total += static_cast<uint64_t>( std::popcount( a[i] ) );
  }
  return total;
}

void or_cube_scalar( uint64_t* dst, std::size_t n, uint64_t low, uint64_t care, uint64_t value )
{
  for ( std::size_t w = 0; w < n; ++w )
  {
    if ( ( w & care ) == value )
    {
      dst[w] |= low;
    }
  }
}

bool cube_subset_scalar( uint64_t const* f, std::size_t n, uint64_t low, uint64_t care, uint64_t value )
{
  for ( std::size_t w = 0; w < n; ++w )
  {
    if ( ( w & care ) == value && ( low & ~f[w] ) != 0u )
    {
      return false;
    }
  }
  return true;
}

} // namespace

kernel_table const& scalar_kernels()
{
  static constexpr kernel_table table{
      and_assign_scalar, or_assign_scalar, is_subset_scalar, equal_scalar,
      popcount_scalar, or_cube_scalar, cube_subset_scalar };
  return table;
}

} // namespace latsyn::simd::detail
