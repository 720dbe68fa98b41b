// Compiled with -mavx2; only reached after a runtime CPU check.
#include "tt_kernels_impl.hpp"

#include <immintrin.h>

#include <bit>

namespace latsyn::simd::detail
{

namespace
{

void and_assign_avx2( uint64_t* dst, uint64_t const* src, std::size_t n )
{
  std::size_t i = 0;
  for ( ; i + 4 <= n; i += 4 )
  {
    auto const a = _mm256_loadu_si256( reinterpret_cast<__m256i const*>( dst + i ) );
    auto const b = _mm256_loadu_si256( reinterpret_cast<__m256i const*>( src + i ) );
    _mm256_storeu_si256( reinterpret_cast<__m256i*>( dst + i ), _mm256_and_si256( a, b ) );
  }
  for ( ; i < n; ++i )
  {
    dst[i] &= src[i];
  }
}

void or_assign_avx2( uint64_t* dst, uint64_t const* src, std::size_t n )
{
  std::size_t i = 0;
  for ( ; i + 4 <= n; i += 4 )
  {
    auto const a = _mm256_loadu_si256( reinterpret_cast<__m256i const*>( dst + i ) );
    auto const b = _mm256_loadu_si256( reinterpret_cast<__m256i const*>( src + i ) );
    _mm256_storeu_si256( reinterpret_cast<__m256i*>( dst + i ), _mm256_or_si256( a, b ) );
  }
  for ( ; i < n; ++i )
  {
    dst[i] |= src[i];
  }
}

bool is_subset_avx2( uint64_t const* a, uint64_t const* b, std::size_t n )
{
  std::size_t i = 0;
  for ( ; i + 4 <= n; i += 4 )
  {
    auto const va = _mm256_loadu_si256( reinterpret_cast<__m256i const*>( a + i ) );
    auto const vb = _mm256_loadu_si256( reinterpret_cast<__m256i const*>( b + i ) );
    // testc(vb, va) == 1 iff (~vb & va) == 0
    if ( !_mm256_testc_si256( vb, va ) )
    {
      return false;
    }
  }
  for ( ; i < n; ++i )
  {
    if ( ( a[i] & ~b[i] ) != 0u )
    {
      return false;
    }
  }
  return true;
}

bool equal_avx2( uint64_t const* a, uint64_t const* b, std::size_t n )
{
  std::size_t i = 0;
  for ( ; i + 4 <= n; i += 4 )
  {
    auto const va = _mm256_loadu_si256( reinterpret_cast<__m256i const*>( a + i ) );
    auto const vb = _mm256_loadu_si256( reinterpret_cast<__m256i const*>( b + i ) );
    auto const diff = _mm256_xor_si256( va, vb );
    if ( !_mm256_testz_si256( diff, diff ) )
    {
      return false;
    }
  }
  for ( ; i < n; ++i )
  {
    if ( a[i] != b[i] )
    {
      return false;
    }
  }
  return true;
}

uint64_t popcount_avx2( uint64_t const* a, std::size_t n )
{
  // nibble lookup popcount (Mula); accumulates per-byte counts via sad
  auto const lookup = _mm256_setr_epi8( 0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4 );
  auto const low_nibble = _mm256_set1_epi8( 0x0f );
  auto acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for ( ; i + 4 <= n; i += 4 )
  {
    auto const v = _mm256_loadu_si256( reinterpret_cast<__m256i const*>( a + i ) );
    auto const lo = _mm256_and_si256( v, low_nibble );
    auto const hi = _mm256_and_si256( _mm256_srli_epi16( v, 4 ), low_nibble );
    auto const bytes = _mm256_add_epi8( _mm256_shuffle_epi8( lookup, lo ), _mm256_shuffle_epi8( lookup, hi ) );
    acc = _mm256_add_epi64( acc, _mm256_sad_epu8( bytes, _mm256_setzero_si256() ) );
  }
  alignas( 32 ) uint64_t lanes[4];
  _mm256_store_si256( reinterpret_cast<__m256i*>( lanes ), acc );
  uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for ( ; i < n; ++i )
  {
    total += static_cast<uint64_t>( std::popcount( a[i] ) );
  }
  return total;
}

inline __m256i word_indices( std::size_t w )
{
  auto const base = static_cast<long long>( w );
  return _mm256_setr_epi64x( base, base + 1, base + 2, base + 3 );
}

void or_cube_avx2( uint64_t* dst, std::size_t n, uint64_t low, uint64_t care, uint64_t value )
{
  auto const vcare = _mm256_set1_epi64x( static_cast<long long>( care ) );
  auto const vvalue = _mm256_set1_epi64x( static_cast<long long>( value ) );
  auto const vlow = _mm256_set1_epi64x( static_cast<long long>( low ) );
  std::size_t w = 0;
  for ( ; w + 4 <= n; w += 4 )
  {
    auto const hit = _mm256_cmpeq_epi64( _mm256_and_si256( word_indices( w ), vcare ), vvalue );
    auto const d = _mm256_loadu_si256( reinterpret_cast<__m256i const*>( dst + w ) );
    _mm256_storeu_si256( reinterpret_cast<__m256i*>( dst + w ), _mm256_or_si256( d, _mm256_and_si256( hit, vlow ) ) );
  }
  for ( ; w < n; ++w )
  {
    if ( ( w & care ) == value )
    {
      dst[w] |= low;
    }
  }
}

bool cube_subset_avx2( uint64_t const* f, std::size_t n, uint64_t low, uint64_t care, uint64_t value )
{
  auto const vcare = _mm256_set1_epi64x( static_cast<long long>( care ) );
  auto const vvalue = _mm256_set1_epi64x( static_cast<long long>( value ) );
  auto const vlow = _mm256_set1_epi64x( static_cast<long long>( low ) );
  std::size_t w = 0;
  for ( ; w + 4 <= n; w += 4 )
  {
    auto const hit = _mm256_cmpeq_epi64( _mm256_and_si256( word_indices( w ), vcare ), vvalue );
    auto const cube = _mm256_and_si256( hit, vlow );
    auto const vf = _mm256_loadu_si256( reinterpret_cast<__m256i const*>( f + w ) );
    if ( !_mm256_testc_si256( vf, cube ) )
    {
      return false;
    }
  }
  for ( ; w < n; ++w )
  {
    if ( ( w & care ) == value && ( low & ~f[w] ) != 0u )
    {
      return false;
    }
  }
  return true;
}

} // namespace

kernel_table const& avx2_kernels()
{
  static constexpr kernel_table table{
      and_assign_avx2, or_assign_avx2, is_subset_avx2, equal_avx2,
      popcount_avx2, or_cube_avx2, cube_subset_avx2 };
  return table;
}

} // namespace latsyn::simd::detail
