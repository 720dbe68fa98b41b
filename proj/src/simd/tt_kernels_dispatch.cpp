#include "tt_kernels_impl.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace latsyn::simd
{

namespace
{

bool cpu_has_avx2() noexcept
{
#if defined( LATSYN_HAVE_AVX2 ) && ( defined( __GNUC__ ) || defined( __clang__ ) )
  __builtin_cpu_init();
  return __builtin_cpu_supports( "avx2" );
#else
  return false;
#endif
}

backend initial_backend()
{
  if ( auto const* env = std::getenv( "LATSYN_SIMD" ); env != nullptr && std::string_view( env ) == "scalar" )
  {
    return backend::scalar;
  }
  return cpu_has_avx2() ? backend::avx2 : backend::scalar;
}

std::atomic<backend>& active()
{
  static std::atomic<backend> current{ initial_backend() };
  return current;
}

} // namespace

bool backend_supported( backend b ) noexcept
{
  return b == backend::scalar || cpu_has_avx2();
}

kernel_table const& kernels_for( backend b )
{
#if defined( LATSYN_HAVE_AVX2 )
  if ( b == backend::avx2 && cpu_has_avx2() )
  {
    return detail::avx2_kernels();
  }
#endif
  return detail::scalar_kernels();
}

kernel_table const& kernels()
{
  return kernels_for( active().load( std::memory_order_relaxed ) );
}

backend active_backend()
{
  return active().load( std::memory_order_relaxed );
}

bool set_backend( backend b )
{
  if ( !backend_supported( b ) )
  {
    return false;
  }
  active().store( b, std::memory_order_relaxed );
  return true;
}

std::string_view to_string( backend b ) noexcept
{
  return b == backend::avx2 ? "avx2" : "scalar";
}

} // namespace latsyn::simd
