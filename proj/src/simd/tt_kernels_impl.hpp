#pragma once

#include <latsyn/simd/tt_kernels.hpp>

namespace latsyn::simd::detail
{

kernel_table const& scalar_kernels();

#if defined( LATSYN_HAVE_AVX2 )
kernel_table const& avx2_kernels();
#endif

} // namespace latsyn::simd::detail
