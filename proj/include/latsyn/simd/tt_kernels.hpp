/*!
  \file tt_kernels.hpp
  \brief Word-parallel truth-table kernels with runtime backend selection

  Every kernel has a scalar reference implementation. On x86-64 an AVX2
  variant is compiled separately and selected at first use when the CPU
  supports it. The environment variable LATSYN_SIMD=scalar forces the
  reference path.

  Cube kernels describe a product term over a truth table of n words as
  (low, care, value): bit patterns of variables 0..5 are folded into the
  64-bit `low` mask, and variables 6.. select words w with
  `(w & care) == value`.
*/
#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace latsyn::simd
{

enum class backend
{
  scalar,
  avx2
};

struct kernel_table
{
  /*! \brief dst[i] &= src[i] */
  void ( *and_assign )( uint64_t* dst, uint64_t const* src, std::size_t n );
  /*! \brief dst[i] |= src[i] */
  void ( *or_assign )( uint64_t* dst, uint64_t const* src, std::size_t n );
  /*! \brief (a[i] & ~b[i]) == 0 for all i */
  bool ( *is_subset )( uint64_t const* a, uint64_t const* b, std::size_t n );
  bool ( *equal )( uint64_t const* a, uint64_t const* b, std::size_t n );
  uint64_t ( *popcount )( uint64_t const* a, std::size_t n );
  /*! \brief dst[w] |= cube word w */
  void ( *or_cube )( uint64_t* dst, std::size_t n, uint64_t low, uint64_t care, uint64_t value );
  /*! \brief cube is contained in f */
  bool ( *cube_subset )( uint64_t const* f, std::size_t n, uint64_t low, uint64_t care, uint64_t value );
};

kernel_table const& kernels_for( backend b );
bool backend_supported( backend b ) noexcept;

/*! \brief Active kernels (resolved once, then fixed unless `set_backend` is called). */
kernel_table const& kernels();
backend active_backend();

/*! \brief Switches the active backend; returns false (and changes nothing) if unsupported. */
bool set_backend( backend b );

std::string_view to_string( backend b ) noexcept;

} // namespace latsyn::simd
