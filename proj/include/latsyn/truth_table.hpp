/*!
  \file truth_table.hpp
  \brief Dense truth tables over a small ordered variable universe
*/
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sop.hpp"

namespace latsyn
{

/*! \brief Maps variable indices (0..99) to truth-table positions. */
class variable_universe
{
public:
  variable_universe() = default;
  explicit variable_universe( std::vector<uint16_t> variables );

  /*! \brief Union of the variables of all given functions. */
  static variable_universe of( std::initializer_list<sop const*> functions );

  uint32_t size() const noexcept { return static_cast<uint32_t>( variables_.size() ); }
  std::vector<uint16_t> const& variables() const noexcept { return variables_; }

  /*! \brief Position of `variable`, or -1 when it is not part of the universe. */
  int position( uint16_t variable ) const noexcept;

private:
  std::vector<uint16_t> variables_;
  std::vector<int16_t> positions_ = std::vector<int16_t>( 100u, -1 );
};

/*! \brief Cube descriptor consumed by the `or_cube` / `cube_subset` kernels. */
struct cube_mask
{
  uint64_t low{ ~uint64_t{ 0 } };
  uint64_t care{ 0 };
  uint64_t value{ 0 };
  bool contradictory{ false };
};

class truth_table
{
public:
  explicit truth_table( uint32_t num_vars = 0u );

  uint32_t num_vars() const noexcept { return num_vars_; }
  std::size_t num_words() const noexcept { return words_.size(); }
  std::span<uint64_t> words() noexcept { return words_; }
  std::span<uint64_t const> words() const noexcept { return words_; }

  bool bit( uint64_t index ) const noexcept;
  uint64_t count_ones() const;
  bool is_subset_of( truth_table const& other ) const;

  truth_table& operator|=( truth_table const& other );
  truth_table& operator&=( truth_table const& other );
  bool operator==( truth_table const& other ) const;

  /*! \brief Adds the minterms of `cube` to this table. */
  void add_cube( cube_mask const& cube );
  /*! \brief True iff every minterm of `cube` is set in this table. */
  bool contains_cube( cube_mask const& cube ) const;

private:
  uint32_t num_vars_;
  std::vector<uint64_t> words_;
};

/*! \brief Cube of the product of the variables at the set bits of `positive` and
 *  the complemented variables at the set bits of `negative` (bit i = position i). */
cube_mask make_cube( uint64_t positive, uint64_t negative );

/*! \brief Cube of `t` in `universe`; every variable of `t` must be in the universe. */
cube_mask make_cube( term const& t, variable_universe const& universe );
truth_table to_truth_table( sop const& f, variable_universe const& universe );

} // namespace latsyn
