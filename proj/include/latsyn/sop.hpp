/*!
  \file sop.hpp
  \brief Product terms, sum-of-products functions and their file format

  A function file is ASCII text: the first line holds the term count N,
  followed by N lines `k c1 ... ck` where k is the number of literal codes
  on that line. Constant one is written as `1\n1 101`, constant zero as `0`.
*/
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "literal.hpp"

namespace latsyn
{

/*! \brief Product of literals, kept as a sorted set of codes.
 *
 * A term never holds constants or a complementary pair; those are removed
 * or rejected by `normalize_term`. The empty term is the constant-one product.
 */
class term
{
public:
  term() = default;

  std::span<literal const> literals() const noexcept { return lits_; }
  std::size_t size() const noexcept { return lits_.size(); }
  bool empty() const noexcept { return lits_.empty(); }

  bool contains( literal l ) const noexcept;
  bool is_subset_of( term const& other ) const noexcept;

  /*! \brief Canonical order: literal count first, then lexicographic codes. */
  std::strong_ordering operator<=>( term const& other ) const noexcept;
  bool operator==( term const& other ) const noexcept = default;

private:
  friend std::optional<term> normalize_term( std::span<literal const> codes );

  std::vector<literal> lits_;
};

/*! \brief Collapses duplicates and drops constant-one entries.
 *
 * Returns `std::nullopt` (cancelled) when the sequence contains constant zero
 * or both polarities of a variable.
 */
std::optional<term> normalize_term( std::span<literal const> codes );

/*! \brief Convenience overload validating raw integer codes. */
std::optional<term> normalize_term( std::initializer_list<long> codes );

/*! \brief Ordered list of product terms; the empty list is constant zero. */
class sop
{
public:
  sop() = default;
  explicit sop( std::vector<term> terms ) : terms_( std::move( terms ) ) {}

  static sop constant_one() { return sop( { term{} } ); }

  std::vector<term> const& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  term const& operator[]( std::size_t i ) const { return terms_[i]; }

  bool is_constant_zero() const noexcept { return terms_.empty(); }
  bool is_constant_one() const noexcept;

  /*! \brief Sorted, de-duplicated variable indices read by any term. */
  std::vector<uint16_t> variables() const;

  bool operator==( sop const& other ) const noexcept = default;

private:
  std::vector<term> terms_;
};

/*! \brief Removes duplicate terms and every term that is a superset of another.
 *
 * The relative order of surviving terms is preserved.
 */
sop absorb( sop const& f );

/*! \brief Terms sorted in canonical term order. */
sop canonical( sop const& f );

/*! \brief Order-insensitive equality of the two term lists. */
bool same_terms( sop const& f, sop const& g );

struct parsed_function
{
  sop function;
  /*! \brief Diagnostics for terms that were cancelled, merged or absorbed on input. */
  std::vector<std::string> warnings;
};

/*! \brief Parses the function file format; terms are normalized and absorbed. */
parsed_function parse_function( std::string_view text );
std::string serialize_function( sop const& f );

/*! \brief Literals ordered by variable, e.g. "b'd'"; the empty term prints as "1". */
std::string to_pretty( term const& t );
std::string to_pretty( sop const& f );

/*! \brief Values for variables 0..99 (letters and auxiliary variables). */
class truth_assignment
{
public:
  void set( uint16_t variable, bool value );
  std::optional<bool> get( uint16_t variable ) const noexcept;

private:
  std::vector<int8_t> values_;
};

/*! \brief SOP semantics; throws `error` when a referenced variable has no value. */
bool evaluate( sop const& f, truth_assignment const& a );
bool evaluate( term const& t, truth_assignment const& a );

/*! \brief Exhaustive truth-table comparison over the union of both variable sets.
 *
 * Throws `limit_error` if the union has more than `max_variables` variables.
 */
bool equivalent( sop const& f, sop const& g, uint32_t max_variables = 20u );

/*! \brief True iff every assignment satisfying `t` satisfies `f`. */
bool implies( term const& t, sop const& f, uint32_t max_variables = 20u );

} // namespace latsyn
