/*!
  \file literal.hpp
  \brief Integer literal codes used in function, lattice and library files

  Positive variables use codes 0..99 (0..25 are the letters a..z, 26..99 are
  auxiliary variables introduced by term splitting). The complement of a
  letter variable v is 1000 - v. Constant zero is 100, constant one is 101.
*/
#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace latsyn
{

class literal
{
public:
  static constexpr uint16_t max_letter = 25u;
  static constexpr uint16_t first_aux = 26u;
  static constexpr uint16_t max_variable = 99u;
  static constexpr uint16_t zero_code = 100u;
  static constexpr uint16_t one_code = 101u;
  static constexpr uint16_t complement_base = 1000u;

  constexpr literal() = default;

  /*! \brief Validates `code` and throws `literal_error` if it is not a literal code. */
  static literal from_code( long code )
  {
    if ( !is_valid_code( code ) )
    {
      throw literal_error( "invalid literal code " + std::to_string( code ) );
    }
    return literal( static_cast<uint16_t>( code ) );
  }

  static constexpr bool is_valid_code( long code ) noexcept
  {
    return ( code >= 0 && code <= one_code ) ||
           ( code >= complement_base - max_letter && code <= complement_base );
  }

  static constexpr literal positive( uint16_t variable ) noexcept { return literal( variable ); }
  static constexpr literal negative( uint16_t variable ) noexcept { return literal( complement_base - variable ); }
  static constexpr literal zero() noexcept { return literal( zero_code ); }
  static constexpr literal one() noexcept { return literal( one_code ); }

  constexpr uint16_t code() const noexcept { return code_; }

  constexpr bool is_constant() const noexcept { return code_ == zero_code || code_ == one_code; }
  constexpr bool is_zero() const noexcept { return code_ == zero_code; }
  constexpr bool is_one() const noexcept { return code_ == one_code; }
  constexpr bool is_complemented() const noexcept { return code_ > one_code; }
  constexpr bool is_aux() const noexcept { return code_ >= first_aux && code_ <= max_variable; }

  /*! \brief Variable index read by this literal; undefined for constants. */
  constexpr uint16_t variable() const noexcept
  {
    return is_complemented() ? static_cast<uint16_t>( complement_base - code_ ) : code_;
  }

  /*! \brief Returns 1000 - code. Throws for constants and auxiliary variables. */
  literal complement() const
  {
    if ( is_constant() )
    {
      throw literal_error( "constants have no complement" );
    }
    if ( is_aux() )
    {
      throw literal_error( "auxiliary variables are never complemented" );
    }
    return literal( static_cast<uint16_t>( complement_base - code_ ) );
  }

  constexpr bool is_complement_of( literal other ) const noexcept
  {
    return !is_constant() && !other.is_constant() && code_ + other.code_ == complement_base;
  }

  constexpr auto operator<=>( literal const& ) const = default;

private:
  constexpr explicit literal( uint16_t code ) noexcept : code_( code ) {}

  uint16_t code_{ zero_code };
};

/*! \brief Human readable name: a..z with a trailing ' for complements, x1.. for aux, 0/1 for constants. */
std::string to_pretty( literal l );

} // namespace latsyn
