#include <latsyn/literal.hpp>

namespace latsyn
{

std::string to_pretty( literal l )
{
  if ( l.is_zero() )
  {
    return "0";
  }
  if ( l.is_one() )
  {
    return "1";
  }
  auto const v = l.variable();
  if ( v >= literal::first_aux )
  {
    return "x" + std::to_string( v - literal::first_aux + 1 );
  }
  std::string name( 1u, static_cast<char>( 'a' + v ) );
  if ( l.is_complemented() )
  {
    name += '\'';
  }
  return name;
}

} // namespace latsyn
