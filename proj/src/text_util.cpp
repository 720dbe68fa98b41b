#include "text_util.hpp"

#include <latsyn/errors.hpp>

#include <charconv>
#include <string>

namespace latsyn::detail
{

namespace
{

bool is_blank( char ch ) noexcept
{
  return ch == ' ' || ch == '\t' || ch == '\r';
}

} // namespace

std::vector<int_line> integer_lines( std::string_view text )
{
  std::vector<int_line> lines;
  std::size_t line_no = 0;
  while ( !text.empty() )
  {
    ++line_no;
    auto const nl = text.find( '\n' );
    auto const line = text.substr( 0, nl );
    text = nl == std::string_view::npos ? std::string_view{} : text.substr( nl + 1 );

    std::vector<long> values;
    std::size_t pos = 0;
    while ( true )
    {
      while ( pos < line.size() && is_blank( line[pos] ) )
      {
        ++pos;
      }
      if ( pos == line.size() )
      {
        break;
      }
      long value = 0;
      auto const [ptr, ec] = std::from_chars( line.data() + pos, line.data() + line.size(), value );
      auto const end = static_cast<std::size_t>( ptr - line.data() );
      if ( ec != std::errc{} || ( end < line.size() && !is_blank( line[end] ) ) )
      {
        throw format_error( "line " + std::to_string( line_no ) + ": expected an integer" );
      }
      values.push_back( value );
      pos = end;
    }
    if ( !values.empty() )
    {
      lines.push_back( { line_no, std::move( values ) } );
    }
  }
  return lines;
}

} // namespace latsyn::detail
