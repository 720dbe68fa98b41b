#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <latsyn/sop.hpp>

namespace latsyn::detail
{

/*! \brief One non-blank input line: 1-based line number and its integers. */
struct int_line
{
  std::size_t number;
  std::vector<long> values;
};

/*! \brief Splits `text` into lines of whitespace-separated integers, skipping blank lines.
 *
 * Throws `format_error` on any token that is not a decimal integer.
 */
std::vector<int_line> integer_lines( std::string_view text );

/*! \brief Parses a term-count line at `pos` and its term lines; advances `pos` past them. */
parsed_function parse_function_block( std::span<int_line const> lines, std::size_t& pos );

} // namespace latsyn::detail
