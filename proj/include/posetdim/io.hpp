#pragma once

#include <string>
#include <string_view>

#include "posetdim/poset.hpp"

namespace posetdim {

/// Poset text format: '#' comment lines, one or more `elements <tok>...`
/// lines, `rel <a> <b>` lines meaning a < b (closure taken). First
/// appearance fixes the index order. Throws ParseError with a line number.
Poset parse_poset_text(std::string_view text);

/// Canonical emission: one `elements` line, then `rel` lines for the covers.
/// UTF-8, LF, single-space separators.
std::string format_poset_text(const Poset& p);

/// Realizer text format: one whitespace-separated word per line. A leading
/// '{' switches to the machine-readable document.
std::vector<std::vector<std::string>> parse_realizer_tokens(std::string_view text);

std::string format_realizer_text(const Poset& p, const Realizer& r);

/// Single machine-readable document with fields {elements, words, verified}.
std::string format_realizer_machine(const Poset& p, const Realizer& r,
                                    bool verified);

/// DOT text of the Hasse diagram: one node per element, one edge per cover,
/// drawn upward.
std::string to_dot(const Poset& p);

}  // namespace posetdim
