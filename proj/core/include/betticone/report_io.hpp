#pragma once

#include "betticone/cone.hpp"

#include <string>

namespace betticone {

/// Key-sorted JSON rendering of a report. Witness graphs are stored in
/// edge_list format and diagrams in canonical form. With include_timing
/// false the elapsed time is left out, so equal inputs give equal bytes.
std::string to_structured_text(const ConeReport& report, bool include_timing = true);

/// Inverse of to_structured_text. Throws std::invalid_argument.
ConeReport parse_structured_text(const std::string& text);

}  // namespace betticone
