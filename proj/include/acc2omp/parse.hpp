#pragma once

#include <string_view>

#include "acc2omp/directive.hpp"
#include "acc2omp/source.hpp"

namespace acc2omp {

/// Parses the payload of a directive occurrence (text after the sentinel,
/// continuations already joined). Keywords are case-insensitive and stored
/// lowercase; identifier case is preserved; whitespace between tokens is
/// insignificant. Throws DirectiveError: E002 unknown construct, E003
/// unknown clause on a known construct, E004 malformed clause arguments.
AccDirective parse_acc(std::string_view payload, Dialect dialect);

/// Symmetric to parse_acc with codes E005/E006/E007. The combined loop
/// constructs accept "do" in FortranFree and "for" in C; the returned
/// kind is dialect-neutral.
OmpDirective parse_omp(std::string_view payload, Dialect dialect);

}  // namespace acc2omp
