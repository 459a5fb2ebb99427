#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "acc2omp/directive.hpp"
#include "acc2omp/source.hpp"

namespace acc2omp {

inline constexpr int kMinWrapWidth = 40;

/// Free-form line limit for Fortran, a conventional limit for C.
int default_wrap_width(Dialect d);

/// Canonical directive text: sentinel, construct keywords, clauses in AST
/// order, single spaces. Lines longer than wrap_width are split at clause
/// boundaries with dialect continuation syntax (Fortran: trailing '&' and
/// a repeated sentinel; C: trailing backslash). The construct head is never
/// split. Throws DirectiveError E301 when a single clause cannot fit and
/// std::invalid_argument when wrap_width < kMinWrapWidth.
std::vector<std::string> emit_omp(const OmpDirective& d, Dialect dialect,
                                  std::string_view indent, int wrap_width);
std::vector<std::string> emit_acc(const AccDirective& d, Dialect dialect,
                                  std::string_view indent, int wrap_width);

}  // namespace acc2omp
