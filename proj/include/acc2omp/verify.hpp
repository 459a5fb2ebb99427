#pragma once

#include <string>
#include <vector>

#include "acc2omp/mapping.hpp"
#include "acc2omp/source.hpp"

namespace acc2omp {

/// One directive position in the side-by-side comparison. Clause order is
/// insignificant (multiset compare); variable-list order inside a clause
/// is significant; argument text is compared whitespace-stripped.
struct PositionResult {
  int position = 0;  // 0-based
  bool match = false;
  int acc_line = 0;  // 0 when this side has no directive at the position
  int omp_line = 0;
  std::string acc_rendered;  // normalized form, empty when absent
  std::string omp_rendered;
  std::vector<std::string> only_in_acc;  // clauses missing from the other side
  std::vector<std::string> only_in_omp;
};

struct EquivalenceReport {
  bool match = false;
  int positions = 0;
  int mismatches = 0;
  std::vector<PositionResult> results;
  std::vector<Diagnostic> diagnostics;
};

/// Translates acc_unit's OpenACC directives, parses both units' OpenMP
/// directives, and compares the resulting sequences position by position.
/// Non-directive lines are ignored. Parse or mapping errors from either
/// side are propagated and fail the verdict.
EquivalenceReport verify_pair(const SourceUnit& acc_unit, const SourceUnit& omp_unit,
                              const MappingConfig& config);

}  // namespace acc2omp
