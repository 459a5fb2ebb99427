#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acc2omp/mapping.hpp"
#include "acc2omp/scan.hpp"
#include "acc2omp/source.hpp"

namespace acc2omp {

/// One directive occurrence and the lines that replace its physical span.
struct Edit {
  DirectiveLine line;
  std::vector<std::string> replacement;
};

/// Edits are non-overlapping and sorted by start_line; lines not covered
/// by an edit pass through unchanged.
struct RewritePlan {
  std::vector<Edit> edits;
  std::vector<Diagnostic> diagnostics;
};

RewritePlan plan_translation(const SourceUnit& unit, const MappingConfig& config);

/// Splices the plan's replacement lines into the unit, byte-preserving
/// everywhere else.
std::string apply_plan(const SourceUnit& unit, const RewritePlan& plan);

struct TranslateResult {
  /// Withheld (nullopt) when any Error diagnostic was produced.
  std::optional<std::string> text;
  std::vector<Diagnostic> diagnostics;
};

/// Replaces every OpenACC directive occurrence with the emission of its
/// mapped OpenMP directive at the same indent; OpenMP occurrences and
/// non-directive lines pass through byte-for-byte.
TranslateResult translate_unit(const SourceUnit& unit, const MappingConfig& config);

}  // namespace acc2omp
