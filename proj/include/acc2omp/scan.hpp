#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "acc2omp/diagnostics.hpp"
#include "acc2omp/source.hpp"

namespace acc2omp {

enum class SentinelKind { AccFortran, AccC, OmpFortran, OmpC };

bool is_acc_sentinel(SentinelKind s);
std::string_view sentinel_text(SentinelKind s);
SentinelKind acc_sentinel_for(Dialect d);
SentinelKind omp_sentinel_for(Dialect d);

/// One logical directive occurrence: physical location plus the
/// continuation-joined payload after the sentinel.
struct DirectiveLine {
  int start_line = 0;  // 1-based
  int line_span = 1;   // physical lines joined into this occurrence
  SentinelKind sentinel = SentinelKind::AccFortran;
  std::string payload;  // no newlines, outer whitespace trimmed
  std::string indent;   // leading whitespace of the first physical line
};

struct ScanResult {
  std::vector<DirectiveLine> directives;
  std::vector<Diagnostic> diagnostics;
};

/// Returns every directive occurrence whose sentinel family matches the
/// unit's dialect, in source order. OpenMP occurrences are included and
/// flagged by sentinel kind. Sentinels are recognized only at the first
/// non-whitespace position of a line.
ScanResult scan_directives(const SourceUnit& unit);

}  // namespace acc2omp
