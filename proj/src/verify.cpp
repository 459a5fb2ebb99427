#include "acc2omp/verify.hpp"

#include <algorithm>
#include <cctype>

#include "acc2omp/parse.hpp"
#include "acc2omp/scan.hpp"

namespace acc2omp {

namespace {

std::string strip_ws(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

struct NormalDirective {
  OmpKind kind;
  std::vector<std::string> clauses;  // normalized, sorted
  int line = 0;
  std::string rendered;
};

NormalDirective normalize(const OmpDirective& d, int line) {
  NormalDirective out;
  out.kind = d.kind;
  out.line = line;
  for (const Clause& c : d.clauses) out.clauses.push_back(strip_ws(clause_text(c)));
  std::sort(out.clauses.begin(), out.clauses.end());
  out.rendered = omp_construct_text(d.kind, Dialect::FortranFree);
  for (const std::string& c : out.clauses) out.rendered += " " + c;
  return out;
}

// The comparison lens: OpenACC occurrences are translated, OpenMP
// occurrences are parsed as-is. Applying it to both sides makes the
// verdict reflexive and symmetric for exact translations.
std::vector<NormalDirective> directive_sequence(const SourceUnit& unit,
                                                const MappingConfig& config,
                                                std::vector<Diagnostic>& diagnostics) {
  std::vector<NormalDirective> seq;
  const std::string file = unit.path.string();

  ScanResult scan = scan_directives(unit);
  for (Diagnostic& d : scan.diagnostics) diagnostics.push_back(std::move(d));

  ConstructStack stack;
  for (const DirectiveLine& dl : scan.directives) {
    try {
      if (is_acc_sentinel(dl.sentinel)) {
        AccDirective acc = parse_acc(dl.payload, unit.dialect);
        DirectiveMapping mapped =
            map_directive(acc, stack, config, unit.dialect, dl.start_line);
        for (Diagnostic& d : mapped.diagnostics) {
          stamp(d, file, dl.start_line, dl.payload);
          diagnostics.push_back(std::move(d));
        }
        if (mapped.directive) seq.push_back(normalize(*mapped.directive, dl.start_line));
      } else {
        seq.push_back(normalize(parse_omp(dl.payload, unit.dialect), dl.start_line));
      }
    } catch (const DirectiveError& e) {
      Diagnostic d = e.to_diagnostic();
      stamp(d, file, dl.start_line, dl.payload);
      diagnostics.push_back(std::move(d));
    }
  }
  return seq;
}

// Multiset difference of two sorted clause lists.
std::vector<std::string> clauses_only_in(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

EquivalenceReport verify_pair(const SourceUnit& acc_unit, const SourceUnit& omp_unit,
                              const MappingConfig& config) {
  EquivalenceReport report;
  auto acc_seq = directive_sequence(acc_unit, config, report.diagnostics);
  auto omp_seq = directive_sequence(omp_unit, config, report.diagnostics);

  const std::size_t n = std::max(acc_seq.size(), omp_seq.size());
  report.positions = static_cast<int>(n);
  for (std::size_t i = 0; i < n; ++i) {
    PositionResult pos;
    pos.position = static_cast<int>(i);
    const NormalDirective* a = i < acc_seq.size() ? &acc_seq[i] : nullptr;
    const NormalDirective* b = i < omp_seq.size() ? &omp_seq[i] : nullptr;
    if (a) {
      pos.acc_line = a->line;
      pos.acc_rendered = a->rendered;
    }
    if (b) {
      pos.omp_line = b->line;
      pos.omp_rendered = b->rendered;
    }
    if (a && b) {
      pos.only_in_acc = clauses_only_in(a->clauses, b->clauses);
      pos.only_in_omp = clauses_only_in(b->clauses, a->clauses);
      pos.match = a->kind == b->kind && pos.only_in_acc.empty() &&
                  pos.only_in_omp.empty();
    }
    if (!pos.match) ++report.mismatches;
    report.results.push_back(std::move(pos));
  }

  report.match =
      report.mismatches == 0 && !has_errors(report.diagnostics);
  return report;
}

}  // namespace acc2omp
