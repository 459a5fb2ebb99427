#include "acc2omp/translate.hpp"

#include "acc2omp/emit.hpp"
#include "acc2omp/parse.hpp"

namespace acc2omp {

RewritePlan plan_translation(const SourceUnit& unit, const MappingConfig& config) {
  RewritePlan plan;
  const std::string file = unit.path.string();
  const int wrap = default_wrap_width(unit.dialect);

  ScanResult scan = scan_directives(unit);
  plan.diagnostics = std::move(scan.diagnostics);

  ConstructStack stack;
  for (const DirectiveLine& dl : scan.directives) {
    if (!is_acc_sentinel(dl.sentinel)) continue;  // OpenMP lines pass through

    AccDirective acc;
    try {
      acc = parse_acc(dl.payload, unit.dialect);
    } catch (const DirectiveError& e) {
      Diagnostic d = e.to_diagnostic();
      stamp(d, file, dl.start_line, dl.payload);
      plan.diagnostics.push_back(std::move(d));
      continue;
    }

    DirectiveMapping mapped =
        map_directive(acc, stack, config, unit.dialect, dl.start_line);
    for (Diagnostic& d : mapped.diagnostics) {
      stamp(d, file, dl.start_line, dl.payload);
      plan.diagnostics.push_back(std::move(d));
    }
    if (!mapped.directive) continue;

    try {
      Edit edit;
      edit.line = dl;
      edit.replacement = emit_omp(*mapped.directive, unit.dialect, dl.indent, wrap);
      plan.edits.push_back(std::move(edit));
    } catch (const DirectiveError& e) {
      Diagnostic d = e.to_diagnostic();
      stamp(d, file, dl.start_line, dl.payload);
      plan.diagnostics.push_back(std::move(d));
    }
  }
  return plan;
}

std::string apply_plan(const SourceUnit& unit, const RewritePlan& plan) {
  SourceUnit out = unit;
  out.lines.clear();

  std::size_t next_edit = 0;
  std::size_t i = 0;
  while (i < unit.lines.size()) {
    if (next_edit < plan.edits.size() &&
        plan.edits[next_edit].line.start_line == static_cast<int>(i + 1)) {
      const Edit& edit = plan.edits[next_edit];
      for (const std::string& repl : edit.replacement) out.lines.push_back(repl);
      i += static_cast<std::size_t>(edit.line.line_span);
      ++next_edit;
    } else {
      out.lines.push_back(unit.lines[i]);
      ++i;
    }
  }
  return serialize(out);
}

TranslateResult translate_unit(const SourceUnit& unit, const MappingConfig& config) {
  RewritePlan plan = plan_translation(unit, config);
  TranslateResult result;
  result.diagnostics = plan.diagnostics;
  if (has_errors(result.diagnostics)) return result;  // all-or-nothing per unit
  result.text = apply_plan(unit, plan);
  return result;
}

}  // namespace acc2omp
