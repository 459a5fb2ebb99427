#include "acc2omp/mapping.hpp"

#include <cassert>

namespace acc2omp {

bool valid_injected_schedule(const SchedulePair& s) {
  return (s.kind == "static" || s.kind == "dynamic" || s.kind == "guided") &&
         !s.chunk.empty();
}

namespace {

Clause rename(const Clause& c, std::string new_name) {
  Clause out = c;
  out.name = std::move(new_name);
  return out;
}

Clause to_map(const Clause& c, MapKind kind) {
  const auto& vars = std::get<VarList>(c.args).vars;
  Clause out;
  out.name = "map";
  out.args = MapArgs{kind, vars};
  return out;
}

bool has_clause(const AccDirective& d, std::string_view name) {
  for (const auto& c : d.clauses)
    if (c.name == name) return true;
  return false;
}

}  // namespace

ClauseMapping map_clause(const Clause& c, OmpKind /*target_kind*/,
                         const MappingConfig& config) {
  ClauseMapping out;
  if (c.name == "copyin") {
    out.clauses.push_back(to_map(c, MapKind::To));
  } else if (c.name == "copyout") {
    out.clauses.push_back(to_map(c, MapKind::From));
  } else if (c.name == "copy") {
    out.clauses.push_back(to_map(c, MapKind::ToFrom));
  } else if (c.name == "create") {
    out.clauses.push_back(to_map(c, MapKind::Alloc));
  } else if (c.name == "num_gangs") {
    out.clauses.push_back(rename(c, "num_teams"));
  } else if (c.name == "num_workers") {
    out.clauses.push_back(rename(c, "num_threads"));
  } else if (c.name == "reduction" || c.name == "collapse" || c.name == "private" ||
             c.name == "firstprivate") {
    out.clauses.push_back(c);
  } else if (c.name == "gang" || c.name == "worker" || c.name == "vector") {
    // Absorbed: the parallelism levels are spelled by the construct kind.
  } else if (c.name == "vector_length") {
    if (config.drop_vector_length) {
      out.diagnostics.push_back(
          make_diagnostic("W102", "'" + clause_text(c) + "' has no counterpart"));
    } else {
      out.diagnostics.push_back(
          make_diagnostic("E102", "'" + clause_text(c) + "'"));
    }
  } else {
    assert(false && "clause escaped the parser's allowed set");
    out.diagnostics.push_back(make_diagnostic("E003", "'" + c.name + "'"));
  }
  return out;
}

namespace {

// Shared by ParallelLoop and the kernels-loop fallback.
DirectiveMapping map_combined_loop(const AccDirective& d, ConstructStack& stack,
                                   const MappingConfig& config, int line) {
  DirectiveMapping out;
  OmpDirective omp;
  omp.kind = OmpKind::TargetTeamsDistributeParallelLoopSimd;
  for (const auto& c : d.clauses) {
    ClauseMapping m = map_clause(c, omp.kind, config);
    for (auto& mc : m.clauses) omp.clauses.push_back(std::move(mc));
    for (auto& md : m.diagnostics) out.diagnostics.push_back(std::move(md));
  }
  if (config.inject_schedule) {
    assert(valid_injected_schedule(*config.inject_schedule));
    Clause sched;
    sched.name = "schedule";
    sched.args = *config.inject_schedule;
    out.diagnostics.push_back(
        make_diagnostic("I201", "'" + clause_text(sched) + "' appended"));
    omp.clauses.push_back(std::move(sched));
  }
  if (has_errors(out.diagnostics)) return out;
  stack.push({d.kind, omp.kind, line});
  out.directive = std::move(omp);
  return out;
}

DirectiveMapping map_plain_compute(const AccDirective& d, ConstructStack& stack,
                                   const MappingConfig& config, OmpKind target,
                                   int line) {
  DirectiveMapping out;
  OmpDirective omp;
  omp.kind = target;
  for (const auto& c : d.clauses) {
    ClauseMapping m = map_clause(c, omp.kind, config);
    for (auto& mc : m.clauses) omp.clauses.push_back(std::move(mc));
    for (auto& md : m.diagnostics) out.diagnostics.push_back(std::move(md));
  }
  if (has_errors(out.diagnostics)) return out;
  if (!is_end(target)) stack.push({d.kind, omp.kind, line});
  out.directive = std::move(omp);
  return out;
}

DirectiveMapping map_end(const AccDirective& d, ConstructStack& stack) {
  DirectiveMapping out;
  auto top = stack.top();
  bool matches = false;
  if (top) {
    switch (d.kind) {
      case AccKind::EndParallel:
        matches = top->acc_kind == AccKind::Parallel ||
                  top->acc_kind == AccKind::ParallelLoop;
        break;
      case AccKind::EndKernels:
        matches = top->acc_kind == AccKind::Kernels ||
                  top->acc_kind == AccKind::KernelsLoop;
        break;
      case AccKind::EndData:
        matches = top->acc_kind == AccKind::Data;
        break;
      default: break;
    }
  }
  if (!matches) {
    std::string detail = "'" + std::string(acc_construct_text(d.kind)) + "'";
    if (top)
      detail += " closes '" + std::string(acc_construct_text(top->acc_kind)) +
                "' opened at line " + std::to_string(top->line);
    else
      detail += " with no open construct";
    out.diagnostics.push_back(make_diagnostic("E103", detail));
    return out;
  }

  OmpDirective omp;
  switch (top->omp_kind) {
    case OmpKind::TargetTeams: omp.kind = OmpKind::EndTargetTeams; break;
    case OmpKind::TargetTeamsDistributeParallelLoopSimd:
      omp.kind = OmpKind::EndTargetTeamsDistributeParallelLoopSimd;
      break;
    case OmpKind::TargetData: omp.kind = OmpKind::EndTargetData; break;
    default:
      out.diagnostics.push_back(make_diagnostic(
          "E103", "open construct has no end form"));
      return out;
  }
  stack.pop();
  out.directive = std::move(omp);
  return out;
}

// Orphaned loop: gang partitions across teams; worker/vector partition
// within a team. A gang clause wins when levels are combined.
DirectiveMapping map_orphan_loop(const AccDirective& d, const MappingConfig& config) {
  DirectiveMapping out;
  OmpDirective omp;
  const bool gang = has_clause(d, "gang");
  const bool inner = has_clause(d, "worker") || has_clause(d, "vector");
  omp.kind = (!gang && inner) ? OmpKind::ParallelSimd : OmpKind::TeamsDistribute;
  if (gang)
    out.diagnostics.push_back(make_diagnostic(
        "W103", "review the intended teams-level worksharing"));
  for (const auto& c : d.clauses) {
    ClauseMapping m = map_clause(c, omp.kind, config);
    for (auto& mc : m.clauses) omp.clauses.push_back(std::move(mc));
    for (auto& md : m.diagnostics) out.diagnostics.push_back(std::move(md));
  }
  if (has_errors(out.diagnostics)) return out;
  out.directive = std::move(omp);
  return out;
}

}  // namespace

DirectiveMapping map_directive(const AccDirective& d, ConstructStack& stack,
                               const MappingConfig& config, Dialect /*dialect*/,
                               int line) {
  switch (d.kind) {
    case AccKind::Parallel:
      return map_plain_compute(d, stack, config, OmpKind::TargetTeams, line);
    case AccKind::ParallelLoop:
      return map_combined_loop(d, stack, config, line);
    case AccKind::Data:
      return map_plain_compute(d, stack, config, OmpKind::TargetData, line);
    case AccKind::Loop:
      return map_orphan_loop(d, config);
    case AccKind::Kernels:
    case AccKind::KernelsLoop: {
      if (config.kernels_policy == KernelsPolicy::Strict) {
        DirectiveMapping out;
        out.diagnostics.push_back(make_diagnostic(
            "E101", "rerun with the target-teams fallback to translate it"));
        return out;
      }
      DirectiveMapping out =
          d.kind == AccKind::Kernels
              ? map_plain_compute(d, stack, config, OmpKind::TargetTeams, line)
              : map_combined_loop(d, stack, config, line);
      out.diagnostics.insert(
          out.diagnostics.begin(),
          make_diagnostic("W101", "explicit parallelism may differ from the "
                                  "compiler's kernels partitioning"));
      return out;
    }
    case AccKind::EndParallel:
    case AccKind::EndKernels:
    case AccKind::EndData:
      return map_end(d, stack);
  }
  DirectiveMapping out;
  out.diagnostics.push_back(make_diagnostic("E002", "unhandled construct"));
  return out;
}

}  // namespace acc2omp
