#pragma once

#include <optional>
#include <vector>

#include "acc2omp/diagnostics.hpp"
#include "acc2omp/directive.hpp"

namespace acc2omp {

enum class KernelsPolicy {
  Strict,       // kernels constructs are an error (E101)
  TargetTeams,  // translate like parallel / parallel loop, warn (W101)
};

struct MappingConfig {
  KernelsPolicy kernels_policy = KernelsPolicy::Strict;
  /// Appended to combined loop constructs when set (I201). The kind must
  /// be static/dynamic/guided with a nonempty chunk.
  std::optional<SchedulePair> inject_schedule;
  /// vector_length has no counterpart: true drops it with W102, false
  /// makes it a hard error (E102).
  bool drop_vector_length = true;
  bool fail_on_warning = false;
};

bool valid_injected_schedule(const SchedulePair& s);

/// Open constructs in the unit being translated. End directives name only
/// the base construct, so the mapped opener must be remembered to emit the
/// full OpenMP end form.
struct ConstructFrame {
  AccKind acc_kind = AccKind::Parallel;
  OmpKind omp_kind = OmpKind::TargetTeams;
  int line = 0;  // source line of the opener, 0 when unknown
};

class ConstructStack {
 public:
  void push(ConstructFrame frame) { frames_.push_back(frame); }
  void pop() { frames_.pop_back(); }
  std::optional<ConstructFrame> top() const {
    if (frames_.empty()) return std::nullopt;
    return frames_.back();
  }
  bool empty() const { return frames_.empty(); }
  std::size_t depth() const { return frames_.size(); }

 private:
  std::vector<ConstructFrame> frames_;
};

struct ClauseMapping {
  std::vector<Clause> clauses;  // possibly empty when absorbed or dropped
  std::vector<Diagnostic> diagnostics;
};

/// Fixed clause rule set: copyin/copyout/copy/create become map(to/from/
/// tofrom/alloc), num_gangs -> num_teams, num_workers -> num_threads,
/// reduction/collapse/private/firstprivate unchanged, gang/worker/vector
/// absorbed into the construct kind, vector_length dropped (W102/E102).
ClauseMapping map_clause(const Clause& c, OmpKind target_kind,
                         const MappingConfig& config);

struct DirectiveMapping {
  std::optional<OmpDirective> directive;
  std::vector<Diagnostic> diagnostics;
};

/// One-to-one construct mapping. Openers push onto the stack, end
/// directives pop and take the end form of the mapped opener. Never
/// returns (no directive, no error): a missing directive is always
/// accompanied by at least one Error diagnostic. `line` is recorded in
/// pushed frames for end-mismatch messages.
DirectiveMapping map_directive(const AccDirective& d, ConstructStack& stack,
                               const MappingConfig& config, Dialect dialect,
                               int line = 0);

}  // namespace acc2omp
