#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "acc2omp/source.hpp"

namespace acc2omp {

enum class AccKind {
  Parallel,
  ParallelLoop,
  Kernels,
  KernelsLoop,
  Loop,
  Data,
  EndParallel,
  EndKernels,
  EndData,
};

enum class OmpKind {
  TargetTeams,
  TargetTeamsDistributeParallelLoopSimd,
  TeamsDistribute,
  ParallelSimd,
  TargetData,
  EndTargetTeams,
  EndTargetTeamsDistributeParallelLoopSimd,
  EndTargetData,
};

enum class ReductionOp { Add, Mul, Max, Min, Iand, Ior, Ieor, And, Or };

enum class MapKind { To, From, ToFrom, Alloc };

struct VarList {
  std::vector<std::string> vars;
  bool operator==(const VarList&) const = default;
};

struct ReductionArgs {
  ReductionOp op = ReductionOp::Add;
  std::vector<std::string> vars;
  bool operator==(const ReductionArgs&) const = default;
};

/// Verbatim expression text, outer whitespace trimmed; never evaluated.
struct IntExpr {
  std::string text;
  bool operator==(const IntExpr&) const = default;
};

struct MapArgs {
  MapKind kind = MapKind::To;
  std::vector<std::string> vars;
  bool operator==(const MapArgs&) const = default;
};

struct SchedulePair {
  std::string kind;
  std::string chunk;  // empty = no chunk expression
  bool operator==(const SchedulePair&) const = default;
};

using ClauseArgs =
    std::variant<std::monostate, VarList, ReductionArgs, IntExpr, MapArgs, SchedulePair>;

struct Clause {
  std::string name;  // lowercase
  ClauseArgs args;
  bool operator==(const Clause&) const = default;
};

struct AccDirective {
  AccKind kind = AccKind::Parallel;
  std::vector<Clause> clauses;
  bool operator==(const AccDirective&) const = default;
};

struct OmpDirective {
  OmpKind kind = OmpKind::TargetTeams;
  std::vector<Clause> clauses;
  bool operator==(const OmpDirective&) const = default;
};

bool is_end(AccKind k);
bool is_end(OmpKind k);

std::string_view reduction_op_text(ReductionOp op);
std::string_view map_kind_text(MapKind k);

std::string_view acc_construct_text(AccKind k);
/// Combined loop kinds spell "do" in FortranFree and "for" in C.
std::string omp_construct_text(OmpKind k, Dialect dialect);

/// Canonical clause spelling, e.g. "reduction(max:err)" or "map(to:f)".
std::string clause_text(const Clause& c);

}  // namespace acc2omp
