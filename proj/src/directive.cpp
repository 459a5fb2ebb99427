#include "acc2omp/directive.hpp"

namespace acc2omp {

bool is_end(AccKind k) {
  return k == AccKind::EndParallel || k == AccKind::EndKernels || k == AccKind::EndData;
}

bool is_end(OmpKind k) {
  return k == OmpKind::EndTargetTeams ||
         k == OmpKind::EndTargetTeamsDistributeParallelLoopSimd ||
         k == OmpKind::EndTargetData;
}

std::string_view reduction_op_text(ReductionOp op) {
  switch (op) {
    case ReductionOp::Add: return "+";
    case ReductionOp::Mul: return "*";
    case ReductionOp::Max: return "max";
    case ReductionOp::Min: return "min";
    case ReductionOp::Iand: return "iand";
    case ReductionOp::Ior: return "ior";
    case ReductionOp::Ieor: return "ieor";
    case ReductionOp::And: return ".and.";
    case ReductionOp::Or: return ".or.";
  }
  return "?";
}

std::string_view map_kind_text(MapKind k) {
  switch (k) {
    case MapKind::To: return "to";
    case MapKind::From: return "from";
    case MapKind::ToFrom: return "tofrom";
    case MapKind::Alloc: return "alloc";
  }
  return "?";
}

std::string_view acc_construct_text(AccKind k) {
  switch (k) {
    case AccKind::Parallel: return "parallel";
    case AccKind::ParallelLoop: return "parallel loop";
    case AccKind::Kernels: return "kernels";
    case AccKind::KernelsLoop: return "kernels loop";
    case AccKind::Loop: return "loop";
    case AccKind::Data: return "data";
    case AccKind::EndParallel: return "end parallel";
    case AccKind::EndKernels: return "end kernels";
    case AccKind::EndData: return "end data";
  }
  return "?";
}

std::string omp_construct_text(OmpKind k, Dialect dialect) {
  const std::string loop_word = dialect == Dialect::C ? "for" : "do";
  switch (k) {
    case OmpKind::TargetTeams: return "target teams";
    case OmpKind::TargetTeamsDistributeParallelLoopSimd:
      return "target teams distribute parallel " + loop_word + " simd";
    case OmpKind::TeamsDistribute: return "teams distribute";
    case OmpKind::ParallelSimd: return "parallel " + loop_word + " simd";
    case OmpKind::TargetData: return "target data";
    case OmpKind::EndTargetTeams: return "end target teams";
    case OmpKind::EndTargetTeamsDistributeParallelLoopSimd:
      return "end target teams distribute parallel " + loop_word + " simd";
    case OmpKind::EndTargetData: return "end target data";
  }
  return "?";
}

namespace {

std::string join_vars(const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ',';
    out += vars[i];
  }
  return out;
}

}  // namespace

std::string clause_text(const Clause& c) {
  struct Renderer {
    const std::string& name;
    std::string operator()(std::monostate) const { return name; }
    std::string operator()(const VarList& v) const {
      return name + "(" + join_vars(v.vars) + ")";
    }
    std::string operator()(const ReductionArgs& r) const {
      return name + "(" + std::string(reduction_op_text(r.op)) + ":" +
             join_vars(r.vars) + ")";
    }
    std::string operator()(const IntExpr& e) const { return name + "(" + e.text + ")"; }
    std::string operator()(const MapArgs& m) const {
      return name + "(" + std::string(map_kind_text(m.kind)) + ":" +
             join_vars(m.vars) + ")";
    }
    std::string operator()(const SchedulePair& s) const {
      std::string out = name + "(" + s.kind;
      if (!s.chunk.empty()) out += "," + s.chunk;
      return out + ")";
    }
  };
  return std::visit(Renderer{c.name}, c.args);
}

}  // namespace acc2omp
