// Acceptance suite: runs each top-level criterion at its pinned tolerance
// and prints one pass/fail line per criterion. Exits nonzero when any fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "acc2omp/corpus.hpp"
#include "acc2omp/emit.hpp"
#include "acc2omp/jacobi.hpp"
#include "acc2omp/parse.hpp"
#include "acc2omp/translate.hpp"
#include "acc2omp/verify.hpp"
#include "support/ast_gen.hpp"
#include "support/dense_laplace.hpp"

#ifndef ACC2OMP_CLI_PATH
#error "ACC2OMP_CLI_PATH must point at the built binary"
#endif

namespace fs = std::filesystem;
using namespace acc2omp;

namespace {

struct Criterion {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

SourceUnit fortran(const std::string& text, const char* name = "mem.f90") {
  return make_unit(text, Dialect::FortranFree, name);
}

MappingConfig inject_static_1() {
  MappingConfig config;
  config.inject_schedule = SchedulePair{"static", "1"};
  return config;
}

// --------------------------------------------------------------------------
// 1. Golden-pair translation, runtime < 1 s.

void criterion_golden_pair(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  const JacobiParams params{8192, 8192, 1e-3, 240, BoundaryKind::HotTop};

  const std::string acc_text = generate_variant(Variant::AccData, params);
  TranslateResult translated =
      translate_unit(fortran(acc_text, "laplace_acc.f90"), inject_static_1());
  c.expect(translated.text.has_value(), "translation produced no output");
  if (!translated.text) return;

  EquivalenceReport report = verify_pair(
      fortran(*translated.text, "laplace_acc.omp.f90"),
      fortran(generate_variant(Variant::OmpData, params), "laplace_omp.f90"),
      inject_static_1());
  c.expect(report.match, "pair verdict is not Match");
  c.expect(report.positions == 6,
           "expected 6 directive positions, got " + std::to_string(report.positions));
  c.expect(report.mismatches == 0,
           std::to_string(report.mismatches) + " mismatched positions");

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(seconds < 1.0, "runtime " + std::to_string(seconds) + " s exceeds 1 s");
}

// --------------------------------------------------------------------------
// 2. Table conformance, exact.

void criterion_table(Criterion& c) {
  const MappingConfig defaults;  // strict kernels, drop vector_length

  const std::pair<const char*, OmpKind> construct_rows[] = {
      {"parallel", OmpKind::TargetTeams},
      {"parallel loop gang worker vector",
       OmpKind::TargetTeamsDistributeParallelLoopSimd},
      {"data", OmpKind::TargetData},
  };
  for (const auto& [text, kind] : construct_rows) {
    ConstructStack stack;
    DirectiveMapping out = map_directive(parse_acc(text, Dialect::FortranFree), stack,
                                         defaults, Dialect::FortranFree);
    c.expect(out.directive.has_value() && out.directive->kind == kind &&
                 out.directive->clauses.empty(),
             std::string("construct row '") + text + "'");
  }

  const std::pair<Clause, Clause> clause_rows[] = {
      {Clause{"create", VarList{{"v"}}}, Clause{"map", MapArgs{MapKind::Alloc, {"v"}}}},
      {Clause{"copy", VarList{{"v"}}}, Clause{"map", MapArgs{MapKind::ToFrom, {"v"}}}},
      {Clause{"copyin", VarList{{"v"}}}, Clause{"map", MapArgs{MapKind::To, {"v"}}}},
      {Clause{"copyout", VarList{{"v"}}}, Clause{"map", MapArgs{MapKind::From, {"v"}}}},
      {Clause{"num_gangs", IntExpr{"8"}}, Clause{"num_teams", IntExpr{"8"}}},
      {Clause{"num_workers", IntExpr{"4"}}, Clause{"num_threads", IntExpr{"4"}}},
      {Clause{"reduction", ReductionArgs{ReductionOp::Max, {"v"}}},
       Clause{"reduction", ReductionArgs{ReductionOp::Max, {"v"}}}},
      {Clause{"collapse", IntExpr{"2"}}, Clause{"collapse", IntExpr{"2"}}},
      {Clause{"private", VarList{{"v"}}}, Clause{"private", VarList{{"v"}}}},
      {Clause{"firstprivate", VarList{{"v"}}}, Clause{"firstprivate", VarList{{"v"}}}},
  };
  for (const auto& [input, expected] : clause_rows) {
    ClauseMapping out =
        map_clause(input, OmpKind::TargetTeamsDistributeParallelLoopSimd, defaults);
    c.expect(out.clauses.size() == 1 && out.clauses[0] == expected &&
                 out.diagnostics.empty(),
             "clause row '" + input.name + "'");
  }

  // The two no-counterpart rows.
  ConstructStack stack;
  DirectiveMapping kernels = map_directive(parse_acc("kernels", Dialect::FortranFree),
                                           stack, defaults, Dialect::FortranFree);
  c.expect(!kernels.directive.has_value() && kernels.diagnostics.size() == 1 &&
               kernels.diagnostics[0].code == "E101",
           "kernels row must produce E101 under strict policy");

  ClauseMapping vl = map_clause(Clause{"vector_length", IntExpr{"128"}},
                                OmpKind::TargetTeamsDistributeParallelLoopSimd, defaults);
  c.expect(vl.clauses.empty() && vl.diagnostics.size() == 1 &&
               vl.diagnostics[0].code == "W102",
           "vector_length row must produce W102 under defaults");
}

// --------------------------------------------------------------------------
// 3. Peak FLOPS, 0.01% against the documented 7.065 TFLOPS figure.

void criterion_peak_flops(Criterion& c) {
  const double flops = peak_flops({1.38e9, 5120, 1.0});
  c.expect(flops == 7.0656e12, "expected exactly 7.0656e12, got " +
                                   std::to_string(flops));
  c.expect(std::fabs(flops - 7.065e12) / 7.065e12 < 1e-4,
           "more than 0.01% from 7.065e12");

  std::mt19937 rng(90210);
  std::uniform_real_distribution<double> clock(1e6, 5e9);
  std::uniform_int_distribution<int> cores(1, 100000);
  std::uniform_real_distribution<double> fpc(0.25, 8.0);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int trial = 0; trial < 100; ++trial) {
    PeakSpec spec{clock(rng), cores(rng), fpc(rng)};
    const double k = scale(rng);
    const double lhs = peak_flops({k * spec.clock_hz, spec.cores, spec.flop_per_cycle});
    const double rhs = k * peak_flops(spec);
    if (std::fabs(lhs - rhs) > 1e-12 * std::fabs(rhs)) {
      c.expect(false, "homogeneity violated at trial " + std::to_string(trial));
      return;
    }
  }
}

// --------------------------------------------------------------------------
// 4. Numerical oracle over all grids in {4..16}^2, runtime < 10 s.

void criterion_oracle(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  const double tol = 1e-10;
  for (int nx = 4; nx <= 16; ++nx) {
    for (int ny = 4; ny <= 16; ++ny) {
      JacobiField field = jacobi_solve({nx, ny, tol, 1000000, BoundaryKind::HotTop});
      if (field.max_err > tol) {
        c.expect(false, "no convergence at " + std::to_string(nx) + "x" +
                            std::to_string(ny));
        continue;
      }
      auto dense = testsupport::dense_laplace_solve(nx, ny);
      double err = 0.0;
      double residual = 0.0;
      bool in_range = true;
      for (int j = 1; j < ny - 1; ++j) {
        for (int i = 1; i < nx - 1; ++i) {
          const double v = field.at(i, j);
          err = std::max(err,
                         std::fabs(v - dense[static_cast<std::size_t>(i + nx * j)]));
          const double avg = 0.25 * (field.at(i + 1, j) + field.at(i - 1, j) +
                                     field.at(i, j + 1) + field.at(i, j - 1));
          residual = std::max(residual, std::fabs(v - avg));
          in_range = in_range && v >= 0.0 && v <= 1.0;
        }
      }
      const std::string grid = std::to_string(nx) + "x" + std::to_string(ny);
      if (err > 1e-8) c.expect(false, "direct-solve deviation " + std::to_string(err) + " at " + grid);
      if (residual > 2.0 * tol) c.expect(false, "residual bound violated at " + grid);
      if (!in_range) c.expect(false, "maximum principle violated at " + grid);
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(seconds < 10.0, "runtime " + std::to_string(seconds) + " s exceeds 10 s");
}

// --------------------------------------------------------------------------
// 5. Property suites, exact.

std::string rescan_payload(const std::vector<std::string>& lines, Dialect dialect,
                           bool& ok) {
  std::string text;
  for (const auto& l : lines) text += l + "\n";
  ScanResult scan = scan_directives(make_unit(text, dialect));
  if (!scan.diagnostics.empty() || scan.directives.size() != 1) {
    ok = false;
    return {};
  }
  return scan.directives[0].payload;
}

void criterion_properties(Criterion& c) {
  // Parse/emit round trip over generated ASTs, both dialects, three widths.
  std::mt19937 rng(600613);
  int round_trips = 0;
  for (int trial = 0; trial < 600; ++trial) {
    OmpDirective omp = testsupport::gen_omp_directive(rng);
    AccDirective acc = testsupport::gen_acc_directive(rng);
    for (Dialect dialect : {Dialect::FortranFree, Dialect::C}) {
      for (int width : {40, 80, 132}) {
        bool ok = true;
        std::string payload = rescan_payload(emit_omp(omp, dialect, " ", width),
                                             dialect, ok);
        if (!ok || !(parse_omp(payload, dialect) == omp)) {
          c.expect(false, "omp round trip failed at trial " + std::to_string(trial));
          return;
        }
        payload = rescan_payload(emit_acc(acc, dialect, "", width), dialect, ok);
        if (!ok || !(parse_acc(payload, dialect) == acc)) {
          c.expect(false, "acc round trip failed at trial " + std::to_string(trial));
          return;
        }
        round_trips += 2;
      }
    }
  }
  c.expect(round_trips >= 1000, "fewer than 1000 round-trip cases");

  // Idempotence and byte preservation over the full generated corpus.
  const JacobiParams sizes[] = {{8, 8, 1e-6, 500, BoundaryKind::HotTop},
                                {64, 48, 1e-8, 9999, BoundaryKind::HotTop}};
  for (const JacobiParams& params : sizes) {
    for (Variant v : {Variant::Serial, Variant::AccNoData, Variant::AccData,
                      Variant::OmpNoData, Variant::OmpData}) {
      const std::string name(variant_name(v));
      const std::string text = generate_variant(v, params);
      SourceUnit unit = fortran(text);

      TranslateResult once = translate_unit(unit, inject_static_1());
      if (!once.text) {
        c.expect(false, "translation failed for " + name);
        continue;
      }
      TranslateResult twice = translate_unit(fortran(*once.text), inject_static_1());
      c.expect(twice.text.has_value() && *twice.text == *once.text,
               "translation not idempotent for " + name);

      // Byte preservation: revert every edit and compare to the input.
      RewritePlan plan = plan_translation(unit, inject_static_1());
      std::string output = apply_plan(unit, plan);
      SourceUnit out_unit = fortran(output);
      std::vector<std::string> restored;
      std::size_t out_row = 0, in_row = 0;
      for (const Edit& edit : plan.edits) {
        while (in_row + 1 < static_cast<std::size_t>(edit.line.start_line)) {
          restored.push_back(out_unit.lines[out_row++]);
          ++in_row;
        }
        for (int k = 0; k < edit.line.line_span; ++k)
          restored.push_back(unit.lines[in_row++]);
        out_row += edit.replacement.size();
      }
      while (out_row < out_unit.lines.size())
        restored.push_back(out_unit.lines[out_row++]);
      SourceUnit rebuilt = unit;
      rebuilt.lines = restored;
      c.expect(serialize(rebuilt) == text, "byte preservation failed for " + name);
    }
  }

  // Mapping totality over the generated directive space.
  const MappingConfig configs[] = {
      {},
      {KernelsPolicy::TargetTeams, std::nullopt, true, false},
      {KernelsPolicy::Strict, SchedulePair{"static", "1"}, false, false},
      {KernelsPolicy::TargetTeams, SchedulePair{"guided", "n"}, false, true},
  };
  for (int trial = 0; trial < 4000; ++trial) {
    AccDirective d = testsupport::gen_acc_directive(rng);
    const MappingConfig& config = configs[trial % 4];
    ConstructStack stack;
    if (trial % 3 == 0)
      map_directive(parse_acc("parallel loop", Dialect::FortranFree), stack, config,
                    Dialect::FortranFree);
    if (trial % 5 == 0)
      map_directive(parse_acc("data", Dialect::FortranFree), stack, config,
                    Dialect::FortranFree);
    DirectiveMapping out = map_directive(d, stack, config, Dialect::FortranFree);
    if (!out.directive.has_value() && !has_errors(out.diagnostics)) {
      c.expect(false, "silent drop at trial " + std::to_string(trial));
      return;
    }
  }
}

// --------------------------------------------------------------------------
// 6. CLI contract over the fixture matrix.

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

RunResult run_cli(const std::string& args, const fs::path& dir) {
  const fs::path out_file = dir / "acc_stdout.txt";
  const fs::path err_file = dir / "acc_stderr.txt";
  const std::string cmd = std::string(ACC2OMP_CLI_PATH) + " " + args + " > " +
                          out_file.string() + " 2> " + err_file.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  return r;
}

void criterion_cli(Criterion& c) {
  std::mt19937_64 rng(std::random_device{}());
  const fs::path dir =
      fs::temp_directory_path() / ("acc2omp_acceptance_" + std::to_string(rng()));
  fs::create_directories(dir);
  const JacobiParams params{8, 8, 1e-6, 500, BoundaryKind::HotTop};

  // Exit 0: clean translation, identity translation, matching verification.
  spit(dir / "acc.f90", generate_variant(Variant::AccData, params));
  spit(dir / "omp.f90", generate_variant(Variant::OmpData, params));
  c.expect(run_cli("translate " + (dir / "acc.f90").string() +
                       " --inject-schedule=static,1",
                   dir)
                   .exit_code == 0,
           "clean translate must exit 0");
  c.expect(fs::exists(dir / "acc.omp.f90"), "sibling output missing");
  spit(dir / "plain.f90", "program p\nend\n");
  c.expect(run_cli("translate " + (dir / "plain.f90").string(), dir).exit_code == 0,
           "identity translate must exit 0");
  c.expect(slurp(dir / "plain.omp.f90") == "program p\nend\n",
           "identity translate must preserve bytes");
  c.expect(run_cli("verify " + (dir / "acc.omp.f90").string() + " " +
                       (dir / "omp.f90").string(),
                   dir)
                   .exit_code == 0,
           "matching verify must exit 0");

  // Exit 1: error diagnostics, mismatched verify, fail-on-warning.
  spit(dir / "kern.f90", "!$acc kernels\nx=1\n!$acc end kernels\n");
  RunResult kern = run_cli(
      "translate " + (dir / "kern.f90").string() + " --diag=json", dir);
  c.expect(kern.exit_code == 1, "strict kernels must exit 1");
  c.expect(!fs::exists(dir / "kern.omp.f90"), "failed translate must not write output");
  try {
    auto diags = nlohmann::json::parse(kern.err);
    bool schema_ok = diags.is_array() && !diags.empty();
    if (schema_ok)
      for (const auto& d : diags)
        schema_ok = schema_ok && d.contains("file") && d.contains("line") &&
                    d.contains("severity") && d.contains("code") &&
                    d.contains("message") && d.contains("excerpt");
    c.expect(schema_ok, "json diagnostic schema mismatch");
    c.expect(schema_ok && diags[0]["code"] == "E101", "first diagnostic must be E101");
  } catch (const std::exception&) {
    c.expect(false, "json diagnostics failed to parse");
  }
  c.expect(run_cli("verify " + (dir / "acc.f90").string() + " " +
                       (dir / "omp.f90").string(),
                   dir)
                   .exit_code == 1,
           "mismatching verify must exit 1");
  spit(dir / "warn.f90", "!$acc parallel loop vector_length(8)\n!$acc end parallel\n");
  c.expect(run_cli("translate " + (dir / "warn.f90").string() + " --fail-on-warning",
                   dir)
                   .exit_code == 1,
           "fail-on-warning must exit 1 on W102");

  // No partial output on a mid-file error.
  spit(dir / "broken.f90",
       "!$acc data copyin(f)\nx=1\n!$acc parallel loop froz(1)\n!$acc end data\n");
  c.expect(run_cli("translate " + (dir / "broken.f90").string(), dir).exit_code == 1,
           "broken fixture must exit 1");
  c.expect(!fs::exists(dir / "broken.omp.f90"), "partial output file must not exist");

  // Exit 2: usage and IO errors.
  c.expect(run_cli("", dir).exit_code == 2, "missing subcommand must exit 2");
  c.expect(run_cli("translate " + (dir / "absent.f90").string(), dir).exit_code == 2,
           "missing input must exit 2");
  c.expect(run_cli("verify " + (dir / "acc.f90").string(), dir).exit_code == 2,
           "verify with one input must exit 2");
  c.expect(run_cli("translate --bogus x.f90", dir).exit_code == 2,
           "unknown flag must exit 2");

  fs::remove_all(dir);
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<void(Criterion&)> run;
  };
  const Entry entries[] = {
      {"1 golden-pair translation matches at all six positions", criterion_golden_pair},
      {"2 directive and clause table conformance", criterion_table},
      {"3 theoretical peak arithmetic rate", criterion_peak_flops},
      {"4 solver agrees with the dense direct-solve oracle", criterion_oracle},
      {"5 round-trip, idempotence, byte-preservation, totality", criterion_properties},
      {"6 cli exit codes, json schema, all-or-nothing output", criterion_cli},
  };

  int failed = 0;
  for (const Entry& entry : entries) {
    Criterion c;
    try {
      entry.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("unhandled exception: ") + e.what());
    }
    if (c.failures.empty()) {
      std::cout << "PASS criterion " << entry.name << "\n";
    } else {
      ++failed;
      std::cout << "FAIL criterion " << entry.name << "\n";
      for (const std::string& f : c.failures) std::cout << "     - " << f << "\n";
    }
  }
  if (failed) std::cout << failed << " criterion(s) failed\n";
  return failed == 0 ? 0 : 1;
}
