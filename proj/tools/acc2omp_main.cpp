#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "acc2omp/corpus.hpp"
#include "acc2omp/emit.hpp"
#include "acc2omp/jacobi.hpp"
#include "acc2omp/translate.hpp"
#include "acc2omp/verify.hpp"

namespace {

using acc2omp::Diagnostic;
using acc2omp::MappingConfig;
using acc2omp::SourceUnit;

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string dialect;
  std::string kernels = "strict";
  std::string inject_schedule;
  bool keep_vector_length_error = false;
  bool fail_on_warning = false;
  std::string diag_format = "human";
};

void add_common_flags(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("--dialect", opts->dialect, "Source dialect")
      ->check(CLI::IsMember({"fortran", "c"}));
  cmd->add_option("--kernels", opts->kernels, "Policy for kernels constructs")
      ->check(CLI::IsMember({"strict", "target-teams"}));
  cmd->add_option("--inject-schedule", opts->inject_schedule,
                  "Append schedule(<kind>,<chunk>) to combined loop constructs");
  cmd->add_flag("--keep-vector-length-error", opts->keep_vector_length_error,
                "Treat vector_length as an error instead of dropping it");
  cmd->add_flag("--fail-on-warning", opts->fail_on_warning,
                "Exit nonzero when warnings were produced");
  cmd->add_option("--diag", opts->diag_format, "Diagnostic output format")
      ->check(CLI::IsMember({"human", "json"}));
}

// Returns nullopt (after reporting) when the flags are inconsistent.
std::optional<MappingConfig> build_config(const CommonOptions& opts) {
  MappingConfig config;
  config.kernels_policy = opts.kernels == "target-teams"
                              ? acc2omp::KernelsPolicy::TargetTeams
                              : acc2omp::KernelsPolicy::Strict;
  config.drop_vector_length = !opts.keep_vector_length_error;
  config.fail_on_warning = opts.fail_on_warning;
  if (!opts.inject_schedule.empty()) {
    auto comma = opts.inject_schedule.find(',');
    acc2omp::SchedulePair pair;
    pair.kind = opts.inject_schedule.substr(0, comma);
    if (comma != std::string::npos) pair.chunk = opts.inject_schedule.substr(comma + 1);
    if (!acc2omp::valid_injected_schedule(pair)) {
      std::cerr << "acc2omp: --inject-schedule needs <static|dynamic|guided>,<chunk>\n";
      return std::nullopt;
    }
    config.inject_schedule = std::move(pair);
  }
  return config;
}

std::optional<acc2omp::Dialect> dialect_override(const CommonOptions& opts) {
  if (opts.dialect == "fortran") return acc2omp::Dialect::FortranFree;
  if (opts.dialect == "c") return acc2omp::Dialect::C;
  return std::nullopt;
}

void emit_diagnostics(const std::vector<Diagnostic>& diags, const std::string& format) {
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const Diagnostic& d : diags) {
      arr.push_back({{"file", d.file},
                     {"line", d.line},
                     {"severity", std::string(acc2omp::severity_name(d.severity))},
                     {"code", d.code},
                     {"message", d.message},
                     {"excerpt", d.excerpt}});
    }
    std::cerr << arr.dump(2) << "\n";
    return;
  }
  for (const Diagnostic& d : diags) std::cerr << acc2omp::render_human(d) << "\n";
}

int exit_code_for(const std::vector<Diagnostic>& diags, const MappingConfig& config) {
  if (acc2omp::has_errors(diags)) return kExitDiagnostics;
  if (config.fail_on_warning && acc2omp::has_warnings(diags)) return kExitDiagnostics;
  return kExitOk;
}

std::filesystem::path sibling_path(const std::filesystem::path& input) {
  std::filesystem::path out = input;
  out.replace_filename(input.stem().string() + ".omp" + input.extension().string());
  return out;
}

bool write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) {
    std::cerr << "acc2omp: cannot write " << path << "\n";
    return false;
  }
  return true;
}

int run_translate(const std::vector<std::string>& inputs, const CommonOptions& opts,
                  const std::string& output_mode) {
  auto config = build_config(opts);
  if (!config) return kExitUsage;
  if (output_mode == "stdout" && inputs.size() > 1) {
    std::cerr << "acc2omp: --output=stdout takes a single input file\n";
    return kExitUsage;
  }

  std::vector<Diagnostic> all_diags;
  for (const std::string& input : inputs) {
    SourceUnit unit;
    try {
      unit = acc2omp::load_unit(input, dialect_override(opts));
    } catch (const std::exception& e) {
      std::cerr << "acc2omp: " << e.what() << "\n";
      return kExitUsage;
    }

    acc2omp::TranslateResult result = acc2omp::translate_unit(unit, *config);
    all_diags.insert(all_diags.end(), result.diagnostics.begin(),
                     result.diagnostics.end());
    if (!result.text) continue;  // errors: nothing is written for this unit

    if (output_mode == "stdout") {
      std::cout << *result.text;
    } else if (output_mode == "sibling") {
      if (!write_file(sibling_path(input), *result.text)) return kExitUsage;
    } else {  // in-place
      std::error_code ec;
      std::filesystem::copy_file(input, input + ".bak",
                                 std::filesystem::copy_options::overwrite_existing, ec);
      if (ec) {
        std::cerr << "acc2omp: cannot back up " << input << ": " << ec.message() << "\n";
        return kExitUsage;
      }
      if (!write_file(input, *result.text)) return kExitUsage;
    }
  }

  emit_diagnostics(all_diags, opts.diag_format);
  return exit_code_for(all_diags, *config);
}

int run_verify(const std::vector<std::string>& inputs, const CommonOptions& opts) {
  auto config = build_config(opts);
  if (!config) return kExitUsage;

  SourceUnit acc_unit, omp_unit;
  try {
    acc_unit = acc2omp::load_unit(inputs[0], dialect_override(opts));
    omp_unit = acc2omp::load_unit(inputs[1], dialect_override(opts));
  } catch (const std::exception& e) {
    std::cerr << "acc2omp: " << e.what() << "\n";
    return kExitUsage;
  }

  acc2omp::EquivalenceReport report = acc2omp::verify_pair(acc_unit, omp_unit, *config);
  for (const auto& pos : report.results) {
    std::cout << "position " << pos.position + 1 << ": "
              << (pos.match ? "match" : "MISMATCH") << "\n";
    if (!pos.match) {
      std::cout << "  left  (line " << pos.acc_line << "): " << pos.acc_rendered << "\n";
      std::cout << "  right (line " << pos.omp_line << "): " << pos.omp_rendered << "\n";
      for (const auto& c : pos.only_in_acc) std::cout << "  only left:  " << c << "\n";
      for (const auto& c : pos.only_in_omp) std::cout << "  only right: " << c << "\n";
    }
  }
  std::cout << (report.match ? "MATCH" : "MISMATCH") << " (" << report.positions
            << " positions, " << report.mismatches << " mismatches)\n";

  emit_diagnostics(report.diagnostics, opts.diag_format);
  if (!report.match) return kExitDiagnostics;
  return exit_code_for(report.diagnostics, *config);
}

int run_corpus(const std::string& variant_name, const acc2omp::JacobiParams& params,
               const std::string& out_path) {
  auto variant = acc2omp::variant_from_name(variant_name);
  if (!variant) {
    std::cerr << "acc2omp: unknown variant '" << variant_name << "'\n";
    return kExitUsage;
  }
  std::string text;
  try {
    text = acc2omp::generate_variant(*variant, params);
  } catch (const std::exception& e) {
    std::cerr << "acc2omp: " << e.what() << "\n";
    return kExitUsage;
  }
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  return write_file(out_path, text) ? kExitOk : kExitUsage;
}

int run_flops(double clock_ghz, int cores, double flop_per_cycle) {
  double flops = 0.0;
  try {
    flops = acc2omp::peak_flops({clock_ghz * 1e9, cores, flop_per_cycle});
  } catch (const std::exception& e) {
    std::cerr << "acc2omp: " << e.what() << "\n";
    return kExitUsage;
  }
  std::printf("peak: %.6g FLOPS (%.6g TFLOPS)\n", flops, flops / 1e12);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"OpenACC to OpenMP directive translator"};
  app.require_subcommand(1);

  CommonOptions translate_opts;
  std::vector<std::string> translate_inputs;
  std::string output_mode = "sibling";
  CLI::App* translate =
      app.add_subcommand("translate", "Translate OpenACC directives to OpenMP");
  translate->add_option("inputs", translate_inputs, "Input source files")
      ->required()
      ->expected(-1);
  translate->add_option("--output", output_mode, "Where translated text goes")
      ->check(CLI::IsMember({"stdout", "sibling", "in-place"}));
  add_common_flags(translate, &translate_opts);

  CommonOptions verify_opts;
  std::vector<std::string> verify_inputs;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check an OpenACC/OpenMP file pair for directive equivalence");
  verify->add_option("inputs", verify_inputs, "The OpenACC and OpenMP files")
      ->required()
      ->expected(2);
  add_common_flags(verify, &verify_opts);

  std::string variant;
  std::string corpus_out;
  acc2omp::JacobiParams params{128, 128, 1e-3, 10000, acc2omp::BoundaryKind::HotTop};
  CLI::App* corpus =
      app.add_subcommand("corpus", "Generate a solver mini-application variant");
  corpus->add_option("--variant", variant, "serial|acc-nodata|acc-data|omp-nodata|omp-data")
      ->required();
  corpus->add_option("--nx", params.nx, "Grid points in x (boundary included)");
  corpus->add_option("--ny", params.ny, "Grid points in y (boundary included)");
  corpus->add_option("--tolerance", params.tolerance, "Convergence threshold");
  corpus->add_option("--max-iter", params.max_iter, "Iteration cap");
  corpus->add_option("--out", corpus_out, "Output path (default: stdout)");

  double clock_ghz = 0.0, flop_per_cycle = 1.0;
  int cores = 0;
  CLI::App* flops = app.add_subcommand("flops", "Theoretical peak arithmetic rate");
  flops->add_option("--clock-ghz", clock_ghz, "Clock speed in GHz")->required();
  flops->add_option("--cores", cores, "Core count")->required();
  flops->add_option("--flop-per-cycle", flop_per_cycle, "FLOP per core per cycle")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (translate->parsed()) return run_translate(translate_inputs, translate_opts, output_mode);
  if (verify->parsed()) return run_verify(verify_inputs, verify_opts);
  if (corpus->parsed()) return run_corpus(variant, params, corpus_out);
  if (flops->parsed()) return run_flops(clock_ghz, cores, flop_per_cycle);
  return kExitUsage;
}
