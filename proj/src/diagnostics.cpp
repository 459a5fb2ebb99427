#include "acc2omp/diagnostics.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace acc2omp {

namespace {

struct CatalogEntry {
  std::string_view code;
  std::string_view summary;
};

// Stable public catalog. Codes are part of the CLI/library contract.
constexpr std::array<CatalogEntry, 16> kCatalog{{
    {"E001", "malformed directive continuation"},
    {"E002", "unknown OpenACC construct"},
    {"E003", "unknown clause on OpenACC construct"},
    {"E004", "malformed OpenACC clause arguments"},
    {"E005", "unknown OpenMP construct"},
    {"E006", "unknown clause on OpenMP construct"},
    {"E007", "malformed OpenMP clause arguments"},
    {"E008", "fixed-form Fortran sentinel is not supported"},
    {"E101", "kernels construct has no OpenMP counterpart under strict policy"},
    {"E102", "vector_length has no OpenMP counterpart"},
    {"E103", "unmatched or mismatched end directive"},
    {"E301", "clause does not fit within the wrap width"},
    {"W101", "kernels construct translated like parallel"},
    {"W102", "vector_length clause dropped"},
    {"W103", "orphaned loop gang mapped to teams distribute"},
    {"I201", "schedule clause injected"},
}};

const CatalogEntry* find_entry(std::string_view code) {
  for (const auto& e : kCatalog)
    if (e.code == code) return &e;
  return nullptr;
}

}  // namespace

bool known_code(std::string_view code) { return find_entry(code) != nullptr; }

Severity severity_for_code(std::string_view code) {
  if (!code.empty()) {
    if (code.front() == 'W') return Severity::Warning;
    if (code.front() == 'I') return Severity::Info;
  }
  return Severity::Error;
}

std::string_view severity_name(Severity s) {
  switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
  }
  return "?";
}

std::string_view catalog_summary(std::string_view code) {
  const CatalogEntry* e = find_entry(code);
  return e ? e->summary : std::string_view{"unknown diagnostic"};
}

Diagnostic make_diagnostic(std::string code, std::string_view detail) {
  Diagnostic d;
  d.severity = severity_for_code(code);
  d.message = std::string(catalog_summary(code));
  if (!detail.empty()) {
    d.message += ": ";
    d.message += detail;
  }
  d.code = std::move(code);
  return d;
}

void stamp(Diagnostic& d, const std::string& file, int line, std::string_view payload) {
  d.file = file;
  d.line = line;
  d.excerpt = std::string(payload.substr(0, 60));
}

std::string render_human(const Diagnostic& d) {
  std::ostringstream out;
  if (!d.file.empty()) {
    out << d.file << ":";
    if (d.line > 0) out << d.line << ":";
    out << " ";
  }
  out << severity_name(d.severity) << " [" << d.code << "] " << d.message;
  if (!d.excerpt.empty()) out << "\n    near: " << d.excerpt;
  return out.str();
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

bool has_warnings(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Warning; });
}

DirectiveError::DirectiveError(std::string code, std::string_view detail)
    : std::runtime_error(std::string(catalog_summary(code)) +
                         (detail.empty() ? "" : ": " + std::string(detail))),
      code_(std::move(code)) {}

Diagnostic DirectiveError::to_diagnostic() const {
  Diagnostic d;
  d.severity = severity_for_code(code_);
  d.code = code_;
  d.message = what();
  return d;
}

}  // namespace acc2omp
