#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace acc2omp {

enum class Severity { Error, Warning, Info };

/// Structured record for the stable diagnostic catalog. The code alone
/// determines the severity; message starts with the catalog summary.
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  std::string file;
  int line = 0;  // 1-based, 0 = not attached
  std::string excerpt;
};

bool known_code(std::string_view code);
Severity severity_for_code(std::string_view code);
std::string_view severity_name(Severity s);
std::string_view catalog_summary(std::string_view code);

/// Builds a diagnostic for a cataloged code; `detail` extends the summary.
Diagnostic make_diagnostic(std::string code, std::string_view detail = "");

/// Attaches location info; excerpt keeps at most 60 chars of the payload.
void stamp(Diagnostic& d, const std::string& file, int line, std::string_view payload);

std::string render_human(const Diagnostic& d);

bool has_errors(const std::vector<Diagnostic>& diags);
bool has_warnings(const std::vector<Diagnostic>& diags);

/// Failure of a single-directive operation (parse or emit). Carries the
/// catalog code; whole-unit drivers convert it into a located Diagnostic.
class DirectiveError : public std::runtime_error {
 public:
  DirectiveError(std::string code, std::string_view detail);
  const std::string& code() const noexcept { return code_; }
  Diagnostic to_diagnostic() const;

 private:
  std::string code_;
};

}  // namespace acc2omp
