#include "acc2omp/emit.hpp"

#include <stdexcept>

#include "acc2omp/diagnostics.hpp"
#include "acc2omp/scan.hpp"

namespace acc2omp {

int default_wrap_width(Dialect d) { return d == Dialect::FortranFree ? 132 : 120; }

namespace {

std::vector<std::string> lay_out(std::string_view indent, std::string_view sentinel,
                                 const std::string& construct,
                                 const std::vector<std::string>& clauses,
                                 Dialect dialect, int wrap_width) {
  if (wrap_width < kMinWrapWidth)
    throw std::invalid_argument("wrap width below minimum");

  const std::size_t wrap = static_cast<std::size_t>(wrap_width);
  std::string head = std::string(indent) + std::string(sentinel) + " " + construct;

  std::string one_line = head;
  for (const auto& c : clauses) one_line += " " + c;
  if (one_line.size() <= wrap) return {one_line};

  // Continuation lines repeat the sentinel in Fortran; C splices lines with
  // a bare backslash, so they only need indent.
  const std::string cont_prefix =
      dialect == Dialect::FortranFree
          ? std::string(indent) + std::string(sentinel) + " "
          : std::string(indent) + "  ";
  const std::size_t marker = 2;  // " &" or " \"

  for (const auto& c : clauses) {
    if (cont_prefix.size() + c.size() + marker > wrap)
      throw DirectiveError("E301", "'" + c + "' cannot fit in " +
                                       std::to_string(wrap_width) + " columns");
  }

  std::vector<std::string> lines;
  std::string cur = head;
  for (const auto& c : clauses) {
    if (cur.size() + 1 + c.size() + marker <= wrap) {
      cur += " " + c;
    } else {
      lines.push_back(std::move(cur));
      cur = cont_prefix + c;
    }
  }
  lines.push_back(std::move(cur));

  const char* cont = dialect == Dialect::FortranFree ? " &" : " \\";
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) lines[i] += cont;
  return lines;
}

std::vector<std::string> clause_texts(const std::vector<Clause>& clauses) {
  std::vector<std::string> out;
  out.reserve(clauses.size());
  for (const auto& c : clauses) out.push_back(clause_text(c));
  return out;
}

}  // namespace

std::vector<std::string> emit_omp(const OmpDirective& d, Dialect dialect,
                                  std::string_view indent, int wrap_width) {
  return lay_out(indent, sentinel_text(omp_sentinel_for(dialect)),
                 omp_construct_text(d.kind, dialect), clause_texts(d.clauses), dialect,
                 wrap_width);
}

std::vector<std::string> emit_acc(const AccDirective& d, Dialect dialect,
                                  std::string_view indent, int wrap_width) {
  return lay_out(indent, sentinel_text(acc_sentinel_for(dialect)),
                 std::string(acc_construct_text(d.kind)), clause_texts(d.clauses),
                 dialect, wrap_width);
}

}  // namespace acc2omp
