#include "acc2omp/source.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace acc2omp {

std::string_view dialect_name(Dialect d) {
  return d == Dialect::FortranFree ? "fortran-free" : "c";
}

std::optional<Dialect> dialect_from_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  for (auto& ch : ext) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (ext == ".f90" || ext == ".f95" || ext == ".f03" || ext == ".f08")
    return Dialect::FortranFree;
  if (ext == ".c" || ext == ".h") return Dialect::C;
  return std::nullopt;
}

SourceUnit make_unit(std::string_view text, Dialect dialect, std::filesystem::path path) {
  SourceUnit unit;
  unit.path = std::move(path);
  unit.dialect = dialect;

  // CRLF only when every newline in the file is a CRLF pair; otherwise LF
  // with any carriage returns preserved as line content.
  std::size_t newlines = 0;
  std::size_t crlf = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++newlines;
      if (i > 0 && text[i - 1] == '\r') ++crlf;
    }
  }
  unit.newline_style =
      (newlines > 0 && crlf == newlines) ? NewlineStyle::CRLF : NewlineStyle::LF;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      unit.lines.emplace_back(text.substr(pos));
      unit.final_newline = false;
      return unit;
    }
    std::size_t end = nl;
    if (unit.newline_style == NewlineStyle::CRLF) --end;  // drop the '\r'
    unit.lines.emplace_back(text.substr(pos, end - pos));
    pos = nl + 1;
  }
  unit.final_newline = !text.empty();
  return unit;
}

SourceUnit load_unit(const std::filesystem::path& path,
                     std::optional<Dialect> dialect_override) {
  if (!std::filesystem::is_regular_file(path))
    throw std::runtime_error("not a readable file: " + path.string());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read error on " + path.string());

  std::optional<Dialect> dialect = dialect_override;
  if (!dialect) dialect = dialect_from_extension(path);
  if (!dialect)
    throw std::runtime_error("cannot determine dialect of " + path.string() +
                             "; pass it explicitly");
  SourceUnit unit = make_unit(buf.str(), *dialect, path);
  return unit;
}

std::string serialize(const SourceUnit& unit) {
  const char* nl = unit.newline_style == NewlineStyle::CRLF ? "\r\n" : "\n";
  std::string out;
  for (std::size_t i = 0; i < unit.lines.size(); ++i) {
    out += unit.lines[i];
    if (i + 1 < unit.lines.size() || unit.final_newline) out += nl;
  }
  return out;
}

}  // namespace acc2omp
