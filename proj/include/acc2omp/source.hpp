#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace acc2omp {

enum class Dialect { FortranFree, C };

enum class NewlineStyle { LF, CRLF };

/// A source file held as terminator-free lines. Serializing with
/// newline_style (and final_newline) reproduces the original bytes;
/// stray carriage returns in mixed-ending files stay in the line text.
struct SourceUnit {
  std::filesystem::path path;
  Dialect dialect = Dialect::FortranFree;
  std::vector<std::string> lines;
  NewlineStyle newline_style = NewlineStyle::LF;
  bool final_newline = false;
};

std::string_view dialect_name(Dialect d);

/// FortranFree for .f90/.f95/.f03/.f08, C for .c/.h; nullopt otherwise.
std::optional<Dialect> dialect_from_extension(const std::filesystem::path& path);

SourceUnit make_unit(std::string_view text, Dialect dialect,
                     std::filesystem::path path = "<memory>");

/// Reads a file as bytes. Dialect comes from the extension unless
/// overridden; throws std::runtime_error on IO failure or when the
/// dialect cannot be determined.
SourceUnit load_unit(const std::filesystem::path& path,
                     std::optional<Dialect> dialect_override = std::nullopt);

std::string serialize(const SourceUnit& unit);

}  // namespace acc2omp
