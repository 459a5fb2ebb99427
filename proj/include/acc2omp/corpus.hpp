#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "acc2omp/jacobi.hpp"

namespace acc2omp {

/// The five mini-application flavours: a plain serial solver, OpenACC
/// with and without a data region, and the matching OpenMP pair.
enum class Variant { Serial, AccNoData, AccData, OmpNoData, OmpData };

inline constexpr std::string_view kCorpusGeneratorVersion = "1.0";

std::string_view variant_name(Variant v);
std::optional<Variant> variant_from_name(std::string_view name);

/// Emits a complete free-form Fortran program embedding the grid and
/// convergence parameters. The host code is identical across variants;
/// only the directive lines differ.
std::string generate_variant(Variant v, const JacobiParams& p);

}  // namespace acc2omp
