#include "acc2omp/corpus.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace acc2omp {

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::Serial: return "serial";
    case Variant::AccNoData: return "acc-nodata";
    case Variant::AccData: return "acc-data";
    case Variant::OmpNoData: return "omp-nodata";
    case Variant::OmpData: return "omp-data";
  }
  return "?";
}

std::optional<Variant> variant_from_name(std::string_view name) {
  for (Variant v : {Variant::Serial, Variant::AccNoData, Variant::AccData,
                    Variant::OmpNoData, Variant::OmpData}) {
    if (name == variant_name(v)) return v;
  }
  return std::nullopt;
}

namespace {

std::string fortran_double(double value) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10e", value);
  std::string text(buf);
  auto e = text.find('e');
  if (e != std::string::npos) text[e] = 'd';
  return text;
}

struct DirectiveSet {
  const char* data_open = nullptr;
  const char* loop1_open = nullptr;
  const char* loop1_close = nullptr;
  const char* loop2_open = nullptr;
  const char* loop2_close = nullptr;
  const char* data_close = nullptr;
};

DirectiveSet directives_for(Variant v) {
  switch (v) {
    case Variant::Serial:
      return {};
    case Variant::AccNoData:
      return {nullptr,
              "!$acc parallel loop gang worker vector",
              "!$acc end parallel",
              "!$acc parallel loop",
              "!$acc end parallel",
              nullptr};
    case Variant::AccData:
      return {"!$acc data copyin(f) copyout(f_k)",
              "!$acc parallel loop gang worker vector collapse(2)",
              "!$acc end parallel",
              "!$acc parallel loop collapse(2) reduction(max:max_err)",
              "!$acc end parallel",
              "!$acc end data"};
    case Variant::OmpNoData:
      return {nullptr,
              "!$omp target teams distribute parallel do simd map(to:f) map(from:f_k)",
              "!$omp end target teams distribute parallel do simd",
              "!$omp target teams distribute parallel do simd",
              "!$omp end target teams distribute parallel do simd",
              nullptr};
    case Variant::OmpData:
      return {"!$omp target data map(to:f) map(from:f_k)",
              "!$omp target teams distribute parallel do simd collapse(2) "
              "schedule(static,1)",
              "!$omp end target teams distribute parallel do simd",
              "!$omp target teams distribute parallel do simd collapse(2) "
              "schedule(static,1) reduction(max:max_err)",
              "!$omp end target teams distribute parallel do simd",
              "!$omp end target data"};
  }
  return {};
}

}  // namespace

std::string generate_variant(Variant v, const JacobiParams& p) {
  if (p.nx < 3 || p.ny < 3) throw std::invalid_argument("grid needs nx, ny >= 3");
  if (!(p.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (p.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");

  const DirectiveSet dirs = directives_for(v);
  std::ostringstream out;
  auto line = [&out](const std::string& text) { out << text << '\n'; };
  auto directive = [&line](const char* text) {
    if (text) line(text);
  };

  line("! laplace solver mini-app (variant: " + std::string(variant_name(v)) + ")");
  line("! nx=" + std::to_string(p.nx) + " ny=" + std::to_string(p.ny) +
       " tolerance=" + fortran_double(p.tolerance) +
       " max_iter=" + std::to_string(p.max_iter));
  line("! generated by acc2omp corpus " + std::string(kCorpusGeneratorVersion));
  line("program laplace");
  line("  implicit none");
  line("  integer, parameter :: nx = " + std::to_string(p.nx) +
       ", ny = " + std::to_string(p.ny));
  line("  integer, parameter :: max_iter = " + std::to_string(p.max_iter));
  line("  real(8), parameter :: error = " + fortran_double(p.tolerance));
  line("  real(8) :: f(nx,ny), f_k(nx,ny)");
  line("  real(8) :: max_err, df_x, df_y");
  line("  integer :: i, j, iter");
  line("");
  line("  f = 0.0d0");
  line("  f(:,ny) = 1.0d0");
  line("  f_k = f");
  line("  max_err = huge(max_err)");
  line("  iter = 1");
  line("");
  directive(dirs.data_open);
  line("  do while (max_err.gt.error.and.iter.le.max_iter)");
  directive(dirs.loop1_open);
  line("     do j=2,ny-1");
  line("        do i=2,nx-1");
  line("           df_x = f(i+1,j) + f(i-1,j)");
  line("           df_y = f(i,j+1) + f(i,j-1)");
  line("           f_k(i,j) = 0.25*(df_x + df_y)");
  line("        enddo");
  line("     enddo");
  directive(dirs.loop1_close);
  line("     max_err=0.");
  line("");
  directive(dirs.loop2_open);
  line("     do j=2,ny-1");
  line("        do i=2,nx-1");
  line("           max_err = max(dabs(f_k(i,j) - f(i,j)),max_err)");
  line("           f(i,j) = f_k(i,j)");
  line("        enddo");
  line("     enddo");
  directive(dirs.loop2_close);
  line("     iter = iter + 1");
  line("  enddo");
  directive(dirs.data_close);
  line("");
  line("  print *, 'iterations:', iter");
  line("  print *, 'max_err:', max_err");
  line("end program laplace");
  return out.str();
}

}  // namespace acc2omp
