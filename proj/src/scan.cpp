#include "acc2omp/scan.hpp"

#include <cctype>

namespace acc2omp {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t'; }

std::string_view lstrip(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && is_space(s[i])) ++i;
  return s.substr(i);
}

std::string_view rstrip(std::string_view s) {
  std::size_t n = s.size();
  while (n > 0 && is_space(s[n - 1])) --n;
  return s.substr(0, n);
}

std::string_view trim(std::string_view s) { return rstrip(lstrip(s)); }

bool iequals_prefix(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[i])) !=
        std::tolower(static_cast<unsigned char>(prefix[i])))
      return false;
  }
  return true;
}

// Fortran sentinel match: "!$acc"/"!$omp" (any case) followed by
// whitespace, '&', or end of line.
bool match_fortran_sentinel(std::string_view body, SentinelKind kind,
                            std::string_view* rest) {
  std::string_view text = kind == SentinelKind::AccFortran ? "!$acc" : "!$omp";
  if (!iequals_prefix(body, text)) return false;
  std::string_view after = body.substr(text.size());
  if (!after.empty() && !is_space(after.front()) && after.front() != '&') return false;
  *rest = after;
  return true;
}

// C sentinel match: '#', optional spaces, "pragma", spaces, then the
// namespace word "acc"/"omp" at a word boundary.
bool match_c_sentinel(std::string_view body, SentinelKind kind, std::string_view* rest) {
  if (body.empty() || body.front() != '#') return false;
  std::string_view s = lstrip(body.substr(1));
  if (!s.starts_with("pragma")) return false;
  s = s.substr(6);
  if (s.empty() || !is_space(s.front())) return false;
  s = lstrip(s);
  std::string_view ns = kind == SentinelKind::AccC ? "acc" : "omp";
  if (!s.starts_with(ns)) return false;
  std::string_view after = s.substr(ns.size());
  if (!after.empty() && !is_space(after.front())) return false;
  *rest = after;
  return true;
}

bool match_sentinel(std::string_view body, Dialect dialect, SentinelKind* kind,
                    std::string_view* rest) {
  if (dialect == Dialect::FortranFree) {
    if (match_fortran_sentinel(body, SentinelKind::AccFortran, rest)) {
      *kind = SentinelKind::AccFortran;
      return true;
    }
    if (match_fortran_sentinel(body, SentinelKind::OmpFortran, rest)) {
      *kind = SentinelKind::OmpFortran;
      return true;
    }
    return false;
  }
  if (match_c_sentinel(body, SentinelKind::AccC, rest)) {
    *kind = SentinelKind::AccC;
    return true;
  }
  if (match_c_sentinel(body, SentinelKind::OmpC, rest)) {
    *kind = SentinelKind::OmpC;
    return true;
  }
  return false;
}

bool fixed_form_sentinel(std::string_view raw_line) {
  // Column-1 'c$acc' / '*$acc' (and the omp twins) mark fixed-form source.
  for (std::string_view text : {"c$acc", "*$acc", "c$omp", "*$omp"}) {
    if (iequals_prefix(raw_line, text)) {
      std::string_view after = raw_line.substr(text.size());
      if (after.empty() || is_space(after.front()) || after.front() == '&') return true;
    }
  }
  return false;
}

// Joins "a &" with "b": the trailing '&' (and an optional leading '&'
// on the continuation) are dropped, parts joined by one space.
void append_continuation(std::string& payload, std::string_view part) {
  std::string_view p = trim(part);
  if (!p.empty() && p.front() == '&') p = lstrip(p.substr(1));
  if (!payload.empty() && !p.empty()) payload += ' ';
  payload += p;
}

}  // namespace

bool is_acc_sentinel(SentinelKind s) {
  return s == SentinelKind::AccFortran || s == SentinelKind::AccC;
}

std::string_view sentinel_text(SentinelKind s) {
  switch (s) {
    case SentinelKind::AccFortran: return "!$acc";
    case SentinelKind::AccC: return "#pragma acc";
    case SentinelKind::OmpFortran: return "!$omp";
    case SentinelKind::OmpC: return "#pragma omp";
  }
  return "?";
}

SentinelKind acc_sentinel_for(Dialect d) {
  return d == Dialect::FortranFree ? SentinelKind::AccFortran : SentinelKind::AccC;
}

SentinelKind omp_sentinel_for(Dialect d) {
  return d == Dialect::FortranFree ? SentinelKind::OmpFortran : SentinelKind::OmpC;
}

ScanResult scan_directives(const SourceUnit& unit) {
  ScanResult result;
  const std::string file = unit.path.string();
  const std::size_t n = unit.lines.size();

  std::size_t i = 0;
  while (i < n) {
    const std::string& raw = unit.lines[i];
    std::string_view body = lstrip(raw);

    if (unit.dialect == Dialect::FortranFree && body.size() == raw.size() &&
        fixed_form_sentinel(raw)) {
      Diagnostic d = make_diagnostic("E008", "use free-form '!$' sentinels");
      stamp(d, file, static_cast<int>(i + 1), raw);
      result.diagnostics.push_back(std::move(d));
      ++i;
      continue;
    }

    SentinelKind kind;
    std::string_view rest;
    if (!match_sentinel(body, unit.dialect, &kind, &rest)) {
      ++i;
      continue;
    }

    DirectiveLine dl;
    dl.start_line = static_cast<int>(i + 1);
    dl.sentinel = kind;
    dl.indent = raw.substr(0, raw.size() - body.size());

    std::string payload;
    append_continuation(payload, rest);
    bool failed = false;
    std::size_t last = i;

    if (unit.dialect == Dialect::FortranFree) {
      while (!payload.empty() && payload.back() == '&') {
        payload.pop_back();
        while (!payload.empty() && is_space(payload.back())) payload.pop_back();
        std::string_view cont_rest;
        SentinelKind cont_kind;
        if (last + 1 >= n ||
            !match_sentinel(lstrip(unit.lines[last + 1]), unit.dialect, &cont_kind,
                            &cont_rest) ||
            cont_kind != kind) {
          Diagnostic d = make_diagnostic(
              "E001", "line ends with '&' but the next line lacks the sentinel");
          stamp(d, file, static_cast<int>(last + 1), unit.lines[last]);
          result.diagnostics.push_back(std::move(d));
          failed = true;
          break;
        }
        ++last;
        append_continuation(payload, cont_rest);
      }
    } else {
      while (!payload.empty() && payload.back() == '\\') {
        payload.pop_back();
        while (!payload.empty() && is_space(payload.back())) payload.pop_back();
        if (last + 1 >= n) {
          Diagnostic d =
              make_diagnostic("E001", "backslash continuation at end of file");
          stamp(d, file, static_cast<int>(last + 1), unit.lines[last]);
          result.diagnostics.push_back(std::move(d));
          failed = true;
          break;
        }
        ++last;
        append_continuation(payload, unit.lines[last]);
      }
    }

    if (!failed) {
      dl.line_span = static_cast<int>(last - i + 1);
      dl.payload = std::move(payload);
      result.directives.push_back(std::move(dl));
    }
    i = last + 1;
  }
  return result;
}

}  // namespace acc2omp
