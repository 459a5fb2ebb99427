#include "acc2omp/parse.hpp"

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>

#include "acc2omp/diagnostics.hpp"

namespace acc2omp {

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool try_char(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  // Identifier as written; empty optional when the next token is not one.
  std::optional<std::string> ident() {
    skip_ws();
    if (pos >= text.size() || !ident_start(text[pos])) return std::nullopt;
    std::size_t start = pos;
    while (pos < text.size() && ident_char(text[pos])) ++pos;
    return std::string(text.substr(start, pos - start));
  }
  // Raw text up to the ')' matching an already-consumed '(', nesting-aware.
  // Leaves the cursor on the ')'.
  std::optional<std::string> balanced_until_close() {
    int depth = 0;
    std::size_t start = pos;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) return std::string(trim(text.substr(start, pos - start)));
        --depth;
      }
      ++pos;
    }
    return std::nullopt;  // unterminated
  }
  // Text up to the first ':' at paren depth 0; consumes the ':'. Fails
  // (without advancing) when ')' or end of text comes first.
  std::optional<std::string> until_colon() {
    int depth = 0;
    std::size_t p = pos;
    while (p < text.size()) {
      char c = text[p];
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        if (depth == 0) return std::nullopt;
        --depth;
      } else if (c == ':' && depth == 0) {
        std::string out(trim(text.substr(pos, p - pos)));
        pos = p + 1;
        return out;
      }
      ++p;
    }
    return std::nullopt;
  }
  std::string_view remainder() {
    skip_ws();
    return text.substr(pos);
  }
};

// ---------------------------------------------------------------------------
// Clause argument shapes

enum class ArgShape { None, Vars, Reduction, Expr, Map, Schedule };

const std::map<std::string_view, ArgShape>& clause_shapes() {
  static const std::map<std::string_view, ArgShape> shapes = {
      {"gang", ArgShape::None},          {"worker", ArgShape::None},
      {"vector", ArgShape::None},        {"collapse", ArgShape::Expr},
      {"num_gangs", ArgShape::Expr},     {"num_workers", ArgShape::Expr},
      {"vector_length", ArgShape::Expr}, {"num_teams", ArgShape::Expr},
      {"num_threads", ArgShape::Expr},   {"reduction", ArgShape::Reduction},
      {"private", ArgShape::Vars},       {"firstprivate", ArgShape::Vars},
      {"copyin", ArgShape::Vars},        {"copyout", ArgShape::Vars},
      {"copy", ArgShape::Vars},          {"create", ArgShape::Vars},
      {"map", ArgShape::Map},            {"schedule", ArgShape::Schedule},
  };
  return shapes;
}

std::optional<ReductionOp> reduction_op_from(std::string_view text) {
  const std::string low = lowercase(text);
  if (low == "+") return ReductionOp::Add;
  if (low == "*") return ReductionOp::Mul;
  if (low == "max") return ReductionOp::Max;
  if (low == "min") return ReductionOp::Min;
  if (low == "iand") return ReductionOp::Iand;
  if (low == "ior") return ReductionOp::Ior;
  if (low == "ieor") return ReductionOp::Ieor;
  if (low == ".and.") return ReductionOp::And;
  if (low == ".or.") return ReductionOp::Or;
  return std::nullopt;
}

std::optional<MapKind> map_kind_from(std::string_view text) {
  const std::string low = lowercase(text);
  if (low == "to") return MapKind::To;
  if (low == "from") return MapKind::From;
  if (low == "tofrom") return MapKind::ToFrom;
  if (low == "alloc") return MapKind::Alloc;
  return std::nullopt;
}

// Error codes per sentinel family: {construct, clause, args}.
struct Codes {
  const char* construct;
  const char* clause;
  const char* args;
};
constexpr Codes kAccCodes{"E002", "E003", "E004"};
constexpr Codes kOmpCodes{"E005", "E006", "E007"};

std::vector<std::string> parse_var_list(Cursor& cur, const Codes& codes,
                                        std::string_view clause) {
  std::vector<std::string> vars;
  while (true) {
    auto id = cur.ident();
    if (!id)
      throw DirectiveError(codes.args,
                           "expected a variable name in '" + std::string(clause) + "'");
    vars.push_back(std::move(*id));
    if (cur.try_char(',')) continue;
    if (cur.try_char(')')) break;
    throw DirectiveError(codes.args,
                         "expected ',' or ')' in '" + std::string(clause) + "'");
  }
  return vars;
}

ClauseArgs parse_args(Cursor& cur, const std::string& name, ArgShape shape,
                      const Codes& codes) {
  if (shape == ArgShape::None) {
    if (cur.peek() == '(')
      throw DirectiveError(codes.args, "'" + name + "' takes no arguments");
    return std::monostate{};
  }
  if (!cur.try_char('('))
    throw DirectiveError(codes.args, "'" + name + "' requires parenthesized arguments");

  switch (shape) {
    case ArgShape::Vars:
      return VarList{parse_var_list(cur, codes, name)};
    case ArgShape::Expr: {
      auto text = cur.balanced_until_close();
      if (!text)
        throw DirectiveError(codes.args, "'" + name + "' is missing ')'");
      if (text->empty())
        throw DirectiveError(codes.args, "'" + name + "' requires an expression");
      cur.try_char(')');
      return IntExpr{std::move(*text)};
    }
    case ArgShape::Reduction: {
      auto op_text = cur.until_colon();
      if (!op_text)
        throw DirectiveError(codes.args, "'" + name + "' is missing the variable list");
      auto op = reduction_op_from(*op_text);
      if (!op)
        throw DirectiveError(codes.args,
                             "unknown reduction operator '" + *op_text + "'");
      return ReductionArgs{*op, parse_var_list(cur, codes, name)};
    }
    case ArgShape::Map: {
      auto kind_text = cur.until_colon();
      if (!kind_text)
        throw DirectiveError(codes.args, "'" + name + "' requires 'map(kind:list)'");
      auto kind = map_kind_from(*kind_text);
      if (!kind)
        throw DirectiveError(codes.args, "unknown map kind '" + *kind_text + "'");
      return MapArgs{*kind, parse_var_list(cur, codes, name)};
    }
    case ArgShape::Schedule: {
      auto kind = cur.ident();
      if (!kind)
        throw DirectiveError(codes.args, "'" + name + "' requires a schedule kind");
      std::string chunk;
      if (cur.try_char(',')) {
        auto text = cur.balanced_until_close();
        if (!text)
          throw DirectiveError(codes.args, "'" + name + "' is missing ')'");
        if (text->empty())
          throw DirectiveError(codes.args, "'" + name + "' has an empty chunk expression");
        chunk = std::move(*text);
      }
      if (!cur.try_char(')'))
        throw DirectiveError(codes.args, "expected ')' in '" + name + "'");
      return SchedulePair{lowercase(*kind), std::move(chunk)};
    }
    default: break;
  }
  throw DirectiveError(codes.args, "unsupported clause shape");
}

std::vector<Clause> parse_clauses(Cursor& cur, const std::set<std::string_view>& allowed,
                                  std::string_view construct, const Codes& codes,
                                  const std::set<std::string_view>& construct_words) {
  std::vector<Clause> clauses;
  while (!cur.at_end()) {
    auto name_raw = cur.ident();
    if (!name_raw)
      throw DirectiveError(codes.args, "expected a clause name, found '" +
                                           std::string(cur.remainder().substr(0, 10)) +
                                           "'");
    std::string name = lowercase(*name_raw);
    if (!allowed.contains(name)) {
      // A trailing construct keyword means the whole directive spells a
      // construct form this dialect does not have, not a bad clause.
      if (construct_words.contains(name))
        throw DirectiveError(codes.construct,
                             "'" + std::string(construct) + " " + name +
                                 "...' is not a supported construct form");
      throw DirectiveError(codes.clause, "'" + name + "' is not valid on '" +
                                             std::string(construct) + "'");
    }
    ArgShape shape = clause_shapes().at(name);
    Clause c;
    c.args = parse_args(cur, name, shape, codes);
    c.name = std::move(name);
    clauses.push_back(std::move(c));
  }
  return clauses;
}

// Matches a construct as a sequence of whole lowercase words; longest
// table entry wins. Returns the matched kind and advances the cursor.
template <typename Kind>
std::optional<Kind> match_construct(
    Cursor& cur,
    const std::vector<std::pair<std::vector<std::string_view>, Kind>>& table) {
  for (const auto& [words, kind] : table) {
    Cursor probe = cur;
    bool ok = true;
    for (std::string_view w : words) {
      auto id = probe.ident();
      if (!id || lowercase(*id) != w) {
        ok = false;
        break;
      }
    }
    if (ok) {
      cur = probe;
      return kind;
    }
  }
  return std::nullopt;
}

const std::set<std::string_view>& acc_allowed(AccKind k) {
  static const std::set<std::string_view> compute = {
      "num_gangs", "num_workers", "vector_length", "reduction", "private",
      "firstprivate", "copyin", "copyout", "copy", "create"};
  static const std::set<std::string_view> compute_loop = [] {
    std::set<std::string_view> s = compute;
    s.insert({"gang", "worker", "vector", "collapse"});
    return s;
  }();
  static const std::set<std::string_view> loop = {"gang",     "worker",   "vector",
                                                  "collapse", "reduction", "private"};
  static const std::set<std::string_view> data = {"copyin", "copyout", "copy", "create"};
  static const std::set<std::string_view> none = {};
  switch (k) {
    case AccKind::Parallel:
    case AccKind::Kernels: return compute;
    case AccKind::ParallelLoop:
    case AccKind::KernelsLoop: return compute_loop;
    case AccKind::Loop: return loop;
    case AccKind::Data: return data;
    default: return none;
  }
}

const std::set<std::string_view>& omp_allowed(OmpKind k) {
  static const std::set<std::string_view> target_teams = {
      "num_teams", "num_threads", "reduction", "private", "firstprivate", "map"};
  static const std::set<std::string_view> combined = {
      "num_teams", "num_threads", "collapse", "reduction",
      "private",   "firstprivate", "schedule", "map"};
  static const std::set<std::string_view> teams_distribute = {
      "num_teams", "collapse", "reduction", "private", "firstprivate"};
  static const std::set<std::string_view> parallel_simd = {
      "num_threads", "collapse", "reduction", "private", "firstprivate", "schedule"};
  static const std::set<std::string_view> target_data = {"map"};
  static const std::set<std::string_view> none = {};
  switch (k) {
    case OmpKind::TargetTeams: return target_teams;
    case OmpKind::TargetTeamsDistributeParallelLoopSimd: return combined;
    case OmpKind::TeamsDistribute: return teams_distribute;
    case OmpKind::ParallelSimd: return parallel_simd;
    case OmpKind::TargetData: return target_data;
    default: return none;
  }
}

}  // namespace

AccDirective parse_acc(std::string_view payload, Dialect) {
  static const std::vector<std::pair<std::vector<std::string_view>, AccKind>> table = {
      {{"end", "parallel"}, AccKind::EndParallel},
      {{"end", "kernels"}, AccKind::EndKernels},
      {{"end", "data"}, AccKind::EndData},
      {{"parallel", "loop"}, AccKind::ParallelLoop},
      {{"parallel"}, AccKind::Parallel},
      {{"kernels", "loop"}, AccKind::KernelsLoop},
      {{"kernels"}, AccKind::Kernels},
      {{"loop"}, AccKind::Loop},
      {{"data"}, AccKind::Data},
  };
  Cursor cur{payload};
  auto kind = match_construct(cur, table);
  if (!kind)
    throw DirectiveError(kAccCodes.construct,
                         "'" + std::string(trim(payload)) + "'");
  AccDirective dir;
  dir.kind = *kind;
  if (is_end(dir.kind)) {
    if (!cur.at_end())
      throw DirectiveError(kAccCodes.clause, "end directives carry no clauses");
    return dir;
  }
  static const std::set<std::string_view> construct_words = {"parallel", "kernels",
                                                             "loop", "data", "end"};
  dir.clauses = parse_clauses(cur, acc_allowed(dir.kind),
                              acc_construct_text(dir.kind), kAccCodes, construct_words);
  return dir;
}

OmpDirective parse_omp(std::string_view payload, Dialect dialect) {
  const std::string_view loop_word = dialect == Dialect::C ? "for" : "do";
  const std::vector<std::pair<std::vector<std::string_view>, OmpKind>> table = {
      {{"end", "target", "teams", "distribute", "parallel", loop_word, "simd"},
       OmpKind::EndTargetTeamsDistributeParallelLoopSimd},
      {{"end", "target", "teams"}, OmpKind::EndTargetTeams},
      {{"end", "target", "data"}, OmpKind::EndTargetData},
      {{"target", "teams", "distribute", "parallel", loop_word, "simd"},
       OmpKind::TargetTeamsDistributeParallelLoopSimd},
      {{"target", "teams"}, OmpKind::TargetTeams},
      {{"target", "data"}, OmpKind::TargetData},
      {{"teams", "distribute"}, OmpKind::TeamsDistribute},
      {{"parallel", loop_word, "simd"}, OmpKind::ParallelSimd},
  };
  Cursor cur{payload};
  auto kind = match_construct(cur, table);
  if (!kind)
    throw DirectiveError(kOmpCodes.construct,
                         "'" + std::string(trim(payload)) + "'");
  OmpDirective dir;
  dir.kind = *kind;
  if (is_end(dir.kind)) {
    if (!cur.at_end())
      throw DirectiveError(kOmpCodes.clause, "end directives carry no clauses");
    return dir;
  }
  static const std::set<std::string_view> construct_words = {
      "target", "teams", "distribute", "parallel", "do", "for", "simd", "data", "end"};
  dir.clauses = parse_clauses(cur, omp_allowed(dir.kind),
                              omp_construct_text(dir.kind, dialect), kOmpCodes,
                              construct_words);
  return dir;
}

}  // namespace acc2omp
