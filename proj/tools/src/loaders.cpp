#include "loaders.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <catcom/error.hpp>

namespace catcom::cli {

namespace {

constexpr std::string_view kBuiltin = "builtin:";

std::string builtin_name(const std::string& path) { return path.substr(kBuiltin.size()); }

template <class Fn>
auto located(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError& e) {
    if (e.line() == 0) throw InputFailure(path + ": " + e.message());
    throw InputFailure(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                       ": " + e.message());
  } catch (const InputError& e) {
    throw InputFailure(path + ": " + e.what());
  } catch (const ClosureError& e) {
    throw InputFailure(path + ": " + e.what());
  }
}

template <class Fn>
auto parse_path(const std::string& path, Fn&& parse) {
  const std::string text = read_file(path);
  return located(path, [&] { return parse(text); });
}

std::optional<std::size_t> number_suffix(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
    return std::nullopt;
  std::size_t v = 0;
  for (std::size_t i = prefix.size(); i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(name[i] - '0');
    if (v > 64) return std::nullopt;
  }
  return v;
}

std::optional<FiniteMonoid> builtin_monoid(const std::string& name) {
  if (name == "trivial") return trivial_monoid();
  if (name == "s3") return symmetric_group_3();
  if (name == "lzb") return left_zero_band();
  if (auto n = number_suffix(name, "z"); n && *n > 0) return cyclic_group(*n);
  return std::nullopt;
}

[[noreturn]] void unknown_builtin(const std::string& path, const char* kind) {
  throw InputFailure(path + ": unknown built-in " + kind);
}

}  // namespace

bool is_builtin(const std::string& path) { return path.rfind(kBuiltin, 0) == 0; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFailure(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string input_kind(const std::string& path) {
  if (is_builtin(path)) return "builtin";
  const std::string text = read_file(path);
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
      while (i < text.size() && text[i] != '\n') ++i;
    } else {
      break;
    }
  }
  std::size_t j = i;
  while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
  return text.substr(i, j - i);
}

Presentation load_theory(const std::string& path) {
  if (is_builtin(path)) return located(path, [&] { return builtin_theory(builtin_name(path)); });
  return parse_path(path, [](const std::string& t) { return parse_presentation(t); });
}

Problem load_problem(const std::string& path, bool& has_goal) {
  if (is_builtin(path)) {
    has_goal = false;
    auto p = load_theory(path);
    return {std::move(p), Equation::make(Term::var(1), Term::var(1))};
  }
  const std::string text = read_file(path);
  // A goal follows the closing brace of the theory block.
  has_goal = false;
  try {
    parse_presentation(text);
  } catch (const ParseError&) {
    has_goal = true;
  }
  if (has_goal) return located(path, [&] { return parse_problem(text); });
  auto p = located(path, [&] { return parse_presentation(text); });
  return {std::move(p), Equation::make(Term::var(1), Term::var(1))};
}

FiniteAlgebra load_algebra(const std::string& path) {
  if (is_builtin(path)) return located(path, [&] { return builtin_algebra(builtin_name(path)); });
  return parse_path(path, [](const std::string& t) { return parse_algebra(t); });
}

FiniteMonoid load_monoid(const std::string& path) {
  if (is_builtin(path)) {
    if (auto m = builtin_monoid(builtin_name(path))) return *m;
    unknown_builtin(path, "monoid");
  }
  return parse_path(path, [](const std::string& t) { return parse_monoid(t); });
}

std::shared_ptr<const SymOperadTruncation> load_operad(const std::string& path, std::size_t K) {
  if (is_builtin(path)) return located(path, [&] { return builtin_operad(builtin_name(path), K); });
  return parse_path(path, [](const std::string& t) {
    return std::shared_ptr<const SymOperadTruncation>(parse_operad(t));
  });
}

OperadPresentation load_operad_presentation(const std::string& path) {
  if (is_builtin(path))
    return located(path, [&] { return builtin_operad_presentation(builtin_name(path)); });
  return parse_path(path, [](const std::string& t) { return parse_operad_presentation(t); });
}

FiniteCategory load_category(const std::string& path) {
  if (is_builtin(path)) {
    const auto name = builtin_name(path);
    if (name == "terminal") return terminal_category();
    if (name == "arrow") return walking_arrow();
    if (auto n = number_suffix(name, "discrete")) return discrete_category(*n);
    if (auto n = number_suffix(name, "codiscrete")) return codiscrete_category(*n);
    if (auto m = builtin_monoid(name)) return monoid_category(*m);
    unknown_builtin(path, "category");
  }
  return parse_path(path, [](const std::string& t) { return parse_category(t); });
}

SesquiData load_sesqui(const std::string& path) {
  if (is_builtin(path)) {
    const auto name = builtin_name(path);
    if (name == "free") return free_sesqui_example();
    if (name == "walking") return walking_two_cell();
    if (auto m = builtin_monoid(name)) return monoid_two_cells(*m);
    unknown_builtin(path, "sesquicategory");
  }
  return parse_path(path, [](const std::string& t) { return parse_sesqui(t); });
}

PremonoidalData load_premonoidal(const std::string& path) {
  if (is_builtin(path)) {
    if (auto m = builtin_monoid(builtin_name(path))) return codiscrete_monoid_premonoidal(*m);
    unknown_builtin(path, "premonoidal category");
  }
  return parse_path(path, [](const std::string& t) { return parse_premonoidal(t); });
}

GradedAlgebra load_graded(const std::string& path, std::size_t D) {
  if (is_builtin(path)) {
    const auto name = builtin_name(path);
    const auto sep = name.find('_');
    if (name.rfind("qp", 0) == 0 && sep != std::string::npos) {
      const auto p = number_suffix(name.substr(0, sep), "qp");
      const auto q = number_suffix("q" + name.substr(sep + 1), "q");
      if (p && q) return located(path, [&] { return quantum_plane(int(*p), int(*q), D); });
    }
    unknown_builtin(path, "graded algebra");
  }
  return parse_path(path, [](const std::string& t) { return parse_graded(t); });
}

}  // namespace catcom::cli
