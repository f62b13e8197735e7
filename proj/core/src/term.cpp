#include "catcom/term.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "catcom/error.hpp"
#include "catcom/finmap.hpp"
#include "lexer.hpp"

namespace catcom {

void Signature::add(std::string name, std::size_t arity) {
  if (contains(name)) throw InputError("duplicate symbol '" + name + "'");
  symbols_.push_back({std::move(name), arity});
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Signature::max_arity() const {
  std::size_t m = 0;
  for (const auto& s : symbols_) m = std::max(m, s.arity);
  return m;
}

struct Term::Node {
  std::size_t var = 0;  // 0 for applications
  std::string symbol;
  std::vector<Term> args;
  std::size_t size = 0;
  std::size_t max_var = 0;
  std::size_t hash = 0;
};

Term Term::var(std::size_t index) {
  if (index == 0) throw InputError("variable indices are 1-based");
  auto n = std::make_shared<Node>();
  n->var = index;
  n->max_var = index;
  n->hash = std::hash<std::size_t>{}(index) * 0x9e3779b97f4a7c15ULL;
  return Term(std::move(n));
}

Term Term::app(std::string symbol, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->symbol = std::move(symbol);
  n->size = 1;
  std::size_t h = std::hash<std::string>{}(n->symbol);
  for (const auto& a : args) {
    n->size += a.size();
    n->max_var = std::max(n->max_var, a.max_var());
    h ^= a.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  n->hash = h;
  n->args = std::move(args);
  return Term(std::move(n));
}

bool Term::is_var() const { return node_->var != 0; }
std::size_t Term::var_index() const { return node_->var; }
const std::string& Term::symbol() const { return node_->symbol; }
std::span<const Term> Term::args() const { return node_->args; }
std::size_t Term::size() const { return node_->size; }
std::size_t Term::max_var() const { return node_->max_var; }
std::size_t Term::hash() const { return node_->hash; }

std::string Term::to_string() const {
  if (is_var()) return "x" + std::to_string(var_index());
  std::string s = symbol() + "(";
  for (std::size_t i = 0; i < node_->args.size(); ++i) {
    if (i) s += ",";
    s += node_->args[i].to_string();
  }
  return s + ")";
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.is_var() != b.is_var())
    return a.is_var() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_var()) return a.var_index() <=> b.var_index();
  if (auto c = a.symbol().compare(b.symbol()); c != 0)
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  const auto aa = a.args(), ba = b.args();
  if (auto c = aa.size() <=> ba.size(); c != 0) return c;
  for (std::size_t i = 0; i < aa.size(); ++i)
    if (auto c = aa[i] <=> ba[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Equation Equation::make(Term lhs, Term rhs, std::optional<std::size_t> var_count) {
  const auto used = std::max(lhs.max_var(), rhs.max_var());
  const auto vc = var_count.value_or(used);
  if (used > vc)
    throw InputError("equation uses x" + std::to_string(used) + " but ranges over " +
                     std::to_string(vc) + " variables");
  return Equation{std::move(lhs), std::move(rhs), vc};
}

std::string Equation::to_string() const { return lhs.to_string() + " = " + rhs.to_string(); }

Presentation::Presentation(Signature signature, std::vector<Equation> equations)
    : signature_(std::move(signature)) {
  for (auto& e : equations) add_equation(std::move(e));
}

void Presentation::add_equation(Equation eq) {
  check_term(signature_, eq.lhs);
  check_term(signature_, eq.rhs);
  equations_.push_back(std::move(eq));
}

void check_term(const Signature& sig, const Term& t) {
  if (t.is_var()) return;
  const auto idx = sig.find(t.symbol());
  if (!idx) throw InputError("undeclared symbol '" + t.symbol() + "'");
  if (sig.symbols()[*idx].arity != t.args().size())
    throw InputError("symbol '" + t.symbol() + "' has arity " +
                     std::to_string(sig.symbols()[*idx].arity) + " but is applied to " +
                     std::to_string(t.args().size()) + " arguments");
  for (const auto& a : t.args()) check_term(sig, a);
}

namespace {

std::optional<std::size_t> variable_index(const std::string& ident) {
  if (ident.size() < 2 || ident[0] != 'x') return std::nullopt;
  for (std::size_t i = 1; i < ident.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(ident[i]))) return std::nullopt;
  return std::stoul(ident.substr(1));
}

Term parse_term_tokens(detail::TokenStream& ts, const Signature& sig) {
  const auto tok = ts.peek();
  const auto ident = ts.expect_identifier("term");
  if (ts.peek().text != "(") {
    if (auto v = variable_index(ident)) {
      if (*v == 0) ts.fail_at(tok, "variable indices are 1-based");
      return Term::var(*v);
    }
    const auto idx = sig.find(ident);
    if (!idx) ts.fail_at(tok, "undeclared symbol '" + ident + "'");
    if (sig.symbols()[*idx].arity != 0)
      ts.fail_at(tok, "symbol '" + ident + "' has arity " +
                          std::to_string(sig.symbols()[*idx].arity) + " but is used as a constant");
    return Term::app(ident);
  }
  ts.expect("(");
  std::vector<Term> args;
  if (!ts.accept(")")) {
    do {
      args.push_back(parse_term_tokens(ts, sig));
    } while (ts.accept(","));
    ts.expect(")");
  }
  const auto idx = sig.find(ident);
  if (!idx) ts.fail_at(tok, "undeclared symbol '" + ident + "'");
  if (sig.symbols()[*idx].arity != args.size())
    ts.fail_at(tok, "arity mismatch: '" + ident + "' declared with arity " +
                        std::to_string(sig.symbols()[*idx].arity) + ", applied to " +
                        std::to_string(args.size()) + " arguments");
  return Term::app(ident, std::move(args));
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  detail::TokenStream ts(text);
  ts.expect("theory");
  Signature sig(ts.expect_identifier("theory name"));
  ts.expect("{");
  std::vector<Equation> eqs;
  while (!ts.accept("}")) {
    if (ts.accept("op")) {
      const auto tok = ts.peek();
      auto name = ts.expect_identifier("operation name");
      if (variable_index(name)) ts.fail_at(tok, "'" + name + "' is reserved for variables");
      ts.expect(":");
      const auto arity = ts.expect_number("arity");
      if (sig.contains(name)) ts.fail_at(tok, "duplicate symbol '" + name + "'");
      sig.add(std::move(name), arity);
      ts.expect(";");
    } else if (ts.accept("eq")) {
      auto lhs = parse_term_tokens(ts, sig);
      ts.expect("=");
      auto rhs = parse_term_tokens(ts, sig);
      ts.expect(";");
      eqs.push_back(Equation::make(std::move(lhs), std::move(rhs)));
    } else {
      ts.fail("expected 'op', 'eq' or '}'");
    }
  }
  if (!ts.at_end()) ts.fail("trailing input after theory");
  return Presentation(std::move(sig), std::move(eqs));
}

Term parse_term(std::string_view text, const Signature& sig) {
  detail::TokenStream ts(text);
  auto t = parse_term_tokens(ts, sig);
  if (!ts.at_end()) ts.fail("trailing input after term");
  return t;
}

std::string render_presentation(const Presentation& p) {
  std::vector<std::string> ops, eqs;
  for (const auto& s : p.signature().symbols())
    ops.push_back("  op " + s.name + ":" + std::to_string(s.arity) + ";");
  for (const auto& e : p.equations()) eqs.push_back("  eq " + e.to_string() + ";");
  std::sort(ops.begin(), ops.end());
  std::sort(eqs.begin(), eqs.end());
  std::string out = "theory " + p.name() + " {\n";
  for (const auto& l : ops) out += l + "\n";
  for (const auto& l : eqs) out += l + "\n";
  return out + "}\n";
}

Term substitute(const Term& outer, std::span<const Term> args) {
  if (outer.max_var() > args.size())
    throw InputError("substitute: term uses x" + std::to_string(outer.max_var()) +
                     " but only " + std::to_string(args.size()) + " arguments given");
  if (outer.is_var()) return args[outer.var_index() - 1];
  std::vector<Term> out;
  out.reserve(outer.args().size());
  for (const auto& a : outer.args()) out.push_back(substitute(a, args));
  return Term::app(outer.symbol(), std::move(out));
}

Term substitute(const Term& outer, std::size_t var_count, std::span<const Term> args) {
  if (args.size() != var_count)
    throw InputError("substitute: expected " + std::to_string(var_count) +
                     " arguments, got " + std::to_string(args.size()));
  return substitute(outer, args);
}

Term generic_term(const Symbol& symbol) {
  std::vector<Term> args;
  for (std::size_t i = 1; i <= symbol.arity; ++i) args.push_back(Term::var(i));
  return Term::app(symbol.name, std::move(args));
}

Equation commutation_equation(const Term& f, std::size_t n, const Term& g, std::size_t m) {
  if (f.max_var() > n || g.max_var() > m)
    throw InputError("commutation_equation: term uses more variables than its arity");
  auto x = [m](std::size_t i, std::size_t j) { return Term::var(flatten(i, j, m) + 1); };
  std::vector<Term> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> row;
    for (std::size_t j = 0; j < m; ++j) row.push_back(x(i, j));
    rows.push_back(substitute(g, row));
  }
  std::vector<Term> cols;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Term> col;
    for (std::size_t i = 0; i < n; ++i) col.push_back(x(i, j));
    cols.push_back(substitute(f, col));
  }
  return Equation{substitute(f, rows), substitute(g, cols), n * m};
}

Equation normalize_variables(const Equation& eq) {
  std::vector<std::size_t> order;
  std::function<void(const Term&)> collect = [&](const Term& t) {
    if (t.is_var()) {
      if (std::find(order.begin(), order.end(), t.var_index()) == order.end())
        order.push_back(t.var_index());
      return;
    }
    for (const auto& a : t.args()) collect(a);
  };
  collect(eq.lhs);
  collect(eq.rhs);
  const auto width = std::max(eq.var_count, std::max(eq.lhs.max_var(), eq.rhs.max_var()));
  std::vector<Term> renaming(width, Term::var(1));
  for (std::size_t i = 0; i < order.size(); ++i) renaming[order[i] - 1] = Term::var(i + 1);
  return Equation{substitute(eq.lhs, renaming), substitute(eq.rhs, renaming), order.size()};
}

}  // namespace catcom
