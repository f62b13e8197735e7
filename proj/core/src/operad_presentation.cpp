#include "catcom/operad_presentation.hpp"

#include <algorithm>

#include "catcom/error.hpp"
#include "catcom/tensor.hpp"
#include "lexer.hpp"

namespace catcom {

namespace {

Term relabel(const Term& t, const Permutation& perm) {
  if (t.is_var()) return Term::var(perm(t.var_index() - 1) + 1);
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(relabel(a, perm));
  return Term::app(t.symbol(), std::move(args));
}

void collect_leaves(const Term& t, std::vector<std::size_t>& out) {
  if (t.is_var()) {
    out.push_back(t.var_index());
    return;
  }
  for (const Term& a : t.args()) collect_leaves(a, out);
}

// Number of leaves when they are exactly 1..n once each.
std::size_t linear_arity(const Term& t, const char* side) {
  std::vector<std::size_t> leaves;
  collect_leaves(t, leaves);
  std::sort(leaves.begin(), leaves.end());
  for (std::size_t i = 0; i < leaves.size(); ++i)
    if (leaves[i] != i + 1)
      throw InputError(std::string(side) + " side of relation is not linear in leaves 1.." +
                       std::to_string(leaves.size()));
  return leaves.size();
}

std::string render_term(const Term& t) {
  if (t.is_var()) return std::to_string(t.var_index());
  std::string s = t.symbol();
  if (t.args().empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < t.args().size(); ++i) s += (i ? "," : "") + render_term(t.args()[i]);
  return s + ")";
}

Term block_term(const std::string& symbol, std::size_t arity, std::size_t first_leaf) {
  std::vector<Term> args;
  for (std::size_t i = 0; i < arity; ++i) args.push_back(Term::var(first_leaf + i));
  return Term::app(symbol, std::move(args));
}

}  // namespace

Term OperadRelation::relabelled_rhs() const { return relabel(rhs, perm); }

std::string OperadRelation::to_string() const {
  std::string s = render_term(lhs) + " = " + render_term(rhs);
  if (!perm.is_identity()) {
    s += " . perm(";
    for (std::size_t i = 0; i < perm.domain(); ++i) s += (i ? "," : "") + std::to_string(perm(i) + 1);
    s += ")";
  }
  return s;
}

void OperadPresentation::add_relation(Term lhs, Term rhs, std::optional<Permutation> perm) {
  check_term(generators_, lhs);
  check_term(generators_, rhs);
  const std::size_t n = linear_arity(lhs, "left");
  if (linear_arity(rhs, "right") != n)
    throw InputError("relation sides have different numbers of leaves");
  Permutation p = perm ? *perm : Permutation::identity(n);
  if (p.domain() != n || p.codomain() != n || !p.is_bijective())
    throw InputError("relation permutation must be a permutation of the " + std::to_string(n) + " leaves");
  relations_.push_back({std::move(lhs), std::move(rhs), n, std::move(p)});
}

Presentation to_presentation(const OperadPresentation& p) {
  std::vector<Equation> eqs;
  for (const auto& r : p.relations()) eqs.push_back(Equation::make(r.lhs, r.relabelled_rhs(), r.arity));
  return Presentation(p.generators(), std::move(eqs));
}

OperadPresentation bv_tensor_presentation(const OperadPresentation& p1, const OperadPresentation& p2) {
  std::vector<std::pair<std::string, std::string>> r1, r2;
  for (const auto& s : p1.generators().symbols())
    if (p2.generators().contains(s.name)) {
      r1.emplace_back(s.name, s.name + "_1");
      r2.emplace_back(s.name, s.name + "_2");
    }
  auto renamed = [](const std::string& name, const std::vector<std::pair<std::string, std::string>>& r) {
    for (const auto& [from, to] : r)
      if (from == name) return to;
    return name;
  };
  OperadPresentation out(p1.name() + "_x_" + p2.name());
  for (const auto& s : p1.generators().symbols()) out.add_generator(renamed(s.name, r1), s.arity);
  for (const auto& s : p2.generators().symbols()) out.add_generator(renamed(s.name, r2), s.arity);
  for (const auto& r : p1.relations())
    out.add_relation(rename_symbols(r.lhs, r1), rename_symbols(r.rhs, r1), r.perm);
  for (const auto& r : p2.relations())
    out.add_relation(rename_symbols(r.lhs, r2), rename_symbols(r.rhs, r2), r.perm);
  for (const auto& psi : p1.generators().symbols())
    for (const auto& phi : p2.generators().symbols()) {
      const std::size_t n = psi.arity, m = phi.arity;
      const std::string a = renamed(psi.name, r1), b = renamed(phi.name, r2);
      std::vector<Term> rows, cols;
      for (std::size_t i = 0; i < n; ++i) rows.push_back(block_term(b, m, i * m + 1));
      for (std::size_t j = 0; j < m; ++j) cols.push_back(block_term(a, n, j * n + 1));
      out.add_relation(Term::app(a, std::move(rows)), Term::app(b, std::move(cols)),
                       transpose_permutation(n, m));
    }
  return out;
}

std::vector<OperadAlgebra> enumerate_operad_algebras(const OperadPresentation& p, std::size_t k,
                                                     const EnumerationOptions& options) {
  return enumerate_models(std::make_shared<const Presentation>(to_presentation(p)), k, options);
}

std::size_t count_interchanging_pairs(const OperadPresentation& p1, const OperadPresentation& p2,
                                      std::size_t k, const EnumerationOptions& options) {
  const auto a1 = enumerate_operad_algebras(p1, k, options);
  const auto a2 = enumerate_operad_algebras(p2, k, options);
  std::size_t count = 0;
  for (const auto& x : a1)
    for (const auto& y : a2)
      if (is_commuting_pair(x, y)) ++count;
  return count;
}

OperadPresentation parse_operad_presentation(std::string_view text) {
  detail::TokenStream ts(text);
  ts.expect("presented_operad");
  OperadPresentation p(ts.expect_identifier("operad name"));
  ts.expect("{");
  auto term = [&](auto&& self) -> Term {
    const auto tok = ts.peek();
    if (tok.kind == detail::TokenKind::number) {
      const auto leaf = ts.expect_number("leaf");
      if (leaf == 0) ts.fail_at(tok, "leaves are numbered from 1");
      return Term::var(leaf);
    }
    auto name = ts.expect_identifier("generator or leaf");
    auto sym = p.generators().find(name);
    if (!sym) ts.fail_at(tok, "undeclared generator '" + name + "'");
    std::vector<Term> args;
    if (ts.accept("(") && !ts.accept(")")) {
      do args.push_back(self(self));
      while (ts.accept(","));
      ts.expect(")");
    }
    if (args.size() != p.generators().symbols()[*sym].arity)
      ts.fail_at(tok, "generator '" + name + "' has arity " +
                          std::to_string(p.generators().symbols()[*sym].arity));
    return Term::app(std::move(name), std::move(args));
  };
  while (!ts.accept("}")) {
    const auto tok = ts.peek();
    if (ts.accept("gen")) {
      const auto ntok = ts.peek();
      auto name = ts.expect_identifier("generator name");
      ts.expect(":");
      const auto arity = ts.expect_number("arity");
      ts.expect(";");
      if (p.generators().contains(name)) ts.fail_at(ntok, "duplicate generator '" + name + "'");
      p.add_generator(std::move(name), arity);
    } else if (ts.accept("rel")) {
      Term lhs = term(term);
      ts.expect("=");
      Term rhs = term(term);
      std::optional<Permutation> perm;
      if (ts.accept(".")) {
        ts.expect("perm");
        ts.expect("(");
        std::vector<std::size_t> values;
        do {
          const auto vtok = ts.peek();
          const auto v = ts.expect_number("permutation entry");
          if (v == 0) ts.fail_at(vtok, "permutation entries are 1-based");
          values.push_back(v - 1);
        } while (ts.accept(","));
        ts.expect(")");
        const std::size_t n = values.size();
        perm = Permutation(n, std::max(n, *std::max_element(values.begin(), values.end()) + 1), values);
      }
      ts.expect(";");
      try {
        p.add_relation(std::move(lhs), std::move(rhs), perm);
      } catch (const InputError& e) {
        ts.fail_at(tok, e.what());
      }
    } else {
      ts.fail_at(tok, "expected 'gen', 'rel' or '}'");
    }
  }
  if (!ts.at_end()) ts.fail("trailing input after operad presentation");
  return p;
}

std::string render_operad_presentation(const OperadPresentation& p) {
  std::string out = "presented_operad " + p.name() + " {\n";
  for (const auto& s : p.generators().symbols())
    out += "  gen " + s.name + ":" + std::to_string(s.arity) + ";\n";
  for (const auto& r : p.relations()) out += "  rel " + r.to_string() + ";\n";
  return out + "}\n";
}

OperadPresentation ass_presentation() {
  return parse_operad_presentation("presented_operad ass { gen m:2; rel m(m(1,2),3) = m(1,m(2,3)); }");
}

OperadPresentation ass_unital_presentation() {
  return parse_operad_presentation(
      "presented_operad ass_u { gen m:2; gen e:0;"
      " rel m(m(1,2),3) = m(1,m(2,3)); rel m(e,1) = 1; rel m(1,e) = 1; }");
}

OperadPresentation com_presentation() {
  return parse_operad_presentation(
      "presented_operad com { gen m:2; rel m(m(1,2),3) = m(1,m(2,3)); rel m(1,2) = m(2,1); }");
}

OperadPresentation com_unital_presentation() {
  return parse_operad_presentation(
      "presented_operad com_u { gen m:2; gen e:0;"
      " rel m(m(1,2),3) = m(1,m(2,3)); rel m(1,2) = m(2,1); rel m(e,1) = 1; }");
}

OperadPresentation trivial_presentation() { return OperadPresentation("unit"); }

}  // namespace catcom
