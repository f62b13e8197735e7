#include "commands.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <variant>

#include <catcom/clone.hpp>
#include <catcom/decide.hpp>
#include <catcom/duoidal.hpp>
#include <catcom/error.hpp>
#include <catcom/funny.hpp>
#include <catcom/model.hpp>
#include <catcom/tensor.hpp>

#include "loaders.hpp"

namespace catcom::cli {

namespace {

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

Report start(const char* verb, const std::vector<std::string>& inputs, const Options& o) {
  Report r;
  r.verb = verb;
  r.inputs = inputs;
  r.bounds = bounds_line(o);
  if (o.seed_set) r.seed = std::to_string(o.seed);
  return r;
}

const Symbol& symbol_of(const Signature& sig, const std::string& name, const std::string& where) {
  const auto i = sig.find(name);
  if (!i) throw InputFailure(where + ": unknown operation '" + name + "'");
  return sig.symbols()[*i];
}

void require_ops(const Options& o, std::size_t n, const char* what) {
  if (o.ops.size() != n)
    throw InputFailure("--ops: expected " + std::to_string(n) + " " + what + ", got " +
                       std::to_string(o.ops.size()));
}

DecideOptions decide_options(const Options& o) {
  DecideOptions d;
  d.depth_bound = o.depth;
  d.model_bound = o.model_bound;
  return d;
}

// Records a decide_equal verdict; returns the verdict kind.
Verdict record_equality(Report& r, const Presentation& p, const Equation& eq,
                        const EqualityVerdict& v) {
  if (const auto* proof = std::get_if<Proved>(&v)) {
    r.add("proof", "universe=" + std::to_string(proof->universe_size) +
                       " instances=" + std::to_string(proof->instances) +
                       " rounds=" + std::to_string(proof->congruence_rounds));
    return Verdict::pass;
  }
  if (const auto* ref = std::get_if<Refuted>(&v)) {
    r.witness("witness_equation", eq.to_string());
    r.witness("witness_model", render_algebra(ref->model.to_algebra(p.name() + "_model"), true));
    r.witness("witness_assignment", join(ref->assignment));
    r.witness("witness_values", std::to_string(ref->lhs_value) + "," + std::to_string(ref->rhs_value));
    return Verdict::fail;
  }
  const auto& u = std::get<Unknown>(v);
  r.add("diagnostic", u.diagnostic.empty() ? std::string("none") : u.diagnostic);
  return Verdict::unknown;
}

void apply(Report& r, Verdict v, const std::string& exhausted) {
  if (v == Verdict::fail) r.fail();
  if (v == Verdict::unknown) r.unknown(exhausted);
}

void report_laws(Report& r, const LawReport& laws, const std::string& prefix = "law") {
  bool exhaustive = true;
  for (const auto& c : laws.coverage()) exhaustive = exhaustive && c.exhaustive;
  r.add(prefix + "s_exhaustive", exhaustive);
  if (laws.ok()) return;
  r.fail();
  for (const auto& f : laws.failures()) r.witness("witness_" + prefix, f.law + ": " + f.witness);
}

Term parse_goal_side(const std::string& text, const Signature& sig) {
  try {
    return parse_term(text, sig);
  } catch (const ParseError& e) {
    throw InputFailure("--goal: " + std::string(e.what()));
  } catch (const InputError& e) {
    throw InputFailure("--goal: " + std::string(e.what()));
  }
}

Equation parse_goal(const std::string& text, const Signature& sig) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw InputFailure("--goal: expected 'lhs = rhs'");
  std::string rhs = text.substr(eq + 1);
  if (const auto semi = rhs.find(';'); semi != std::string::npos) rhs.resize(semi);
  return Equation::make(parse_goal_side(text.substr(0, eq), sig), parse_goal_side(rhs, sig));
}

// Built-in names resolve to theories first, then algebras, then monoids.
std::string resolved_kind(const std::string& path) {
  const std::string kind = input_kind(path);
  if (kind != "builtin") return kind;
  const auto name = path.substr(std::string("builtin:").size());
  const auto theories = builtin_theory_names();
  if (std::find(theories.begin(), theories.end(), name) != theories.end()) return "theory";
  const auto algebras = builtin_algebra_names();
  if (std::find(algebras.begin(), algebras.end(), name) != algebras.end()) return "algebra";
  return "monoid";
}

// ---- check-theory

Report check_theory(const std::vector<std::string>& in, const Options& o, Artifact& art) {
  Report r = start("check-theory", in, o);
  bool has_goal = false;
  Problem prob = load_problem(in[0], has_goal);
  const auto& p = prob.presentation;
  if (!o.goal.empty()) {
    prob.goal = parse_goal(o.goal, p.signature());
    has_goal = true;
  }
  r.add("theory", p.name());
  r.add("operations", p.signature().size());
  r.add("equations", p.equations().size());
  art.text = has_goal ? render_problem(prob) : render_presentation(p);
  if (!has_goal) {
    r.add("canonical", one_line(render_presentation(p)));
    return r;
  }
  r.add("goal", prob.goal.to_string());
  const auto v = decide_equal(p, prob.goal, decide_options(o));
  apply(r, record_equality(r, p, prob.goal, v),
        "depth=" + std::to_string(o.depth) + " model-bound=" + std::to_string(o.model_bound));
  return r;
}

// ---- commute

void commute_theory(Report& r, const Presentation& p, const Options& o) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (!o.ops.empty()) {
    require_ops(o, 2, "operations");
    const auto& sig = p.signature();
    symbol_of(sig, o.ops[0], "--ops");
    symbol_of(sig, o.ops[1], "--ops");
    pairs.emplace_back(*sig.find(o.ops[0]), *sig.find(o.ops[1]));
  } else {
    for (std::size_t i = 0; i < p.signature().size(); ++i)
      for (std::size_t j = i; j < p.signature().size(); ++j) pairs.emplace_back(i, j);
  }
  std::size_t proved = 0, unknown = 0;
  std::optional<std::pair<std::size_t, std::size_t>> first_unknown;
  for (const auto& [i, j] : pairs) {
    const auto& f = p.signature().symbols()[i];
    const auto& g = p.signature().symbols()[j];
    const auto eq = commutation_equation(generic_term(f), f.arity, generic_term(g), g.arity);
    const auto v = decide_equal(p, eq, decide_options(o));
    if (is_refuted(v)) {
      r.add("pair", f.name + "," + g.name);
      r.add("pairs_proved", proved);
      record_equality(r, p, eq, v);
      r.fail();
      return;
    }
    if (is_proved(v)) {
      ++proved;
    } else {
      ++unknown;
      if (!first_unknown) first_unknown.emplace(i, j);
    }
  }
  r.add("pairs", pairs.size());
  r.add("pairs_proved", proved);
  if (unknown > 0) {
    const auto& sy = p.signature().symbols();
    r.add("first_open_pair", sy[first_unknown->first].name + "," + sy[first_unknown->second].name);
    r.unknown("depth=" + std::to_string(o.depth) + " model-bound=" + std::to_string(o.model_bound));
  }
}

Term generic(const std::string& name, std::size_t arity, std::size_t offset) {
  std::vector<Term> args;
  for (std::size_t i = 0; i < arity; ++i) args.push_back(Term::var(offset + i + 1));
  return Term::app(name, std::move(args));
}

void commute_algebra(Report& r, const FiniteAlgebra& a, const Options& o) {
  const auto c = clone_of_algebra(a, o.arity);
  std::vector<std::size_t> sizes;
  for (std::size_t n = 0; n <= o.arity; ++n) sizes.push_back(c->size(n));
  r.add("clone_sizes", join(sizes));
  if (o.ops.empty()) {
    const auto v = is_commutative_clone(*c);
    if (v.commutative) {
      r.add("commutative_up_to", o.arity);
      return;
    }
    const auto [f, g] = *v.witness;
    r.witness("witness_pair", "T(" + std::to_string(f.arity) + ")#" + std::to_string(f.id) + " " +
                                  c->describe(f) + " ; T(" + std::to_string(g.arity) + ")#" +
                                  std::to_string(g.id) + " " + c->describe(g));
    if (auto cex = interchange_counterexample(c->table(f), f.arity, c->table(g), g.arity,
                                              a.carrier()))
      r.witness("witness_assignment", join(*cex));
    r.fail();
    return;
  }
  require_ops(o, 2, "operations");
  const auto& sig = a.signature();
  const auto& fs = symbol_of(sig, o.ops[0], "--ops");
  const auto& gs = symbol_of(sig, o.ops[1], "--ops");
  const std::size_t n = fs.arity, m = gs.arity;
  const auto& ft = a.table(fs.name);
  const auto& gt = a.table(gs.name);
  if (n * m <= o.arity) {
    const Op f{n, *c->find(n, ft)}, g{m, *c->find(m, gt)};
    const bool direct = op_commutes(*c, f, g);
    const bool composite = op_commutes_duoidal(*c, f, g);
    r.add("duoidal_agrees", direct == composite);
  } else {
    r.add("duoidal_agrees", std::string("skipped (n*m > N)"));
  }
  const auto cex = interchange_counterexample(ft, n, gt, m, a.carrier());
  if (!cex) return;
  // Both sides over the n*m variables x_{ij} at index i*m + j + 1.
  std::vector<Term> rows, cols;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(generic(gs.name, m, i * m));
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Term> args;
    for (std::size_t i = 0; i < n; ++i) args.push_back(Term::var(i * m + j + 1));
    cols.push_back(Term::app(fs.name, std::move(args)));
  }
  const Equation eq = Equation::make(Term::app(fs.name, rows), Term::app(gs.name, cols), n * m);
  r.witness("witness_equation", eq.to_string());
  r.witness("witness_assignment", join(*cex));
  r.witness("witness_values", std::to_string(evaluate(a, eq.lhs, *cex)) + "," +
                                  std::to_string(evaluate(a, eq.rhs, *cex)));
  r.fail();
}

void commute_monoid(Report& r, const FiniteMonoid& m) {
  const auto id = identity_map(m);
  const auto v = monoid_cospan_commutes(id, id);
  r.add("order", m.size());
  if (v) return;
  r.witness("witness_elements", std::to_string(v.witness->first) + "," + std::to_string(v.witness->second));
  r.fail();
}

Report commute(const std::vector<std::string>& in, const Options& o, Artifact&) {
  Report r = start("commute", in, o);
  const std::string kind = resolved_kind(in[0]);
  r.add("kind", kind);
  if (!o.ops.empty()) r.add("ops", join(o.ops));
  if (kind == "theory") commute_theory(r, load_theory(in[0]), o);
  else if (kind == "algebra") commute_algebra(r, load_algebra(in[0]), o);
  else if (kind == "monoid") commute_monoid(r, load_monoid(in[0]));
  else throw InputFailure(in[0] + ": expected a theory, algebra or monoid file");
  return r;
}

// ---- tensor, models, verify-tensor

Report tensor(const std::vector<std::string>& in, const Options& o, Artifact& art) {
  Report r = start("tensor", in, o);
  const auto s = load_theory(in[0]);
  const auto t = load_theory(in[1]);
  const auto u = commuting_tensor_presentation(s, t);
  r.add("operations", u.presentation.signature().size());
  r.add("equations", u.presentation.equations().size());
  r.add("presentation", one_line(render_presentation(u.presentation)));
  art.text = render_presentation(u.presentation);
  if (o.size_set) {
    try {
      for (std::size_t k = 0; k <= o.size; ++k)
        r.add("models_k" + std::to_string(k), enumerate_models(u.presentation, k).size());
    } catch (const LimitError& e) {
      r.add("diagnostic", std::string(e.what()));
      r.unknown("size=" + std::to_string(o.size));
    }
  }
  return r;
}

Report models(const std::vector<std::string>& in, const Options& o, Artifact& art) {
  Report r = start("models", in, o);
  const auto p = load_theory(in[0]);
  try {
    const auto ms = enumerate_models(p, o.size);
    r.add("carrier", o.size);
    r.add("count", ms.size());
    std::ostringstream dump;
    for (std::size_t i = 0; i < ms.size(); ++i)
      dump << render_algebra(ms[i].to_algebra(p.name() + "_" + std::to_string(i)));
    art.text = dump.str();
    if (!ms.empty()) r.add("first_model", render_algebra(ms[0].to_algebra(p.name() + "_0"), true));
  } catch (const LimitError& e) {
    r.add("diagnostic", std::string(e.what()));
    r.unknown("size=" + std::to_string(o.size));
  }
  return r;
}

Report verify_tensor(const std::vector<std::string>& in, const Options& o, Artifact&) {
  Report r = start("verify-tensor", in, o);
  const auto s = load_theory(in[0]);
  const auto t = load_theory(in[1]);
  try {
    for (std::size_t k = 0; k <= o.size; ++k) {
      const auto c = verify_tensor_correspondence(s, t, k);
      r.add("k" + std::to_string(k), "tensor_models=" + std::to_string(c.tensor_models) +
                                         " commuting_pairs=" + std::to_string(c.commuting_pairs) +
                                         " s_models=" + std::to_string(c.s_models) +
                                         " t_models=" + std::to_string(c.t_models));
      if (!c.report.ok()) {
        report_laws(r, c.report);
        return r;
      }
    }
  } catch (const LimitError& e) {
    r.add("diagnostic", std::string(e.what()));
    r.unknown("size=" + std::to_string(o.size));
  }
  return r;
}

// ---- clone, centralizer

std::vector<std::size_t> clone_sizes(const CloneTruncation& c) {
  std::vector<std::size_t> sizes;
  for (std::size_t n = 0; n <= c.bound(); ++n) sizes.push_back(c.size(n));
  return sizes;
}

// Admissible pairs on which the direct and the composite interchange tests
// agree.
std::pair<std::size_t, std::size_t> oracle_agreement(const CloneTruncation& c) {
  std::size_t pairs = 0, agree = 0;
  for (std::size_t n = 0; n <= c.bound(); ++n)
    for (std::size_t m = 0; n * m <= c.bound() && m <= c.bound(); ++m)
      for (ElementId f = 0; f < c.size(n); ++f)
        for (ElementId g = 0; g < c.size(m); ++g) {
          ++pairs;
          if (op_commutes(c, {n, f}, {m, g}) == op_commutes_duoidal(c, {n, f}, {m, g})) ++agree;
        }
  return {pairs, agree};
}

Report clone(const std::vector<std::string>& in, const Options& o, Artifact& art) {
  Report r = start("clone", in, o);
  const auto a = load_algebra(in[0]);
  try {
    const auto c = clone_of_algebra(a, o.arity);
    r.add("sizes", join(clone_sizes(*c)));
    art.text = render_clone(*c);
    const auto v = is_commutative_clone(*c);
    r.add("commutative", v.commutative);
    if (!v.commutative)
      r.add("non_commuting_pair", c->describe(v.witness->first) + " ; " + c->describe(v.witness->second));
    const auto [pairs, agree] = oracle_agreement(*c);
    r.add("oracle_pairs", pairs);
    r.add("oracle_agree", agree);
    // Sampled law check; the library default is sized for offline validation.
    report_laws(r, validate_clone(*c, ValidationOptions{20000}));
    if (agree != pairs) {
      r.fail();
      r.witness("witness_oracle", std::to_string(pairs - agree) + " disagreeing pairs");
    }
  } catch (const LimitError& e) {
    r.add("diagnostic", std::string(e.what()));
    r.unknown("arity=" + std::to_string(o.arity));
  }
  return r;
}

std::vector<int> monoid_elements(const FiniteMonoid& m, const std::vector<std::string>& names) {
  std::vector<int> out;
  for (const auto& s : names) {
    std::size_t pos = 0;
    int v = -1;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
    }
    if (pos != s.size() || v < 0 || static_cast<std::size_t>(v) >= m.size())
      throw InputFailure("--ops: '" + s + "' is not an element of " + m.name());
    out.push_back(v);
  }
  return out;
}

Report centralizer(const std::vector<std::string>& in, const Options& o, Artifact& art) {
  Report r = start("centralizer", in, o);
  const std::string kind = resolved_kind(in[0]);
  if (kind == "monoid") {
    const auto m = load_monoid(in[0]);
    const auto gens = monoid_elements(m, o.ops);
    const auto sub = generated_submonoid(m, gens.empty() ? std::vector<int>{} : gens);
    const auto f = gens.empty() ? identity_map(m) : sub.inclusion(m);
    const auto z = monoid_centralizer(f);
    r.add("kind", "monoid");
    r.add("generators", gens.empty() ? std::string("all") : join(gens));
    r.add("centralizer", join(z.elements));
    // The three equivalent readings of commutation, on every element pair.
    std::size_t checked = 0;
    for (int a = 0; a < int(m.size()); ++a) {
      const auto ga = generated_submonoid(m, {a});
      const auto fa = ga.inclusion(m);
      const auto zfa = monoid_centralizer(fa);
      const bool c1 = bool(monoid_cospan_commutes(fa, f));
      const bool c2 = std::all_of(ga.elements.begin(), ga.elements.end(), [&](int x) {
        return std::binary_search(z.elements.begin(), z.elements.end(), x);
      });
      const bool c3 = std::all_of(f.map.begin(), f.map.end(), [&](int x) {
        return std::binary_search(zfa.elements.begin(), zfa.elements.end(), x);
      });
      ++checked;
      if (c1 != c2 || c1 != c3) {
        r.witness("witness_element", std::to_string(a));
        r.fail();
      }
    }
    r.add("equivalence_checks", checked);
    art.text = render_monoid(z.monoid);
    return r;
  }
  const auto a = load_algebra(in[0]);
  try {
    const auto c = centralizer_clone(a, o.arity);
    r.add("kind", "algebra");
    r.add("sizes", join(clone_sizes(*c)));
    art.text = render_clone(*c);
    // Every element interchanges with every basic operation of the algebra.
    std::size_t checked = 0;
    for (std::size_t n = 0; n <= c->bound(); ++n)
      for (ElementId f = 0; f < c->size(n); ++f)
        for (std::size_t s = 0; s < a.signature().size(); ++s) {
          ++checked;
          const auto& sym = a.signature().symbols()[s];
          if (interchange_counterexample(c->table({n, f}), n, a.table(s), sym.arity, a.carrier())) {
            r.witness("witness_element", c->describe({n, f}) + " against " + sym.name);
            r.fail();
            return r;
          }
        }
    r.add("interchange_checks", checked);
  } catch (const LimitError& e) {
    r.add("diagnostic", std::string(e.what()));
    r.unknown("arity=" + std::to_string(o.arity));
  }
  return r;
}

// ---- operads

std::optional<Op> find_operad_element(const SymOperadTruncation& o, const std::string& name) {
  for (std::size_t n = 0; n <= o.bound(); ++n)
    for (ElementId x = 0; x < o.size(n); ++x)
      if (o.describe({n, x}) == name) return Op{n, x};
  return std::nullopt;
}

Report operad(const std::vector<std::string>& in, const Options& o, Artifact& art) {
  Report r = start("operad", in, o);
  const auto op = load_operad(in[0], o.arity);
  r.add("operad", op->name());
  r.add("bound", op->bound());
  std::vector<std::size_t> sizes;
  for (std::size_t n = 0; n <= op->bound(); ++n) sizes.push_back(op->size(n));
  r.add("sizes", join(sizes));
  art.text = render_operad(*op);
  report_laws(r, validate_operad(*op));
  if (r.verdict == Verdict::fail) return r;
  const auto th = theory_of_operad(op, o.arity);
  r.add("theory_sizes", join(clone_sizes(*th)));

  if (!o.ops.empty()) {
    require_ops(o, 2, "operad elements");
    const auto psi = find_operad_element(*op, o.ops[0]);
    const auto phi = find_operad_element(*op, o.ops[1]);
    if (!psi || !phi) throw InputFailure("--ops: unknown operad element");
    if (psi->arity * phi->arity > op->bound()) {
      r.unknown("K=" + std::to_string(op->bound()));
      return r;
    }
    const bool a = operad_pair_commutes(*op, *psi, *phi);
    r.add("commutes", a);
    if (psi->arity * phi->arity <= o.arity)
      r.add("theory_agrees", a == op_commutes(*th, th->image(*psi), th->image(*phi)));
    if (!a) {
      r.witness("witness_pair", o.ops[0] + "," + o.ops[1]);
      r.fail();
    }
    return r;
  }
  std::size_t pairs = 0, commuting = 0, agree = 0;
  std::optional<std::pair<Op, Op>> first;
  for (std::size_t n = 0; n <= op->bound(); ++n)
    for (std::size_t m = 0; m <= op->bound() && n * m <= op->bound(); ++m)
      for (ElementId x = 0; x < op->size(n); ++x)
        for (ElementId y = 0; y < op->size(m); ++y) {
          ++pairs;
          const bool a = operad_pair_commutes(*op, {n, x}, {m, y});
          if (a) ++commuting;
          else if (!first) first.emplace(Op{n, x}, Op{m, y});
          if (n * m > o.arity || a == op_commutes(*th, th->image({n, x}), th->image({m, y}))) ++agree;
        }
  r.add("pairs", pairs);
  r.add("commuting_pairs", commuting);
  r.add("theory_agreement", agree);
  if (first) r.add("first_non_commuting", op->describe(first->first) + "," + op->describe(first->second));
  if (agree != pairs) {
    r.witness("witness_disagreement", std::to_string(pairs - agree) + " pairs");
    r.fail();
  }
  return r;
}

Report bv(const std::vector<std::string>& in, const Options& o, Artifact& art) {
  Report r = start("bv", in, o);
  const auto p1 = load_operad_presentation(in[0]);
  const auto p2 = load_operad_presentation(in[1]);
  const auto t = bv_tensor_presentation(p1, p2);
  r.add("generators", t.generators().size());
  r.add("relations", t.relations().size());
  r.add("presentation", one_line(render_operad_presentation(t)));
  art.text = render_operad_presentation(t);
  try {
    for (std::size_t k = 0; k <= o.size; ++k) {
      const auto algebras = enumerate_operad_algebras(t, k).size();
      const auto pairs = count_interchanging_pairs(p1, p2, k);
      r.add("k" + std::to_string(k),
            "algebras=" + std::to_string(algebras) + " interchanging_pairs=" + std::to_string(pairs));
      if (algebras != pairs) {
        r.witness("witness_carrier", std::to_string(k));
        r.fail();
        return r;
      }
    }
  } catch (const LimitError& e) {
    r.add("diagnostic", std::string(e.what()));
    r.unknown("size=" + std::to_string(o.size));
  }
  return r;
}

// ---- categories

Report cat(const std::vector<std::string>& in, const Options& o, Artifact& art) {
  Report r = start("cat", in, o);
  const auto a = load_category(in[0]);
  if (in.size() == 1) {
    r.add("objects", a.object_count());
    r.add("arrows", a.arrow_count());
    art.text = render_category(a);
    return r;
  }
  const auto b = load_category(in[1]);
  const FunnyTensor ft(a, b);
  const auto& prod = ft.product();
  std::size_t funny = 0, product = 0;
  bool truncated = false;
  std::optional<std::pair<ObjectId, ObjectId>> differs;
  for (ObjectId s = 0; s < ft.object_count(); ++s)
    for (ObjectId t = 0; t < ft.object_count(); ++t) {
      const auto h = ft.hom(s, t, o.word_len);
      funny += h.arrows.size();
      product += prod.hom(s, t).size();
      truncated = truncated || h.truncated;
      if (!differs && (h.truncated || h.arrows.size() != prod.hom(s, t).size())) differs.emplace(s, t);
    }
  r.add("funny_arrows", funny);
  r.add("product_arrows", product);
  r.add("truncated", truncated);
  if (differs)
    r.add("first_difference", prod.objects()[differs->first] + " -> " + prod.objects()[differs->second]);
  if (!o.ops.empty()) {
    require_ops(o, 2, "objects");
    const auto s = prod.find_object(o.ops[0]);
    const auto t = prod.find_object(o.ops[1]);
    if (!s || !t) throw InputFailure("--ops: unknown object of the product");
    const auto h = ft.hom(*s, *t, o.word_len);
    std::vector<std::string> words;
    for (const auto& w : h.arrows) words.push_back(ft.describe(w));
    r.add("hom_funny", h.arrows.size());
    r.add("hom_product", prod.hom(*s, *t).size());
    r.add("hom_words", words.empty() ? std::string("none") : join(words, " | "));
  }
  const auto conf = ft.check_local_confluence(std::min<std::size_t>(o.word_len, 4));
  r.add("confluence_words", conf.words);
  r.add("confluence_peaks", conf.peaks);
  if (!conf.ok()) {
    r.witness("witness_word", ft.describe(*conf.witness));
    r.fail();
  }
  if (auto fc = ft.to_category()) art.text = render_category(fc->category);
  return r;
}

std::string cell_name(const SesquiData& s, CellId c) { return s.cell(c).name; }

Report sesqui(const std::vector<std::string>& in, const Options& o, Artifact& art) {
  Report r = start("sesqui", in, o);
  const auto s = load_sesqui(in[0]);
  r.add("objects", s.base().object_count());
  r.add("arrows", s.base().arrow_count());
  r.add("cells", s.cell_count());
  art.text = render_sesqui(s);
  report_laws(r, sesqui_validate(s), "sesqui_law");
  if (r.verdict == Verdict::fail) return r;
  const auto ws = sesqui_interchange_all(s);
  r.add("interchange_failures", ws.size());
  if (!ws.empty()) {
    const auto& w = ws.front();
    r.witness("witness_cells", cell_name(s, w.alpha) + "," + cell_name(s, w.beta));
    r.witness("witness_composites", cell_name(s, w.lhs) + " != " + cell_name(s, w.rhs));
    r.fail();
    return r;
  }
  const auto two = two_category_check(s);
  r.add("two_category", two.ok());
  report_laws(r, two, "two_category_law");
  return r;
}

// ---- premonoidal, freyd

std::string arrow_names(const FiniteCategory& c, const std::vector<ArrowId>& xs) {
  std::vector<std::string> names;
  for (auto x : xs) names.push_back(c.arrow(x).name);
  return names.empty() ? std::string("none") : join(names);
}

Report premonoidal(const std::vector<std::string>& in, const Options& o, Artifact& art) {
  Report r = start("premonoidal", in, o);
  const auto p = load_premonoidal(in[0]);
  const auto& c = p.base();
  r.add("objects", c.object_count());
  r.add("arrows", c.arrow_count());
  report_laws(r, premonoidal_validate(p), "premonoidal_law");
  if (r.verdict == Verdict::fail) return r;
  const auto central = central_arrows(p);
  r.add("central_arrows", central.size());
  r.add("centre", arrow_names(c, central));
  r.add("monoidal", central.size() == c.arrow_count());
  for (ArrowId f = 0; f < c.arrow_count(); ++f)
    if (auto w = centrality_witness(p, f)) {
      r.add("non_central", c.arrow(w->f).name + " against " + c.arrow(w->g).name + " square " +
                               std::to_string(w->square));
      break;
    }
  art.text = render_premonoidal(premonoidal_centre(p).structure);
  return r;
}

std::vector<ArrowId> arrows_by_name(const FiniteCategory& c, const std::string& list) {
  std::vector<ArrowId> out;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, '+')) {
    const auto f = c.find_arrow(name);
    if (!f) throw InputFailure("--ops: unknown arrow '" + name + "'");
    out.push_back(*f);
  }
  return out;
}

Report freyd(const std::vector<std::string>& in, const Options& o, Artifact& art) {
  Report r = start("freyd", in, o);
  const auto m = load_premonoidal(in[0]);
  const auto& c = m.base();
  report_laws(r, premonoidal_validate(m), "premonoidal_law");
  if (r.verdict == Verdict::fail) return r;
  const auto z = premonoidal_centre(m);
  r.add("centre_arrows", z.structure.base().arrow_count());
  const auto laws = freyd_validate(z.structure, m, z.inclusion);
  r.add("centre_inclusion_freyd", laws.ok());
  report_laws(r, laws, "freyd_law");
  if (r.verdict == Verdict::fail) return r;
  std::vector<ArrowId> xs, ys;
  if (o.ops.empty()) {
    for (ArrowId f = 0; f < c.arrow_count(); ++f) xs.push_back(f);
    ys = xs;
  } else {
    require_ops(o, 2, "arrow lists (a+b+...)");
    xs = arrows_by_name(c, o.ops[0]);
    ys = arrows_by_name(c, o.ops[1]);
  }
  r.add("xs", xs.size());
  r.add("ys", ys.size());
  const auto v = freyd_cospan_commutes(m, xs, ys);
  art.text = render_premonoidal(z.structure);
  if (v) return r;
  r.witness("witness_arrows", c.arrow(v.witness->first).name + "," + c.arrow(v.witness->second).name);
  r.fail();
  return r;
}

// ---- graded

Report graded(const std::vector<std::string>& in, const Options& o, Artifact& art) {
  Report r = start("graded", in, o);
  const auto g = load_graded(in[0], o.depth);
  r.add("algebra", g.name());
  r.add("p", std::to_string(g.p()));
  r.add("q", std::to_string(g.q()));
  art.text = render_graded(g);
  report_laws(r, validate_graded(g), "graded_law");
  if (r.verdict == Verdict::fail) return r;
  auto vector_of = [&](const std::string& text) {
    try {
      return parse_graded_vector(g, text);
    } catch (const Error& e) {
      throw InputFailure("--ops: " + std::string(e.what()));
    }
  };
  if (!o.ops.empty()) {
    require_ops(o, 2, "graded elements");
    const auto f = vector_of(o.ops[0]);
    const auto h = vector_of(o.ops[1]);
    GradedVerdict v;
    try {
      v = graded_q_cospan_commutes(g, f, h);
    } catch (const BoundError& e) {
      r.add("diagnostic", std::string(e.what()));
      r.unknown("D=" + std::to_string(g.bound()));
      return r;
    } catch (const InputError& e) {
      throw InputFailure("--ops: " + std::string(e.what()));
    }
    r.add("left", v.left);
    r.add("right", v.right);
    const bool ok = o.left ? v.left : o.right ? v.right : (v.left && v.right);
    if (!ok) {
      r.witness("witness_pair", o.ops[0] + "," + o.ops[1]);
      r.fail();
    }
    return r;
  }
  // All homogeneous basis pairs within the bound.
  std::size_t pairs = 0, asymmetric = 0, braided = 0;
  for (std::size_t i = 0; i < g.dimension(); ++i)
    for (std::size_t j = 0; j < g.dimension(); ++j) {
      if (g.basis()[i].grade + g.basis()[j].grade > g.bound()) continue;
      const auto f = g.basis_vector(i), h = g.basis_vector(j);
      const auto a = graded_q_cospan_commutes(g, f, h);
      const auto b = graded_q_cospan_commutes(g, h, f);
      ++pairs;
      if (a.left != a.right) ++asymmetric;
      if (a.left == b.right && a.right == b.left) ++braided;
    }
  r.add("pairs", pairs);
  r.add("asymmetric_pairs", asymmetric);
  r.add("braiding_relation", braided);
  if (braided != pairs) {
    r.witness("witness_pairs", std::to_string(pairs - braided) + " pairs break left(f,g) = right(g,f)");
    r.fail();
  }
  return r;
}

// ---- gen

Report gen(const std::vector<std::string>& in, const Options& o, Artifact& art) {
  Report r = start("gen", in, o);
  r.seed = std::to_string(o.seed);
  r.add("count", o.count);
  std::ostringstream all;
  for (std::size_t i = 0; i < o.count; ++i) {
    const auto p = generate_problem(o.seed + i);
    const auto text = render_problem(p);
    art.files.emplace_back("problem_" + std::to_string(o.seed + i) + ".thy", text);
    if (o.out.empty() && !o.check) r.add("problem", one_line(text));
  }
  if (!o.check) return r;
  StressOptions so;
  if (o.depth_set || o.model_bound_set) so.bounds = {{3, 2}, {o.depth, o.model_bound}};
  const auto s = soundness_stress(o.seed, o.count, so);
  r.add("proved", s.proved);
  r.add("refuted", s.refuted);
  r.add("unknown", s.unknown);
  r.add("contradictions", s.contradictions);
  r.add("bad_certificates", s.bad_certificates);
  if (s.contradictions > 0 || s.bad_certificates > 0) {
    r.witness("witness_problem", s.first_problem);
    r.fail();
  }
  return r;
}

}  // namespace

std::string bounds_line(const Options& o) {
  return "N=" + std::to_string(o.arity) + " K=" + std::to_string(o.size) +
         " D=" + std::to_string(o.depth) + " B=" + std::to_string(o.model_bound) +
         " L=" + std::to_string(o.word_len);
}

const std::vector<VerbSpec>& verbs() {
  static const std::vector<VerbSpec> table = {
      {"check-theory", "Parse a theory; with a goal, decide it", 1, 1, check_theory},
      {"commute", "Interchange of operations in a theory, algebra or monoid", 1, 1, commute},
      {"tensor", "Commuting tensor presentation of two theories", 2, 2, tensor},
      {"models", "Enumerate the models of a theory on a carrier", 1, 1, models},
      {"verify-tensor", "Check models of the tensor against commuting pairs", 2, 2, verify_tensor},
      {"clone", "Clone of an algebra with law and oracle checks", 1, 1, clone},
      {"centralizer", "Centralizer clone of an algebra or centralizer in a monoid", 1, 1, centralizer},
      {"operad", "Validate an operad truncation and test pair commutation", 1, 1, operad},
      {"bv", "Boardman-Vogt tensor of two operad presentations", 2, 2, bv},
      {"cat", "Validate a category, or compare funny tensor and product", 1, 2, cat},
      {"sesqui", "Sesquicategory laws and interchange", 1, 1, sesqui},
      {"premonoidal", "Premonoidal laws and the centre", 1, 1, premonoidal},
      {"freyd", "Centre inclusion and commuting squares of a premonoidal category", 1, 1, freyd},
      {"graded", "Graded q-commutation of two elements", 1, 1, graded},
      {"gen", "Generate random problems; --check runs the soundness stress", 0, 0, gen},
  };
  return table;
}

}  // namespace catcom::cli
