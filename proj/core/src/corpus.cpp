#include "catcom/corpus.hpp"

#include <random>
#include <variant>

#include "catcom/error.hpp"
#include "catcom/model.hpp"
#include "catcom/parallel.hpp"
#include "lexer.hpp"

namespace catcom {

namespace {

struct NamedText {
  const char* name;
  const char* text;
};

constexpr NamedText kTheories[] = {
    {"sl",
     "theory sl { op join:2; eq join(x1,x1) = x1; eq join(x1,x2) = join(x2,x1);"
     " eq join(join(x1,x2),x3) = join(x1,join(x2,x3)); }"},
    {"monoid",
     "theory monoid { op mul:2; op e:0; eq mul(x1,mul(x2,x3)) = mul(mul(x1,x2),x3);"
     " eq mul(e(),x1) = x1; eq mul(x1,e()) = x1; }"},
    {"cmonoid",
     "theory cmonoid { op mul:2; op e:0; eq mul(x1,mul(x2,x3)) = mul(mul(x1,x2),x3);"
     " eq mul(e(),x1) = x1; eq mul(x1,e()) = x1; eq mul(x1,x2) = mul(x2,x1); }"},
    {"grp",
     "theory grp { op mul:2; op inv:1; op e:0; eq mul(x1,mul(x2,x3)) = mul(mul(x1,x2),x3);"
     " eq mul(e(),x1) = x1; eq mul(x1,e()) = x1; eq mul(inv(x1),x1) = e();"
     " eq mul(x1,inv(x1)) = e(); }"},
    {"pointed", "theory pointed { op c:0; }"},
    {"empty", "theory empty { }"},
    {"z2vec",
     "theory z2vec { op add:2; op zero:0; eq add(x1,add(x2,x3)) = add(add(x1,x2),x3);"
     " eq add(x1,x2) = add(x2,x1); eq add(zero(),x1) = x1; eq add(x1,x1) = zero(); }"},
};

constexpr NamedText kAlgebras[] = {
    {"sl", "algebra sl { carrier 2; op join/2 = [0,1,1,1]; }"},
    {"latt", "algebra latt { carrier 2; op and/2 = [0,0,0,1]; op or/2 = [0,1,1,1]; }"},
    {"z2", "algebra z2 { carrier 2; op add/2 = [0,1,1,0]; op zero/0 = [0]; }"},
    {"pointed", "algebra pointed { carrier 2; op c/0 = [0]; }"},
};

FiniteAlgebra binary_algebra(unsigned code) {
  Signature sig("b" + std::to_string(code));
  sig.add("op", 2);
  FunctionTable t(4);
  for (unsigned i = 0; i < 4; ++i) t[i] = static_cast<int>((code >> (3 - i)) & 1u);
  return FiniteAlgebra(sig.name(), 2, sig, {t});
}

std::optional<unsigned> binary_code(std::string_view name) {
  if (name.size() < 2 || name.size() > 3 || name[0] != 'b') return std::nullopt;
  unsigned v = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + static_cast<unsigned>(c - '0');
  }
  if (v > 15 || (name.size() == 3 && name[1] == '0')) return std::nullopt;
  return v;
}

std::size_t offset_of(std::string_view text, std::size_t line, std::size_t column) {
  std::size_t l = 1, pos = 0;
  while (l < line && pos < text.size()) {
    if (text[pos] == '\n') ++l;
    ++pos;
  }
  return pos + column - 1;
}

std::pair<std::size_t, std::size_t> position_at(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Term random_term(std::mt19937_64& rng, const Signature& sig, std::size_t vars,
                 std::size_t budget) {
  std::vector<std::size_t> apps;
  std::vector<std::size_t> constants;
  for (std::size_t s = 0; s < sig.size(); ++s)
    (sig.symbols()[s].arity == 0 ? constants : apps).push_back(s);
  const bool leaf = budget == 0 || apps.empty() || rng() % 3 == 0;
  if (leaf) {
    if (!constants.empty() && rng() % 4 == 0) {
      const auto& c = sig.symbols()[constants[rng() % constants.size()]];
      return Term::app(c.name);
    }
    return Term::var(1 + rng() % vars);
  }
  const auto& f = sig.symbols()[apps[rng() % apps.size()]];
  std::size_t left = budget - 1;
  std::vector<Term> args;
  for (std::size_t i = 0; i < f.arity; ++i) {
    const std::size_t share = i + 1 == f.arity ? left : rng() % (left + 1);
    args.push_back(random_term(rng, sig, vars, share));
    left -= std::min(left, args.back().size());
  }
  return Term::app(f.name, std::move(args));
}

}  // namespace

std::vector<std::string> builtin_theory_names() {
  std::vector<std::string> out;
  for (const auto& t : kTheories) out.emplace_back(t.name);
  return out;
}

Presentation builtin_theory(std::string_view name) {
  for (const auto& t : kTheories)
    if (name == t.name) return parse_presentation(t.text);
  throw InputError("unknown built-in theory '" + std::string(name) + "'");
}

std::vector<std::string> builtin_algebra_names() {
  std::vector<std::string> out;
  for (const auto& a : kAlgebras) out.emplace_back(a.name);
  for (unsigned c = 0; c < 16; ++c) out.push_back("b" + std::to_string(c));
  return out;
}

FiniteAlgebra builtin_algebra(std::string_view name) {
  for (const auto& a : kAlgebras)
    if (name == a.name) return parse_algebra(a.text);
  if (auto code = binary_code(name)) return binary_algebra(*code);
  throw InputError("unknown built-in algebra '" + std::string(name) + "'");
}

std::vector<FiniteAlgebra> clone_corpus() {
  std::vector<FiniteAlgebra> out;
  for (const char* n : {"sl", "latt", "pointed", "z2"}) out.push_back(builtin_algebra(n));
  for (unsigned c = 0; c < 16; ++c) out.push_back(binary_algebra(c));
  return out;
}

std::shared_ptr<const SymOperadTruncation> builtin_operad(std::string_view name, std::size_t K) {
  if (name == "ass") return std::make_shared<AssOperad>(K);
  if (name == "com") return std::make_shared<ComOperad>(K);
  if (name == "unit") return std::make_shared<TrivialOperad>(K);
  throw InputError("unknown built-in operad '" + std::string(name) + "'");
}

std::vector<std::string> builtin_operad_presentation_names() {
  return {"ass", "ass_u", "com", "com_u", "unit"};
}

OperadPresentation builtin_operad_presentation(std::string_view name) {
  if (name == "ass") return ass_presentation();
  if (name == "ass_u") return ass_unital_presentation();
  if (name == "com") return com_presentation();
  if (name == "com_u") return com_unital_presentation();
  if (name == "unit") return trivial_presentation();
  throw InputError("unknown built-in operad presentation '" + std::string(name) + "'");
}

Problem parse_problem(std::string_view text) {
  detail::TokenStream ts(text);
  ts.expect("theory");
  ts.expect_identifier("theory name");
  ts.expect("{");
  std::size_t depth = 1;
  detail::Token close;
  while (depth > 0) {
    if (ts.at_end()) ts.fail("unterminated theory block");
    close = ts.next();
    if (close.kind != detail::TokenKind::symbol) continue;
    if (close.text == "{") ++depth;
    if (close.text == "}") --depth;
  }
  const std::size_t split = offset_of(text, close.line, close.column) + 1;
  Presentation pres = parse_presentation(text.substr(0, split));
  ts.expect("goal");
  const detail::Token start = ts.peek();
  std::size_t eq_at = 0, end_at = 0;
  while (true) {
    if (ts.at_end()) ts.fail("expected ';' after goal");
    const auto t = ts.next();
    if (t.kind != detail::TokenKind::symbol) continue;
    if (t.text == "=" && eq_at == 0) eq_at = offset_of(text, t.line, t.column);
    if (t.text == ";") {
      end_at = offset_of(text, t.line, t.column);
      break;
    }
  }
  if (eq_at == 0) ts.fail_at(start, "goal needs '='");
  if (!ts.at_end()) ts.fail("unexpected text after goal");
  const std::size_t begin = offset_of(text, start.line, start.column);
  auto term_at = [&](std::size_t from, std::size_t to) {
    try {
      return parse_term(text.substr(from, to - from), pres.signature());
    } catch (const ParseError& e) {
      auto [line, column] = position_at(text, from);
      if (e.line() > 1) column = e.column();
      else if (e.line() == 1) column += e.column() - 1;
      throw ParseError(e.message(), line + (e.line() > 0 ? e.line() - 1 : 0), column);
    }
  };
  Equation goal = Equation::make(term_at(begin, eq_at), term_at(eq_at + 1, end_at));
  return {std::move(pres), std::move(goal)};
}

std::string render_problem(const Problem& p) {
  return render_presentation(p.presentation) + "goal " + p.goal.lhs.to_string() + " = " +
         p.goal.rhs.to_string() + ";\n";
}

Problem generate_problem(std::uint64_t seed, const GenOptions& options) {
  std::mt19937_64 rng(seed);
  Signature sig("gen" + std::to_string(seed));
  const std::size_t ops = 1 + rng() % std::max<std::size_t>(options.max_ops, 1);
  bool has_app = false;
  for (std::size_t i = 0; i < ops; ++i) {
    std::size_t arity = rng() % (options.max_arity + 1);
    if (i + 1 == ops && !has_app && options.max_arity > 0) arity = 1 + rng() % options.max_arity;
    has_app = has_app || arity > 0;
    sig.add("o" + std::to_string(i + 1), arity);
  }
  const std::size_t vars = std::max<std::size_t>(options.max_vars, 1);
  auto term = [&] { return random_term(rng, sig, vars, options.max_term_size); };

  Presentation pres(sig, {});
  const std::size_t eqs = rng() % (options.max_equations + 1);
  for (std::size_t i = 0; i < eqs; ++i) pres.add_equation(Equation::make(term(), term()));

  auto goal = [&] {
    if (!pres.equations().empty() && rng() % 4 == 0) {
      const auto& ax = pres.equations()[rng() % pres.equations().size()];
      std::vector<Term> args;
      for (std::size_t v = 0; v < ax.var_count; ++v)
        args.push_back(random_term(rng, sig, vars, 1));
      return Equation::make(substitute(ax.lhs, args), substitute(ax.rhs, args));
    }
    const Term lhs = term();
    return Equation::make(lhs, term());
  }();
  return {std::move(pres), std::move(goal)};
}

StressReport soundness_stress(std::uint64_t seed, std::size_t count,
                              const StressOptions& options) {
  enum class Kind { proved, refuted, unknown };
  struct Outcome {
    std::vector<Kind> kinds;
    bool bad_certificate = false;
  };
  std::vector<Outcome> outcomes(count);
  parallel_for(count, [&](std::size_t i) {
    const Problem p = generate_problem(seed + i, options.gen);
    Outcome& o = outcomes[i];
    for (const auto& [depth, model] : options.bounds) {
      DecideOptions d;
      d.depth_bound = depth;
      d.model_bound = model;
      d.max_model_nodes = options.max_model_nodes;
      d.max_universe = options.max_universe;
      const auto v = decide_equal(p.presentation, p.goal, d);
      if (const auto* r = std::get_if<Refuted>(&v)) {
        o.kinds.push_back(Kind::refuted);
        if (!verify_refutation(p.goal, *r) ||
            !first_violation(p.presentation, r->model.carrier(), r->model.tables()).empty())
          o.bad_certificate = true;
      } else {
        o.kinds.push_back(is_proved(v) ? Kind::proved : Kind::unknown);
      }
    }
  });

  StressReport out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& o = outcomes[i];
    bool proved = false, refuted = false;
    for (Kind k : o.kinds) {
      proved = proved || k == Kind::proved;
      refuted = refuted || k == Kind::refuted;
    }
    ++out.problems;
    if (proved) ++out.proved;
    if (refuted) ++out.refuted;
    if (!proved && !refuted) ++out.unknown;
    const bool contradiction = proved && refuted;
    if (contradiction) ++out.contradictions;
    if (o.bad_certificate) ++out.bad_certificates;
    if ((contradiction || o.bad_certificate) && out.first_problem.empty())
      out.first_problem = "seed " + std::to_string(seed + i);
  }
  return out;
}

}  // namespace catcom
