#include <catcom/decide.hpp>
#include <catcom/error.hpp>
#include <catcom/term.hpp>

#include <set>

#include "doctest.h"

using namespace catcom;

namespace {

const char* kMonoid =
    "theory m { op mul:2; op e:0;"
    " eq mul(x1,mul(x2,x3)) = mul(mul(x1,x2),x3);"
    " eq mul(e(),x1) = x1; eq mul(x1,e()) = x1; }";

const char* kSemilattice =
    "theory sl { op join:2; eq join(x1,x1)=x1; eq join(x1,x2)=join(x2,x1);"
    " eq join(join(x1,x2),x3)=join(x1,join(x2,x3)); }";

// Free semilattice on variables: a term denotes its set of variables.
std::set<std::size_t> vars_of(const Term& t) {
  if (t.is_var()) return {t.var_index()};
  std::set<std::size_t> out;
  for (const Term& a : t.args()) {
    auto s = vars_of(a);
    out.insert(s.begin(), s.end());
  }
  return out;
}

}  // namespace

TEST_SUITE("term") {

TEST_CASE("parse monoid presentation") {
  Presentation p = parse_presentation(kMonoid);
  CHECK(p.signature().size() == 2);
  CHECK(p.equations().size() == 3);
  CHECK(p.name() == "m");
}

TEST_CASE("render round trip") {
  for (const char* text : {kMonoid, kSemilattice}) {
    Presentation p = parse_presentation(text);
    std::string once = render_presentation(p);
    CHECK(render_presentation(parse_presentation(once)) == once);
  }
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_presentation("theory bad { eq f(x1)=x1; }");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.message()).find("f") != std::string::npos);
    CHECK(e.line() == 1);
    CHECK(e.column() > 0);
  }
  CHECK_THROWS_AS(parse_presentation("theory t { op f:2; eq f(x1)=x1; }"), ParseError);
  CHECK_THROWS_AS(parse_presentation("theory t { op f:2 eq f(x1,x1)=x1; }"), ParseError);
  CHECK_THROWS_AS(parse_presentation("theory t { op f:1; op f:2; }"), ParseError);
}

TEST_CASE("substitute") {
  Presentation p = parse_presentation(kMonoid);
  const auto& sig = p.signature();
  Term x1 = Term::var(1);
  Term outer = parse_term("mul(x1,x2)", sig);
  std::vector<Term> args{parse_term("e()", sig), x1};
  CHECK(substitute(outer, args).to_string() == "mul(e(),x1)");

  Term t = parse_term("mul(x2,x1)", sig);
  std::vector<Term> one{t};
  CHECK(substitute(x1, one) == t);

  Presentation sl = parse_presentation(kSemilattice);
  std::vector<Term> two{parse_term("join(x1,x2)", sl.signature()), Term::var(3)};
  CHECK(substitute(parse_term("join(x1,x2)", sl.signature()), two).to_string() ==
        "join(join(x1,x2),x3)");

  std::vector<Term> wrong{x1};
  CHECK_THROWS_AS(substitute(outer, 2, wrong), InputError);
}

TEST_CASE("substitute is associative on small terms") {
  Signature sig("s");
  sig.add("f", 2);
  sig.add("g", 1);
  // All terms of size <= 2 over x1..x3.
  std::vector<Term> terms;
  for (std::size_t v = 1; v <= 3; ++v) terms.push_back(Term::var(v));
  std::size_t base = terms.size();
  for (std::size_t i = 0; i < base; ++i) terms.push_back(Term::app("g", {terms[i]}));
  std::size_t size1 = terms.size();
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = 0; j < base; ++j) terms.push_back(Term::app("f", {terms[i], terms[j]}));
  for (std::size_t i = base; i < size1; ++i) terms.push_back(Term::app("g", {terms[i]}));

  std::size_t checked = 0;
  for (std::size_t a = 0; a < terms.size(); a += 3)
    for (std::size_t b = 0; b < terms.size(); b += 4)
      for (std::size_t c = 0; c < terms.size(); c += 5) {
        const Term& f = terms[a];
        std::vector<Term> gs{terms[b], terms[c], terms[(b + c) % terms.size()]};
        std::vector<Term> hs{terms[c], terms[a], terms[b]};
        Term left = substitute(substitute(f, 3, gs), 3, hs);
        std::vector<Term> inner;
        for (const Term& g : gs) inner.push_back(substitute(g, 3, hs));
        CHECK(left == substitute(f, 3, inner));
        ++checked;
      }
  CHECK(checked > 100);
}

TEST_CASE("commutation equation") {
  Presentation sl = parse_presentation(kSemilattice);
  Term join = parse_term("join(x1,x2)", sl.signature());
  Equation eq = commutation_equation(join, 2, join, 2);
  CHECK(eq.var_count == 4);
  CHECK(eq.lhs.to_string() == "join(join(x1,x2),join(x3,x4))");
  CHECK(eq.rhs.to_string() == "join(join(x1,x3),join(x2,x4))");

  Equation proj = commutation_equation(Term::var(1), 1, join, 2);
  CHECK(proj.lhs == proj.rhs);
  Equation nproj = normalize_variables(commutation_equation(join, 2, Term::var(1), 1));
  CHECK(nproj.lhs == nproj.rhs);

  Equation consts = commutation_equation(Term::app("c"), 0, Term::app("d"), 0);
  CHECK(consts.var_count == 0);
  CHECK(consts.lhs.to_string() == "c()");
  CHECK(consts.rhs.to_string() == "d()");

  // n = 0, m = 2: the constant against a binary op applied to no rows.
  Equation half = commutation_equation(Term::app("c"), 0, join, 2);
  CHECK(half.lhs.to_string() == "c()");
  CHECK(half.rhs.to_string() == "join(c(),c())");
}

TEST_CASE("decide: axiom instance is proved") {
  Presentation p = parse_presentation(kMonoid);
  Equation eq = Equation::make(parse_term("mul(x1,mul(x2,x3))", p.signature()),
                               parse_term("mul(mul(x1,x2),x3)", p.signature()));
  CHECK(is_proved(decide_equal(p, eq, {})));
}

TEST_CASE("decide: monoid commutativity is refuted by a small monoid") {
  Presentation p = parse_presentation(kMonoid);
  Equation eq = Equation::make(parse_term("mul(x1,x2)", p.signature()),
                               parse_term("mul(x2,x1)", p.signature()));
  DecideOptions opt;
  opt.depth_bound = 3;
  auto v = decide_equal(p, eq, opt);
  REQUIRE(is_refuted(v));
  const auto& r = std::get<Refuted>(v);
  CHECK(r.model.carrier() >= 3);
  CHECK(r.model.carrier() <= 6);
  CHECK(verify_refutation(eq, r));
}

TEST_CASE("decide: semilattice interchange is proved") {
  Presentation sl = parse_presentation(kSemilattice);
  Term join = parse_term("join(x1,x2)", sl.signature());
  Equation eq = commutation_equation(join, 2, join, 2);
  // Oracle: both sides denote the same variable set in the free semilattice.
  CHECK(vars_of(eq.lhs) == vars_of(eq.rhs));
  CHECK(vars_of(eq.lhs) == std::set<std::size_t>{1, 2, 3, 4});
  DecideOptions opt;
  opt.depth_bound = 5;
  opt.search_model = false;
  CHECK(is_proved(decide_equal(sl, eq, opt)));
}

TEST_CASE("decide: unknown when bounds are tiny") {
  Presentation g = parse_presentation(
      "theory grp { op mul:2; op inv:1; op e:0;"
      " eq mul(x1,mul(x2,x3)) = mul(mul(x1,x2),x3);"
      " eq mul(e(),x1) = x1; eq mul(x1,e()) = x1;"
      " eq mul(inv(x1),x1) = e(); eq mul(x1,inv(x1)) = e(); }");
  Term mul = parse_term("mul(x1,x2)", g.signature());
  Equation eq = commutation_equation(mul, 2, mul, 2);
  DecideOptions opt;
  opt.depth_bound = 3;
  opt.model_bound = 2;
  CHECK(is_unknown(decide_equal(g, eq, opt)));
}

TEST_CASE("decide rejects bad bounds") {
  Presentation p = parse_presentation(kMonoid);
  Equation eq = Equation::make(Term::var(1), Term::var(1));
  DecideOptions opt;
  opt.depth_bound = 0;
  CHECK_THROWS_AS(decide_equal(p, eq, opt), InputError);
}

}  // TEST_SUITE
