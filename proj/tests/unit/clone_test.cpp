#include <catcom/clone.hpp>
#include <catcom/error.hpp>

#include <set>

#include "doctest.h"
#include "support/algebras.hpp"

using namespace catcom;
using namespace catcom::test;

namespace {

// Naive fixpoint closure: apply every operation to every tuple of known
// functions until nothing new appears. Functions are tables over k^n.
std::set<FunctionTable> naive_closure(const FiniteAlgebra& a, std::size_t n) {
  const std::size_t k = a.carrier();
  const std::size_t cells = power(k, n);
  std::set<FunctionTable> known;
  for (std::size_t i = 0; i < n; ++i) known.insert(projection_table(k, n, i));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<FunctionTable> current(known.begin(), known.end());
    for (std::size_t s = 0; s < a.signature().size(); ++s) {
      const std::size_t ar = a.signature().symbols()[s].arity;
      std::vector<std::size_t> pick(ar, 0);
      while (true) {
        if (ar > 0 && current.empty()) break;
        FunctionTable out(cells);
        for (std::size_t x = 0; x < cells; ++x) {
          std::vector<int> args(ar);
          for (std::size_t i = 0; i < ar; ++i) args[i] = current[pick[i]][x];
          out[x] = a.apply(s, args);
        }
        if (known.insert(out).second) grew = true;
        std::size_t pos = ar;
        while (pos > 0 && ++pick[pos - 1] == current.size()) pick[--pos] = 0;
        if (pos == 0) break;
      }
    }
  }
  return known;
}

Op find_op(const FunctionClone& c, std::size_t n, const FunctionTable& t) {
  auto id = c.find(n, t);
  REQUIRE(id.has_value());
  return {n, *id};
}

}  // namespace

TEST_SUITE("clone") {

TEST_CASE("clone sizes of the join algebra") {
  auto c = clone_of_algebra(join_algebra(), 3);
  CHECK(c->size(0) == 0);
  CHECK(c->size(1) == 1);
  CHECK(c->size(2) == 3);
  CHECK(c->size(3) == 7);
  for (std::size_t n = 0; n <= 3; ++n) CHECK(c->size(n) == naive_closure(join_algebra(), n).size());
}

TEST_CASE("one-element algebra") {
  auto a = make_algebra("one", 1, {{"f", 2, {0}}, {"c", 0, {0}}});
  auto c = clone_of_algebra(a, 2);
  for (std::size_t n = 0; n <= 2; ++n) CHECK(c->size(n) == 1);
}

TEST_CASE("and/or clone has four binary operations") {
  auto c = clone_of_algebra(and_or_algebra(), 2);
  const auto oracle = naive_closure(and_or_algebra(), 2);
  CHECK(oracle.size() == 4);
  CHECK(c->size(2) == oracle.size());
  CHECK(oracle.count({0, 0, 0, 0}) == 0);
  CHECK(oracle.count({1, 1, 1, 1}) == 0);
}

TEST_CASE("closure order puts projections first and generators in file order") {
  auto c = clone_of_algebra(and_or_algebra(), 2);
  CHECK(c->table({2, 0}) == projection_table(2, 2, 0));
  CHECK(c->table({2, 1}) == projection_table(2, 2, 1));
  CHECK(c->table({2, 2}) == FunctionTable{0, 0, 0, 1});
  CHECK(c->table({2, 3}) == FunctionTable{0, 1, 1, 1});
}

TEST_CASE("clone ceiling") {
  CloneOptions opt;
  opt.max_elements = 10;
  CHECK_THROWS_AS(clone_of_algebra(binary_boolean(0b1110), 2, opt), LimitError);
  CHECK_THROWS_AS(clone_of_algebra(join_algebra(), 0), InputError);
}

TEST_CASE("validate_clone passes on algebra clones") {
  for (const auto& a : {join_algebra(), and_or_algebra(), z2_module(), pointed_algebra()}) {
    auto c = clone_of_algebra(a, 3);
    auto r = validate_clone(*c);
    CHECK_MESSAGE(r.ok(), a.name());
  }
}

TEST_CASE("seeded unit defect") {
  auto c = clone_of_algebra(join_algebra(), 2);
  auto t = tabulate(*c);
  CHECK(validate_clone(*t).ok());
  const Op join = find_op(*c, 2, {0, 1, 1, 1});
  std::vector<ElementId> pis{c->projection(2, 0), c->projection(2, 1)};
  t->set_substitution(2, join.id, 2, pis, c->projection(2, 0));
  auto r = validate_clone(*t);
  REQUIRE(r.failed("unit-right"));
  for (const auto& f : r.failures())
    if (f.law == "unit-right") CHECK(f.witness.find(c->describe(join)) != std::string::npos);
}

TEST_CASE("seeded naturality defect") {
  auto c = clone_of_algebra(join_algebra(), 2);
  auto t = tabulate(*c);
  const Op join = find_op(*c, 2, {0, 1, 1, 1});
  std::vector<ElementId> swapped{c->projection(2, 1), c->projection(2, 0)};
  t->set_substitution(2, join.id, 2, swapped, c->projection(2, 0));
  auto r = validate_clone(*t);
  REQUIRE(r.failed("naturality"));
  for (const auto& f : r.failures())
    if (f.law == "naturality") CHECK(f.witness.find("u=[") != std::string::npos);
}

TEST_CASE("missing entries are closure failures") {
  TabulatedClone t(1);
  t.add_element(1, "id");
  t.set_projection(1, 0, 0);
  auto r = validate_clone(t);
  CHECK(r.failed("closure"));
}

TEST_CASE("clone_substitute") {
  auto c = clone_of_algebra(join_algebra(), 2);
  const Op join = find_op(*c, 2, {0, 1, 1, 1});
  const Op pi1{2, c->projection(2, 0)};
  std::vector<ElementId> gs{join.id, c->projection(2, 1)};
  CHECK(clone_substitute(*c, pi1, 2, gs) == join);

  std::vector<ElementId> ones{c->projection(1, 0), c->projection(1, 0)};
  Op unary = clone_substitute(*c, join, 1, ones);
  CHECK(unary.arity == 1);
  CHECK(c->table(unary) == FunctionTable{0, 1});

  auto l = clone_of_algebra(and_or_algebra(), 4);
  const Op and4 = find_op(*l, 2, {0, 0, 0, 1});
  const Op or2 = find_op(*l, 2, {0, 1, 1, 1});
  // (x and y) or (z and w), by direct evaluation.
  FunctionTable expected(16);
  for (int v = 0; v < 16; ++v) {
    int x = (v >> 3) & 1, y = (v >> 2) & 1, z = (v >> 1) & 1, w = v & 1;
    expected[v] = (x & y) | (z & w);
  }
  std::vector<ElementId> ands{
      l->substitute(2, and4.id, 4, std::vector<ElementId>{l->projection(4, 0), l->projection(4, 1)}),
      l->substitute(2, and4.id, 4, std::vector<ElementId>{l->projection(4, 2), l->projection(4, 3)})};
  CHECK(l->table(clone_substitute(*l, or2, 4, ands)) == expected);

  CHECK_THROWS_AS(clone_substitute(*c, join, 3, ones), BoundError);
  CHECK_THROWS_AS(clone_substitute(*c, join, 1, std::vector<ElementId>{0}), InputError);
}

TEST_CASE("op_commutes") {
  auto c = clone_of_algebra(join_algebra(), 4);
  const Op join = find_op(*c, 2, {0, 1, 1, 1});
  CHECK(op_commutes(*c, join, join));

  auto l = clone_of_algebra(and_or_algebra(), 4);
  const Op a = find_op(*l, 2, {0, 0, 0, 1});
  const Op o = find_op(*l, 2, {0, 1, 1, 1});
  CHECK_FALSE(op_commutes(*l, a, o));
  auto witness = interchange_counterexample({0, 0, 0, 1}, 2, {0, 1, 1, 1}, 2, 2);
  REQUIRE(witness);
  // First difference: and(or(0,1), or(1,0)) = 1, or(and(0,1), and(1,0)) = 0.
  CHECK(*witness == std::vector<int>{0, 1, 1, 0});
  auto [lhs, rhs] = interchange_pair(*l, a, o);
  std::vector<int> at{1, 0, 0, 1};
  CHECK(l->table({4, lhs})[table_index(at, 2)] == 1);
  CHECK(l->table({4, rhs})[table_index(at, 2)] == 0);

  for (std::size_t n = 1; n <= 2; ++n)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t m = 0; m <= 2; ++m)
        for (ElementId g = 0; g < l->size(m); ++g)
          CHECK(op_commutes(*l, {n, l->projection(n, i)}, {m, g}));

  auto small = clone_of_algebra(join_algebra(), 3);
  CHECK_THROWS_AS(op_commutes(*small, join, join), BoundError);
}

TEST_CASE("is_commutative_clone") {
  auto sl = is_commutative_clone(*clone_of_algebra(join_algebra(), 4));
  CHECK(sl.commutative);
  CHECK(sl.bound == 4);

  auto l = clone_of_algebra(and_or_algebra(), 4);
  auto v = is_commutative_clone(*l);
  REQUIRE_FALSE(v.commutative);
  REQUIRE(v.witness);
  CHECK(l->table(v.witness->first) == FunctionTable{0, 0, 0, 1});
  CHECK(l->table(v.witness->second) == FunctionTable{0, 1, 1, 1});

  auto one = make_algebra("one", 1, {{"f", 2, {0}}});
  CHECK(is_commutative_clone(*clone_of_algebra(one, 3)).commutative);
}

TEST_CASE("commutativity is monotone in the bound") {
  for (unsigned code = 0; code < 16; ++code) {
    auto a = binary_boolean(code);
    bool previous = true;
    for (std::size_t n = 1; n <= 3; ++n) {
      bool now = is_commutative_clone(*clone_of_algebra(a, n)).commutative;
      CHECK((previous || !now));
      previous = now;
    }
  }
}

TEST_CASE("centralizer of OR") {
  auto c = centralizer_clone(join_algebra(), 2);
  // Oracle: binary functions h with h(x or x', y or y') = h(x,y) or h(x',y').
  std::size_t expected = 0;
  for (unsigned code = 0; code < 16; ++code) {
    auto h = [&](int x, int y) { return static_cast<int>((code >> (3 - (x * 2 + y))) & 1u); };
    bool ok = true;
    for (int v = 0; v < 16; ++v) {
      int x = v >> 3 & 1, y = v >> 2 & 1, x2 = v >> 1 & 1, y2 = v & 1;
      ok = ok && h(x | x2, y | y2) == (h(x, y) | h(x2, y2));
    }
    if (ok) ++expected;
  }
  CHECK(c->size(2) == expected);
  CHECK(validate_clone(*c).ok());
}

TEST_CASE("centralizer of nothing is everything") {
  auto a = make_algebra("bare", 2, {});
  auto c = centralizer_clone(a, 2);
  CHECK(c->size(0) == 2);
  CHECK(c->size(1) == 4);
  CHECK(c->size(2) == 16);
}

TEST_CASE("centralizer of NOT") {
  auto a = make_algebra("neg", 2, {{"not", 1, {1, 0}}});
  auto c = centralizer_clone(a, 2);
  REQUIRE(c->size(1) == 2);
  CHECK(c->table({1, 0}) == FunctionTable{0, 1});
  CHECK(c->table({1, 1}) == FunctionTable{1, 0});
  for (std::size_t n = 1; n <= 2; ++n)
    for (std::size_t i = 0; i < n; ++i) CHECK(c->find(n, projection_table(2, n, i)));
}

TEST_CASE("render_clone") {
  auto c = clone_of_algebra(join_algebra(), 2);
  std::string dump = render_clone(*c);
  CHECK(dump.find("T(1) #0: [0,1]") != std::string::npos);
  CHECK(dump.find("T(2) #2: [0,1,1,1]") != std::string::npos);
}

}  // TEST_SUITE
