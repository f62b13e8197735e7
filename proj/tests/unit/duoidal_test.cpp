#include <catcom/duoidal.hpp>

#include "doctest.h"
#include "support/algebras.hpp"

using namespace catcom;
using namespace catcom::test;

TEST_SUITE("duoidal") {

TEST_CASE("sigma with a projection head reduces to the argument") {
  auto c = clone_of_algebra(join_algebra(), 4);
  auto sigma = sigma_family(*c);
  const Op pi{1, c->projection(1, 0)};
  for (std::size_t m = 0; m <= 4; ++m)
    for (ElementId g = 0; g < c->size(m); ++g) CHECK(nu(*c, pi, {m, g}) == g);
  CHECK(sigma.apply(pi, {2, 2}).args.size() == 1);
}

TEST_CASE("sigma and tau on join and on and/or") {
  auto c = clone_of_algebra(join_algebra(), 4);
  const Op join{2, *c->find(2, {0, 1, 1, 1})};
  auto s = multiply(*c, sigma_family(*c).apply(join, join));
  auto t = multiply(*c, tau_family(*c).apply(join, join));
  FunctionTable total(16, 1);
  total[0] = 0;
  CHECK(c->table({4, s}) == total);
  CHECK(s == t);

  auto l = clone_of_algebra(and_or_algebra(), 4);
  const Op a{2, *l->find(2, {0, 0, 0, 1})};
  const Op o{2, *l->find(2, {0, 1, 1, 1})};
  CHECK(multiply(*l, sigma_family(*l).apply(a, o)) != multiply(*l, tau_family(*l).apply(a, o)));
  CHECK_FALSE(op_commutes_duoidal(*l, a, o));
}

TEST_CASE("duoidal route agrees with the projection route") {
  for (const auto& alg : {join_algebra(), and_or_algebra(), z2_module(), pointed_algebra()}) {
    auto c = clone_of_algebra(alg, 4);
    std::size_t pairs = 0;
    for (std::size_t n = 0; n <= 4; ++n)
      for (std::size_t m = 0; n * m <= 4 && m <= 4; ++m)
        for (ElementId f = 0; f < c->size(n); ++f)
          for (ElementId g = 0; g < c->size(m); ++g) {
            ++pairs;
            CHECK(op_commutes(*c, {n, f}, {m, g}) == op_commutes_duoidal(*c, {n, f}, {m, g}));
          }
    CHECK(pairs > 0);
  }
}

TEST_CASE("sigma and tau are natural") {
  for (const auto& alg : {join_algebra(), and_or_algebra()}) {
    auto c = clone_of_algebra(alg, 3);
    auto rs = check_family_naturality(*c, sigma_family(*c));
    auto rt = check_family_naturality(*c, tau_family(*c));
    CHECK(rs.ok());
    CHECK(rt.ok());
    CHECK(rs.exhaustive());
  }
}

TEST_CASE("coend relation") {
  auto c = clone_of_algebra(and_or_algebra(), 2);
  const Op a{2, *c->find(2, {0, 0, 0, 1})};
  const ElementId x = c->projection(2, 0), y = c->projection(2, 1);
  // (and . swap; x, y) ~ (and; y, x)
  const ElementId swapped = c->act(FinMap(2, 2, {1, 0}), a.id);
  Composite p{{2, swapped}, 2, {x, y}};
  Composite q{a, 2, {y, x}};
  CHECK(coend_related(*c, p, q));
  CHECK(coend_related(*c, q, p));
  Composite r{a, 2, {x, y}};
  CHECK(multiply(*c, p) == multiply(*c, q));
  CHECK_FALSE(coend_related(*c, r, Composite{a, 2, {x, x}}));
}

TEST_CASE("duoid structure") {
  auto c = clone_of_algebra(join_algebra(), 4);
  auto d = duoid_structure(*c);
  CHECK(d.commutative);
  CHECK(d.checks.ok());
  const Op join{2, *c->find(2, {0, 1, 1, 1})};
  FunctionTable total(16, 1);
  total[0] = 0;
  CHECK(c->table({4, nu(*c, join, join)}) == total);

  auto l = clone_of_algebra(and_or_algebra(), 4);
  auto e = duoid_structure(*l);
  CHECK_FALSE(e.commutative);
  REQUIRE(e.witness);
  CHECK(l->table(e.witness->first) == FunctionTable{0, 0, 0, 1});

  auto one = make_algebra("one", 1, {});
  auto t = duoid_structure(*clone_of_algebra(one, 3));
  CHECK(t.commutative);
  CHECK(t.checks.ok());

  auto z = duoid_structure(*clone_of_algebra(z2_module(), 4));
  CHECK(z.commutative);
  CHECK(z.checks.ok());
}

}  // TEST_SUITE
