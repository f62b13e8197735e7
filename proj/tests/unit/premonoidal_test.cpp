#include <catcom/error.hpp>
#include <catcom/premonoidal.hpp>

#include <algorithm>

#include "doctest.h"

using namespace catcom;

namespace {

// Central elements of a monoid, by direct search.
std::vector<int> monoid_centre_elements(const FiniteMonoid& m) {
  std::vector<int> out;
  for (int a = 0; a < int(m.size()); ++a) {
    bool central = true;
    for (int b = 0; b < int(m.size()); ++b) central = central && m.mul(a, b) == m.mul(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_SUITE("premonoidal") {

TEST_CASE("monoidal example: every arrow central") {
  const auto p = codiscrete_monoid_premonoidal(cyclic_group(2));
  CHECK(premonoidal_validate(p).ok());
  CHECK(central_arrows(p).size() == p.base().arrow_count());
  const auto z = premonoidal_centre(p);
  CHECK(z.structure.base().arrow_count() == p.base().arrow_count());
  std::vector<ArrowId> all;
  for (ArrowId f = 0; f < p.base().arrow_count(); ++f) all.push_back(f);
  CHECK(freyd_cospan_commutes(p, all, all));
}

TEST_CASE("premonoidal example with non-central arrows") {
  const auto m = left_zero_band();
  const auto p = codiscrete_monoid_premonoidal(m);
  CHECK(premonoidal_validate(p).ok());
  const auto centre_elements = monoid_centre_elements(m);
  CHECK(centre_elements == std::vector<int>{0});
  const auto central = central_arrows(p);
  for (ArrowId f = 0; f < p.base().arrow_count(); ++f) {
    const bool expected = std::find(centre_elements.begin(), centre_elements.end(), int(f % m.size())) !=
                          centre_elements.end();
    CHECK(is_central(p, f) == expected);
  }
  const auto z = premonoidal_centre(p);
  CHECK(z.structure.base().arrow_count() == central.size());
  CHECK(z.structure.base().arrow_count() < p.base().arrow_count());
  CHECK(premonoidal_validate(z.structure).ok());
  CHECK(central_arrows(z.structure).size() == z.structure.base().arrow_count());
  for (ObjectId a = 0; a < 2; ++a) CHECK(is_central(p, p.base().identity(a)));
  CHECK(freyd_validate(z.structure, p, z.inclusion).ok());

  std::vector<ArrowId> all;
  for (ArrowId f = 0; f < p.base().arrow_count(); ++f) all.push_back(f);
  const auto v = freyd_cospan_commutes(p, all, all);
  CHECK_FALSE(v);
  REQUIRE(v.witness.has_value());
  CHECK_FALSE(is_central(p, v.witness->first));
  CHECK(freyd_cospan_commutes(p, central, central));
  CHECK(freyd_cospan_commutes(p, {}, all));
  // Adding any non-central arrow to the centre breaks some square against the whole category.
  for (ArrowId f : all) {
    if (is_central(p, f)) continue;
    auto extended = central;
    extended.push_back(f);
    CHECK_FALSE(freyd_cospan_commutes(p, extended, all));
  }
}

TEST_CASE("freyd functor hitting a non-central arrow") {
  const FiniteMonoid idem(2, {0, 1, 1, 1}, 0, "idem");
  const auto a = codiscrete_monoid_premonoidal(idem);
  const auto m = codiscrete_monoid_premonoidal(left_zero_band());
  Functor f{{0, 1}, {}};
  for (ArrowId u = 0; u < a.base().arrow_count(); ++u) f.arrows.push_back(ArrowId(u / 2 * 3 + u % 2));
  const auto r = freyd_validate(a, m, f);
  CHECK_FALSE(r.failed("functor"));
  CHECK(r.failed("centrality"));
  CHECK_THROWS_AS(freyd_validate(a, m, Functor{{0, 0}, f.arrows}), InputError);
}

TEST_CASE("seeded pentagon defect") {
  auto p = codiscrete_monoid_premonoidal(cyclic_group(2));
  p.set_assoc(0, 0, 0, 1);
  const auto r = premonoidal_validate(p);
  CHECK(r.failed("pentagon"));
  CHECK_THROWS_AS(premonoidal_centre(p), InputError);
}

TEST_CASE("premonoidal files round trip") {
  const auto p = codiscrete_monoid_premonoidal(left_zero_band());
  const auto text = render_premonoidal(p);
  const auto q = parse_premonoidal(text);
  CHECK(render_premonoidal(q) == text);
  auto names = [](const PremonoidalData& x) {
    std::vector<std::string> out;
    for (ArrowId f : central_arrows(x)) out.push_back(x.base().arrow(f).name);
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(names(q) == names(p));
  const auto small = parse_premonoidal(R"(premonoidal one {
  objects i;
  arrow s : i -> i;
  comp s.s = id_i;
  unit i;
  tensor i, i = i;
  ltensor i, s = s;
  rtensor s, i = s;
})");
  CHECK(premonoidal_validate(small).ok());
  CHECK(is_central(small, 1));
  CHECK_THROWS_AS(parse_premonoidal("premonoidal x { objects i; unit i; }"), ParseError);
  CHECK_THROWS_AS(parse_premonoidal("premonoidal x { objects i; tensor i, i = i; }"), ParseError);
}

}
