#include <catcom/tensor.hpp>

#include "doctest.h"
#include "support/theories.hpp"

using namespace catcom;
using namespace catcom::test;

namespace {

Presentation load(const char* text) { return parse_presentation(text); }

bool commutative_monoid(const FiniteModel& m, std::size_t symbol) {
  const int k = static_cast<int>(m.carrier());
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (m.table(symbol)[a * k + b] != m.table(symbol)[b * k + a]) return false;
  return true;
}

}  // namespace

TEST_SUITE("tensor") {

TEST_CASE("coproduct renames clashing symbols") {
  auto c = coproduct_presentation(load(kMonoid), load(kMonoid));
  const auto& sig = c.presentation.signature();
  CHECK(sig.size() == 4);
  CHECK(c.presentation.equations().size() == 6);
  for (const char* name : {"mul_1", "e_1", "mul_2", "e_2"}) CHECK(sig.contains(name));
  CHECK(c.left_names == std::vector<std::string>{"mul_1", "e_1"});
}

TEST_CASE("coproduct with the empty theory") {
  auto c = coproduct_presentation(load(kSemilattice), load(kEmpty));
  CHECK(c.presentation.signature().size() == 1);
  CHECK(c.presentation.signature().contains("join"));
  CHECK(c.presentation.equations().size() == 3);

  auto p = coproduct_presentation(load(kPointed), load(kPointed));
  CHECK(p.presentation.signature().size() == 2);
  CHECK(p.presentation.equations().empty());
}

TEST_CASE("commuting tensor equations") {
  auto t = commuting_tensor_presentation(load(kPointed), load(kPointed));
  REQUIRE(t.presentation.equations().size() == 1);
  CHECK(t.presentation.equations()[0].to_string() == "c_1() = c_2()");
  for (std::size_t k = 0; k <= 3; ++k)
    CHECK(enumerate_models(t.presentation, k).size() == k);

  auto mm = commuting_tensor_presentation(load(kMonoid), load(kMonoid));
  CHECK(mm.presentation.equations().size() == 6 + 4);
  auto models = enumerate_models(mm.presentation, 2);
  CHECK(models.size() == 4);
  for (const auto& m : models) {
    CHECK(m.table(0) == m.table(2));
    CHECK(commutative_monoid(m, 0));
  }

  auto se = commuting_tensor_presentation(load(kSemilattice), load(kEmpty));
  CHECK(render_presentation(se.presentation).find("join") != std::string::npos);
  CHECK(se.presentation.equations().size() == 3);
}

TEST_CASE("tensor correspondence") {
  struct Case {
    const char* s;
    const char* t;
    std::size_t k;
    std::size_t count;
  };
  for (const Case& c : {Case{kPointed, kPointed, 3, 3}, Case{kMonoid, kMonoid, 2, 4},
                         Case{kMonoid, kEmpty, 2, 4}, Case{kSemilattice, kSemilattice, 2, 2},
                         Case{kPointed, kPointed, 0, 0}, Case{kSemilattice, kEmpty, 0, 1}}) {
    auto r = verify_tensor_correspondence(load(c.s), load(c.t), c.k);
    CHECK(r.report.ok());
    CHECK(r.tensor_models == c.count);
    CHECK(r.commuting_pairs == c.count);
    CHECK(r.bijection.size() == c.count);
  }
}

TEST_CASE("empty left factor is an identity correspondence") {
  auto r = verify_tensor_correspondence(load(kEmpty), load(kMonoid), 3);
  CHECK(r.report.ok());
  CHECK(r.s_models == 1);
  CHECK(r.tensor_models == r.t_models);
  for (std::size_t i = 0; i < r.bijection.size(); ++i) CHECK(r.bijection[i][2] == i);
}

}  // TEST_SUITE
