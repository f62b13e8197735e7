#include <catcom/error.hpp>
#include <catcom/model.hpp>

#include <algorithm>

#include "doctest.h"
#include "support/theories.hpp"

using namespace catcom;
using namespace catcom::test;

namespace {

std::shared_ptr<const Presentation> load(const char* text) {
  return std::make_shared<const Presentation>(parse_presentation(text));
}

// Brute force: all (unit, table) pairs on k elements that form a monoid.
std::size_t brute_monoid_count(int k) {
  std::size_t cells = static_cast<std::size_t>(k * k);
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= static_cast<std::size_t>(k);
  std::size_t count = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> t(cells);
    std::size_t c = code;
    for (std::size_t i = cells; i-- > 0;) {
      t[i] = static_cast<int>(c % k);
      c /= k;
    }
    auto mul = [&](int a, int b) { return t[a * k + b]; };
    bool assoc = true;
    for (int a = 0; a < k && assoc; ++a)
      for (int b = 0; b < k && assoc; ++b)
        for (int d = 0; d < k; ++d)
          if (mul(mul(a, b), d) != mul(a, mul(b, d))) {
            assoc = false;
            break;
          }
    if (!assoc) continue;
    for (int e = 0; e < k; ++e) {
      bool unit = true;
      for (int a = 0; a < k; ++a) unit = unit && mul(e, a) == a && mul(a, e) == a;
      if (unit) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("evaluate_term") {
  auto p = load(kMonoid);
  FiniteModel z2(p, 2, {{0, 1, 1, 0}, {0}});
  std::vector<int> a{1, 1};
  CHECK(evaluate_term(z2, parse_term("mul(x1,x2)", p->signature()), a) == 0);
  std::vector<int> b{1};
  CHECK(evaluate_term(z2, Term::var(1), b) == 1);
  CHECK_THROWS_AS(evaluate_term(z2, Term::var(3), a), InputError);

  // Subsets of {0,1} under union, encoded as bitmasks 0..3.
  auto sl = load(kSemilattice);
  FunctionTable join(16);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) join[x * 4 + y] = x | y;
  FiniteModel subsets(sl, 4, {join});
  std::vector<int> c{1, 0, 2};
  CHECK(evaluate_term(subsets, parse_term("join(join(x1,x2),x3)", sl->signature()), c) == 3);
}

TEST_CASE("model constructor checks equations") {
  auto p = load(kMonoid);
  CHECK_THROWS_AS(FiniteModel(p, 2, {{0, 0, 0, 0}, {1}}), InputError);
}

TEST_CASE("enumerate_models counts") {
  CHECK(enumerate_models(load(kMonoid), 2).size() == 4);
  CHECK(brute_monoid_count(2) == 4);
  CHECK(enumerate_models(load(kMonoid), 3).size() == brute_monoid_count(3));
  CHECK(enumerate_models(load(kSemilattice), 2).size() == 2);
  CHECK(enumerate_models(load("theory t { op f:2; eq x1 = x2; }"), 2).empty());
}

TEST_CASE("enumerate_models order and validity") {
  auto p = load(kMonoid);
  auto models = enumerate_models(p, 3);
  for (std::size_t i = 1; i < models.size(); ++i) {
    std::vector<int> a, b;
    for (const auto& t : models[i - 1].tables()) a.insert(a.end(), t.begin(), t.end());
    for (const auto& t : models[i].tables()) b.insert(b.end(), t.begin(), t.end());
    CHECK(a < b);
  }
  for (const auto& m : models) CHECK(first_violation(*p, 3, m.tables()).empty());
}

TEST_CASE("empty carrier") {
  CHECK(enumerate_models(load(kMonoid), 0).empty());
  CHECK(enumerate_models(load(kSemilattice), 0).size() == 1);
  CHECK(enumerate_models(load(kEmpty), 0).size() == 1);
}

TEST_CASE("enumeration ceiling") {
  EnumerationOptions opt;
  opt.max_nodes = 10;
  try {
    enumerate_models(load("theory t { op f:3; }"), 3, opt);
    FAIL("expected LimitError");
  } catch (const LimitError& e) {
    CHECK(e.attempted().rfind("3^(3^3)", 0) == 0);
  }
}

TEST_CASE("enumerate_homs") {
  auto p = load(kMonoid);
  FiniteModel z2(p, 2, {{0, 1, 1, 0}, {0}});
  auto homs = enumerate_homs(z2, z2);
  REQUIRE(homs.size() == 2);
  CHECK(homs[0].map == std::vector<int>{0, 0});
  CHECK(homs[1].map == std::vector<int>{0, 1});

  auto sl = load(kSemilattice);
  auto chains = enumerate_models(sl, 2);
  REQUIRE(chains.size() == 2);
  // Oracle: maps preserving join, counted over all 4 maps.
  for (const auto& a : chains)
    for (const auto& b : chains) {
      std::size_t expected = 0;
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
          std::vector<int> h{x, y};
          bool ok = true;
          for (int u = 0; u < 2; ++u)
            for (int v = 0; v < 2; ++v)
              ok = ok && h[a.table(0)[u * 2 + v]] == b.table(0)[h[u] * 2 + h[v]];
          if (ok) ++expected;
        }
      CHECK(enumerate_homs(a, b).size() == expected);
    }
}

TEST_CASE("is_commuting_pair") {
  auto sl = load(kSemilattice);
  auto chains = enumerate_models(sl, 2);
  CHECK(is_commuting_pair(chains[0], chains[0]));

  // S_3 as a monoid on 6 elements, permutations in lexicographic order.
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> q{0, 1, 2};
  do perms.push_back(q);
  while (std::next_permutation(q.begin(), q.end()));
  FunctionTable mul(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      mul[a * 6 + b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  auto p = load(kMonoid);
  FiniteModel s3(p, 6, {mul, {0}});
  auto v = is_commuting_pair(s3, s3);
  CHECK_FALSE(v.commutes);
  CHECK(v.s_symbol == "mul");

  FiniteModel empty_t(load(kEmpty), 6, {});
  CHECK(is_commuting_pair(s3, empty_t));
  CHECK(is_commuting_pair(empty_t, s3));
  CHECK_THROWS_AS(is_commuting_pair(s3, chains[0]), InputError);
}

TEST_CASE("is_commuting_pair is symmetric") {
  auto p = load(kMonoid);
  auto models = enumerate_models(p, 3);
  for (const auto& a : models)
    for (const auto& b : models)
      CHECK(is_commuting_pair(a, b).commutes == is_commuting_pair(b, a).commutes);
}

}  // TEST_SUITE
