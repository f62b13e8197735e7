#include <catcom/error.hpp>
#include <catcom/operad_presentation.hpp>

#include "doctest.h"

using namespace catcom;

namespace {

struct Magma {
  int k;
  int table[9];
  int operator()(int a, int b) const { return table[a * k + b]; }
};

// All binary tables on {0..k-1}, k <= 3, by direct enumeration.
std::vector<Magma> all_magmas(int k) {
  std::vector<Magma> out;
  int cells = k * k, total = 1;
  for (int i = 0; i < cells; ++i) total *= k;
  for (int code = 0; code < total; ++code) {
    Magma m{k, {}};
    for (int i = 0, c = code; i < cells; ++i, c /= k) m.table[i] = c % k;
    out.push_back(m);
  }
  return out;
}

bool associative(const Magma& m) {
  for (int a = 0; a < m.k; ++a)
    for (int b = 0; b < m.k; ++b)
      for (int c = 0; c < m.k; ++c)
        if (m(m(a, b), c) != m(a, m(b, c))) return false;
  return true;
}

bool commutative(const Magma& m) {
  for (int a = 0; a < m.k; ++a)
    for (int b = 0; b < m.k; ++b)
      if (m(a, b) != m(b, a)) return false;
  return true;
}

bool is_unit(const Magma& m, int e) {
  for (int a = 0; a < m.k; ++a)
    if (m(e, a) != a || m(a, e) != a) return false;
  return true;
}

bool interchange(const Magma& p, const Magma& q) {
  for (int a = 0; a < p.k; ++a)
    for (int b = 0; b < p.k; ++b)
      for (int c = 0; c < p.k; ++c)
        for (int d = 0; d < p.k; ++d)
          if (p(q(a, b), q(c, d)) != q(p(a, c), p(b, d))) return false;
  return true;
}

// Brute-force count of algebras of the tensor of the unital associative
// presentation with itself: (m1, e1, m2, e2) with all interchange laws.
std::size_t brute_unital_bv(int k) {
  std::size_t count = 0;
  const auto magmas = all_magmas(k);
  for (const auto& m1 : magmas) {
    if (!associative(m1)) continue;
    for (int e1 = 0; e1 < k; ++e1) {
      if (!is_unit(m1, e1)) continue;
      for (const auto& m2 : magmas) {
        if (!associative(m2) || !interchange(m1, m2)) continue;
        for (int e2 = 0; e2 < k; ++e2)
          if (is_unit(m2, e2) && m1(e2, e2) == e2 && m2(e1, e1) == e1 && e1 == e2) ++count;
      }
    }
  }
  return count;
}

std::size_t brute_monoids(int k, bool need_commutative) {
  std::size_t count = 0;
  for (const auto& m : all_magmas(k))
    for (int e = 0; e < k; ++e)
      if (associative(m) && is_unit(m, e) && (!need_commutative || commutative(m))) ++count;
  return count;
}

}  // namespace

TEST_SUITE("operad") {

TEST_CASE("presented operads parse and render") {
  const auto p = ass_unital_presentation();
  CHECK(p.generators().size() == 2);
  CHECK(p.relations().size() == 3);
  const auto text = render_operad_presentation(p);
  CHECK(render_operad_presentation(parse_operad_presentation(text)) == text);
  CHECK_THROWS_AS(parse_operad_presentation("presented_operad x { gen m:2; rel m(1,1) = m(1,2); }"),
                  ParseError);
  CHECK_THROWS_AS(parse_operad_presentation("presented_operad x { gen m:2; rel m(1) = 1; }"), ParseError);
  CHECK_THROWS_AS(parse_operad_presentation("presented_operad x { gen m:2; rel q(1,2) = 1; }"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_operad_presentation("presented_operad x { gen m:2; rel m(1,2) = m(1,2) . perm(1,1); }"),
      ParseError);
}

TEST_CASE("relation permutation relabels leaves") {
  const auto p = parse_operad_presentation(
      "presented_operad c { gen m:2; rel m(1,2) = m(1,2) . perm(2,1); }");
  CHECK(p.relations()[0].relabelled_rhs() == parse_term("m(x2,x1)", p.generators()));
  for (int k = 1; k <= 3; ++k) {
    std::size_t commutative_tables = 0;
    for (const auto& m : all_magmas(k)) commutative_tables += commutative(m);
    CHECK(enumerate_operad_algebras(p, k).size() == commutative_tables);
  }
}

TEST_CASE("associative algebra counts") {
  CHECK(enumerate_operad_algebras(ass_presentation(), 2).size() == 8);
  CHECK(enumerate_operad_algebras(ass_unital_presentation(), 2).size() == 4);
  for (int k = 0; k <= 3; ++k) {
    CHECK(enumerate_operad_algebras(ass_unital_presentation(), k).size() == brute_monoids(k, false));
    CHECK(enumerate_operad_algebras(com_unital_presentation(), k).size() == brute_monoids(k, true));
  }
  CHECK(enumerate_operad_algebras(trivial_presentation(), 3).size() == 1);
}

TEST_CASE("tensor presentation generates the interchange relations") {
  const auto bv = bv_tensor_presentation(ass_presentation(), ass_presentation());
  CHECK(bv.generators().contains("m_1"));
  CHECK(bv.generators().contains("m_2"));
  REQUIRE(bv.relations().size() == 3);
  CHECK(bv.relations()[2].to_string() == "m_1(m_2(1,2),m_2(3,4)) = m_2(m_1(1,2),m_1(3,4)) . perm(1,3,2,4)");
  const auto eq = to_presentation(bv).equations()[2];
  CHECK(eq == commutation_equation(parse_term("m_1(x1,x2)", bv.generators()), 2,
                                   parse_term("m_2(x1,x2)", bv.generators()), 2));
  const auto same = bv_tensor_presentation(ass_unital_presentation(), trivial_presentation());
  CHECK(same.generators().symbols() == ass_unital_presentation().generators().symbols());
  CHECK(to_presentation(same).equations() == to_presentation(ass_unital_presentation()).equations());
}

TEST_CASE("Eckmann-Hilton on two elements") {
  const auto bv = bv_tensor_presentation(ass_unital_presentation(), ass_unital_presentation());
  CHECK(enumerate_operad_algebras(bv, 2).size() == 4);
  CHECK(brute_unital_bv(2) == 4);
  CHECK(count_interchanging_pairs(ass_unital_presentation(), ass_unital_presentation(), 2) == 4);
  for (const auto& a : enumerate_operad_algebras(bv, 2)) CHECK(a.table("m_1") == a.table("m_2"));
}

TEST_CASE("tensor algebra counts match interchanging pairs") {
  const std::vector<OperadPresentation> corpus{ass_presentation(), ass_unital_presentation(),
                                               com_unital_presentation(), trivial_presentation()};
  for (const auto& p1 : corpus)
    for (const auto& p2 : corpus)
      for (std::size_t k = 0; k <= 2; ++k)
        CHECK(enumerate_operad_algebras(bv_tensor_presentation(p1, p2), k).size() ==
              count_interchanging_pairs(p1, p2, k));
  const auto com = com_unital_presentation();
  for (std::size_t k = 0; k <= 3; ++k)
    CHECK(enumerate_operad_algebras(bv_tensor_presentation(com, com), k).size() ==
          enumerate_operad_algebras(com, k).size());
  CHECK(brute_unital_bv(3) == enumerate_operad_algebras(
                                  bv_tensor_presentation(ass_unital_presentation(), ass_unital_presentation()), 3)
                                  .size());
}

}
