#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catcom/law_report.hpp"

namespace catcom {

// A monoid on {0..k-1} given by its multiplication table (row-major) and
// unit. The constructor checks associativity and the unit laws.
class FiniteMonoid {
 public:
  FiniteMonoid() : FiniteMonoid(1, {0}, 0) {}
  FiniteMonoid(std::size_t k, std::vector<int> table, int unit, std::string name = {});

  std::size_t size() const { return k_; }
  int unit() const { return unit_; }
  const std::vector<int>& table() const { return table_; }
  const std::string& name() const { return name_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * k_ + b]; }
  bool is_commutative() const;

  friend bool operator==(const FiniteMonoid& a, const FiniteMonoid& b) {
    return a.k_ == b.k_ && a.unit_ == b.unit_ && a.table_ == b.table_;
  }

 private:
  std::size_t k_;
  std::vector<int> table_;
  int unit_;
  std::string name_;
};

// A unit- and multiplication-preserving map; checked on construction.
struct MonoidMap {
  MonoidMap(FiniteMonoid source, FiniteMonoid target, std::vector<int> map);

  FiniteMonoid source;
  FiniteMonoid target;
  std::vector<int> map;

  int operator()(int a) const { return map[static_cast<std::size_t>(a)]; }
};

bool is_monoid_hom(const FiniteMonoid& a, const FiniteMonoid& b, const std::vector<int>& map);
MonoidMap identity_map(const FiniteMonoid& m);

FiniteMonoid trivial_monoid();
// Z/n under addition.
FiniteMonoid cyclic_group(std::size_t n);
// S_3 with elements the permutations of {0,1,2} in lexicographic order and
// product (a * b)(i) = a(b(i)).
FiniteMonoid symmetric_group_3();
// Elements (a, b) encoded as a * |B| + b.
FiniteMonoid product(const FiniteMonoid& a, const FiniteMonoid& b);

struct Submonoid {
  FiniteMonoid monoid;
  // elements[i] is the element of the ambient monoid named i.
  std::vector<int> elements;
  MonoidMap inclusion(const FiniteMonoid& ambient) const;
};

// Closure of a set of elements under multiplication, with the unit. Elements
// are listed in increasing order.
Submonoid generated_submonoid(const FiniteMonoid& m, const std::vector<int>& generators);

// All monoid maps a -> b in lexicographic order of their tables.
std::vector<MonoidMap> enumerate_monoid_homs(const FiniteMonoid& a, const FiniteMonoid& b);

// All monoids on {0..k-1} with unit 0, in lexicographic table order.
std::vector<FiniteMonoid> enumerate_monoids(std::size_t k);
// One representative per isomorphism class of monoids of order k (the
// lexicographically least table among relabelings fixing the unit 0).
std::vector<FiniteMonoid> monoid_iso_classes(std::size_t k);

struct CospanVerdict {
  bool commutes = true;
  // First (a, b) in lexicographic order with f(a) g(b) != g(b) f(a).
  std::optional<std::pair<int, int>> witness;
  explicit operator bool() const { return commutes; }
};

// Throws InputError when the codomains differ.
CospanVerdict monoid_cospan_commutes(const MonoidMap& f, const MonoidMap& g);

// {m : m f(n) = f(n) m for all n}.
Submonoid monoid_centralizer(const MonoidMap& f);
Submonoid monoid_centre(const FiniteMonoid& m);

struct UniversalCheck {
  std::size_t probes = 0;
  std::size_t cospans = 0;
  std::size_t commuting = 0;
  std::size_t factorizations = 0;
  // "factorization" (commuting cospans factor through A x B via
  // (a, b) |-> f(a) g(b)), "no-factorization" (non-commuting ones do not),
  // "generation" (the two injections generate A x B, which gives
  // uniqueness).
  LawReport report;
};

// Universal property of A x B as the commuting tensor of A and B against
// every probe monoid of order <= probe_bound (one per isomorphism class).
UniversalCheck monoid_tensor_universal_check(const FiniteMonoid& a, const FiniteMonoid& b,
                                             std::size_t probe_bound);

// Monoid file grammar:
//   monoid IDENT { carrier NAT; unit NAT; table = [v, ...]; }
FiniteMonoid parse_monoid(std::string_view text);
std::string render_monoid(const FiniteMonoid& m, bool compact = false);

}  // namespace catcom
