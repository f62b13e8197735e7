#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catcom/finmap.hpp"
#include "catcom/law_report.hpp"
#include "catcom/monoid.hpp"

namespace catcom {

using ObjectId = std::uint32_t;
using ArrowId = std::uint32_t;

struct Arrow {
  std::string name;
  ObjectId source = 0;
  ObjectId target = 0;
};

// A category with finitely many objects and arrows. compose(g, f) is g . f
// (f first). The composition table holds an entry for every composable
// pair; the constructor checks typing, identity and associativity laws.
class FiniteCategory {
 public:
  FiniteCategory() = default;
  // comp[g * arrows + f] for composable (g, f); other entries are ignored.
  FiniteCategory(std::string name, std::vector<std::string> objects, std::vector<Arrow> arrows,
                 std::vector<ArrowId> identities, std::vector<ArrowId> comp);

  const std::string& name() const { return name_; }
  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(ArrowId f) const { return arrows_.at(f); }
  ObjectId source(ArrowId f) const { return arrows_.at(f).source; }
  ObjectId target(ArrowId f) const { return arrows_.at(f).target; }
  ArrowId identity(ObjectId a) const { return identities_.at(a); }
  bool is_identity(ArrowId f) const { return identities_.at(source(f)) == f; }
  // Throws InputError when target(f) != source(g).
  ArrowId compose(ArrowId g, ArrowId f) const;
  // Arrows a -> b in id order.
  std::vector<ArrowId> hom(ObjectId a, ObjectId b) const;

  std::optional<ObjectId> find_object(std::string_view name) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;

  friend bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
    return a.objects_ == b.objects_ && a.identities_ == b.identities_ && a.comp_ == b.comp_ &&
           a.signature() == b.signature();
  }

 private:
  std::vector<std::pair<ObjectId, ObjectId>> signature() const;

  std::string name_;
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<ArrowId> identities_;
  std::vector<ArrowId> comp_;
};

// Laws of a candidate category given as raw tables, for reporting defects
// instead of throwing. Laws: typing, identity, associativity.
LawReport validate_category_tables(const std::vector<Arrow>& arrows,
                                   const std::vector<ArrowId>& identities,
                                   const std::vector<ArrowId>& comp);

FiniteCategory terminal_category();
// Objects 0 and 1 with one arrow f : 0 -> 1.
FiniteCategory walking_arrow();
FiniteCategory discrete_category(std::size_t n);
// Exactly one arrow between any two objects.
FiniteCategory codiscrete_category(std::size_t n);
// One object, arrows the monoid elements.
FiniteCategory monoid_category(const FiniteMonoid& m);
// Objects and arrows are pairs, encoded a * |B| + b; names "x_y".
FiniteCategory product_category(const FiniteCategory& a, const FiniteCategory& b);

// Grammar:
//   file := "category" IDENT "{" item* "}"
//   item := "objects" IDENT ("," IDENT)* ";"
//         | "arrow" IDENT ":" IDENT "->" IDENT ";"
//         | "comp" IDENT "." IDENT "=" IDENT ";"
// Identities id_a are implicit. Every composable pair of non-identity
// arrows needs a comp line.
FiniteCategory parse_category(std::string_view text);
std::string render_category(const FiniteCategory& c);

struct Functor {
  std::vector<ObjectId> objects;
  std::vector<ArrowId> arrows;
  friend bool operator==(const Functor&, const Functor&) = default;
};

bool is_functor(const FiniteCategory& a, const FiniteCategory& c, const Functor& f);
// All functors in lexicographic order of (objects, arrows).
std::vector<Functor> enumerate_functors(const FiniteCategory& a, const FiniteCategory& c);
Functor identity_functor(const FiniteCategory& a);

// Objects are the functors B -> C (named F0, F1, ...). Arrows F -> G are
// families (alpha_b : Fb -> Gb), all of them when natural is false and the
// natural ones otherwise; composition is componentwise.
FiniteCategory functor_hom(const FiniteCategory& b, const FiniteCategory& c, bool natural);
// The families underlying the arrows of functor_hom, by arrow id.
std::vector<std::vector<ArrowId>> functor_hom_components(const FiniteCategory& b,
                                                         const FiniteCategory& c, bool natural);

// Sesquifunctor data A, B -> C: object map T(a, b), functors T(a, -) on B
// and T(-, b) on A agreeing with it.
struct Sesquifunctor {
  std::vector<std::vector<ObjectId>> objects;  // [a][b]
  std::vector<std::vector<ArrowId>> left;      // left[a][g] = T(a, g)
  std::vector<std::vector<ArrowId>> right;     // right[b][f] = T(f, b)
};

struct SquareWitness {
  ArrowId f = 0;  // arrow of A
  ArrowId g = 0;  // arrow of B
};

struct BifunctorVerdict {
  bool bifunctor = true;
  std::optional<SquareWitness> witness;
  explicit operator bool() const { return bifunctor; }
};

// Throws InputError when the partial functors are not functors or disagree
// with the object map.
void check_sesquifunctor(const FiniteCategory& a, const FiniteCategory& b, const FiniteCategory& c,
                         const Sesquifunctor& t);
// True iff T(a', g) . T(f, b) = T(f, b') . T(a, g) for all f : a -> a',
// g : b -> b'. The witness is the first failing (f, g).
BifunctorVerdict bifunctor_check(const FiniteCategory& a, const FiniteCategory& b,
                                 const FiniteCategory& c, const Sesquifunctor& t);
// The functor A x B -> C sending (f, g) to T(f, b') . T(a, g), when it is
// one.
std::optional<Functor> factor_through_product(const FiniteCategory& a, const FiniteCategory& b,
                                              const FiniteCategory& c, const Sesquifunctor& t);
// The restriction of a functor A x B -> C.
Sesquifunctor restrict_to_sesquifunctor(const FiniteCategory& a, const FiniteCategory& b,
                                        const Functor& f);

}  // namespace catcom
