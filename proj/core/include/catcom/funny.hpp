#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "catcom/category.hpp"

namespace catcom {

// Generator of the funny tensor: (f, b) with f an arrow of A when left is
// true, (a, g) with g an arrow of B otherwise.
struct FunnyLetter {
  bool left = true;
  ArrowId arrow = 0;
  ObjectId fixed = 0;
  friend auto operator<=>(const FunnyLetter&, const FunnyLetter&) = default;
};

// A path of letters from an object (a, b), encoded a * |obB| + b. The first
// letter is applied first; the empty word is the identity.
struct FunnyWord {
  ObjectId source = 0;
  std::vector<FunnyLetter> letters;
  friend auto operator<=>(const FunnyWord&, const FunnyWord&) = default;
};

struct FunnyHom {
  std::vector<FunnyWord> arrows;
  // Set when longer normal words between the same objects exist.
  bool truncated = false;
};

struct ConfluenceReport {
  std::size_t words = 0;
  std::size_t peaks = 0;
  // First word with a non-joinable pair of one-step rewrites.
  std::optional<FunnyWord> witness;
  bool ok() const { return !witness; }
};

// A finite funny tensor: the category, the normal word of each arrow and
// the universal sesquifunctor A, B -> A box B.
struct FunnyCategory;

// The funny tensor of two finite categories as a rewriting system on
// words: adjacent same-side letters compose, identity letters delete.
class FunnyTensor {
 public:
  FunnyTensor(FiniteCategory a, FiniteCategory b);

  const FiniteCategory& left() const { return a_; }
  const FiniteCategory& right() const { return b_; }
  const FiniteCategory& product() const { return product_; }
  std::size_t object_count() const { return a_.object_count() * b_.object_count(); }
  ObjectId object(ObjectId a, ObjectId b) const { return ObjectId(a * b_.object_count() + b); }

  ObjectId letter_source(const FunnyLetter& l) const;
  ObjectId letter_target(const FunnyLetter& l) const;
  ObjectId target(const FunnyWord& w) const;
  // Letters of all arrows, identities included, in a fixed order.
  const std::vector<FunnyLetter>& letters() const { return letters_; }

  bool well_typed(const FunnyWord& w) const;
  bool is_normal(const FunnyWord& w) const;
  // All results of a single rewrite step.
  std::vector<FunnyWord> rewrites(const FunnyWord& w) const;
  FunnyWord normalize(FunnyWord w) const;
  // second . first, normalized. Throws InputError when not composable.
  FunnyWord compose(const FunnyWord& second, const FunnyWord& first) const;

  // Normal words s -> t of length <= max_length, by length then letters.
  FunnyHom hom(ObjectId s, ObjectId t, std::size_t max_length) const;
  // For every word of length <= max_length and every pair of one-step
  // rewrites, checks that both reducts have the same normal form.
  ConfluenceReport check_local_confluence(std::size_t max_length) const;
  // The tensor as a finite category, when every hom-set is finite.
  std::optional<FunnyCategory> to_category() const;
  // The canonical comparison into A x B.
  ArrowId to_product(const FunnyWord& w) const;

  std::string describe(const FunnyWord& w) const;

 private:
  FiniteCategory a_;
  FiniteCategory b_;
  FiniteCategory product_;
  std::vector<FunnyLetter> letters_;
};

struct FunnyCategory {
  FiniteCategory category;
  std::vector<FunnyWord> words;
  Sesquifunctor universal;
};

}  // namespace catcom
