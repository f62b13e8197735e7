#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "catcom/law_report.hpp"

namespace catcom {

// Vector over F_p in a given basis.
using GradedVector = std::vector<int>;

struct BasisElement {
  std::string name;
  std::size_t grade = 0;
};

// Finite-dimensional graded algebra over F_p, truncated at grade D: basis
// elements of grade <= D, structure constants for every basis pair (zero
// above D), and a unit basis element in grade 0. q is the braiding scalar.
class GradedAlgebra {
 public:
  GradedAlgebra(std::string name, int p, int q, std::size_t D, std::vector<BasisElement> basis,
                std::size_t unit, std::vector<std::vector<GradedVector>> products);

  const std::string& name() const { return name_; }
  int p() const { return p_; }
  int q() const { return q_; }
  std::size_t bound() const { return D_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t unit() const { return unit_; }
  const GradedVector& product(std::size_t i, std::size_t j) const { return products_[i][j]; }

  GradedVector basis_vector(std::size_t i) const;
  GradedVector multiply(const GradedVector& a, const GradedVector& b) const;
  GradedVector scale(int c, const GradedVector& a) const;
  // Grade of a non-zero homogeneous vector; InputError otherwise.
  std::size_t grade(const GradedVector& a) const;
  std::size_t find(std::string_view name) const;

  std::string render_vector(const GradedVector& a) const;

 private:
  std::string name_;
  int p_;
  int q_;
  std::size_t D_;
  std::vector<BasisElement> basis_;
  std::size_t unit_;
  std::vector<std::vector<GradedVector>> products_;
};

// Associativity and unit laws on basis triples, and grading of products.
LawReport validate_graded(const GradedAlgebra& a);

// Basis x^i y^j (i + j <= D) with y x = q x y; |x| = |y| = 1.
GradedAlgebra quantum_plane(int p, int q, std::size_t D);

struct GradedVerdict {
  bool left = false;   // f g == q^{rs} g f
  bool right = false;  // g f == q^{rs} f g
};

// Throws InputError for a non-homogeneous or zero input and BoundError when
// the grades sum past D.
GradedVerdict graded_q_cospan_commutes(const GradedAlgebra& c, const GradedVector& f,
                                       const GradedVector& g);

// Graded file grammar:
//   graded IDENT { p NAT; q NAT; D NAT; basis id:grade, ...; unit id;
//                  mul id*id = c*id + ...; ... }
// Products not listed are zero, except those with the unit.
GradedAlgebra parse_graded(std::string_view text);
// Linear combination "c*id + id + ..." over the algebra's basis.
GradedVector parse_graded_vector(const GradedAlgebra& a, std::string_view text);
std::string render_graded(const GradedAlgebra& a);

}  // namespace catcom
