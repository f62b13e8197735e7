#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "catcom/finmap.hpp"
#include "catcom/model.hpp"
#include "catcom/term.hpp"

namespace catcom {

// Relation between two linear operad terms in the leaves 1..arity. Each
// leaf occurs exactly once on each side. The right side is read after the
// relabelling leaf l |-> perm(l).
struct OperadRelation {
  Term lhs;
  Term rhs;
  std::size_t arity = 0;
  Permutation perm;

  // rhs with leaves relabelled by perm.
  Term relabelled_rhs() const;
  std::string to_string() const;
};

// Symmetric operad given by generators and relations.
class OperadPresentation {
 public:
  OperadPresentation() = default;
  explicit OperadPresentation(std::string name) : generators_(std::move(name)) {}

  const std::string& name() const { return generators_.name(); }
  const Signature& generators() const { return generators_; }
  const std::vector<OperadRelation>& relations() const { return relations_; }

  void add_generator(std::string name, std::size_t arity) { generators_.add(std::move(name), arity); }
  // Throws InputError on unknown generators, arity mismatches, non-linear
  // leaves or a permutation of the wrong size.
  void add_relation(Term lhs, Term rhs, std::optional<Permutation> perm = {});

 private:
  Signature generators_;
  std::vector<OperadRelation> relations_;
};

// Algebras of a presented operad are the models of its equational reading.
using OperadAlgebra = FiniteModel;

// Equational presentation with leaf l read as the variable x_l.
Presentation to_presentation(const OperadPresentation& p);

// Coproduct P1 + P2 (clashing names become name_1, name_2) with, for every
// generator psi of P1 of arity n and phi of P2 of arity m, the relation
//   psi(phi(1..m), ..., phi(..nm)) = phi(psi(1..n), ..., psi(..mn)) . perm(sigma)
// where sigma is the transpose permutation of the row-major flattening.
OperadPresentation bv_tensor_presentation(const OperadPresentation& p1,
                                          const OperadPresentation& p2);

std::vector<OperadAlgebra> enumerate_operad_algebras(const OperadPresentation& p, std::size_t k,
                                                     const EnumerationOptions& options = {});

// Pairs (A1, A2) of P1- and P2-algebras on {0..k-1} whose generators
// interchange pointwise.
std::size_t count_interchanging_pairs(const OperadPresentation& p1, const OperadPresentation& p2,
                                      std::size_t k, const EnumerationOptions& options = {});

// Grammar:
//   file := "presented_operad" IDENT "{" item* "}"
//   item := "gen" IDENT ":" NAT ";"
//         | "rel" term "=" term ("." "perm" "(" NAT ("," NAT)* ")")? ";"
//   term := IDENT "(" term ("," term)* ")" | IDENT "()" | IDENT | NAT
OperadPresentation parse_operad_presentation(std::string_view text);
std::string render_operad_presentation(const OperadPresentation& p);

// Built-in presentations.
OperadPresentation ass_presentation();
OperadPresentation ass_unital_presentation();
OperadPresentation com_presentation();
OperadPresentation com_unital_presentation();
// No generators: the operad with only the unit.
OperadPresentation trivial_presentation();

}  // namespace catcom
