#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catcom/clone.hpp"
#include "catcom/law_report.hpp"

namespace catcom {

// Representative (h; a_1, ..., a_k) of an element of (T o T)(arity): h in
// T(k), each a_i in T(arity). Two representatives name the same element when
// they are linked by the relation (T(w)h; as) ~ (h; as . w).
struct Composite {
  Op head;
  std::size_t arity = 0;
  std::vector<ElementId> args;

  friend bool operator==(const Composite&, const Composite&) = default;
};

std::string to_string(const CloneTruncation& c, const Composite& x);

// mu applied to a representative.
ElementId multiply(const CloneTruncation& c, const Composite& x);

// (T o T)(u) on representatives: keeps the head, renames every argument.
Composite act(const CloneTruncation& c, const FinMap& u, const Composite& x);

// True iff a and b are equal or linked by one step of the coend relation in
// either direction.
bool coend_related(const CloneTruncation& c, const Composite& a, const Composite& b);

// A family T(n) x T(m) -> (T o T)(n*m) indexed by pairs of arities.
struct CompositeFamily {
  std::string name;
  std::function<Composite(Op, Op)> apply;
};

// sigma(f, g) = (f; T(row_i) g for each i) and
// tau(f, g)   = (g; T(column_j) f for each j).
CompositeFamily sigma_family(const CloneTruncation& c);
CompositeFamily tau_family(const CloneTruncation& c);

// Naturality of a family in both arguments: for u: n -> n', v: m -> m',
//   (T o T)(u x v) F(f, g) ~ F(T(u) f, T(v) g)
// over all arities with n' * m' <= N.
LawReport check_family_naturality(const CloneTruncation& c, const CompositeFamily& family,
                                  const ValidationOptions& options = {});

// Commutation through the composite route: mu . sigma == mu . tau.
bool op_commutes_duoidal(const CloneTruncation& c, Op f, Op g);

// nu = mu . sigma : T(n) x T(m) -> T(n*m).
ElementId nu(const CloneTruncation& c, Op f, Op g);

struct DuoidStructure {
  // Present iff every pair commutes.
  bool commutative = false;
  std::optional<std::pair<Op, Op>> witness;
  // Checks of nu: agreement with mu . tau, units, associativity,
  // naturality and the interchange with mu.
  LawReport checks;
};

DuoidStructure duoid_structure(const CloneTruncation& c, const ValidationOptions& options = {});

}  // namespace catcom
