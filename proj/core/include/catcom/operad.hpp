#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "catcom/clone.hpp"
#include "catcom/finmap.hpp"
#include "catcom/law_report.hpp"

namespace catcom {

// Truncation of a symmetric operad at arity K. Elements of O(n) are dense
// ids. The right action satisfies (x . rho)(v_1..v_n) = x(v_rho(1), ...),
// so (x . rho) . rho' = x . (rho' o rho).
class SymOperadTruncation {
 public:
  virtual ~SymOperadTruncation() = default;

  virtual std::string name() const = 0;
  virtual std::size_t bound() const = 0;
  virtual std::size_t size(std::size_t arity) const = 0;
  virtual ElementId unit() const = 0;
  virtual ElementId act(std::size_t arity, ElementId x, const Permutation& rho) const = 0;
  // gamma(f; gs); the result has arity sum of the gs arities. Throws
  // BoundError past K and ClosureError for a missing table entry.
  virtual Op compose(Op f, std::span<const Op> gs) const = 0;
  virtual std::string describe(Op x) const = 0;
};

// O(n) = S_n: an element is a word w (a permutation of 0..n-1) standing for
// v |-> v_{w(0)} ... v_{w(n-1)}. Ids follow lexicographic word order.
class AssOperad : public SymOperadTruncation {
 public:
  explicit AssOperad(std::size_t K);
  std::string name() const override { return "ass"; }
  std::size_t bound() const override { return K_; }
  std::size_t size(std::size_t arity) const override;
  ElementId unit() const override { return 0; }
  ElementId act(std::size_t arity, ElementId x, const Permutation& rho) const override;
  Op compose(Op f, std::span<const Op> gs) const override;
  std::string describe(Op x) const override;

  const Permutation& word(Op x) const { return words_.at(x.arity).at(x.id); }
  ElementId id_of(const Permutation& w) const;

 private:
  std::size_t K_;
  std::vector<std::vector<Permutation>> words_;
};

// O(n) = {c_n}: the terminal operad.
class ComOperad : public SymOperadTruncation {
 public:
  explicit ComOperad(std::size_t K) : K_(K) {}
  std::string name() const override { return "com"; }
  std::size_t bound() const override { return K_; }
  std::size_t size(std::size_t arity) const override { return arity <= K_ ? 1 : 0; }
  ElementId unit() const override { return 0; }
  ElementId act(std::size_t, ElementId, const Permutation&) const override { return 0; }
  Op compose(Op f, std::span<const Op> gs) const override;
  std::string describe(Op x) const override { return "c" + std::to_string(x.arity); }

 private:
  std::size_t K_;
};

// O(1) = {id}, every other O(n) empty.
class TrivialOperad : public SymOperadTruncation {
 public:
  explicit TrivialOperad(std::size_t K) : K_(K) {}
  std::string name() const override { return "unit"; }
  std::size_t bound() const override { return K_; }
  std::size_t size(std::size_t arity) const override { return arity == 1 ? 1 : 0; }
  ElementId unit() const override { return 0; }
  ElementId act(std::size_t, ElementId, const Permutation&) const override { return 0; }
  Op compose(Op f, std::span<const Op> gs) const override;
  std::string describe(Op) const override { return "id"; }

 private:
  std::size_t K_;
};

// Explicit finite tables; element names are unique across arities.
class TabulatedOperad : public SymOperadTruncation {
 public:
  TabulatedOperad(std::string name, std::size_t K);

  std::string name() const override { return name_; }
  std::size_t bound() const override { return names_.size() - 1; }
  std::size_t size(std::size_t arity) const override;
  ElementId unit() const override;
  ElementId act(std::size_t arity, ElementId x, const Permutation& rho) const override;
  Op compose(Op f, std::span<const Op> gs) const override;
  std::string describe(Op x) const override { return names_.at(x.arity).at(x.id); }

  Op add_element(std::size_t arity, std::string name);
  void set_unit(ElementId id);
  void set_action(std::size_t arity, ElementId x, const Permutation& rho, ElementId value);
  void set_composition(Op f, std::span<const Op> gs, ElementId value);
  std::optional<Op> find(std::string_view name) const;

 private:
  std::string name_;
  std::vector<std::vector<std::string>> names_;
  std::optional<ElementId> unit_;
  std::map<std::tuple<std::size_t, ElementId, Permutation>, ElementId> action_;
  std::map<std::vector<std::size_t>, ElementId> composition_;
};

// Copies an operad into explicit tables. Throws LimitError past max_entries.
std::shared_ptr<TabulatedOperad> tabulate(const SymOperadTruncation& o,
                                          std::size_t max_entries = 2'000'000);

// Action laws, unit laws, associativity and both equivariance laws of gamma
// within the bound.
LawReport validate_operad(const SymOperadTruncation& o, const ValidationOptions& options = {});

// gamma(f; gs) with argument checks. Throws BoundError past K.
Op operad_compose(const SymOperadTruncation& o, Op f, std::span<const Op> gs);

// gamma(psi; phi, ..., phi) == gamma(phi; psi, ..., psi) . sigma, sigma the
// transpose permutation of n*m. Throws BoundError when n*m > K.
bool operad_pair_commutes(const SymOperadTruncation& o, Op psi, Op phi);

// Th(O) truncated at N: T(n) = (sum over k <= K of O(k) x n^k) / S_k.
// Elements are orbits of pairs (x, t: k -> n) under (x . rho, t) ~ (x, t o rho),
// numbered in lexicographic order of their least representatives (k, x, t).
class OperadTheory : public CloneTruncation {
 public:
  OperadTheory(std::shared_ptr<const SymOperadTruncation> operad, std::size_t N);

  std::size_t bound() const override { return N_; }
  std::size_t size(std::size_t arity) const override { return reps_.at(arity).size(); }
  ElementId act(const FinMap& u, ElementId f) const override;
  ElementId projection(std::size_t arity, std::size_t index) const override;
  ElementId substitute(std::size_t n, ElementId f, std::size_t m,
                       std::span<const ElementId> gs) const override;
  std::string describe(Op f) const override;

  struct Representative {
    Op element;
    FinMap labels;  // element.arity -> n
  };
  const Representative& representative(Op f) const { return reps_.at(f.arity).at(f.id); }
  // Orbit of (x, t).
  ElementId orbit(Op x, const FinMap& t) const;
  // Orbit of (x, identity).
  Op image(Op x) const;
  const SymOperadTruncation& operad() const { return *operad_; }

 private:
  std::size_t index(std::size_t n, Op x, const FinMap& t) const;

  std::shared_ptr<const SymOperadTruncation> operad_;
  std::size_t N_;
  // Per arity n: offsets_[n][k] is the first dense index of pairs with
  // elements of arity k; orbit_of_[n] maps dense pair index to orbit id.
  std::vector<std::vector<std::size_t>> offsets_;
  std::vector<std::vector<ElementId>> orbit_of_;
  std::vector<std::vector<Representative>> reps_;
};

std::shared_ptr<const OperadTheory> theory_of_operad(
    std::shared_ptr<const SymOperadTruncation> operad, std::size_t N);

// Operad truncation file grammar:
//   operad IDENT { bound NAT; arity NAT: id, ...; unit id;
//                  act id . (p1, ..., pn) = id; comp id(id, ...) = id; }
std::shared_ptr<TabulatedOperad> parse_operad(std::string_view text);
std::string render_operad(const SymOperadTruncation& o);

}  // namespace catcom
