#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "catcom/algebra.hpp"
#include "catcom/finmap.hpp"
#include "catcom/law_report.hpp"

namespace catcom {

using ElementId = std::uint32_t;

// An element of T(arity).
struct Op {
  std::size_t arity = 0;
  ElementId id = 0;
  friend bool operator==(const Op&, const Op&) = default;
  friend auto operator<=>(const Op&, const Op&) = default;
};

// A tabulated algebraic theory T(0..N): finite sets T(n), renaming actions
// T(u) for FinMaps u: n -> m, projections pi_i in T(n) and substitution
// mu: T(n) x T(m)^n -> T(m). Element ids are dense per arity.
class CloneTruncation {
 public:
  virtual ~CloneTruncation() = default;

  virtual std::size_t bound() const = 0;
  virtual std::size_t size(std::size_t arity) const = 0;
  // T(u)(f) for f in T(u.domain()); result in T(u.codomain()).
  virtual ElementId act(const FinMap& u, ElementId f) const = 0;
  // pi_index in T(arity), 0-based.
  virtual ElementId projection(std::size_t arity, std::size_t index) const = 0;
  // mu(f; gs) with f in T(n) and every g in T(m). Throws BoundError when the
  // truncation cannot supply the value and ClosureError when a tabulated
  // entry is missing.
  virtual ElementId substitute(std::size_t n, ElementId f, std::size_t m,
                               std::span<const ElementId> gs) const = 0;
  virtual std::string describe(Op f) const = 0;
};

// Clone whose elements are function tables carrier^n -> carrier.
class FunctionClone : public CloneTruncation {
 public:
  FunctionClone(std::size_t carrier, std::size_t bound);

  std::size_t bound() const override { return bound_; }
  std::size_t size(std::size_t arity) const override { return elements_.at(arity).size(); }
  ElementId act(const FinMap& u, ElementId f) const override;
  ElementId projection(std::size_t arity, std::size_t index) const override;
  ElementId substitute(std::size_t n, ElementId f, std::size_t m,
                       std::span<const ElementId> gs) const override;
  std::string describe(Op f) const override;

  std::size_t carrier() const { return k_; }
  const FunctionTable& table(Op f) const { return elements_.at(f.arity).at(f.id); }
  std::optional<ElementId> find(std::size_t arity, const FunctionTable& t) const;
  // Appends a table (no-op when present) and returns its id.
  ElementId insert(std::size_t arity, FunctionTable t);
  // Resolves projection ids; call once every projection table is inserted.
  void set_projections();

 private:
  struct TableHash {
    std::size_t operator()(const FunctionTable& t) const;
  };
  ElementId lookup(std::size_t arity, const FunctionTable& t) const;

  std::size_t k_;
  std::size_t bound_;
  std::vector<std::vector<FunctionTable>> elements_;
  std::vector<std::unordered_map<FunctionTable, ElementId, TableHash>> index_;
  std::vector<std::vector<ElementId>> projections_;
};

// Clone given by explicit finite tables (element names, action, projections
// and substitution). Missing entries raise ClosureError.
class TabulatedClone : public CloneTruncation {
 public:
  explicit TabulatedClone(std::size_t bound);

  std::size_t bound() const override { return names_.size() - 1; }
  std::size_t size(std::size_t arity) const override { return names_.at(arity).size(); }
  ElementId act(const FinMap& u, ElementId f) const override;
  ElementId projection(std::size_t arity, std::size_t index) const override;
  ElementId substitute(std::size_t n, ElementId f, std::size_t m,
                       std::span<const ElementId> gs) const override;
  std::string describe(Op f) const override;

  ElementId add_element(std::size_t arity, std::string name);
  void set_projection(std::size_t arity, std::size_t index, ElementId id);
  void set_action(const FinMap& u, ElementId f, ElementId value);
  void set_substitution(std::size_t n, ElementId f, std::size_t m,
                        std::span<const ElementId> gs, ElementId value);

 private:
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<std::optional<ElementId>>> projections_;
  std::map<std::pair<FinMap, ElementId>, ElementId> action_;
  std::map<std::vector<std::size_t>, ElementId> substitution_;
};

struct CloneOptions {
  // Ceiling on |T(n)| for any single arity.
  std::size_t max_elements = 1'000'000;
};

struct ValidationOptions {
  // Cases examined per law and arity shape before the check is reported as
  // non-exhaustive.
  std::size_t max_cases_per_shape = 200'000;
};

// Term-operation clone of a finite algebra, truncated at arity N. Ids follow
// the closure order: projections, then new operations by composition depth,
// generators in declaration order within a depth. Throws LimitError when
// some T(n) exceeds the ceiling and InputError when the carrier is empty or
// N is 0.
std::shared_ptr<const FunctionClone> clone_of_algebra(const FiniteAlgebra& alg, std::size_t N,
                                                      const CloneOptions& options = {});

// All functions carrier^n -> carrier (n <= N) that interchange with every
// operation of base. Ids follow lexicographic table order.
std::shared_ptr<const FunctionClone> centralizer_clone(const FiniteAlgebra& base, std::size_t N,
                                                       const CloneOptions& options = {});

// Copies any (small) clone into explicit tables, e.g. to seed defects.
// Throws LimitError past max_entries.
std::shared_ptr<TabulatedClone> tabulate(const CloneTruncation& c,
                                         std::size_t max_entries = 2'000'000);

// Checks functoriality, projection naturality, unit laws, associativity,
// naturality and dinaturality of mu for all arities <= N, listing the first
// witness of every failed law.
LawReport validate_clone(const CloneTruncation& c, const ValidationOptions& options = {});

// mu(f; gs) with gs in T(m). Throws BoundError when an arity exceeds N and
// InputError when gs.size() differs from f.arity.
Op clone_substitute(const CloneTruncation& c, Op f, std::size_t m,
                    std::span<const ElementId> gs);

// The two n*m-ary operations of the interchange law of f in T(n), g in T(m),
// built from projections:
//   first  = f(g(pi_{i1}, ..., pi_{im}) for i),
//   second = g(f(pi_{1j}, ..., pi_{nj}) for j).
std::pair<ElementId, ElementId> interchange_pair(const CloneTruncation& c, Op f, Op g);

// True iff the interchange pair coincides. Throws BoundError when n*m > N.
bool op_commutes(const CloneTruncation& c, Op f, Op g);

struct CommutativityVerdict {
  bool commutative = true;
  std::size_t bound = 0;
  // Lexicographically first failing pair in (arity, id) order.
  std::optional<std::pair<Op, Op>> witness;
};

CommutativityVerdict is_commutative_clone(const CloneTruncation& c);

// Text dump: one line per element "T(n) #id: <description>".
std::string render_clone(const CloneTruncation& c);

// Lexicographic enumeration of tuples in [0, base)^length.
template <class Fn>
bool for_each_tuple(std::size_t length, std::size_t base, Fn&& fn) {
  std::vector<ElementId> t(length, 0);
  if (length > 0 && base == 0) return true;
  while (true) {
    if (!fn(std::span<const ElementId>(t))) return false;
    std::size_t pos = length;
    while (pos > 0) {
      --pos;
      if (++t[pos] < base) break;
      t[pos] = 0;
      if (pos == 0) return true;
    }
    if (length == 0) return true;
  }
}

}  // namespace catcom
