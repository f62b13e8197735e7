#include "catcom/clone.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "catcom/error.hpp"

namespace catcom {

namespace {

// Table of x |-> f(x_{u(0)}, ..., x_{u(n-1)}) on carrier^m.
FunctionTable act_table(const FunctionTable& f, const FinMap& u, std::size_t k) {
  const std::size_t n = u.domain();
  const std::size_t m = u.codomain();
  FunctionTable out(power(k, m));
  std::vector<int> x(m, 0);
  std::vector<int> y(n, 0);
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    decode_index(idx, k, x);
    for (std::size_t i = 0; i < n; ++i) y[i] = x[u(i)];
    out[idx] = f[table_index(y, k)];
  }
  return out;
}

// Writes f(gs) into out, which already has k^m cells.
void substitute_into(FunctionTable& out, const FunctionTable& f, std::size_t n,
                     const std::vector<const FunctionTable*>& gs, std::size_t k) {
  for (std::size_t x = 0; x < out.size(); ++x) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) idx = idx * k + static_cast<std::size_t>((*gs[i])[x]);
    out[x] = f[idx];
  }
}

FunctionTable substitute_table(const FunctionTable& f, std::size_t n,
                               const std::vector<const FunctionTable*>& gs,
                               std::size_t m, std::size_t k) {
  FunctionTable out(power(k, m));
  substitute_into(out, f, n, gs, k);
  return out;
}

// Tables with at most this many possible values are deduplicated through a
// direct-indexed bitmap during closure.
constexpr std::size_t kDenseClosureLimit = std::size_t(1) << 24;

std::size_t table_code(const FunctionTable& t, std::size_t k) {
  std::size_t c = 0;
  for (int v : t) c = c * k + static_cast<std::size_t>(v);
  return c;
}

std::string render_table(const FunctionTable& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s + "]";
}

void check_arity(const CloneTruncation& c, std::size_t n) {
  if (n > c.bound()) throw BoundError("arity " + std::to_string(n) + " exceeds truncation", n);
}

}  // namespace

// FunctionClone

std::size_t FunctionClone::TableHash::operator()(const FunctionTable& t) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : t) h = (h ^ static_cast<std::size_t>(v + 1)) * 1099511628211ull;
  return h;
}

FunctionClone::FunctionClone(std::size_t carrier, std::size_t bound)
    : k_(carrier), bound_(bound), elements_(bound + 1), index_(bound + 1),
      projections_(bound + 1) {
  if (carrier == 0) throw InputError("function clone needs a non-empty carrier");
}

std::optional<ElementId> FunctionClone::find(std::size_t arity, const FunctionTable& t) const {
  if (arity > bound_) return std::nullopt;
  auto it = index_[arity].find(t);
  if (it == index_[arity].end()) return std::nullopt;
  return it->second;
}

ElementId FunctionClone::insert(std::size_t arity, FunctionTable t) {
  if (arity > bound_) throw BoundError("arity exceeds truncation", arity);
  if (t.size() != power(k_, arity)) throw InputError("table length does not match arity");
  auto [it, fresh] = index_[arity].try_emplace(t, static_cast<ElementId>(elements_[arity].size()));
  if (fresh) elements_[arity].push_back(std::move(t));
  return it->second;
}

void FunctionClone::set_projections() {
  for (std::size_t n = 0; n <= bound_; ++n) {
    projections_[n].clear();
    for (std::size_t i = 0; i < n; ++i) projections_[n].push_back(lookup(n, projection_table(k_, n, i)));
  }
}

ElementId FunctionClone::lookup(std::size_t arity, const FunctionTable& t) const {
  auto id = find(arity, t);
  if (!id)
    throw ClosureError("operation " + render_table(t) + " of arity " + std::to_string(arity) +
                       " is not in the clone");
  return *id;
}

ElementId FunctionClone::act(const FinMap& u, ElementId f) const {
  check_arity(*this, u.domain());
  check_arity(*this, u.codomain());
  return lookup(u.codomain(), act_table(elements_[u.domain()].at(f), u, k_));
}

ElementId FunctionClone::projection(std::size_t arity, std::size_t index) const {
  check_arity(*this, arity);
  if (index >= arity) throw InputError("projection index out of range");
  return projections_[arity].at(index);
}

ElementId FunctionClone::substitute(std::size_t n, ElementId f, std::size_t m,
                                    std::span<const ElementId> gs) const {
  check_arity(*this, n);
  check_arity(*this, m);
  if (gs.size() != n) throw InputError("substitution needs one argument per input");
  std::vector<const FunctionTable*> args;
  args.reserve(n);
  for (ElementId g : gs) args.push_back(&elements_[m].at(g));
  return lookup(m, substitute_table(elements_[n].at(f), n, args, m, k_));
}

std::string FunctionClone::describe(Op f) const { return render_table(table(f)); }

// TabulatedClone

TabulatedClone::TabulatedClone(std::size_t bound)
    : names_(bound + 1), projections_(bound + 1) {
  for (std::size_t n = 0; n <= bound; ++n) projections_[n].resize(n);
}

ElementId TabulatedClone::add_element(std::size_t arity, std::string name) {
  check_arity(*this, arity);
  names_[arity].push_back(std::move(name));
  return static_cast<ElementId>(names_[arity].size() - 1);
}

void TabulatedClone::set_projection(std::size_t arity, std::size_t index, ElementId id) {
  check_arity(*this, arity);
  if (index >= arity || id >= size(arity)) throw InputError("projection entry out of range");
  projections_[arity][index] = id;
}

void TabulatedClone::set_action(const FinMap& u, ElementId f, ElementId value) {
  check_arity(*this, u.domain());
  check_arity(*this, u.codomain());
  if (f >= size(u.domain()) || value >= size(u.codomain()))
    throw InputError("action entry out of range");
  action_[{u, f}] = value;
}

void TabulatedClone::set_substitution(std::size_t n, ElementId f, std::size_t m,
                                      std::span<const ElementId> gs, ElementId value) {
  check_arity(*this, n);
  check_arity(*this, m);
  if (gs.size() != n || f >= size(n) || value >= size(m))
    throw InputError("substitution entry out of range");
  std::vector<std::size_t> key{n, f, m};
  for (ElementId g : gs) {
    if (g >= size(m)) throw InputError("substitution argument out of range");
    key.push_back(g);
  }
  substitution_[std::move(key)] = value;
}

ElementId TabulatedClone::act(const FinMap& u, ElementId f) const {
  check_arity(*this, u.domain());
  check_arity(*this, u.codomain());
  auto it = action_.find({u, f});
  if (it == action_.end())
    throw ClosureError("no action entry for " + u.to_string() + " on " +
                       describe({u.domain(), f}));
  return it->second;
}

ElementId TabulatedClone::projection(std::size_t arity, std::size_t index) const {
  check_arity(*this, arity);
  if (index >= arity) throw InputError("projection index out of range");
  const auto& p = projections_[arity][index];
  if (!p) throw ClosureError("no projection entry");
  return *p;
}

ElementId TabulatedClone::substitute(std::size_t n, ElementId f, std::size_t m,
                                     std::span<const ElementId> gs) const {
  check_arity(*this, n);
  check_arity(*this, m);
  std::vector<std::size_t> key{n, f, m};
  key.insert(key.end(), gs.begin(), gs.end());
  auto it = substitution_.find(key);
  if (it == substitution_.end())
    throw ClosureError("no substitution entry for " + describe({n, f}));
  return it->second;
}

std::string TabulatedClone::describe(Op f) const { return names_.at(f.arity).at(f.id); }

// Constructions

std::shared_ptr<const FunctionClone> clone_of_algebra(const FiniteAlgebra& alg, std::size_t N,
                                                      const CloneOptions& options) {
  if (N == 0) throw InputError("clone truncation bound must be at least 1");
  const std::size_t k = alg.carrier();
  if (k == 0) throw InputError("clone of an algebra needs a non-empty carrier");
  auto clone = std::make_shared<FunctionClone>(k, N);
  const auto& symbols = alg.signature().symbols();

  for (std::size_t n = 0; n <= N; ++n) {
    for (std::size_t i = 0; i < n; ++i) clone->insert(n, projection_table(k, n, i));
    // Number of functions carrier^n -> carrier, saturating.
    std::size_t full = SIZE_MAX;
    {
      std::size_t cells = power(k, n);
      std::size_t acc = 1;
      bool overflow = false;
      for (std::size_t c = 0; c < cells && !overflow; ++c) {
        if (acc > SIZE_MAX / k) overflow = true;
        else acc *= k;
      }
      if (!overflow) full = acc;
    }
    const bool dense = full <= kDenseClosureLimit;
    // On {0,1} a table is a bit mask over its cells and an operation is a
    // disjunction of minterms.
    const bool boolean = dense && k == 2;
    const std::size_t cells = power(k, n);
    const std::uint64_t cell_mask = cells >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << cells) - 1;
    std::vector<std::uint64_t> masks;
    auto mask_of = [&](const FunctionTable& t) {
      std::uint64_t b = 0;
      for (std::size_t c = 0; c < t.size(); ++c)
        if (t[c]) b |= std::uint64_t(1) << c;
      return b;
    };
    std::vector<bool> seen(dense ? full : 0, false);
    auto add = [&](const FunctionTable& t) {
      if (dense) {
        const std::size_t code = boolean ? mask_of(t) : table_code(t, k);
        if (seen[code]) return;
        seen[code] = true;
      }
      if (boolean) masks.push_back(mask_of(t));
      clone->insert(n, t);
    };
    for (ElementId e = 0; e < clone->size(n); ++e) {
      const auto& t = clone->table({n, e});
      if (boolean) masks.push_back(mask_of(t));
      if (dense) seen[boolean ? mask_of(t) : table_code(t, k)] = true;
    }
    auto add_mask = [&](std::uint64_t b) {
      if (seen[b]) return;
      seen[b] = true;
      FunctionTable t(cells);
      for (std::size_t c = 0; c < cells; ++c) t[c] = int((b >> c) & 1u);
      masks.push_back(b);
      clone->insert(n, std::move(t));
    };
    FunctionTable scratch(power(k, n));
    std::size_t level_begin = 0;
    bool first = true;
    while (true) {
      const std::size_t level_end = clone->size(n);
      if (!first && level_begin == level_end) break;
      for (std::size_t s = 0; s < symbols.size(); ++s) {
        const std::size_t a = symbols[s].arity;
        if (a == 0) {
          if (first) add(FunctionTable(power(k, n), alg.table(s)[0]));
          continue;
        }
        const FunctionTable& op = alg.table(s);
        if (boolean && a == 2) {
          // Fresh pairs in lexicographic order, as below.
          const std::uint64_t m00 = op[0] ? cell_mask : 0, m01 = op[1] ? cell_mask : 0;
          const std::uint64_t m10 = op[2] ? cell_mask : 0, m11 = op[3] ? cell_mask : 0;
          for (std::size_t x = 0; x < level_end && clone->size(n) < full; ++x) {
            const std::uint64_t f = masks[x];
            for (std::size_t y = x < level_begin ? level_begin : 0; y < level_end; ++y) {
              const std::uint64_t g = masks[y];
              const std::uint64_t r =
                  ((~f & ~g & m00) | (~f & g & m01) | (f & ~g & m10) | (f & g & m11)) & cell_mask;
              if (!seen[r]) {
                add_mask(r);
                if (clone->size(n) > options.max_elements)
                  throw LimitError("clone arity " + std::to_string(n) + " exceeds element ceiling",
                                   std::to_string(clone->size(n)) + " elements");
                if (clone->size(n) >= full) break;
              }
            }
          }
          if (clone->size(n) >= full) break;
          continue;
        }
        std::vector<const FunctionTable*> args(a);
        for_each_tuple(a, level_end, [&](std::span<const ElementId> t) {
          bool fresh = false;
          for (ElementId e : t) fresh = fresh || e >= level_begin;
          if (!fresh) return true;
          if (boolean) {
            std::uint64_t r = 0;
            for (std::size_t idx = 0; idx < op.size(); ++idx) {
              if (!op[idx]) continue;
              std::uint64_t term = cell_mask;
              for (std::size_t i = 0; i < a; ++i)
                term &= ((idx >> (a - 1 - i)) & 1u) ? masks[t[i]] : ~masks[t[i]];
              r |= term;
            }
            add_mask(r & cell_mask);
          } else {
            for (std::size_t i = 0; i < a; ++i) args[i] = &clone->table({n, t[i]});
            substitute_into(scratch, op, a, args, k);
            add(scratch);
          }
          if (clone->size(n) > options.max_elements)
            throw LimitError("clone arity " + std::to_string(n) + " exceeds element ceiling",
                             std::to_string(clone->size(n)) + " elements");
          return clone->size(n) < full;
        });
        if (clone->size(n) >= full) break;
      }
      first = false;
      if (clone->size(n) >= full) break;
      level_begin = level_end;
    }
  }
  clone->set_projections();
  return clone;
}

std::shared_ptr<const FunctionClone> centralizer_clone(const FiniteAlgebra& base, std::size_t N,
                                                       const CloneOptions& options) {
  if (N == 0) throw InputError("clone truncation bound must be at least 1");
  const std::size_t k = base.carrier();
  if (k == 0) throw InputError("centralizer needs a non-empty carrier");
  auto clone = std::make_shared<FunctionClone>(k, N);
  const auto& symbols = base.signature().symbols();
  for (std::size_t n = 0; n <= N; ++n) {
    const std::size_t cells = power(k, n);
    // Guard k^(k^n) against the ceiling before enumerating.
    std::size_t total = 1;
    for (std::size_t c = 0; c < cells; ++c) {
      if (total > options.max_elements / k + 1)
        throw LimitError("centralizer arity " + std::to_string(n) + " enumeration too large",
                         std::to_string(k) + "^" + std::to_string(cells) + " tables");
      total *= k;
    }
    for_each_tuple(cells, k, [&](std::span<const ElementId> digits) {
      FunctionTable f(digits.begin(), digits.end());
      for (std::size_t s = 0; s < symbols.size(); ++s)
        if (interchange_counterexample(f, n, base.table(s), symbols[s].arity, k)) return true;
      clone->insert(n, std::move(f));
      return true;
    });
  }
  clone->set_projections();
  return clone;
}

std::shared_ptr<TabulatedClone> tabulate(const CloneTruncation& c, std::size_t max_entries) {
  const std::size_t N = c.bound();
  auto out = std::make_shared<TabulatedClone>(N);
  std::size_t entries = 0;
  auto bump = [&] {
    if (++entries > max_entries)
      throw LimitError("clone too large to tabulate", std::to_string(entries) + " entries");
  };
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t f = 0; f < c.size(n); ++f) out->add_element(n, c.describe({n, ElementId(f)}));
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t i = 0; i < n; ++i) out->set_projection(n, i, c.projection(n, i));
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t m = 0; m <= N; ++m)
      for_each_map(n, m, [&](const FinMap& u) {
        for (std::size_t f = 0; f < c.size(n); ++f) {
          bump();
          out->set_action(u, ElementId(f), c.act(u, ElementId(f)));
        }
      });
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t m = 0; m <= N; ++m)
      for (std::size_t f = 0; f < c.size(n); ++f)
        for_each_tuple(n, c.size(m), [&](std::span<const ElementId> gs) {
          bump();
          try {
            out->set_substitution(n, ElementId(f), m, gs, c.substitute(n, ElementId(f), m, gs));
          } catch (const BoundError&) {
          }
          return true;
        });
  return out;
}

Op clone_substitute(const CloneTruncation& c, Op f, std::size_t m,
                    std::span<const ElementId> gs) {
  check_arity(c, f.arity);
  check_arity(c, m);
  if (gs.size() != f.arity)
    throw InputError("substitution into an operation of arity " + std::to_string(f.arity) +
                     " needs " + std::to_string(f.arity) + " arguments, got " +
                     std::to_string(gs.size()));
  if (f.id >= c.size(f.arity)) throw InputError("operation id out of range");
  for (ElementId g : gs)
    if (g >= c.size(m)) throw InputError("argument id out of range");
  return {m, c.substitute(f.arity, f.id, m, gs)};
}

std::pair<ElementId, ElementId> interchange_pair(const CloneTruncation& c, Op f, Op g) {
  const std::size_t n = f.arity;
  const std::size_t m = g.arity;
  const std::size_t nm = n * m;
  if (nm > c.bound())
    throw BoundError("interchange of arities " + std::to_string(n) + " and " +
                         std::to_string(m) + " needs arity " + std::to_string(nm),
                     nm);
  std::vector<ElementId> rows(n);
  std::vector<ElementId> args(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) args[j] = c.projection(nm, flatten(i, j, m));
    rows[i] = c.substitute(m, g.id, nm, args);
  }
  std::vector<ElementId> cols(m);
  std::vector<ElementId> column_args(n);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) column_args[i] = c.projection(nm, flatten(i, j, m));
    cols[j] = c.substitute(n, f.id, nm, column_args);
  }
  return {c.substitute(n, f.id, nm, rows), c.substitute(m, g.id, nm, cols)};
}

bool op_commutes(const CloneTruncation& c, Op f, Op g) {
  auto [lhs, rhs] = interchange_pair(c, f, g);
  return lhs == rhs;
}

CommutativityVerdict is_commutative_clone(const CloneTruncation& c) {
  CommutativityVerdict v;
  v.bound = c.bound();
  const std::size_t N = c.bound();
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t f = 0; f < c.size(n); ++f)
      for (std::size_t m = 0; m <= N; ++m) {
        if (n * m > N) break;
        for (std::size_t g = 0; g < c.size(m); ++g) {
          Op a{n, ElementId(f)};
          Op b{m, ElementId(g)};
          if (!op_commutes(c, a, b)) {
            v.commutative = false;
            v.witness = std::make_pair(a, b);
            return v;
          }
        }
      }
  return v;
}

std::string render_clone(const CloneTruncation& c) {
  std::ostringstream os;
  for (std::size_t n = 0; n <= c.bound(); ++n)
    for (std::size_t f = 0; f < c.size(n); ++f)
      os << "T(" << n << ") #" << f << ": " << c.describe({n, ElementId(f)}) << '\n';
  return os.str();
}

}  // namespace catcom
