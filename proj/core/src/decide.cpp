#include "catcom/decide.hpp"

#include <cstdint>
#include <cstring>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "catcom/error.hpp"
#include "compiled_term.hpp"

namespace catcom {

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

constexpr std::size_t kMaxFreeCombos = 20'000;
constexpr std::size_t kMaxFreeInstances = 500'000;

std::size_t sat_add(std::size_t a, std::size_t b) { return a > kSaturated - b ? kSaturated : a + b; }
std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

// Hash-consed set of terms over x1..x_vars. Node ids are dense.
class Universe {
 public:
  explicit Universe(const Signature& sig) : sig_(sig) {}

  std::size_t size() const { return op_.size(); }
  int op(std::uint32_t id) const { return op_[id]; }
  std::size_t var(std::uint32_t id) const { return var_[id]; }
  std::span<const std::uint32_t> children(std::uint32_t id) const {
    return {kids_.data() + first_[id], arity_[id]};
  }

  std::optional<std::uint32_t> lookup(int op, std::size_t var,
                                      std::span<const std::uint32_t> kids) const {
    const auto it = index_.find(key(op, var, kids));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::uint32_t intern(int op, std::size_t var, std::span<const std::uint32_t> kids) {
    auto k = key(op, var, kids);
    if (auto it = index_.find(k); it != index_.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(op_.size());
    op_.push_back(op);
    var_.push_back(var);
    first_.push_back(static_cast<std::uint32_t>(kids_.size()));
    arity_.push_back(static_cast<std::uint32_t>(kids.size()));
    kids_.insert(kids_.end(), kids.begin(), kids.end());
    index_.emplace(std::move(k), id);
    return id;
  }

  std::uint32_t intern_term(const Term& t) {
    if (t.is_var()) return intern(-1, t.var_index(), {});
    std::vector<std::uint32_t> kids;
    for (const auto& a : t.args()) kids.push_back(intern_term(a));
    return intern(static_cast<int>(*sig_.find(t.symbol())), 0, kids);
  }

 private:
  static std::string key(int op, std::size_t var, std::span<const std::uint32_t> kids) {
    std::string k(sizeof(int) + sizeof(std::uint32_t) * (kids.size() + 1), '\0');
    const auto v = static_cast<std::uint32_t>(var);
    std::memcpy(k.data(), &op, sizeof(int));
    std::memcpy(k.data() + sizeof(int), &v, sizeof v);
    if (!kids.empty())
      std::memcpy(k.data() + sizeof(int) + sizeof v, kids.data(),
                  kids.size() * sizeof(std::uint32_t));
    return k;
  }

  const Signature& sig_;
  std::vector<int> op_;
  std::vector<std::size_t> var_;
  std::vector<std::uint32_t> first_, arity_, kids_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

// Number of terms of each size, saturating.
std::vector<std::size_t> size_counts(const Signature& sig, std::size_t vars, std::size_t max_size) {
  std::vector<std::size_t> count(max_size + 1, 0);
  count[0] = vars;
  for (std::size_t s = 1; s <= max_size; ++s) {
    for (const auto& sym : sig.symbols()) {
      if (sym.arity == 0) {
        if (s == 1) count[s] = sat_add(count[s], 1);
        continue;
      }
      // ways[a][r]: ordered a-tuples of terms with total size r.
      std::vector<std::size_t> ways(s, 0);
      ways[0] = 1;
      for (std::size_t c = 0; c < sym.arity; ++c) {
        std::vector<std::size_t> next(s, 0);
        for (std::size_t r = 0; r < s; ++r)
          for (std::size_t t = 0; r + t < s; ++t)
            next[r + t] = sat_add(next[r + t], sat_mul(ways[r], count[t]));
        ways = std::move(next);
      }
      count[s] = sat_add(count[s], ways[s - 1]);
    }
  }
  return count;
}

void build_universe(Universe& u, const Signature& sig, std::size_t vars, std::size_t max_size) {
  std::vector<std::vector<std::uint32_t>> by_size(max_size + 1);
  for (std::size_t v = 1; v <= vars; ++v) by_size[0].push_back(u.intern(-1, v, {}));
  std::vector<std::uint32_t> kids;
  for (std::size_t s = 1; s <= max_size; ++s) {
    for (std::size_t o = 0; o < sig.size(); ++o) {
      const auto arity = sig.symbols()[o].arity;
      if (arity == 0) {
        if (s == 1) by_size[1].push_back(u.intern(static_cast<int>(o), 0, {}));
        continue;
      }
      kids.assign(arity, 0);
      // Choose child sizes summing to s - 1, then every combination of terms.
      auto choose = [&](auto&& self, std::size_t slot, std::size_t remaining) -> void {
        if (slot == arity) {
          if (remaining == 0) by_size[s].push_back(u.intern(static_cast<int>(o), 0, kids));
          return;
        }
        for (std::size_t cs = 0; cs <= remaining; ++cs) {
          if (slot + 1 == arity && cs != remaining) continue;
          for (auto id : by_size[cs]) {
            kids[slot] = id;
            self(self, slot + 1, remaining - cs);
          }
        }
      };
      choose(choose, 0, s - 1);
    }
  }
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }
  void grow(std::size_t n) {
    const auto old = parent_.size();
    parent_.resize(n);
    for (auto i = old; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

bool match(const Universe& u, const Signature& sig, const Term& pat, std::uint32_t id,
           std::vector<std::int64_t>& binding) {
  if (pat.is_var()) {
    auto& b = binding[pat.var_index() - 1];
    if (b < 0) {
      b = id;
      return true;
    }
    return b == id;
  }
  if (u.op(id) != static_cast<int>(*sig.find(pat.symbol()))) return false;
  const auto kids = u.children(id);
  for (std::size_t i = 0; i < kids.size(); ++i)
    if (!match(u, sig, pat.args()[i], kids[i], binding)) return false;
  return true;
}

std::optional<std::uint32_t> instantiate(const Universe& u, const Signature& sig, const Term& pat,
                                         const std::vector<std::int64_t>& binding) {
  if (pat.is_var()) {
    const auto b = binding[pat.var_index() - 1];
    if (b < 0) return std::nullopt;
    return static_cast<std::uint32_t>(b);
  }
  std::vector<std::uint32_t> kids;
  for (const auto& a : pat.args()) {
    auto k = instantiate(u, sig, a, binding);
    if (!k) return std::nullopt;
    kids.push_back(*k);
  }
  return u.lookup(static_cast<int>(*sig.find(pat.symbol())), 0, kids);
}

void collect_vars(const Term& t, std::vector<bool>& seen) {
  if (t.is_var()) {
    seen[t.var_index() - 1] = true;
    return;
  }
  for (const auto& a : t.args()) collect_vars(a, seen);
}

std::variant<Proved, Unknown> search_proof(const Presentation& pres, const Equation& eq,
                                           const DecideOptions& opt) {
  const auto& sig = pres.signature();
  const auto counts = size_counts(sig, eq.var_count, opt.depth_bound);
  std::size_t total = 0;
  for (auto c : counts) total = sat_add(total, c);
  if (total > opt.max_universe)
    return Unknown{"depth=" + std::to_string(opt.depth_bound), true,
                   "term universe of size " +
                       (total == kSaturated ? std::string("overflow") : std::to_string(total)) +
                       " exceeds ceiling " + std::to_string(opt.max_universe)};

  Universe u(sig);
  build_universe(u, sig, eq.var_count, opt.depth_bound);
  const auto lhs = u.intern_term(eq.lhs);
  const auto rhs = u.intern_term(eq.rhs);
  UnionFind uf(u.size());
  Proved cert;
  cert.universe_size = u.size();

  std::size_t budget = kMaxFreeInstances;
  bool truncated = false;
  for (const auto& axiom : pres.equations()) {
    for (int orient = 0; orient < 2; ++orient) {
      const Term& from = orient == 0 ? axiom.lhs : axiom.rhs;
      const Term& to = orient == 0 ? axiom.rhs : axiom.lhs;
      std::vector<bool> from_vars(axiom.var_count, false), to_vars(axiom.var_count, false);
      collect_vars(from, from_vars);
      collect_vars(to, to_vars);
      std::vector<std::size_t> free;
      bool reverse_free = false;
      for (std::size_t v = 0; v < axiom.var_count; ++v) {
        if (to_vars[v] && !from_vars[v]) free.push_back(v);
        if (from_vars[v] && !to_vars[v]) reverse_free = true;
      }
      // The reverse orientation already yields every instance with both
      // sides in the universe unless it has target-only variables too.
      if (!free.empty() && !reverse_free) continue;
      // Variables only on the target side range over the universe, when small.
      std::size_t combos = 1;
      for (std::size_t i = 0; i < free.size(); ++i) combos = sat_mul(combos, u.size());
      if (combos > kMaxFreeCombos) continue;
      std::vector<std::int64_t> binding(axiom.var_count);
      const auto universe_size = static_cast<std::uint32_t>(u.size());
      for (std::uint32_t id = 0; id < universe_size; ++id) {
        std::fill(binding.begin(), binding.end(), -1);
        if (!match(u, sig, from, id, binding)) continue;
        if (!free.empty()) {
          if (budget < combos) {
            truncated = true;
            break;
          }
          budget -= combos;
        }
        for (std::size_t c = 0; c < combos; ++c) {
          auto rest = c;
          for (auto v : free) {
            binding[v] = static_cast<std::int64_t>(rest % u.size());
            rest /= u.size();
          }
          if (auto target = instantiate(u, sig, to, binding)) {
            ++cert.instances;
            uf.unite(id, *target);
          }
        }
      }
    }
  }

  bool changed = true;
  std::unordered_map<std::string, std::uint32_t> signatures;
  std::vector<std::uint32_t> kids;
  while (changed) {
    changed = false;
    ++cert.congruence_rounds;
    signatures.clear();
    for (std::uint32_t id = 0; id < u.size(); ++id) {
      if (u.op(id) < 0) continue;
      kids.clear();
      for (auto c : u.children(id)) kids.push_back(uf.find(c));
      std::string key(sizeof(int) + kids.size() * sizeof(std::uint32_t), '\0');
      const int op = u.op(id);
      std::memcpy(key.data(), &op, sizeof op);
      if (!kids.empty())
        std::memcpy(key.data() + sizeof op, kids.data(), kids.size() * sizeof(std::uint32_t));
      auto [it, inserted] = signatures.emplace(std::move(key), id);
      if (!inserted && uf.unite(it->second, id)) changed = true;
    }
  }
  if (uf.find(lhs) == uf.find(rhs)) return cert;
  return Unknown{"depth=" + std::to_string(opt.depth_bound), truncated,
                 truncated ? "axiom instance budget exhausted" : "no derivation in universe"};
}

}  // namespace

bool verify_refutation(const Equation& eq, const Refuted& r) {
  if (r.assignment.size() != eq.var_count) return false;
  const int a = evaluate_term(r.model, eq.lhs, r.assignment);
  const int b = evaluate_term(r.model, eq.rhs, r.assignment);
  return a != b && a == r.lhs_value && b == r.rhs_value;
}

EqualityVerdict decide_equal(const Presentation& pres, const Equation& eq,
                             const DecideOptions& options) {
  if (options.depth_bound < 1) throw InputError("decide_equal: depth bound must be >= 1");
  if (options.model_bound < 1) throw InputError("decide_equal: model bound must be >= 1");
  check_term(pres.signature(), eq.lhs);
  check_term(pres.signature(), eq.rhs);
  if (eq.lhs.max_var() > eq.var_count || eq.rhs.max_var() > eq.var_count)
    throw InputError("decide_equal: equation uses more variables than var_count");

  std::string diagnostic;
  bool limited = false;
  if (options.search_proof) {
    if (eq.lhs == eq.rhs) return Proved{0, 0, 0};
    auto r = search_proof(pres, eq, options);
    if (auto* p = std::get_if<Proved>(&r)) return *p;
    const auto& u = std::get<Unknown>(r);
    diagnostic = u.diagnostic;
    limited = u.resource_limit;
  }

  if (options.search_model) {
    auto shared = std::make_shared<const Presentation>(pres);
    const detail::CompiledTerm lhs(eq.lhs, pres.signature()), rhs(eq.rhs, pres.signature());
    std::vector<int> scratch, assignment(eq.var_count);
    std::optional<Refuted> found;
    EnumerationOptions eopt{options.max_model_nodes};
    for (std::size_t k = 1; k <= options.model_bound && !found; ++k) {
      const auto count = power(k, eq.var_count);
      try {
        for_each_model(
            pres, k,
            [&](const std::vector<FunctionTable>& tables) {
              for (std::size_t idx = 0; idx < count; ++idx) {
                decode_index(idx, k, assignment);
                const int a = lhs.evaluate(tables, k, assignment, scratch);
                const int b = rhs.evaluate(tables, k, assignment, scratch);
                if (a != b) {
                  found = Refuted{FiniteModel::trusted(shared, k, tables), assignment, a, b};
                  return false;
                }
              }
              return true;
            },
            eopt);
      } catch (const LimitError& e) {
        limited = true;
        if (!diagnostic.empty()) diagnostic += "; ";
        diagnostic += e.what();
        break;
      }
    }
    if (found) return std::move(*found);
  }

  std::string exhausted;
  if (options.search_proof) exhausted = "depth=" + std::to_string(options.depth_bound);
  if (options.search_model) {
    if (!exhausted.empty()) exhausted += " ";
    exhausted += "model-bound=" + std::to_string(options.model_bound);
  }
  return Unknown{exhausted, limited, diagnostic};
}

}  // namespace catcom
