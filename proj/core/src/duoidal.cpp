#include "catcom/duoidal.hpp"

#include <unordered_map>

#include "catcom/error.hpp"

namespace catcom {

namespace {

// Budgeted loop body: returns false once the shape's budget is spent.
struct Budget {
  std::size_t limit;
  std::size_t used = 0;
  bool take() {
    if (used >= limit) return false;
    ++used;
    return true;
  }
};

template <class Fn>
bool maps(std::size_t n, std::size_t m, Fn&& fn) {
  return for_each_tuple(n, m, [&](std::span<const ElementId> v) {
    return fn(FinMap(n, m, std::vector<std::size_t>(v.begin(), v.end())));
  });
}

std::string op_text(const CloneTruncation& c, Op f) {
  return c.describe(f) + " in T(" + std::to_string(f.arity) + ")";
}

std::string list(const CloneTruncation& c, std::size_t arity, std::span<const ElementId> ids) {
  std::string s = "(";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ", ";
    s += c.describe({arity, ids[i]});
  }
  return s + ")";
}

bool one_step(const CloneTruncation& c, const Composite& small, const Composite& big) {
  const std::size_t k = small.head.arity;
  const std::size_t k2 = big.head.arity;
  if (small.args.size() != k || big.args.size() != k2) return false;
  return !maps(k, k2, [&](const FinMap& w) {
    for (std::size_t i = 0; i < k; ++i)
      if (small.args[i] != big.args[w(i)]) return true;
    return c.act(w, small.head.id) != big.head.id;
  });
}

}  // namespace

std::string to_string(const CloneTruncation& c, const Composite& x) {
  return "(" + c.describe(x.head) + "; " + list(c, x.arity, x.args) + ")";
}

ElementId multiply(const CloneTruncation& c, const Composite& x) {
  return c.substitute(x.head.arity, x.head.id, x.arity, x.args);
}

Composite act(const CloneTruncation& c, const FinMap& u, const Composite& x) {
  if (u.domain() != x.arity) throw InputError("renaming domain does not match composite arity");
  Composite out{x.head, u.codomain(), {}};
  out.args.reserve(x.args.size());
  for (ElementId a : x.args) out.args.push_back(c.act(u, a));
  return out;
}

bool coend_related(const CloneTruncation& c, const Composite& a, const Composite& b) {
  if (a.arity != b.arity) return false;
  if (a == b) return true;
  return one_step(c, a, b) || one_step(c, b, a);
}

CompositeFamily sigma_family(const CloneTruncation& c) {
  return {"sigma", [&c](Op f, Op g) {
            const std::size_t n = f.arity, m = g.arity;
            if (n * m > c.bound()) throw BoundError("sigma needs arity n*m", n * m);
            Composite x{f, n * m, {}};
            for (std::size_t i = 0; i < n; ++i) x.args.push_back(c.act(row_injection(i, n, m), g.id));
            return x;
          }};
}

CompositeFamily tau_family(const CloneTruncation& c) {
  return {"tau", [&c](Op f, Op g) {
            const std::size_t n = f.arity, m = g.arity;
            if (n * m > c.bound()) throw BoundError("tau needs arity n*m", n * m);
            Composite x{g, n * m, {}};
            for (std::size_t j = 0; j < m; ++j)
              x.args.push_back(c.act(column_injection(j, n, m), f.id));
            return x;
          }};
}

LawReport check_family_naturality(const CloneTruncation& c, const CompositeFamily& family,
                                  const ValidationOptions& options) {
  LawReport report;
  const std::string law = family.name + "-naturality";
  const std::size_t N = c.bound();
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t m = 0; m <= N; ++m) {
      if (n * m > N) continue;
      for (std::size_t n2 = 0; n2 <= N; ++n2)
        for (std::size_t m2 = 0; m2 <= N; ++m2) {
          if (n2 * m2 > N) continue;
          Budget budget{options.max_cases_per_shape};
          bool complete = maps(n, n2, [&](const FinMap& u) {
            return maps(m, m2, [&](const FinMap& v) {
              const FinMap uv = product_map(u, v);
              for (ElementId f = 0; f < c.size(n); ++f)
                for (ElementId g = 0; g < c.size(m); ++g) {
                  if (!budget.take()) return false;
                  const Composite lhs = act(c, uv, family.apply({n, f}, {m, g}));
                  const Composite rhs =
                      family.apply({n2, c.act(u, f)}, {m2, c.act(v, g)});
                  if (!coend_related(c, lhs, rhs))
                    report.fail(law, "u=" + u.to_string() + " v=" + v.to_string() + " f=" +
                                         op_text(c, {n, f}) + " g=" + op_text(c, {m, g}));
                }
              return true;
            });
          });
          report.count(law, budget.used, complete);
        }
    }
  return report;
}

bool op_commutes_duoidal(const CloneTruncation& c, Op f, Op g) {
  return multiply(c, sigma_family(c).apply(f, g)) == multiply(c, tau_family(c).apply(f, g));
}

ElementId nu(const CloneTruncation& c, Op f, Op g) {
  const std::size_t n = f.arity, m = g.arity;
  if (n * m > c.bound()) throw BoundError("nu needs arity n*m", n * m);
  std::vector<ElementId> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = c.act(row_injection(i, n, m), g.id);
  return c.substitute(n, f.id, n * m, rows);
}

DuoidStructure duoid_structure(const CloneTruncation& c, const ValidationOptions& options) {
  DuoidStructure out;
  auto verdict = is_commutative_clone(c);
  out.commutative = verdict.commutative;
  out.witness = verdict.witness;
  if (!out.commutative) return out;

  LawReport& report = out.checks;
  const std::size_t N = c.bound();
  const auto tau = tau_family(c);
  // nu is called with few distinct arguments; cache it.
  std::unordered_map<std::uint64_t, ElementId> cache;
  auto nu = [&](Op f, Op g) {
    const std::uint64_t key = (std::uint64_t(f.arity) << 56) | (std::uint64_t(f.id) << 28) |
                              (std::uint64_t(g.arity) << 24) | std::uint64_t(g.id);
    if (f.id >= (1u << 28) || g.id >= (1u << 24) || g.arity >= 16) return catcom::nu(c, f, g);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const ElementId v = catcom::nu(c, f, g);
    cache.emplace(key, v);
    return v;
  };

  {
    std::size_t cases = 0;
    for (std::size_t n = 0; n <= N; ++n)
      for (std::size_t m = 0; m <= N && n * m <= N; ++m)
        for (ElementId f = 0; f < c.size(n); ++f)
          for (ElementId g = 0; g < c.size(m); ++g) {
            ++cases;
            if (nu({n, f}, {m, g}) != multiply(c, tau.apply({n, f}, {m, g})))
              report.fail("nu-equals-tau", "f=" + op_text(c, {n, f}) + " g=" + op_text(c, {m, g}));
          }
    report.count("nu-equals-tau", cases, true);
  }

  if (N >= 1) {
    std::size_t cases = 0;
    const Op unit{1, c.projection(1, 0)};
    for (std::size_t m = 0; m <= N; ++m)
      for (ElementId g = 0; g < c.size(m); ++g) {
        ++cases;
        if (nu(unit, {m, g}) != g || nu({m, g}, unit) != g)
          report.fail("nu-unit", "g=" + op_text(c, {m, g}));
      }
    report.count("nu-unit", cases, true);
  }

  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t m = 0; m <= N; ++m)
      for (std::size_t p = 0; p <= N; ++p) {
        if (n * m > N || m * p > N || n * m * p > N) continue;
        Budget budget{options.max_cases_per_shape};
        bool complete = true;
        for (ElementId f = 0; f < c.size(n) && complete; ++f)
          for (ElementId g = 0; g < c.size(m) && complete; ++g)
            for (ElementId h = 0; h < c.size(p); ++h) {
              if (!budget.take()) {
                complete = false;
                break;
              }
              const ElementId left = nu({n * m, nu({n, f}, {m, g})}, {p, h});
              const ElementId right = nu({n, f}, {m * p, nu({m, g}, {p, h})});
              if (left != right)
                report.fail("nu-associativity", "f=" + op_text(c, {n, f}) + " g=" +
                                                    op_text(c, {m, g}) + " h=" + op_text(c, {p, h}));
            }
        report.count("nu-associativity", budget.used, complete);
      }

  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t m = 0; m <= N; ++m) {
      if (n * m > N) continue;
      for (std::size_t n2 = 0; n2 <= N; ++n2)
        for (std::size_t m2 = 0; m2 <= N; ++m2) {
          if (n2 * m2 > N) continue;
          Budget budget{options.max_cases_per_shape};
          bool complete = maps(n, n2, [&](const FinMap& u) {
            return maps(m, m2, [&](const FinMap& v) {
              const FinMap uv = product_map(u, v);
              for (ElementId f = 0; f < c.size(n); ++f)
                for (ElementId g = 0; g < c.size(m); ++g) {
                  if (!budget.take()) return false;
                  if (c.act(uv, nu({n, f}, {m, g})) !=
                      nu({n2, c.act(u, f)}, {m2, c.act(v, g)}))
                    report.fail("nu-naturality", "u=" + u.to_string() + " v=" + v.to_string() +
                                                     " f=" + op_text(c, {n, f}) +
                                                     " g=" + op_text(c, {m, g}));
                }
              return true;
            });
          });
          report.count("nu-naturality", budget.used, complete);
        }
    }

  for (std::size_t k = 0; k <= N; ++k)
    for (std::size_t l = 0; l <= N; ++l) {
      if (k * l > N) continue;
      for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t m = 0; m <= N; ++m) {
          if (n * m > N) continue;
          Budget budget{options.max_cases_per_shape};
          bool complete = true;
          for (ElementId x = 0; x < c.size(k) && complete; ++x)
            for (ElementId z = 0; z < c.size(l) && complete; ++z)
              complete = for_each_tuple(k, c.size(n), [&](std::span<const ElementId> ys) {
                return for_each_tuple(l, c.size(m), [&](std::span<const ElementId> ws) {
                  if (!budget.take()) return false;
                  const ElementId left = nu({n, c.substitute(k, x, n, ys)},
                                            {m, c.substitute(l, z, m, ws)});
                  std::vector<ElementId> inner(k * l);
                  for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < l; ++b)
                      inner[flatten(a, b, l)] = nu({n, ys[a]}, {m, ws[b]});
                  const ElementId right = c.substitute(k * l, nu({k, x}, {l, z}), n * m, inner);
                  if (left != right)
                    report.fail("duoid-interchange",
                                "x=" + op_text(c, {k, x}) + " ys=" + list(c, n, ys) +
                                    " z=" + op_text(c, {l, z}) + " ws=" + list(c, m, ws));
                  return true;
                });
              });
          report.count("duoid-interchange", budget.used, complete);
        }
    }
  return out;
}

}  // namespace catcom
