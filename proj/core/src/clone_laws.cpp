#include <sstream>

#include "catcom/clone.hpp"
#include "catcom/error.hpp"

namespace catcom {

namespace {

std::string list(const CloneTruncation& c, std::size_t arity, std::span<const ElementId> ids) {
  std::string s = "(";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ", ";
    s += c.describe({arity, ids[i]});
  }
  return s + ")";
}

std::string op_text(const CloneTruncation& c, std::size_t arity, ElementId id) {
  return c.describe({arity, id}) + " in T(" + std::to_string(arity) + ")";
}

// Runs one law over one arity shape with a case budget; evaluation errors
// from missing table entries become "closure" failures, BoundErrors skip
// the case.
class LawRunner {
 public:
  LawRunner(const CloneTruncation& c, LawReport& report, std::size_t budget)
      : c_(c), report_(report), budget_(budget) {}

  template <class Enumerate>
  void run(const std::string& law, Enumerate&& enumerate) {
    std::size_t cases = 0;
    bool complete = enumerate([&](auto&& check) -> bool {
      if (cases >= budget_) return false;
      ++cases;
      try {
        check();
      } catch (const ClosureError& e) {
        report_.fail("closure", law + ": " + e.what());
      } catch (const BoundError&) {
      }
      return true;
    });
    report_.count(law, cases, complete);
  }

  const CloneTruncation& clone() const { return c_; }
  LawReport& report() { return report_; }

 private:
  const CloneTruncation& c_;
  LawReport& report_;
  std::size_t budget_;
};

// Visits maps n -> m, stopping when fn returns false.
template <class Fn>
bool maps(std::size_t n, std::size_t m, Fn&& fn) {
  return for_each_tuple(n, m, [&](std::span<const ElementId> v) {
    return fn(FinMap(n, m, std::vector<std::size_t>(v.begin(), v.end())));
  });
}

}  // namespace

LawReport validate_clone(const CloneTruncation& c, const ValidationOptions& options) {
  LawReport report;
  LawRunner run(c, report, options.max_cases_per_shape);
  const std::size_t N = c.bound();

  for (std::size_t n = 0; n <= N; ++n) {
    run.run("functoriality-identity", [&](auto&& visit) {
      const FinMap id = FinMap::identity(n);
      for (ElementId f = 0; f < c.size(n); ++f)
        if (!visit([&] {
              if (c.act(id, f) != f)
                report.fail("functoriality-identity",
                            "u=" + id.to_string() + " f=" + op_text(c, n, f));
            }))
          return false;
      return true;
    });
  }

  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t m = 0; m <= N; ++m)
      for (std::size_t p = 0; p <= N; ++p)
        run.run("functoriality-composition", [&](auto&& visit) {
          return maps(n, m, [&](const FinMap& u) {
            return maps(m, p, [&](const FinMap& v) {
              const FinMap vu = compose(v, u);
              for (ElementId f = 0; f < c.size(n); ++f)
                if (!visit([&] {
                      if (c.act(vu, f) != c.act(v, c.act(u, f)))
                        report.fail("functoriality-composition",
                                    "u=" + u.to_string() + " v=" + v.to_string() +
                                        " f=" + op_text(c, n, f));
                    }))
                  return false;
              return true;
            });
          });
        });

  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t m = 0; m <= N; ++m)
      run.run("projection-naturality", [&](auto&& visit) {
        return maps(n, m, [&](const FinMap& u) {
          for (std::size_t i = 0; i < n; ++i)
            if (!visit([&] {
                  if (c.act(u, c.projection(n, i)) != c.projection(m, u(i)))
                    report.fail("projection-naturality",
                                "u=" + u.to_string() + " i=" + std::to_string(i + 1) +
                                    " n=" + std::to_string(n));
                }))
              return false;
          return true;
        });
      });

  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t m = 0; m <= N; ++m)
      run.run("unit-left", [&](auto&& visit) {
        return for_each_tuple(n, c.size(m), [&](std::span<const ElementId> gs) {
          for (std::size_t i = 0; i < n; ++i)
            if (!visit([&] {
                  if (c.substitute(n, c.projection(n, i), m, gs) != gs[i])
                    report.fail("unit-left", "i=" + std::to_string(i + 1) + " n=" +
                                                 std::to_string(n) + " gs=" + list(c, m, gs));
                }))
              return false;
          return true;
        });
      });

  for (std::size_t n = 0; n <= N; ++n)
    run.run("unit-right", [&](auto&& visit) {
      std::vector<ElementId> pis(n);
      for (ElementId f = 0; f < c.size(n); ++f)
        if (!visit([&] {
              for (std::size_t i = 0; i < n; ++i) pis[i] = c.projection(n, i);
              if (c.substitute(n, f, n, pis) != f)
                report.fail("unit-right", "f=" + op_text(c, n, f));
            }))
          return false;
      return true;
    });

  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t m = 0; m <= N; ++m)
      for (std::size_t p = 0; p <= N; ++p)
        run.run("associativity", [&](auto&& visit) {
          for (ElementId f = 0; f < c.size(n); ++f) {
            bool go = for_each_tuple(n, c.size(m), [&](std::span<const ElementId> gs) {
              return for_each_tuple(m, c.size(p), [&](std::span<const ElementId> hs) {
                return visit([&] {
                  std::vector<ElementId> inner(n);
                  for (std::size_t i = 0; i < n; ++i) inner[i] = c.substitute(m, gs[i], p, hs);
                  const ElementId left = c.substitute(m, c.substitute(n, f, m, gs), p, hs);
                  const ElementId right = c.substitute(n, f, p, inner);
                  if (left != right)
                    report.fail("associativity", "f=" + op_text(c, n, f) + " gs=" +
                                                     list(c, m, gs) + " hs=" + list(c, p, hs));
                });
              });
            });
            if (!go) return false;
          }
          return true;
        });

  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t m = 0; m <= N; ++m)
      for (std::size_t m2 = 0; m2 <= N; ++m2)
        run.run("naturality", [&](auto&& visit) {
          return maps(m, m2, [&](const FinMap& u) {
            for (ElementId f = 0; f < c.size(n); ++f) {
              bool go = for_each_tuple(n, c.size(m), [&](std::span<const ElementId> gs) {
                return visit([&] {
                  std::vector<ElementId> moved(n);
                  for (std::size_t i = 0; i < n; ++i) moved[i] = c.act(u, gs[i]);
                  if (c.act(u, c.substitute(n, f, m, gs)) != c.substitute(n, f, m2, moved))
                    report.fail("naturality", "u=" + u.to_string() + " f=" + op_text(c, n, f) +
                                                  " gs=" + list(c, m, gs));
                });
              });
              if (!go) return false;
            }
            return true;
          });
        });

  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t n2 = 0; n2 <= N; ++n2)
      for (std::size_t m = 0; m <= N; ++m)
        run.run("dinaturality", [&](auto&& visit) {
          return maps(n, n2, [&](const FinMap& v) {
            for (ElementId f = 0; f < c.size(n); ++f) {
              bool go = for_each_tuple(n2, c.size(m), [&](std::span<const ElementId> gs) {
                return visit([&] {
                  std::vector<ElementId> pulled(n);
                  for (std::size_t i = 0; i < n; ++i) pulled[i] = gs[v(i)];
                  if (c.substitute(n2, c.act(v, f), m, gs) != c.substitute(n, f, m, pulled))
                    report.fail("dinaturality", "v=" + v.to_string() + " f=" + op_text(c, n, f) +
                                                    " gs=" + list(c, m, gs));
                });
              });
              if (!go) return false;
            }
            return true;
          });
        });

  return report;
}

}  // namespace catcom
