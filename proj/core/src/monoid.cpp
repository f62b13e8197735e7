#include "catcom/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "catcom/error.hpp"
#include "catcom/parallel.hpp"
#include "lexer.hpp"

namespace catcom {

namespace {

std::string render_list(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

FiniteMonoid::FiniteMonoid(std::size_t k, std::vector<int> table, int unit, std::string name)
    : k_(k), table_(std::move(table)), unit_(unit), name_(std::move(name)) {
  if (k == 0) throw InputError("a monoid needs at least its unit");
  if (table_.size() != k * k) throw InputError("monoid table must have carrier^2 entries");
  if (unit < 0 || static_cast<std::size_t>(unit) >= k) throw InputError("unit outside carrier");
  for (int v : table_)
    if (v < 0 || static_cast<std::size_t>(v) >= k) throw InputError("monoid table value outside carrier");
  const int n = static_cast<int>(k);
  for (int a = 0; a < n; ++a) {
    if (mul(unit, a) != a || mul(a, unit) != a)
      throw InputError("unit law fails at " + std::to_string(a));
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw InputError("associativity fails at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
  }
}

bool FiniteMonoid::is_commutative() const {
  const int n = static_cast<int>(k_);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool is_monoid_hom(const FiniteMonoid& a, const FiniteMonoid& b, const std::vector<int>& map) {
  if (map.size() != a.size()) return false;
  for (int v : map)
    if (v < 0 || static_cast<std::size_t>(v) >= b.size()) return false;
  if (map[a.unit()] != b.unit()) return false;
  const int n = static_cast<int>(a.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
  return true;
}

MonoidMap::MonoidMap(FiniteMonoid s, FiniteMonoid t, std::vector<int> m)
    : source(std::move(s)), target(std::move(t)), map(std::move(m)) {
  if (!is_monoid_hom(source, target, map))
    throw InputError("map " + render_list(map) + " is not a monoid homomorphism");
}

MonoidMap identity_map(const FiniteMonoid& m) {
  std::vector<int> id(m.size());
  std::iota(id.begin(), id.end(), 0);
  return MonoidMap(m, m, std::move(id));
}

FiniteMonoid trivial_monoid() { return FiniteMonoid(1, {0}, 0, "trivial"); }

FiniteMonoid cyclic_group(std::size_t n) {
  if (n == 0) throw InputError("cyclic group order must be positive");
  std::vector<int> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<int>((a + b) % n);
  return FiniteMonoid(n, std::move(t), 0, "Z" + std::to_string(n));
}

FiniteMonoid symmetric_group_3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<int> t(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a * 6 + b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteMonoid(6, std::move(t), 0, "S3");
}

FiniteMonoid product(const FiniteMonoid& a, const FiniteMonoid& b) {
  const std::size_t ka = a.size(), kb = b.size(), k = ka * kb;
  std::vector<int> t(k * k);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      const int u = a.mul(static_cast<int>(x / kb), static_cast<int>(y / kb));
      const int v = b.mul(static_cast<int>(x % kb), static_cast<int>(y % kb));
      t[x * k + y] = static_cast<int>(static_cast<std::size_t>(u) * kb + v);
    }
  const int unit = static_cast<int>(static_cast<std::size_t>(a.unit()) * kb + b.unit());
  return FiniteMonoid(k, std::move(t), unit, a.name() + "x" + b.name());
}

MonoidMap Submonoid::inclusion(const FiniteMonoid& ambient) const {
  return MonoidMap(monoid, ambient, elements);
}

Submonoid generated_submonoid(const FiniteMonoid& m, const std::vector<int>& generators) {
  std::set<int> set{m.unit()};
  for (int g : generators) {
    if (g < 0 || static_cast<std::size_t>(g) >= m.size()) throw InputError("generator outside monoid");
    set.insert(g);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(set.begin(), set.end());
    for (int x : cur)
      for (int y : cur) grew = set.insert(m.mul(x, y)).second || grew;
  }
  Submonoid out;
  out.elements.assign(set.begin(), set.end());
  const std::size_t k = out.elements.size();
  auto index = [&](int v) {
    return static_cast<int>(std::lower_bound(out.elements.begin(), out.elements.end(), v) -
                            out.elements.begin());
  };
  std::vector<int> t(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) t[i * k + j] = index(m.mul(out.elements[i], out.elements[j]));
  out.monoid = FiniteMonoid(k, std::move(t), index(m.unit()));
  return out;
}

std::vector<MonoidMap> enumerate_monoid_homs(const FiniteMonoid& a, const FiniteMonoid& b) {
  const int ka = static_cast<int>(a.size());
  const int kb = static_cast<int>(b.size());
  std::vector<MonoidMap> out;
  std::vector<int> map(a.size(), -1);
  // Assigns elements in order; every product whose factors and value are
  // assigned is checked immediately.
  auto consistent = [&](int i) {
    if (i == a.unit() && map[i] != b.unit()) return false;
    for (int x = 0; x <= i; ++x)
      for (int y = 0; y <= i; ++y) {
        if (x != i && y != i) continue;
        const int xy = a.mul(x, y);
        if (xy <= i && map[xy] != b.mul(map[x], map[y])) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == ka) {
      out.emplace_back(a, b, map);
      return;
    }
    for (int v = 0; v < kb; ++v) {
      map[i] = v;
      if (consistent(i)) self(self, i + 1);
    }
    map[i] = -1;
  };
  rec(rec, 0);
  return out;
}

std::vector<FiniteMonoid> enumerate_monoids(std::size_t k) {
  std::vector<FiniteMonoid> out;
  if (k == 0) return out;
  const int n = static_cast<int>(k);
  std::vector<int> t(k * k, -1);
  for (int a = 0; a < n; ++a) t[a] = t[a * n] = a;
  auto at = [&](int x, int y) { return t[x * n + y]; };
  // Associativity instances (xy)z = x(yz) that use cell (x0, y0), in any
  // of its four positions, and are fully determined.
  auto consistent = [&](int x0, int y0) {
    const int v = at(x0, y0);
    for (int z = 0; z < n; ++z) {
      const int yz = at(y0, z);
      if (yz >= 0) {
        const int l = at(v, z), r = at(x0, yz);
        if (l >= 0 && r >= 0 && l != r) return false;
      }
      const int xy = at(z, x0);
      if (xy >= 0) {
        const int l = at(xy, y0), r = at(z, v);
        if (l >= 0 && r >= 0 && l != r) return false;
      }
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (at(x, y) == x0) {
          const int yz = at(y, y0);
          const int r = yz >= 0 ? at(x, yz) : -1;
          if (r >= 0 && r != v) return false;
        }
      }
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (at(y, z) == y0) {
          const int xy = at(x0, y);
          const int l = xy >= 0 ? at(xy, z) : -1;
          if (l >= 0 && l != v) return false;
        }
    return true;
  };
  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == (n - 1) * (n - 1)) {
      out.emplace_back(k, t, 0);
      return;
    }
    const int x = 1 + cell / (n - 1), y = 1 + cell % (n - 1);
    for (int v = 0; v < n; ++v) {
      t[x * n + y] = v;
      if (consistent(x, y)) self(self, cell + 1);
    }
    t[x * n + y] = -1;
  };
  rec(rec, 0);
  return out;
}

std::vector<FiniteMonoid> monoid_iso_classes(std::size_t k) {
  std::set<std::vector<int>> canon;
  const int n = static_cast<int>(k);
  std::vector<int> perm(k);
  for (const auto& m : enumerate_monoids(k)) {
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    // perm relabels element a as perm[a]; the unit 0 stays fixed.
    do {
      std::vector<int> t(k * k);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[perm[a] * n + perm[b]] = perm[m.mul(a, b)];
      if (best.empty() || t < best) best = std::move(t);
    } while (k > 1 && std::next_permutation(perm.begin() + 1, perm.end()));
    canon.insert(std::move(best));
  }
  std::vector<FiniteMonoid> out;
  for (const auto& t : canon) out.emplace_back(k, t, 0);
  return out;
}

CospanVerdict monoid_cospan_commutes(const MonoidMap& f, const MonoidMap& g) {
  if (!(f.target == g.target)) throw InputError("cospan legs have different codomains");
  CospanVerdict v;
  const auto& c = f.target;
  for (int a = 0; a < static_cast<int>(f.source.size()); ++a)
    for (int b = 0; b < static_cast<int>(g.source.size()); ++b)
      if (c.mul(f(a), g(b)) != c.mul(g(b), f(a))) {
        v.commutes = false;
        v.witness = std::make_pair(a, b);
        return v;
      }
  return v;
}

Submonoid monoid_centralizer(const MonoidMap& f) {
  const auto& m = f.target;
  std::vector<int> members;
  for (int x = 0; x < static_cast<int>(m.size()); ++x) {
    bool central = true;
    for (int y : f.map) central = central && m.mul(x, y) == m.mul(y, x);
    if (central) members.push_back(x);
  }
  Submonoid s = generated_submonoid(m, members);
  if (s.elements != members) throw Error("centralizer is not closed under multiplication");
  return s;
}

Submonoid monoid_centre(const FiniteMonoid& m) { return monoid_centralizer(identity_map(m)); }

UniversalCheck monoid_tensor_universal_check(const FiniteMonoid& a, const FiniteMonoid& b,
                                             std::size_t probe_bound) {
  if (probe_bound == 0) throw InputError("probe bound must be at least 1");
  UniversalCheck out;
  const FiniteMonoid ab = product(a, b);
  const int kb = static_cast<int>(b.size());

  std::vector<int> gens;
  for (int x = 0; x < static_cast<int>(a.size()); ++x) gens.push_back(x * kb + b.unit());
  for (int y = 0; y < kb; ++y) gens.push_back(a.unit() * kb + y);
  if (generated_submonoid(ab, gens).elements.size() != ab.size())
    out.report.fail("generation", "injections do not generate " + ab.name());
  out.report.count("generation", 1, true);

  std::vector<FiniteMonoid> probes;
  for (std::size_t order = 1; order <= probe_bound; ++order)
    for (auto& c : monoid_iso_classes(order)) probes.push_back(std::move(c));
  std::vector<UniversalCheck> parts(probes.size());
  parallel_for(probes.size(), [&](std::size_t i) {
    const FiniteMonoid& c = probes[i];
    UniversalCheck& part = parts[i];
    const auto fs = enumerate_monoid_homs(a, c);
    const auto gs = enumerate_monoid_homs(b, c);
    for (const auto& f : fs)
      for (const auto& g : gs) {
        ++part.cospans;
        std::vector<int> h(ab.size());
        for (int x = 0; x < static_cast<int>(a.size()); ++x)
          for (int y = 0; y < kb; ++y) h[x * kb + y] = c.mul(f(x), g(y));
        const bool hom = is_monoid_hom(ab, c, h);
        auto where = [&] {
          return "probe " + render_monoid(c, true) + " f=" + render_list(f.map) + " g=" +
                 render_list(g.map);
        };
        if (monoid_cospan_commutes(f, g)) {
          ++part.commuting;
          if (hom) ++part.factorizations;
          else part.report.fail("factorization", where());
        } else if (hom) {
          part.report.fail("no-factorization", where());
        }
      }
  });
  for (const auto& part : parts) {
    ++out.probes;
    out.cospans += part.cospans;
    out.commuting += part.commuting;
    out.factorizations += part.factorizations;
    out.report.merge(part.report);
  }
  out.report.count("factorization", out.commuting, true);
  out.report.count("no-factorization", out.cospans - out.commuting, true);
  return out;
}

FiniteMonoid parse_monoid(std::string_view text) {
  detail::TokenStream ts(text);
  ts.expect("monoid");
  auto name = ts.expect_identifier("monoid name");
  ts.expect("{");
  ts.expect("carrier");
  const auto ktok = ts.peek();
  const auto k = ts.expect_number("carrier size");
  ts.expect(";");
  ts.expect("unit");
  const auto utok = ts.peek();
  const auto unit = ts.expect_number("unit");
  ts.expect(";");
  ts.expect("table");
  ts.expect("=");
  ts.expect("[");
  std::vector<int> t;
  if (!ts.accept("]")) {
    do {
      const auto vtok = ts.peek();
      const auto v = ts.expect_number("table value");
      if (v >= k) ts.fail_at(vtok, "table value " + std::to_string(v) + " outside carrier");
      t.push_back(static_cast<int>(v));
    } while (ts.accept(","));
    ts.expect("]");
  }
  ts.expect(";");
  ts.expect("}");
  if (!ts.at_end()) ts.fail("trailing input after monoid");
  if (k == 0) ts.fail_at(ktok, "a monoid needs a non-empty carrier");
  if (unit >= k) ts.fail_at(utok, "unit outside carrier");
  if (t.size() != k * k)
    ts.fail_at(ktok, "table has " + std::to_string(t.size()) + " entries, expected " +
                         std::to_string(k * k));
  try {
    return FiniteMonoid(k, std::move(t), static_cast<int>(unit), std::move(name));
  } catch (const InputError& e) {
    ts.fail_at(ktok, e.what());
  }
}

std::string render_monoid(const FiniteMonoid& m, bool compact) {
  const std::string sep = compact ? " " : "\n  ";
  const std::string name = m.name().empty() ? "m" : m.name();
  std::string out = "monoid " + name + " {" + sep + "carrier " + std::to_string(m.size()) + ";" +
                    sep + "unit " + std::to_string(m.unit()) + ";" + sep + "table = ";
  std::string t;
  for (std::size_t i = 0; i < m.table().size(); ++i) t += (i ? "," : "") + std::to_string(m.table()[i]);
  out += "[" + t + "];" + (compact ? " }" : "\n}\n");
  return out;
}

}  // namespace catcom
