// Acceptance gate: one PASS/FAIL line per criterion. Expected values come
// from brute-force oracles written here against raw tables.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <catcom/algebra.hpp>
#include <catcom/category.hpp>
#include <catcom/clone.hpp>
#include <catcom/corpus.hpp>
#include <catcom/duoidal.hpp>
#include <catcom/funny.hpp>
#include <catcom/graded.hpp>
#include <catcom/model.hpp>
#include <catcom/monoid.hpp>
#include <catcom/operad.hpp>
#include <catcom/operad_presentation.hpp>
#include <catcom/parallel.hpp>
#include <catcom/premonoidal.hpp>
#include <catcom/sesqui.hpp>
#include <catcom/tensor.hpp>
#include <catcom/term.hpp>

using namespace catcom;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Detail {
  std::ostringstream s;
  template <class T>
  Detail& operator<<(const T& v) {
    s << v;
    return *this;
  }
};

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Row-major table lookup, first argument most significant.
int lookup(const std::vector<int>& table, std::size_t k, const std::vector<int>& args) {
  std::size_t idx = 0;
  for (int a : args) idx = idx * k + static_cast<std::size_t>(a);
  return table[idx];
}

// f(g(x_1*), ..., g(x_n*)) == g(f(x_*1), ..., f(x_*m)) for every n x m
// matrix over {0..k-1}.
bool tables_interchange(const std::vector<int>& f, std::size_t n, const std::vector<int>& g,
                        std::size_t m, std::size_t k) {
  const std::size_t cells = n * m;
  std::vector<int> x(cells, 0);
  std::vector<int> row(m), col(n), outer(n), inner(m);
  const std::size_t total = ipow(k, cells);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t v = idx;
    for (std::size_t c = cells; c > 0; --c) {
      x[c - 1] = static_cast<int>(v % k);
      v /= k;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) row[j] = x[i * m + j];
      outer[i] = lookup(g, k, row);
    }
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < n; ++i) col[i] = x[i * m + j];
      inner[j] = lookup(f, k, col);
    }
    if (lookup(f, k, outer) != lookup(g, k, inner)) return false;
  }
  return true;
}

// ---- brute-force models -------------------------------------------------

struct RawOp {
  std::string name;
  std::size_t arity;
  std::vector<int> table;
};
using RawAlgebra = std::vector<RawOp>;

int eval_raw(const Term& t, const RawAlgebra& a, std::size_t k, const std::vector<int>& xs) {
  if (t.is_var()) return xs[t.var_index() - 1];
  std::vector<int> args;
  for (const auto& c : t.args()) args.push_back(eval_raw(c, a, k, xs));
  for (const auto& op : a)
    if (op.name == t.symbol()) return lookup(op.table, k, args);
  return -1;
}

bool satisfies_raw(const Equation& e, const RawAlgebra& a, std::size_t k) {
  std::vector<int> xs(e.var_count, 0);
  const std::size_t total = ipow(k, e.var_count);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t v = idx;
    for (std::size_t c = xs.size(); c > 0; --c) {
      xs[c - 1] = static_cast<int>(v % k);
      v /= k;
    }
    if (eval_raw(e.lhs, a, k, xs) != eval_raw(e.rhs, a, k, xs)) return false;
  }
  return true;
}

// Every assignment of tables to the signature that satisfies the equations.
std::vector<RawAlgebra> brute_models(const Presentation& p, std::size_t k) {
  const auto& syms = p.signature().symbols();
  RawAlgebra cur;
  std::vector<std::size_t> cells;
  for (const auto& s : syms) {
    cells.push_back(ipow(k, s.arity));
    cur.push_back({s.name, s.arity, std::vector<int>(cells.back(), 0)});
  }
  std::vector<RawAlgebra> out;
  std::size_t total_cells = 0;
  for (auto c : cells) total_cells += c;
  if (k == 0) {
    if (total_cells == 0) out.push_back(cur);
    return out;
  }
  std::vector<int*> slots;
  for (auto& op : cur)
    for (auto& v : op.table) slots.push_back(&v);
  while (true) {
    bool ok = true;
    for (const auto& e : p.equations())
      if (!satisfies_raw(e, cur, k)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(cur);
    std::size_t i = 0;
    while (i < slots.size() && ++*slots[i] == int(k)) *slots[i++] = 0;
    if (i == slots.size()) break;
  }
  return out;
}

std::size_t brute_commuting_pairs(const Presentation& s, const Presentation& t, std::size_t k) {
  const auto sm = brute_models(s, k);
  const auto tm = brute_models(t, k);
  std::size_t count = 0;
  for (const auto& a : sm)
    for (const auto& b : tm) {
      bool ok = true;
      for (const auto& f : a)
        for (const auto& g : b)
          if (ok && !tables_interchange(f.table, f.arity, g.table, g.arity, k)) ok = false;
      if (ok) ++count;
    }
  return count;
}

// ---- criteria -----------------------------------------------------------

Outcome oracle_equivalence() {
  const auto corpus = clone_corpus();
  std::vector<std::size_t> pairs(corpus.size()), agree(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) {
    const auto c = clone_of_algebra(corpus[i], 4);
    for (std::size_t n = 0; n <= 4; ++n)
      for (std::size_t m = 0; n * m <= 4 && m <= 4; ++m)
        for (ElementId f = 0; f < c->size(n); ++f)
          for (ElementId g = 0; g < c->size(m); ++g) {
            ++pairs[i];
            const bool a = op_commutes(*c, {n, f}, {m, g});
            const bool b = op_commutes_duoidal(*c, {n, f}, {m, g});
            const bool o = tables_interchange(c->table({n, f}), n, c->table({m, g}), m, c->carrier());
            if (a == b && a == o) ++agree[i];
          }
  });
  std::size_t p = 0, a = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) p += pairs[i], a += agree[i];
  Outcome r;
  r.pass = p == a && p > 0;
  r.detail = std::to_string(corpus.size()) + " clones, " + std::to_string(a) + "/" +
             std::to_string(p) + " pairs agree with the table oracle";
  return r;
}

Outcome commutative_verdicts() {
  Outcome r;
  Detail d;
  for (const char* name : {"sl", "z2"}) {
    const auto c = clone_of_algebra(builtin_algebra(name), 4);
    const auto v = is_commutative_clone(*c);
    bool oracle = true;
    for (std::size_t n = 0; n <= 4; ++n)
      for (std::size_t m = 0; n * m <= 4 && m <= 4; ++m)
        for (ElementId f = 0; f < c->size(n) && oracle; ++f)
          for (ElementId g = 0; g < c->size(m) && oracle; ++g)
            oracle = tables_interchange(c->table({n, f}), n, c->table({m, g}), m, c->carrier());
    const bool ok = v.commutative && v.bound == 4 && oracle;
    r.pass = r.pass && ok;
    d << name << "=" << (v.commutative ? "CommutativeUpTo(" + std::to_string(v.bound) + ")" : "NotCommutative")
      << " ";
  }
  const auto latt = builtin_algebra("latt");
  const auto c = clone_of_algebra(latt, 4);
  const auto v = is_commutative_clone(*c);
  bool witness_ok = false;
  if (!v.commutative && v.witness) {
    const auto& w1 = c->table(v.witness->first);
    const auto& w2 = c->table(v.witness->second);
    const auto& t_and = latt.table("and");
    const auto& t_or = latt.table("or");
    witness_ok = ((w1 == t_and && w2 == t_or) || (w1 == t_or && w2 == t_and)) &&
                 !tables_interchange(w1, 2, w2, 2, 2);
  }
  r.pass = r.pass && !v.commutative && witness_ok;
  d << "latt=" << (v.commutative ? "Commutative" : "NotCommutative");
  if (v.witness) d << " witness (" << c->describe(v.witness->first) << ", " << c->describe(v.witness->second) << ")";
  r.detail = d.s.str();
  return r;
}

Outcome tensor_correspondence() {
  const std::vector<std::pair<const char*, const char*>> cases{
      {"pointed", "pointed"}, {"monoid", "monoid"}, {"sl", "sl"}, {"monoid", "empty"}};
  Outcome r;
  Detail d;
  for (const auto& [sn, tn] : cases) {
    const auto s = builtin_theory(sn);
    const auto t = builtin_theory(tn);
    d << sn << "(x)" << tn << ":";
    for (std::size_t k = 0; k <= 3; ++k) {
      const auto v = verify_tensor_correspondence(s, t, k);
      const auto expected = brute_commuting_pairs(s, t, k);
      std::set<std::pair<std::size_t, std::size_t>> images;
      bool indices_ok = true;
      for (const auto& [ti, si, ui] : v.bijection) {
        indices_ok = indices_ok && ti < v.tensor_models && si < v.s_models && ui < v.t_models;
        images.insert({si, ui});
      }
      const bool ok = v.report.ok() && v.tensor_models == expected && v.commuting_pairs == expected &&
                      v.bijection.size() == expected && images.size() == expected && indices_ok;
      r.pass = r.pass && ok;
      d << " k" << k << "=" << v.tensor_models << (ok ? "" : "!") << "/" << expected;
    }
    d << "; ";
  }
  r.detail = d.s.str();
  return r;
}

// Unital binary operations on {0,1} with interchanging pairs, counted by
// hand: (m1, e1, m2, e2) with both unital and associative and
// m1(m2(a,b), m2(c,d)) = m2(m1(a,c), m1(b,d)).
std::size_t brute_eckmann_hilton(std::vector<std::pair<std::vector<int>, std::vector<int>>>* found) {
  auto mul = [](unsigned code, int a, int b) { return int((code >> (3 - (2 * a + b))) & 1u); };
  auto monoid = [&](unsigned m, int e) {
    for (int a = 0; a < 2; ++a) {
      if (mul(m, e, a) != a || mul(m, a, e) != a) return false;
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          if (mul(m, mul(m, a, b), c) != mul(m, a, mul(m, b, c))) return false;
    }
    return true;
  };
  std::size_t count = 0;
  for (unsigned m1 = 0; m1 < 16; ++m1)
    for (int e1 = 0; e1 < 2; ++e1)
      for (unsigned m2 = 0; m2 < 16; ++m2)
        for (int e2 = 0; e2 < 2; ++e2) {
          if (!monoid(m1, e1) || !monoid(m2, e2)) continue;
          bool ok = mul(m1, e2, e2) == e2 && mul(m2, e1, e1) == e1;
          for (int a = 0; a < 2 && ok; ++a)
            for (int b = 0; b < 2 && ok; ++b)
              for (int c = 0; c < 2 && ok; ++c)
                for (int e = 0; e < 2 && ok; ++e)
                  ok = mul(m1, mul(m2, a, b), mul(m2, c, e)) == mul(m2, mul(m1, a, c), mul(m1, b, e));
          if (!ok) continue;
          ++count;
          if (found) {
            std::vector<int> t1, t2;
            for (int i = 0; i < 4; ++i) t1.push_back(mul(m1, i / 2, i % 2)), t2.push_back(mul(m2, i / 2, i % 2));
            found->push_back({t1, t2});
          }
        }
  return count;
}

Outcome eckmann_hilton() {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> brute;
  const std::size_t expected = brute_eckmann_hilton(&brute);
  bool brute_commutative = true;
  for (const auto& [t1, t2] : brute) brute_commutative = brute_commutative && t1 == t2 && t1[1] == t1[2];

  const auto monoid = builtin_theory("monoid");
  const auto tensor = commuting_tensor_presentation(monoid, monoid);
  const auto models = enumerate_models(tensor.presentation, 2);
  bool all_commutative = true;
  for (const auto& m : models) {
    const auto& a = m.table(tensor.left_names[0]);
    const auto& b = m.table(tensor.right_names[0]);
    all_commutative = all_commutative && a == b && a[1] == a[2];
  }
  const auto bv = bv_tensor_presentation(ass_unital_presentation(), ass_unital_presentation());
  const auto algebras = enumerate_operad_algebras(bv, 2);

  Outcome r;
  r.pass = expected == 4 && brute_commutative && models.size() == expected && all_commutative &&
           algebras.size() == expected;
  r.detail = "monoid(x)monoid models on 2: " + std::to_string(models.size()) +
             ", bv(Ass_u, Ass_u) algebras on 2: " + std::to_string(algebras.size()) +
             ", brute force: " + std::to_string(expected) +
             (all_commutative ? ", all commutative" : ", non-commutative model found");
  return r;
}

std::vector<FiniteMonoid> monoids_up_to(std::size_t n) {
  std::vector<FiniteMonoid> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& m : monoid_iso_classes(k)) out.push_back(std::move(m));
  return out;
}

// Maps A -> C preserving unit and multiplication, by exhaustion.
std::vector<std::vector<int>> brute_homs(const FiniteMonoid& a, const FiniteMonoid& c) {
  std::vector<std::vector<int>> out;
  std::vector<int> map(a.size(), 0);
  while (true) {
    bool ok = map[a.unit()] == c.unit();
    for (std::size_t x = 0; x < a.size() && ok; ++x)
      for (std::size_t y = 0; y < a.size() && ok; ++y)
        ok = map[a.mul(int(x), int(y))] == c.mul(map[x], map[y]);
    if (ok) out.push_back(map);
    std::size_t i = 0;
    while (i < map.size() && ++map[i] == int(c.size())) map[i++] = 0;
    if (i == map.size()) break;
  }
  return out;
}

Outcome monoid_universal() {
  const auto sources = monoids_up_to(3);
  const auto probes = monoids_up_to(4);
  const std::size_t n = sources.size();
  std::vector<char> ok(n * n, 0);
  std::vector<std::size_t> cospans(n * n, 0);
  parallel_for(n * n, [&](std::size_t idx) {
    const auto& a = sources[idx / n];
    const auto& b = sources[idx % n];
    const auto u = monoid_tensor_universal_check(a, b, 4);
    // The candidate (a, b) |-> f(a) g(b) is the only possible factorization,
    // and it is a homomorphism exactly when the cospan commutes.
    std::size_t total = 0, commuting = 0;
    for (const auto& c : probes) {
      const auto fs = brute_homs(a, c);
      const auto gs = brute_homs(b, c);
      for (const auto& f : fs)
        for (const auto& g : gs) {
          ++total;
          bool hom = true;
          auto h = [&](int x, int y) { return c.mul(f[x], g[y]); };
          for (int x1 = 0; x1 < int(a.size()) && hom; ++x1)
            for (int y1 = 0; y1 < int(b.size()) && hom; ++y1)
              for (int x2 = 0; x2 < int(a.size()) && hom; ++x2)
                for (int y2 = 0; y2 < int(b.size()) && hom; ++y2)
                  hom = h(a.mul(x1, x2), b.mul(y1, y2)) == c.mul(h(x1, y1), h(x2, y2));
          bool commutes = true;
          for (int x = 0; x < int(a.size()) && commutes; ++x)
            for (int y = 0; y < int(b.size()) && commutes; ++y)
              commutes = c.mul(f[x], g[y]) == c.mul(g[y], f[x]);
          if (hom != commutes) return;
          if (commutes) ++commuting;
        }
    }
    cospans[idx] = total;
    ok[idx] = u.report.ok() && u.probes == probes.size() && u.cospans == total &&
              u.commuting == commuting && u.factorizations == commuting;
  });
  std::size_t passed = 0, total = 0;
  for (std::size_t i = 0; i < n * n; ++i) passed += ok[i], total += cospans[i];
  Outcome r;
  r.pass = passed == n * n;
  r.detail = std::to_string(passed) + "/" + std::to_string(n * n) + " source pairs, " +
             std::to_string(probes.size()) + " probes, " + std::to_string(total) + " cospans";
  return r;
}

Outcome centralizer_equivalence() {
  const auto ms = monoids_up_to(4);
  std::vector<std::size_t> checked(ms.size(), 0), bad(ms.size(), 0);
  parallel_for(ms.size(), [&](std::size_t ci) {
    const auto& c = ms[ci];
    std::vector<MonoidMap> maps;
    for (const auto& a : ms)
      for (auto& h : enumerate_monoid_homs(a, c)) maps.push_back(std::move(h));
    std::vector<std::vector<char>> in_centralizer;
    for (const auto& f : maps) {
      std::vector<char> member(c.size(), 0);
      for (int z : monoid_centralizer(f).elements) member[z] = 1;
      in_centralizer.push_back(std::move(member));
    }
    for (std::size_t i = 0; i < maps.size(); ++i)
      for (std::size_t j = 0; j < maps.size(); ++j) {
        const auto& f = maps[i];
        const auto& g = maps[j];
        const bool commutes = bool(monoid_cospan_commutes(f, g));
        const bool f_in = std::all_of(f.map.begin(), f.map.end(), [&](int x) { return in_centralizer[j][x]; });
        const bool g_in = std::all_of(g.map.begin(), g.map.end(), [&](int x) { return in_centralizer[i][x]; });
        bool oracle = true;
        for (int x : f.map)
          for (int y : g.map) oracle = oracle && c.mul(x, y) == c.mul(y, x);
        ++checked[ci];
        if (commutes != f_in || commutes != g_in || commutes != oracle) ++bad[ci];
      }
  });
  std::size_t total = 0, failures = 0;
  for (std::size_t i = 0; i < ms.size(); ++i) total += checked[i], failures += bad[i];
  Outcome r;
  r.pass = failures == 0 && total > 0;
  r.detail = std::to_string(ms.size()) + " monoids, " + std::to_string(total) + " cospans, " +
             std::to_string(failures) + " disagreements";
  return r;
}

// Ass elements act on words: x(v_1..v_n) = v_{w(0)}..v_{w(n-1)}.
std::vector<std::string> ass_apply(const std::vector<std::size_t>& w, const std::vector<std::vector<std::string>>& args) {
  std::vector<std::string> out;
  for (auto i : w) out.insert(out.end(), args[i].begin(), args[i].end());
  return out;
}

std::vector<std::vector<std::size_t>> words(std::size_t n) {
  std::vector<std::size_t> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = i;
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Whether psi(phi(x_11..x_1m), ..) and phi(psi(x_11..x_n1), ..) are the
// same word in the free monoid on the x_ij.
bool ass_oracle(const std::vector<std::size_t>& psi, const std::vector<std::size_t>& phi) {
  const std::size_t n = psi.size(), m = phi.size();
  std::vector<std::vector<std::string>> rows, cols;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<std::string>> xs;
    for (std::size_t j = 0; j < m; ++j) xs.push_back({std::to_string(i) + "." + std::to_string(j)});
    rows.push_back(ass_apply(phi, xs));
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<std::vector<std::string>> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back({std::to_string(i) + "." + std::to_string(j)});
    cols.push_back(ass_apply(psi, xs));
  }
  return ass_apply(psi, rows) == ass_apply(phi, cols);
}

Outcome operad_compatibility() {
  Outcome r;
  Detail d;
  const auto ass = std::make_shared<const AssOperad>(4);
  const auto com = std::make_shared<const ComOperad>(4);
  for (const auto& [name, o] : std::vector<std::pair<std::string, std::shared_ptr<const SymOperadTruncation>>>{
           {"ass", ass}, {"com", com}}) {
    const auto th = theory_of_operad(o, 4);
    std::size_t pairs = 0, agree = 0, commuting = 0, oracle_agree = 0;
    for (std::size_t n = 0; n <= 4; ++n)
      for (std::size_t m = 0; n * m <= 4 && m <= 4; ++m)
        for (ElementId a = 0; a < o->size(n); ++a)
          for (ElementId b = 0; b < o->size(m); ++b) {
            ++pairs;
            const bool x = operad_pair_commutes(*o, {n, a}, {m, b});
            const bool y = op_commutes(*th, th->image({n, a}), th->image({m, b}));
            const bool z = name == "com" ? true : ass_oracle(words(n)[a], words(m)[b]);
            agree += x == y;
            oracle_agree += x == z;
            commuting += x;
          }
    r.pass = r.pass && agree == pairs && oracle_agree == pairs;
    if (name == "com") r.pass = r.pass && commuting == pairs;
    d << name << ": " << agree << "/" << pairs << " agree, " << commuting << " commuting; ";
  }
  // The binary element w12 of Ass.
  const Op e2{2, 0};
  const bool e2_commutes = operad_pair_commutes(*ass, e2, e2);
  r.pass = r.pass && !e2_commutes && ass->describe(e2) == "w12";
  d << "ass (e_2,e_2) " << (e2_commutes ? "commutes" : "does not commute");
  r.detail = d.s.str();
  return r;
}

// Quantum plane arithmetic: x^a y^b . x^c y^d = q^{bc} x^{a+c} y^{b+d}.
struct Plane {
  int p, q;
  std::size_t D;
  using Poly = std::map<std::pair<std::size_t, std::size_t>, int>;
  int pw(int b, std::size_t e) const {
    int r = 1;
    while (e--) r = r * b % p;
    return r;
  }
  Poly mul(const Poly& f, const Poly& g) const {
    Poly out;
    for (const auto& [u, a] : f)
      for (const auto& [v, b] : g) {
        if (u.first + u.second + v.first + v.second > D) continue;
        auto& c = out[{u.first + v.first, u.second + v.second}];
        c = (c + a * b % p * pw(q, u.second * v.first)) % p;
      }
    for (auto it = out.begin(); it != out.end();) it = it->second ? std::next(it) : out.erase(it);
    return out;
  }
  Poly scale(int c, Poly f) const {
    for (auto& [_, v] : f) v = v * c % p;
    for (auto it = f.begin(); it != f.end();) it = it->second ? std::next(it) : f.erase(it);
    return f;
  }
};

Outcome graded_asymmetry() {
  Outcome r;
  Detail d;
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{5, 2}, {7, 3}}) {
    const std::size_t D = 4;
    const auto a = quantum_plane(p, q, D);
    const Plane plane{p, q, D};
    // Basis index of every monomial.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i <= D; ++i)
      for (std::size_t j = 0; i + j <= D; ++j) {
        std::string name = std::string(i, 'x') + std::string(j, 'y');
        index[{i, j}] = a.find(name.empty() ? "one" : name);
      }
    auto to_vector = [&](const Plane::Poly& f) {
      GradedVector v(a.dimension(), 0);
      for (const auto& [mono, c] : f) v[index.at(mono)] = c;
      return v;
    };
    // Every non-zero homogeneous polynomial of grade <= 2.
    std::vector<std::pair<Plane::Poly, std::size_t>> homogeneous;
    for (std::size_t g = 0; g <= 2; ++g) {
      const std::size_t dim = g + 1;
      for (std::size_t code = 1; code < ipow(std::size_t(p), dim); ++code) {
        Plane::Poly f;
        std::size_t c = code;
        for (std::size_t i = 0; i < dim; ++i, c /= std::size_t(p))
          if (c % std::size_t(p)) f[{i, g - i}] = int(c % std::size_t(p));
        homogeneous.push_back({f, g});
      }
    }
    const auto gens = graded_q_cospan_commutes(a, to_vector({{{1, 0}, 1}}), to_vector({{{0, 1}, 1}}));
    bool ok = gens.left != gens.right;
    std::size_t pairs = 0;
    for (const auto& [f, r1] : homogeneous)
      for (const auto& [g, s1] : homogeneous) {
        const auto fv = to_vector(f), gv = to_vector(g);
        const auto fg = graded_q_cospan_commutes(a, fv, gv);
        const auto gf = graded_q_cospan_commutes(a, gv, fv);
        const int c = plane.pw(q, r1 * s1);
        const bool left = plane.mul(f, g) == plane.scale(c, plane.mul(g, f));
        const bool right = plane.mul(g, f) == plane.scale(c, plane.mul(f, g));
        ok = ok && fg.left == gf.right && fg.left == left && fg.right == right;
        ++pairs;
      }
    r.pass = r.pass && ok;
    d << "F_" << p << " q=" << q << ": (x,y) left=" << (gens.left ? "true" : "false")
      << " right=" << (gens.right ? "true" : "false") << ", " << pairs << " pairs; ";
  }
  r.detail = d.s.str();
  return r;
}

// Normal funny words: non-identity letters, sides alternating.
std::size_t brute_funny_hom(const FiniteCategory& a, const FiniteCategory& b, ObjectId a0, ObjectId b0,
                            ObjectId a1, ObjectId b1, std::size_t max_length) {
  std::size_t count = 0;
  std::function<void(ObjectId, ObjectId, int, std::size_t)> walk = [&](ObjectId x, ObjectId y, int last,
                                                                       std::size_t len) {
    if (x == a1 && y == b1) ++count;
    if (len == max_length) return;
    if (last != 0)
      for (ArrowId f = 0; f < a.arrow_count(); ++f)
        if (!a.is_identity(f) && a.source(f) == x) walk(a.target(f), y, 0, len + 1);
    if (last != 1)
      for (ArrowId g = 0; g < b.arrow_count(); ++g)
        if (!b.is_identity(g) && b.source(g) == y) walk(x, b.target(g), 1, len + 1);
  };
  walk(a0, b0, -1, 0);
  return count;
}

Outcome funny_vs_product() {
  const auto w = walking_arrow();
  const FunnyTensor t(w, w);
  const auto hom = t.hom(t.object(0, 0), t.object(1, 1), 8);
  const std::size_t funny_oracle = brute_funny_hom(w, w, 0, 0, 1, 1, 8);
  const std::size_t product_oracle = w.hom(0, 1).size() * w.hom(0, 1).size();
  const std::size_t product = t.product().hom(t.object(0, 0), t.object(1, 1)).size();
  const auto conf = t.check_local_confluence(4);
  Outcome r;
  r.pass = hom.arrows.size() == 2 && funny_oracle == 2 && !hom.truncated && product == 1 &&
           product_oracle == 1 && conf.ok() && conf.words > 0;
  r.detail = "hom_funny=" + std::to_string(hom.arrows.size()) + " hom_product=" + std::to_string(product) +
             ", confluence over " + std::to_string(conf.words) + " words, " + std::to_string(conf.peaks) +
             " peaks" + (conf.ok() ? "" : ", non-joinable peak");
  return r;
}

Outcome sesquicategory_criterion() {
  Outcome r;
  Detail d;
  const std::vector<std::pair<std::string, SesquiData>> two_categories{
      {"discrete(terminal)", locally_discrete(terminal_category())},
      {"discrete(arrow)", locally_discrete(walking_arrow())},
      {"discrete(codiscrete3)", locally_discrete(codiscrete_category(3))},
      {"discrete(Z3)", locally_discrete(monoid_category(cyclic_group(3)))},
      {"walking 2-cell", walking_two_cell()},
      {"cells(Z2)", monoid_two_cells(cyclic_group(2))},
      {"cells(Z3)", monoid_two_cells(cyclic_group(3))},
      {"cells(Z2xZ2)", monoid_two_cells(product(cyclic_group(2), cyclic_group(2)))}};
  std::size_t accepted = 0;
  for (const auto& [name, s] : two_categories) {
    const bool ok = sesqui_validate(s).ok() && two_category_check(s).ok() && sesqui_interchange_all(s).empty();
    accepted += ok;
    if (!ok) d << name << " rejected; ";
  }
  r.pass = accepted == two_categories.size();
  d << accepted << "/" << two_categories.size() << " 2-categories accepted; ";

  const auto s = free_sesqui_example();
  const auto fails = sesqui_interchange_all(s);
  const auto two = two_category_check(s);
  bool witness_ok = false;
  if (fails.size() == 1) {
    // beta g . h alpha versus k alpha . beta f, recomputed from the tables.
    const auto& w = fails.front();
    const auto& alpha = s.cell(w.alpha);
    const auto& beta = s.cell(w.beta);
    const ArrowId f = alpha.source, g = alpha.target, h = beta.source, k = beta.target;
    const CellId lhs = s.vertical(s.whisker_right(w.beta, g), s.whisker_left(h, w.alpha));
    const CellId rhs = s.vertical(s.whisker_left(k, w.alpha), s.whisker_right(w.beta, f));
    witness_ok = lhs == w.lhs && rhs == w.rhs && lhs != rhs;
    d << "free: witness (" << alpha.name << ", " << beta.name << ") gives " << s.cell(lhs).name
      << " != " << s.cell(rhs).name;
  }
  const bool only_interchange = sesqui_validate(s).ok() && !two.ok() && two.failed("interchange-law") &&
                                std::all_of(two.failures().begin(), two.failures().end(), [](const auto& f) {
                                  return f.law == "interchange-law" || f.law == "horizontal-well-defined";
                                });
  r.pass = r.pass && witness_ok && only_interchange;
  r.detail = d.s.str();
  return r;
}

// (b (x) y) . (x (x) c) == (x (x) d) . (a (x) y), from the tables.
bool square(const PremonoidalData& p, ArrowId x, ArrowId y) {
  const auto& c = p.base();
  const ObjectId a = c.source(x), b = c.target(x), s = c.source(y), t = c.target(y);
  return c.compose(p.ltensor(b, y), p.rtensor(x, s)) == c.compose(p.rtensor(x, t), p.ltensor(a, y));
}

bool square_swapped(const PremonoidalData& p, ArrowId x, ArrowId y) {
  const auto& c = p.base();
  const ObjectId a = c.source(x), b = c.target(x), s = c.source(y), t = c.target(y);
  return c.compose(p.rtensor(y, b), p.ltensor(s, x)) == c.compose(p.ltensor(t, x), p.rtensor(y, a));
}

std::vector<ArrowId> brute_centre(const PremonoidalData& p) {
  std::vector<ArrowId> out;
  const auto n = p.base().arrow_count();
  for (ArrowId f = 0; f < n; ++f) {
    bool central = true;
    for (ArrowId g = 0; g < n && central; ++g) central = square(p, f, g) && square_swapped(p, f, g);
    if (central) out.push_back(f);
  }
  return out;
}

Outcome premonoidal_freyd() {
  Outcome r;
  Detail d;
  const auto monoidal = codiscrete_monoid_premonoidal(cyclic_group(2));
  const auto mc = central_arrows(monoidal);
  const auto mz = premonoidal_centre(monoidal);
  const bool monoidal_ok = premonoidal_validate(monoidal).ok() && mc.size() == monoidal.base().arrow_count() &&
                           brute_centre(monoidal) == mc &&
                           mz.structure.base().arrow_count() == monoidal.base().arrow_count();
  d << "Z2 example centre " << mc.size() << "/" << monoidal.base().arrow_count() << "; ";

  const auto p = codiscrete_monoid_premonoidal(left_zero_band());
  const auto central = central_arrows(p);
  const auto z = premonoidal_centre(p);
  const bool freyd = freyd_validate(z.structure, p, z.inclusion).ok();
  std::vector<ArrowId> all;
  for (ArrowId f = 0; f < p.base().arrow_count(); ++f) all.push_back(f);
  const auto v = freyd_cospan_commutes(p, all, all);
  bool witness_ok = false;
  if (!v.commutes && v.witness) {
    witness_ok = !square(p, v.witness->first, v.witness->second);
    d << "witness (" << p.base().arrow(v.witness->first).name << ", "
      << p.base().arrow(v.witness->second).name << "); ";
  }
  const bool seeded_ok = premonoidal_validate(p).ok() && central.size() < all.size() &&
                         brute_centre(p) == central && freyd && witness_ok;
  d << "band example centre " << central.size() << "/" << all.size() << ", centre inclusion "
    << (freyd ? "is" : "is not") << " Freyd";
  r.pass = monoidal_ok && seeded_ok;
  r.detail = d.s.str();
  return r;
}

Outcome soundness_stress_criterion() {
  const auto s = soundness_stress(1, 1000);
  Outcome r;
  r.pass = s.problems == 1000 && s.contradictions == 0 && s.bad_certificates == 0 &&
           s.proved + s.refuted + s.unknown == s.problems;
  r.detail = std::to_string(s.problems) + " problems: proved " + std::to_string(s.proved) + ", refuted " +
             std::to_string(s.refuted) + ", unknown " + std::to_string(s.unknown) + ", contradictions " +
             std::to_string(s.contradictions) + ", bad certificates " + std::to_string(s.bad_certificates);
  return r;
}

struct Criterion {
  int number;
  const char* name;
  Outcome (*run)();
  double limit_seconds;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "oracle-equivalence", oracle_equivalence, 60},
      {2, "commutative-verdicts", commutative_verdicts, 60},
      {3, "tensor-correspondence", tensor_correspondence, 300},
      {4, "eckmann-hilton", eckmann_hilton, 60},
      {5, "monoid-universal-property", monoid_universal, 60},
      {6, "centralizer-equivalence", centralizer_equivalence, 60},
      {7, "operad-theory-compatibility", operad_compatibility, 60},
      {8, "graded-asymmetry", graded_asymmetry, 60},
      {9, "funny-vs-product", funny_vs_product, 60},
      {10, "sesquicategory-criterion", sesquicategory_criterion, 60},
      {11, "premonoidal-freyd", premonoidal_freyd, 60},
      {12, "soundness-stress", soundness_stress_criterion, 60},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.number)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.pass = false;
      o.detail += " (over the time limit)";
    }
    while (!o.detail.empty() && (o.detail.back() == ' ' || o.detail.back() == ';')) o.detail.pop_back();
    if (!o.pass) ++failed;
    std::printf("%s %2d %-28s %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", c.number, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
