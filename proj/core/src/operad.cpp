#include "catcom/operad.hpp"

#include <algorithm>
#include <numeric>

#include "catcom/error.hpp"
#include "lexer.hpp"

namespace catcom {

namespace {

std::size_t total_arity(std::span<const Op> gs) {
  std::size_t t = 0;
  for (const Op& g : gs) t += g.arity;
  return t;
}

void check_compose_args(const SymOperadTruncation& o, Op f, std::span<const Op> gs) {
  if (gs.size() != f.arity)
    throw InputError("composition into an element of arity " + std::to_string(f.arity) +
                     " needs " + std::to_string(f.arity) + " arguments, got " +
                     std::to_string(gs.size()));
  const std::size_t total = total_arity(gs);
  if (total > o.bound()) throw BoundError("composite arity " + std::to_string(total), total);
}

std::string render_perm(const Permutation& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.domain(); ++i) s += (i ? "," : "") + std::to_string(p(i) + 1);
  return s + ")";
}

// Visits every list of k elements with total arity <= max_total, ordered by
// the arity tuple, then by ids. fn returns false to stop.
template <class Fn>
bool for_each_arguments(const SymOperadTruncation& o, std::size_t k, std::size_t max_total, Fn&& fn) {
  std::vector<std::size_t> arities(k, 0);
  std::vector<Op> args(k);
  auto fill = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) return fn(std::span<const Op>(args));
    const std::size_t n = arities[i];
    for (ElementId x = 0; x < o.size(n); ++x) {
      args[i] = {n, x};
      if (!self(self, i + 1)) return false;
    }
    return true;
  };
  auto choose = [&](auto&& self, std::size_t i, std::size_t used) -> bool {
    if (i == k) return fill(fill, 0);
    for (std::size_t n = 0; used + n <= max_total; ++n) {
      arities[i] = n;
      if (!self(self, i + 1, used + n)) return false;
    }
    return true;
  };
  return choose(choose, 0, 0);
}

std::string op_list(const SymOperadTruncation& o, std::span<const Op> xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + o.describe(xs[i]);
  return s + ")";
}

}  // namespace

// AssOperad

AssOperad::AssOperad(std::size_t K) : K_(K), words_(K + 1) {
  for (std::size_t n = 0; n <= K; ++n) words_[n] = all_permutations(n);
}

std::size_t AssOperad::size(std::size_t arity) const {
  return arity <= K_ ? words_[arity].size() : 0;
}

ElementId AssOperad::id_of(const Permutation& w) const {
  const auto& list = words_.at(w.domain());
  auto it = std::lower_bound(list.begin(), list.end(), w);
  if (it == list.end() || !(*it == w)) throw InputError("not a word of the associative operad");
  return static_cast<ElementId>(it - list.begin());
}

ElementId AssOperad::act(std::size_t arity, ElementId x, const Permutation& rho) const {
  if (rho.domain() != arity) throw InputError("permutation size does not match arity");
  return id_of(catcom::compose(rho, words_.at(arity).at(x)));
}

Op AssOperad::compose(Op f, std::span<const Op> gs) const {
  check_compose_args(*this, f, gs);
  const Permutation& w = word(f);
  std::vector<std::size_t> offsets(gs.size() + 1, 0);
  for (std::size_t i = 0; i < gs.size(); ++i) offsets[i + 1] = offsets[i] + gs[i].arity;
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < w.domain(); ++p) {
    const std::size_t i = w(p);
    for (std::size_t v : word(gs[i]).values()) out.push_back(offsets[i] + v);
  }
  const std::size_t n = out.size();
  return {n, id_of(Permutation(n, n, std::move(out)))};
}

std::string AssOperad::describe(Op x) const {
  std::string s = "w";
  for (std::size_t v : word(x).values()) s += std::to_string(v + 1);
  return s;
}

Op ComOperad::compose(Op f, std::span<const Op> gs) const {
  check_compose_args(*this, f, gs);
  return {total_arity(gs), 0};
}

Op TrivialOperad::compose(Op f, std::span<const Op> gs) const {
  check_compose_args(*this, f, gs);
  if (f.arity != 1) throw InputError("trivial operad has only arity 1");
  return gs[0];
}

// TabulatedOperad

TabulatedOperad::TabulatedOperad(std::string name, std::size_t K)
    : name_(std::move(name)), names_(K + 1) {}

std::size_t TabulatedOperad::size(std::size_t arity) const {
  return arity < names_.size() ? names_[arity].size() : 0;
}

ElementId TabulatedOperad::unit() const {
  if (!unit_) throw ClosureError("operad has no unit");
  return *unit_;
}

Op TabulatedOperad::add_element(std::size_t arity, std::string name) {
  if (arity >= names_.size()) throw BoundError("element arity exceeds bound", arity);
  if (find(name)) throw InputError("duplicate operad element '" + name + "'");
  names_[arity].push_back(std::move(name));
  return {arity, static_cast<ElementId>(names_[arity].size() - 1)};
}

void TabulatedOperad::set_unit(ElementId id) {
  if (size(1) <= id) throw InputError("unit must be an element of arity 1");
  unit_ = id;
}

std::optional<Op> TabulatedOperad::find(std::string_view name) const {
  for (std::size_t n = 0; n < names_.size(); ++n)
    for (std::size_t i = 0; i < names_[n].size(); ++i)
      if (names_[n][i] == name) return Op{n, static_cast<ElementId>(i)};
  return std::nullopt;
}

void TabulatedOperad::set_action(std::size_t arity, ElementId x, const Permutation& rho,
                                 ElementId value) {
  if (rho.domain() != arity || !rho.is_bijective()) throw InputError("action needs a permutation of the arity");
  if (x >= size(arity) || value >= size(arity)) throw InputError("action entry out of range");
  action_[{arity, x, rho}] = value;
}

void TabulatedOperad::set_composition(Op f, std::span<const Op> gs, ElementId value) {
  check_compose_args(*this, f, gs);
  if (f.id >= size(f.arity) || value >= size(total_arity(gs)))
    throw InputError("composition entry out of range");
  std::vector<std::size_t> key{f.arity, f.id};
  for (const Op& g : gs) {
    if (g.id >= size(g.arity)) throw InputError("composition argument out of range");
    key.push_back(g.arity);
    key.push_back(g.id);
  }
  composition_[std::move(key)] = value;
}

ElementId TabulatedOperad::act(std::size_t arity, ElementId x, const Permutation& rho) const {
  if (rho.is_identity() && rho.domain() == arity) {
    auto it = action_.find({arity, x, rho});
    return it == action_.end() ? x : it->second;
  }
  auto it = action_.find({arity, x, rho});
  if (it == action_.end())
    throw ClosureError("no action entry for " + describe({arity, x}) + " . " + render_perm(rho));
  return it->second;
}

Op TabulatedOperad::compose(Op f, std::span<const Op> gs) const {
  check_compose_args(*this, f, gs);
  std::vector<std::size_t> key{f.arity, f.id};
  for (const Op& g : gs) {
    key.push_back(g.arity);
    key.push_back(g.id);
  }
  auto it = composition_.find(key);
  if (it == composition_.end())
    throw ClosureError("no composition entry for " + describe(f) + op_list(*this, gs));
  return {total_arity(gs), it->second};
}

std::shared_ptr<TabulatedOperad> tabulate(const SymOperadTruncation& o, std::size_t max_entries) {
  const std::size_t K = o.bound();
  auto out = std::make_shared<TabulatedOperad>(o.name(), K);
  std::size_t entries = 0;
  auto bump = [&] {
    if (++entries > max_entries)
      throw LimitError("operad too large to tabulate", std::to_string(entries) + " entries");
  };
  for (std::size_t n = 0; n <= K; ++n)
    for (ElementId x = 0; x < o.size(n); ++x) out->add_element(n, o.describe({n, x}));
  if (o.size(1) > 0) out->set_unit(o.unit());
  for (std::size_t n = 0; n <= K; ++n)
    for (const auto& rho : all_permutations(n))
      for (ElementId x = 0; x < o.size(n); ++x) {
        bump();
        out->set_action(n, x, rho, o.act(n, x, rho));
      }
  for (std::size_t k = 0; k <= K; ++k)
    for (ElementId f = 0; f < o.size(k); ++f)
      for_each_arguments(o, k, K, [&](std::span<const Op> gs) {
        bump();
        out->set_composition({k, f}, gs, o.compose({k, f}, gs).id);
        return true;
      });
  return out;
}

Op operad_compose(const SymOperadTruncation& o, Op f, std::span<const Op> gs) {
  if (f.arity > o.bound() || f.id >= o.size(f.arity)) throw InputError("operad element out of range");
  for (const Op& g : gs)
    if (g.arity > o.bound() || g.id >= o.size(g.arity)) throw InputError("operad element out of range");
  return o.compose(f, gs);
}

bool operad_pair_commutes(const SymOperadTruncation& o, Op psi, Op phi) {
  const std::size_t n = psi.arity, m = phi.arity;
  if (n * m > o.bound())
    throw BoundError("pair of arities " + std::to_string(n) + " and " + std::to_string(m), n * m);
  const std::vector<Op> phis(n, phi), psis(m, psi);
  const Op lhs = o.compose(psi, phis);
  const Op rhs = o.compose(phi, psis);
  return lhs.id == o.act(n * m, rhs.id, transpose_permutation(n, m));
}

LawReport validate_operad(const SymOperadTruncation& o, const ValidationOptions& options) {
  LawReport report;
  const std::size_t K = o.bound();
  const std::size_t budget = options.max_cases_per_shape;

  auto guarded = [&](const std::string& law, auto&& check) {
    try {
      check();
    } catch (const ClosureError& e) {
      report.fail("closure", law + ": " + e.what());
    } catch (const BoundError&) {
    }
  };

  for (std::size_t n = 0; n <= K; ++n) {
    const auto perms = all_permutations(n);
    std::size_t cases = 0;
    for (ElementId x = 0; x < o.size(n); ++x) {
      guarded("action-identity", [&] {
        ++cases;
        if (o.act(n, x, Permutation::identity(n)) != x)
          report.fail("action-identity", o.describe({n, x}));
      });
      for (const auto& r1 : perms)
        for (const auto& r2 : perms)
          guarded("action-composition", [&] {
            ++cases;
            if (o.act(n, o.act(n, x, r1), r2) != o.act(n, x, compose(r2, r1)))
              report.fail("action-composition",
                          o.describe({n, x}) + " . " + render_perm(r1) + " . " + render_perm(r2));
          });
    }
    report.count("action", cases, true);
  }

  if (o.size(1) == 0) {
    report.fail("unit", "O(1) is empty");
    return report;
  }
  const Op id{1, o.unit()};

  {
    std::size_t cases = 0;
    for (std::size_t n = 0; n <= K; ++n)
      for (ElementId g = 0; g < o.size(n); ++g) {
        ++cases;
        guarded("unit-left", [&] {
          const Op gs[] = {{n, g}};
          if (!(o.compose(id, gs) == Op{n, g})) report.fail("unit-left", o.describe({n, g}));
        });
        guarded("unit-right", [&] {
          const std::vector<Op> ids(n, id);
          if (!(o.compose({n, g}, ids) == Op{n, g})) report.fail("unit-right", o.describe({n, g}));
        });
      }
    report.count("unit", cases, true);
  }

  for (std::size_t k = 0; k <= K; ++k) {
    std::size_t cases = 0;
    bool complete = true;
    for (ElementId f = 0; f < o.size(k) && complete; ++f) {
      const Op fo{k, f};
      complete = for_each_arguments(o, k, K, [&](std::span<const Op> gs) {
        const std::size_t total = total_arity(gs);
        return for_each_arguments(o, total, K, [&](std::span<const Op> hs) {
          if (++cases > budget) return false;
          guarded("associativity", [&] {
            const Op left = o.compose(o.compose(fo, gs), hs);
            std::vector<Op> inner;
            std::size_t offset = 0;
            for (const Op& g : gs) {
              inner.push_back(o.compose(g, hs.subspan(offset, g.arity)));
              offset += g.arity;
            }
            if (!(left == o.compose(fo, inner)))
              report.fail("associativity", o.describe(fo) + op_list(o, gs) + op_list(o, hs));
          });
          return true;
        });
      });
    }
    report.count("associativity", std::min(cases, budget), complete);
  }

  for (std::size_t k = 0; k <= K; ++k) {
    std::size_t cases = 0;
    bool complete = true;
    const auto perms = all_permutations(k);
    for (ElementId f = 0; f < o.size(k) && complete; ++f) {
      const Op fo{k, f};
      complete = for_each_arguments(o, k, K, [&](std::span<const Op> gs) {
        std::vector<std::size_t> sizes;
        for (const Op& g : gs) sizes.push_back(g.arity);
        const std::size_t total = total_arity(gs);
        for (const auto& rho : perms) {
          if (++cases > budget) return false;
          guarded("equivariance-top", [&] {
            const Op left = o.compose({k, o.act(k, f, rho)}, gs);
            std::vector<Op> moved(k);
            for (std::size_t p = 0; p < k; ++p) moved[p] = gs[rho(p)];
            const Op inner = o.compose(fo, moved);
            const ElementId right = o.act(total, inner.id, block_permutation(rho, sizes));
            if (left.id != right)
              report.fail("equivariance-top",
                          o.describe(fo) + " . " + render_perm(rho) + op_list(o, gs));
          });
        }
        // Bottom equivariance: one permutation per argument, all combinations.
        std::vector<std::vector<Permutation>> choices;
        for (const Op& g : gs) choices.push_back(all_permutations(g.arity));
        std::vector<std::size_t> pick(k, 0);
        while (true) {
          if (++cases > budget) return false;
          guarded("equivariance-bottom", [&] {
            std::vector<Op> acted(k);
            std::vector<Permutation> blocks;
            for (std::size_t i = 0; i < k; ++i) {
              const auto& r = choices[i][pick[i]];
              acted[i] = {gs[i].arity, o.act(gs[i].arity, gs[i].id, r)};
              blocks.push_back(r);
            }
            const Op left = o.compose(fo, acted);
            const ElementId right = o.act(total, o.compose(fo, gs).id, block_sum(blocks));
            if (left.id != right) {
              std::string ps;
              for (const auto& b : blocks) ps += " " + render_perm(b);
              report.fail("equivariance-bottom", o.describe(fo) + op_list(o, gs) + ps);
            }
          });
          std::size_t pos = k;
          while (pos > 0 && ++pick[pos - 1] == choices[pos - 1].size()) pick[--pos] = 0;
          if (pos == 0) break;
        }
        return true;
      });
    }
    report.count("equivariance", std::min(cases, budget), complete);
  }
  return report;
}

// OperadTheory

OperadTheory::OperadTheory(std::shared_ptr<const SymOperadTruncation> operad, std::size_t N)
    : operad_(std::move(operad)), N_(N), offsets_(N + 1), orbit_of_(N + 1), reps_(N + 1) {
  if (N == 0) throw InputError("theory truncation bound must be at least 1");
  const auto& o = *operad_;
  const std::size_t K = o.bound();
  for (std::size_t n = 0; n <= N; ++n) {
    auto& off = offsets_[n];
    off.assign(K + 2, 0);
    for (std::size_t k = 0; k <= K; ++k) off[k + 1] = off[k] + o.size(k) * power(n, k);
    const std::size_t total = off[K + 1];
    std::vector<std::size_t> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
      a = find(a);
      b = find(b);
      if (a != b) (a < b ? parent[b] = a : parent[a] = b);
    };
    for (std::size_t k = 2; k <= K; ++k) {
      std::vector<Permutation> swaps;
      for (std::size_t p = 0; p + 1 < k; ++p) {
        std::vector<std::size_t> v(k);
        std::iota(v.begin(), v.end(), 0);
        std::swap(v[p], v[p + 1]);
        swaps.emplace_back(k, k, std::move(v));
      }
      for (ElementId x = 0; x < o.size(k); ++x)
        for (const auto& tau : swaps) {
          const ElementId xt = o.act(k, x, tau);
          for_each_map(k, n, [&](const FinMap& t) {
            unite(index(n, {k, xt}, t), index(n, {k, x}, catcom::compose(t, tau)));
          });
        }
    }
    auto& orbit = orbit_of_[n];
    orbit.assign(total, 0);
    std::vector<ElementId> id_of_root(total, ElementId(-1));
    for (std::size_t k = 0; k <= K; ++k)
      for (ElementId x = 0; x < o.size(k); ++x)
        for_each_map(k, n, [&](const FinMap& t) {
          const std::size_t i = index(n, {k, x}, t);
          const std::size_t r = find(i);
          if (id_of_root[r] == ElementId(-1)) {
            id_of_root[r] = static_cast<ElementId>(reps_[n].size());
            reps_[n].push_back({{k, x}, t});
          }
          orbit[i] = id_of_root[r];
        });
  }
}

std::size_t OperadTheory::index(std::size_t n, Op x, const FinMap& t) const {
  std::size_t code = 0;
  for (std::size_t p = 0; p < t.domain(); ++p) code = code * n + t(p);
  return offsets_[n][x.arity] + x.id * power(n, x.arity) + code;
}

ElementId OperadTheory::orbit(Op x, const FinMap& t) const {
  if (x.arity > operad_->bound()) throw BoundError("operad element beyond truncation", x.arity);
  if (t.codomain() > N_) throw BoundError("theory arity beyond truncation", t.codomain());
  if (t.domain() != x.arity) throw InputError("label map does not match element arity");
  return orbit_of_[t.codomain()][index(t.codomain(), x, t)];
}

Op OperadTheory::image(Op x) const {
  return {x.arity, orbit(x, FinMap::identity(x.arity))};
}

ElementId OperadTheory::act(const FinMap& u, ElementId f) const {
  if (u.domain() > N_ || u.codomain() > N_) throw BoundError("renaming beyond truncation", std::max(u.domain(), u.codomain()));
  const auto& rep = reps_[u.domain()].at(f);
  return orbit(rep.element, catcom::compose(u, rep.labels));
}

ElementId OperadTheory::projection(std::size_t arity, std::size_t index) const {
  if (arity > N_) throw BoundError("arity beyond truncation", arity);
  if (index >= arity) throw InputError("projection index out of range");
  if (operad_->size(1) == 0) throw ClosureError("operad has no unit");
  return orbit({1, operad_->unit()}, FinMap(1, arity, {index}));
}

ElementId OperadTheory::substitute(std::size_t n, ElementId f, std::size_t m,
                                   std::span<const ElementId> gs) const {
  if (n > N_ || m > N_) throw BoundError("arity beyond truncation", std::max(n, m));
  if (gs.size() != n) throw InputError("substitution needs one argument per input");
  const auto& rep = reps_[n].at(f);
  const std::size_t k = rep.element.arity;
  std::vector<Op> args(k);
  std::vector<std::size_t> labels;
  for (std::size_t p = 0; p < k; ++p) {
    const auto& g = reps_[m].at(gs[rep.labels(p)]);
    args[p] = g.element;
    labels.insert(labels.end(), g.labels.values().begin(), g.labels.values().end());
  }
  const Op z = operad_->compose(rep.element, args);
  return orbit(z, FinMap(z.arity, m, std::move(labels)));
}

std::string OperadTheory::describe(Op f) const {
  const auto& rep = reps_.at(f.arity).at(f.id);
  std::string s = operad_->describe(rep.element) + "(";
  for (std::size_t p = 0; p < rep.labels.domain(); ++p)
    s += (p ? "," : "") + std::string("x") + std::to_string(rep.labels(p) + 1);
  return s + ")";
}

std::shared_ptr<const OperadTheory> theory_of_operad(
    std::shared_ptr<const SymOperadTruncation> operad, std::size_t N) {
  return std::make_shared<const OperadTheory>(std::move(operad), N);
}

// File format

std::shared_ptr<TabulatedOperad> parse_operad(std::string_view text) {
  detail::TokenStream ts(text);
  ts.expect("operad");
  auto name = ts.expect_identifier("operad name");
  ts.expect("{");
  ts.expect("bound");
  const auto K = ts.expect_number("bound");
  ts.expect(";");
  auto o = std::make_shared<TabulatedOperad>(name, K);
  auto element = [&]() -> Op {
    const auto tok = ts.peek();
    auto id = ts.expect_identifier("operad element");
    auto op = o->find(id);
    if (!op) ts.fail_at(tok, "unknown operad element '" + id + "'");
    return *op;
  };
  while (!ts.accept("}")) {
    const auto tok = ts.peek();
    if (ts.accept("arity")) {
      const auto ntok = ts.peek();
      const auto n = ts.expect_number("arity");
      if (n > K) ts.fail_at(ntok, "arity exceeds bound");
      ts.expect(":");
      if (!ts.accept(";")) {
        do {
          const auto etok = ts.peek();
          auto id = ts.expect_identifier("operad element");
          if (o->find(id)) ts.fail_at(etok, "duplicate operad element '" + id + "'");
          o->add_element(n, id);
        } while (ts.accept(","));
        ts.expect(";");
      }
    } else if (ts.accept("unit")) {
      const auto utok = ts.peek();
      const Op u = element();
      if (u.arity != 1) ts.fail_at(utok, "unit must have arity 1");
      o->set_unit(u.id);
      ts.expect(";");
    } else if (ts.accept("act")) {
      const Op x = element();
      ts.expect(".");
      ts.expect("(");
      const auto ptok = ts.peek();
      std::vector<std::size_t> values;
      if (!ts.accept(")")) {
        do {
          const auto v = ts.expect_number("permutation entry");
          if (v == 0) ts.fail_at(ptok, "permutation entries are 1-based");
          values.push_back(v - 1);
        } while (ts.accept(","));
        ts.expect(")");
      }
      ts.expect("=");
      const auto vtok = ts.peek();
      const Op y = element();
      ts.expect(";");
      if (values.size() != x.arity || y.arity != x.arity) ts.fail_at(ptok, "permutation size does not match arity");
      for (auto v : values)
        if (v >= x.arity) ts.fail_at(ptok, "permutation entry out of range");
      Permutation rho(x.arity, x.arity, values);
      if (!rho.is_bijective()) ts.fail_at(ptok, "not a permutation");
      (void)vtok;
      o->set_action(x.arity, x.id, rho, y.id);
    } else if (ts.accept("comp")) {
      const auto ftok = ts.peek();
      const Op f = element();
      ts.expect("(");
      std::vector<Op> gs;
      if (!ts.accept(")")) {
        do gs.push_back(element());
        while (ts.accept(","));
        ts.expect(")");
      }
      ts.expect("=");
      const auto htok = ts.peek();
      const Op h = element();
      ts.expect(";");
      if (gs.size() != f.arity) ts.fail_at(ftok, "wrong number of arguments");
      if (h.arity != total_arity(gs)) ts.fail_at(htok, "result arity does not match");
      o->set_composition(f, gs, h.id);
    } else {
      ts.fail_at(tok, "expected 'arity', 'unit', 'act', 'comp' or '}'");
    }
  }
  if (!ts.at_end()) ts.fail("trailing input after operad");
  return o;
}

std::string render_operad(const SymOperadTruncation& o) {
  const std::size_t K = o.bound();
  std::string out = "operad " + o.name() + " {\n  bound " + std::to_string(K) + ";\n";
  for (std::size_t n = 0; n <= K; ++n) {
    if (o.size(n) == 0) continue;
    out += "  arity " + std::to_string(n) + ":";
    for (ElementId x = 0; x < o.size(n); ++x) out += (x ? ", " : " ") + o.describe({n, x});
    out += ";\n";
  }
  if (o.size(1) > 0) out += "  unit " + o.describe({1, o.unit()}) + ";\n";
  for (std::size_t n = 2; n <= K; ++n)
    for (const auto& rho : all_permutations(n)) {
      if (rho.is_identity()) continue;
      for (ElementId x = 0; x < o.size(n); ++x)
        out += "  act " + o.describe({n, x}) + " . " + render_perm(rho) + " = " +
               o.describe({n, o.act(n, x, rho)}) + ";\n";
    }
  for (std::size_t k = 0; k <= K; ++k)
    for (ElementId f = 0; f < o.size(k); ++f)
      for_each_arguments(o, k, K, [&](std::span<const Op> gs) {
        std::string args;
        for (std::size_t i = 0; i < gs.size(); ++i) args += (i ? "," : "") + o.describe(gs[i]);
        out += "  comp " + o.describe({k, f}) + "(" + args + ") = " +
               o.describe(o.compose({k, f}, gs)) + ";\n";
        return true;
      });
  return out + "}\n";
}

}  // namespace catcom
