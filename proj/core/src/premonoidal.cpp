#include "catcom/premonoidal.hpp"

#include <algorithm>
#include <limits>

#include "catcom/error.hpp"
#include "category_builder.hpp"

namespace catcom {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

}  // namespace

PremonoidalData::PremonoidalData(FiniteCategory base, ObjectId unit, std::vector<ObjectId> tensor,
                                 std::vector<ArrowId> ltensor, std::vector<ArrowId> rtensor,
                                 std::vector<ArrowId> lambda, std::vector<ArrowId> rho,
                                 std::vector<ArrowId> assoc)
    : base_(std::move(base)),
      unit_(unit),
      tensor_(std::move(tensor)),
      ltensor_(std::move(ltensor)),
      rtensor_(std::move(rtensor)),
      lambda_(std::move(lambda)),
      rho_(std::move(rho)),
      assoc_(std::move(assoc)) {
  const std::size_t n = base_.object_count(), m = base_.arrow_count();
  if (unit_ >= n && n > 0) throw InputError("unit object out of range");
  if (tensor_.size() != n * n || ltensor_.size() != n * m || rtensor_.size() != m * n ||
      lambda_.size() != n || rho_.size() != n || assoc_.size() != n * n * n)
    throw InputError("premonoidal tables have the wrong shape");
}

std::optional<CentralityWitness> centrality_witness(const PremonoidalData& p, ArrowId f) {
  const auto& c = p.base();
  const ObjectId a = c.source(f), a2 = c.target(f);
  for (ArrowId g = 0; g < c.arrow_count(); ++g) {
    const ObjectId b = c.source(g), b2 = c.target(g);
    if (c.compose(p.ltensor(a2, g), p.rtensor(f, b)) != c.compose(p.rtensor(f, b2), p.ltensor(a, g)))
      return CentralityWitness{f, g, 1};
    if (c.compose(p.rtensor(g, a2), p.ltensor(b, f)) != c.compose(p.ltensor(b2, f), p.rtensor(g, a)))
      return CentralityWitness{f, g, 2};
  }
  return std::nullopt;
}

bool is_central(const PremonoidalData& p, ArrowId f) { return !centrality_witness(p, f); }

std::vector<ArrowId> central_arrows(const PremonoidalData& p) {
  std::vector<ArrowId> out;
  for (ArrowId f = 0; f < p.base().arrow_count(); ++f)
    if (is_central(p, f)) out.push_back(f);
  return out;
}

LawReport premonoidal_validate(const PremonoidalData& p) {
  LawReport r;
  const auto& c = p.base();
  const std::size_t n = c.object_count(), m = c.arrow_count();
  auto on = [&](ObjectId a) { return c.objects()[a]; };
  auto an = [&](ArrowId f) { return c.arrow(f).name; };
  auto typed = [&](ArrowId f, ObjectId s, ObjectId t) { return f < m && c.source(f) == s && c.target(f) == t; };

  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b)
      if (p.tensor(a, b) >= n) r.fail("typing", "tensor " + on(a) + "," + on(b));
  if (!r.ok()) return r;
  for (ObjectId u = 0; u < n; ++u)
    for (ArrowId f = 0; f < m; ++f) {
      if (!typed(p.ltensor(u, f), p.tensor(u, c.source(f)), p.tensor(u, c.target(f))))
        r.fail("typing", "ltensor " + on(u) + "," + an(f));
      if (!typed(p.rtensor(f, u), p.tensor(c.source(f), u), p.tensor(c.target(f), u)))
        r.fail("typing", "rtensor " + an(f) + "," + on(u));
    }
  const ObjectId i = p.unit();
  for (ObjectId a = 0; a < n; ++a) {
    if (!typed(p.lambda(a), p.tensor(i, a), a)) r.fail("typing", "lambda " + on(a));
    if (!typed(p.rho(a), p.tensor(a, i), a)) r.fail("typing", "rho " + on(a));
    for (ObjectId b = 0; b < n; ++b)
      for (ObjectId d = 0; d < n; ++d)
        if (!typed(p.assoc(a, b, d), p.tensor(p.tensor(a, b), d), p.tensor(a, p.tensor(b, d))))
          r.fail("typing", "assoc " + on(a) + "," + on(b) + "," + on(d));
  }
  r.count("typing", n * m, true);
  if (!r.ok()) return r;

  for (ObjectId u = 0; u < n; ++u) {
    for (ObjectId b = 0; b < n; ++b) {
      if (p.ltensor(u, c.identity(b)) != c.identity(p.tensor(u, b)))
        r.fail("functoriality", on(u) + " (x) id_" + on(b));
      if (p.rtensor(c.identity(b), u) != c.identity(p.tensor(b, u)))
        r.fail("functoriality", "id_" + on(b) + " (x) " + on(u));
    }
    for (ArrowId g = 0; g < m; ++g)
      for (ArrowId f = 0; f < m; ++f) {
        if (c.target(f) != c.source(g)) continue;
        const ArrowId gf = c.compose(g, f);
        if (p.ltensor(u, gf) != c.compose(p.ltensor(u, g), p.ltensor(u, f)))
          r.fail("functoriality", on(u) + " (x) " + an(g) + "." + an(f));
        if (p.rtensor(gf, u) != c.compose(p.rtensor(g, u), p.rtensor(f, u)))
          r.fail("functoriality", an(g) + "." + an(f) + " (x) " + on(u));
      }
  }
  auto invertible = [&](ArrowId f) {
    for (ArrowId g : c.hom(c.target(f), c.source(f)))
      if (c.is_identity(c.compose(g, f)) && c.is_identity(c.compose(f, g))) return true;
    return false;
  };
  std::vector<ArrowId> constraints;
  for (ObjectId a = 0; a < n; ++a) {
    constraints.push_back(p.lambda(a));
    constraints.push_back(p.rho(a));
    for (ObjectId b = 0; b < n; ++b)
      for (ObjectId d = 0; d < n; ++d) constraints.push_back(p.assoc(a, b, d));
  }
  for (ArrowId f : constraints)
    if (!invertible(f)) r.fail("invertibility", an(f));

  for (ArrowId f = 0; f < m; ++f) {
    const ObjectId a = c.source(f), a2 = c.target(f);
    if (c.compose(p.lambda(a2), p.ltensor(i, f)) != c.compose(f, p.lambda(a))) r.fail("lambda-naturality", an(f));
    if (c.compose(p.rho(a2), p.rtensor(f, i)) != c.compose(f, p.rho(a))) r.fail("rho-naturality", an(f));
    for (ObjectId b = 0; b < n; ++b)
      for (ObjectId d = 0; d < n; ++d) {
        if (c.compose(p.assoc(a2, b, d), p.rtensor(p.rtensor(f, b), d)) !=
            c.compose(p.rtensor(f, p.tensor(b, d)), p.assoc(a, b, d)))
          r.fail("alpha-naturality", an(f) + "," + on(b) + "," + on(d));
        if (c.compose(p.assoc(b, a2, d), p.rtensor(p.ltensor(b, f), d)) !=
            c.compose(p.ltensor(b, p.rtensor(f, d)), p.assoc(b, a, d)))
          r.fail("alpha-naturality", on(b) + "," + an(f) + "," + on(d));
        if (c.compose(p.assoc(b, d, a2), p.ltensor(p.tensor(b, d), f)) !=
            c.compose(p.ltensor(b, p.ltensor(d, f)), p.assoc(b, d, a)))
          r.fail("alpha-naturality", on(b) + "," + on(d) + "," + an(f));
      }
  }
  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b) {
      if (c.compose(p.ltensor(a, p.lambda(b)), p.assoc(a, i, b)) != p.rtensor(p.rho(a), b))
        r.fail("triangle", on(a) + "," + on(b));
      for (ObjectId d = 0; d < n; ++d)
        for (ObjectId e = 0; e < n; ++e) {
          const ArrowId lhs = c.compose(p.assoc(a, b, p.tensor(d, e)), p.assoc(p.tensor(a, b), d, e));
          const ArrowId rhs = c.compose(p.ltensor(a, p.assoc(b, d, e)),
                                        c.compose(p.assoc(a, p.tensor(b, d), e), p.rtensor(p.assoc(a, b, d), e)));
          if (lhs != rhs) r.fail("pentagon", on(a) + "," + on(b) + "," + on(d) + "," + on(e));
        }
    }
  for (ArrowId f : constraints)
    if (auto w = centrality_witness(p, f))
      r.fail("central-constraints", an(f) + " against " + an(w->g) + " (square " + std::to_string(w->square) + ")");
  r.count("laws", n * n * n * n + m * n * n, true);
  return r;
}

PremonoidalCentre premonoidal_centre(const PremonoidalData& p) {
  const auto report = premonoidal_validate(p);
  if (!report.ok())
    throw InputError("premonoidal data fails " + report.failures()[0].law + ": " + report.failures()[0].witness);
  const auto& c = p.base();
  const std::size_t n = c.object_count();
  const auto central = central_arrows(p);
  std::vector<ArrowId> to_new(c.arrow_count(), kNone);
  for (std::size_t i = 0; i < central.size(); ++i) to_new[central[i]] = ArrowId(i);
  auto mapped = [&](ArrowId f) {
    if (to_new[f] == kNone) throw InputError("centre is not closed: " + c.arrow(f).name + " is not central");
    return to_new[f];
  };
  std::vector<Arrow> arrows;
  for (ArrowId f : central) arrows.push_back(c.arrow(f));
  std::vector<ArrowId> ids;
  for (ObjectId a = 0; a < n; ++a) ids.push_back(mapped(c.identity(a)));
  std::vector<ArrowId> comp(central.size() * central.size(), kNone);
  for (std::size_t g = 0; g < central.size(); ++g)
    for (std::size_t f = 0; f < central.size(); ++f)
      if (c.target(central[f]) == c.source(central[g]))
        comp[g * central.size() + f] = mapped(c.compose(central[g], central[f]));
  FiniteCategory z(c.name() + "_centre", c.objects(), std::move(arrows), std::move(ids), std::move(comp));
  std::vector<ObjectId> tensor(n * n);
  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b) tensor[a * n + b] = p.tensor(a, b);
  std::vector<ArrowId> lt(n * central.size()), rt(central.size() * n), lambda(n), rho(n), assoc(n * n * n);
  for (ObjectId u = 0; u < n; ++u)
    for (std::size_t f = 0; f < central.size(); ++f) {
      lt[u * central.size() + f] = mapped(p.ltensor(u, central[f]));
      rt[f * n + u] = mapped(p.rtensor(central[f], u));
    }
  for (ObjectId a = 0; a < n; ++a) {
    lambda[a] = mapped(p.lambda(a));
    rho[a] = mapped(p.rho(a));
    for (ObjectId b = 0; b < n; ++b)
      for (ObjectId d = 0; d < n; ++d) assoc[(a * n + b) * n + d] = mapped(p.assoc(a, b, d));
  }
  Functor inclusion;
  for (ObjectId a = 0; a < n; ++a) inclusion.objects.push_back(a);
  inclusion.arrows = central;
  return {PremonoidalData(std::move(z), p.unit(), std::move(tensor), std::move(lt), std::move(rt),
                          std::move(lambda), std::move(rho), std::move(assoc)),
          std::move(inclusion)};
}

LawReport freyd_validate(const PremonoidalData& a, const PremonoidalData& m, const Functor& f) {
  const auto& A = a.base();
  const auto& M = m.base();
  if (f.objects.size() != A.object_count() || A.object_count() != M.object_count())
    throw InputError("functor is not bijective on objects");
  {
    std::vector<bool> hit(M.object_count(), false);
    for (ObjectId x : f.objects) {
      if (x >= M.object_count() || hit[x]) throw InputError("functor is not bijective on objects");
      hit[x] = true;
    }
  }
  LawReport r;
  const auto source = premonoidal_validate(a);
  for (const auto& fail : source.failures()) r.fail("source-monoidal", fail.law + ": " + fail.witness);
  for (ArrowId u = 0; u < A.arrow_count(); ++u)
    if (!is_central(a, u)) r.fail("source-monoidal", A.arrow(u).name + " is not central");
  if (!is_functor(A, M, f)) {
    r.fail("functor", "tables do not define a functor");
    return r;
  }
  const std::size_t n = A.object_count();
  const auto& F = f.objects;
  if (F[a.unit()] != m.unit()) r.fail("unit", A.objects()[a.unit()]);
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      if (F[a.tensor(x, y)] != m.tensor(F[x], F[y])) r.fail("tensor", A.objects()[x] + "," + A.objects()[y]);
      for (ObjectId z = 0; z < n; ++z)
        if (f.arrows[a.assoc(x, y, z)] != m.assoc(F[x], F[y], F[z]))
          r.fail("constraints", "assoc " + A.objects()[x] + "," + A.objects()[y] + "," + A.objects()[z]);
    }
    if (f.arrows[a.lambda(x)] != m.lambda(F[x])) r.fail("constraints", "lambda " + A.objects()[x]);
    if (f.arrows[a.rho(x)] != m.rho(F[x])) r.fail("constraints", "rho " + A.objects()[x]);
    for (ArrowId u = 0; u < A.arrow_count(); ++u) {
      if (f.arrows[a.ltensor(x, u)] != m.ltensor(F[x], f.arrows[u]))
        r.fail("tensor", A.objects()[x] + " (x) " + A.arrow(u).name);
      if (f.arrows[a.rtensor(u, x)] != m.rtensor(f.arrows[u], F[x]))
        r.fail("tensor", A.arrow(u).name + " (x) " + A.objects()[x]);
    }
  }
  for (ArrowId u = 0; u < A.arrow_count(); ++u)
    if (auto w = centrality_witness(m, f.arrows[u]))
      r.fail("centrality", A.arrow(u).name + " |-> " + M.arrow(f.arrows[u]).name + " fails against " +
                               M.arrow(w->g).name + " (square " + std::to_string(w->square) + ")");
  r.count("freyd", A.arrow_count() * n, true);
  return r;
}

CospanSquareVerdict freyd_cospan_commutes(const PremonoidalData& m, const std::vector<ArrowId>& xs,
                                          const std::vector<ArrowId>& ys) {
  const auto& c = m.base();
  for (ArrowId x : xs)
    for (ArrowId y : ys) {
      const ObjectId a = c.source(x), b = c.target(x), s = c.source(y), d = c.target(y);
      if (c.compose(m.ltensor(b, y), m.rtensor(x, s)) != c.compose(m.rtensor(x, d), m.ltensor(a, y)))
        return {false, std::pair{x, y}};
    }
  return {};
}

FiniteMonoid left_zero_band() { return FiniteMonoid(3, {0, 1, 2, 1, 1, 1, 2, 2, 2}, 0, "lzb"); }

PremonoidalData codiscrete_monoid_premonoidal(const FiniteMonoid& mon) {
  FiniteCategory base = product_category(codiscrete_category(2), monoid_category(mon));
  const std::size_t k = mon.size(), m = base.arrow_count();
  auto arrow = [&](ObjectId s, ObjectId t, std::size_t x) { return ArrowId((s * 2 + t) * k + x); };
  auto parts = [&](ArrowId f) { return std::tuple{ObjectId(f / k / 2), ObjectId(f / k % 2), std::size_t(f % k)}; };
  std::vector<ObjectId> tensor{0, 1, 1, 0};
  std::vector<ArrowId> lt(2 * m), rt(m * 2), lambda(2), rho(2), assoc(8);
  for (ObjectId u = 0; u < 2; ++u)
    for (ArrowId f = 0; f < m; ++f) {
      auto [s, t, x] = parts(f);
      lt[u * m + f] = arrow(u ^ s, u ^ t, x);
      rt[f * 2 + u] = arrow(s ^ u, t ^ u, x);
    }
  const std::size_t e = std::size_t(mon.unit());
  for (ObjectId a = 0; a < 2; ++a) {
    lambda[a] = rho[a] = arrow(a, a, e);
    for (ObjectId b = 0; b < 2; ++b)
      for (ObjectId d = 0; d < 2; ++d) assoc[(a * 2 + b) * 2 + d] = arrow(a ^ b ^ d, a ^ b ^ d, e);
  }
  return PremonoidalData(std::move(base), 0, std::move(tensor), std::move(lt), std::move(rt), std::move(lambda),
                         std::move(rho), std::move(assoc));
}

PremonoidalData parse_premonoidal(std::string_view text) {
  detail::TokenStream ts(text);
  ts.expect("premonoidal");
  detail::CategoryBuilder builder(ts.expect_identifier("premonoidal name"));
  ts.expect("{");
  struct Item {
    detail::Token token;
    std::string kind;
    std::vector<std::string> args;
  };
  std::vector<Item> items;
  auto read = [&](const detail::Token& tok, const char* kind, std::size_t before_eq) {
    Item it{tok, kind, {}};
    for (std::size_t i = 0; i < before_eq; ++i) {
      if (i) ts.expect(",");
      it.args.push_back(ts.expect_identifier());
    }
    if (std::string_view(kind) != "unit") {
      ts.expect("=");
      it.args.push_back(ts.expect_identifier());
    }
    ts.expect(";");
    items.push_back(std::move(it));
  };
  while (true) {
    const auto tok = ts.peek();
    if (ts.accept("}")) {
      if (!ts.at_end()) ts.fail("trailing input after premonoidal");
      FiniteCategory c = builder.build(ts, tok);
      const std::size_t n = c.object_count(), m = c.arrow_count();
      auto object = [&](const Item& it, std::size_t i) {
        auto a = c.find_object(it.args[i]);
        if (!a) ts.fail_at(it.token, "unknown object '" + it.args[i] + "'");
        return *a;
      };
      auto arrow = [&](const Item& it, std::size_t i) {
        auto f = c.find_arrow(it.args[i]);
        if (!f) ts.fail_at(it.token, "unknown arrow '" + it.args[i] + "'");
        return *f;
      };
      std::optional<ObjectId> unit;
      std::vector<ObjectId> tensor(n * n, kNone);
      std::vector<ArrowId> lt(n * m, kNone), rt(m * n, kNone), lambda(n, kNone), rho(n, kNone),
          assoc(n * n * n, kNone);
      for (const auto& it : items) {
        if (it.kind == "unit") unit = object(it, 0);
        else if (it.kind == "tensor") tensor[object(it, 0) * n + object(it, 1)] = object(it, 2);
        else if (it.kind == "ltensor") lt[object(it, 0) * m + arrow(it, 1)] = arrow(it, 2);
        else if (it.kind == "rtensor") rt[arrow(it, 0) * n + object(it, 1)] = arrow(it, 2);
        else if (it.kind == "lambda") lambda[object(it, 0)] = arrow(it, 1);
        else if (it.kind == "rho") rho[object(it, 0)] = arrow(it, 1);
        else assoc[(object(it, 0) * n + object(it, 1)) * n + object(it, 2)] = arrow(it, 3);
      }
      if (!unit) ts.fail_at(tok, "missing unit object");
      auto missing = [&](const std::string& what) { ts.fail_at(tok, "missing " + what); };
      for (ObjectId a = 0; a < n; ++a)
        for (ObjectId b = 0; b < n; ++b)
          if (tensor[a * n + b] == kNone) missing("tensor " + c.objects()[a] + "," + c.objects()[b]);
      auto t = [&](ObjectId a, ObjectId b) { return tensor[a * n + b]; };
      for (ObjectId u = 0; u < n; ++u)
        for (ArrowId f = 0; f < m; ++f) {
          if (c.is_identity(f)) {
            if (lt[u * m + f] == kNone) lt[u * m + f] = c.identity(t(u, c.source(f)));
            if (rt[f * n + u] == kNone) rt[f * n + u] = c.identity(t(c.source(f), u));
          }
          if (lt[u * m + f] == kNone) missing("ltensor " + c.objects()[u] + "," + c.arrow(f).name);
          if (rt[f * n + u] == kNone) missing("rtensor " + c.arrow(f).name + "," + c.objects()[u]);
        }
      auto fill = [&](ArrowId& slot, ObjectId s, ObjectId d, const std::string& what) {
        if (slot != kNone) return;
        if (s != d) missing(what);
        slot = c.identity(s);
      };
      for (ObjectId a = 0; a < n; ++a) {
        fill(lambda[a], t(*unit, a), a, "lambda " + c.objects()[a]);
        fill(rho[a], t(a, *unit), a, "rho " + c.objects()[a]);
        for (ObjectId b = 0; b < n; ++b)
          for (ObjectId d = 0; d < n; ++d)
            fill(assoc[(a * n + b) * n + d], t(t(a, b), d), t(a, t(b, d)),
                 "assoc " + c.objects()[a] + "," + c.objects()[b] + "," + c.objects()[d]);
      }
      return PremonoidalData(std::move(c), *unit, std::move(tensor), std::move(lt), std::move(rt),
                             std::move(lambda), std::move(rho), std::move(assoc));
    }
    if (builder.accept_item(ts)) continue;
    if (ts.accept("unit")) read(tok, "unit", 1);
    else if (ts.accept("tensor")) read(tok, "tensor", 2);
    else if (ts.accept("ltensor")) read(tok, "ltensor", 2);
    else if (ts.accept("rtensor")) read(tok, "rtensor", 2);
    else if (ts.accept("lambda")) read(tok, "lambda", 1);
    else if (ts.accept("rho")) read(tok, "rho", 1);
    else if (ts.accept("assoc")) read(tok, "assoc", 3);
    else ts.fail_at(tok, "expected a category item, a tensor item or '}'");
  }
}

std::string render_premonoidal(const PremonoidalData& p) {
  const auto& c = p.base();
  const std::size_t n = c.object_count(), m = c.arrow_count();
  std::string cat = render_category(c);
  std::string out = "premonoidal " + c.name() + " {\n" + cat.substr(cat.find('\n') + 1, cat.size() - cat.find('\n') - 3);
  auto on = [&](ObjectId a) { return c.objects()[a]; };
  auto an = [&](ArrowId f) { return c.arrow(f).name; };
  if (n > 0) out += "  unit " + on(p.unit()) + ";\n";
  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b) out += "  tensor " + on(a) + ", " + on(b) + " = " + on(p.tensor(a, b)) + ";\n";
  for (ObjectId u = 0; u < n; ++u)
    for (ArrowId f = 0; f < m; ++f)
      if (!c.is_identity(f) || !c.is_identity(p.ltensor(u, f)))
        out += "  ltensor " + on(u) + ", " + an(f) + " = " + an(p.ltensor(u, f)) + ";\n";
  for (ArrowId f = 0; f < m; ++f)
    for (ObjectId v = 0; v < n; ++v)
      if (!c.is_identity(f) || !c.is_identity(p.rtensor(f, v)))
        out += "  rtensor " + an(f) + ", " + on(v) + " = " + an(p.rtensor(f, v)) + ";\n";
  for (ObjectId a = 0; a < n; ++a) {
    if (!c.is_identity(p.lambda(a))) out += "  lambda " + on(a) + " = " + an(p.lambda(a)) + ";\n";
    if (!c.is_identity(p.rho(a))) out += "  rho " + on(a) + " = " + an(p.rho(a)) + ";\n";
  }
  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b)
      for (ObjectId d = 0; d < n; ++d)
        if (!c.is_identity(p.assoc(a, b, d)))
          out += "  assoc " + on(a) + ", " + on(b) + ", " + on(d) + " = " + an(p.assoc(a, b, d)) + ";\n";
  return out + "}\n";
}

}  // namespace catcom
