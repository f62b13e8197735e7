#include "catcom/category.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "catcom/error.hpp"
#include "category_builder.hpp"

namespace catcom {

namespace {

constexpr ArrowId kNone = std::numeric_limits<ArrowId>::max();

std::string first_failure(const LawReport& r) {
  return r.failures().front().law + ": " + r.failures().front().witness;
}

}  // namespace

LawReport validate_category_tables(const std::vector<Arrow>& arrows,
                                   const std::vector<ArrowId>& identities,
                                   const std::vector<ArrowId>& comp) {
  LawReport report;
  const std::size_t n = arrows.size();
  auto name = [&](ArrowId f) { return arrows[f].name; };
  if (comp.size() != n * n) {
    report.fail("typing", "composition table has " + std::to_string(comp.size()) + " entries");
    return report;
  }
  for (std::size_t a = 0; a < identities.size(); ++a) {
    const ArrowId i = identities[a];
    if (i >= n || arrows[i].source != a || arrows[i].target != a)
      report.fail("typing", "identity of object " + std::to_string(a));
  }
  for (const auto& f : arrows)
    if (f.source >= identities.size() || f.target >= identities.size())
      report.fail("typing", "arrow " + f.name + " has an unknown endpoint");
  if (!report.ok()) return report;
  auto at = [&](ArrowId g, ArrowId f) { return comp[std::size_t(g) * n + f]; };
  std::size_t cases = 0;
  for (ArrowId g = 0; g < n; ++g)
    for (ArrowId f = 0; f < n; ++f) {
      if (arrows[f].target != arrows[g].source) continue;
      ++cases;
      const ArrowId h = at(g, f);
      if (h >= n) {
        report.fail("typing", "missing composite " + name(g) + "." + name(f));
        continue;
      }
      if (arrows[h].source != arrows[f].source || arrows[h].target != arrows[g].target)
        report.fail("typing", name(g) + "." + name(f) + " = " + name(h));
    }
  report.count("typing", cases, true);
  if (!report.ok()) return report;
  for (ArrowId f = 0; f < n; ++f) {
    if (at(identities[arrows[f].target], f) != f) report.fail("identity", "id." + name(f));
    if (at(f, identities[arrows[f].source]) != f) report.fail("identity", name(f) + ".id");
  }
  report.count("identity", n, true);
  cases = 0;
  for (ArrowId h = 0; h < n; ++h)
    for (ArrowId g = 0; g < n; ++g) {
      if (arrows[g].target != arrows[h].source) continue;
      for (ArrowId f = 0; f < n; ++f) {
        if (arrows[f].target != arrows[g].source) continue;
        ++cases;
        if (at(at(h, g), f) != at(h, at(g, f)))
          report.fail("associativity", name(h) + "." + name(g) + "." + name(f));
      }
    }
  report.count("associativity", cases, true);
  return report;
}

FiniteCategory::FiniteCategory(std::string name, std::vector<std::string> objects,
                               std::vector<Arrow> arrows, std::vector<ArrowId> identities,
                               std::vector<ArrowId> comp)
    : name_(std::move(name)),
      objects_(std::move(objects)),
      arrows_(std::move(arrows)),
      identities_(std::move(identities)),
      comp_(std::move(comp)) {
  if (identities_.size() != objects_.size()) throw InputError("one identity per object required");
  const auto report = validate_category_tables(arrows_, identities_, comp_);
  if (!report.ok()) throw InputError("not a category: " + first_failure(report));
}

ArrowId FiniteCategory::compose(ArrowId g, ArrowId f) const {
  if (target(f) != source(g))
    throw InputError("arrows " + arrows_[g].name + " and " + arrows_[f].name + " are not composable");
  return comp_[std::size_t(g) * arrows_.size() + f];
}

std::vector<ArrowId> FiniteCategory::hom(ObjectId a, ObjectId b) const {
  std::vector<ArrowId> out;
  for (ArrowId f = 0; f < arrows_.size(); ++f)
    if (arrows_[f].source == a && arrows_[f].target == b) out.push_back(f);
  return out;
}

std::optional<ObjectId> FiniteCategory::find_object(std::string_view name) const {
  for (ObjectId a = 0; a < objects_.size(); ++a)
    if (objects_[a] == name) return a;
  return std::nullopt;
}

std::optional<ArrowId> FiniteCategory::find_arrow(std::string_view name) const {
  for (ArrowId f = 0; f < arrows_.size(); ++f)
    if (arrows_[f].name == name) return f;
  return std::nullopt;
}

std::vector<std::pair<ObjectId, ObjectId>> FiniteCategory::signature() const {
  std::vector<std::pair<ObjectId, ObjectId>> out;
  for (const auto& f : arrows_) out.emplace_back(f.source, f.target);
  return out;
}

// Builders

namespace {

// Category whose arrows a -> b are given by a list per pair, composed by fn.
template <class Compose>
FiniteCategory build_category(std::string name, std::vector<std::string> objects,
                              std::vector<Arrow> arrows, std::vector<ArrowId> identities,
                              Compose&& fn) {
  const std::size_t n = arrows.size();
  std::vector<ArrowId> comp(n * n, kNone);
  for (ArrowId g = 0; g < n; ++g)
    for (ArrowId f = 0; f < n; ++f)
      if (arrows[f].target == arrows[g].source) comp[std::size_t(g) * n + f] = fn(g, f);
  return FiniteCategory(std::move(name), std::move(objects), std::move(arrows), std::move(identities),
                        std::move(comp));
}

}  // namespace

FiniteCategory terminal_category() { return discrete_category(1); }

FiniteCategory walking_arrow() {
  std::vector<Arrow> arrows{{"id_a0", 0, 0}, {"id_a1", 1, 1}, {"f", 0, 1}};
  return build_category("arrow", {"a0", "a1"}, arrows, {0, 1},
                        [](ArrowId g, ArrowId f) { return g == 2 ? g : (f == 2 ? f : g); });
}

FiniteCategory discrete_category(std::size_t n) {
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<ArrowId> ids;
  for (std::size_t a = 0; a < n; ++a) {
    objects.push_back("o" + std::to_string(a));
    arrows.push_back({"id_o" + std::to_string(a), ObjectId(a), ObjectId(a)});
    ids.push_back(ArrowId(a));
  }
  return build_category("discrete" + std::to_string(n), objects, arrows, ids,
                        [](ArrowId g, ArrowId) { return g; });
}

FiniteCategory codiscrete_category(std::size_t n) {
  std::vector<std::string> objects;
  for (std::size_t a = 0; a < n; ++a) objects.push_back("o" + std::to_string(a));
  std::vector<Arrow> arrows;
  std::vector<ArrowId> ids(n);
  std::vector<ArrowId> between(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      between[a * n + b] = ArrowId(arrows.size());
      if (a == b) {
        ids[a] = ArrowId(arrows.size());
        arrows.push_back({"id_" + objects[a], ObjectId(a), ObjectId(a)});
      } else {
        arrows.push_back({"u" + std::to_string(a) + std::to_string(b), ObjectId(a), ObjectId(b)});
      }
    }
  return build_category("codiscrete" + std::to_string(n), objects, arrows, ids,
                        [&](ArrowId g, ArrowId f) {
                          return between[arrows[f].source * n + arrows[g].target];
                        });
}

FiniteCategory monoid_category(const FiniteMonoid& m) {
  std::vector<Arrow> arrows;
  for (std::size_t x = 0; x < m.size(); ++x)
    arrows.push_back({int(x) == m.unit() ? "id_star" : "m" + std::to_string(x), 0, 0});
  return build_category(m.name().empty() ? "monoid" : m.name(), {"star"}, arrows,
                        {ArrowId(m.unit())}, [&](ArrowId g, ArrowId f) { return ArrowId(m.mul(int(g), int(f))); });
}

FiniteCategory product_category(const FiniteCategory& a, const FiniteCategory& b) {
  const std::size_t nb = b.object_count(), mb = b.arrow_count();
  std::vector<std::string> objects;
  for (const auto& x : a.objects())
    for (const auto& y : b.objects()) objects.push_back(x + "_" + y);
  std::vector<Arrow> arrows;
  for (ArrowId f = 0; f < a.arrow_count(); ++f)
    for (ArrowId g = 0; g < mb; ++g) {
      const ObjectId s = ObjectId(a.source(f) * nb + b.source(g));
      const ObjectId t = ObjectId(a.target(f) * nb + b.target(g));
      const bool id = a.is_identity(f) && b.is_identity(g);
      arrows.push_back({id ? "id_" + objects[s] : a.arrow(f).name + "_" + b.arrow(g).name, s, t});
    }
  std::vector<ArrowId> ids;
  for (ObjectId x = 0; x < a.object_count(); ++x)
    for (ObjectId y = 0; y < nb; ++y) ids.push_back(ArrowId(a.identity(x) * mb + b.identity(y)));
  return build_category(a.name() + "_x_" + b.name(), objects, arrows, ids, [&](ArrowId g, ArrowId f) {
    return ArrowId(a.compose(g / mb, f / mb) * mb + b.compose(g % mb, f % mb));
  });
}

// Text format

namespace detail {

bool CategoryBuilder::accept_item(TokenStream& ts) {
  const auto tok = ts.peek();
  auto known_object = [&](const Token& t, const std::string& name) -> ObjectId {
    auto it = std::find(objects_.begin(), objects_.end(), name);
    if (it == objects_.end()) ts.fail_at(t, "unknown object '" + name + "'");
    return ObjectId(it - objects_.begin());
  };
  auto taken = [&](const std::string& name) {
    for (const auto& o : objects_)
      if (name == "id_" + o) return true;
    for (const auto& a : arrows_)
      if (a.name == name) return true;
    return false;
  };
  if (ts.accept("objects")) {
    do {
      const auto t = ts.peek();
      auto name = ts.expect_identifier("object name");
      if (std::find(objects_.begin(), objects_.end(), name) != objects_.end())
        ts.fail_at(t, "duplicate object '" + name + "'");
      objects_.push_back(std::move(name));
    } while (ts.accept(","));
    ts.expect(";");
    return true;
  }
  if (ts.accept("arrow")) {
    const auto t = ts.peek();
    auto name = ts.expect_identifier("arrow name");
    if (taken(name)) ts.fail_at(t, "arrow name '" + name + "' is taken");
    ts.expect(":");
    const auto st = ts.peek();
    const ObjectId s = known_object(st, ts.expect_identifier("object"));
    ts.expect("->");
    const auto tt = ts.peek();
    const ObjectId d = known_object(tt, ts.expect_identifier("object"));
    ts.expect(";");
    arrows_.push_back({std::move(name), s, d});
    return true;
  }
  if (ts.accept("comp")) {
    Comp c{tok, ts.expect_identifier("arrow"), {}, {}};
    ts.expect(".");
    c.f = ts.expect_identifier("arrow");
    ts.expect("=");
    c.h = ts.expect_identifier("arrow");
    ts.expect(";");
    comps_.push_back(std::move(c));
    return true;
  }
  return false;
}

FiniteCategory CategoryBuilder::build(const TokenStream& ts, const Token& at) const {
  std::vector<Arrow> arrows;
  std::vector<ArrowId> ids;
  for (ObjectId a = 0; a < objects_.size(); ++a) {
    ids.push_back(ArrowId(arrows.size()));
    arrows.push_back({"id_" + objects_[a], a, a});
  }
  arrows.insert(arrows.end(), arrows_.begin(), arrows_.end());
  const std::size_t n = arrows.size();
  auto find = [&](const Token& t, const std::string& name) -> ArrowId {
    for (ArrowId f = 0; f < n; ++f)
      if (arrows[f].name == name) return f;
    ts.fail_at(t, "unknown arrow '" + name + "'");
  };
  std::vector<ArrowId> comp(n * n, kNone);
  for (ArrowId g = 0; g < n; ++g)
    for (ArrowId f = 0; f < n; ++f) {
      if (arrows[f].target != arrows[g].source) continue;
      if (ids[arrows[g].source] == g) comp[g * n + f] = f;
      else if (ids[arrows[f].source] == f) comp[g * n + f] = g;
    }
  for (const auto& c : comps_) {
    const ArrowId g = find(c.token, c.g), f = find(c.token, c.f), h = find(c.token, c.h);
    if (arrows[f].target != arrows[g].source) ts.fail_at(c.token, c.g + "." + c.f + " is not composable");
    if (arrows[h].source != arrows[f].source || arrows[h].target != arrows[g].target)
      ts.fail_at(c.token, c.h + " does not have the type of " + c.g + "." + c.f);
    auto& slot = comp[g * n + f];
    if (slot != kNone && slot != h) ts.fail_at(c.token, "conflicting composite " + c.g + "." + c.f);
    slot = h;
  }
  const auto report = validate_category_tables(arrows, ids, comp);
  if (!report.ok()) ts.fail_at(at, "not a category: " + first_failure(report));
  return FiniteCategory(name_, objects_, std::move(arrows), std::move(ids), std::move(comp));
}

ObjectId expect_object(TokenStream& ts, const FiniteCategory& c) {
  const auto t = ts.peek();
  auto name = ts.expect_identifier("object");
  auto id = c.find_object(name);
  if (!id) ts.fail_at(t, "unknown object '" + name + "'");
  return *id;
}

ArrowId expect_arrow(TokenStream& ts, const FiniteCategory& c) {
  const auto t = ts.peek();
  auto name = ts.expect_identifier("arrow");
  auto id = c.find_arrow(name);
  if (!id) ts.fail_at(t, "unknown arrow '" + name + "'");
  return *id;
}

}  // namespace detail

FiniteCategory parse_category(std::string_view text) {
  detail::TokenStream ts(text);
  ts.expect("category");
  detail::CategoryBuilder builder(ts.expect_identifier("category name"));
  ts.expect("{");
  while (true) {
    const auto tok = ts.peek();
    if (ts.accept("}")) {
      auto c = builder.build(ts, tok);
      if (!ts.at_end()) ts.fail("trailing input after category");
      return c;
    }
    if (!builder.accept_item(ts)) ts.fail_at(tok, "expected 'objects', 'arrow', 'comp' or '}'");
  }
}

std::string render_category(const FiniteCategory& c) {
  std::string out = "category " + c.name() + " {\n";
  if (c.object_count() > 0) {
    out += "  objects ";
    for (std::size_t a = 0; a < c.object_count(); ++a) out += (a ? ", " : "") + c.objects()[a];
    out += ";\n";
  }
  for (ArrowId f = 0; f < c.arrow_count(); ++f)
    if (!c.is_identity(f))
      out += "  arrow " + c.arrow(f).name + " : " + c.objects()[c.source(f)] + " -> " +
             c.objects()[c.target(f)] + ";\n";
  for (ArrowId g = 0; g < c.arrow_count(); ++g)
    for (ArrowId f = 0; f < c.arrow_count(); ++f)
      if (!c.is_identity(g) && !c.is_identity(f) && c.target(f) == c.source(g))
        out += "  comp " + c.arrow(g).name + "." + c.arrow(f).name + " = " +
               c.arrow(c.compose(g, f)).name + ";\n";
  return out + "}\n";
}

// Functors

bool is_functor(const FiniteCategory& a, const FiniteCategory& c, const Functor& f) {
  if (f.objects.size() != a.object_count() || f.arrows.size() != a.arrow_count()) return false;
  for (ObjectId x : f.objects)
    if (x >= c.object_count()) return false;
  for (ArrowId u = 0; u < a.arrow_count(); ++u) {
    const ArrowId v = f.arrows[u];
    if (v >= c.arrow_count() || c.source(v) != f.objects[a.source(u)] ||
        c.target(v) != f.objects[a.target(u)])
      return false;
  }
  for (ObjectId x = 0; x < a.object_count(); ++x)
    if (f.arrows[a.identity(x)] != c.identity(f.objects[x])) return false;
  for (ArrowId g = 0; g < a.arrow_count(); ++g)
    for (ArrowId u = 0; u < a.arrow_count(); ++u)
      if (a.target(u) == a.source(g) && f.arrows[a.compose(g, u)] != c.compose(f.arrows[g], f.arrows[u]))
        return false;
  return true;
}

Functor identity_functor(const FiniteCategory& a) {
  Functor f;
  for (ObjectId x = 0; x < a.object_count(); ++x) f.objects.push_back(x);
  for (ArrowId u = 0; u < a.arrow_count(); ++u) f.arrows.push_back(u);
  return f;
}

std::vector<Functor> enumerate_functors(const FiniteCategory& a, const FiniteCategory& c) {
  std::vector<Functor> out;
  const std::size_t na = a.object_count(), ma = a.arrow_count();
  if (na > 0 && c.object_count() == 0) return out;
  Functor f{std::vector<ObjectId>(na, 0), std::vector<ArrowId>(ma, kNone)};
  // Partial check: every composite whose three arrows are assigned agrees.
  auto consistent = [&](ArrowId u) {
    for (ArrowId w = 0; w < ma; ++w) {
      if (f.arrows[w] == kNone) continue;
      if (a.target(u) == a.source(w)) {
        const ArrowId h = a.compose(w, u);
        if (f.arrows[h] != kNone && f.arrows[h] != c.compose(f.arrows[w], f.arrows[u])) return false;
      }
      if (a.target(w) == a.source(u)) {
        const ArrowId h = a.compose(u, w);
        if (f.arrows[h] != kNone && f.arrows[h] != c.compose(f.arrows[u], f.arrows[w])) return false;
      }
    }
    for (ArrowId g = 0; g < ma; ++g)
      for (ArrowId w = 0; w < ma; ++w)
        if (f.arrows[g] != kNone && f.arrows[w] != kNone && a.target(w) == a.source(g) &&
            a.compose(g, w) == u && f.arrows[u] != c.compose(f.arrows[g], f.arrows[w]))
          return false;
    return true;
  };
  auto assign_arrows = [&](auto&& self, ArrowId u) -> void {
    if (u == ma) {
      out.push_back(f);
      return;
    }
    if (a.is_identity(u)) {
      f.arrows[u] = c.identity(f.objects[a.source(u)]);
      if (consistent(u)) self(self, u + 1);
      f.arrows[u] = kNone;
      return;
    }
    for (ArrowId v : c.hom(f.objects[a.source(u)], f.objects[a.target(u)])) {
      f.arrows[u] = v;
      if (consistent(u)) self(self, u + 1);
    }
    f.arrows[u] = kNone;
  };
  for_each_map(na, c.object_count(), [&](const FinMap& objects) {
    for (std::size_t x = 0; x < na; ++x) f.objects[x] = ObjectId(objects(x));
    assign_arrows(assign_arrows, 0);
  });
  return out;
}

std::vector<std::vector<ArrowId>> functor_hom_components(const FiniteCategory& b, const FiniteCategory& c,
                                                         bool natural) {
  const auto functors = enumerate_functors(b, c);
  std::vector<std::vector<ArrowId>> out;
  const std::size_t nb = b.object_count();
  for (const auto& F : functors)
    for (const auto& G : functors) {
      std::vector<std::vector<ArrowId>> choices;
      for (ObjectId x = 0; x < nb; ++x) choices.push_back(c.hom(F.objects[x], G.objects[x]));
      std::vector<ArrowId> family(nb);
      auto rec = [&](auto&& self, std::size_t x) -> void {
        if (x == nb) {
          if (natural)
            for (ArrowId u = 0; u < b.arrow_count(); ++u)
              if (c.compose(G.arrows[u], family[b.source(u)]) != c.compose(family[b.target(u)], F.arrows[u]))
                return;
          out.push_back(family);
          return;
        }
        for (ArrowId v : choices[x]) {
          family[x] = v;
          self(self, x + 1);
        }
      };
      rec(rec, 0);
    }
  return out;
}

FiniteCategory functor_hom(const FiniteCategory& b, const FiniteCategory& c, bool natural) {
  const auto functors = enumerate_functors(b, c);
  const std::size_t nb = b.object_count();
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < functors.size(); ++i) objects.push_back("F" + std::to_string(i));
  std::vector<Arrow> arrows;
  std::vector<std::vector<ArrowId>> families;
  std::map<std::tuple<ObjectId, ObjectId, std::vector<ArrowId>>, ArrowId> index;
  std::vector<ArrowId> ids(functors.size(), kNone);
  for (ObjectId i = 0; i < functors.size(); ++i)
    for (ObjectId j = 0; j < functors.size(); ++j) {
      const auto& F = functors[i];
      const auto& G = functors[j];
      std::vector<ArrowId> family(nb);
      auto rec = [&](auto&& self, std::size_t x) -> void {
        if (x == nb) {
          if (natural)
            for (ArrowId u = 0; u < b.arrow_count(); ++u)
              if (c.compose(G.arrows[u], family[b.source(u)]) != c.compose(family[b.target(u)], F.arrows[u]))
                return;
          const ArrowId id = ArrowId(arrows.size());
          bool identity = i == j;
          for (std::size_t y = 0; y < nb && identity; ++y) identity = family[y] == c.identity(F.objects[y]);
          if (identity) ids[i] = id;
          arrows.push_back({identity ? "id_" + objects[i] : "t" + std::to_string(id), i, j});
          index[{i, j, family}] = id;
          families.push_back(family);
          return;
        }
        for (ArrowId v : c.hom(F.objects[x], G.objects[x])) {
          family[x] = v;
          self(self, x + 1);
        }
      };
      rec(rec, 0);
    }
  return build_category((natural ? "nat_" : "fam_") + b.name() + "_" + c.name(), objects, arrows, ids,
                        [&](ArrowId g, ArrowId f) {
                          std::vector<ArrowId> family(nb);
                          for (std::size_t x = 0; x < nb; ++x) family[x] = c.compose(families[g][x], families[f][x]);
                          return index.at({arrows[f].source, arrows[g].target, family});
                        });
}

// Sesquifunctors

void check_sesquifunctor(const FiniteCategory& a, const FiniteCategory& b, const FiniteCategory& c,
                         const Sesquifunctor& t) {
  if (t.objects.size() != a.object_count() || t.left.size() != a.object_count() ||
      t.right.size() != b.object_count())
    throw InputError("sesquifunctor tables have the wrong shape");
  for (ObjectId x = 0; x < a.object_count(); ++x) {
    if (t.objects[x].size() != b.object_count()) throw InputError("sesquifunctor object map has the wrong shape");
    Functor f{t.objects[x], t.left[x]};
    if (!is_functor(b, c, f))
      throw InputError("T(" + a.objects()[x] + ", -) is not a functor agreeing with the object map");
  }
  for (ObjectId y = 0; y < b.object_count(); ++y) {
    Functor f{{}, t.right[y]};
    for (ObjectId x = 0; x < a.object_count(); ++x) f.objects.push_back(t.objects[x][y]);
    if (!is_functor(a, c, f))
      throw InputError("T(-, " + b.objects()[y] + ") is not a functor agreeing with the object map");
  }
}

BifunctorVerdict bifunctor_check(const FiniteCategory& a, const FiniteCategory& b, const FiniteCategory& c,
                                 const Sesquifunctor& t) {
  check_sesquifunctor(a, b, c, t);
  for (ArrowId f = 0; f < a.arrow_count(); ++f)
    for (ArrowId g = 0; g < b.arrow_count(); ++g) {
      const ObjectId x = a.source(f), x2 = a.target(f), y = b.source(g), y2 = b.target(g);
      const ArrowId lhs = c.compose(t.left[x2][g], t.right[y][f]);
      const ArrowId rhs = c.compose(t.right[y2][f], t.left[x][g]);
      if (lhs != rhs) return {false, SquareWitness{f, g}};
    }
  return {};
}

std::optional<Functor> factor_through_product(const FiniteCategory& a, const FiniteCategory& b,
                                              const FiniteCategory& c, const Sesquifunctor& t) {
  check_sesquifunctor(a, b, c, t);
  Functor out;
  for (ObjectId x = 0; x < a.object_count(); ++x)
    for (ObjectId y = 0; y < b.object_count(); ++y) out.objects.push_back(t.objects[x][y]);
  for (ArrowId f = 0; f < a.arrow_count(); ++f)
    for (ArrowId g = 0; g < b.arrow_count(); ++g)
      out.arrows.push_back(c.compose(t.right[b.target(g)][f], t.left[a.source(f)][g]));
  if (!is_functor(product_category(a, b), c, out)) return std::nullopt;
  return out;
}

Sesquifunctor restrict_to_sesquifunctor(const FiniteCategory& a, const FiniteCategory& b, const Functor& f) {
  const std::size_t nb = b.object_count(), mb = b.arrow_count();
  Sesquifunctor t;
  t.objects.assign(a.object_count(), {});
  t.left.assign(a.object_count(), {});
  t.right.assign(nb, {});
  for (ObjectId x = 0; x < a.object_count(); ++x) {
    for (ObjectId y = 0; y < nb; ++y) t.objects[x].push_back(f.objects[x * nb + y]);
    for (ArrowId g = 0; g < mb; ++g) t.left[x].push_back(f.arrows[a.identity(x) * mb + g]);
  }
  for (ObjectId y = 0; y < nb; ++y)
    for (ArrowId u = 0; u < a.arrow_count(); ++u) t.right[y].push_back(f.arrows[u * mb + b.identity(y)]);
  return t;
}

}  // namespace catcom
