#include "catcom/sesqui.hpp"

#include <limits>

#include "catcom/error.hpp"
#include "category_builder.hpp"

namespace catcom {

namespace {

constexpr CellId kNone = std::numeric_limits<CellId>::max();

}  // namespace

SesquiData::SesquiData(FiniteCategory base, std::vector<Cell> cells, std::vector<CellId> identities)
    : base_(std::move(base)), cells_(std::move(cells)), identities_(std::move(identities)) {
  const std::size_t n = cells_.size(), m = base_.arrow_count();
  if (identities_.size() != m) throw InputError("one identity 2-cell per arrow required");
  for (const auto& c : cells_)
    if (c.source >= m || c.target >= m) throw InputError("2-cell " + c.name + " has an unknown boundary");
  for (CellId i : identities_)
    if (i >= n) throw InputError("identity 2-cell out of range");
  left_.assign(m * n, kNone);
  right_.assign(n * m, kNone);
  vertical_.assign(n * n, kNone);
}

std::optional<CellId> SesquiData::find_cell(std::string_view name) const {
  for (CellId a = 0; a < cells_.size(); ++a)
    if (cells_[a].name == name) return a;
  return std::nullopt;
}

std::optional<CellId> SesquiData::whisker_left_entry(ArrowId h, CellId alpha) const {
  const CellId v = left_.at(std::size_t(h) * cells_.size() + alpha);
  return v == kNone ? std::nullopt : std::optional<CellId>(v);
}

std::optional<CellId> SesquiData::whisker_right_entry(CellId alpha, ArrowId k) const {
  const CellId v = right_.at(std::size_t(alpha) * base_.arrow_count() + k);
  return v == kNone ? std::nullopt : std::optional<CellId>(v);
}

std::optional<CellId> SesquiData::vertical_entry(CellId beta, CellId alpha) const {
  const CellId v = vertical_.at(std::size_t(beta) * cells_.size() + alpha);
  return v == kNone ? std::nullopt : std::optional<CellId>(v);
}

CellId SesquiData::whisker_left(ArrowId h, CellId alpha) const {
  if (base_.source(h) != base_.target(cell(alpha).source))
    throw InputError("cannot whisker " + cell(alpha).name + " by " + base_.arrow(h).name);
  auto v = whisker_left_entry(h, alpha);
  if (!v) throw ClosureError("missing whisker " + base_.arrow(h).name + "." + cell(alpha).name);
  return *v;
}

CellId SesquiData::whisker_right(CellId alpha, ArrowId k) const {
  if (base_.target(k) != base_.source(cell(alpha).source))
    throw InputError("cannot whisker " + cell(alpha).name + " by " + base_.arrow(k).name);
  auto v = whisker_right_entry(alpha, k);
  if (!v) throw ClosureError("missing whisker " + cell(alpha).name + "." + base_.arrow(k).name);
  return *v;
}

CellId SesquiData::vertical(CellId beta, CellId alpha) const {
  if (cell(alpha).target != cell(beta).source)
    throw InputError("cells " + cell(beta).name + " and " + cell(alpha).name + " are not composable");
  auto v = vertical_entry(beta, alpha);
  if (!v) throw ClosureError("missing vertical composite " + cell(beta).name + "." + cell(alpha).name);
  return *v;
}

void SesquiData::set_whisker_left(ArrowId h, CellId alpha, CellId value) {
  left_.at(std::size_t(h) * cells_.size() + alpha) = value;
}

void SesquiData::set_whisker_right(CellId alpha, ArrowId k, CellId value) {
  right_.at(std::size_t(alpha) * base_.arrow_count() + k) = value;
}

void SesquiData::set_vertical(CellId beta, CellId alpha, CellId value) {
  vertical_.at(std::size_t(beta) * cells_.size() + alpha) = value;
}

void SesquiData::fill_units() {
  const auto& c = base_;
  for (CellId a = 0; a < cells_.size(); ++a) {
    const ArrowId f = cells_[a].source;
    for (ArrowId h = 0; h < c.arrow_count(); ++h) {
      if (c.source(h) != c.target(f) || whisker_left_entry(h, a)) continue;
      if (c.is_identity(h)) set_whisker_left(h, a, a);
      else if (identities_[f] == a) set_whisker_left(h, a, identities_[c.compose(h, f)]);
    }
    for (ArrowId k = 0; k < c.arrow_count(); ++k) {
      if (c.target(k) != c.source(f) || whisker_right_entry(a, k)) continue;
      if (c.is_identity(k)) set_whisker_right(a, k, a);
      else if (identities_[f] == a) set_whisker_right(a, k, identities_[c.compose(f, k)]);
    }
    for (CellId b = 0; b < cells_.size(); ++b) {
      if (cells_[a].target != cells_[b].source || vertical_entry(b, a)) continue;
      if (identities_[cells_[b].source] == b) set_vertical(b, a, a);
      else if (identities_[cells_[a].source] == a) set_vertical(b, a, b);
    }
  }
}

LawReport sesqui_validate(const SesquiData& s) {
  LawReport r;
  const auto& c = s.base();
  const std::size_t n = s.cell_count(), m = c.arrow_count();
  auto nm = [&](CellId a) { return s.cell(a).name; };
  auto an = [&](ArrowId f) { return c.arrow(f).name; };
  for (CellId a = 0; a < n; ++a) {
    const auto& x = s.cell(a);
    if (c.source(x.source) != c.source(x.target) || c.target(x.source) != c.target(x.target))
      r.fail("typing", nm(a) + " joins non-parallel arrows");
  }
  for (ArrowId f = 0; f < m; ++f) {
    const auto& x = s.cell(s.identity_cell(f));
    if (x.source != f || x.target != f) r.fail("typing", "identity 2-cell of " + an(f));
  }
  std::size_t cases = 0;
  for (CellId a = 0; a < n; ++a) {
    const auto& x = s.cell(a);
    for (ArrowId h = 0; h < m; ++h) {
      if (c.source(h) != c.target(x.source)) continue;
      ++cases;
      auto v = s.whisker_left_entry(h, a);
      if (!v) r.fail("typing", "missing " + an(h) + "." + nm(a));
      else if (s.cell(*v).source != c.compose(h, x.source) || s.cell(*v).target != c.compose(h, x.target))
        r.fail("typing", an(h) + "." + nm(a) + " = " + nm(*v));
    }
    for (ArrowId k = 0; k < m; ++k) {
      if (c.target(k) != c.source(x.source)) continue;
      ++cases;
      auto v = s.whisker_right_entry(a, k);
      if (!v) r.fail("typing", "missing " + nm(a) + "." + an(k));
      else if (s.cell(*v).source != c.compose(x.source, k) || s.cell(*v).target != c.compose(x.target, k))
        r.fail("typing", nm(a) + "." + an(k) + " = " + nm(*v));
    }
    for (CellId b = 0; b < n; ++b) {
      if (x.target != s.cell(b).source) continue;
      ++cases;
      auto v = s.vertical_entry(b, a);
      if (!v) r.fail("typing", "missing " + nm(b) + "." + nm(a));
      else if (s.cell(*v).source != x.source || s.cell(*v).target != s.cell(b).target)
        r.fail("typing", nm(b) + "." + nm(a) + " = " + nm(*v));
    }
  }
  r.count("typing", cases, true);
  if (!r.ok()) return r;

  for (CellId a = 0; a < n; ++a) {
    const auto& x = s.cell(a);
    const ObjectId X = c.source(x.source), Y = c.target(x.source);
    if (s.whisker_left(c.identity(Y), a) != a) r.fail("whisker-unit", "id." + nm(a));
    if (s.whisker_right(a, c.identity(X)) != a) r.fail("whisker-unit", nm(a) + ".id");
    for (ArrowId h = 0; h < m; ++h) {
      if (c.source(h) != Y) continue;
      for (ArrowId h2 = 0; h2 < m; ++h2)
        if (c.source(h2) == c.target(h) &&
            s.whisker_left(h2, s.whisker_left(h, a)) != s.whisker_left(c.compose(h2, h), a))
          r.fail("whisker-associativity", an(h2) + "." + an(h) + "." + nm(a));
      for (ArrowId k = 0; k < m; ++k)
        if (c.target(k) == X && s.whisker_right(s.whisker_left(h, a), k) != s.whisker_left(h, s.whisker_right(a, k)))
          r.fail("whisker-middle", an(h) + "." + nm(a) + "." + an(k));
    }
    for (ArrowId k = 0; k < m; ++k) {
      if (c.target(k) != X) continue;
      for (ArrowId k2 = 0; k2 < m; ++k2)
        if (c.target(k2) == c.source(k) &&
            s.whisker_right(s.whisker_right(a, k), k2) != s.whisker_right(a, c.compose(k, k2)))
          r.fail("whisker-associativity", nm(a) + "." + an(k) + "." + an(k2));
    }
  }
  for (ArrowId f = 0; f < m; ++f) {
    const CellId i = s.identity_cell(f);
    for (ArrowId h = 0; h < m; ++h)
      if (c.source(h) == c.target(f) && s.whisker_left(h, i) != s.identity_cell(c.compose(h, f)))
        r.fail("whisker-identity", an(h) + "." + nm(i));
    for (ArrowId k = 0; k < m; ++k)
      if (c.target(k) == c.source(f) && s.whisker_right(i, k) != s.identity_cell(c.compose(f, k)))
        r.fail("whisker-identity", nm(i) + "." + an(k));
  }
  for (CellId a = 0; a < n; ++a) {
    const auto& x = s.cell(a);
    if (s.vertical(s.identity_cell(x.target), a) != a) r.fail("vertical-unit", "id." + nm(a));
    if (s.vertical(a, s.identity_cell(x.source)) != a) r.fail("vertical-unit", nm(a) + ".id");
    for (CellId b = 0; b < n; ++b) {
      if (s.cell(b).source != x.target) continue;
      const CellId ba = s.vertical(b, a);
      for (CellId g = 0; g < n; ++g)
        if (s.cell(g).source == s.cell(b).target && s.vertical(s.vertical(g, b), a) != s.vertical(g, ba))
          r.fail("vertical-associativity", nm(g) + "." + nm(b) + "." + nm(a));
      for (ArrowId h = 0; h < m; ++h)
        if (c.source(h) == c.target(x.source) &&
            s.whisker_left(h, ba) != s.vertical(s.whisker_left(h, b), s.whisker_left(h, a)))
          r.fail("whisker-vertical", an(h) + ".(" + nm(b) + "." + nm(a) + ")");
      for (ArrowId k = 0; k < m; ++k)
        if (c.target(k) == c.source(x.source) &&
            s.whisker_right(ba, k) != s.vertical(s.whisker_right(b, k), s.whisker_right(a, k)))
          r.fail("whisker-vertical", "(" + nm(b) + "." + nm(a) + ")." + an(k));
    }
  }
  r.count("laws", n * n * m, true);
  return r;
}

std::optional<InterchangeWitness> interchange_witness(const SesquiData& s, CellId alpha, CellId beta) {
  const auto& c = s.base();
  const auto& a = s.cell(alpha);
  const auto& b = s.cell(beta);
  if (c.target(a.source) != c.source(b.source))
    throw InputError("cells " + a.name + " and " + b.name + " are not horizontally composable");
  const CellId lhs = s.vertical(s.whisker_right(beta, a.target), s.whisker_left(b.source, alpha));
  const CellId rhs = s.vertical(s.whisker_left(b.target, alpha), s.whisker_right(beta, a.source));
  if (lhs == rhs) return std::nullopt;
  return InterchangeWitness{alpha, beta, lhs, rhs};
}

bool sesqui_interchange(const SesquiData& s, CellId alpha, CellId beta) {
  return !interchange_witness(s, alpha, beta);
}

std::vector<InterchangeWitness> sesqui_interchange_all(const SesquiData& s) {
  std::vector<InterchangeWitness> out;
  const auto& c = s.base();
  for (CellId a = 0; a < s.cell_count(); ++a)
    for (CellId b = 0; b < s.cell_count(); ++b)
      if (c.target(s.cell(a).source) == c.source(s.cell(b).source))
        if (auto w = interchange_witness(s, a, b)) out.push_back(*w);
  return out;
}

CellId horizontal(const SesquiData& s, CellId beta, CellId alpha) {
  const auto& a = s.cell(alpha);
  const auto& b = s.cell(beta);
  if (s.base().target(a.source) != s.base().source(b.source))
    throw InputError("cells " + a.name + " and " + b.name + " are not horizontally composable");
  return s.vertical(s.whisker_right(beta, a.target), s.whisker_left(b.source, alpha));
}

LawReport two_category_check(const SesquiData& s) {
  LawReport r = sesqui_validate(s);
  if (!r.ok()) return r;
  const auto& c = s.base();
  const std::size_t n = s.cell_count();
  auto nm = [&](CellId a) { return s.cell(a).name; };
  auto composable = [&](CellId b, CellId a) { return c.target(s.cell(a).source) == c.source(s.cell(b).source); };
  for (const auto& w : sesqui_interchange_all(s))
    r.fail("horizontal-well-defined", nm(w.alpha) + ", " + nm(w.beta));
  for (CellId a = 0; a < n; ++a) {
    const ArrowId f = s.cell(a).source;
    if (horizontal(s, s.identity_cell(c.identity(c.target(f))), a) != a) r.fail("horizontal-unit", "id*" + nm(a));
    if (horizontal(s, a, s.identity_cell(c.identity(c.source(f)))) != a) r.fail("horizontal-unit", nm(a) + "*id");
  }
  for (CellId a = 0; a < n; ++a)
    for (CellId b = 0; b < n; ++b) {
      if (!composable(b, a)) continue;
      const CellId ba = horizontal(s, b, a);
      for (CellId g = 0; g < n; ++g)
        if (composable(g, b) && horizontal(s, horizontal(s, g, b), a) != horizontal(s, g, ba))
          r.fail("horizontal-associativity", nm(g) + "*" + nm(b) + "*" + nm(a));
      for (CellId a2 = 0; a2 < n; ++a2) {
        if (s.cell(a2).source != s.cell(a).target) continue;
        for (CellId b2 = 0; b2 < n; ++b2) {
          if (s.cell(b2).source != s.cell(b).target) continue;
          const CellId lhs = horizontal(s, s.vertical(b2, b), s.vertical(a2, a));
          const CellId rhs = s.vertical(horizontal(s, b2, a2), ba);
          if (lhs != rhs)
            r.fail("interchange-law", "(" + nm(b2) + "." + nm(b) + ")*(" + nm(a2) + "." + nm(a) + ")");
        }
      }
    }
  r.count("horizontal", n * n, true);
  return r;
}

SesquiData locally_discrete(const FiniteCategory& c) {
  std::vector<Cell> cells;
  std::vector<CellId> ids;
  for (ArrowId f = 0; f < c.arrow_count(); ++f) {
    ids.push_back(CellId(f));
    cells.push_back({"i_" + c.arrow(f).name, f, f});
  }
  SesquiData s(c, std::move(cells), std::move(ids));
  s.fill_units();
  return s;
}

SesquiData monoid_two_cells(const FiniteMonoid& m) {
  std::vector<Cell> cells;
  for (std::size_t x = 0; x < m.size(); ++x)
    cells.push_back({int(x) == m.unit() ? "i_id_star" : "c" + std::to_string(x), 0, 0});
  FiniteCategory base("star", {"star"}, {{"id_star", 0, 0}}, {0}, {0});
  SesquiData s(std::move(base), std::move(cells), {CellId(m.unit())});
  for (CellId a = 0; a < m.size(); ++a)
    for (CellId b = 0; b < m.size(); ++b) s.set_vertical(b, a, CellId(m.mul(int(b), int(a))));
  s.fill_units();
  return s;
}

SesquiData walking_two_cell() {
  return parse_sesqui(
      "sesqui cell2 { objects X, Y; arrow f : X -> Y; arrow g : X -> Y; cell alpha : f => g; }");
}

SesquiData free_sesqui_example() {
  return parse_sesqui(R"(sesqui free {
  objects X, Y, Z;
  arrow f : X -> Y; arrow g : X -> Y; arrow h : Y -> Z; arrow k : Y -> Z;
  arrow hf : X -> Z; arrow hg : X -> Z; arrow kf : X -> Z; arrow kg : X -> Z;
  comp h.f = hf; comp h.g = hg; comp k.f = kf; comp k.g = kg;
  cell alpha : f => g; cell beta : h => k;
  cell h_alpha : hf => hg; cell k_alpha : kf => kg;
  cell beta_f : hf => kf; cell beta_g : hg => kg;
  cell upper : hf => kg; cell lower : hf => kg;
  whiskL h.alpha = h_alpha; whiskL k.alpha = k_alpha;
  whiskR beta.f = beta_f; whiskR beta.g = beta_g;
  vcomp beta_g.h_alpha = upper; vcomp k_alpha.beta_f = lower;
})");
}

SesquiData parse_sesqui(std::string_view text) {
  detail::TokenStream ts(text);
  ts.expect("sesqui");
  detail::CategoryBuilder builder(ts.expect_identifier("sesqui name"));
  ts.expect("{");
  struct Item {
    detail::Token token;
    std::string kind, a, b, c;
  };
  std::vector<Item> items;
  while (true) {
    const auto tok = ts.peek();
    if (ts.accept("}")) {
      if (!ts.at_end()) ts.fail("trailing input after sesqui");
      FiniteCategory base = builder.build(ts, tok);
      std::vector<Cell> cells;
      std::vector<CellId> ids;
      for (ArrowId f = 0; f < base.arrow_count(); ++f) {
        ids.push_back(CellId(f));
        cells.push_back({"i_" + base.arrow(f).name, f, f});
      }
      auto arrow_of = [&](const detail::Token& t, const std::string& name) -> ArrowId {
        auto f = base.find_arrow(name);
        if (!f) ts.fail_at(t, "unknown arrow '" + name + "'");
        return *f;
      };
      for (const auto& it : items) {
        if (it.kind != "cell") continue;
        for (const auto& x : cells)
          if (x.name == it.a) ts.fail_at(it.token, "duplicate 2-cell '" + it.a + "'");
        const ArrowId f = arrow_of(it.token, it.b), g = arrow_of(it.token, it.c);
        if (base.source(f) != base.source(g) || base.target(f) != base.target(g))
          ts.fail_at(it.token, "2-cell " + it.a + " joins non-parallel arrows");
        cells.push_back({it.a, f, g});
      }
      SesquiData s(base, std::move(cells), std::move(ids));
      const auto& c = s.base();
      auto cell_of = [&](const detail::Token& t, const std::string& name) -> CellId {
        if (auto a = s.find_cell(name)) return *a;
        ts.fail_at(t, "unknown 2-cell '" + name + "'");
      };
      for (const auto& it : items) {
        if (it.kind == "whiskL") {
          const ArrowId h = arrow_of(it.token, it.a);
          const CellId a = cell_of(it.token, it.b), v = cell_of(it.token, it.c);
          if (c.source(h) != c.target(s.cell(a).source)) ts.fail_at(it.token, "whisker is not composable");
          s.set_whisker_left(h, a, v);
        } else if (it.kind == "whiskR") {
          const CellId a = cell_of(it.token, it.a), v = cell_of(it.token, it.c);
          const ArrowId k = arrow_of(it.token, it.b);
          if (c.target(k) != c.source(s.cell(a).source)) ts.fail_at(it.token, "whisker is not composable");
          s.set_whisker_right(a, k, v);
        } else if (it.kind == "vcomp") {
          const CellId b = cell_of(it.token, it.a), a = cell_of(it.token, it.b), v = cell_of(it.token, it.c);
          if (s.cell(a).target != s.cell(b).source) ts.fail_at(it.token, "2-cells are not composable");
          s.set_vertical(b, a, v);
        }
      }
      s.fill_units();
      return s;
    }
    if (builder.accept_item(ts)) continue;
    if (ts.accept("cell")) {
      Item it{tok, "cell", ts.expect_identifier("2-cell name"), {}, {}};
      ts.expect(":");
      it.b = ts.expect_identifier("arrow");
      ts.expect("=>");
      it.c = ts.expect_identifier("arrow");
      ts.expect(";");
      items.push_back(std::move(it));
      continue;
    }
    bool matched = false;
    for (const char* kind : {"whiskL", "whiskR", "vcomp"}) {
      if (!ts.accept(kind)) continue;
      Item it{tok, kind, ts.expect_identifier(), {}, {}};
      ts.expect(".");
      it.b = ts.expect_identifier();
      ts.expect("=");
      it.c = ts.expect_identifier();
      ts.expect(";");
      items.push_back(std::move(it));
      matched = true;
      break;
    }
    if (!matched) ts.fail_at(tok, "expected a category item, 'cell', 'whiskL', 'whiskR', 'vcomp' or '}'");
  }
}

std::string render_sesqui(const SesquiData& s) {
  const auto& c = s.base();
  std::string cat = render_category(c);
  std::string out = "sesqui " + c.name() + " {\n" + cat.substr(cat.find('\n') + 1, cat.size() - cat.find('\n') - 3);
  auto identity_cell = [&](CellId a) { return s.identity_cell(s.cell(a).source) == a; };
  for (CellId a = 0; a < s.cell_count(); ++a)
    if (!identity_cell(a))
      out += "  cell " + s.cell(a).name + " : " + c.arrow(s.cell(a).source).name + " => " +
             c.arrow(s.cell(a).target).name + ";\n";
  for (ArrowId h = 0; h < c.arrow_count(); ++h)
    for (CellId a = 0; a < s.cell_count(); ++a)
      if (!c.is_identity(h) && !identity_cell(a))
        if (auto v = s.whisker_left_entry(h, a))
          out += "  whiskL " + c.arrow(h).name + "." + s.cell(a).name + " = " + s.cell(*v).name + ";\n";
  for (CellId a = 0; a < s.cell_count(); ++a)
    for (ArrowId k = 0; k < c.arrow_count(); ++k)
      if (!c.is_identity(k) && !identity_cell(a))
        if (auto v = s.whisker_right_entry(a, k))
          out += "  whiskR " + s.cell(a).name + "." + c.arrow(k).name + " = " + s.cell(*v).name + ";\n";
  for (CellId b = 0; b < s.cell_count(); ++b)
    for (CellId a = 0; a < s.cell_count(); ++a)
      if (!identity_cell(a) && !identity_cell(b))
        if (auto v = s.vertical_entry(b, a))
          out += "  vcomp " + s.cell(b).name + "." + s.cell(a).name + " = " + s.cell(*v).name + ";\n";
  return out + "}\n";
}

}  // namespace catcom
