#include "catcom/funny.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "catcom/error.hpp"

namespace catcom {

FunnyTensor::FunnyTensor(FiniteCategory a, FiniteCategory b)
    : a_(std::move(a)), b_(std::move(b)), product_(product_category(a_, b_)) {
  for (ArrowId f = 0; f < a_.arrow_count(); ++f)
    for (ObjectId y = 0; y < b_.object_count(); ++y) letters_.push_back({true, f, y});
  for (ObjectId x = 0; x < a_.object_count(); ++x)
    for (ArrowId g = 0; g < b_.arrow_count(); ++g) letters_.push_back({false, g, x});
}

ObjectId FunnyTensor::letter_source(const FunnyLetter& l) const {
  return l.left ? object(a_.source(l.arrow), l.fixed) : object(l.fixed, b_.source(l.arrow));
}

ObjectId FunnyTensor::letter_target(const FunnyLetter& l) const {
  return l.left ? object(a_.target(l.arrow), l.fixed) : object(l.fixed, b_.target(l.arrow));
}

ObjectId FunnyTensor::target(const FunnyWord& w) const {
  return w.letters.empty() ? w.source : letter_target(w.letters.back());
}

bool FunnyTensor::well_typed(const FunnyWord& w) const {
  if (w.source >= object_count()) return false;
  ObjectId at = w.source;
  for (const auto& l : w.letters) {
    const std::size_t arrows = l.left ? a_.arrow_count() : b_.arrow_count();
    const std::size_t fixed = l.left ? b_.object_count() : a_.object_count();
    if (l.arrow >= arrows || l.fixed >= fixed || letter_source(l) != at) return false;
    at = letter_target(l);
  }
  return true;
}

namespace {

bool identity_letter(const FiniteCategory& a, const FiniteCategory& b, const FunnyLetter& l) {
  return l.left ? a.is_identity(l.arrow) : b.is_identity(l.arrow);
}

}  // namespace

bool FunnyTensor::is_normal(const FunnyWord& w) const {
  for (std::size_t p = 0; p < w.letters.size(); ++p) {
    if (identity_letter(a_, b_, w.letters[p])) return false;
    if (p > 0 && w.letters[p].left == w.letters[p - 1].left) return false;
  }
  return true;
}

std::vector<FunnyWord> FunnyTensor::rewrites(const FunnyWord& w) const {
  std::vector<FunnyWord> out;
  const auto& ls = w.letters;
  for (std::size_t p = 0; p < ls.size(); ++p) {
    if (identity_letter(a_, b_, ls[p])) {
      FunnyWord r{w.source, ls};
      r.letters.erase(r.letters.begin() + std::ptrdiff_t(p));
      out.push_back(std::move(r));
    }
    if (p + 1 < ls.size() && ls[p].left == ls[p + 1].left) {
      const FiniteCategory& c = ls[p].left ? a_ : b_;
      FunnyWord r{w.source, {}};
      r.letters.insert(r.letters.end(), ls.begin(), ls.begin() + std::ptrdiff_t(p));
      r.letters.push_back({ls[p].left, c.compose(ls[p + 1].arrow, ls[p].arrow), ls[p].fixed});
      r.letters.insert(r.letters.end(), ls.begin() + std::ptrdiff_t(p + 2), ls.end());
      out.push_back(std::move(r));
    }
  }
  return out;
}

FunnyWord FunnyTensor::normalize(FunnyWord w) const {
  std::vector<FunnyLetter> out;
  for (const auto& l : w.letters) {
    if (identity_letter(a_, b_, l)) continue;
    if (!out.empty() && out.back().left == l.left) {
      const FiniteCategory& c = l.left ? a_ : b_;
      const ArrowId h = c.compose(l.arrow, out.back().arrow);
      if (c.is_identity(h)) out.pop_back();
      else out.back().arrow = h;
      continue;
    }
    out.push_back(l);
  }
  w.letters = std::move(out);
  return w;
}

FunnyWord FunnyTensor::compose(const FunnyWord& second, const FunnyWord& first) const {
  if (target(first) != second.source) throw InputError("funny tensor words are not composable");
  FunnyWord w = first;
  w.letters.insert(w.letters.end(), second.letters.begin(), second.letters.end());
  return normalize(std::move(w));
}

FunnyHom FunnyTensor::hom(ObjectId s, ObjectId t, std::size_t max_length) const {
  const std::size_t n = object_count();
  // reach[o][side]: a normal continuation from o, last letter on side
  // (0 none, 1 left, 2 right), ends at t.
  std::vector<std::array<bool, 3>> reach(n, {false, false, false});
  for (bool changed = true; changed;) {
    changed = false;
    for (ObjectId o = 0; o < n; ++o)
      for (int side = 0; side < 3; ++side) {
        if (reach[o][side]) continue;
        bool r = o == t;
        for (const auto& l : letters_) {
          if (r) break;
          if (identity_letter(a_, b_, l) || letter_source(l) != o) continue;
          if ((side == 1 && l.left) || (side == 2 && !l.left)) continue;
          r = reach[letter_target(l)][l.left ? 1 : 2];
        }
        if (r) {
          reach[o][side] = true;
          changed = true;
        }
      }
  }
  FunnyHom out;
  FunnyWord w{s, {}};
  auto extend = [&](auto&& self, ObjectId at, int side) -> void {
    if (w.letters.size() == max_length + 1) {
      if (reach[at][side]) out.truncated = true;
      return;
    }
    if (at == t) out.arrows.push_back(w);
    for (const auto& l : letters_) {
      if (identity_letter(a_, b_, l) || letter_source(l) != at) continue;
      if ((side == 1 && l.left) || (side == 2 && !l.left)) continue;
      w.letters.push_back(l);
      self(self, letter_target(l), l.left ? 1 : 2);
      w.letters.pop_back();
    }
  };
  extend(extend, s, 0);
  std::stable_sort(out.arrows.begin(), out.arrows.end(), [](const FunnyWord& x, const FunnyWord& y) {
    return x.letters.size() != y.letters.size() ? x.letters.size() < y.letters.size() : x < y;
  });
  return out;
}

ConfluenceReport FunnyTensor::check_local_confluence(std::size_t max_length) const {
  ConfluenceReport report;
  FunnyWord w;
  auto visit = [&](auto&& self, ObjectId at) -> void {
    ++report.words;
    const auto reducts = rewrites(w);
    if (reducts.size() > 1) {
      const FunnyWord first = normalize(reducts[0]);
      for (std::size_t i = 1; i < reducts.size(); ++i) {
        ++report.peaks;
        if (!report.witness && normalize(reducts[i]) != first) report.witness = w;
      }
    }
    if (w.letters.size() == max_length) return;
    for (const auto& l : letters_) {
      if (letter_source(l) != at) continue;
      w.letters.push_back(l);
      self(self, letter_target(l));
      w.letters.pop_back();
    }
  };
  for (ObjectId o = 0; o < object_count(); ++o) {
    w = {o, {}};
    visit(visit, o);
  }
  return report;
}

std::optional<FunnyCategory> FunnyTensor::to_category() const {
  const std::size_t n = object_count();
  // A normal word longer than the number of states (object, last side)
  // revisits one, so it can be pumped.
  const std::size_t states = 2 * n + 1;
  std::vector<FunnyWord> words;
  for (ObjectId s = 0; s < n; ++s) {
    bool infinite = false;
    for (ObjectId t = 0; t < n; ++t) {
      auto h = hom(s, t, states);
      if (h.truncated) infinite = true;
      words.insert(words.end(), h.arrows.begin(), h.arrows.end());
    }
    if (infinite) return std::nullopt;
  }
  std::vector<std::string> objects;
  for (const auto& x : a_.objects())
    for (const auto& y : b_.objects()) objects.push_back(x + "_" + y);
  std::map<FunnyWord, ArrowId> index;
  std::vector<Arrow> arrows;
  std::vector<ArrowId> ids(n);
  for (const auto& w : words) {
    const ArrowId id = ArrowId(arrows.size());
    if (w.letters.empty()) ids[w.source] = id;
    arrows.push_back({w.letters.empty() ? "id_" + objects[w.source] : "w" + std::to_string(id), w.source,
                      target(w)});
    index[w] = id;
  }
  std::vector<ArrowId> comp(arrows.size() * arrows.size(), ArrowId(-1));
  for (ArrowId g = 0; g < arrows.size(); ++g)
    for (ArrowId f = 0; f < arrows.size(); ++f)
      if (arrows[f].target == arrows[g].source)
        comp[std::size_t(g) * arrows.size() + f] = index.at(compose(words[g], words[f]));
  FunnyCategory out{FiniteCategory(a_.name() + "_box_" + b_.name(), objects, std::move(arrows), std::move(ids),
                                   std::move(comp)),
                     words,
                     {}};
  auto letter_arrow = [&](const FunnyLetter& l) {
    return index.at(normalize(FunnyWord{letter_source(l), {l}}));
  };
  auto& t = out.universal;
  t.objects.assign(a_.object_count(), {});
  t.left.assign(a_.object_count(), {});
  t.right.assign(b_.object_count(), {});
  for (ObjectId x = 0; x < a_.object_count(); ++x) {
    for (ObjectId y = 0; y < b_.object_count(); ++y) t.objects[x].push_back(object(x, y));
    for (ArrowId g = 0; g < b_.arrow_count(); ++g) t.left[x].push_back(letter_arrow({false, g, x}));
  }
  for (ObjectId y = 0; y < b_.object_count(); ++y)
    for (ArrowId f = 0; f < a_.arrow_count(); ++f) t.right[y].push_back(letter_arrow({true, f, y}));
  return out;
}

ArrowId FunnyTensor::to_product(const FunnyWord& w) const {
  const std::size_t mb = b_.arrow_count();
  const ObjectId a0 = ObjectId(w.source / b_.object_count()), b0 = ObjectId(w.source % b_.object_count());
  ArrowId out = ArrowId(a_.identity(a0) * mb + b_.identity(b0));
  for (const auto& l : w.letters) {
    const ArrowId step = l.left ? ArrowId(l.arrow * mb + b_.identity(l.fixed))
                                : ArrowId(a_.identity(l.fixed) * mb + l.arrow);
    out = product_.compose(step, out);
  }
  return out;
}

std::string FunnyTensor::describe(const FunnyWord& w) const {
  if (w.letters.empty()) {
    const ObjectId x = ObjectId(w.source / b_.object_count()), y = ObjectId(w.source % b_.object_count());
    return "id(" + a_.objects()[x] + "," + b_.objects()[y] + ")";
  }
  std::string s;
  for (std::size_t p = 0; p < w.letters.size(); ++p) {
    const auto& l = w.letters[p];
    s += p ? ";" : "";
    s += l.left ? "(" + a_.arrow(l.arrow).name + "," + b_.objects()[l.fixed] + ")"
                : "(" + a_.objects()[l.fixed] + "," + b_.arrow(l.arrow).name + ")";
  }
  return s;
}

}  // namespace catcom
