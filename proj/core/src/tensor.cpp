#include "catcom/tensor.hpp"

#include <map>
#include <set>

#include "catcom/clone.hpp"
#include "catcom/error.hpp"

namespace catcom {

Term rename_symbols(const Term& t, const std::vector<std::pair<std::string, std::string>>& renaming) {
  if (t.is_var()) return t;
  std::string name = t.symbol();
  for (const auto& [from, to] : renaming)
    if (from == name) {
      name = to;
      break;
    }
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(rename_symbols(a, renaming));
  return Term::app(std::move(name), std::move(args));
}

CoproductPresentation coproduct_presentation(const Presentation& s, const Presentation& t) {
  CoproductPresentation out;
  const auto& ls = s.signature().symbols();
  const auto& rs = t.signature().symbols();
  std::set<std::string> taken;
  for (const auto& x : ls) taken.insert(x.name);
  for (const auto& x : rs) taken.insert(x.name);

  auto fresh = [&](std::string base, const char* suffix) {
    std::string name = base + suffix;
    while (taken.count(name)) name += suffix;
    taken.insert(name);
    return name;
  };
  for (const auto& x : ls)
    out.left_names.push_back(t.signature().contains(x.name) ? fresh(x.name, "_1") : x.name);
  for (const auto& x : rs)
    out.right_names.push_back(s.signature().contains(x.name) ? fresh(x.name, "_2") : x.name);

  Signature sig(s.name() + "_" + t.name());
  for (std::size_t i = 0; i < ls.size(); ++i) sig.add(out.left_names[i], ls[i].arity);
  for (std::size_t i = 0; i < rs.size(); ++i) sig.add(out.right_names[i], rs[i].arity);

  std::vector<std::pair<std::string, std::string>> lren, rren;
  for (std::size_t i = 0; i < ls.size(); ++i) lren.emplace_back(ls[i].name, out.left_names[i]);
  for (std::size_t i = 0; i < rs.size(); ++i) rren.emplace_back(rs[i].name, out.right_names[i]);

  std::vector<Equation> eqs;
  for (const auto& e : s.equations())
    eqs.push_back({rename_symbols(e.lhs, lren), rename_symbols(e.rhs, lren), e.var_count});
  for (const auto& e : t.equations())
    eqs.push_back({rename_symbols(e.lhs, rren), rename_symbols(e.rhs, rren), e.var_count});
  out.presentation = Presentation(std::move(sig), std::move(eqs));
  return out;
}

CoproductPresentation commuting_tensor_presentation(const Presentation& s, const Presentation& t) {
  CoproductPresentation out = coproduct_presentation(s, t);
  Signature sig = out.presentation.signature();
  sig.set_name(s.name() + "_x_" + t.name());
  std::vector<Equation> eqs = out.presentation.equations();
  const auto& ls = s.signature().symbols();
  const auto& rs = t.signature().symbols();
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = 0; j < rs.size(); ++j) {
      const Term phi = generic_term({out.left_names[i], ls[i].arity});
      const Term psi = generic_term({out.right_names[j], rs[j].arity});
      eqs.push_back(commutation_equation(phi, ls[i].arity, psi, rs[j].arity));
    }
  out.presentation = Presentation(std::move(sig), std::move(eqs));
  return out;
}

namespace {

std::string render_tables(const std::vector<FunctionTable>& tables) {
  std::string s;
  for (const auto& t : tables) {
    s += "[";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    s += "]";
  }
  return s;
}

}  // namespace

TensorCorrespondence verify_tensor_correspondence(const Presentation& s, const Presentation& t,
                                                  std::size_t k,
                                                  const CorrespondenceOptions& options) {
  TensorCorrespondence out;
  out.k = k;
  auto sp = std::make_shared<const Presentation>(s);
  auto tp = std::make_shared<const Presentation>(t);
  auto tensor = commuting_tensor_presentation(s, t);
  auto up = std::make_shared<const Presentation>(tensor.presentation);

  const auto u_models = enumerate_models(up, k, options.enumeration);
  const auto s_models = enumerate_models(sp, k, options.enumeration);
  const auto t_models = enumerate_models(tp, k, options.enumeration);
  out.tensor_models = u_models.size();
  out.s_models = s_models.size();
  out.t_models = t_models.size();

  std::map<std::vector<FunctionTable>, std::size_t> s_index, t_index;
  for (std::size_t i = 0; i < s_models.size(); ++i) s_index[s_models[i].tables()] = i;
  for (std::size_t i = 0; i < t_models.size(); ++i) t_index[t_models[i].tables()] = i;

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < s_models.size(); ++i)
    for (std::size_t j = 0; j < t_models.size(); ++j)
      if (is_commuting_pair(s_models[i], t_models[j])) pairs.insert({i, j});
  out.commuting_pairs = pairs.size();

  const std::size_t ns = s.signature().size();
  std::set<std::pair<std::size_t, std::size_t>> hit;
  for (std::size_t u = 0; u < u_models.size(); ++u) {
    const auto& tables = u_models[u].tables();
    std::vector<FunctionTable> left(tables.begin(), tables.begin() + ns);
    std::vector<FunctionTable> right(tables.begin() + ns, tables.end());
    auto si = s_index.find(left);
    auto ti = t_index.find(right);
    if (si == s_index.end() || ti == t_index.end()) {
      out.report.fail("bijection", "restriction of tensor model " + render_tables(tables) +
                                       " is not a pair of models");
      continue;
    }
    std::pair<std::size_t, std::size_t> p{si->second, ti->second};
    if (!pairs.count(p))
      out.report.fail("bijection", "restriction of tensor model " + render_tables(tables) +
                                       " is not a commuting pair");
    if (!hit.insert(p).second)
      out.report.fail("bijection", "two tensor models restrict to " + render_tables(tables));
    out.bijection.push_back({u, p.first, p.second});
  }
  for (const auto& p : pairs)
    if (!hit.count(p)) {
      out.report.fail("bijection", "commuting pair " + render_tables(s_models[p.first].tables()) +
                                       " / " + render_tables(t_models[p.second].tables()) +
                                       " has no tensor model");
      break;
    }
  out.report.count("bijection", u_models.size() + pairs.size(), true);

  if (k <= options.hom_check_max_carrier) {
    std::size_t cases = 0;
    for (const auto& [u, a_s, a_t] : out.bijection)
      for (const auto& [v, b_s, b_t] : out.bijection) {
        ++cases;
        const std::size_t tensor_homs = enumerate_homs(u_models[u], u_models[v]).size();
        std::size_t pair_homs = 0;
        for (const auto& h : enumerate_homs(s_models[a_s], s_models[b_s]))
          if (is_homomorphism(t_models[a_t], t_models[b_t], h.map)) ++pair_homs;
        if (tensor_homs != pair_homs)
          out.report.fail("hom-spot-check", "models " + std::to_string(u) + " -> " +
                                                std::to_string(v) + ": " +
                                                std::to_string(tensor_homs) + " vs " +
                                                std::to_string(pair_homs));
      }
    out.report.count("hom-spot-check", cases, true);
  }

  if (k >= 1 && options.derived_arity >= 1) {
    std::size_t cases = 0;
    const std::size_t N = options.derived_arity;
    for (const auto& [u, a_s, a_t] : out.bijection) {
      auto sc = clone_of_algebra(s_models[a_s].to_algebra("s"), N);
      auto tc = clone_of_algebra(t_models[a_t].to_algebra("t"), N);
      for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t m = 0; m <= N; ++m)
          for (ElementId f = 0; f < sc->size(n); ++f)
            for (ElementId g = 0; g < tc->size(m); ++g) {
              ++cases;
              if (interchange_counterexample(sc->table({n, f}), n, tc->table({m, g}), m, k))
                out.report.fail("derived-interchange",
                                "tensor model " + std::to_string(u) + ": " +
                                    sc->describe({n, f}) + " vs " + tc->describe({m, g}));
            }
    }
    out.report.count("derived-interchange", cases, true);
  }
  return out;
}

}  // namespace catcom
