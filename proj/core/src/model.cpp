#include "catcom/model.hpp"

#include <algorithm>

#include "catcom/error.hpp"
#include "compiled_term.hpp"

namespace catcom {

namespace detail {

CompiledTerm::CompiledTerm(const Term& t, const Signature& sig) {
  // Post-order: children are emitted before their parent.
  auto emit = [&](auto&& self, const Term& s) -> std::size_t {
    if (s.is_var()) {
      nodes_.push_back({-1, s.var_index() - 1, 0, 0});
      return nodes_.size() - 1;
    }
    const auto idx = sig.find(s.symbol());
    if (!idx) throw InputError("unknown symbol '" + s.symbol() + "'");
    std::vector<std::size_t> kids;
    for (const auto& a : s.args()) kids.push_back(self(self, a));
    const auto first = children_.size();
    children_.insert(children_.end(), kids.begin(), kids.end());
    nodes_.push_back({static_cast<int>(*idx), 0, first, kids.size()});
    return nodes_.size() - 1;
  };
  emit(emit, t);
}

int CompiledTerm::evaluate(std::span<const FunctionTable> tables, std::size_t k,
                           std::span<const int> assignment, std::vector<int>& scratch) const {
  scratch.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& n = nodes_[i];
    if (n.symbol < 0) {
      scratch[i] = assignment[n.var];
      continue;
    }
    std::size_t idx = 0;
    for (std::size_t c = 0; c < n.arity; ++c) {
      const int v = scratch[children_[n.first_child + c]];
      if (v < 0) return -1;
      idx = idx * k + static_cast<std::size_t>(v);
    }
    const int v = tables[static_cast<std::size_t>(n.symbol)][idx];
    if (v < 0) return -1;
    scratch[i] = v;
  }
  return scratch.back();
}

}  // namespace detail

namespace {

struct Instance {
  std::size_t equation;
  std::vector<int> assignment;
};

std::vector<Instance> all_instances(const Presentation& p, std::size_t k) {
  std::vector<Instance> out;
  for (std::size_t e = 0; e < p.equations().size(); ++e) {
    const auto vc = p.equations()[e].var_count;
    const auto count = power(k, vc);
    std::vector<int> a(vc);
    for (std::size_t idx = 0; idx < count; ++idx) {
      decode_index(idx, k, a);
      out.push_back({e, a});
    }
  }
  return out;
}

std::string describe_instance(const Presentation& p, const Instance& inst) {
  std::string s = p.equations()[inst.equation].to_string() + " @ ";
  for (std::size_t i = 0; i < inst.assignment.size(); ++i) {
    if (i) s += ",";
    s += "x" + std::to_string(i + 1) + "=" + std::to_string(inst.assignment[i]);
  }
  return s;
}

std::string attempted_bound(const Presentation& p, std::size_t k) {
  const auto a = p.signature().max_arity();
  return std::to_string(k) + "^(" + std::to_string(k) + "^" + std::to_string(a) +
         ") tables per symbol";
}

}  // namespace

FiniteModel::FiniteModel(std::shared_ptr<const Presentation> presentation, std::size_t k,
                         std::vector<FunctionTable> tables)
    : presentation_(std::move(presentation)), k_(k), tables_(std::move(tables)) {
  // Reuse the algebra constructor for shape checks.
  FiniteAlgebra shape(presentation_->name(), k_, presentation_->signature(), tables_);
  if (auto v = first_violation(*presentation_, k_, tables_); !v.empty())
    throw InputError("not a model of '" + presentation_->name() + "': " + v);
}

FiniteModel FiniteModel::trusted(std::shared_ptr<const Presentation> presentation, std::size_t k,
                                 std::vector<FunctionTable> tables) {
  FiniteModel m;
  m.presentation_ = std::move(presentation);
  m.k_ = k;
  m.tables_ = std::move(tables);
  return m;
}

FiniteModel FiniteModel::from_algebra(std::shared_ptr<const Presentation> presentation,
                                      const FiniteAlgebra& algebra) {
  std::vector<FunctionTable> tables;
  for (const auto& s : presentation->signature().symbols()) {
    const auto idx = algebra.signature().find(s.name);
    if (!idx) throw InputError("algebra lacks symbol '" + s.name + "'");
    if (algebra.signature().symbols()[*idx].arity != s.arity)
      throw InputError("algebra symbol '" + s.name + "' has the wrong arity");
    tables.push_back(algebra.table(*idx));
  }
  return FiniteModel(std::move(presentation), algebra.carrier(), std::move(tables));
}

const FunctionTable& FiniteModel::table(std::string_view symbol) const {
  const auto idx = presentation_->signature().find(symbol);
  if (!idx) throw InputError("model has no symbol '" + std::string(symbol) + "'");
  return tables_[*idx];
}

FiniteAlgebra FiniteModel::to_algebra(std::string name) const {
  if (name.empty()) name = presentation_->name() + "_model";
  return FiniteAlgebra(std::move(name), k_, presentation_->signature(), tables_);
}

int evaluate_term(const FiniteModel& m, const Term& t, std::span<const int> assignment) {
  for (auto v : assignment)
    if (v < 0 || static_cast<std::size_t>(v) >= m.carrier())
      throw InputError("assignment value outside carrier");
  return evaluate(m.to_algebra(), t, assignment);
}

std::string first_violation(const Presentation& p, std::size_t k,
                            const std::vector<FunctionTable>& tables) {
  std::vector<detail::CompiledTerm> lhs, rhs;
  for (const auto& e : p.equations()) {
    lhs.emplace_back(e.lhs, p.signature());
    rhs.emplace_back(e.rhs, p.signature());
  }
  std::vector<int> scratch;
  for (const auto& inst : all_instances(p, k)) {
    const int a = lhs[inst.equation].evaluate(tables, k, inst.assignment, scratch);
    const int b = rhs[inst.equation].evaluate(tables, k, inst.assignment, scratch);
    if (a != b) return describe_instance(p, inst);
  }
  return {};
}

void for_each_model(const Presentation& p, std::size_t k,
                    const std::function<bool(const std::vector<FunctionTable>&)>& visit,
                    const EnumerationOptions& options) {
  const auto& syms = p.signature().symbols();
  std::vector<FunctionTable> tables;
  struct Cell {
    std::size_t symbol;
    std::size_t index;
  };
  std::vector<Cell> cells;
  for (std::size_t s = 0; s < syms.size(); ++s) {
    const auto len = power(k, syms[s].arity);
    tables.emplace_back(len, -1);
    for (std::size_t i = 0; i < len; ++i) cells.push_back({s, i});
  }
  std::vector<detail::CompiledTerm> lhs, rhs;
  for (const auto& e : p.equations()) {
    lhs.emplace_back(e.lhs, p.signature());
    rhs.emplace_back(e.rhs, p.signature());
  }
  const auto instances = all_instances(p, k);
  std::vector<int> scratch;

  // Returns false on a violated instance; otherwise keeps the undetermined.
  auto filter = [&](const std::vector<std::size_t>& in, std::vector<std::size_t>& out) {
    out.clear();
    for (auto i : in) {
      const auto& inst = instances[i];
      const int a = lhs[inst.equation].evaluate(tables, k, inst.assignment, scratch);
      if (a < 0) {
        out.push_back(i);
        continue;
      }
      const int b = rhs[inst.equation].evaluate(tables, k, inst.assignment, scratch);
      if (b < 0) {
        out.push_back(i);
        continue;
      }
      if (a != b) return false;
    }
    return true;
  };

  std::vector<std::vector<std::size_t>> pending(cells.size() + 1);
  std::vector<std::size_t> root(instances.size());
  for (std::size_t i = 0; i < root.size(); ++i) root[i] = i;
  if (!filter(root, pending[0])) return;

  std::size_t nodes = 0;
  bool stopped = false;
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == cells.size()) {
      if (!visit(tables)) stopped = true;
      return;
    }
    const auto& cell = cells[depth];
    for (std::size_t v = 0; v < k && !stopped; ++v) {
      if (++nodes > options.max_nodes)
        throw LimitError("model enumeration exceeded " + std::to_string(options.max_nodes) +
                             " search nodes for '" + p.name() + "' on " + std::to_string(k) +
                             " elements",
                         attempted_bound(p, k));
      tables[cell.symbol][cell.index] = static_cast<int>(v);
      if (filter(pending[depth], pending[depth + 1])) self(self, depth + 1);
    }
    tables[cell.symbol][cell.index] = -1;
  };
  search(search, 0);
}

std::vector<FiniteModel> enumerate_models(std::shared_ptr<const Presentation> p, std::size_t k,
                                          const EnumerationOptions& options) {
  std::vector<FiniteModel> out;
  for_each_model(
      *p, k,
      [&](const std::vector<FunctionTable>& tables) {
        out.push_back(FiniteModel::trusted(p, k, tables));
        return true;
      },
      options);
  return out;
}

std::vector<FiniteModel> enumerate_models(const Presentation& p, std::size_t k,
                                          const EnumerationOptions& options) {
  return enumerate_models(std::make_shared<const Presentation>(p), k, options);
}

bool is_homomorphism(const FiniteModel& a, const FiniteModel& b, std::span<const int> map) {
  const auto& sa = a.presentation().signature();
  const auto& sb = b.presentation().signature();
  if (sa.symbols() != sb.symbols())
    throw InputError("homomorphism between models of different signatures");
  if (map.size() != a.carrier()) throw InputError("homomorphism map has the wrong length");
  const auto ka = a.carrier(), kb = b.carrier();
  std::vector<int> args, mapped;
  for (std::size_t s = 0; s < sa.size(); ++s) {
    const auto n = sa.symbols()[s].arity;
    args.resize(n);
    mapped.resize(n);
    const auto count = power(ka, n);
    for (std::size_t idx = 0; idx < count; ++idx) {
      decode_index(idx, ka, args);
      for (std::size_t i = 0; i < n; ++i) mapped[i] = map[static_cast<std::size_t>(args[i])];
      if (map[static_cast<std::size_t>(a.table(s)[idx])] != b.table(s)[table_index(mapped, kb)])
        return false;
    }
  }
  return true;
}

std::vector<ModelHom> enumerate_homs(const FiniteModel& a, const FiniteModel& b) {
  if (a.presentation().signature().symbols() != b.presentation().signature().symbols())
    throw InputError("enumerate_homs: models interpret different signatures");
  std::vector<ModelHom> out;
  const auto ka = a.carrier(), kb = b.carrier();
  if (ka > 0 && kb == 0) return out;
  const auto count = power(kb, ka);
  std::vector<int> map(ka);
  for (std::size_t idx = 0; idx < count; ++idx) {
    decode_index(idx, kb, map);
    if (is_homomorphism(a, b, map)) out.push_back({map});
  }
  return out;
}

CommutingPairVerdict is_commuting_pair(const FiniteModel& s_model, const FiniteModel& t_model) {
  if (s_model.carrier() != t_model.carrier())
    throw InputError("is_commuting_pair: models live on different carriers");
  const auto k = s_model.carrier();
  const auto& ss = s_model.presentation().signature().symbols();
  const auto& ts = t_model.presentation().signature().symbols();
  for (std::size_t a = 0; a < ss.size(); ++a) {
    for (std::size_t b = 0; b < ts.size(); ++b) {
      auto bad = interchange_counterexample(s_model.table(a), ss[a].arity, t_model.table(b),
                                            ts[b].arity, k);
      if (bad) return {false, ss[a].name, ts[b].name, *bad};
    }
  }
  return {};
}

}  // namespace catcom
