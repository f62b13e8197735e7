#include "catcom/algebra.hpp"

#include "catcom/error.hpp"
#include "lexer.hpp"

namespace catcom {

std::size_t power(std::size_t base, std::size_t exponent) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) r *= base;
  return r;
}

std::size_t table_index(std::span<const int> args, std::size_t k) {
  std::size_t idx = 0;
  for (auto a : args) idx = idx * k + static_cast<std::size_t>(a);
  return idx;
}

void decode_index(std::size_t index, std::size_t k, std::span<int> out) {
  for (std::size_t i = out.size(); i > 0; --i) {
    out[i - 1] = static_cast<int>(index % k);
    index /= k;
  }
}

FunctionTable projection_table(std::size_t k, std::size_t n, std::size_t i) {
  FunctionTable t(power(k, n));
  std::vector<int> args(n);
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    decode_index(idx, k, args);
    t[idx] = args[i];
  }
  return t;
}

std::optional<std::vector<int>> interchange_counterexample(
    const FunctionTable& f, std::size_t n, const FunctionTable& g, std::size_t m,
    std::size_t k) {
  const auto total = power(k, n * m);
  std::vector<int> x(n * m), row(m), col(n), outer_f(n), outer_g(m);
  for (std::size_t idx = 0; idx < total; ++idx) {
    decode_index(idx, k, x);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) row[j] = x[i * m + j];
      outer_f[i] = g[table_index(row, k)];
    }
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < n; ++i) col[i] = x[i * m + j];
      outer_g[j] = f[table_index(col, k)];
    }
    if (f[table_index(outer_f, k)] != g[table_index(outer_g, k)]) return x;
  }
  return std::nullopt;
}

FiniteAlgebra::FiniteAlgebra(std::string name, std::size_t k, Signature signature,
                             std::vector<FunctionTable> tables)
    : name_(std::move(name)), k_(k), signature_(std::move(signature)), tables_(std::move(tables)) {
  if (tables_.size() != signature_.size())
    throw InputError("algebra '" + name_ + "': one table per symbol required");
  for (std::size_t s = 0; s < tables_.size(); ++s) {
    const auto& sym = signature_.symbols()[s];
    if (tables_[s].size() != power(k_, sym.arity))
      throw InputError("algebra '" + name_ + "': table of '" + sym.name + "' has length " +
                       std::to_string(tables_[s].size()) + ", expected " +
                       std::to_string(power(k_, sym.arity)));
    for (auto v : tables_[s])
      if (v < 0 || static_cast<std::size_t>(v) >= k_)
        throw InputError("algebra '" + name_ + "': value " + std::to_string(v) +
                         " of '" + sym.name + "' outside carrier");
  }
}

const FunctionTable& FiniteAlgebra::table(std::string_view symbol) const {
  const auto idx = signature_.find(symbol);
  if (!idx) throw InputError("algebra '" + name_ + "' has no symbol '" + std::string(symbol) + "'");
  return tables_[*idx];
}

FiniteAlgebra parse_algebra(std::string_view text) {
  detail::TokenStream ts(text);
  ts.expect("algebra");
  auto name = ts.expect_identifier("algebra name");
  ts.expect("{");
  ts.expect("carrier");
  const auto k = ts.expect_number("carrier size");
  ts.expect(";");
  Signature sig(name);
  std::vector<FunctionTable> tables;
  while (!ts.accept("}")) {
    ts.expect("op");
    const auto tok = ts.peek();
    auto sym = ts.expect_identifier("operation name");
    ts.expect("/");
    const auto arity = ts.expect_number("arity");
    ts.expect("=");
    ts.expect("[");
    FunctionTable t;
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
    if (sig.contains(sym)) ts.fail_at(tok, "duplicate symbol '" + sym + "'");
    if (t.size() != power(k, arity))
      ts.fail_at(tok, "table of '" + sym + "' has " + std::to_string(t.size()) +
                          " entries, expected " + std::to_string(power(k, arity)));
    sig.add(sym, arity);
    tables.push_back(std::move(t));
  }
  if (!ts.at_end()) ts.fail("trailing input after algebra");
  return FiniteAlgebra(std::move(name), k, std::move(sig), std::move(tables));
}

std::string render_algebra(const FiniteAlgebra& a, bool compact) {
  const std::string sep = compact ? " " : "\n  ";
  std::string out = "algebra " + a.name() + " {" + sep + "carrier " + std::to_string(a.carrier()) + ";";
  for (std::size_t s = 0; s < a.signature().size(); ++s) {
    const auto& sym = a.signature().symbols()[s];
    out += sep + "op " + sym.name + "/" + std::to_string(sym.arity) + " = [";
    for (std::size_t i = 0; i < a.table(s).size(); ++i) {
      if (i) out += ",";
      out += std::to_string(a.table(s)[i]);
    }
    out += "];";
  }
  out += compact ? " }" : "\n}\n";
  return out;
}

int evaluate(const FiniteAlgebra& a, const Term& t, std::span<const int> assignment) {
  if (t.is_var()) {
    if (t.var_index() > assignment.size())
      throw InputError("unbound variable x" + std::to_string(t.var_index()));
    return assignment[t.var_index() - 1];
  }
  const auto idx = a.signature().find(t.symbol());
  if (!idx) throw InputError("unknown symbol '" + t.symbol() + "'");
  std::vector<int> args;
  args.reserve(t.args().size());
  for (const auto& s : t.args()) args.push_back(evaluate(a, s, assignment));
  return a.apply(*idx, args);
}

}  // namespace catcom
