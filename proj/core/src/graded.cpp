#include "catcom/graded.hpp"

#include "catcom/error.hpp"
#include "lexer.hpp"

namespace catcom {

namespace {

int mod(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int power_mod(int base, std::size_t e, int p) {
  long long r = 1 % p;
  for (std::size_t i = 0; i < e; ++i) r = r * base % p;
  return static_cast<int>(r);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

GradedAlgebra::GradedAlgebra(std::string name, int p, int q, std::size_t D,
                             std::vector<BasisElement> basis, std::size_t unit,
                             std::vector<std::vector<GradedVector>> products)
    : name_(std::move(name)), p_(p), q_(q), D_(D), basis_(std::move(basis)), unit_(unit),
      products_(std::move(products)) {
  if (!is_prime(p)) throw InputError("field modulus " + std::to_string(p) + " is not prime");
  q_ = mod(q, p);
  if (q_ == 0) throw InputError("q must be a unit of the field");
  const std::size_t n = basis_.size();
  if (unit_ >= n) throw InputError("unit is not a basis element");
  if (basis_[unit_].grade != 0) throw InputError("unit must have grade 0");
  for (const auto& b : basis_)
    if (b.grade > D_) throw InputError("basis element " + b.name + " exceeds grade bound");
  if (products_.size() != n) throw InputError("structure constants must cover every basis pair");
  for (auto& row : products_) {
    if (row.size() != n) throw InputError("structure constants must cover every basis pair");
    for (auto& v : row) {
      if (v.size() != n) throw InputError("product vector has wrong dimension");
      for (int& c : v) c = mod(c, p_);
    }
  }
}

GradedVector GradedAlgebra::basis_vector(std::size_t i) const {
  GradedVector v(basis_.size(), 0);
  v.at(i) = 1;
  return v;
}

GradedVector GradedAlgebra::multiply(const GradedVector& a, const GradedVector& b) const {
  const std::size_t n = basis_.size();
  if (a.size() != n || b.size() != n) throw InputError("vector has wrong dimension");
  GradedVector out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const long long c = static_cast<long long>(a[i]) * b[j] % p_;
      const auto& prod = products_[i][j];
      for (std::size_t k = 0; k < n; ++k) out[k] = mod(out[k] + c * prod[k], p_);
    }
  }
  return out;
}

GradedVector GradedAlgebra::scale(int c, const GradedVector& a) const {
  GradedVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod(static_cast<long long>(c) * a[i], p_);
  return out;
}

std::size_t GradedAlgebra::grade(const GradedVector& a) const {
  if (a.size() != basis_.size()) throw InputError("vector has wrong dimension");
  std::size_t g = 0;
  bool seen = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (mod(a[i], p_) == 0) continue;
    if (seen && basis_[i].grade != g)
      throw InputError("vector " + render_vector(a) + " is not homogeneous");
    g = basis_[i].grade;
    seen = true;
  }
  if (!seen) throw InputError("zero vector has no grade");
  return g;
}

std::size_t GradedAlgebra::find(std::string_view name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  throw InputError("unknown basis element '" + std::string(name) + "'");
}

std::string GradedAlgebra::render_vector(const GradedVector& a) const {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(a[i]) + "*" + basis_[i].name;
  }
  return s.empty() ? "0" : s;
}

LawReport validate_graded(const GradedAlgebra& a) {
  LawReport report;
  const std::size_t n = a.dimension();
  std::size_t cases = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++cases;
      const auto& v = a.product(i, j);
      const std::size_t g = a.basis()[i].grade + a.basis()[j].grade;
      for (std::size_t k = 0; k < n; ++k)
        if (v[k] != 0 && a.basis()[k].grade != g)
          report.fail("grading", a.basis()[i].name + "*" + a.basis()[j].name);
      if (g > a.bound())
        for (int c : v)
          if (c != 0) report.fail("truncation", a.basis()[i].name + "*" + a.basis()[j].name);
    }
  report.count("grading", cases, true);
  const auto u = a.basis_vector(a.unit());
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = a.basis_vector(i);
    if (a.multiply(u, e) != e || a.multiply(e, u) != e) report.fail("unit", a.basis()[i].name);
  }
  report.count("unit", n, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto x = a.basis_vector(i), y = a.basis_vector(j), z = a.basis_vector(k);
        if (a.multiply(a.multiply(x, y), z) != a.multiply(x, a.multiply(y, z)))
          report.fail("associativity",
                      a.basis()[i].name + "," + a.basis()[j].name + "," + a.basis()[k].name);
      }
  report.count("associativity", n * n * n, true);
  return report;
}

GradedAlgebra quantum_plane(int p, int q, std::size_t D) {
  std::vector<BasisElement> basis;
  std::vector<std::pair<std::size_t, std::size_t>> exps;
  for (std::size_t g = 0; g <= D; ++g)
    for (std::size_t i = g + 1; i-- > 0;) {
      const std::size_t j = g - i;
      std::string name = g == 0 ? "one" : std::string(i, 'x') + std::string(j, 'y');
      basis.push_back({name, g});
      exps.emplace_back(i, j);
    }
  const std::size_t n = basis.size();
  auto index = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k)
      if (exps[k] == std::make_pair(i, j)) return k;
    return n;
  };
  std::vector<std::vector<GradedVector>> products(n, std::vector<GradedVector>(n, GradedVector(n, 0)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // x^i y^j x^k y^l = q^{jk} x^{i+k} y^{j+l}
      const auto [i, j] = exps[a];
      const auto [k, l] = exps[b];
      const std::size_t target = index(i + k, j + l);
      if (target == n) continue;
      products[a][b][target] = power_mod(mod(q, p), j * k, p);
    }
  return GradedAlgebra("qplane", p, q, D, std::move(basis), 0, std::move(products));
}

GradedVerdict graded_q_cospan_commutes(const GradedAlgebra& c, const GradedVector& f,
                                       const GradedVector& g) {
  const std::size_t r = c.grade(f);
  const std::size_t s = c.grade(g);
  if (r + s > c.bound()) throw BoundError("grades exceed the truncation", r + s);
  const int braid = power_mod(c.q(), r * s, c.p());
  const auto fg = c.multiply(f, g);
  const auto gf = c.multiply(g, f);
  return {fg == c.scale(braid, gf), gf == c.scale(braid, fg)};
}

namespace {

// Terms "c*id", "id" or "0", separated by '+'; a leading '-' negates a term.
GradedVector parse_combination(detail::TokenStream& ts, const std::vector<BasisElement>& basis,
                               int p) {
  GradedVector v(basis.size(), 0);
  auto lookup = [&](const detail::Token& tok) -> std::size_t {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].name == tok.text) return i;
    ts.fail_at(tok, "unknown basis element '" + tok.text + "'");
  };
  do {
    long long coeff = 1;
    bool negative = ts.accept("-");
    if (ts.peek().kind == detail::TokenKind::number) {
      coeff = static_cast<long long>(ts.expect_number("coefficient"));
      if (coeff == 0 && !ts.accept("*")) continue;
      if (coeff != 0) ts.expect("*");
    }
    const auto tok = ts.peek();
    ts.expect_identifier("basis element");
    const std::size_t i = lookup(tok);
    v[i] = mod(v[i] + (negative ? -coeff : coeff), p);
  } while (ts.accept("+"));
  return v;
}

}  // namespace

GradedAlgebra parse_graded(std::string_view text) {
  detail::TokenStream ts(text);
  ts.expect("graded");
  auto name = ts.expect_identifier("algebra name");
  ts.expect("{");
  ts.expect("p");
  const auto ptok = ts.peek();
  const int p = static_cast<int>(ts.expect_number("field modulus"));
  ts.expect(";");
  ts.expect("q");
  const int q = static_cast<int>(ts.expect_number("q"));
  ts.expect(";");
  ts.expect("D");
  const auto D = ts.expect_number("grade bound");
  ts.expect(";");
  ts.expect("basis");
  std::vector<BasisElement> basis;
  do {
    const auto tok = ts.peek();
    auto id = ts.expect_identifier("basis element");
    ts.expect(":");
    const auto g = ts.expect_number("grade");
    for (const auto& b : basis)
      if (b.name == id) ts.fail_at(tok, "duplicate basis element '" + id + "'");
    basis.push_back({id, g});
  } while (ts.accept(","));
  ts.expect(";");
  const std::size_t n = basis.size();
  std::size_t unit = n;
  std::vector<std::vector<GradedVector>> products(n, std::vector<GradedVector>(n, GradedVector(n, 0)));
  std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
  auto index_of = [&](const detail::Token& tok) -> std::size_t {
    for (std::size_t i = 0; i < n; ++i)
      if (basis[i].name == tok.text) return i;
    ts.fail_at(tok, "unknown basis element '" + tok.text + "'");
  };
  while (!ts.accept("}")) {
    if (ts.accept("unit")) {
      const auto tok = ts.peek();
      ts.expect_identifier("unit");
      unit = index_of(tok);
      ts.expect(";");
      continue;
    }
    ts.expect("mul");
    const auto ltok = ts.peek();
    ts.expect_identifier("basis element");
    ts.expect("*");
    const auto rtok = ts.peek();
    ts.expect_identifier("basis element");
    ts.expect("=");
    const std::size_t i = index_of(ltok), j = index_of(rtok);
    products[i][j] = parse_combination(ts, basis, p > 0 ? p : 1);
    given[i][j] = true;
    ts.expect(";");
  }
  if (!ts.at_end()) ts.fail("trailing input after graded algebra");
  if (unit == n) ts.fail_at(ptok, "graded algebra needs a unit");
  for (std::size_t i = 0; i < n; ++i) {
    if (!given[unit][i]) products[unit][i][i] = 1;
    if (!given[i][unit]) products[i][unit][i] = 1;
  }
  try {
    return GradedAlgebra(std::move(name), p, q, D, std::move(basis), unit, std::move(products));
  } catch (const InputError& e) {
    ts.fail_at(ptok, e.what());
  }
}

GradedVector parse_graded_vector(const GradedAlgebra& a, std::string_view text) {
  detail::TokenStream ts(text);
  auto v = parse_combination(ts, a.basis(), a.p());
  if (!ts.at_end()) ts.fail("trailing input after vector");
  return v;
}

std::string render_graded(const GradedAlgebra& a) {
  std::string out = "graded " + a.name() + " {\n  p " + std::to_string(a.p()) + "; q " +
                    std::to_string(a.q()) + "; D " + std::to_string(a.bound()) + ";\n  basis ";
  for (std::size_t i = 0; i < a.dimension(); ++i)
    out += (i ? ", " : "") + a.basis()[i].name + ":" + std::to_string(a.basis()[i].grade);
  out += ";\n  unit " + a.basis()[a.unit()].name + ";\n";
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (std::size_t j = 0; j < a.dimension(); ++j) {
      if (i == a.unit() || j == a.unit()) continue;
      const auto& v = a.product(i, j);
      bool zero = true;
      for (int c : v) zero = zero && c == 0;
      if (zero) continue;
      out += "  mul " + a.basis()[i].name + "*" + a.basis()[j].name + " = " + a.render_vector(v) + ";\n";
    }
  return out + "}\n";
}

}  // namespace catcom
