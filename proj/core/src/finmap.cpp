#include "catcom/finmap.hpp"

#include <algorithm>
#include <numeric>

#include "catcom/error.hpp"

namespace catcom {

FinMap::FinMap(std::size_t domain, std::size_t codomain,
               std::vector<std::size_t> values)
    : codomain_(codomain), values_(std::move(values)) {
  if (values_.size() != domain)
    throw InputError("FinMap: value list length differs from domain");
  for (auto v : values_)
    if (v >= codomain) throw InputError("FinMap: value out of range");
}

FinMap FinMap::identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return FinMap(n, n, std::move(v));
}

bool FinMap::is_bijective() const {
  if (domain() != codomain_) return false;
  std::vector<bool> seen(codomain_, false);
  for (auto v : values_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool FinMap::is_identity() const {
  if (domain() != codomain_) return false;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != i) return false;
  return true;
}

std::string FinMap::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(values_[i] + 1);
  }
  return s + "]";
}

FinMap compose(const FinMap& v, const FinMap& u) {
  if (u.codomain() != v.domain())
    throw InputError("compose: FinMaps are not composable");
  std::vector<std::size_t> out(u.domain());
  for (std::size_t i = 0; i < u.domain(); ++i) out[i] = v(u(i));
  return FinMap(u.domain(), v.codomain(), std::move(out));
}

Permutation inverse(const Permutation& p) {
  if (!p.is_bijective()) throw InputError("inverse: not a permutation");
  std::vector<std::size_t> out(p.domain());
  for (std::size_t i = 0; i < p.domain(); ++i) out[p(i)] = i;
  return Permutation(p.domain(), p.domain(), std::move(out));
}

void for_each_map(std::size_t n, std::size_t m,
                  const std::function<void(const FinMap&)>& fn) {
  if (n > 0 && m == 0) return;
  std::vector<std::size_t> v(n, 0);
  while (true) {
    fn(FinMap(n, m, v));
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++v[pos] < m) break;
      v[pos] = 0;
      if (pos == 0) return;
    }
    if (n == 0) return;
  }
}

std::vector<FinMap> all_maps(std::size_t n, std::size_t m) {
  std::vector<FinMap> out;
  for_each_map(n, m, [&](const FinMap& u) { out.push_back(u); });
  return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(n, n, v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

FinMap row_injection(std::size_t i, std::size_t n, std::size_t m) {
  std::vector<std::size_t> v(m);
  for (std::size_t j = 0; j < m; ++j) v[j] = flatten(i, j, m);
  return FinMap(m, n * m, std::move(v));
}

FinMap column_injection(std::size_t j, std::size_t n, std::size_t m) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = flatten(i, j, m);
  return FinMap(n, n * m, std::move(v));
}

FinMap product_map(const FinMap& u, const FinMap& v) {
  const auto n = u.domain(), m = v.domain();
  std::vector<std::size_t> out(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      out[flatten(i, j, m)] = flatten(u(i), v(j), v.codomain());
  return FinMap(n * m, u.codomain() * v.codomain(), std::move(out));
}

Permutation transpose_permutation(std::size_t n, std::size_t m) {
  std::vector<std::size_t> out(n * m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) out[flatten(j, i, n)] = flatten(i, j, m);
  return Permutation(n * m, n * m, std::move(out));
}

Permutation block_sum(std::span<const Permutation> blocks) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.domain();
  std::vector<std::size_t> out;
  out.reserve(total);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t o = 0; o < b.domain(); ++o) out.push_back(offset + b(o));
    offset += b.domain();
  }
  return Permutation(total, total, std::move(out));
}

Permutation block_permutation(const Permutation& rho,
                              std::span<const std::size_t> sizes) {
  if (rho.domain() != sizes.size())
    throw InputError("block_permutation: size list does not match permutation");
  std::vector<std::size_t> offsets(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i)
    offsets[i + 1] = offsets[i] + sizes[i];
  std::vector<std::size_t> out;
  out.reserve(offsets.back());
  for (std::size_t p = 0; p < rho.domain(); ++p) {
    const auto block = rho(p);
    for (std::size_t o = 0; o < sizes[block]; ++o)
      out.push_back(offsets[block] + o);
  }
  return Permutation(offsets.back(), offsets.back(), std::move(out));
}

}  // namespace catcom
