#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace catcom {

// A function {0..domain-1} -> {0..codomain-1}: an arrow of the category of
// finite cardinals. Bijective FinMaps double as permutations.
//
// Double indices (i, j) with i < n, j < m are flattened row-major as
// i * m + j everywhere in the library.
class FinMap {
 public:
  FinMap() = default;
  FinMap(std::size_t domain, std::size_t codomain,
         std::vector<std::size_t> values);

  static FinMap identity(std::size_t n);

  std::size_t domain() const { return values_.size(); }
  std::size_t codomain() const { return codomain_; }
  const std::vector<std::size_t>& values() const { return values_; }
  std::size_t operator()(std::size_t i) const { return values_[i]; }

  bool is_bijective() const;
  bool is_identity() const;

  // 1-based rendering, e.g. "[2,1]".
  std::string to_string() const;

  friend bool operator==(const FinMap&, const FinMap&) = default;
  friend auto operator<=>(const FinMap&, const FinMap&) = default;

 private:
  std::size_t codomain_ = 0;
  std::vector<std::size_t> values_;
};

using Permutation = FinMap;

// (v . u)(i) = v(u(i)).
FinMap compose(const FinMap& v, const FinMap& u);
Permutation inverse(const Permutation& p);

// Calls fn for every map n -> m in lexicographic order of value lists.
void for_each_map(std::size_t n, std::size_t m,
                  const std::function<void(const FinMap&)>& fn);
std::vector<FinMap> all_maps(std::size_t n, std::size_t m);
std::vector<Permutation> all_permutations(std::size_t n);

inline std::size_t flatten(std::size_t i, std::size_t j, std::size_t m) {
  return i * m + j;
}

// m -> n*m, j |-> (i, j): places an m-ary operation in row i.
FinMap row_injection(std::size_t i, std::size_t n, std::size_t m);
// n -> n*m, i |-> (i, j): places an n-ary operation in column j.
FinMap column_injection(std::size_t j, std::size_t n, std::size_t m);
// (u x v)(i, j) = (u(i), v(j)) on flattened indices.
FinMap product_map(const FinMap& u, const FinMap& v);
// The permutation of n*m sending position (j, i) of an m-by-n layout to
// position (i, j) of the n-by-m layout.
Permutation transpose_permutation(std::size_t n, std::size_t m);
// rho_1 (+) ... (+) rho_k acting blockwise.
Permutation block_sum(std::span<const Permutation> blocks);
// Permutes blocks of the given sizes by rho: position (p, o) of the layout
// with block sizes sizes[rho(0)], sizes[rho(1)], ... goes to position
// (rho(p), o) of the original layout.
Permutation block_permutation(const Permutation& rho,
                              std::span<const std::size_t> sizes);

}  // namespace catcom
