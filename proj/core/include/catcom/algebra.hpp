#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "catcom/term.hpp"

namespace catcom {

// Function carrier^n -> carrier as a row-major value table of length k^n:
// the entry for (a_1, ..., a_n) sits at index sum a_i * k^(n-i).
using FunctionTable = std::vector<int>;

std::size_t power(std::size_t base, std::size_t exponent);
std::size_t table_index(std::span<const int> args, std::size_t k);
// Inverse of table_index: decodes index into n digits base k.
void decode_index(std::size_t index, std::size_t k, std::span<int> out);

FunctionTable projection_table(std::size_t k, std::size_t n, std::size_t i);

// Returns the first input (as n*m values, row-major in (i, j)) on which
//   f(g(x_{i1..im}) for i) and g(f(x_{1j..nj}) for j)
// differ, or nullopt when the two n*m-ary functions agree everywhere.
std::optional<std::vector<int>> interchange_counterexample(
    const FunctionTable& f, std::size_t n, const FunctionTable& g, std::size_t m,
    std::size_t k);

// A finite set {0..k-1} with one function table per signature symbol.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  // Throws InputError when a table length differs from k^arity or a value
  // is out of range.
  FiniteAlgebra(std::string name, std::size_t k, Signature signature,
                std::vector<FunctionTable> tables);

  const std::string& name() const { return name_; }
  std::size_t carrier() const { return k_; }
  const Signature& signature() const { return signature_; }
  const std::vector<FunctionTable>& tables() const { return tables_; }
  const FunctionTable& table(std::size_t symbol) const { return tables_[symbol]; }
  const FunctionTable& table(std::string_view symbol) const;

  int apply(std::size_t symbol, std::span<const int> args) const {
    return tables_[symbol][table_index(args, k_)];
  }

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

 private:
  std::string name_;
  std::size_t k_ = 0;
  Signature signature_;
  std::vector<FunctionTable> tables_;
};

// Algebra file grammar:
//   algebra IDENT { carrier NAT; op IDENT/NAT = [v,v,...]; ... }
FiniteAlgebra parse_algebra(std::string_view text);
// Single-line form when compact is true (used for witnesses).
std::string render_algebra(const FiniteAlgebra& a, bool compact = false);

// Value of a term under an assignment of x1.. to carrier elements. Throws
// InputError on an unbound variable or unknown symbol.
int evaluate(const FiniteAlgebra& a, const Term& t, std::span<const int> assignment);

}  // namespace catcom
