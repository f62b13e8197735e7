#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "catcom/algebra.hpp"
#include "catcom/term.hpp"

namespace catcom::detail {

// A term flattened into post-order with symbol indices resolved, for
// repeated evaluation against (possibly partial) tables.
class CompiledTerm {
 public:
  CompiledTerm(const Term& t, const Signature& sig);

  // Evaluates with tables whose undefined cells hold -1; returns -1 when the
  // value depends on an undefined cell.
  int evaluate(std::span<const FunctionTable> tables, std::size_t k,
               std::span<const int> assignment, std::vector<int>& scratch) const;

 private:
  struct Node {
    int symbol;  // -1 for a variable
    std::size_t var;
    std::size_t first_child;  // into children_
    std::size_t arity;
  };
  std::vector<Node> nodes_;
  std::vector<std::size_t> children_;
};

}  // namespace catcom::detail
