#pragma once

#include <catcom/algebra.hpp>

#include <string>

// Small finite algebras shared by tests.
namespace catcom::test {

struct OpTable {
  std::string name;
  std::size_t arity;
  FunctionTable table;
};

inline FiniteAlgebra make_algebra(std::string name, std::size_t k, std::vector<OpTable> ops) {
  Signature sig(name);
  std::vector<FunctionTable> tables;
  for (auto& op : ops) {
    sig.add(op.name, op.arity);
    tables.push_back(std::move(op.table));
  }
  return FiniteAlgebra(std::move(name), k, std::move(sig), std::move(tables));
}

inline FiniteAlgebra join_algebra() { return make_algebra("sl", 2, {{"join", 2, {0, 1, 1, 1}}}); }

inline FiniteAlgebra and_or_algebra() {
  return make_algebra("latt", 2, {{"and", 2, {0, 0, 0, 1}}, {"or", 2, {0, 1, 1, 1}}});
}

inline FiniteAlgebra z2_module() {
  return make_algebra("z2", 2, {{"add", 2, {0, 1, 1, 0}}, {"zero", 0, {0}}});
}

inline FiniteAlgebra pointed_algebra() { return make_algebra("pointed", 2, {{"c", 0, {0}}}); }

// The binary operation with table index code (bit i = value at input i).
inline FiniteAlgebra binary_boolean(unsigned code) {
  FunctionTable t(4);
  for (unsigned i = 0; i < 4; ++i) t[i] = static_cast<int>((code >> (3 - i)) & 1u);
  return make_algebra("b" + std::to_string(code), 2, {{"op", 2, t}});
}

}  // namespace catcom::test
