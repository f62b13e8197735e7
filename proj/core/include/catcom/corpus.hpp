#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "catcom/algebra.hpp"
#include "catcom/decide.hpp"
#include "catcom/operad.hpp"
#include "catcom/operad_presentation.hpp"
#include "catcom/term.hpp"

namespace catcom {

// Built-in theories: sl, monoid, cmonoid, grp, pointed, empty, z2vec.
std::vector<std::string> builtin_theory_names();
Presentation builtin_theory(std::string_view name);

// Built-in algebras on {0, 1}: sl (join), latt (and, or), z2 (add, zero),
// pointed (constant c) and b0 .. b15, the binary operation whose table read
// as a 4-bit number (input 00 first) is the index.
std::vector<std::string> builtin_algebra_names();
FiniteAlgebra builtin_algebra(std::string_view name);

// The algebras whose clones form the oracle-equivalence corpus, in order:
// sl, latt, pointed, z2, then b0 .. b15.
std::vector<FiniteAlgebra> clone_corpus();

// ass, com or unit truncated at K.
std::shared_ptr<const SymOperadTruncation> builtin_operad(std::string_view name, std::size_t K);

// ass, ass_u, com, com_u and unit.
std::vector<std::string> builtin_operad_presentation_names();
OperadPresentation builtin_operad_presentation(std::string_view name);

// A presentation with a goal equation.
struct Problem {
  Presentation presentation;
  Equation goal;
};

// Problem file grammar: a theory file followed by
//   "goal" term "=" term ";"
Problem parse_problem(std::string_view text);
std::string render_problem(const Problem& p);

struct GenOptions {
  std::size_t max_ops = 3;
  std::size_t max_arity = 2;
  std::size_t max_equations = 3;
  std::size_t max_term_size = 3;
  std::size_t max_vars = 3;
};

// Random problem from a seed (std::mt19937_64). About a quarter of the goals
// are substitution instances of an axiom, so every verdict kind occurs.
Problem generate_problem(std::uint64_t seed, const GenOptions& options = {});

struct StressOptions {
  GenOptions gen;
  // Every problem is decided under each of these (depth, model) bounds.
  std::vector<std::pair<std::size_t, std::size_t>> bounds = {{3, 2}, {4, 3}};
  std::size_t max_model_nodes = 200'000;
  std::size_t max_universe = 20'000;
};

struct StressReport {
  std::size_t problems = 0;
  std::size_t proved = 0;
  std::size_t refuted = 0;
  std::size_t unknown = 0;
  // Problems with Proved under one bound choice and Refuted under another.
  std::size_t contradictions = 0;
  // Refuted certificates that fail to re-verify or whose model violates an
  // axiom.
  std::size_t bad_certificates = 0;
  std::string first_problem;
};

// Decides problems seed, seed + 1, ..., seed + count - 1 in parallel.
StressReport soundness_stress(std::uint64_t seed, std::size_t count,
                              const StressOptions& options = {});

}  // namespace catcom
