#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "catcom/model.hpp"
#include "catcom/term.hpp"

namespace catcom {

// Evidence that lhs ~ rhs in the congruence generated by all equation
// instances inside the bounded term universe.
struct Proved {
  std::size_t universe_size = 0;
  std::size_t instances = 0;
  std::size_t congruence_rounds = 0;
};

// A model and assignment on which the two sides differ.
struct Refuted {
  FiniteModel model;
  std::vector<int> assignment;
  int lhs_value = 0;
  int rhs_value = 0;
};

struct Unknown {
  std::string exhausted;       // which bound ran out, e.g. "depth=3 model-bound=2"
  bool resource_limit = false;  // true when a ceiling (not a bound) stopped the search
  std::string diagnostic;
};

using EqualityVerdict = std::variant<Proved, Refuted, Unknown>;

struct DecideOptions {
  std::size_t depth_bound = 5;  // maximum term size (application nodes)
  std::size_t model_bound = 4;  // largest carrier searched for a refutation
  bool search_proof = true;
  bool search_model = true;
  std::size_t max_universe = 3'000'000;
  std::size_t max_model_nodes = 20'000'000;
};

// Sound, incomplete equality test in the free model of a presentation.
// Proved only via a bounded congruence-closure derivation; Refuted only with
// a concrete model of size <= model_bound (smallest size first, then
// lexicographically first model and assignment). Throws InputError when a
// bound is zero or the equation is not over the presentation's signature.
EqualityVerdict decide_equal(const Presentation& pres, const Equation& eq,
                             const DecideOptions& options = {});

// Re-evaluates a refutation certificate: true when lhs and rhs differ.
bool verify_refutation(const Equation& eq, const Refuted& r);

inline bool is_proved(const EqualityVerdict& v) { return std::holds_alternative<Proved>(v); }
inline bool is_refuted(const EqualityVerdict& v) { return std::holds_alternative<Refuted>(v); }
inline bool is_unknown(const EqualityVerdict& v) { return std::holds_alternative<Unknown>(v); }

}  // namespace catcom
