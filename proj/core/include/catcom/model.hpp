#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "catcom/algebra.hpp"
#include "catcom/term.hpp"

namespace catcom {

// Interpretation of a presentation on the carrier {0..k-1}. Every equation
// of the presentation holds under all assignments; the constructor checks it.
class FiniteModel {
 public:
  FiniteModel(std::shared_ptr<const Presentation> presentation, std::size_t k,
              std::vector<FunctionTable> tables);

  // Skips the equation check; for tables produced by the enumerator.
  static FiniteModel trusted(std::shared_ptr<const Presentation> presentation, std::size_t k,
                             std::vector<FunctionTable> tables);
  // Matches algebra symbols to the presentation's by name.
  static FiniteModel from_algebra(std::shared_ptr<const Presentation> presentation,
                                  const FiniteAlgebra& algebra);

  const Presentation& presentation() const { return *presentation_; }
  const std::shared_ptr<const Presentation>& presentation_ptr() const { return presentation_; }
  std::size_t carrier() const { return k_; }
  const std::vector<FunctionTable>& tables() const { return tables_; }
  const FunctionTable& table(std::size_t symbol) const { return tables_[symbol]; }
  const FunctionTable& table(std::string_view symbol) const;

  // The model as a plain algebra (the dump format of models).
  FiniteAlgebra to_algebra(std::string name = {}) const;

  friend bool operator==(const FiniteModel& a, const FiniteModel& b) {
    return a.k_ == b.k_ && a.tables_ == b.tables_;
  }

 private:
  FiniteModel() = default;
  std::shared_ptr<const Presentation> presentation_;
  std::size_t k_ = 0;
  std::vector<FunctionTable> tables_;
};

struct ModelHom {
  std::vector<int> map;
  friend bool operator==(const ModelHom&, const ModelHom&) = default;
};

struct EnumerationOptions {
  // Ceiling on search nodes (cell assignments) before LimitError.
  std::size_t max_nodes = 200'000'000;
};

int evaluate_term(const FiniteModel& m, const Term& t, std::span<const int> assignment);

// First equation instance violated by the tables, as "eq @ assignment";
// empty when all equations hold.
std::string first_violation(const Presentation& p, std::size_t k,
                            const std::vector<FunctionTable>& tables);

// Visits every model on {0..k-1} in lexicographic order of the concatenated
// tables (symbols in declaration order). The visitor returns false to stop.
// Backtracks over table cells, pruning on equation instances as soon as
// both sides are determined. Throws LimitError past the node ceiling.
void for_each_model(const Presentation& p, std::size_t k,
                    const std::function<bool(const std::vector<FunctionTable>&)>& visit,
                    const EnumerationOptions& options = {});

std::vector<FiniteModel> enumerate_models(std::shared_ptr<const Presentation> p, std::size_t k,
                                          const EnumerationOptions& options = {});
std::vector<FiniteModel> enumerate_models(const Presentation& p, std::size_t k,
                                          const EnumerationOptions& options = {});

bool is_homomorphism(const FiniteModel& a, const FiniteModel& b, std::span<const int> map);
// All homomorphisms in lexicographic order of their maps. Throws InputError
// when the models interpret different signatures.
std::vector<ModelHom> enumerate_homs(const FiniteModel& a, const FiniteModel& b);

struct CommutingPairVerdict {
  bool commutes = true;
  // First failing pair of generating symbols and input, when !commutes.
  std::string s_symbol;
  std::string t_symbol;
  std::vector<int> input;
  explicit operator bool() const { return commutes; }
};

// True iff every pair of generating operations interchanges as concrete
// functions (equivalently, every T-operation is an S-model homomorphism).
// Throws InputError on a carrier mismatch.
CommutingPairVerdict is_commuting_pair(const FiniteModel& s_model, const FiniteModel& t_model);

}  // namespace catcom
