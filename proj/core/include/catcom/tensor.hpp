#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "catcom/law_report.hpp"
#include "catcom/model.hpp"
#include "catcom/term.hpp"

namespace catcom {

// S + T with the symbol renaming applied to each side. A name used by both
// sides becomes name_1 on the left and name_2 on the right.
struct CoproductPresentation {
  Presentation presentation;
  // New name of every symbol, indexed like the source signatures.
  std::vector<std::string> left_names;
  std::vector<std::string> right_names;
};

CoproductPresentation coproduct_presentation(const Presentation& s, const Presentation& t);

// S + T plus the interchange equation of every pair of generating symbols
// (phi of S first, psi of T second), constants included.
CoproductPresentation commuting_tensor_presentation(const Presentation& s, const Presentation& t);

Term rename_symbols(const Term& t, const std::vector<std::pair<std::string, std::string>>& renaming);

struct TensorCorrespondence {
  std::size_t k = 0;
  std::size_t tensor_models = 0;
  std::size_t s_models = 0;
  std::size_t t_models = 0;
  std::size_t commuting_pairs = 0;
  // (tensor model index, s model index, t model index), the restriction of
  // structure, in tensor-model order.
  std::vector<std::array<std::size_t, 3>> bijection;
  // "bijection", plus "hom-spot-check" (k <= 2) and "derived-interchange".
  LawReport report;
};

struct CorrespondenceOptions {
  EnumerationOptions enumeration;
  // Hom counts are compared when k is at most this.
  std::size_t hom_check_max_carrier = 2;
  // Derived operations of arity up to this are checked for interchange.
  std::size_t derived_arity = 2;
};

// Enumerates the models of the commuting tensor on carrier k and the
// commuting pairs of S- and T-models on carrier k, and checks that
// restricting structure is a bijection between them.
TensorCorrespondence verify_tensor_correspondence(const Presentation& s, const Presentation& t,
                                                  std::size_t k,
                                                  const CorrespondenceOptions& options = {});

}  // namespace catcom
