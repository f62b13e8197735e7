#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>

#include <catcom/algebra.hpp>
#include <catcom/category.hpp>
#include <catcom/corpus.hpp>
#include <catcom/graded.hpp>
#include <catcom/monoid.hpp>
#include <catcom/operad.hpp>
#include <catcom/operad_presentation.hpp>
#include <catcom/premonoidal.hpp>
#include <catcom/sesqui.hpp>
#include <catcom/term.hpp>

namespace catcom::cli {

// Malformed or unreadable input, located as "path:line:column: message".
class InputFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Paths of the form "builtin:NAME" select a built-in object.
bool is_builtin(const std::string& path);

// First keyword of a file (theory, algebra, monoid, ...), or "builtin".
std::string input_kind(const std::string& path);

std::string read_file(const std::string& path);

Presentation load_theory(const std::string& path);
// A theory file, optionally followed by a goal.
Problem load_problem(const std::string& path, bool& has_goal);
FiniteAlgebra load_algebra(const std::string& path);
// builtin: trivial, z<n>, s3, lzb.
FiniteMonoid load_monoid(const std::string& path);
// builtin: ass, com, unit, truncated at K.
std::shared_ptr<const SymOperadTruncation> load_operad(const std::string& path, std::size_t K);
OperadPresentation load_operad_presentation(const std::string& path);
// builtin: terminal, arrow, discrete<n>, codiscrete<n>.
FiniteCategory load_category(const std::string& path);
// builtin: free, walking, or a monoid name for its one-object 2-cells.
SesquiData load_sesqui(const std::string& path);
// builtin: a monoid name M for codiscrete(2) x M.
PremonoidalData load_premonoidal(const std::string& path);
// builtin: qp<p>_<q> is the quantum plane over F_p truncated at D.
GradedAlgebra load_graded(const std::string& path, std::size_t D);

}  // namespace catcom::cli
