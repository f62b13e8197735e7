#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catcom/category.hpp"
#include "catcom/law_report.hpp"
#include "catcom/monoid.hpp"

namespace catcom {

using CellId = std::uint32_t;

// A 2-cell alpha : f => g between parallel arrows.
struct Cell {
  std::string name;
  ArrowId source = 0;
  ArrowId target = 0;
};

// A category with 2-cells, whiskering on both sides and vertical
// composition, all tabulated. Entries may be missing or wrong; the checks
// report them. Whiskering h . alpha puts h after alpha; alpha . k puts k
// before it.
class SesquiData {
 public:
  SesquiData(FiniteCategory base, std::vector<Cell> cells, std::vector<CellId> identities);

  const FiniteCategory& base() const { return base_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t cell_count() const { return cells_.size(); }
  const Cell& cell(CellId a) const { return cells_.at(a); }
  CellId identity_cell(ArrowId f) const { return identities_.at(f); }
  std::optional<CellId> find_cell(std::string_view name) const;

  // Throw ClosureError on a missing entry and InputError on ill-typed
  // arguments.
  CellId whisker_left(ArrowId h, CellId alpha) const;
  CellId whisker_right(CellId alpha, ArrowId k) const;
  CellId vertical(CellId beta, CellId alpha) const;

  void set_whisker_left(ArrowId h, CellId alpha, CellId value);
  void set_whisker_right(CellId alpha, ArrowId k, CellId value);
  void set_vertical(CellId beta, CellId alpha, CellId value);
  // Fills every missing entry forced by the unit laws.
  void fill_units();

  std::optional<CellId> whisker_left_entry(ArrowId h, CellId alpha) const;
  std::optional<CellId> whisker_right_entry(CellId alpha, ArrowId k) const;
  std::optional<CellId> vertical_entry(CellId beta, CellId alpha) const;

 private:
  FiniteCategory base_;
  std::vector<Cell> cells_;
  std::vector<CellId> identities_;
  std::vector<CellId> left_;      // [h * cells + alpha]
  std::vector<CellId> right_;     // [alpha * arrows + k]
  std::vector<CellId> vertical_;  // [beta * cells + alpha]
};

// Laws: typing, whisker-unit, whisker-associativity, whisker-middle,
// whisker-identity, vertical-unit, vertical-associativity,
// whisker-vertical.
LawReport sesqui_validate(const SesquiData& s);

struct InterchangeWitness {
  CellId alpha = 0;
  CellId beta = 0;
  // beta g . h alpha and k alpha . beta f.
  CellId lhs = 0;
  CellId rhs = 0;
};

// For alpha : f => g : X -> Y and beta : h => k : Y -> Z, whether
// beta g . h alpha = k alpha . beta f. Throws InputError when beta does not
// start where alpha ends.
bool sesqui_interchange(const SesquiData& s, CellId alpha, CellId beta);
std::optional<InterchangeWitness> interchange_witness(const SesquiData& s, CellId alpha, CellId beta);
// Every failing pair, alpha then beta in id order.
std::vector<InterchangeWitness> sesqui_interchange_all(const SesquiData& s);

// beta * alpha := beta g . h alpha.
CellId horizontal(const SesquiData& s, CellId beta, CellId alpha);
// Laws of the induced 2-category: horizontal-well-defined,
// horizontal-unit, horizontal-associativity, interchange-law.
LawReport two_category_check(const SesquiData& s);

// Only identity 2-cells.
SesquiData locally_discrete(const FiniteCategory& c);
// One object, one arrow, 2-cells the monoid elements composed by its
// multiplication. A 2-category iff the monoid is commutative.
SesquiData monoid_two_cells(const FiniteMonoid& m);
// Arrows f, g : X -> Y with a single 2-cell alpha : f => g.
SesquiData walking_two_cell();
// alpha : f => g : X -> Y and beta : h => k : Y -> Z with all whiskers and
// the two composites hf => kg kept distinct.
SesquiData free_sesqui_example();

// Grammar: the category items plus
//   "cell" IDENT ":" IDENT "=>" IDENT ";"
//   "whiskL" IDENT "." IDENT "=" IDENT ";"   (arrow . cell)
//   "whiskR" IDENT "." IDENT "=" IDENT ";"   (cell . arrow)
//   "vcomp" IDENT "." IDENT "=" IDENT ";"
// inside "sesqui" IDENT "{" ... "}". Identity cells i_f are implicit and
// unit entries are filled.
SesquiData parse_sesqui(std::string_view text);
std::string render_sesqui(const SesquiData& s);

}  // namespace catcom
