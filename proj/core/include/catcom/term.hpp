#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace catcom {

struct Symbol {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

// A finitary signature. Symbols keep their declaration order, which is the
// order every enumeration (models, clone closure) follows.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }

  // Throws InputError on a duplicate symbol.
  void add(std::string name, std::size_t arity);
  std::optional<std::size_t> find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }
  std::size_t max_arity() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::string name_;
  std::vector<Symbol> symbols_;
};

// Immutable first-order term. Variables are 1-based: Term::var(1) is x1.
class Term {
 public:
  static Term var(std::size_t index);
  static Term app(std::string symbol, std::vector<Term> args = {});

  bool is_var() const;
  // 1-based variable index; only meaningful when is_var().
  std::size_t var_index() const;
  const std::string& symbol() const;
  std::span<const Term> args() const;

  // Number of application nodes (variables have size 0).
  std::size_t size() const;
  // Largest variable index occurring, 0 when the term is ground.
  std::size_t max_var() const;
  std::size_t hash() const;

  std::string to_string() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

struct Equation {
  Term lhs;
  Term rhs;
  std::size_t var_count = 0;

  // Builds an equation; var_count defaults to the largest variable used.
  static Equation make(Term lhs, Term rhs, std::optional<std::size_t> var_count = {});
  std::string to_string() const;

  friend bool operator==(const Equation&, const Equation&) = default;
};

class Presentation {
 public:
  Presentation() = default;
  Presentation(Signature signature, std::vector<Equation> equations);

  const std::string& name() const { return signature_.name(); }
  const Signature& signature() const { return signature_; }
  const std::vector<Equation>& equations() const { return equations_; }

  // Validates symbols and arities of the equation against the signature.
  void add_equation(Equation eq);

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  Signature signature_;
  std::vector<Equation> equations_;
};

// Checks every application node against the signature (declared symbol,
// matching arity). Throws InputError.
void check_term(const Signature& sig, const Term& t);

// Theory file grammar:
//   file := "theory" IDENT "{" item* "}"
//   item := "op" IDENT ":" NAT ";" | "eq" term "=" term ";"
//   term := IDENT "(" term ("," term)* ")" | IDENT "()" | "x" NAT
// Throws ParseError (with line and column) on syntax errors, undeclared
// symbols and arity mismatches.
Presentation parse_presentation(std::string_view text);
Term parse_term(std::string_view text, const Signature& sig);

// Canonical form: one item per line, ops before eqs, each group sorted.
std::string render_presentation(const Presentation& p);

// Simultaneous replacement of x_i by args[i-1]. Throws InputError when
// args.size() is smaller than the largest variable of outer.
Term substitute(const Term& outer, std::span<const Term> args);
// Variant that also validates args.size() against an explicit arity.
Term substitute(const Term& outer, std::size_t var_count, std::span<const Term> args);

// The generic operation sym(x1, ..., xn).
Term generic_term(const Symbol& symbol);

// The interchange equation of an n-ary f and an m-ary g over n*m variables,
// with x_{ij} (1 <= i <= n, 1 <= j <= m) flattened to index (i-1)*m + j:
//   f(g(x_{11},...,x_{1m}), ..., g(x_{n1},...,x_{nm}))
//     = g(f(x_{11},...,x_{n1}), ..., f(x_{1m},...,x_{nm})).
Equation commutation_equation(const Term& f, std::size_t n, const Term& g,
                              std::size_t m);

// Renames variables to 1, 2, ... in order of first occurrence across
// lhs then rhs.
Equation normalize_variables(const Equation& eq);

}  // namespace catcom
