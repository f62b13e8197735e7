#pragma once

#include <string>
#include <vector>

#include "catcom/category.hpp"
#include "lexer.hpp"

namespace catcom::detail {

// Accumulates the category items shared by the category, sesqui and
// premonoidal grammars.
class CategoryBuilder {
 public:
  explicit CategoryBuilder(std::string name) : name_(std::move(name)) {}

  // Consumes one objects/arrow/comp item if the next token starts one.
  bool accept_item(TokenStream& ts);
  // Reports problems at the given token.
  FiniteCategory build(const TokenStream& ts, const Token& at) const;

 private:
  struct Comp {
    Token token;
    std::string g, f, h;
  };
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<Comp> comps_;
};

// Looks up a named object or arrow, failing at the token.
ObjectId expect_object(TokenStream& ts, const FiniteCategory& c);
ArrowId expect_arrow(TokenStream& ts, const FiniteCategory& c);

}  // namespace catcom::detail
