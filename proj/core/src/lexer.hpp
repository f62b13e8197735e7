#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "catcom/error.hpp"

namespace catcom::detail {

enum class TokenKind { identifier, number, symbol, end };

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

// Tokenizer shared by every input grammar. Identifiers are
// [A-Za-z_][A-Za-z0-9_]*, numbers are decimal, '#' and '//' start line
// comments, and "->", "=>" are single symbols.
class TokenStream {
 public:
  explicit TokenStream(std::string_view text);

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool at_end() const { return peek().kind == TokenKind::end; }

  bool accept(std::string_view symbol_or_keyword);
  void expect(std::string_view symbol_or_keyword);
  std::string expect_identifier(std::string_view what = "identifier");
  std::size_t expect_number(std::string_view what = "number");

  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_at(const Token& token, const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace catcom::detail
