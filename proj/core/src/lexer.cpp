#include "lexer.hpp"

#include <cctype>

namespace catcom::detail {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::end:
      return "end of input";
    case TokenKind::number:
      return "number '" + t.text + "'";
    case TokenKind::identifier:
      return "identifier '" + t.text + "'";
    case TokenKind::symbol:
      return "'" + t.text + "'";
  }
  return "token";
}

}  // namespace

TokenStream::TokenStream(std::string_view text) {
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t c = 0; c < count; ++c, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = col;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      tok.kind = TokenKind::identifier;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tok.kind = TokenKind::number;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if ((c == '-' || c == '=') && i + 1 < text.size() && text[i + 1] == '>') {
      tok.kind = TokenKind::symbol;
      tok.text = std::string(text.substr(i, 2));
      advance(2);
    } else if (std::string_view("{}();:,=[]./*+-").find(c) != std::string_view::npos) {
      tok.kind = TokenKind::symbol;
      tok.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    tokens_.push_back(std::move(tok));
  }
  Token end;
  end.line = line;
  end.column = col;
  tokens_.push_back(end);
}

const Token& TokenStream::peek(std::size_t ahead) const {
  const auto idx = pos_ + ahead;
  return idx < tokens_.size() ? tokens_[idx] : tokens_.back();
}

Token TokenStream::next() {
  Token t = peek();
  if (pos_ < tokens_.size() - 1) ++pos_;
  return t;
}

bool TokenStream::accept(std::string_view s) {
  const auto& t = peek();
  if (t.kind != TokenKind::end && t.kind != TokenKind::number && t.text == s) {
    next();
    return true;
  }
  return false;
}

void TokenStream::expect(std::string_view s) {
  if (!accept(s)) fail("expected '" + std::string(s) + "' but found " + describe(peek()));
}

std::string TokenStream::expect_identifier(std::string_view what) {
  if (peek().kind != TokenKind::identifier)
    fail("expected " + std::string(what) + " but found " + describe(peek()));
  return next().text;
}

std::size_t TokenStream::expect_number(std::string_view what) {
  if (peek().kind != TokenKind::number)
    fail("expected " + std::string(what) + " but found " + describe(peek()));
  const auto t = next();
  try {
    return std::stoul(t.text);
  } catch (const std::exception&) {
    fail_at(t, "number out of range");
  }
}

void TokenStream::fail(const std::string& message) const { fail_at(peek(), message); }

void TokenStream::fail_at(const Token& token, const std::string& message) const {
  throw ParseError(message, token.line, token.column);
}

}  // namespace catcom::detail
