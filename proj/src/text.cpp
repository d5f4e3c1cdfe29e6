#include "lc/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <utility>

namespace lc {

ParseError::ParseError(const std::string& message, SourceSpan span,
                       std::vector<std::string> expected)
    : Error(message), span_(span), expected_(std::move(expected)) {}

namespace {

enum class Tok { Ident, AndOp, OrOp, XorOp, NotOp, ImpliesOp, IffOp, LParen, RParen, End };

struct Token {
  Tok type;
  SourceSpan span;
  std::string text;
};

struct UnicodeAlias {
  std::string_view bytes;
  Tok type;
};

// UTF-8 encodings of the accepted operator aliases.
constexpr std::array<UnicodeAlias, 6> kAliases{{
    {"∧", Tok::AndOp},      // ∧
    {"∨", Tok::OrOp},       // ∨
    {"⊻", Tok::XorOp},      // ⊻
    {"¬", Tok::NotOp},      // ¬
    {"→", Tok::ImpliesOp},  // →
    {"↔", Tok::IffOp},      // ↔
}};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text_.size()) {
      const char ch = text_[i];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t j = i + 1;
        while (j < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) {
          ++j;
        }
        out.push_back({Tok::Ident, {i, j}, std::string(text_.substr(i, j - i))});
        i = j;
        continue;
      }
      if (auto simple = match_simple(i)) {
        out.push_back(*simple);
        i = simple->span.end;
        continue;
      }
      if (auto alias = match_alias(i)) {
        out.push_back(*alias);
        i = alias->span.end;
        continue;
      }
      throw ParseError("unknown token '" + std::string(text_.substr(i, utf8_len(i))) + "'",
                       {i, i + utf8_len(i)});
    }
    out.push_back({Tok::End, {text_.size(), text_.size()}, ""});
    return out;
  }

 private:
  std::optional<Token> match_simple(std::size_t i) {
    auto rest = text_.substr(i);
    auto tok = [&](Tok type, std::size_t len) {
      return Token{type, {i, i + len}, std::string(rest.substr(0, len))};
    };
    if (rest.starts_with("<->")) return tok(Tok::IffOp, 3);
    if (rest.starts_with("->")) return tok(Tok::ImpliesOp, 2);
    switch (rest.front()) {
      case '&': return tok(Tok::AndOp, 1);
      case '|': return tok(Tok::OrOp, 1);
      case '^': return tok(Tok::XorOp, 1);
      case '~': return tok(Tok::NotOp, 1);
      case '(': return tok(Tok::LParen, 1);
      case ')': return tok(Tok::RParen, 1);
      default: return std::nullopt;
    }
  }

  std::optional<Token> match_alias(std::size_t i) {
    auto rest = text_.substr(i);
    for (const auto& alias : kAliases) {
      if (rest.starts_with(alias.bytes)) {
        return Token{alias.type, {i, i + alias.bytes.size()}, std::string(alias.bytes)};
      }
    }
    return std::nullopt;
  }

  std::size_t utf8_len(std::size_t i) const {
    const auto lead = static_cast<unsigned char>(text_[i]);
    std::size_t len = 1;
    if ((lead & 0xE0) == 0xC0) len = 2;
    else if ((lead & 0xF0) == 0xE0) len = 3;
    else if ((lead & 0xF8) == 0xF0) len = 4;
    return std::min(len, text_.size() - i);
  }

  std::string_view text_;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula run() {
    Formula f = parse_iff();
    if (peek().type != Tok::End) {
      if (peek().type == Tok::RParen) {
        throw ParseError("unbalanced ')'", peek().span);
      }
      throw ParseError("unexpected trailing input", peek().span, {"end of input"});
    }
    return f;
  }

 private:
  Formula parse_iff() {
    Formula lhs = parse_implies();
    if (peek().type != Tok::IffOp) return lhs;
    advance();
    Formula rhs = parse_implies();
    if (peek().type == Tok::IffOp) {
      throw ParseError("'<->' is non-associative; parenthesize the chain", peek().span);
    }
    return Formula::biconditional(std::move(lhs), std::move(rhs));
  }

  Formula parse_implies() {
    Formula lhs = parse_xor();
    if (peek().type != Tok::ImpliesOp) return lhs;
    advance();
    return Formula::implication(std::move(lhs), parse_implies());
  }

  Formula parse_xor() {
    Formula acc = parse_or();
    while (peek().type == Tok::XorOp) {
      advance();
      acc = Formula::exclusive_or(std::move(acc), parse_or());
    }
    return acc;
  }

  Formula parse_or() {
    std::vector<Formula> parts{parse_and()};
    while (peek().type == Tok::OrOp) {
      advance();
      parts.push_back(parse_and());
    }
    if (parts.size() == 1) return std::move(parts.front());
    return Formula::disjunction(std::move(parts));
  }

  Formula parse_and() {
    std::vector<Formula> parts{parse_unary()};
    while (peek().type == Tok::AndOp) {
      advance();
      parts.push_back(parse_unary());
    }
    if (parts.size() == 1) return std::move(parts.front());
    return Formula::conjunction(std::move(parts));
  }

  Formula parse_unary() {
    const Token& tok = peek();
    switch (tok.type) {
      case Tok::NotOp:
        advance();
        return Formula::negation(parse_unary());
      case Tok::LParen: {
        advance();
        Formula inner = parse_iff();
        if (peek().type != Tok::RParen) {
          throw ParseError("unbalanced '('", tok.span, {")"});
        }
        advance();
        return inner;
      }
      case Tok::Ident: {
        advance();
        return Formula::atom(tok.text);
      }
      default:
        throw ParseError("expected a formula", tok.span, {"atom", "'~'", "'('"});
    }
  }

  const Token& peek() const { return tokens_[pos_]; }
  void advance() { ++pos_; }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Binding strength, tightest first: atom, ~, &, |, ^, ->, <->.
int level(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom: return 7;
    case Kind::Not: return 6;
    case Kind::And: return 5;
    case Kind::Or: return 4;
    case Kind::Xor: return 3;
    case Kind::Implies: return 2;
    case Kind::Iff: return 1;
  }
  return 0;
}

void render(const Formula& f, std::string& out);

void render_child(const Formula& child, bool parens, std::string& out) {
  if (parens) {
    out += '(';
    render(child, out);
    out += ')';
  } else {
    render(child, out);
  }
}

void render(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Kind::Atom:
      out += f.name();
      return;
    case Kind::Not:
      out += '~';
      render_child(f.operand(), level(f.operand()) < level(f), out);
      return;
    case Kind::And:
    case Kind::Or: {
      const char* sep = f.kind() == Kind::And ? " & " : " | ";
      bool first = true;
      for (const Formula& part : f.parts()) {
        if (!first) out += sep;
        first = false;
        render_child(part, level(part) < level(f), out);
      }
      return;
    }
    case Kind::Xor:  // left-associative
      render_child(f.lhs(), level(f.lhs()) < level(f), out);
      out += " ^ ";
      render_child(f.rhs(), level(f.rhs()) <= level(f), out);
      return;
    case Kind::Implies:  // right-associative
      render_child(f.lhs(), level(f.lhs()) <= level(f), out);
      out += " -> ";
      render_child(f.rhs(), level(f.rhs()) < level(f), out);
      return;
    case Kind::Iff:  // non-associative
      render_child(f.lhs(), level(f.lhs()) <= level(f), out);
      out += " <-> ";
      render_child(f.rhs(), level(f.rhs()) <= level(f), out);
      return;
  }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(Lexer(text).run()).run(); }

std::string print(const Formula& f) {
  std::string out;
  render(f, out);
  return out;
}

std::string Formula::str() const { return print(*this); }

}  // namespace lc
