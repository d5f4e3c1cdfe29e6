#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lc/formula.hpp"

namespace lc {

/// Byte range [begin, end) into the parsed input.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceSpan span, std::vector<std::string> expected = {});

  const SourceSpan& span() const { return span_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourceSpan span_;
  std::vector<std::string> expected_;
};

/// Parses the formula grammar:
///
///   atom    := [a-zA-Z_][a-zA-Z0-9_]*
///   unary   := '~' unary | '(' iff ')' | atom
///   and     := unary ('&' unary)*          (n-ary)
///   or      := and ('|' and)*              (n-ary)
///   xor     := or ('^' or)*                (left-associative)
///   implies := xor ('->' implies)?         (right-associative)
///   iff     := implies ('<->' implies)?    (non-associative; chains rejected)
///
/// Unicode operator aliases are accepted on input and never emitted:
/// `∧ ∨ ⊻ ¬ → ↔`. Whitespace is insignificant.
Formula parse(std::string_view text);

/// Minimal-parentheses rendering under the grammar above. parse(print(f))
/// reproduces f structurally for canonical trees (no And directly under And,
/// no Or directly under Or).
std::string print(const Formula& f);

}  // namespace lc
