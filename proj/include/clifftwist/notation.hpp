// Copyright 2026 The clifftwist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Textual blade notation and the multivector expression language.
//
// Blades:
//   e-form   e134, e_134, e_{134}   subscript characters 1-9 then a-z (10..35),
//                                   strictly ascending, case-insensitive
//   i-form   i13, i_13, i_{13}      decimal blade index
//   "1"                             the scalar blade
//
// Expressions:
//   expr   := [+|-] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | blade | rational blade
//   rational := integer ['/' integer]
// Whitespace is insignificant.

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clifftwist/kernel.hpp"
#include "clifftwist/rational.hpp"

namespace clifftwist {

enum class NotationErrorKind {
  malformed_blade,
  invalid_digit,
  unrepresentable,
  syntax,
  unknown_token,
};

constexpr std::string_view name(NotationErrorKind k) {
  switch (k) {
    case NotationErrorKind::malformed_blade: return "malformed blade";
    case NotationErrorKind::invalid_digit: return "invalid digit";
    case NotationErrorKind::unrepresentable: return "unrepresentable in e-form";
    case NotationErrorKind::syntax: return "syntax error";
    case NotationErrorKind::unknown_token: return "unknown token";
  }
  return "error";
}

class NotationError : public std::runtime_error {
 public:
  NotationError(NotationErrorKind kind, std::size_t offset, const std::string& detail)
      : std::runtime_error(std::string(name(kind)) + " at offset " + std::to_string(offset) + ": " +
                           detail),
        kind_(kind),
        offset_(offset) {}

  NotationErrorKind kind() const { return kind_; }
  /// Byte offset into the parsed text.
  std::size_t offset() const { return offset_; }

 private:
  NotationErrorKind kind_;
  std::size_t offset_;
};

enum class BladeStyle { e_form, i_form };

/// Highest generator index with an e-form subscript character.
inline constexpr unsigned kMaxSubscriptGenerator = 35;

namespace detail {

/// Subscript character to generator index, or 0 if not a subscript character.
constexpr unsigned subscript_value(char c) {
  if (c >= '1' && c <= '9') return static_cast<unsigned>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<unsigned>(c - 'a') + 10;
  if (c >= 'A' && c <= 'Z') return static_cast<unsigned>(c - 'A') + 10;
  return 0;
}

constexpr char subscript_char(unsigned k) {
  return k <= 9 ? static_cast<char>('0' + k) : static_cast<char>('a' + (k - 10));
}

constexpr bool is_alnum(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

/// Splits "e_{134}" / "e_134" / "e134" into the subscript payload. `base` is
/// the offset of `text` within a larger input, for diagnostics.
inline std::string_view blade_payload(std::string_view text, std::size_t base,
                                      std::size_t& payload_offset) {
  std::size_t pos = 1;
  if (pos < text.size() && text[pos] == '_') ++pos;
  if (pos < text.size() && text[pos] == '{') {
    if (text.back() != '}')
      throw NotationError(NotationErrorKind::malformed_blade, base + text.size(),
                          "missing closing brace");
    payload_offset = pos + 1;
    return text.substr(pos + 1, text.size() - pos - 2);
  }
  payload_offset = pos;
  return text.substr(pos);
}

inline Blade parse_e_subscripts(std::string_view digits, std::size_t base) {
  std::uint64_t mask = 0;
  unsigned prev = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const unsigned k = subscript_value(digits[i]);
    if (k == 0)
      throw NotationError(NotationErrorKind::invalid_digit, base + i,
                          std::string("'") + digits[i] + "' is not a generator subscript");
    if (k == prev)
      throw NotationError(NotationErrorKind::malformed_blade, base + i,
                          std::string("duplicate generator '") + digits[i] + "'");
    if (k < prev)
      throw NotationError(NotationErrorKind::malformed_blade, base + i,
                          "subscripts must be strictly ascending");
    mask |= std::uint64_t{1} << (k - 1);
    prev = k;
  }
  return Blade{mask};
}

inline Blade parse_i_index(std::string_view digits, std::size_t base) {
  for (std::size_t i = 0; i < digits.size(); ++i)
    if (digits[i] < '0' || digits[i] > '9')
      throw NotationError(NotationErrorKind::invalid_digit, base + i,
                          std::string("'") + digits[i] + "' is not a decimal digit");
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec == std::errc::result_out_of_range)
    throw NotationError(NotationErrorKind::malformed_blade, base,
                        "blade index does not fit in 64 bits");
  (void)ptr;
  return Blade{value};
}

inline Blade parse_blade_at(std::string_view text, std::size_t base) {
  if (text == "1") return Blade{0};
  if (text.empty())
    throw NotationError(NotationErrorKind::malformed_blade, base, "empty blade");
  const char head = text.front();
  const bool e_form = head == 'e' || head == 'E';
  const bool i_form = head == 'i' || head == 'I';
  if (!e_form && !i_form)
    throw NotationError(NotationErrorKind::malformed_blade, base,
                        "blade must start with 'e' or 'i'");
  std::size_t payload_offset = 0;
  const std::string_view payload = blade_payload(text, base, payload_offset);
  if (payload.empty())
    throw NotationError(NotationErrorKind::malformed_blade, base + payload_offset,
                        "missing blade subscript");
  return e_form ? parse_e_subscripts(payload, base + payload_offset)
                : parse_i_index(payload, base + payload_offset);
}

}  // namespace detail

/// Parses a single blade in e-form, i-form, or "1".
inline Blade parse_blade(std::string_view text) { return detail::parse_blade_at(text, 0); }

/// True if every factor of p has a subscript character.
constexpr bool e_form_representable(Blade p) {
  return (p.mask >> kMaxSubscriptGenerator) == 0;
}

inline std::string format_blade(Blade p, BladeStyle style = BladeStyle::e_form) {
  if (style == BladeStyle::i_form) return "i_" + std::to_string(p.mask);
  if (p.mask == 0) return "1";
  if (!e_form_representable(p))
    throw NotationError(NotationErrorKind::unrepresentable, 0,
                        "generators above e_" + std::to_string(kMaxSubscriptGenerator) +
                            " need i-form");
  std::string out = "e_{";
  for (unsigned k = 1; k <= kMaxSubscriptGenerator; ++k)
    if ((p.mask >> (k - 1)) & 1u) out += detail::subscript_char(k);
  out += '}';
  return out;
}

// ---------------------------------------------------------------------------
// Expressions

/// rational, blade, or rational immediately followed by a blade.
struct Factor {
  Rational coefficient{1};
  std::optional<Blade> blade;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// A product chain, optionally negated by the preceding '-'.
struct Term {
  bool negated = false;
  std::vector<Factor> factors;
  friend bool operator==(const Term&, const Term&) = default;
};

/// A sum of terms.
struct Expression {
  std::vector<Term> terms;
  friend bool operator==(const Expression&, const Expression&) = default;
};

namespace detail {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Expression parse() {
    Expression expr;
    skip_space();
    bool negated = false;
    if (peek() == '+' || peek() == '-') {
      negated = take() == '-';
    }
    expr.terms.push_back(parse_term(negated));
    for (;;) {
      skip_space();
      const char c = peek();
      if (c == '\0' && pos_ == text_.size()) break;
      if (c != '+' && c != '-') {
        if (c == '*' || c == '/' || is_alnum(c) || c == '_' || c == '{' || c == '}')
          throw NotationError(NotationErrorKind::syntax, pos_,
                              std::string("unexpected '") + c + "'");
        throw NotationError(NotationErrorKind::unknown_token, pos_,
                            std::string("unexpected character '") + c + "'");
      }
      take();
      expr.terms.push_back(parse_term(c == '-'));
    }
    return expr;
  }

 private:
  Term parse_term(bool negated) {
    Term term;
    term.negated = negated;
    term.factors.push_back(parse_factor());
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      take();
      term.factors.push_back(parse_factor());
    }
    return term;
  }

  Factor parse_factor() {
    skip_space();
    Factor f;
    const char c = peek();
    if (c >= '0' && c <= '9') {
      f.coefficient = parse_rational();
      skip_space();
      if (starts_blade(peek())) f.blade = parse_blade_token();
      return f;
    }
    if (starts_blade(c)) {
      f.blade = parse_blade_token();
      return f;
    }
    if (pos_ >= text_.size())
      throw NotationError(NotationErrorKind::syntax, pos_, "expected a number or blade");
    if (is_alnum(c))
      throw NotationError(NotationErrorKind::unknown_token, pos_,
                          std::string("unknown identifier starting with '") + c + "'");
    if (c == '+' || c == '-' || c == '*' || c == '/' || c == '{' || c == '}' || c == '_')
      throw NotationError(NotationErrorKind::syntax, pos_,
                          std::string("expected a number or blade before '") + c + "'");
    throw NotationError(NotationErrorKind::unknown_token, pos_,
                        std::string("unexpected character '") + c + "'");
  }

  Rational parse_rational() {
    const Integer num = parse_integer();
    skip_space();
    if (peek() != '/') return Rational(num);
    take();
    skip_space();
    const std::size_t at = pos_;
    if (!(peek() >= '0' && peek() <= '9'))
      throw NotationError(NotationErrorKind::syntax, pos_, "expected denominator");
    const Integer den = parse_integer();
    if (den == 0) throw NotationError(NotationErrorKind::syntax, at, "zero denominator");
    return Rational(num, den);
  }

  Integer parse_integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    // cpp_int reads a leading 0 as an octal prefix.
    std::string_view digits = text_.substr(start, pos_ - start);
    while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
    return Integer(std::string(digits));
  }

  static constexpr bool starts_blade(char c) {
    return c == 'e' || c == 'E' || c == 'i' || c == 'I';
  }

  Blade parse_blade_token() {
    const std::size_t start = pos_;
    ++pos_;
    if (peek() == '_') ++pos_;
    if (peek() == '{') {
      const std::size_t close = text_.find('}', pos_);
      if (close == std::string_view::npos)
        throw NotationError(NotationErrorKind::malformed_blade, text_.size(),
                            "missing closing brace");
      pos_ = close + 1;
    } else {
      while (pos_ < text_.size() && is_alnum(text_[pos_])) ++pos_;
    }
    return parse_blade_at(text_.substr(start, pos_ - start), start);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expression parse_expression(std::string_view text) {
  return detail::ExpressionParser(text).parse();
}

}  // namespace clifftwist
