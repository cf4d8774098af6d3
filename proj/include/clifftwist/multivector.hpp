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

#include <map>
#include <stdexcept>
#include <string>

#include "clifftwist/kernel.hpp"
#include "clifftwist/notation.hpp"
#include "clifftwist/rational.hpp"

namespace clifftwist {

/// Fixes the square of every generator.
struct AlgebraContext {
  Mu mu = Mu::minus;
  friend constexpr bool operator==(AlgebraContext, AlgebraContext) = default;
};

class ContextMismatch : public std::invalid_argument {
 public:
  ContextMismatch() : std::invalid_argument("multivectors belong to algebras with different mu") {}
};

/// A finite linear combination of basis blades with exact rational
/// coefficients. Zero coefficients are never stored, so equality is
/// structural.
class Multivector {
 public:
  using Terms = std::map<Blade, Rational>;

  explicit Multivector(AlgebraContext ctx) : ctx_(ctx) {}

  static Multivector scalar(AlgebraContext ctx, const Rational& c) {
    return blade(ctx, Blade{0}, c);
  }
  static Multivector blade(AlgebraContext ctx, Blade b, const Rational& c = Rational(1)) {
    Multivector m(ctx);
    m.accumulate(b, c);
    return m;
  }

  AlgebraContext context() const { return ctx_; }
  /// Ascending by blade index.
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(Blade b) const {
    const auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds c * b into this multivector.
  void accumulate(Blade b, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  AlgebraContext ctx_;
  Terms terms_;
};

namespace detail {
inline void require_same_context(const Multivector& a, const Multivector& b) {
  if (a.context() != b.context()) throw ContextMismatch();
}
}  // namespace detail

inline Multivector add(const Multivector& a, const Multivector& b) {
  detail::require_same_context(a, b);
  Multivector out = a;
  for (const auto& [blade, c] : b.terms()) out.accumulate(blade, c);
  return out;
}

inline Multivector scale(const Rational& c, const Multivector& a) {
  Multivector out(a.context());
  if (c == 0) return out;
  for (const auto& [blade, coeff] : a.terms()) out.accumulate(blade, c * coeff);
  return out;
}

/// Bilinear extension of i_p i_q = clf(p,q) i_{p^q}. `algo` selects the sign
/// kernel; every choice gives the same product.
inline Multivector multiply(const Multivector& a, const Multivector& b,
                            SignAlgorithm algo = SignAlgorithm::closed) {
  detail::require_same_context(a, b);
  const Mu mu = a.context().mu;
  Multivector out(a.context());
  for (const auto& [p, ca] : a.terms()) {
    for (const auto& [q, cb] : b.terms()) {
      const Rational c = ca * cb;
      out.accumulate(p ^ q, twist(p, q, mu, algo).negative() ? Rational(-c) : c);
    }
  }
  return out;
}

/// Keeps the terms of grade n.
inline Multivector grade_project(const Multivector& a, unsigned n) {
  Multivector out(a.context());
  for (const auto& [blade, c] : a.terms())
    if (grade(blade) == n) out.accumulate(blade, c);
  return out;
}

inline Multivector operator+(const Multivector& a, const Multivector& b) { return add(a, b); }
inline Multivector operator-(const Multivector& a) { return scale(Rational(-1), a); }
inline Multivector operator-(const Multivector& a, const Multivector& b) { return add(a, -b); }
inline Multivector operator*(const Multivector& a, const Multivector& b) { return multiply(a, b); }
inline Multivector operator*(const Rational& c, const Multivector& a) { return scale(c, a); }

/// Evaluates a parsed expression in the given algebra.
inline Multivector evaluate(const Expression& expr, AlgebraContext ctx,
                            SignAlgorithm algo = SignAlgorithm::closed) {
  Multivector sum(ctx);
  for (const Term& term : expr.terms) {
    Multivector product = Multivector::scalar(ctx, Rational(term.negated ? -1 : 1));
    for (const Factor& f : term.factors) {
      const Multivector factor = Multivector::blade(ctx, f.blade.value_or(Blade{0}), f.coefficient);
      product = multiply(product, factor, algo);
    }
    sum = add(sum, product);
  }
  return sum;
}

/// Canonical text: terms ascending by blade index, e.g. "3 - e_{1} + 1/2e_{23}".
/// In e-form, blades with generators beyond the subscript alphabet fall back
/// to i-form so the output always re-parses.
inline std::string to_string(const Multivector& m, BladeStyle style = BladeStyle::e_form) {
  if (m.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [blade, c] : m.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (blade.mask == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != 1) out += magnitude.str();
    const BladeStyle s =
        style == BladeStyle::e_form && !e_form_representable(blade) ? BladeStyle::i_form : style;
    out += format_blade(blade, s);
  }
  return out;
}

}  // namespace clifftwist
