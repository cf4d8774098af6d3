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

// Twist matrices over G_n = {0 .. 2^n - 1}, with entries symbolic in mu.
//
// Two constructions:
//   table_direct  evaluates the recursive twist entry by entry over symbols
//   table_blocks  starts from the letter A and refines with
//                   A -> [A  A ; B  mB]
//                   B -> [B -B ; A -mA]
//                 then expands A = [1 1; 1 m], B = [1 -1; 1 -m]

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clifftwist/kernel.hpp"

namespace clifftwist {

/// sign * mu^mu_power, one of {1, -1, m, -m}. Products reduce with mu^2 = 1.
struct SymbolicSign {
  Sign sign;
  bool mu_power = false;

  constexpr SymbolicSign() = default;
  constexpr explicit SymbolicSign(Sign s, bool mu = false) : sign(s), mu_power(mu) {}

  static constexpr SymbolicSign one() { return SymbolicSign{}; }
  static constexpr SymbolicSign mu() { return SymbolicSign{Sign::plus(), true}; }

  friend constexpr SymbolicSign operator*(SymbolicSign a, SymbolicSign b) {
    return SymbolicSign{a.sign * b.sign, a.mu_power != b.mu_power};
  }
  constexpr SymbolicSign operator-() const { return SymbolicSign{-sign, mu_power}; }
  friend constexpr bool operator==(SymbolicSign, SymbolicSign) = default;

  constexpr Sign substitute(Mu m) const { return mu_power ? sign * Sign::of(m) : sign; }

  /// "1", "-1", "m" or "-m".
  constexpr std::string_view spelling() const {
    if (mu_power) return sign.negative() ? "-m" : "m";
    return sign.negative() ? "-1" : "1";
  }
};

inline constexpr int kMinTableDimension = 1;
inline constexpr int kMaxTableDimension = 12;

class DimensionError : public std::out_of_range {
 public:
  DimensionError(int n, int lo, int hi)
      : std::out_of_range("dimension " + std::to_string(n) + " outside [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]") {}
};

namespace detail {
inline void check_dimension(int n, int lo = kMinTableDimension) {
  if (n < lo || n > kMaxTableDimension) throw DimensionError(n, lo, kMaxTableDimension);
}
}  // namespace detail

/// 2^n x 2^n twist matrix, row p, column q.
class TwistTable {
 public:
  explicit TwistTable(int n) : n_(n), entries_(std::size_t{1} << (2 * n)) {}

  int dimension() const { return n_; }
  std::size_t side() const { return std::size_t{1} << n_; }

  SymbolicSign& at(std::size_t p, std::size_t q) { return entries_[p * side() + q]; }
  SymbolicSign at(std::size_t p, std::size_t q) const { return entries_[p * side() + q]; }

  friend bool operator==(const TwistTable&, const TwistTable&) = default;

 private:
  int n_;
  std::vector<SymbolicSign> entries_;
};

/// Symbolic clf(p, q).
constexpr SymbolicSign twist_symbolic(Blade p, Blade q) {
  return twist_recursive_as<SymbolicSign>(p, q, SymbolicSign::mu());
}

inline TwistTable table_direct(int n) {
  detail::check_dimension(n);
  TwistTable t(n);
  const std::size_t side = t.side();
  for (std::size_t p = 0; p < side; ++p)
    for (std::size_t q = 0; q < side; ++q) t.at(p, q) = twist_symbolic(Blade{p}, Blade{q});
  return t;
}

// ---------------------------------------------------------------------------
// Block letters

/// coefficient * letter, where the letter stands for a 2x2 matrix.
struct BlockCell {
  SymbolicSign coefficient;
  Letter letter = Letter::A;
  friend constexpr bool operator==(BlockCell, BlockCell) = default;
};

/// The 2x2 matrix a letter stands for: A = [1 1; 1 m], B = [1 -1; 1 -m].
/// These are M(p) = [1 s; 1 s m] with s = sigma(p).
constexpr std::array<std::array<SymbolicSign, 2>, 2> letter_matrix(Letter l) {
  const SymbolicSign s = l == Letter::A ? SymbolicSign::one() : -SymbolicSign::one();
  return {{{SymbolicSign::one(), s}, {SymbolicSign::one(), s * SymbolicSign::mu()}}};
}

/// 2^(n-1) x 2^(n-1) grid of letters describing the dimension-n table.
class BlockGrid {
 public:
  explicit BlockGrid(int n) : n_(n), cells_(std::size_t{1} << (2 * (n - 1))) {}

  int dimension() const { return n_; }
  std::size_t side() const { return std::size_t{1} << (n_ - 1); }

  BlockCell& at(std::size_t p, std::size_t q) { return cells_[p * side() + q]; }
  BlockCell at(std::size_t p, std::size_t q) const { return cells_[p * side() + q]; }

  friend bool operator==(const BlockGrid&, const BlockGrid&) = default;

 private:
  int n_;
  std::vector<BlockCell> cells_;
};

/// One refinement round: every cell c*X becomes the 2x2 block c*subst(X).
/// Cell (P, Q) maps to cells (2P + a, 2Q + b).
inline BlockGrid substitute_blocks(const BlockGrid& g) {
  detail::check_dimension(g.dimension() + 1);
  BlockGrid next(g.dimension() + 1);
  for (std::size_t p = 0; p < g.side(); ++p) {
    for (std::size_t q = 0; q < g.side(); ++q) {
      const BlockCell cell = g.at(p, q);
      const auto m = letter_matrix(cell.letter);
      // Row a of the replacement uses A when (letter parity + a) is even.
      for (std::size_t a = 0; a < 2; ++a) {
        const Letter row_letter =
            ((cell.letter == Letter::B) != (a == 1)) ? Letter::B : Letter::A;
        for (std::size_t b = 0; b < 2; ++b)
          next.at(2 * p + a, 2 * q + b) = BlockCell{cell.coefficient * m[a][b], row_letter};
      }
    }
  }
  return next;
}

/// The letter grid after n-1 rounds starting from A.
inline BlockGrid block_grid_by_substitution(int n) {
  detail::check_dimension(n);
  BlockGrid g(1);
  g.at(0, 0) = BlockCell{SymbolicSign::one(), Letter::A};
  for (int k = 1; k < n; ++k) g = substitute_blocks(g);
  return g;
}

/// Cell (p, q) = clf(p, q) * M(p), with M(p) = A if sigma(p) = +1 else B.
inline BlockGrid block_grid_direct(int n) {
  detail::check_dimension(n);
  BlockGrid g(n);
  for (std::size_t p = 0; p < g.side(); ++p)
    for (std::size_t q = 0; q < g.side(); ++q)
      g.at(p, q) = BlockCell{twist_symbolic(Blade{p}, Blade{q}),
                             sigma(Blade{p}).negative() ? Letter::B : Letter::A};
  return g;
}

/// Replaces every letter by its matrix, scaled by the cell coefficient.
inline TwistTable expand_blocks(const BlockGrid& g) {
  TwistTable t(g.dimension());
  for (std::size_t p = 0; p < g.side(); ++p) {
    for (std::size_t q = 0; q < g.side(); ++q) {
      const BlockCell cell = g.at(p, q);
      const auto m = letter_matrix(cell.letter);
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) t.at(2 * p + a, 2 * q + b) = cell.coefficient * m[a][b];
    }
  }
  return t;
}

inline TwistTable table_blocks(int n) { return expand_blocks(block_grid_by_substitution(n)); }

// ---------------------------------------------------------------------------
// Rendering

enum class TableFormat { text, csv };

/// Either keep mu symbolic ("m") or substitute a concrete value.
enum class MuMode { symbolic, plus, minus };

namespace detail {

inline std::string_view entry_spelling(SymbolicSign s, MuMode mode) {
  if (mode == MuMode::symbolic) return s.spelling();
  return s.substitute(mode == MuMode::plus ? Mu::plus : Mu::minus).negative() ? "-1" : "1";
}

inline std::string cell_spelling(BlockCell c, MuMode mode) {
  std::string out;
  SymbolicSign coeff = c.coefficient;
  if (mode != MuMode::symbolic)
    coeff = SymbolicSign{coeff.substitute(mode == MuMode::plus ? Mu::plus : Mu::minus)};
  if (coeff.sign.negative()) out += '-';
  if (coeff.mu_power) out += 'm';
  out += c.letter == Letter::A ? 'A' : 'B';
  return out;
}

template <class Grid, class Spell>
std::string render_grid(const Grid& g, TableFormat format, Spell spell) {
  const char sep = format == TableFormat::csv ? ',' : ' ';
  std::string out;
  for (std::size_t p = 0; p < g.side(); ++p) {
    for (std::size_t q = 0; q < g.side(); ++q) {
      if (q != 0) out += sep;
      out += spell(g.at(p, q));
    }
    out += '\n';
  }
  return out;
}

}  // namespace detail

/// One line per row, entries separated by a space (text) or comma (csv).
inline std::string render_table(const TwistTable& t, TableFormat format = TableFormat::text,
                                MuMode mode = MuMode::symbolic) {
  return detail::render_grid(t, format,
                             [mode](SymbolicSign s) { return detail::entry_spelling(s, mode); });
}

/// The table at half resolution as coefficiented letters, e.g. "-mB".
inline std::string render_block_letters(int n, TableFormat format = TableFormat::text,
                                        MuMode mode = MuMode::symbolic) {
  detail::check_dimension(n, 2);
  return detail::render_grid(block_grid_direct(n), format,
                             [mode](BlockCell c) { return detail::cell_spelling(c, mode); });
}

}  // namespace clifftwist
