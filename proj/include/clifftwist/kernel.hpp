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

// Basis blades of a Clifford algebra as 64-bit masks, and the twist sign
// clf(p, q) with i_p * i_q = clf(p, q) * i_{p ^ q}.
//
// Four independent routes compute the twist:
//   - twist_oracle     factor, bubble-sort, cancel (ground truth, slow)
//   - twist_recursive  strip bit pairs from the LSB upward
//   - twist_tree       4-state automaton over bit pairs, MSB first
//   - twist_closed     mu^popcount(p & q) * (-1)^inversions(p, q), word parallel
// All of them are pure and safe to call from any thread.

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

namespace clifftwist {

/// A basis blade. Bit k-1 set means generator e_k is a factor; 0 is the scalar.
/// Blades form a group under XOR.
struct Blade {
  std::uint64_t mask = 0;

  constexpr Blade() = default;
  constexpr explicit Blade(std::uint64_t m) : mask(m) {}

  /// The blade e_k for k in 1..64.
  static constexpr Blade generator(unsigned k) { return Blade{std::uint64_t{1} << (k - 1)}; }

  friend constexpr Blade operator^(Blade a, Blade b) { return Blade{a.mask ^ b.mask}; }
  friend constexpr auto operator<=>(Blade, Blade) = default;
};

/// The common square of every generator.
enum class Mu : std::int8_t { plus = 1, minus = -1 };

/// An element of {+1, -1}.
class Sign {
 public:
  constexpr Sign() = default;
  static constexpr Sign plus() { return Sign{false}; }
  static constexpr Sign minus() { return Sign{true}; }
  static constexpr Sign of(Mu mu) { return Sign{mu == Mu::minus}; }
  /// (-1)^parity
  static constexpr Sign parity(unsigned bits) { return Sign{(bits & 1u) != 0}; }

  constexpr bool negative() const { return negative_; }
  constexpr int value() const { return negative_ ? -1 : 1; }

  friend constexpr Sign operator*(Sign a, Sign b) { return Sign{a.negative_ != b.negative_}; }
  constexpr Sign& operator*=(Sign o) { return *this = *this * o; }
  constexpr Sign operator-() const { return Sign{!negative_}; }
  friend constexpr bool operator==(Sign, Sign) = default;

 private:
  constexpr explicit Sign(bool neg) : negative_(neg) {}
  bool negative_ = false;
};

/// Number of 1-blade factors.
constexpr unsigned grade(Blade p) { return static_cast<unsigned>(std::popcount(p.mask)); }

/// (-1)^grade(p): the sign picked up when e_1 is commuted past every factor of i_{2p}.
constexpr Sign sigma(Blade p) { return Sign::parity(grade(p)); }

// ---------------------------------------------------------------------------
// Ground-truth oracle.
//
// Write both blades as ascending lists of generator indices, concatenate, and
// bubble sort. Each swap of two distinct adjacent generators flips the sign.
// Once sorted, every generator shared by p and q sits next to its twin and the
// pair collapses to mu.

inline Sign twist_oracle(Blade p, Blade q, Mu mu) {
  std::vector<unsigned> word;
  word.reserve(128);
  for (unsigned k = 0; k < 64; ++k)
    if ((p.mask >> k) & 1u) word.push_back(k);
  for (unsigned k = 0; k < 64; ++k)
    if ((q.mask >> k) & 1u) word.push_back(k);

  Sign s = Sign::plus();
  for (std::size_t end = word.size(); end > 1; --end) {
    bool swapped = false;
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        s = -s;
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] == word[i + 1]) {
      s *= Sign::of(mu);
      ++i;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Recursive definition, evaluated iteratively from the least significant bit
// pair upward:
//   clf(0,0) = 1
//   clf(2p,2q) = clf(2p+1,2q) = clf(p,q)
//   clf(2p,2q+1) = sigma(p) clf(p,q)
//   clf(2p+1,2q+1) = sigma(p) mu clf(p,q)
//
// The value type is a template parameter so the same recursion runs over
// concrete signs and over symbolic {+-1, +-mu} entries (see twist_table.hpp).
// S needs a multiplicative identity S{}, operator*, and construction from Sign.

template <class S>
constexpr S twist_recursive_as(Blade p, Blade q, S mu) {
  S acc{};
  std::uint64_t a = p.mask;
  std::uint64_t b = q.mask;
  while ((a | b) != 0) {
    const bool pa = (a & 1u) != 0;
    const bool qb = (b & 1u) != 0;
    a >>= 1;
    b >>= 1;
    if (qb) {
      acc = acc * S(sigma(Blade{a}));
      if (pa) acc = acc * mu;
    }
  }
  return acc;
}

constexpr Sign twist_recursive(Blade p, Blade q, Mu mu) {
  return twist_recursive_as<Sign>(p, q, Sign::of(mu));
}

// ---------------------------------------------------------------------------
// Tree / automaton. The four repeating tree components are states
// {+A, -A, +B, -B}; a (p-bit, q-bit) pair selects a branch. The letter tracks
// the parity of p-bits consumed so far (A even, B odd); the sign of the final
// state is the twist.

enum class Letter : std::uint8_t { A = 0, B = 1 };

/// One automaton step: the state reached after consuming (bit_p, bit_q).
struct TraceStep {
  Letter letter = Letter::A;
  Sign sign;
  std::uint8_t bit_p = 0;
  std::uint8_t bit_q = 0;
  friend constexpr bool operator==(const TraceStep&, const TraceStep&) = default;
};

namespace detail {

struct Branch {
  Letter letter;
  bool negate;
};

// Children of +A and +B, indexed [letter][p-bit][q-bit]. The children of -A
// and -B are the same with the sign flipped.
using TreeComponents = std::array<std::array<std::array<Branch, 2>, 2>, 2>;

inline constexpr TreeComponents kTreeMuPlus{{
    // A -> [A A] [B B]
    {{{{{Letter::A, false}, {Letter::A, false}}}, {{{Letter::B, false}, {Letter::B, false}}}}},
    // B -> [B -B] [A -A]
    {{{{{Letter::B, false}, {Letter::B, true}}}, {{{Letter::A, false}, {Letter::A, true}}}}},
}};

inline constexpr TreeComponents kTreeMuMinus{{
    // A -> [A A] [B -B]
    {{{{{Letter::A, false}, {Letter::A, false}}}, {{{Letter::B, false}, {Letter::B, true}}}}},
    // B -> [B -B] [A A]
    {{{{{Letter::B, false}, {Letter::B, true}}}, {{{Letter::A, false}, {Letter::A, false}}}}},
}};

constexpr const TreeComponents& tree_for(Mu mu) {
  return mu == Mu::plus ? kTreeMuPlus : kTreeMuMinus;
}

/// Bits to walk: the longer of the two masks, the shorter one zero padded on the left.
constexpr int walk_length(Blade p, Blade q) {
  return static_cast<int>(std::bit_width(p.mask | q.mask));
}

}  // namespace detail

constexpr Sign twist_tree(Blade p, Blade q, Mu mu) {
  const auto& tree = detail::tree_for(mu);
  Letter letter = Letter::A;
  Sign s = Sign::plus();
  for (int k = detail::walk_length(p, q) - 1; k >= 0; --k) {
    const auto bp = (p.mask >> k) & 1u;
    const auto bq = (q.mask >> k) & 1u;
    const auto& br = tree[static_cast<int>(letter)][bp][bq];
    letter = br.letter;
    if (br.negate) s = -s;
  }
  return s;
}

/// The full automaton path, one step per bit pair, most significant first.
inline std::vector<TraceStep> trace_tree(Blade p, Blade q, Mu mu) {
  const auto& tree = detail::tree_for(mu);
  std::vector<TraceStep> path;
  const int len = detail::walk_length(p, q);
  path.reserve(static_cast<std::size_t>(len));
  Letter letter = Letter::A;
  Sign s = Sign::plus();
  for (int k = len - 1; k >= 0; --k) {
    const auto bp = static_cast<std::uint8_t>((p.mask >> k) & 1u);
    const auto bq = static_cast<std::uint8_t>((q.mask >> k) & 1u);
    const auto& br = tree[static_cast<int>(letter)][bp][bq];
    letter = br.letter;
    if (br.negate) s = -s;
    path.push_back(TraceStep{letter, s, bp, bq});
  }
  return path;
}

// ---------------------------------------------------------------------------
// Closed form: clf(p,q) = mu^popcount(p & q) * (-1)^inv(p,q), where inv counts
// pairs (i > k) with bit i of p and bit k of q set.
//
// Parity of inv: let above[k] be the XOR of all p-bits strictly above k. A
// suffix-XOR scan of p >> 1 gives all of them at once; then
// inv = popcount(above & q) mod 2.

constexpr std::uint64_t parity_above(std::uint64_t p) {
  std::uint64_t s = p >> 1;
  s ^= s >> 1;
  s ^= s >> 2;
  s ^= s >> 4;
  s ^= s >> 8;
  s ^= s >> 16;
  s ^= s >> 32;
  return s;
}

constexpr Sign twist_closed(Blade p, Blade q, Mu mu) {
  unsigned flips = static_cast<unsigned>(std::popcount(parity_above(p.mask) & q.mask));
  if (mu == Mu::minus) flips += static_cast<unsigned>(std::popcount(p.mask & q.mask));
  return Sign::parity(flips);
}

// ---------------------------------------------------------------------------

enum class SignAlgorithm : std::uint8_t { oracle, recursive, tree, closed };

inline constexpr std::array<SignAlgorithm, 4> kAllAlgorithms{
    SignAlgorithm::oracle, SignAlgorithm::recursive, SignAlgorithm::tree, SignAlgorithm::closed};

constexpr std::string_view name(SignAlgorithm a) {
  switch (a) {
    case SignAlgorithm::oracle: return "oracle";
    case SignAlgorithm::recursive: return "recursive";
    case SignAlgorithm::tree: return "tree";
    case SignAlgorithm::closed: return "closed";
  }
  return "?";
}

inline Sign twist(Blade p, Blade q, Mu mu, SignAlgorithm algo = SignAlgorithm::closed) {
  switch (algo) {
    case SignAlgorithm::oracle: return twist_oracle(p, q, mu);
    case SignAlgorithm::recursive: return twist_recursive(p, q, mu);
    case SignAlgorithm::tree: return twist_tree(p, q, mu);
    case SignAlgorithm::closed: break;
  }
  return twist_closed(p, q, mu);
}

struct SignedBlade {
  Sign sign;
  Blade blade;
  friend constexpr bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

/// i_p * i_q = clf(p,q) i_{p^q}
constexpr SignedBlade blade_mul(Blade p, Blade q, Mu mu) {
  return SignedBlade{twist_closed(p, q, mu), p ^ q};
}

}  // namespace clifftwist
