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

// Self-test sweeps and the sign-kernel benchmark behind `clifftwist selftest`
// and `clifftwist bench`.

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string_view>
#include <vector>

#include "clifftwist/kernel.hpp"

namespace clifftwist {

using SignFunction = Sign (*)(Blade, Blade, Mu);

struct NamedSignFunction {
  std::string_view name;
  SignFunction fn;
};

/// The sign kernels compared by the self-test. The last entry is the one the
/// cocycle sweep runs on.
using SignSuite = std::array<NamedSignFunction, 4>;

inline SignSuite default_sign_suite() {
  return {{{"oracle", &twist_oracle},
           {"recursive", [](Blade p, Blade q, Mu mu) { return twist_recursive(p, q, mu); }},
           {"tree", [](Blade p, Blade q, Mu mu) { return twist_tree(p, q, mu); }},
           {"closed", [](Blade p, Blade q, Mu mu) { return twist_closed(p, q, mu); }}}};
}

inline constexpr int kMaxSelftestDimension = 12;
/// Triples grow as 8^n; the cocycle sweep stops at this dimension.
inline constexpr int kMaxCocycleDimension = 8;

struct EquivalenceMismatch {
  Blade p, q;
  Mu mu;
  std::array<Sign, 4> signs;
};

struct CocycleViolation {
  Blade p, q, r;
  Mu mu;
};

struct SelftestReport {
  int n = 0;
  std::uint64_t pairs = 0;    // per mu
  std::uint64_t triples = 0;  // per mu
  std::uint64_t mismatches = 0;
  std::uint64_t violations = 0;
  std::optional<EquivalenceMismatch> first_mismatch;
  std::optional<CocycleViolation> first_violation;

  bool ok() const { return mismatches == 0 && violations == 0; }
};

/// Exhaustive four-way agreement over G_n x G_n and the cocycle identity
/// clf(p,q) clf(p^q,r) = clf(q,r) clf(p,q^r) over G_m^3, m = min(n, 8),
/// for both values of mu.
inline SelftestReport run_selftest(int n, const SignSuite& suite = default_sign_suite()) {
  SelftestReport rep;
  rep.n = n;
  const std::uint64_t side = std::uint64_t{1} << n;
  rep.pairs = side * side;
  const int cn = n < kMaxCocycleDimension ? n : kMaxCocycleDimension;
  const std::uint64_t cside = std::uint64_t{1} << cn;
  rep.triples = cside * cside * cside;

  for (const Mu mu : {Mu::plus, Mu::minus}) {
    for (std::uint64_t p = 0; p < side; ++p) {
      for (std::uint64_t q = 0; q < side; ++q) {
        std::array<Sign, 4> s;
        for (std::size_t k = 0; k < suite.size(); ++k) s[k] = suite[k].fn(Blade{p}, Blade{q}, mu);
        if (s[0] == s[1] && s[0] == s[2] && s[0] == s[3]) continue;
        ++rep.mismatches;
        if (!rep.first_mismatch) rep.first_mismatch = EquivalenceMismatch{Blade{p}, Blade{q}, mu, s};
      }
    }
    const SignFunction clf = suite.back().fn;
    for (std::uint64_t p = 0; p < cside; ++p) {
      for (std::uint64_t q = 0; q < cside; ++q) {
        const Sign pq = clf(Blade{p}, Blade{q}, mu);
        for (std::uint64_t r = 0; r < cside; ++r) {
          const Sign lhs = pq * clf(Blade{p ^ q}, Blade{r}, mu);
          const Sign rhs = clf(Blade{q}, Blade{r}, mu) * clf(Blade{p}, Blade{q ^ r}, mu);
          if (lhs == rhs) continue;
          ++rep.violations;
          if (!rep.first_violation)
            rep.first_violation = CocycleViolation{Blade{p}, Blade{q}, Blade{r}, mu};
        }
      }
    }
  }
  return rep;
}

namespace detail {
inline const char* sign_text(Sign s) { return s.negative() ? "-1" : "+1"; }
inline const char* mu_text(Mu m) { return m == Mu::minus ? "-1" : "+1"; }
}  // namespace detail

inline void print_selftest(std::ostream& out, const SelftestReport& rep, const SignSuite& suite) {
  out << (rep.mismatches == 0 ? "ok" : "FAIL") << ": 4x" << rep.pairs << " pairs x 2 mu, "
      << rep.mismatches << " mismatches\n";
  if (rep.first_mismatch) {
    const auto& m = *rep.first_mismatch;
    out << "  first mismatch: p=" << m.p.mask << " q=" << m.q.mask << " mu=" << detail::mu_text(m.mu);
    for (std::size_t k = 0; k < suite.size(); ++k)
      out << ' ' << suite[k].name << '=' << detail::sign_text(m.signs[k]);
    out << '\n';
  }
  out << (rep.violations == 0 ? "ok" : "FAIL") << ": " << rep.triples
      << " triples x 2 mu, " << rep.violations << " cocycle violations\n";
  if (rep.first_violation) {
    const auto& v = *rep.first_violation;
    out << "  first violation: p=" << v.p.mask << " q=" << v.q.mask << " r=" << v.r.mask
        << " mu=" << detail::mu_text(v.mu) << '\n';
  }
}

// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kBenchSeed = 0x2636'1143'3643ULL;
inline constexpr std::uint64_t kDefaultBenchPairs = 1'000'000;

struct BenchResult {
  SignAlgorithm algorithm;
  double ns_per_op;
  unsigned negatives;  // keeps the loop observable; identical across kernels
};

inline std::vector<std::pair<Blade, Blade>> bench_workload(std::uint64_t pairs) {
  std::mt19937_64 rng(kBenchSeed);
  std::vector<std::pair<Blade, Blade>> work;
  work.reserve(pairs);
  for (std::uint64_t i = 0; i < pairs; ++i) {
    const std::uint64_t p = rng();
    work.emplace_back(Blade{p}, Blade{rng()});
  }
  return work;
}

inline std::vector<BenchResult> run_bench(std::uint64_t pairs, Mu mu = Mu::minus) {
  const auto work = bench_workload(pairs);
  std::vector<BenchResult> results;
  for (const SignAlgorithm algo : kAllAlgorithms) {
    unsigned negatives = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& [p, q] : work) negatives += twist(p, q, mu, algo).negative() ? 1u : 0u;
    const auto stop = std::chrono::steady_clock::now();
    const double ns = std::chrono::duration<double, std::nano>(stop - start).count();
    results.push_back({algo, pairs == 0 ? 0.0 : ns / static_cast<double>(pairs), negatives});
  }
  return results;
}

}  // namespace clifftwist
