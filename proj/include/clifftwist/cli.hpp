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

// Command dispatch for the clifftwist tool. run_cli() takes the arguments
// after the program name and writes to the given streams, so tests can drive
// it in-process.
//
// Exit codes: 0 success, 1 self-test failure, 2 usage or parse error.

#include <charconv>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clifftwist/diagnostics.hpp"
#include "clifftwist/kernel.hpp"
#include "clifftwist/multivector.hpp"
#include "clifftwist/notation.hpp"
#include "clifftwist/twist_table.hpp"

namespace clifftwist::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSelftestFailed = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  MuMode mu = MuMode::minus;
  bool mu_given = false;
  SignAlgorithm algo = SignAlgorithm::closed;
  TableFormat format = TableFormat::text;
};

inline std::uint64_t parse_decimal(const std::string& s, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw UsageError(std::string(what) + ": expected a decimal integer below 2^64, got '" + s + "'");
  return v;
}

inline MuMode parse_mu(const std::string& s) {
  if (s == "+1" || s == "1") return MuMode::plus;
  if (s == "-1") return MuMode::minus;
  if (s == "sym") return MuMode::symbolic;
  throw UsageError("--mu: expected +1, -1 or sym, got '" + s + "'");
}

inline SignAlgorithm parse_algo(const std::string& s) {
  for (const SignAlgorithm a : kAllAlgorithms)
    if (name(a) == s) return a;
  throw UsageError("--algo: expected oracle, recursive, tree or closed, got '" + s + "'");
}

inline TableFormat parse_format(const std::string& s) {
  if (s == "text") return TableFormat::text;
  if (s == "csv") return TableFormat::csv;
  throw UsageError("--format: expected text or csv, got '" + s + "'");
}

/// mu for commands that need a concrete value.
inline Mu concrete_mu(const CliConfig& cfg) {
  if (cfg.mu == MuMode::symbolic) throw UsageError("--mu sym is only valid for 'table'");
  return cfg.mu == MuMode::plus ? Mu::plus : Mu::minus;
}

inline const char* sign_text(Sign s) { return s.negative() ? "-1" : "+1"; }

inline std::string trace_line(const TraceStep& step) {
  std::string out = "(";
  out += static_cast<char>('0' + step.bit_p);
  out += ',';
  out += static_cast<char>('0' + step.bit_q);
  out += ") -> ";
  if (step.sign.negative()) out += '-';
  out += step.letter == Letter::A ? 'A' : 'B';
  return out;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   const SignSuite& suite = default_sign_suite()) {
  CLI::App app{"Clifford algebra blade arithmetic via twisted group algebra signs", "clifftwist"};
  app.require_subcommand(1);

  std::string mu_text = "-1", algo_text = "closed", format_text = "text";
  std::string p_text, q_text, expr_text;
  int n = 0;
  bool blocks = false, i_form = false;
  std::uint64_t pairs = kDefaultBenchPairs;
  int selftest_n = 8;

  auto add_mu = [&](CLI::App* sub) {
    return sub->add_option("--mu", mu_text, "Square of the generators: +1, -1 or sym");
  };
  auto add_algo = [&](CLI::App* sub) {
    sub->add_option("--algo", algo_text, "Sign kernel: oracle, recursive, tree or closed");
  };

  CLI::App* sign = app.add_subcommand("sign", "Print clf(p, q)");
  sign->add_option("p", p_text)->required();
  sign->add_option("q", q_text)->required();
  CLI::Option* sign_mu = add_mu(sign);
  add_algo(sign);

  CLI::App* mul = app.add_subcommand("mul", "Evaluate a multivector expression");
  mul->add_option("expression", expr_text)->required();
  CLI::Option* mul_mu = add_mu(mul);
  add_algo(mul);
  mul->add_flag("--i-form", i_form, "Print blades as i_N");

  CLI::App* table = app.add_subcommand("table", "Print the 2^n x 2^n twist table");
  table->add_option("n", n)->required();
  CLI::Option* table_mu = add_mu(table);
  table->add_option("--format", format_text, "text or csv");
  table->add_flag("--blocks", blocks, "Half-resolution A/B letter layout");

  CLI::App* trace = app.add_subcommand("trace", "Print the tree path for clf(p, q)");
  trace->add_option("p", p_text)->required();
  trace->add_option("q", q_text)->required();
  CLI::Option* trace_mu = add_mu(trace);

  CLI::App* selftest = app.add_subcommand("selftest", "Exhaustive cross-check of the sign kernels");
  selftest->add_option("--n", selftest_n, "Check all pairs below 2^n");

  CLI::App* bench = app.add_subcommand("bench", "Time each sign kernel");
  bench->add_option("--pairs", pairs, "Workload size");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    CliConfig cfg;
    cfg.mu = parse_mu(mu_text);
    cfg.mu_given = (sign_mu->count() + mul_mu->count() + table_mu->count() + trace_mu->count()) > 0;
    cfg.algo = parse_algo(algo_text);
    cfg.format = parse_format(format_text);

    if (sign->parsed()) {
      const Blade p{parse_decimal(p_text, "p")};
      const Blade q{parse_decimal(q_text, "q")};
      out << sign_text(twist(p, q, concrete_mu(cfg), cfg.algo)) << '\n';
      return kExitOk;
    }
    if (mul->parsed()) {
      const AlgebraContext ctx{concrete_mu(cfg)};
      Expression expr;
      try {
        expr = parse_expression(expr_text);
      } catch (const NotationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
      }
      const Multivector m = evaluate(expr, ctx, cfg.algo);
      out << to_string(m, i_form ? BladeStyle::i_form : BladeStyle::e_form) << '\n';
      return kExitOk;
    }
    if (table->parsed()) {
      if (n < kMinTableDimension || n > kMaxTableDimension)
        throw UsageError("table: n must be in [1, 12]");
      if (blocks) {
        if (n < 2) throw UsageError("table --blocks: n must be in [2, 12]");
        // The letters are symbolic in mu themselves; coefficients follow
        // --mu only when it is given explicitly.
        const MuMode mode = cfg.mu_given ? cfg.mu : MuMode::symbolic;
        out << render_block_letters(n, cfg.format, mode);
      } else {
        out << render_table(table_direct(n), cfg.format, cfg.mu);
      }
      return kExitOk;
    }
    if (trace->parsed()) {
      const Blade p{parse_decimal(p_text, "p")};
      const Blade q{parse_decimal(q_text, "q")};
      const auto path = trace_tree(p, q, concrete_mu(cfg));
      for (const TraceStep& step : path) out << trace_line(step) << '\n';
      const Sign result = path.empty() ? Sign::plus() : path.back().sign;
      out << "clf = " << sign_text(result) << '\n';
      return kExitOk;
    }
    if (selftest->parsed()) {
      if (selftest_n < 0 || selftest_n > kMaxSelftestDimension)
        throw UsageError("selftest: --n must be in [0, 12]");
      const SelftestReport rep = run_selftest(selftest_n, suite);
      print_selftest(out, rep, suite);
      return rep.ok() ? kExitOk : kExitSelftestFailed;
    }
    if (bench->parsed()) {
      if (pairs == 0) throw UsageError("bench: --pairs must be positive");
      const auto results = run_bench(pairs);
      for (const BenchResult& r : results) {
        std::ostringstream line;
        line << std::left << std::setw(10) << name(r.algorithm) << std::right << std::fixed
             << std::setprecision(2) << std::setw(10) << r.ns_per_op << " ns/op  (" << pairs
             << " pairs, mu=-1)";
        out << line.str() << '\n';
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace clifftwist::cli
