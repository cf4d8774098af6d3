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

// With mu = -1 the blades i_1, i_2, i_3 of G_2 multiply like the quaternion
// units i, j, k. Prints their multiplication table and one rotation-style
// product.

#include <iostream>

#include "clifftwist/clifftwist.hpp"

int main() {
  using namespace clifftwist;
  const AlgebraContext ctx{Mu::minus};
  const char* unit[] = {"1", "i", "j", "k"};

  for (std::uint64_t p = 0; p < 4; ++p) {
    for (std::uint64_t q = 0; q < 4; ++q) {
      const auto [s, r] = blade_mul(Blade{p}, Blade{q}, ctx.mu);
      std::cout << (s.negative() ? "-" : " ") << unit[r.mask] << (q == 3 ? "\n" : "  ");
    }
  }

  const Multivector a = evaluate(parse_expression("1 + e_1 - 2e_2"), ctx);
  const Multivector b = evaluate(parse_expression("3 - e_12"), ctx);
  std::cout << "(" << to_string(a) << ") * (" << to_string(b) << ") = " << to_string(a * b)
            << '\n';
}
