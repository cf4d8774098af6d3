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

// Published twist matrices, transcribed by hand with "m" for mu.

namespace golden {

inline constexpr const char* kDimension1 =
    "1 1\n"
    "1 m\n";

inline constexpr const char* kDimension2 =
    "1 1 1 1\n"
    "1 m 1 m\n"
    "1 -1 m -m\n"
    "1 -m m -1\n";

inline constexpr const char* kDimension3 =
    "1 1 1 1 1 1 1 1\n"
    "1 m 1 m 1 m 1 m\n"
    "1 -1 m -m 1 -1 m -m\n"
    "1 -m m -1 1 -m m -1\n"
    "1 -1 -1 1 m -m -m m\n"
    "1 -m -1 m m -1 -m 1\n"
    "1 1 -m -m m m -1 -1\n"
    "1 m -m -1 m 1 -1 -m\n";

inline constexpr const char* kDimension4Blocks =
    "A A A A A A A A\n"
    "B mB B mB B mB B mB\n"
    "B -B mB -mB B -B mB -mB\n"
    "A -mA mA -A A -mA mA -A\n"
    "B -B -B B mB -mB -mB mB\n"
    "A -mA -A mA mA -A -mA A\n"
    "A A -mA -mA mA mA -A -A\n"
    "B mB -mB -B mB B -B -mB\n";

}  // namespace golden
