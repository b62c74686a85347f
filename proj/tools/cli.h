// Copyright 2026 The plbr Authors
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

#ifndef PLBR_TOOLS_CLI_H_
#define PLBR_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "plbr/pwl.h"
#include "plbr/rational.h"

namespace plbr::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kBadSpec = 2;
inline constexpr int kExhausted = 3;

// Runs one command line (args[0] is the program name).
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// "a(t) = 1/2 t on (0, 1]" lines for the pieces meeting (lo, hi], followed
// by the c, m and b vectors in exact and decimal form.
void PrintStrategy(std::ostream& out, const Strategy& s, const Rational& lo,
                   const Rational& hi);

// Decimal rendering with `digits` significant digits and no trailing zeros.
std::string FormatDecimal(const Rational& x, int digits);

}  // namespace plbr::cli

#endif  // PLBR_TOOLS_CLI_H_
