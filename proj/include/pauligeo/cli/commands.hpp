// Copyright 2026 The pauligeo Authors
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

#include <ostream>
#include <string>
#include <vector>

namespace pauligeo::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitPropertyFailure = 1,
  kExitParseError = 2,
  kExitInvariantViolation = 3,
  kExitUnsupported = 4,
  kExitTooLarge = 5,
};

/// Runs one CLI invocation. `args` excludes the program name.
///
///   expand   INPUT [-o OUT]
///   minimize INPUT [--metric fq|f2|f1] [--q Q] [--solver rounding|brute|bnb]
///            [--workers W] [-o OUT]
///   family   --n N [--sigma MASK] [--epsilon E] [--q-list Q,...] [-o OUT]
///   verify   --suite NAME [--trials T] [--seed S] [--n-max N]
///   bench    --solver S[,S...] --n N [--q Q] [--repeat R]
///            [--instance family|random] [--seed S]
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pauligeo::cli
