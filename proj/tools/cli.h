// Copyright 2026 The greedyprep Authors
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

#ifndef GREEDYPREP_TOOLS_CLI_H
#define GREEDYPREP_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "greedyprep/linalg.h"

namespace greedyprep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by main() and the tests. argv[0] is the program name.
/// Subcommands: design, bench, noise, sample, oracle.
int run(const std::vector<std::string> &argv, std::ostream &out, std::ostream &err);

/// Parses a state given on the command line for a model of dimension `dim`:
///   "k"                 computational basis state |k>
///   "bloch:THETA,PHI"   Bloch angles (durations syntax, so "pi/2" works); dimension 2 only
///   "a,b[,c,d]"         amplitudes; each entry "re" or "re:im"; rescaled to unit norm
StateVector parse_state(std::string_view text, size_t dim);

}  // namespace greedyprep::cli

#endif
