// Copyright 2026 The sglab Authors
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

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "sglab/config.hpp"
#include "sglab/report.hpp"

namespace sglab {

/// Environment variable naming the default report directory.
inline constexpr const char *kOutDirEnv = "SGLAB_OUT_DIR";

/// Builds the report for a fully resolved config (seed set). Throws on errors.
Report run_pipeline(const ExperimentConfig &cfg);

/**
 * Seed resolution: an explicit seed wins; otherwise a CI run (CI set and
 * non-empty) is rejected and an interactive one draws from system entropy.
 */
ExperimentConfig resolve_seed(ExperimentConfig cfg);

/// Report destination: `out` if set, else $SGLAB_OUT_DIR/<pipeline>.<ext>, else stdout.
std::optional<std::filesystem::path> output_path(const ExperimentConfig &cfg);

enum ExitCode : int { kExitOk = 0, kExitInvalid = 2, kExitCap = 3, kExitIo = 4 };

/// Validates, runs and emits. Diagnostics go to `err`; stdout output goes to `out`.
int run(const ExperimentConfig &cfg, std::ostream &out, std::ostream &err);

} // namespace sglab
