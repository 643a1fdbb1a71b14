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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sglab/experiment.hpp"
#include "sglab/report.hpp"

namespace sglab {

enum class Pipeline { local, joint, condition, ordinary, blindness, absorbing, sweep };

std::string to_string(Pipeline p);
Pipeline parse_pipeline(const std::string &s);

/**
 * Everything a CLI run needs. Keys of the JSON form match the long flag
 * names with '-' replaced by '_' (e.g. "alpha_re", "env_model").
 */
struct ExperimentConfig {
    Pipeline pipeline = Pipeline::local;
    double alpha_re = 0.70710678118654757;
    double alpha_im = 0.0;
    double beta_re = 0.70710678118654757;
    double beta_im = 0.0;
    std::string basis = "Z";
    std::vector<std::string> observables{"IZZ", "ZZI", "XXX"};
    std::size_t shots = 1000;
    std::vector<std::size_t> d{3};
    std::size_t trials = 100;
    std::string env_model = "haar";
    std::string weights = "uniform";
    std::optional<std::uint64_t> seed;
    /// Relative phase of the lower path at recombination (local / joint).
    double phase = 0.0;
    /// Local-mode readout order: "spin-first" or "ancillas-first".
    std::string order = "spin-first";
    std::string out;
    std::string format = "json-lines";

    friend bool operator==(const ExperimentConfig &, const ExperimentConfig &) = default;

    /// Throws InvalidArgument on any out-of-range or unknown value.
    void validate() const;
    [[nodiscard]] SpinPrep prep() const;
};

Json to_json(const ExperimentConfig &cfg);

/// Overlays the keys of `j` on `base`. Unknown keys and wrong types throw InvalidArgument.
ExperimentConfig config_from_json(const Json &j, ExperimentConfig base = {});

/// Reads a JSON config file; IoError if unreadable, InvalidArgument if malformed.
ExperimentConfig load_config_file(const std::filesystem::path &path, ExperimentConfig base = {});

} // namespace sglab
