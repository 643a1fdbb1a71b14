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

// Command-line front end. Precedence: built-in defaults < --config file < flags.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sglab/config.hpp"
#include "sglab/errors.hpp"
#include "sglab/runner.hpp"

namespace {

std::vector<std::string> split_list(const std::string &s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            throw sglab::InvalidArgument("empty entry in list '" + s + "'");
        }
        out.push_back(item);
    }
    return out;
}

std::vector<std::size_t> parse_dims(const std::string &s) {
    std::vector<std::size_t> out;
    for (const auto &item : split_list(s)) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception &) {
            pos = 0;
        }
        if (pos != item.size() || v < 1) {
            throw sglab::InvalidArgument("--d expects positive integers, got '" + item + "'");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"sglab: Stern-Gerlach interferometer and decoherence simulator"};
    app.require_subcommand(1);
    auto *run = app.add_subcommand("run", "Run one pipeline and emit a report");

    sglab::ExperimentConfig flags;
    std::string pipeline;
    std::string config_path;
    std::string observables;
    std::string dims;
    std::uint64_t seed = 0;

    run->add_option("pipeline", pipeline, "local|joint|condition|ordinary|blindness|absorbing|sweep")
        ->required();
    run->add_option("--config", config_path, "JSON config file (flags override its values)");
    auto *o_are = run->add_option("--alpha-re", flags.alpha_re, "Re(alpha), amplitude of spin up");
    auto *o_aim = run->add_option("--alpha-im", flags.alpha_im, "Im(alpha)");
    auto *o_bre = run->add_option("--beta-re", flags.beta_re, "Re(beta), amplitude of spin down");
    auto *o_bim = run->add_option("--beta-im", flags.beta_im, "Im(beta)");
    auto *o_basis = run->add_option("--basis", flags.basis, "Local readout basis: Z or X");
    auto *o_obs = run->add_option("--observables", observables, "Comma list from IZZ,ZZI,ZIZ,XXX");
    auto *o_shots = run->add_option("--shots", flags.shots, "Shots for the local pipeline");
    auto *o_d = run->add_option("--d", dims, "Comma list of environment dimensions");
    auto *o_trials = run->add_option("--trials", flags.trials, "Seeded models per d");
    auto *o_env = run->add_option("--env-model", flags.env_model, "haar|phases|identity");
    auto *o_w = run->add_option("--weights", flags.weights, "uniform|geometric");
    auto *o_seed = run->add_option("--seed", seed, "64-bit seed (required when CI is set)");
    auto *o_out = run->add_option("--out", flags.out, "Report path (default: $SGLAB_OUT_DIR or stdout)");
    auto *o_fmt = run->add_option("--format", flags.format, "json-lines|csv");
    auto *o_phase = run->add_option("--phase", flags.phase, "Relative phase of the lower path (radians)");
    auto *o_order = run->add_option("--order", flags.order, "spin-first|ancillas-first");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return sglab::kExitInvalid;
    }

    sglab::ExperimentConfig cfg;
    try {
        if (!config_path.empty()) {
            cfg = sglab::load_config_file(config_path);
        }
        cfg.pipeline = sglab::parse_pipeline(pipeline);
        auto given = [](const CLI::Option *o) { return o->count() > 0; };
        if (given(o_are)) cfg.alpha_re = flags.alpha_re;
        if (given(o_aim)) cfg.alpha_im = flags.alpha_im;
        if (given(o_bre)) cfg.beta_re = flags.beta_re;
        if (given(o_bim)) cfg.beta_im = flags.beta_im;
        if (given(o_basis)) cfg.basis = flags.basis;
        if (given(o_obs)) cfg.observables = split_list(observables);
        if (given(o_shots)) cfg.shots = flags.shots;
        if (given(o_d)) cfg.d = parse_dims(dims);
        if (given(o_trials)) cfg.trials = flags.trials;
        if (given(o_env)) cfg.env_model = flags.env_model;
        if (given(o_w)) cfg.weights = flags.weights;
        if (given(o_seed)) cfg.seed = seed;
        if (given(o_out)) cfg.out = flags.out;
        if (given(o_fmt)) cfg.format = flags.format;
        if (given(o_phase)) cfg.phase = flags.phase;
        if (given(o_order)) cfg.order = flags.order;
    } catch (const sglab::IoError &e) {
        std::cerr << "sglab: I/O error: " << e.what() << '\n';
        return sglab::kExitIo;
    } catch (const sglab::Error &e) {
        std::cerr << "sglab: invalid configuration: " << e.what() << '\n';
        return sglab::kExitInvalid;
    }
    return sglab::run(cfg, std::cout, std::cerr);
}
