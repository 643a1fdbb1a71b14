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

#include "sglab/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "sglab/decoherence.hpp"
#include "sglab/errors.hpp"

namespace sglab {

namespace {

const std::vector<std::pair<Pipeline, std::string>> kPipelines{
    {Pipeline::local, "local"},         {Pipeline::joint, "joint"},
    {Pipeline::condition, "condition"}, {Pipeline::ordinary, "ordinary"},
    {Pipeline::blindness, "blindness"}, {Pipeline::absorbing, "absorbing"},
    {Pipeline::sweep, "sweep"}};

template <typename T>
T get_as(const Json &j, const std::string &key) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception &) {
        throw InvalidArgument("config key '" + key + "' has the wrong type");
    }
}

std::size_t get_count(const Json &j, const std::string &key) {
    if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<long long>() < 0)) {
        throw InvalidArgument("config key '" + key + "' must be a nonnegative integer");
    }
    return j.get<std::size_t>();
}

} // namespace

std::string to_string(Pipeline p) {
    for (const auto &[k, name] : kPipelines) {
        if (k == p) {
            return name;
        }
    }
    return "?";
}

Pipeline parse_pipeline(const std::string &s) {
    for (const auto &[k, name] : kPipelines) {
        if (name == s) {
            return k;
        }
    }
    throw InvalidArgument("unknown pipeline '" + s + "'");
}

SpinPrep ExperimentConfig::prep() const {
    return {cplx(alpha_re, alpha_im), cplx(beta_re, beta_im)};
}

void ExperimentConfig::validate() const {
    prep().validate();
    if (basis != "Z" && basis != "X") {
        throw InvalidArgument("basis must be Z or X");
    }
    if (shots < 1) {
        throw InvalidArgument("shots must be >= 1");
    }
    if (trials < 1) {
        throw InvalidArgument("trials must be >= 1");
    }
    if (d.empty()) {
        throw InvalidArgument("at least one environment dimension is required");
    }
    for (auto v : d) {
        if (v < 1) {
            throw InvalidArgument("environment dimension d must be >= 1");
        }
    }
    if (pipeline == Pipeline::joint && observables.empty()) {
        throw InvalidArgument("joint pipeline needs at least one observable");
    }
    for (const auto &o : observables) {
        parse_joint_observable(o);
    }
    parse_env_model(env_model);
    parse_weights_model(weights);
    parse_report_format(format);
    if (order != "spin-first" && order != "ancillas-first") {
        throw InvalidArgument("order must be spin-first or ancillas-first");
    }
    if (!std::isfinite(phase)) {
        throw InvalidArgument("phase must be finite");
    }
}

Json to_json(const ExperimentConfig &cfg) {
    Json j;
    j["pipeline"] = to_string(cfg.pipeline);
    j["alpha_re"] = cfg.alpha_re;
    j["alpha_im"] = cfg.alpha_im;
    j["beta_re"] = cfg.beta_re;
    j["beta_im"] = cfg.beta_im;
    j["basis"] = cfg.basis;
    j["observables"] = cfg.observables;
    j["shots"] = cfg.shots;
    j["d"] = cfg.d;
    j["trials"] = cfg.trials;
    j["env_model"] = cfg.env_model;
    j["weights"] = cfg.weights;
    j["seed"] = cfg.seed ? Json(*cfg.seed) : Json(nullptr);
    j["phase"] = cfg.phase;
    j["order"] = cfg.order;
    j["out"] = cfg.out;
    j["format"] = cfg.format;
    return j;
}

ExperimentConfig config_from_json(const Json &j, ExperimentConfig cfg) {
    if (!j.is_object()) {
        throw InvalidArgument("config must be a JSON object");
    }
    for (const auto &[key, v] : j.items()) {
        if (key == "pipeline") {
            cfg.pipeline = parse_pipeline(get_as<std::string>(v, key));
        } else if (key == "alpha_re") {
            cfg.alpha_re = get_as<double>(v, key);
        } else if (key == "alpha_im") {
            cfg.alpha_im = get_as<double>(v, key);
        } else if (key == "beta_re") {
            cfg.beta_re = get_as<double>(v, key);
        } else if (key == "beta_im") {
            cfg.beta_im = get_as<double>(v, key);
        } else if (key == "basis") {
            cfg.basis = get_as<std::string>(v, key);
        } else if (key == "observables") {
            cfg.observables = get_as<std::vector<std::string>>(v, key);
        } else if (key == "shots") {
            cfg.shots = get_count(v, key);
        } else if (key == "d") {
            if (!v.is_array()) {
                throw InvalidArgument("config key 'd' must be an array of integers");
            }
            cfg.d.clear();
            for (const auto &e : v) {
                cfg.d.push_back(get_count(e, key));
            }
        } else if (key == "trials") {
            cfg.trials = get_count(v, key);
        } else if (key == "env_model") {
            cfg.env_model = get_as<std::string>(v, key);
        } else if (key == "weights") {
            cfg.weights = get_as<std::string>(v, key);
        } else if (key == "seed") {
            if (v.is_null()) {
                cfg.seed.reset();
            } else if (v.is_number_unsigned()) {
                cfg.seed = v.get<std::uint64_t>();
            } else {
                throw InvalidArgument("config key 'seed' must be a nonnegative integer or null");
            }
        } else if (key == "phase") {
            cfg.phase = get_as<double>(v, key);
        } else if (key == "order") {
            cfg.order = get_as<std::string>(v, key);
        } else if (key == "out") {
            cfg.out = get_as<std::string>(v, key);
        } else if (key == "format") {
            cfg.format = get_as<std::string>(v, key);
        } else {
            throw InvalidArgument("unknown config key '" + key + "'");
        }
    }
    return cfg;
}

ExperimentConfig load_config_file(const std::filesystem::path &path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read config file '" + path.string() + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    Json j;
    try {
        j = Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error &e) {
        throw InvalidArgument("config file '" + path.string() + "' is not valid JSON: " + e.what());
    }
    return config_from_json(j, std::move(base));
}

} // namespace sglab
