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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "sglab/config.hpp"
#include "sglab/errors.hpp"
#include "sglab/runner.hpp"

using namespace sglab;

TEST_CASE("defaults validate") {
    const ExperimentConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    CHECK(cfg.prep().alpha.real() == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("validation rejects bad values") {
    auto expect_bad = [](auto mutate) {
        ExperimentConfig c;
        mutate(c);
        CHECK_THROWS_AS(c.validate(), InvalidArgument);
    };
    expect_bad([](ExperimentConfig &c) { c.alpha_re = 1.0; });
    expect_bad([](ExperimentConfig &c) { c.shots = 0; });
    expect_bad([](ExperimentConfig &c) { c.d = {4, 0}; });
    expect_bad([](ExperimentConfig &c) { c.d.clear(); });
    expect_bad([](ExperimentConfig &c) { c.basis = "Y"; });
    expect_bad([](ExperimentConfig &c) { c.observables = {"ZZZ"}; });
    expect_bad([](ExperimentConfig &c) { c.env_model = "gue"; });
    expect_bad([](ExperimentConfig &c) { c.weights = "thermal"; });
    expect_bad([](ExperimentConfig &c) { c.format = "xml"; });
    expect_bad([](ExperimentConfig &c) { c.order = "random"; });
    expect_bad([](ExperimentConfig &c) { c.trials = 0; });
}

TEST_CASE("json round trip") {
    ExperimentConfig cfg;
    cfg.pipeline = Pipeline::sweep;
    cfg.alpha_re = 0.6;
    cfg.beta_re = 0.0;
    cfg.beta_im = 0.8;
    cfg.observables = {"XXX", "ZIZ"};
    cfg.d = {4, 16, 64};
    cfg.seed = 18446744073709551615ULL;
    cfg.phase = 0.1;
    cfg.format = "csv";
    CHECK(config_from_json(to_json(cfg)) == cfg);
    CHECK(config_from_json(Json::parse(dump_json(to_json(cfg)))) == cfg);
    ExperimentConfig unseeded;
    CHECK(config_from_json(to_json(unseeded)) == unseeded);
}

TEST_CASE("strict parsing") {
    CHECK_THROWS_AS(config_from_json(Json{{"shotz", 3}}), InvalidArgument);
    CHECK_THROWS_AS(config_from_json(Json{{"shots", "many"}}), InvalidArgument);
    CHECK_THROWS_AS(config_from_json(Json{{"shots", -3}}), InvalidArgument);
    CHECK_THROWS_AS(config_from_json(Json{{"seed", -1}}), InvalidArgument);
    CHECK_THROWS_AS(config_from_json(Json{{"d", 4}}), InvalidArgument);
    CHECK_THROWS_AS(config_from_json(Json{{"pipeline", "teleport"}}), InvalidArgument);
    CHECK_THROWS_AS(config_from_json(Json::array()), InvalidArgument);
    const auto c = config_from_json(Json{{"shots", 5}}, ExperimentConfig{.basis = "X"});
    CHECK(c.shots == 5);
    CHECK(c.basis == "X");
}

TEST_CASE("config files") {
    const auto path = std::filesystem::temp_directory_path() / "sglab_cfg_test.json";
    {
        std::ofstream out(path);
        out << R"({"pipeline": "joint", "observables": ["XXX"], "seed": 3})";
    }
    const auto c = load_config_file(path);
    CHECK(c.pipeline == Pipeline::joint);
    CHECK(c.observables == std::vector<std::string>{"XXX"});
    CHECK(c.seed == 3u);
    {
        std::ofstream out(path);
        out << "{not json";
    }
    CHECK_THROWS_AS(load_config_file(path), InvalidArgument);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_config_file(path), IoError);
}

TEST_CASE("pipeline names") {
    for (auto p : {Pipeline::local, Pipeline::joint, Pipeline::condition, Pipeline::ordinary, Pipeline::blindness,
                   Pipeline::absorbing, Pipeline::sweep}) {
        CHECK(parse_pipeline(to_string(p)) == p);
    }
}

TEST_CASE("seed resolution and output path") {
    ExperimentConfig cfg;
    cfg.seed = 9;
    CHECK(resolve_seed(cfg).seed == 9u);
    cfg.seed.reset();
    ::setenv("CI", "1", 1);
    CHECK_THROWS_AS(resolve_seed(cfg), InvalidArgument);
    ::unsetenv("CI");
    CHECK(resolve_seed(cfg).seed.has_value());

    ::unsetenv(kOutDirEnv);
    CHECK_FALSE(output_path(cfg).has_value());
    ::setenv(kOutDirEnv, "/tmp/reports", 1);
    cfg.pipeline = Pipeline::sweep;
    cfg.format = "csv";
    CHECK(output_path(cfg).value() == std::filesystem::path("/tmp/reports/sweep.csv"));
    cfg.out = "x.jsonl";
    CHECK(output_path(cfg).value() == std::filesystem::path("x.jsonl"));
    ::unsetenv(kOutDirEnv);
}

TEST_CASE("run maps errors to exit codes") {
    std::ostringstream out;
    std::ostringstream err;
    ExperimentConfig cfg;
    cfg.seed = 1;
    cfg.shots = 0;
    CHECK(run(cfg, out, err) == kExitInvalid);
    CHECK(err.str().find("shots") != std::string::npos);

    cfg.shots = 10;
    cfg.pipeline = Pipeline::blindness;
    cfg.d = {5};
    cfg.trials = 1;
    CHECK(run(cfg, out, err) == kExitCap);

    cfg.pipeline = Pipeline::ordinary;
    cfg.out = "/nonexistent-dir/report.jsonl";
    CHECK(run(cfg, out, err) == kExitIo);

    cfg.out.clear();
    std::ostringstream ok;
    CHECK(run(cfg, ok, err) == kExitOk);
    CHECK(ok.str().find("\"type\":\"summary\"") != std::string::npos);
}

TEST_CASE("unseeded runs record the drawn seed") {
    ::unsetenv("CI");
    ExperimentConfig cfg;
    cfg.pipeline = Pipeline::ordinary;
    std::ostringstream out;
    std::ostringstream err;
    REQUIRE(run(cfg, out, err) == kExitOk);
    std::istringstream in(out.str());
    std::string first;
    std::getline(in, first);
    CHECK(Json::parse(first).at("seed").is_number_unsigned());
}
