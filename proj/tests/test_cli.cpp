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
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "sglab/config.hpp"
#include "sglab/report.hpp"

using namespace sglab;
namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "sglab_cli_tests";

int sh(const std::string &args, const std::string &env = "") {
    fs::create_directories(kWork);
    const std::string cmd = "env -u CI -u SGLAB_OUT_DIR " + env + " '" + SGLAB_CLI_PATH + "' " + args + " 2>" +
                            (kWork / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

std::vector<Json> lines_of(const fs::path &p) {
    std::vector<Json> out;
    std::istringstream in(slurp(p));
    std::string line;
    while (std::getline(in, line)) {
        out.push_back(Json::parse(line));
    }
    return out;
}

Json summary_of(const std::vector<Json> &lines) { return lines.back(); }

std::vector<Json> records_of(const std::vector<Json> &lines) {
    std::vector<Json> out;
    for (const auto &l : lines) {
        if (l.at("type") == "record") {
            out.push_back(l);
        }
    }
    return out;
}

ExperimentConfig echoed_config(const std::vector<Json> &lines) {
    Json c = lines.front();
    c.erase("type");
    return config_from_json(c);
}

} // namespace

TEST_CASE("local pipeline") {
    const auto out = kWork / "local.jsonl";
    REQUIRE(sh("run local --shots 2000 --basis Z --seed 7 --out " + out.string()) == 0);
    const auto lines = lines_of(out);
    CHECK(records_of(lines).size() == 2000);
    const auto hist = summary_of(lines).at("histogram");
    CHECK(hist.size() == 2);
    CHECK(hist.at("110").get<int>() + hist.at("001").get<int>() == 2000);
    const auto cfg = echoed_config(lines);
    CHECK(cfg.seed == 7u);
    CHECK(cfg.shots == 2000);

    REQUIRE(sh("run local --shots 500 --basis X --order ancillas-first --seed 8 --out " + out.string()) == 0);
    CHECK(summary_of(lines_of(out)).at("product_plus") == 500);
}

TEST_CASE("joint pipeline") {
    const auto out = kWork / "joint.jsonl";
    REQUIRE(sh("run joint --observables IZZ,ZZI,XXX --seed 7 --out " + out.string()) == 0);
    const auto s = summary_of(lines_of(out));
    CHECK(s.at("readouts") == Json::parse("[-1,1,1]"));
    CHECK(s.at("final_fidelity").get<double>() >= 1 - 1e-10);
}

TEST_CASE("condition pipeline") {
    const auto out = kWork / "condition.jsonl";
    REQUIRE(sh("run condition --seed 1 --out " + out.string()) == 0);
    const auto recs = records_of(lines_of(out));
    REQUIRE(recs.size() == 2);
    for (const auto &r : recs) {
        CHECK(std::abs(r.at("bell_fidelity").get<double>() - 1.0) < 1e-12);
        CHECK(std::abs(r.at("zz").get<double>() + 1.0) < 1e-12);
    }
}

TEST_CASE("ordinary pipeline") {
    const auto out = kWork / "ordinary.jsonl";
    REQUIRE(sh("run ordinary --alpha-re 0.6 --beta-re 0.8 --seed 1 --out " + out.string()) == 0);
    const auto s = summary_of(lines_of(out));
    CHECK(std::abs(s.at("zp_up_zp_dn").get<double>() + 1.0) < 1e-12);
    CHECK(std::abs(s.at("zs_zp_up").get<double>() - 1.0) < 1e-12);
    CHECK(std::abs(s.at("zs_zp_dn").get<double>() + 1.0) < 1e-12);
}

TEST_CASE("blindness and absorbing pipelines") {
    for (const char *p : {"blindness", "absorbing"}) {
        const auto out = kWork / (std::string(p) + ".jsonl");
        REQUIRE(sh(std::string("run ") + p + " --d 1,2,3 --trials 4 --seed 5 --out " + out.string()) == 0);
        const auto lines = lines_of(out);
        CHECK(records_of(lines).size() == 12);
        const auto s = summary_of(lines);
        CHECK(s.at("max_oracle_deviation").get<double>() < 1e-10);
        CHECK(s.at("max_demon_error").get<double>() < 1e-10);
        CHECK(s.at("max_readout_error").get<double>() < 1e-10);
    }
}

TEST_CASE("sweep pipeline as csv") {
    const auto out = kWork / "sweep.csv";
    REQUIRE(sh("run sweep --d 4,16 --trials 50 --seed 7 --format csv --out " + out.string()) == 0);
    std::istringstream in(slurp(out));
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind("# config ", 0) == 0);
    std::getline(in, line);
    CHECK(line == "d,trial,seed,f_abs2,offdiag_abs,zs_zup,zs_zdn,zup_zdn");
    int rows = 0;
    while (std::getline(in, line)) {
        rows += line.rfind('#', 0) != 0;
    }
    CHECK(rows == 100);
}

TEST_CASE("identical seeds give byte-identical files") {
    const std::vector<std::string> runs{
        "run local --shots 3000 --basis X --seed 11",
        "run joint --observables XXX,IZZ,XXX --alpha-re 0.6 --beta-re 0.8 --seed 11",
        "run sweep --d 4,8 --trials 40 --seed 11 --format csv",
        "run blindness --d 2 --trials 3 --env-model phases --weights geometric --seed 11",
    };
    for (const auto &r : runs) {
        CAPTURE(r);
        const auto path = kWork / "repeat.out";
        REQUIRE(sh(r + " --out " + path.string()) == 0);
        const auto first = slurp(path);
        fs::remove(path);
        REQUIRE(sh(r + " --out " + path.string()) == 0);
        const auto second = slurp(path);
        CHECK(!first.empty());
        CHECK((first == second)); // parenthesized: keep the file bodies out of the failure log
    }
}

TEST_CASE("config file with flag overrides") {
    const auto cfg = kWork / "cfg.json";
    fs::create_directories(kWork);
    {
        std::ofstream out(cfg);
        out << R"({"shots": 123, "basis": "X", "seed": 4})";
    }
    const auto out = kWork / "fromfile.jsonl";
    REQUIRE(sh("run local --config " + cfg.string() + " --shots 50 --out " + out.string()) == 0);
    const auto c = echoed_config(lines_of(out));
    CHECK(c.shots == 50);
    CHECK(c.basis == "X");
    CHECK(c.seed == 4u);
    CHECK(c.pipeline == Pipeline::local);
}

TEST_CASE("default output directory from the environment") {
    const auto dir = kWork / "outdir";
    fs::remove_all(dir);
    fs::create_directories(dir);
    REQUIRE(sh("run ordinary --seed 2", "SGLAB_OUT_DIR=" + dir.string()) == 0);
    CHECK(fs::exists(dir / "ordinary.jsonl"));
}

TEST_CASE("exit codes") {
    CHECK(sh("run local --shots 0 --seed 1") == 2);
    CHECK(sh("run local --alpha-re 1 --seed 1") == 2);
    CHECK(sh("run teleport --seed 1") == 2);
    CHECK(sh("run local --bogus") == 2);
    CHECK(sh("run sweep --d 4,x --seed 1") == 2);
    CHECK(sh("run local --seed 1", "CI=1") == 0);
    CHECK(sh("run local --shots 5", "CI=1") == 2);
    CHECK(sh("run blindness --d 5 --trials 1 --seed 1") == 3);
    CHECK(sh("run ordinary --seed 1 --out /nonexistent-dir/x.jsonl") == 4);
    CHECK(sh("run local --config /nonexistent-dir/cfg.json") == 4);
}

TEST_CASE("unseeded run records its seed") {
    const auto out = kWork / "unseeded.jsonl";
    REQUIRE(sh("run local --shots 10 --out " + out.string()) == 0);
    CHECK(echoed_config(lines_of(out)).seed.has_value());
}
