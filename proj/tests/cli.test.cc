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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "gtest/gtest.h"

#include "greedyprep/noise.h"
#include "json.hpp"

using namespace greedyprep;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "greedyprep");
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

size_t count_lines(const std::string &s) {
    return static_cast<size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST(cli, parse_state) {
    ASSERT_EQ(cli::parse_state("1", 2), StateVector::basis(2, 1));
    ASSERT_EQ(cli::parse_state("3", 4), StateVector::basis(4, 3));
    auto plus = cli::parse_state("1,1", 2);
    ASSERT_NEAR(plus[0].real(), std::sqrt(0.5), 1e-15);
    auto phased = cli::parse_state("1,0:1", 2);
    ASSERT_NEAR(phased[1].imag(), std::sqrt(0.5), 1e-15);
    auto b = cli::parse_state("bloch:pi/2,0", 2);
    ASSERT_NEAR(b[1].real(), std::sqrt(0.5), 1e-15);
    ASSERT_THROW(cli::parse_state("2", 2), std::invalid_argument);
    ASSERT_THROW(cli::parse_state("1,0,0", 2), std::invalid_argument);
    ASSERT_THROW(cli::parse_state("bloch:1,1", 4), std::invalid_argument);
    ASSERT_THROW(cli::parse_state("x", 2), std::invalid_argument);
}

TEST(cli, design_xmon1_flip) {
    auto r = run_cli({"design", "--model", "xmon1", "--init", "0", "--target", "1", "--T", "pi", "--dt", "pi/5",
                      "--trace"});
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_NE(r.out.find("step_max: 5"), std::string::npos) << r.out;
    ASSERT_NE(r.out.find("f_max: 1\n"), std::string::npos) << r.out;
    ASSERT_NE(r.out.find("actions: Ax="), std::string::npos) << r.out;
    ASSERT_NE(r.out.find("trace: 0"), std::string::npos) << r.out;
}

TEST(cli, design_errors) {
    auto missing = run_cli({"design", "--model", "xmon1"});
    ASSERT_EQ(missing.code, cli::kExitUsage);
    auto bad_model = run_cli({"design", "--model", "ion", "--init", "0", "--target", "1", "--T", "pi", "--dt", "1"});
    ASSERT_EQ(bad_model.code, cli::kExitFailure);
    ASSERT_NE(bad_model.err.find("unknown model"), std::string::npos);
}

TEST(cli, unknown_subcommand) {
    ASSERT_EQ(run_cli({"teleport"}).code, cli::kExitUsage);
    ASSERT_EQ(run_cli({}).code, cli::kExitUsage);
    ASSERT_EQ(run_cli({"--help"}).code, cli::kExitOk);
}

TEST(cli, sample) {
    auto full = run_cli({"sample", "--grid", "hypersphere"});
    ASSERT_EQ(full.code, 0) << full.err;
    ASSERT_EQ(count_lines(full.out), 6913);
    ASSERT_EQ(full.out.substr(0, full.out.find('\n')), "index,re0,im0,re1,im1,re2,im2,re3,im3");

    auto small = run_cli({"sample", "--grid", "bloch:2x2"});
    ASSERT_EQ(count_lines(small.out), 5);
    auto sub = run_cli({"sample", "--grid", "hypersphere", "--subsample", "32", "--seed", "0"});
    ASSERT_EQ(count_lines(sub.out), 33);
}

TEST(cli, oracle) {
    auto r = run_cli({"oracle", "--model", "dqd1", "--init", "0", "--target", "1", "--dt", "pi/5", "--steps", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_NE(r.out.find("f_opt: "), std::string::npos);
    ASSERT_NE(r.out.find("gap: "), std::string::npos);
    auto guard = run_cli({"oracle", "--model", "xmon2", "--init", "0", "--target", "1", "--dt", "pi/4", "--steps", "9"});
    ASSERT_EQ(guard.code, cli::kExitFailure);
}

TEST(cli, bench_with_config_and_overrides) {
    auto dir = std::filesystem::temp_directory_path() / "greedyprep_cli_bench";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    {
        std::ofstream cfg(dir / "run.cfg");
        cfg << "model = dqd1\nT = 2pi\ndt = pi/5\ngrid = 8x16\n";
    }
    auto out = (dir / "r.csv").string();
    auto r = run_cli({"bench", "--config", (dir / "run.cfg").string(), "--grid", "3x3", "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
    auto summary = nlohmann::json::parse(r.out.substr(r.out.find('{')));
    ASSERT_EQ(summary["grid"], "bloch:3x3");
    ASSERT_EQ(summary["tasks"], 72);
    ASSERT_EQ(summary["step_max"], 10);
    ASSERT_EQ(summary["T_text"], "2pi");
    ASSERT_TRUE(std::filesystem::exists(dir / "r.summary.json"));

    auto bad = run_cli({"bench", "--model", "dqd1", "--T", "pi", "--dt", "pi/5", "--grid", "hypersphere"});
    ASSERT_EQ(bad.code, cli::kExitFailure);
}

TEST(cli, noise_sweep) {
    auto dir = std::filesystem::temp_directory_path() / "greedyprep_cli_noise";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    auto out = (dir / "sweep.csv").string();
    auto r = run_cli({"noise", "--model", "dqd1", "--T", "pi", "--dt", "pi/5", "--grid", "2x3", "--kind", "static",
                      "--kind", "dynamic", "--targets", "J", "--amplitudes", "0,0.3", "--realizations", "4", "--out",
                      out});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(out);
    std::string header;
    std::getline(in, header);
    ASSERT_EQ(header, kSweepCsvHeader);
    std::vector<std::string> rows;
    for (std::string line; std::getline(in, line);) {
        rows.push_back(line);
    }
    ASSERT_EQ(rows.size(), 4);
    ASSERT_EQ(rows[0].substr(0, 15), "dqd1,static,J,0");
    ASSERT_NE(rows[3].find(",4,"), std::string::npos);

    auto bad = run_cli({"noise", "--model", "dqd1", "--T", "pi", "--dt", "pi/5", "--grid", "2x2", "--targets", "Ax"});
    ASSERT_EQ(bad.code, cli::kExitFailure);
}
