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

#include "greedyprep/harness.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "greedyprep/parallel.h"
#include "greedyprep/random.h"
#include "json.hpp"

namespace greedyprep {

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return {};
    }
    size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

double parse_number(const std::string &s, std::string_view context) {
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != s.size() || s.empty()) {
        throw std::invalid_argument("invalid number '" + s + "' in " + std::string(context));
    }
    return v;
}

uint64_t parse_unsigned(std::string_view text, std::string_view what) {
    std::string s = trim(text);
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("invalid " + std::string(what) + " '" + s + "'");
    }
    return v;
}

bool parse_bool(std::string_view text) {
    std::string s = trim(text);
    if (s == "1" || s == "true" || s == "yes" || s == "on") {
        return true;
    }
    if (s == "0" || s == "false" || s == "no" || s == "off") {
        return false;
    }
    throw std::invalid_argument("invalid boolean '" + s + "'");
}

}  // namespace

double parse_duration(std::string_view text) {
    std::string s = trim(text);
    std::string compact;
    for (char c : s) {
        if (c != ' ') {
            compact += c;
        }
    }
    static const std::regex pattern(
        R"(^([0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)?(\*)?(pi)?(?:/([0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?))?$)");
    std::smatch m;
    bool ok = !compact.empty() && std::regex_match(compact, m, pattern) && (m[1].matched || m[3].matched) &&
              (!m[2].matched || (m[1].matched && m[3].matched));
    if (!ok) {
        throw std::invalid_argument("invalid duration '" + s + "' (use a decimal or a*pi/b)");
    }
    double value = m[1].matched ? parse_number(m[1].str(), "duration") : 1.0;
    if (m[3].matched) {
        value *= std::numbers::pi;
    }
    if (m[4].matched) {
        double den = parse_number(m[4].str(), "duration");
        if (den == 0) {
            throw std::invalid_argument("duration '" + s + "' divides by zero");
        }
        value /= den;
    }
    return value;
}

GridSpec GridSpec::parse(std::string_view text) {
    std::string s = trim(text);
    GridSpec g;
    if (s == "hypersphere") {
        g.kind = Kind::Hypersphere;
        return g;
    }
    if (s.rfind("bloch:", 0) == 0) {
        s = s.substr(6);
    } else if (s == "bloch") {
        return g;
    }
    size_t x = s.find('x');
    if (x == std::string::npos) {
        throw std::invalid_argument("invalid grid '" + std::string(text) + "' (expected hypersphere or NxM)");
    }
    g.n_theta = parse_unsigned(s.substr(0, x), "grid theta count");
    g.n_phi = parse_unsigned(s.substr(x + 1), "grid phi count");
    if (g.n_theta == 0 || g.n_phi == 0) {
        throw std::invalid_argument("grid counts must be positive");
    }
    return g;
}

std::string GridSpec::str() const {
    if (kind == Kind::Hypersphere) {
        return "hypersphere";
    }
    return "bloch:" + std::to_string(n_theta) + "x" + std::to_string(n_phi);
}

LabeledGrid GridSpec::build() const {
    return kind == Kind::Hypersphere ? labeled_hypersphere_grid() : labeled_bloch_grid(n_theta, n_phi);
}

GridSpec RunConfig::effective_grid() const {
    if (grid) {
        return *grid;
    }
    GridSpec g;
    if (ControlModel(model).num_qubits() == 2) {
        g.kind = GridSpec::Kind::Hypersphere;
    }
    return g;
}

size_t RunConfig::effective_subsample() const {
    if (subsample) {
        return *subsample;
    }
    return effective_grid().kind == GridSpec::Kind::Hypersphere ? kDeskSubsample : 0;
}

size_t RunConfig::step_max() const {
    double r = std::round(total_time / dt);
    return r >= 1 && std::isfinite(r) ? static_cast<size_t>(r) : 0;
}

void RunConfig::validate() const {
    if (!(total_time > 0) || !std::isfinite(total_time)) {
        throw std::invalid_argument("total time T must be positive");
    }
    if (!(dt > 0) || !std::isfinite(dt)) {
        throw std::invalid_argument("slice duration dt must be positive");
    }
    if (step_max() < 1) {
        throw std::invalid_argument("round(T/dt) must be at least 1");
    }
    if (!(threshold > 0 && threshold <= 1)) {
        throw std::invalid_argument("threshold must lie in (0, 1]");
    }
    size_t expected_dim = ControlModel(model).dim();
    size_t grid_dim = effective_grid().kind == GridSpec::Kind::Hypersphere ? 4 : 2;
    if (expected_dim != grid_dim) {
        throw std::invalid_argument("grid " + effective_grid().str() + " does not match model " +
                                    std::string(model_name(model)));
    }
}

void RunConfig::set(std::string_view key_view, std::string_view value_view) {
    std::string key = trim(key_view);
    std::string value = trim(value_view);
    if (key == "model") {
        model = parse_model_kind(value);
    } else if (key == "T") {
        total_time = parse_duration(value);
        total_time_text = value;
    } else if (key == "dt") {
        dt = parse_duration(value);
        dt_text = value;
    } else if (key == "threshold") {
        threshold = parse_number(value, "threshold");
    } else if (key == "grid") {
        grid = GridSpec::parse(value);
    } else if (key == "subsample") {
        subsample = parse_unsigned(value, "subsample");
    } else if (key == "seed") {
        seed = parse_unsigned(value, "seed");
    } else if (key == "algorithm") {
        algorithm = parse_algorithm(value);
    } else if (key == "workers") {
        workers = parse_unsigned(value, "workers");
        if (workers == 0) {
            workers = default_worker_count();
        }
    } else if (key == "full") {
        if (parse_bool(value)) {
            subsample = kFullSubsample;
        }
    } else {
        throw std::invalid_argument("unknown configuration key '" + key + "'");
    }
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read config file " + path.string());
    }
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::string t = trim(line);
        if (t.empty()) {
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) + ": expected 'key = value'");
        }
        out.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return out;
}

std::vector<Task> SuiteReport::task_list() const {
    std::vector<Task> out;
    out.reserve(tasks.size());
    for (const auto &t : tasks) {
        out.push_back({t.init, t.target});
    }
    return out;
}

std::vector<double> SuiteReport::fidelities() const {
    std::vector<double> out;
    out.reserve(tasks.size());
    for (const auto &t : tasks) {
        out.push_back(t.f_max);
    }
    return out;
}

SuiteReport run_suite(const RunConfig &config, const LabeledGrid &points) {
    config.validate();
    ControlModel model(config.model);
    for (const auto &s : points.states) {
        if (s.dim() != model.dim()) {
            throw std::invalid_argument("point dimension does not match model " + std::string(model.name()));
        }
    }
    PropagatorCache cache(model, config.dt);
    TaskSet task_set = all_pairs(points.states);

    SuiteReport report;
    report.config = config;
    report.points = points;
    report.grid_indices.resize(points.size());
    std::iota(report.grid_indices.begin(), report.grid_indices.end(), size_t{0});
    report.tasks.resize(task_set.tasks.size());

    const size_t step_max = config.step_max();
    parallel_for(task_set.tasks.size(), config.workers, [&](size_t i) {
        const Task &task = task_set.tasks[i];
        DesignProblem problem{model, cache, task_set.points[task.init], task_set.points[task.target], step_max,
                              config.threshold};
        auto start = std::chrono::steady_clock::now();
        EpisodeResult r = design(problem, config.algorithm);
        auto stop = std::chrono::steady_clock::now();
        TaskRecord &rec = report.tasks[i];
        rec.init = task.init;
        rec.target = task.target;
        rec.f_max = r.f_max;
        rec.step_end = r.step_end;
        rec.design_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        rec.strategy = r.strategy;
        rec.actions = std::move(r.sequence.actions);
    });

    auto tasks = report.task_list();
    auto fid = average_by_target(tasks, report.fidelities(), points.size());
    std::vector<double> times;
    times.reserve(report.tasks.size());
    for (const auto &t : report.tasks) {
        times.push_back(t.design_ms);
    }
    auto tim = average_by_target(tasks, times, points.size());
    report.per_target_fidelity = fid.per_target;
    report.per_target_design_ms = tim.per_target;
    report.grand_mean_fidelity = fid.grand_mean;
    report.min_target_fidelity = *std::min_element(fid.per_target.begin(), fid.per_target.end());
    report.mean_design_time_ms = tim.grand_mean;
    return report;
}

SuiteReport run_suite(const RunConfig &config) {
    config.validate();
    LabeledGrid full = config.effective_grid().build();
    size_t k = config.effective_subsample();
    if (k == 0 || k == full.size()) {
        return run_suite(config, full);
    }
    auto indices = subsample_indices(full.size(), k, config.seed);
    SuiteReport report = run_suite(config, full.select(indices));
    report.grid_indices = indices;
    return report;
}

namespace {

void check_stream(const std::ofstream &out, const std::filesystem::path &path) {
    if (!out) {
        throw std::runtime_error("cannot write report file " + path.string());
    }
}

nlohmann::json config_json(const RunConfig &c) {
    nlohmann::json j;
    j["model"] = std::string(model_name(c.model));
    j["T"] = c.total_time;
    j["dt"] = c.dt;
    j["T_text"] = c.total_time_text;
    j["dt_text"] = c.dt_text;
    j["step_max"] = c.step_max();
    j["threshold"] = c.threshold;
    j["grid"] = c.effective_grid().str();
    j["subsample"] = c.effective_subsample();
    j["seed"] = c.seed;
    j["algorithm"] = std::string(algorithm_name(c.algorithm));
    j["workers"] = c.workers;
    return j;
}

nlohmann::json summary_object(const SuiteReport &r) {
    nlohmann::json j = config_json(r.config);
    j["grand_mean_fidelity"] = r.grand_mean_fidelity;
    j["min_target_fidelity"] = r.min_target_fidelity;
    j["mean_design_time_ms"] = r.mean_design_time_ms;
    j["tasks"] = r.tasks.size();
    j["targets"] = r.points.size();
    j["grid_indices"] = r.grid_indices;
    j["version"] = kVersion;
    j["rng"] = {{"generator", kGeneratorName}, {"subsample", "partial Fisher-Yates"},
                {"uniform_int", kUniformIntMethod}};
    return j;
}

nlohmann::json targets_array(const SuiteReport &r) {
    nlohmann::json arr = nlohmann::json::array();
    for (size_t t = 0; t < r.points.size(); t++) {
        nlohmann::json row;
        row["target_idx"] = t;
        row["grid_idx"] = r.grid_indices.at(t);
        for (size_t p = 0; p < r.points.param_names.size(); p++) {
            row[r.points.param_names[p]] = r.points.params[t][p];
        }
        row["avg_fidelity"] = r.per_target_fidelity[t];
        row["avg_design_ms"] = r.per_target_design_ms[t];
        arr.push_back(row);
    }
    return arr;
}

std::string sequence_text(const std::vector<ActionId> &actions) {
    std::string s;
    for (size_t i = 0; i < actions.size(); i++) {
        if (i) {
            s += ' ';
        }
        s += std::to_string(actions[i].index);
    }
    return s;
}

}  // namespace

std::string summary_json(const SuiteReport &report) {
    return summary_object(report).dump(2);
}

std::vector<std::filesystem::path> emit_report(const SuiteReport &report, ReportFormat format,
                                               const std::filesystem::path &path) {
    if (report.tasks.empty()) {
        throw std::invalid_argument("refusing to emit a report with no tasks");
    }
    std::vector<std::filesystem::path> written;
    if (format == ReportFormat::Json) {
        nlohmann::json doc;
        doc["summary"] = summary_object(report);
        doc["targets"] = targets_array(report);
        nlohmann::json tasks = nlohmann::json::array();
        for (const auto &t : report.tasks) {
            tasks.push_back({{"init_idx", t.init},
                             {"target_idx", t.target},
                             {"f_max", t.f_max},
                             {"step_end", t.step_end},
                             {"design_ms", t.design_ms},
                             {"strategy", std::string(strategy_name(t.strategy))},
                             {"sequence", sequence_text(t.actions)}});
        }
        doc["tasks"] = tasks;
        std::ofstream out(path);
        check_stream(out, path);
        out << doc.dump(2) << '\n';
        check_stream(out, path);
        written.push_back(path);
        return written;
    }

    {
        std::ofstream out(path);
        check_stream(out, path);
        out.precision(17);
        out << kTaskCsvHeader << '\n';
        for (const auto &t : report.tasks) {
            out << t.init << ',' << t.target << ',' << t.f_max << ',' << t.step_end << ',' << t.design_ms << '\n';
        }
        check_stream(out, path);
        written.push_back(path);
    }

    auto sidecar = [&](const std::string &suffix) {
        auto p = path;
        p.replace_extension();
        p += suffix;
        return p;
    };
    {
        auto p = sidecar(".summary.json");
        std::ofstream out(p);
        check_stream(out, p);
        out << summary_json(report) << '\n';
        check_stream(out, p);
        written.push_back(p);
    }
    {
        auto p = sidecar(".targets.csv");
        std::ofstream out(p);
        check_stream(out, p);
        out.precision(17);
        out << "target_idx,grid_idx";
        for (const auto &n : report.points.param_names) {
            out << ',' << n;
        }
        out << ",avg_fidelity,avg_design_ms\n";
        for (size_t t = 0; t < report.points.size(); t++) {
            out << t << ',' << report.grid_indices.at(t);
            for (double v : report.points.params[t]) {
                out << ',' << v;
            }
            out << ',' << report.per_target_fidelity[t] << ',' << report.per_target_design_ms[t] << '\n';
        }
        check_stream(out, p);
        written.push_back(p);
    }
    return written;
}

std::vector<TaskRecord> read_task_csv(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read task table " + path.string());
    }
    std::string line;
    if (!std::getline(in, line) || trim(line) != kTaskCsvHeader) {
        throw std::runtime_error(path.string() + ": missing task table header");
    }
    std::vector<TaskRecord> out;
    while (std::getline(in, line)) {
        if (trim(line).empty()) {
            continue;
        }
        std::vector<std::string> cols;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cols.push_back(trim(cell));
        }
        if (cols.size() != 5) {
            throw std::runtime_error(path.string() + ": malformed row '" + line + "'");
        }
        try {
            TaskRecord r;
            r.init = parse_unsigned(cols[0], "init_idx");
            r.target = parse_unsigned(cols[1], "target_idx");
            r.f_max = parse_number(cols[2], "f_max");
            r.step_end = parse_unsigned(cols[3], "step_end");
            r.design_ms = parse_number(cols[4], "design_ms");
            out.push_back(std::move(r));
        } catch (const std::invalid_argument &e) {
            throw std::runtime_error(path.string() + ": " + e.what());
        }
    }
    return out;
}

}  // namespace greedyprep
