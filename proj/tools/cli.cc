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

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "greedyprep/harness.h"
#include "greedyprep/models.h"
#include "greedyprep/noise.h"
#include "greedyprep/optimizer.h"
#include "greedyprep/parallel.h"
#include "greedyprep/random.h"
#include "greedyprep/sampling.h"

namespace greedyprep::cli {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_real(const std::string &s) {
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) {
        throw std::invalid_argument("invalid number '" + s + "'");
    }
    return v;
}

// Options shared by bench and noise, applied on top of an optional config file.
struct RunFlags {
    std::string config_file;
    std::vector<std::pair<std::string, std::string *>> values;
    std::string model, total_time, dt, threshold, grid, subsample, seed, algorithm, workers;
    bool full = false;
    std::vector<CLI::Option *> options;

    void add_to(CLI::App *app, bool allow_config) {
        if (allow_config) {
            app->add_option("--config", config_file, "Flat key = value run configuration file")
                ->check(CLI::ExistingFile);
        }
        auto add = [&](const char *flag, const char *key, std::string &dest, const char *help) {
            options.push_back(app->add_option(flag, dest, help));
            values.emplace_back(key, &dest);
        };
        add("--model", "model", model, "dqd1, dqd2, xmon1 or xmon2");
        add("--T", "T", total_time, "Total evolution time, e.g. 2pi");
        add("--dt", "dt", dt, "Slice duration, e.g. pi/5");
        add("--threshold", "threshold", threshold, "Early-stop fidelity threshold (default 0.999)");
        add("--grid", "grid", grid, "bloch:NxM (or NxM) or hypersphere");
        add("--subsample", "subsample", subsample, "Number of grid points to keep (0 = all)");
        add("--seed", "seed", seed, "Subsample seed");
        add("--algorithm", "algorithm", algorithm, "rg or sg");
        add("--workers", "workers", workers, "Worker threads (0 = GREEDYPREP_WORKERS or hardware)");
        options.push_back(app->add_flag("--full", full, "Use the 512-point two-qubit subsample"));
    }

    RunConfig build() const {
        RunConfig c;
        c.workers = default_worker_count();
        if (!config_file.empty()) {
            for (const auto &[k, v] : read_config_file(config_file)) {
                c.set(k, v);
            }
        }
        for (size_t i = 0; i < values.size(); i++) {
            if (options[i]->count() > 0) {
                c.set(values[i].first, *values[i].second);
            }
        }
        if (full) {
            c.set("full", "true");
        }
        if (c.total_time_text.empty() || c.dt_text.empty()) {
            throw std::invalid_argument("both T and dt must be given (flags or config file)");
        }
        c.validate();
        return c;
    }
};

void print_sequence(std::ostream &out, const ControlModel &model, const PulseSequence &seq) {
    out << "sequence:";
    for (ActionId a : seq.actions) {
        out << ' ' << a.index;
    }
    out << "\nactions:";
    for (ActionId a : seq.actions) {
        out << ' ' << model.action_label(a);
    }
    out << '\n';
}

int cmd_design(const std::string &model_name_arg, const std::string &init_text, const std::string &target_text,
               const std::string &t_text, const std::string &dt_text, double threshold, const std::string &algo,
               bool trace, std::ostream &out) {
    ControlModel model(parse_model_kind(model_name_arg));
    double total = parse_duration(t_text);
    double dt = parse_duration(dt_text);
    RunConfig cfg;
    cfg.model = model.kind();
    cfg.total_time = total;
    cfg.dt = dt;
    cfg.threshold = threshold;
    cfg.validate();
    StateVector init = parse_state(init_text, model.dim());
    StateVector target = parse_state(target_text, model.dim());
    PropagatorCache cache(model, dt);
    DesignProblem problem{model, cache, init, target, cfg.step_max(), threshold};
    Algorithm algorithm = parse_algorithm(algo);
    EpisodeResult r = design(problem, algorithm);

    out << std::setprecision(12);
    out << "model: " << model.name() << "\n";
    out << "algorithm: " << algorithm_name(algorithm) << "\n";
    out << "step_max: " << cfg.step_max() << "\n";
    out << "f_max: " << r.f_max << "\n";
    out << "step_end: " << r.step_end << "\n";
    out << "strategy: " << strategy_name(r.strategy) << "\n";
    print_sequence(out, model, r.sequence);
    if (trace) {
        out << "trace:";
        for (double f : r.fidelity_trace) {
            out << ' ' << f;
        }
        out << '\n';
    }
    return kExitOk;
}

ReportFormat format_for(const std::string &format, const std::filesystem::path &path) {
    if (format == "json") {
        return ReportFormat::Json;
    }
    if (format == "csv") {
        return ReportFormat::Csv;
    }
    if (format.empty()) {
        return path.extension() == ".json" ? ReportFormat::Json : ReportFormat::Csv;
    }
    throw std::invalid_argument("unknown report format '" + format + "' (expected csv or json)");
}

int cmd_bench(const RunFlags &flags, const std::string &out_path, const std::string &format, std::ostream &out) {
    RunConfig cfg = flags.build();
    SuiteReport report = run_suite(cfg);
    if (!out_path.empty()) {
        for (const auto &p : emit_report(report, format_for(format, out_path), out_path)) {
            out << "wrote " << p.string() << "\n";
        }
    }
    out << summary_json(report) << "\n";
    return kExitOk;
}

int cmd_noise(const RunFlags &flags, const std::vector<std::string> &kinds, const std::vector<std::string> &target_sets,
              const std::string &amplitudes_text, size_t realizations, uint64_t noise_seed, const std::string &out_path,
              std::ostream &out) {
    RunConfig cfg = flags.build();
    SuiteReport report = run_suite(cfg);
    ControlModel model(cfg.model);

    TaskSet task_set;
    task_set.points = report.points.states;
    task_set.tasks = report.task_list();
    std::vector<DesignedTask> designed;
    designed.reserve(report.tasks.size());
    for (const auto &t : report.tasks) {
        designed.push_back({{t.init, t.target}, {t.actions, cfg.dt}});
    }

    std::vector<double> amplitudes;
    for (const auto &a : split(amplitudes_text, ',')) {
        amplitudes.push_back(parse_real(a));
    }
    std::vector<std::string> sets = target_sets;
    if (sets.empty()) {
        sets = model.is_dot_model() ? std::vector<std::string>{"J", "h"} : std::vector<std::string>{"drive"};
    }
    std::vector<ImperfectionSpec> specs;
    for (const auto &k : kinds) {
        ImperfectionKind kind = parse_imperfection_kind(k);
        for (const auto &set : sets) {
            for (double a : amplitudes) {
                ImperfectionSpec s;
                s.kind = kind;
                s.targets = split(set, '+');
                s.amplitude = a;
                s.realizations = kind == ImperfectionKind::Dynamic ? realizations : 1;
                s.seed = noise_seed;
                s.validate(model);
                specs.push_back(s);
            }
        }
    }
    auto rows = sweep(model, task_set, designed, specs, cfg.workers);

    std::ostringstream csv;
    csv << kSweepCsvHeader << "\n";
    for (const auto &r : rows) {
        csv << sweep_csv_row(r) << "\n";
    }
    if (out_path.empty()) {
        out << csv.str();
    } else {
        std::ofstream f(out_path);
        if (!f) {
            throw std::runtime_error("cannot write " + out_path);
        }
        f << csv.str();
        if (!f) {
            throw std::runtime_error("cannot write " + out_path);
        }
        out << "noiseless grand mean fidelity: " << std::setprecision(12) << report.grand_mean_fidelity << "\n";
        out << "normal deviates: " << kNormalMethod << " over " << kGeneratorName << "; per-task seed "
            << kSeedSplitRule << "\n";
        out << "wrote " << out_path << "\n";
    }
    return kExitOk;
}

int cmd_sample(const std::string &grid_text, size_t subsample, uint64_t seed, const std::string &out_path,
               std::ostream &out) {
    LabeledGrid grid = GridSpec::parse(grid_text).build();
    if (subsample > 0) {
        auto idx = subsample_indices(grid.size(), subsample, seed);
        grid = grid.select(idx);
    }
    std::ostringstream csv;
    csv << std::setprecision(17) << "index";
    size_t dim = grid.states.empty() ? 0 : grid.states.front().dim();
    for (size_t k = 0; k < dim; k++) {
        csv << ",re" << k << ",im" << k;
    }
    csv << "\n";
    for (size_t i = 0; i < grid.size(); i++) {
        csv << i;
        for (const auto &a : grid.states[i].amplitudes()) {
            csv << ',' << a.real() << ',' << a.imag();
        }
        csv << "\n";
    }
    if (out_path.empty()) {
        out << csv.str();
        return kExitOk;
    }
    std::ofstream f(out_path);
    if (!f) {
        throw std::runtime_error("cannot write " + out_path);
    }
    f << csv.str();
    out << "wrote " << grid.size() << " states to " << out_path << "\n";
    return kExitOk;
}

int cmd_oracle(const std::string &model_arg, const std::string &init_text, const std::string &target_text,
               const std::string &dt_text, size_t steps, std::ostream &out) {
    ControlModel model(parse_model_kind(model_arg));
    double dt = parse_duration(dt_text);
    StateVector init = parse_state(init_text, model.dim());
    StateVector target = parse_state(target_text, model.dim());
    PropagatorCache cache(model, dt);
    DesignProblem problem{model, cache, init, target, std::max<size_t>(steps, 1), kDefaultThreshold};
    BruteForceResult bf = brute_force_optimum(problem, steps);
    out << std::setprecision(12);
    out << "f_opt: " << bf.f_opt << "\n";
    print_sequence(out, model, bf.sequence);
    if (steps > 0) {
        EpisodeResult rg = design_rg(problem);
        out << "rg_f_max: " << rg.f_max << "\n";
        out << "gap: " << bf.f_opt - rg.f_max << "\n";
    }
    return kExitOk;
}

}  // namespace

StateVector parse_state(std::string_view text, size_t dim) {
    std::string s(text);
    if (s.rfind("bloch:", 0) == 0) {
        if (dim != 2) {
            throw std::invalid_argument("Bloch angles describe single-qubit states only");
        }
        auto parts = split(s.substr(6), ',');
        if (parts.size() != 2) {
            throw std::invalid_argument("expected bloch:THETA,PHI");
        }
        return BlochPoint{parse_duration(parts[0]), parse_duration(parts[1])}.state();
    }
    auto parts = split(s, ',');
    if (parts.size() == 1) {
        size_t used = 0;
        unsigned long k = 0;
        try {
            k = std::stoul(parts[0], &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != parts[0].size() || parts[0].empty()) {
            throw std::invalid_argument("invalid state '" + s + "'");
        }
        return StateVector::basis(dim, k);
    }
    if (parts.size() != dim) {
        throw std::invalid_argument("state '" + s + "' has " + std::to_string(parts.size()) +
                                    " amplitudes; the model needs " + std::to_string(dim));
    }
    std::vector<cplx> amps;
    for (const auto &p : parts) {
        auto colon = p.find(':');
        if (colon == std::string::npos) {
            amps.emplace_back(parse_real(p), 0.0);
        } else {
            amps.emplace_back(parse_real(p.substr(0, colon)), parse_real(p.substr(colon + 1)));
        }
    }
    return StateVector::normalized(amps);
}

int run(const std::vector<std::string> &argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Greedy design of piecewise-constant control pulses for qubit state preparation"};
    app.name(argv.empty() ? "greedyprep" : std::filesystem::path(argv[0]).filename().string());
    app.require_subcommand(1);

    // design
    std::string d_model, d_init, d_target, d_t, d_dt, d_algo = "rg";
    double d_threshold = kDefaultThreshold;
    bool d_trace = false;
    auto *design_cmd = app.add_subcommand("design", "Design a pulse sequence for one preparation task");
    design_cmd->add_option("--model", d_model, "dqd1, dqd2, xmon1 or xmon2")->required();
    design_cmd->add_option("--init", d_init, "Initial state (k, bloch:THETA,PHI, or amplitude list)")->required();
    design_cmd->add_option("--target", d_target, "Target state (same syntax as --init)")->required();
    design_cmd->add_option("--T", d_t, "Total evolution time, e.g. pi")->required();
    design_cmd->add_option("--dt", d_dt, "Slice duration, e.g. pi/5")->required();
    design_cmd->add_option("--threshold", d_threshold, "Early-stop fidelity threshold");
    design_cmd->add_option("--algorithm", d_algo, "rg or sg");
    design_cmd->add_flag("--trace", d_trace, "Print the per-step fidelity trace of the chosen episode");

    // bench
    RunFlags b_flags;
    std::string b_out, b_format;
    auto *bench_cmd = app.add_subcommand("bench", "Design every all-pairs task of a grid and aggregate");
    b_flags.add_to(bench_cmd, true);
    bench_cmd->add_option("--out", b_out, "Write the report (task CSV plus sidecars, or one JSON document)");
    bench_cmd->add_option("--format", b_format, "csv or json (default: from --out extension)");

    // noise
    RunFlags n_flags;
    std::vector<std::string> n_kinds{"static", "dynamic"}, n_targets;
    std::string n_amplitudes = "0,0.05,0.1,0.15,0.2,0.25,0.3,0.35,0.4,0.45,0.5";
    size_t n_realizations = 20;
    uint64_t n_seed = 0;
    std::string n_out;
    auto *noise_cmd = app.add_subcommand("noise", "Design a suite, then replay it under control imperfections");
    n_flags.add_to(noise_cmd, true);
    noise_cmd->add_option("--kind", n_kinds, "static and/or dynamic (repeatable)");
    noise_cmd->add_option("--targets", n_targets,
                          "Perturbed parameters, '+'-joined; repeat for separate rows (J, h, drive, Ax, Ay, Az)");
    noise_cmd->add_option("--amplitudes", n_amplitudes, "Comma-separated drift offsets / noise deviations");
    noise_cmd->add_option("--realizations", n_realizations, "Dynamic-noise realizations per task");
    noise_cmd->add_option("--noise-seed", n_seed, "Base seed for dynamic noise");
    noise_cmd->add_option("--out", n_out, "Write the sweep CSV here instead of stdout");

    // sample
    std::string s_grid = "bloch:8x16", s_out;
    size_t s_subsample = 0;
    uint64_t s_seed = 0;
    auto *sample_cmd = app.add_subcommand("sample", "Emit a testing grid as CSV");
    sample_cmd->add_option("--grid", s_grid, "bloch:NxM (or NxM) or hypersphere");
    sample_cmd->add_option("--subsample", s_subsample, "Keep this many points (0 = all)");
    sample_cmd->add_option("--seed", s_seed, "Subsample seed");
    sample_cmd->add_option("--out", s_out, "Output path (default stdout)");

    // oracle
    std::string o_model, o_init, o_target, o_dt;
    size_t o_steps = 0;
    auto *oracle_cmd = app.add_subcommand("oracle", "Brute-force the optimum of a short-horizon task");
    oracle_cmd->add_option("--model", o_model, "dqd1, dqd2, xmon1 or xmon2")->required();
    oracle_cmd->add_option("--init", o_init, "Initial state")->required();
    oracle_cmd->add_option("--target", o_target, "Target state")->required();
    oracle_cmd->add_option("--dt", o_dt, "Slice duration")->required();
    oracle_cmd->add_option("--steps", o_steps, "Horizon in slices")->required();

    std::vector<const char *> raw;
    raw.reserve(argv.size() + 1);
    for (const auto &a : argv) {
        raw.push_back(a.c_str());
    }
    if (raw.empty()) {
        raw.push_back("greedyprep");
    }
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*design_cmd) {
            return cmd_design(d_model, d_init, d_target, d_t, d_dt, d_threshold, d_algo, d_trace, out);
        }
        if (*bench_cmd) {
            return cmd_bench(b_flags, b_out, b_format, out);
        }
        if (*noise_cmd) {
            return cmd_noise(n_flags, n_kinds, n_targets, n_amplitudes, n_realizations, n_seed, n_out, out);
        }
        if (*sample_cmd) {
            return cmd_sample(s_grid, s_subsample, s_seed, s_out, out);
        }
        if (*oracle_cmd) {
            return cmd_oracle(o_model, o_init, o_target, o_dt, o_steps, out);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace greedyprep::cli
