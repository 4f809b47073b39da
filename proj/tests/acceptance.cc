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

// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero if any hard criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "greedyprep/harness.h"
#include "greedyprep/noise.h"
#include "greedyprep/parallel.h"
#include "greedyprep/random.h"

using namespace greedyprep;

namespace {

constexpr double kPi = std::numbers::pi;

int hard_failures = 0;

void report(int id, bool pass, const std::string &detail, bool soft = false) {
    std::printf("criterion %2d: %s  %s%s\n", id, pass ? "PASS" : "FAIL", detail.c_str(),
                soft && !pass ? " (soft gate)" : "");
    std::fflush(stdout);
    if (!pass && !soft) {
        hard_failures++;
    }
}

std::string fmt(const char *f, double a, double b = 0, double c = 0, double d = 0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), f, a, b, c, d);
    return buf;
}

RunConfig suite_config(ModelKind model, const char *t, const char *dt, Algorithm algorithm = Algorithm::RevisedGreedy) {
    RunConfig c;
    c.set("model", model_name(model));
    c.set("T", t);
    c.set("dt", dt);
    c.seed = 0;
    c.algorithm = algorithm;
    c.workers = default_worker_count();
    return c;
}

struct Suite {
    SuiteReport rg;
    SuiteReport sg;
};

Suite run_pair(ModelKind model, const char *t, const char *dt) {
    return {run_suite(suite_config(model, t, dt)),
            run_suite(suite_config(model, t, dt, Algorithm::StandardGreedy))};
}

// Tasks where SG beats RG; zero by construction when RG keeps the best-strategy episode.
size_t dominance_violations(const Suite &s) {
    size_t bad = 0;
    for (size_t i = 0; i < s.rg.tasks.size(); i++) {
        bad += s.sg.tasks[i].f_max > s.rg.tasks[i].f_max;
    }
    return bad;
}

StateVector haar_qubit(std::mt19937_64 &rng) {
    std::normal_distribution<double> n;
    std::array<cplx, 2> a{cplx(n(rng), n(rng)), cplx(n(rng), n(rng))};
    return StateVector::normalized(a);
}

HermitianMatrix random_hermitian(std::mt19937_64 &rng, size_t dim) {
    std::normal_distribution<double> n(0, 2.0);
    Matrix m(dim);
    for (size_t r = 0; r < dim; r++) {
        m(r, r) = n(rng);
        for (size_t c = r + 1; c < dim; c++) {
            cplx v(n(rng), n(rng));
            m(r, c) = v;
            m(c, r) = std::conj(v);
        }
    }
    return HermitianMatrix(m);
}

}  // namespace

int main() {
    std::printf("workers: %zu\n", default_worker_count());
    std::vector<Suite> all_suites;

    // 1. Single-qubit Xmon, full 128-point grid.
    {
        Suite s = run_pair(ModelKind::Xmon1, "pi", "pi/5");
        const auto &r = s.rg;
        report(1, r.tasks.size() == 16256 && r.grand_mean_fidelity >= 0.995 && r.min_target_fidelity >= 0.99,
               fmt("xmon1 T=pi dt=pi/5: <F> = %.5f (need >= 0.995), min target F = %.5f (need >= 0.99)",
                   r.grand_mean_fidelity, r.min_target_fidelity) +
                   ", tasks = " + std::to_string(r.tasks.size()));
        all_suites.push_back(std::move(s));
    }

    // 2. Single-qubit dot, two settings.
    double dqd1_rg = 0;
    double dqd1_sg = 0;
    {
        Suite a = run_pair(ModelKind::Dqd1, "2pi", "pi/5");
        Suite b = run_pair(ModelKind::Dqd1, "4pi", "pi/3");
        double fa = a.rg.grand_mean_fidelity;
        double fb = b.rg.grand_mean_fidelity;
        report(2, std::abs(fa - 0.973) <= 0.015 && std::abs(fb - 0.983) <= 0.015,
               fmt("dqd1 T=2pi dt=pi/5: <F> = %.5f (0.973 +- 0.015); T=4pi dt=pi/3: <F> = %.5f (0.983 +- 0.015)", fa,
                   fb));
        dqd1_rg = a.rg.grand_mean_fidelity;
        dqd1_sg = a.sg.grand_mean_fidelity;
        all_suites.push_back(std::move(a));
        all_suites.push_back(std::move(b));
    }

    // 3. Two-qubit desk-scale suites on the seed-0 32-point subsample.
    double dqd2_10 = 0;
    double xmon2_10 = 0;
    {
        Suite d = run_pair(ModelKind::Dqd2, "10pi", "pi/2");
        Suite x = run_pair(ModelKind::Xmon2, "10pi", "pi/4");
        dqd2_10 = d.rg.grand_mean_fidelity;
        xmon2_10 = x.rg.grand_mean_fidelity;
        bool sizes = d.rg.tasks.size() == 992 && x.rg.tasks.size() == 992;
        report(3, sizes && std::abs(dqd2_10 - 0.911) <= 0.03 && std::abs(xmon2_10 - 0.971) <= 0.03,
               fmt("dqd2 T=10pi dt=pi/2: <F> = %.5f (0.911 +- 0.03); xmon2 T=10pi dt=pi/4: <F> = %.5f (0.971 +- 0.03)",
                   dqd2_10, xmon2_10) +
                   ", tasks = " + std::to_string(d.rg.tasks.size()));
        all_suites.push_back(std::move(d));
        all_suites.push_back(std::move(x));
    }

    // 4. Longer horizons do not hurt on the same subsample.
    {
        Suite d5 = run_pair(ModelKind::Dqd2, "5pi", "pi/2");
        Suite d20 = run_pair(ModelKind::Dqd2, "20pi", "pi/2");
        Suite x5 = run_pair(ModelKind::Xmon2, "5pi", "pi/4");
        Suite x15 = run_pair(ModelKind::Xmon2, "15pi", "pi/4");
        double a = d5.rg.grand_mean_fidelity;
        double b = d20.rg.grand_mean_fidelity;
        double c = x5.rg.grand_mean_fidelity;
        double e = x15.rg.grand_mean_fidelity;
        report(4, a < b && c < e,
               fmt("dqd2 5pi -> 20pi: %.5f -> %.5f; xmon2 5pi -> 15pi: %.5f -> %.5f", a, b, c, e));
        all_suites.push_back(std::move(d5));
        all_suites.push_back(std::move(d20));
        all_suites.push_back(std::move(x5));
        all_suites.push_back(std::move(x15));
    }

    // 5. RG never loses to SG, and wins clearly on the dot suite.
    {
        size_t bad = 0;
        size_t total = 0;
        for (const auto &s : all_suites) {
            bad += dominance_violations(s);
            total += s.rg.tasks.size();
        }
        report(5, bad == 0 && dqd1_rg - dqd1_sg >= 0.03,
               "per-task RG >= SG violations: " + std::to_string(bad) + " of " + std::to_string(total) +
                   fmt("; dqd1 T=2pi RG - SG = %.5f - %.5f = %.5f (need >= 0.03)", dqd1_rg, dqd1_sg,
                       dqd1_rg - dqd1_sg));
    }

    // 6. Exhaustive search bounds greedy on short horizons.
    {
        ControlModel model(ModelKind::Dqd1);
        PropagatorCache cache(model, kPi / 5);
        std::mt19937_64 rng(2024);
        size_t below = 0;
        double gap = 0;
        for (int k = 0; k < 50; k++) {
            StateVector init = haar_qubit(rng);
            StateVector target = haar_qubit(rng);
            DesignProblem p{model, cache, init, target, 6, kDefaultThreshold};
            double rg = design_rg(p).f_max;
            double opt = brute_force_optimum(p, 6).f_opt;
            below += opt < rg;
            gap += opt - rg;
        }
        // The optimum of init = target is 1; the search may find a sequence that rounds a few ulps higher.
        double trivial_gap = 0;
        for (int k = 0; k < 10; k++) {
            StateVector s = haar_qubit(rng);
            DesignProblem p{model, cache, s, s, 6, kDefaultThreshold};
            trivial_gap = std::max(trivial_gap, brute_force_optimum(p, 6).f_opt - design_rg(p).f_max);
        }
        report(6, below == 0 && trivial_gap <= 1e-12,
               "oracle < RG on " + std::to_string(below) + " of 50 tasks" +
                   fmt("; mean gap (oracle - RG) = %.6f; max trivial-task gap = %.1e", gap / 50, trivial_gap));
    }

    // 7. Analytic checks.
    {
        ControlModel xmon(ModelKind::Xmon1);
        PropagatorCache xc(xmon, kPi / 5);
        auto zero = StateVector::basis(2, 0);
        auto one = StateVector::basis(2, 1);
        auto flip = design_rg({xmon, xc, zero, one, 5, kDefaultThreshold});
        double flip_err = std::abs(1 - flip.f_max);

        ControlModel dqd(ModelKind::Dqd1);
        double dt = kPi / 7;
        PropagatorCache dc(dqd, dt);
        double pop_err = 0;
        StateVector s = zero;
        for (int n = 1; n <= 10; n++) {
            s = dc[ActionId{0}].apply(s);
            pop_err = std::max(pop_err, std::abs(std::norm(s[1]) - std::pow(std::sin(n * dt), 2)));
        }
        report(7, flip_err <= 1e-9 && pop_err <= 1e-9,
               fmt("xmon1 |0> -> |1>: |1 - F| = %.2e in ", flip_err) + std::to_string(flip.step_end) +
                   fmt(" steps; dqd1 sigma_x populations vs sin^2(t): max error %.2e", pop_err));
    }

    // 8. Unitarity and norm preservation.
    {
        std::mt19937_64 rng(8);
        double worst_unitarity = 0;
        std::uniform_real_distribution<double> t(0.01, 3.0);
        for (int k = 0; k < 1000; k++) {
            auto u = expm_hermitian(random_hermitian(rng, k % 2 ? 4 : 2), t(rng));
            worst_unitarity = std::max(worst_unitarity, u.unitarity_error());
        }
        double worst_drift = 0;
        for (auto kind : {ModelKind::Dqd1, ModelKind::Dqd2, ModelKind::Xmon1, ModelKind::Xmon2}) {
            ControlModel model(kind);
            PropagatorCache cache(model, 0.37);
            StateVector s = StateVector::basis(model.dim(), 0);
            for (int k = 0; k < 10000; k++) {
                s = cache[ActionId{static_cast<uint32_t>(uniform_below(rng, model.action_count()))}].apply(s);
            }
            worst_drift = std::max(worst_drift, std::abs(s.norm_squared() - 1));
        }
        report(8, worst_unitarity <= 1e-12 && worst_drift <= 1e-8,
               fmt("1000 expm max |UU^dag - I| = %.2e (<= 1e-12); 1e4-step walk max norm drift = %.2e (<= 1e-8)",
                   worst_unitarity, worst_drift));
    }

    // 9. Noise harness on the dot suite.
    {
        const SuiteReport &base = all_suites[1].rg;
        ControlModel model(ModelKind::Dqd1);
        TaskSet task_set{base.points.states, base.task_list()};
        std::vector<DesignedTask> designed;
        for (const auto &t : base.tasks) {
            designed.push_back({{t.init, t.target}, {t.actions, base.config.dt}});
        }
        std::vector<ImperfectionSpec> specs{
            {ImperfectionKind::Static, {"J"}, 0.0, 1, 0},
            {ImperfectionKind::Dynamic, {"J", "h"}, 0.0, 5, 7},
            {ImperfectionKind::Static, {"J"}, 0.3, 1, 0},
            {ImperfectionKind::Dynamic, {"J"}, 0.1, 5, 11},
        };
        auto rows = sweep(model, task_set, designed, specs, 1);
        auto again = sweep(model, task_set, designed, specs, 1);
        auto threaded = sweep(model, task_set, designed, specs, 4);

        // Zero amplitude must reproduce every per-task fidelity, not just the mean.
        size_t inexact = 0;
        for (size_t i = 0; i < designed.size(); i++) {
            const auto &t = designed[i].task;
            for (size_t s = 0; s < 2; s++) {
                auto r = replay(model, designed[i].sequence, task_set.points[t.init], task_set.points[t.target],
                                specs[s], i);
                for (double f : r.per_realization_fidelities) {
                    inexact += f != base.tasks[i].f_max;
                }
            }
        }
        bool zero_exact = inexact == 0 && rows[0].mean_avg_fidelity == base.grand_mean_fidelity &&
                          rows[1].mean_avg_fidelity == base.grand_mean_fidelity;
        bool reproducible = true;
        for (size_t k = 0; k < rows.size(); k++) {
            reproducible = reproducible && rows[k].mean_avg_fidelity == again[k].mean_avg_fidelity &&
                           rows[k].mean_avg_fidelity == threaded[k].mean_avg_fidelity &&
                           rows[k].constraint_violations == threaded[k].constraint_violations;
        }
        bool drift_lowers = rows[2].mean_avg_fidelity < rows[0].mean_avg_fidelity;
        report(9, zero_exact && reproducible && drift_lowers,
               std::string("zero-amplitude replay exact: ") + (zero_exact ? "yes" : "no") +
                   "; dynamic sweep identical across runs and 1/4 workers: " + (reproducible ? "yes" : "no") +
                   fmt("; static J drift 0.3: <F> %.5f -> %.5f", rows[0].mean_avg_fidelity,
                       rows[2].mean_avg_fidelity));
    }

    // 10. Single-threaded design time per single-qubit task.
    {
        RunConfig c = suite_config(ModelKind::Dqd1, "2pi", "pi/5");
        c.workers = 1;
        double dqd = run_suite(c).mean_design_time_ms;
        RunConfig x = suite_config(ModelKind::Xmon1, "pi", "pi/5");
        x.workers = 1;
        double xm = run_suite(x).mean_design_time_ms;
        report(10, std::max(dqd, xm) <= 50.0,
               fmt("mean RG design time per task: dqd1 %.4f ms, xmon1 %.4f ms (ceiling 50 ms)", dqd, xm), true);
    }

    std::printf("%s: %d hard criteria failed\n", hard_failures ? "FAILED" : "PASSED", hard_failures);
    return hard_failures ? 1 : 0;
}
