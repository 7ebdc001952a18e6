// Acceptance suite: end-to-end checks with pinned tolerances, one pass/fail
// line per criterion.

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bp/bench.hpp"
#include "bp/ensemble.hpp"
#include "bp/errors.hpp"
#include "bp/io.hpp"
#include "bp/metrics.hpp"
#include "bp/ocsvm.hpp"
#include "bp/peel.hpp"
#include "bp/rng.hpp"
#include "bp/synth.hpp"
#include "qp_oracle.hpp"

using namespace bp;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion,
                detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

DataMatrix random_matrix(int n, int p, std::mt19937_64& rng, double scale = 2.0) {
    std::normal_distribution<double> normal(0.0, scale);
    Eigen::MatrixXd m(n, p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < p; ++j) m(i, j) = normal(rng);
    return validate(m);
}

// ---- criterion 1: OCSVM vs projected-gradient oracle --------------------

void criterion_ocsvm_oracle() {
    const auto start = std::chrono::steady_clock::now();
    const double nus[] = {0.01, 0.1, 0.5};
    bool ok = true;
    std::string why;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        std::mt19937_64 rng = make_rng(1000, trial);
        std::uniform_int_distribution<int> nd(2, 8), pd(1, 5);
        const int n = nd(rng), p = pd(rng);
        const DataMatrix X = random_matrix(n, p, rng);
        OcsvmParams params;
        params.nu = nus[trial % 3];
        params.kernel.bandwidth = static_cast<double>(p);
        const OcsvmModel model = fit(X, params);

        if (std::abs(model.alphas.sum() - 1.0) >= 1e-8 ||
            model.alphas.minCoeff() < -1e-12 ||
            model.alphas.maxCoeff() > model.box_bound() + 1e-12) {
            ok = false;
            why = "infeasible alphas at instance " + std::to_string(trial);
            break;
        }
        const Eigen::MatrixXd K = kernel_matrix(X, params.kernel);
        const Eigen::VectorXd ref = oracle::solve_qp(K, model.box_bound());
        const double gap =
            std::abs(dual_objective(K, model.alphas) - dual_objective(K, ref));
        if (gap >= 1e-6) {
            ok = false;
            why = "objective gap " + std::to_string(gap) + " at instance " +
                  std::to_string(trial);
        }
    }
    const double elapsed = seconds_since(start);
    if (ok && elapsed >= 10.0) {
        ok = false;
        why = "runtime " + std::to_string(elapsed) + "s exceeds 10s";
    }
    std::ostringstream msg;
    msg << "OCSVM oracle equivalence over 100 instances (" << elapsed << "s)";
    if (!ok) msg << " -- " << why;
    report(1, ok, msg.str());
}

// ---- criteria 2-4: desk-scale table reproductions ------------------------

bench::ExperimentPlan sim_plan(const std::string& preset,
                               const std::vector<std::string>& methods,
                               std::uint64_t seed) {
    bench::ExperimentPlan plan;
    plan.source = preset;
    plan.methods = methods;
    plan.replicates = 100;
    plan.seed = seed;
    plan.workers = static_cast<int>(
        std::max(1u, std::thread::hardware_concurrency()));
    return plan;
}

void criterion_table1() {
    const auto start = std::chrono::steady_clock::now();
    const auto rows = bench::run_simulation(sim_plan("table1-n0-cor0", {"bp", "ebp"}, 21));
    const double bp_cc = *rows[0].cc;
    const double ebp_cc = *rows[1].cc;
    const double elapsed = seconds_since(start);
    const bool ok = bp_cc >= 99.5 && ebp_cc >= 92.0 && elapsed < 900.0;
    std::ostringstream msg;
    msg << "table1-n0-cor0: BP CC=" << bp_cc << " (>=99.5), EBP CC=" << ebp_cc
        << " (>=92) over 100 replicates (" << elapsed << "s)";
    report(2, ok, msg.str());
}

void criterion_table2() {
    const auto start = std::chrono::steady_clock::now();
    const auto rows = bench::run_simulation(sim_plan("table2-n0-cor0", {"bp"}, 22));
    const double cc = *rows[0].cc;
    const double auc = *rows[0].auc;
    const double elapsed = seconds_since(start);
    const bool ok = cc >= 98.0 && auc >= 99.5 && elapsed < 900.0;
    std::ostringstream msg;
    msg << "table2-n0-cor0: BP CC=" << cc << " (>=98), AUC=" << auc
        << " (>=99.5) over 100 replicates (" << elapsed << "s)";
    report(3, ok, msg.str());
}

void criterion_bimodal() {
    const auto start = std::chrono::steady_clock::now();
    const auto rows = bench::run_simulation(sim_plan("table1-t0,5-cor0.5", {"bp"}, 23));
    const double cc = *rows[0].cc;
    const double elapsed = seconds_since(start);
    const bool ok = cc >= 98.0 && elapsed < 900.0;
    std::ostringstream msg;
    msg << "table1-t0,5-cor0.5: BP CC=" << cc << " (>=98) over 100 replicates ("
        << elapsed << "s)";
    report(4, ok, msg.str());
}

// ---- criterion 5: 2-D t-cloud with uniform outliers -------------------------
//
// Known-infeasible bound, kept as documentation of the gap: the fence
// Q3 + 1.5*IQR can flag at most a quarter of the sample, and a uniform
// outlier on (-10,10)^2 lands inside the t(5) cloud often enough that even
// an oracle flagging the 27 most extreme of 110 points catches all 10
// outliers in only ~65% of runs. The >=90% requirement below therefore
// cannot be met by any scorer under this generator; the check reports the
// achieved rate.

void criterion_figure1() {
    const auto start = std::chrono::steady_clock::now();
    int all_flagged_runs = 0;
    std::vector<int> peel_counts;
    for (int run = 0; run < 100; ++run) {
        std::mt19937_64 rng = make_rng(5000, run);
        synth::ScenarioConfig config = bench::preset_scenario("figure1", rng);
        config.seed = splitmix64(5000 + run);
        const LabeledDataset ds = synth::inject_outliers(config, rng);
        const DetectionResult result = bp_detect(ds.data, {});
        peel_counts.push_back(result.peel_count);
        bool all = true;
        for (std::size_t i = 0; i < ds.labels.size(); ++i)
            if (ds.labels[i] && !result.flags[i]) all = false;
        if (all) ++all_flagged_runs;
    }
    std::sort(peel_counts.begin(), peel_counts.end());
    const double median =
        0.5 * (peel_counts[49] + peel_counts[50]);
    const double elapsed = seconds_since(start);
    const bool ok =
        all_flagged_runs >= 90 && median >= 8.0 && median <= 20.0 && elapsed < 120.0;
    std::ostringstream msg;
    msg << "figure1: all outliers flagged in " << all_flagged_runs
        << "/100 runs (>=90 required; oracle ceiling ~65 for this generator), "
           "median peel_count="
        << median << " in [8,20] (" << elapsed << "s)";
    report(5, ok, msg.str());
}

// ---- criterion 6: metric oracles ------------------------------------------

double brute_auc(const Eigen::VectorXd& scores, const std::vector<bool>& labels) {
    double u = 0.0;
    long n_pos = 0, n_neg = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!labels[i]) continue;
        ++n_pos;
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if (labels[j]) continue;
            if (scores[i] > scores[j])
                u += 1.0;
            else if (scores[i] == scores[j])
                u += 0.5;
        }
    }
    for (bool b : labels) n_neg += b ? 0 : 1;
    return 100.0 * u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

void criterion_metric_oracles() {
    bool ok = true;
    std::string why;
    std::mt19937_64 rng = make_rng(6000);
    std::uniform_int_distribution<int> nd(2, 12), sd(0, 5);
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = nd(rng);
        Eigen::VectorXd scores(n);
        std::vector<bool> labels(n);
        bool pos = false, neg = false;
        for (int i = 0; i < n; ++i) {
            scores[i] = sd(rng);
            labels[i] = sd(rng) > 2;
            (labels[i] ? pos : neg) = true;
        }
        if (!pos || !neg) continue;
        ++checked;
        if (metrics::roc_auc(scores, labels) != brute_auc(scores, labels)) {
            ok = false;
            why = "AUC mismatch at trial " + std::to_string(trial);
            break;
        }
    }

    // confusion-derived formulas, exact
    const metrics::Confusion c{7, 3, 30, 2};
    if (*metrics::detection_rate(c) != 100.0 * 7.0 / 9.0 ||
        metrics::correct_classification(c) != 100.0 * 37.0 / 42.0 ||
        *metrics::precision(c) != 100.0 * 7.0 / 10.0) {
        ok = false;
        why = "confusion-derived formula mismatch";
    }
    std::ostringstream msg;
    msg << "metric oracles: AUC == brute force on " << checked
        << " random cases, CC/DR/PREC exact";
    if (!ok) msg << " -- " << why;
    report(6, ok, msg.str());
}

// ---- criterion 7: threshold exactness --------------------------------------

void criterion_threshold() {
    Eigen::VectorXd odd(5);
    odd << 1, 2, 3, 4, 5;
    Eigen::VectorXd even(4);
    even << 1, 2, 3, 4;
    const double h5 = tukey_threshold(odd);
    const double h4 = tukey_threshold(even);
    const bool ok = h5 == 7.0 && h4 == 5.5;
    std::ostringstream msg;
    msg << "tukey_threshold({1..5})=" << h5 << " (==7), ({1..4})=" << h4
        << " (==5.5)";
    report(7, ok, msg.str());
}

// ---- criterion 8: ensemble degeneracy ---------------------------------------

void criterion_degeneracy() {
    bool ok = true;
    std::string why;
    const FeatureSampler all_cols = [](int p, std::mt19937_64&) {
        std::vector<int> cols(p);
        for (int j = 0; j < p; ++j) cols[j] = j;
        return cols;
    };
    for (int trial = 0; trial < 20 && ok; ++trial) {
        std::mt19937_64 rng = make_rng(8000, trial);
        std::uniform_int_distribution<int> nd(5, 30), pd(1, 8);
        const DataMatrix X = random_matrix(nd(rng), pd(rng), rng, 1.0);
        EnsembleParams params;
        params.c = 1;
        params.seed = trial;
        const DetectionResult ebp = ebp_detect(X, params, all_cols);
        const DetectionResult bp_result = bp_detect(X, params.base);
        for (Eigen::Index i = 0; i < ebp.scores.size(); ++i)
            if (ebp.scores[i] != bp_result.scores[i]) ok = false;
        if (ebp.threshold != bp_result.threshold || ebp.flags != bp_result.flags)
            ok = false;
        if (!ok) why = " -- mismatch at dataset " + std::to_string(trial);
    }
    report(8, ok, "c=1 all-column ensemble equals bp_detect bitwise on 20 datasets" + why);
}

// ---- criterion 9: determinism ------------------------------------------------

void criterion_determinism() {
    namespace fs = std::filesystem;
    bool ok = true;
    std::string why;
    const fs::path dir =
        fs::temp_directory_path() / ("bp_accept_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);

    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    // metric files end each row with a wall-clock column; mask it, since
    // elapsed time is the one field that legitimately varies between runs
    auto mask_seconds = [](const std::string& text) {
        std::istringstream in(text);
        std::string line, out;
        while (std::getline(in, line)) {
            const auto comma = line.rfind(',');
            out += line.substr(0, comma == std::string::npos ? line.size() : comma);
            out += '\n';
        }
        return out;
    };

    // detect path: EBP scores written twice with the same seed, multi-worker
    std::mt19937_64 rng = make_rng(9000);
    const DataMatrix X = random_matrix(40, 9, rng, 1.0);
    EnsembleParams eparams;
    eparams.c = 16;
    eparams.seed = 31337;
    eparams.workers = 4;
    io::write_scores(ebp_detect(X, eparams), (dir / "s1.csv").string());
    io::write_scores(ebp_detect(X, eparams), (dir / "s2.csv").string());
    if (slurp(dir / "s1.csv") != slurp(dir / "s2.csv")) {
        ok = false;
        why = "score files differ across identical ebp runs";
    }

    // simulate path: metrics CSV written twice, multi-worker
    bench::ExperimentPlan plan;
    plan.source = "figure1";
    plan.methods = {"bp", "ebp"};
    plan.replicates = 6;
    plan.seed = 17;
    plan.workers = 4;
    plan.ensembles = 8;
    io::write_metrics(bench::run_simulation(plan), (dir / "m1.csv").string());
    io::write_metrics(bench::run_simulation(plan), (dir / "m2.csv").string());
    if (mask_seconds(slurp(dir / "m1.csv")) != mask_seconds(slurp(dir / "m2.csv"))) {
        ok = false;
        why = "metric files differ across identical simulate runs";
    }
    fs::remove_all(dir);
    std::ostringstream msg;
    msg << "same-seed runs write identical score and metric files (timing "
           "column excluded) under a 4-worker pool";
    if (!ok) msg << " -- " << why;
    report(9, ok, msg.str());
}

// ---- criterion 10: invariant property suites ---------------------------------

void criterion_invariants() {
    bool ok = true;
    std::string why;

    // kernel symmetry / bounds / PSD, 200 cases
    for (int trial = 0; trial < 200 && ok; ++trial) {
        std::mt19937_64 rng = make_rng(10100, trial);
        std::uniform_int_distribution<int> nd(1, 6), pd(1, 4);
        const int n = nd(rng), p = pd(rng);
        const DataMatrix X = random_matrix(n, p, rng);
        const Eigen::MatrixXd K = kernel_matrix(X, {static_cast<double>(p)});
        if ((K - K.transpose()).cwiseAbs().maxCoeff() != 0.0 || K.maxCoeff() > 1.0 ||
            K.minCoeff() <= 0.0 || K.diagonal().minCoeff() != 1.0) {
            ok = false;
            why = "kernel symmetry/bounds";
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(K);
        if (eig.eigenvalues().minCoeff() < -1e-9) {
            ok = false;
            why = "kernel PSD";
        }
    }

    // peel depth partition, termination, weight bounds, flag consistency
    for (int trial = 0; trial < 200 && ok; ++trial) {
        std::mt19937_64 rng = make_rng(10200, trial);
        std::uniform_int_distribution<int> nd(3, 16), pd(1, 4);
        const int n = nd(rng), p = pd(rng);
        const DataMatrix X = random_matrix(n, p, rng, 1.0);
        const PeelTrace trace = boundary_peel(X, {});
        if (trace.peel_count < 1 || trace.peel_count > n) {
            ok = false;
            why = "peel termination bound";
        }
        for (int d : trace.depths)
            if (d < 1 || d > trace.peel_count) {
                ok = false;
                why = "depth partition";
            }
        const Eigen::VectorXd scores = kds_scores(trace);
        for (int i = 0; i < n; ++i) {
            const double w =
                static_cast<double>(trace.peel_count) / trace.depths[i];
            if (w < 1.0 || w > static_cast<double>(trace.peel_count)) {
                ok = false;
                why = "weight bounds";
            }
        }
        const DetectionResult out = bp_detect(X, {});
        for (Eigen::Index i = 0; i < out.scores.size(); ++i)
            if (out.flags[i] != (out.scores[i] > out.threshold)) {
                ok = false;
                why = "flag consistency";
            }
    }

    // standardize idempotence
    for (int trial = 0; trial < 200 && ok; ++trial) {
        std::mt19937_64 rng = make_rng(10300, trial);
        std::uniform_int_distribution<int> nd(2, 12), pd(1, 6);
        const DataMatrix X = random_matrix(nd(rng), pd(rng), rng, 3.0);
        const DataMatrix once = standardize(X);
        const DataMatrix twice = standardize(once);
        if ((once.values - twice.values).cwiseAbs().maxCoeff() >= 1e-12) {
            ok = false;
            why = "standardize idempotence";
        }
    }

    std::ostringstream msg;
    msg << "invariant suites (kernel, peel, weights, flags, standardize), "
           "200 cases each";
    if (!ok) msg << " -- failed: " << why;
    report(10, ok, msg.str());
}

}  // namespace

int main() {
    criterion_ocsvm_oracle();
    criterion_table1();
    criterion_table2();
    criterion_bimodal();
    criterion_figure1();
    criterion_metric_oracles();
    criterion_threshold();
    criterion_degeneracy();
    criterion_determinism();
    criterion_invariants();
    std::printf("%s: %d criterion(s) failed\n", g_failures == 0 ? "OK" : "FAILURES",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
