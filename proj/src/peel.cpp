#include "bp/peel.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "bp/errors.hpp"

namespace bp {

PeelTrace boundary_peel(const DataMatrix& X, const PeelParams& params) {
    const int n = static_cast<int>(X.n());
    if (n <= params.n_peel)
        throw TooFewRows("need more than n_peel observations to peel");

    std::vector<int> survivors(n);
    std::iota(survivors.begin(), survivors.end(), 0);

    PeelTrace trace;
    trace.depths.assign(n, 0);
    std::vector<Eigen::VectorXd> columns;

    OcsvmParams ocsvm;
    ocsvm.nu = params.nu;
    ocsvm.kernel.bandwidth = static_cast<double>(X.p());
    ocsvm.kkt_tolerance = params.kkt_tolerance;
    ocsvm.sv_tolerance = params.sv_tolerance;
    ocsvm.max_iterations = params.max_iterations;

    while (static_cast<int>(survivors.size()) > params.n_peel) {
        const DataMatrix sub = select_rows(X, survivors);
        const OcsvmModel model = fit(sub, ocsvm);
        columns.push_back(decision_scores(model, X));
        ++trace.peel_count;

        std::vector<int> removed = model.sv_indices;
        if (removed.empty()) {
            // Numerical degeneracy: force out the heaviest survivor so the
            // loop always terminates.
            int best = 0;
            for (Eigen::Index k = 1; k < model.alphas.size(); ++k)
                if (model.alphas[k] > model.alphas[best]) best = static_cast<int>(k);
            removed.push_back(best);
        }
        std::vector<int> next;
        next.reserve(survivors.size());
        std::size_t r = 0;
        for (std::size_t k = 0; k < survivors.size(); ++k) {
            if (r < removed.size() && static_cast<int>(k) == removed[r]) {
                trace.depths[survivors[k]] = trace.peel_count;
                ++r;
            } else {
                next.push_back(survivors[k]);
            }
        }
        survivors = std::move(next);
        if (survivors.empty()) break;
    }

    for (int idx : survivors) trace.depths[idx] = trace.peel_count;

    trace.decision_matrix.resize(n, trace.peel_count);
    for (int j = 0; j < trace.peel_count; ++j) trace.decision_matrix.col(j) = columns[j];
    return trace;
}

Eigen::VectorXd kds_scores(const PeelTrace& trace) {
    const Eigen::Index n = trace.decision_matrix.rows();
    Eigen::VectorXd scores(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double weight =
            static_cast<double>(trace.peel_count) / static_cast<double>(trace.depths[i]);
        scores[i] = weight * trace.decision_matrix.row(i).mean();
    }
    return scores;
}

namespace {

// Type-7 quantile: linear interpolation at position (n-1)*q over the sorted
// sample.
double quantile_sorted(const std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

double tukey_threshold(const Eigen::VectorXd& scores) {
    if (scores.size() < 2) throw TooFewScores("need at least two scores");
    std::vector<double> sorted(scores.data(), scores.data() + scores.size());
    std::sort(sorted.begin(), sorted.end());
    const double q1 = quantile_sorted(sorted, 0.25);
    const double q3 = quantile_sorted(sorted, 0.75);
    return q3 + 1.5 * (q3 - q1);
}

DetectionResult bp_detect(const DataMatrix& X, const PeelParams& params) {
    const auto start = std::chrono::steady_clock::now();
    const PeelTrace trace = boundary_peel(X, params);
    DetectionResult result;
    result.scores = kds_scores(trace);
    result.threshold = tukey_threshold(result.scores);
    result.flags.resize(result.scores.size());
    for (Eigen::Index i = 0; i < result.scores.size(); ++i)
        result.flags[i] = result.scores[i] > result.threshold;
    result.peel_count = trace.peel_count;
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace bp
