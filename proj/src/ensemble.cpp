#include "bp/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <thread>

#include "bp/errors.hpp"
#include "bp/rng.hpp"

namespace bp {

std::vector<int> sample_features(int p, std::mt19937_64& rng) {
    if (p < 1) throw InvalidSpec("dimension must be at least 1");
    int m = static_cast<int>(std::floor(std::sqrt(static_cast<double>(p))));
    while ((m + 1) * (m + 1) <= p) ++m;  // guard against sqrt rounding down
    m = std::max(1, m);

    std::vector<int> pool(p);
    std::iota(pool.begin(), pool.end(), 0);
    // Partial Fisher-Yates for the first m slots.
    for (int k = 0; k < m; ++k) {
        std::uniform_int_distribution<int> pick(k, p - 1);
        std::swap(pool[k], pool[pick(rng)]);
    }
    pool.resize(m);
    std::sort(pool.begin(), pool.end());
    return pool;
}

DetectionResult ebp_detect(const DataMatrix& X, const EnsembleParams& params) {
    return ebp_detect(X, params,
                      [](int p, std::mt19937_64& rng) { return sample_features(p, rng); });
}

DetectionResult ebp_detect(const DataMatrix& X, const EnsembleParams& params,
                           const FeatureSampler& sampler) {
    if (params.c < 1) throw InvalidSpec("ensemble size must be at least 1");
    const auto start = std::chrono::steady_clock::now();
    const int c = params.c;
    const int p = static_cast<int>(X.p());

    std::vector<Eigen::VectorXd> member_scores(c);
    auto run_member = [&](int e) {
        std::mt19937_64 rng = make_rng(params.seed, static_cast<std::uint64_t>(e));
        const std::vector<int> cols = sampler(p, rng);
        PeelParams base = params.base;  // bandwidth tracks the subspace size
        const DataMatrix sub = select_columns(X, cols);
        member_scores[e] = kds_scores(boundary_peel(sub, base));
    };

    if (params.workers > 1 && c > 1) {
        std::atomic<int> next{0};
        const int n_threads = std::min(params.workers, c);
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int t = 0; t < n_threads; ++t)
            pool.emplace_back([&] {
                for (int e = next.fetch_add(1); e < c; e = next.fetch_add(1)) run_member(e);
            });
        for (auto& th : pool) th.join();
    } else {
        for (int e = 0; e < c; ++e) run_member(e);
    }

    // Reduce in fixed ensemble order so results are schedule-independent.
    Eigen::VectorXd acc = member_scores[0];
    for (int e = 1; e < c; ++e) acc += member_scores[e];

    DetectionResult result;
    result.scores = acc / static_cast<double>(c);
    result.threshold = tukey_threshold(result.scores);
    result.flags.resize(result.scores.size());
    for (Eigen::Index i = 0; i < result.scores.size(); ++i)
        result.flags[i] = result.scores[i] > result.threshold;
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace bp
