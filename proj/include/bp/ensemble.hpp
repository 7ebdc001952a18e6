#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "bp/peel.hpp"

namespace bp {

struct EnsembleParams {
    PeelParams base;
    int c = 50;               // ensemble size
    std::uint64_t seed = 42;
    int workers = 1;          // > 1 runs ensemble members concurrently
};

using FeatureSampler = std::function<std::vector<int>(int p, std::mt19937_64& rng)>;

// max(1, floor(sqrt(p))) distinct column indices, uniform without replacement.
std::vector<int> sample_features(int p, std::mt19937_64& rng);

// Feature-bagged boundary peeling: EKDS_i = mean over ensembles of the
// per-ensemble depth-weighted scores. Member e depends only on (seed, e).
DetectionResult ebp_detect(const DataMatrix& X, const EnsembleParams& params);

// Variant with a pluggable column sampler (test hook; also reached by the
// p = 1 degenerate case).
DetectionResult ebp_detect(const DataMatrix& X, const EnsembleParams& params,
                           const FeatureSampler& sampler);

}  // namespace bp
