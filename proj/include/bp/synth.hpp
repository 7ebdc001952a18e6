#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

#include "bp/dataset.hpp"

namespace bp::synth {

enum class Distribution { Normal, StudentT, Lognormal, Wishart };

struct ModeSpec {
    Distribution distribution = Distribution::Normal;
    Eigen::VectorXd mean;  // length p
    double rho = 0.0;      // equicorrelation, in [0, 0.999]
    int count = 0;
};

struct ScenarioConfig {
    std::vector<ModeSpec> modes;
    int p = 0;
    int outlier_count = 0;
    double outlier_halfwidth = 10.0;  // outliers iid uniform on [-hw, hw]
    std::uint64_t seed = 0;

    int total_n() const {
        int n = outlier_count;
        for (const auto& m : modes) n += m.count;
        return n;
    }
};

// Lower Cholesky factor of (1-rho)I + rho*J.
Eigen::MatrixXd chol_equicorr(int p, double rho);

// count x p draws from one mode. StudentT uses df = 5; Wishart rows are the
// diagonal of a df-normalized Wishart(Sigma, df = p) draw via Bartlett.
Eigen::MatrixXd sample_mode(const ModeSpec& spec, int p, std::mt19937_64& rng);

// Full scenario: mode samples plus uniform outlier rows, deterministically
// shuffled. Labels mark exactly the injected outliers.
LabeledDataset inject_outliers(const ScenarioConfig& config, std::mt19937_64& rng);

// Convenience: rng derived from config.seed.
LabeledDataset generate(const ScenarioConfig& config);

// The fully randomized simulation protocol: n in [50,150], p in [50,300],
// 1-5 modes with means 0, 5, 10, ..., random distribution per mode, rho
// uniform on [0,1) clamped to 0.999, contamination level in
// {none, 1-10%, 10-20%}, outliers U(-20,20).
ScenarioConfig random_scenario(std::mt19937_64& rng);

}  // namespace bp::synth
