#include "bp/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bp/errors.hpp"
#include "bp/rng.hpp"

namespace bp::synth {

Eigen::MatrixXd chol_equicorr(int p, double rho) {
    if (!(rho >= 0.0 && rho < 1.0)) throw InvalidRho("rho must lie in [0, 1)");
    Eigen::MatrixXd sigma =
        Eigen::MatrixXd::Constant(p, p, rho) +
        (1.0 - rho) * Eigen::MatrixXd::Identity(p, p);
    Eigen::LLT<Eigen::MatrixXd> llt(sigma);
    if (llt.info() != Eigen::Success)
        throw InvalidRho("equicorrelation matrix not positive definite");
    return llt.matrixL();
}

namespace {

Eigen::VectorXd standard_normal(int p, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd z(p);
    for (int i = 0; i < p; ++i) z[i] = normal(rng);
    return z;
}

double chi_squared(double df, std::mt19937_64& rng) {
    std::gamma_distribution<double> gamma(df / 2.0, 2.0);
    return gamma(rng);
}

}  // namespace

Eigen::MatrixXd sample_mode(const ModeSpec& spec, int p, std::mt19937_64& rng) {
    if (spec.count < 0 || p < 1 || spec.mean.size() != p)
        throw InvalidSpec("mode spec inconsistent with dimension");
    const Eigen::MatrixXd L = chol_equicorr(p, spec.rho);
    Eigen::MatrixXd out(spec.count, p);

    switch (spec.distribution) {
        case Distribution::Normal:
            for (int i = 0; i < spec.count; ++i)
                out.row(i) = (spec.mean + L * standard_normal(p, rng)).transpose();
            break;
        case Distribution::StudentT:
            for (int i = 0; i < spec.count; ++i) {
                const Eigen::VectorXd g = L * standard_normal(p, rng);
                const double w = chi_squared(5.0, rng);
                out.row(i) = (spec.mean + g / std::sqrt(w / 5.0)).transpose();
            }
            break;
        case Distribution::Lognormal:
            for (int i = 0; i < spec.count; ++i)
                out.row(i) =
                    (spec.mean + L * standard_normal(p, rng)).array().exp().transpose();
            break;
        case Distribution::Wishart: {
            // Bartlett factor: W = (L A)(L A)', df = p, so diag(W) is just
            // the squared row norms of L*A.
            const double df = static_cast<double>(p);
            for (int i = 0; i < spec.count; ++i) {
                Eigen::MatrixXd A = Eigen::MatrixXd::Zero(p, p);
                std::normal_distribution<double> normal(0.0, 1.0);
                for (int r = 0; r < p; ++r) {
                    A(r, r) = std::sqrt(chi_squared(df - r, rng));
                    for (int c2 = 0; c2 < r; ++c2) A(r, c2) = normal(rng);
                }
                const Eigen::MatrixXd B = L.triangularView<Eigen::Lower>() * A;
                out.row(i) =
                    (spec.mean + B.rowwise().squaredNorm() / df).transpose();
            }
            break;
        }
    }
    return out;
}

LabeledDataset inject_outliers(const ScenarioConfig& config, std::mt19937_64& rng) {
    const int n = config.total_n();
    if (n < 1 || config.p < 1) throw InvalidSpec("scenario has no observations");

    Eigen::MatrixXd values(n, config.p);
    std::vector<bool> labels(n, false);
    int row = 0;
    for (const auto& mode : config.modes) {
        values.middleRows(row, mode.count) = sample_mode(mode, config.p, rng);
        row += mode.count;
    }
    std::uniform_real_distribution<double> unif(-config.outlier_halfwidth,
                                                config.outlier_halfwidth);
    for (int i = 0; i < config.outlier_count; ++i, ++row) {
        for (int j = 0; j < config.p; ++j) values(row, j) = unif(rng);
        labels[row] = true;
    }

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Eigen::MatrixXd shuffled(n, config.p);
    std::vector<bool> shuffled_labels(n);
    for (int i = 0; i < n; ++i) {
        shuffled.row(i) = values.row(perm[i]);
        shuffled_labels[i] = labels[perm[i]];
    }
    return LabeledDataset{validate(std::move(shuffled)), std::move(shuffled_labels)};
}

LabeledDataset generate(const ScenarioConfig& config) {
    std::mt19937_64 rng = make_rng(config.seed);
    return inject_outliers(config, rng);
}

ScenarioConfig random_scenario(std::mt19937_64& rng) {
    ScenarioConfig config;
    std::uniform_int_distribution<int> n_draw(50, 150);
    std::uniform_int_distribution<int> p_draw(50, 300);
    std::uniform_int_distribution<int> mode_draw(1, 5);
    std::uniform_int_distribution<int> dist_draw(0, 3);
    std::uniform_int_distribution<int> level_draw(0, 2);
    std::uniform_real_distribution<double> rho_draw(0.0, 1.0);

    const int n = n_draw(rng);
    config.p = p_draw(rng);
    const int n_modes = mode_draw(rng);
    const double rho = std::min(rho_draw(rng), 0.999);

    int outliers = 0;
    switch (level_draw(rng)) {
        case 0:
            break;
        case 1: {
            std::uniform_real_distribution<double> frac(0.01, 0.10);
            outliers = std::max(1, static_cast<int>(std::lround(frac(rng) * n)));
            break;
        }
        default: {
            std::uniform_real_distribution<double> frac(0.10, 0.20);
            outliers = std::max(1, static_cast<int>(std::lround(frac(rng) * n)));
            break;
        }
    }

    const int inliers = n - outliers;
    for (int k = 0; k < n_modes; ++k) {
        ModeSpec mode;
        mode.distribution = static_cast<Distribution>(dist_draw(rng));
        mode.mean = Eigen::VectorXd::Constant(config.p, 5.0 * k);
        mode.rho = rho;
        mode.count = inliers / n_modes + (k < inliers % n_modes ? 1 : 0);
        config.modes.push_back(std::move(mode));
    }
    config.outlier_count = outliers;
    config.outlier_halfwidth = 20.0;
    return config;
}

}  // namespace bp::synth
