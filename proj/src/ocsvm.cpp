#include "bp/ocsvm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bp/errors.hpp"

namespace bp {

double recover_rho(const Eigen::VectorXd& alphas, const Eigen::VectorXd& gradient,
                   double box_bound, double sv_tolerance) {
    const Eigen::Index n = alphas.size();
    double free_sum = 0.0;
    long free_count = 0;
    double upper_max = -std::numeric_limits<double>::infinity();
    bool have_upper = false;
    double zero_min = std::numeric_limits<double>::infinity();
    bool have_zero = false;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double a = alphas[i];
        if (a > sv_tolerance && a < box_bound - sv_tolerance) {
            free_sum += gradient[i];
            ++free_count;
        } else if (a >= box_bound - sv_tolerance) {
            upper_max = std::max(upper_max, gradient[i]);
            have_upper = true;
        } else {
            zero_min = std::min(zero_min, gradient[i]);
            have_zero = true;
        }
    }
    if (free_count > 0) return free_sum / static_cast<double>(free_count);
    if (have_upper && have_zero) return 0.5 * (upper_max + zero_min);
    if (have_upper) return upper_max;  // covers the single alpha = 1 point
    return zero_min;
}

OcsvmModel fit(const DataMatrix& X, OcsvmParams params) {
    const Eigen::Index n = X.n();
    if (!(params.nu > 0.0 && params.nu <= 1.0))
        throw InvalidSpec("nu must lie in (0, 1]");
    const double C = 1.0 / (params.nu * static_cast<double>(n));
    if (C * static_cast<double>(n) < 1.0)
        throw InfeasibleNu("box cannot hold the simplex");
    if (params.max_iterations <= 0) params.max_iterations = 10000 * n;

    OcsvmModel model;
    model.params = params;
    model.train_rows = X;

    if (n == 1) {
        model.alphas = Eigen::VectorXd::Ones(1);
        model.rho = 1.0;
        model.sv_indices = {0};
        return model;
    }

    const Eigen::MatrixXd K = kernel_matrix(X, params.kernel);
    Eigen::VectorXd alpha =
        Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
    Eigen::VectorXd g = K * alpha;  // gradient of 1/2 a'Ka

    model.converged = false;
    for (long iter = 0; iter < params.max_iterations; ++iter) {
        // i: lowest gradient among coordinates that can grow,
        // j: highest gradient among coordinates that can shrink.
        int i = -1, j = -1;
        double gi = std::numeric_limits<double>::infinity();
        double gj = -std::numeric_limits<double>::infinity();
        for (Eigen::Index k = 0; k < n; ++k) {
            if (alpha[k] < C && g[k] < gi) {
                gi = g[k];
                i = static_cast<int>(k);
            }
            if (alpha[k] > 0.0 && g[k] > gj) {
                gj = g[k];
                j = static_cast<int>(k);
            }
        }
        if (i < 0 || j < 0 || gj - gi <= params.kkt_tolerance) {
            model.converged = true;
            break;
        }
        const double eta = K(i, i) + K(j, j) - 2.0 * K(i, j);
        const double t_max = std::min(C - alpha[i], alpha[j]);
        double t = eta > 1e-15 ? (gj - gi) / eta : t_max;
        t = std::min(t, t_max);
        alpha[i] += t;
        alpha[j] -= t;
        g += t * (K.col(i) - K.col(j));
    }

    model.alphas = std::move(alpha);
    model.rho = recover_rho(model.alphas, g, C, params.sv_tolerance);
    model.sv_indices = support_indices(model, params.sv_tolerance);
    return model;
}

Eigen::VectorXd decision_scores(const OcsvmModel& model, const DataMatrix& query) {
    const Eigen::MatrixXd Kx =
        cross_kernel(model.train_rows, query, model.params.kernel);
    return Eigen::VectorXd::Constant(query.n(), model.rho) -
           Kx.transpose() * model.alphas;
}

std::vector<int> support_indices(const OcsvmModel& model, double sv_tolerance) {
    std::vector<int> idx;
    for (Eigen::Index i = 0; i < model.alphas.size(); ++i)
        if (model.alphas[i] > sv_tolerance) idx.push_back(static_cast<int>(i));
    return idx;
}

double dual_objective(const Eigen::MatrixXd& K, const Eigen::VectorXd& alphas) {
    return 0.5 * alphas.dot(K * alphas);
}

}  // namespace bp
