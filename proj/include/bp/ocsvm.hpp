#pragma once

#include <Eigen/Dense>
#include <vector>

#include "bp/dataset.hpp"
#include "bp/kernel.hpp"

namespace bp {

struct OcsvmParams {
    double nu = 0.01;          // fraction bound; box constraint is 1/(nu*n)
    KernelParams kernel{1.0};
    double kkt_tolerance = 1e-6;
    double sv_tolerance = 1e-7;
    long max_iterations = 0;   // 0 -> 10000 * n
};

struct OcsvmModel {
    Eigen::VectorXd alphas;    // feasible: 0 <= a_i <= 1/(nu*n), sum = 1
    double rho = 0.0;          // hyperplane offset
    DataMatrix train_rows;
    OcsvmParams params;
    std::vector<int> sv_indices;  // { i : a_i > sv_tolerance }
    bool converged = true;     // false when max_iterations was hit

    double box_bound() const {
        return 1.0 / (params.nu * static_cast<double>(alphas.size()));
    }
};

// Solves the dual min 1/2 a'Ka s.t. simplex + box, via two-variable SMO
// on the most-violating pair.
OcsvmModel fit(const DataMatrix& X, OcsvmParams params);

// Offset recovery from a feasible iterate: mean of g over free support
// vectors, with a bounded/zero midpoint fallback. g = K * alphas.
double recover_rho(const Eigen::VectorXd& alphas, const Eigen::VectorXd& gradient,
                   double box_bound, double sv_tolerance);

// score(x) = rho - sum_j a_j K(x_j, x). Positive means outside the boundary.
Eigen::VectorXd decision_scores(const OcsvmModel& model, const DataMatrix& query);

std::vector<int> support_indices(const OcsvmModel& model, double sv_tolerance);

// 1/2 a'Ka, for oracle comparisons.
double dual_objective(const Eigen::MatrixXd& K, const Eigen::VectorXd& alphas);

}  // namespace bp
