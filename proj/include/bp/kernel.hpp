#pragma once

#include <Eigen/Dense>

#include "bp/dataset.hpp"

namespace bp {

struct KernelParams {
    double bandwidth;  // s > 0, scale for the squared distance
};

// exp(-||x - y||^2 / s)
double gaussian_kernel(const Eigen::Ref<const Eigen::RowVectorXd>& x,
                       const Eigen::Ref<const Eigen::RowVectorXd>& y,
                       const KernelParams& params);

// Dense symmetric Gram matrix with exact unit diagonal.
Eigen::MatrixXd kernel_matrix(const DataMatrix& X, const KernelParams& params);

// n_train x n_query rectangular kernel block.
Eigen::MatrixXd cross_kernel(const DataMatrix& train, const DataMatrix& query,
                             const KernelParams& params);

}  // namespace bp
