#include "bp/kernel.hpp"

#include <cmath>

#include "bp/errors.hpp"

namespace bp {

namespace {

void check_bandwidth(const KernelParams& params) {
    if (!(params.bandwidth > 0.0))
        throw InvalidSpec("kernel bandwidth must be positive");
}

double kernel_from_sqdist(double d2, double s) { return std::exp(-d2 / s); }

}  // namespace

double gaussian_kernel(const Eigen::Ref<const Eigen::RowVectorXd>& x,
                       const Eigen::Ref<const Eigen::RowVectorXd>& y,
                       const KernelParams& params) {
    check_bandwidth(params);
    if (x.size() != y.size())
        throw DimensionMismatch("kernel arguments have different lengths");
    return kernel_from_sqdist((x - y).squaredNorm(), params.bandwidth);
}

Eigen::MatrixXd kernel_matrix(const DataMatrix& X, const KernelParams& params) {
    check_bandwidth(params);
    const Eigen::Index n = X.n();
    Eigen::MatrixXd K(n, n);
    // Upper triangle mirrored so the result is exactly symmetric.
    for (Eigen::Index i = 0; i < n; ++i) {
        K(i, i) = 1.0;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double d2 = (X.values.row(i) - X.values.row(j)).squaredNorm();
            const double k = kernel_from_sqdist(d2, params.bandwidth);
            K(i, j) = k;
            K(j, i) = k;
        }
    }
    return K;
}

Eigen::MatrixXd cross_kernel(const DataMatrix& train, const DataMatrix& query,
                             const KernelParams& params) {
    check_bandwidth(params);
    if (train.p() != query.p())
        throw DimensionMismatch("train and query dimension differ");
    Eigen::MatrixXd K(train.n(), query.n());
    for (Eigen::Index i = 0; i < train.n(); ++i)
        for (Eigen::Index j = 0; j < query.n(); ++j) {
            const double d2 = (train.values.row(i) - query.values.row(j)).squaredNorm();
            K(i, j) = kernel_from_sqdist(d2, params.bandwidth);
        }
    return K;
}

}  // namespace bp
