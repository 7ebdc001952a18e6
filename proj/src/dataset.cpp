#include "bp/dataset.hpp"

#include <cmath>

#include "bp/errors.hpp"

namespace bp {

DataMatrix validate(Eigen::MatrixXd values, std::vector<std::string> column_names) {
    if (values.rows() < 1 || values.cols() < 1) throw EmptyMatrix();
    for (Eigen::Index i = 0; i < values.rows(); ++i)
        for (Eigen::Index j = 0; j < values.cols(); ++j)
            if (!std::isfinite(values(i, j))) throw NonFiniteEntry(i, j);
    if (!column_names.empty() &&
        static_cast<Eigen::Index>(column_names.size()) != values.cols())
        throw DimensionMismatch("column_names length does not match column count");
    return DataMatrix{std::move(values), std::move(column_names)};
}

DataMatrix standardize(const DataMatrix& X) {
    Eigen::MatrixXd out = X.values;
    const Eigen::Index n = X.n();
    if (n > 1) {
        for (Eigen::Index j = 0; j < X.p(); ++j) {
            const double mean = out.col(j).mean();
            const double ss = (out.col(j).array() - mean).square().sum();
            const double sd = std::sqrt(ss / static_cast<double>(n - 1));
            // skip columns already at unit scale so the map is exactly
            // idempotent even when entries are large
            if (sd > 0.0 && std::abs(sd - 1.0) > 1e-12) out.col(j) /= sd;
        }
    }
    return DataMatrix{std::move(out), X.column_names};
}

DataMatrix select_rows(const DataMatrix& X, const std::vector<int>& rows) {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()), X.p());
    for (std::size_t i = 0; i < rows.size(); ++i) out.row(i) = X.values.row(rows[i]);
    return DataMatrix{std::move(out), X.column_names};
}

DataMatrix select_columns(const DataMatrix& X, const std::vector<int>& cols) {
    Eigen::MatrixXd out(X.n(), static_cast<Eigen::Index>(cols.size()));
    std::vector<std::string> names;
    if (!X.column_names.empty()) names.reserve(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        out.col(j) = X.values.col(cols[j]);
        if (!X.column_names.empty()) names.push_back(X.column_names[cols[j]]);
    }
    return DataMatrix{std::move(out), std::move(names)};
}

}  // namespace bp
