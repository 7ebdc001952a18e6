#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace bp {

// Immutable n x p observation matrix. Construct through validate() so the
// all-finite invariant holds everywhere downstream.
struct DataMatrix {
    Eigen::MatrixXd values;
    std::vector<std::string> column_names;  // empty, or exactly p labels

    Eigen::Index n() const { return values.rows(); }
    Eigen::Index p() const { return values.cols(); }
};

struct LabeledDataset {
    DataMatrix data;
    std::vector<bool> labels;  // true = outlier; empty means unlabeled

    bool labeled() const { return !labels.empty(); }
};

// Throws EmptyMatrix / NonFiniteEntry; otherwise wraps the matrix.
DataMatrix validate(Eigen::MatrixXd values, std::vector<std::string> column_names = {});

// Divides each column by its sample standard deviation (n-1 denominator).
// Zero-variance columns pass through unchanged. Means are not subtracted.
DataMatrix standardize(const DataMatrix& X);

// Rows of X selected by index, in order.
DataMatrix select_rows(const DataMatrix& X, const std::vector<int>& rows);

// Columns of X selected by index, in order.
DataMatrix select_columns(const DataMatrix& X, const std::vector<int>& cols);

}  // namespace bp
