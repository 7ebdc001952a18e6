#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace bp::metrics {

struct Confusion {
    long tp = 0, fp = 0, tn = 0, fn = 0;

    long total() const { return tp + fp + tn + fn; }
};

Confusion confusion(const std::vector<bool>& flags, const std::vector<bool>& labels);

// All measures on a 0-100 scale. Empty denominators yield nullopt so
// aggregation can exclude them rather than average in a fake zero.
std::optional<double> detection_rate(const Confusion& c);
double correct_classification(const Confusion& c);
std::optional<double> precision(const Confusion& c);

// Mann-Whitney AUC, ties counted half. Throws OneClassOnly when labels are
// all one class.
double roc_auc(const Eigen::VectorXd& scores, const std::vector<bool>& labels);

}  // namespace bp::metrics
