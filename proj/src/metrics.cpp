#include "bp/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "bp/errors.hpp"

namespace bp::metrics {

Confusion confusion(const std::vector<bool>& flags, const std::vector<bool>& labels) {
    if (flags.size() != labels.size())
        throw LengthMismatch("flags and labels have different lengths");
    Confusion c;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        if (labels[i])
            flags[i] ? ++c.tp : ++c.fn;
        else
            flags[i] ? ++c.fp : ++c.tn;
    }
    return c;
}

std::optional<double> detection_rate(const Confusion& c) {
    if (c.tp + c.fn == 0) return std::nullopt;
    return 100.0 * static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
}

double correct_classification(const Confusion& c) {
    if (c.total() == 0) throw LengthMismatch("empty confusion");
    return 100.0 * static_cast<double>(c.tp + c.tn) / static_cast<double>(c.total());
}

std::optional<double> precision(const Confusion& c) {
    if (c.tp + c.fp == 0) return std::nullopt;
    return 100.0 * static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
}

double roc_auc(const Eigen::VectorXd& scores, const std::vector<bool>& labels) {
    const std::size_t n = labels.size();
    if (static_cast<std::size_t>(scores.size()) != n)
        throw LengthMismatch("scores and labels have different lengths");
    long n_pos = 0;
    for (bool b : labels) n_pos += b ? 1 : 0;
    const long n_neg = static_cast<long>(n) - n_pos;
    if (n_pos == 0 || n_neg == 0) throw OneClassOnly();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Rank-sum with average ranks over tie groups.
    double pos_rank_sum = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && scores[order[j]] == scores[order[i]]) ++j;
        const double avg_rank = 0.5 * static_cast<double>(i + 1 + j);  // 1-based
        for (std::size_t k = i; k < j; ++k)
            if (labels[order[k]]) pos_rank_sum += avg_rank;
        i = j;
    }
    const double u = pos_rank_sum - 0.5 * static_cast<double>(n_pos) *
                                        static_cast<double>(n_pos + 1);
    return 100.0 * u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

}  // namespace bp::metrics
