#pragma once

#include <Eigen/Dense>
#include <vector>

#include "bp/dataset.hpp"
#include "bp/ocsvm.hpp"

namespace bp {

struct PeelParams {
    double nu = 0.01;   // the paper's q
    int n_peel = 2;     // stop once this many observations survive
    double kkt_tolerance = 1e-6;
    double sv_tolerance = 1e-7;
    long max_iterations = 0;
};

// Bookkeeping from the peeling loop. Column j of decision_matrix holds the
// signed distance of every original row to boundary j, including rows that
// were removed before boundary j was fitted.
struct PeelTrace {
    std::vector<int> depths;         // 1-based peel index that removed row i;
                                     // survivors get peel_count
    Eigen::MatrixXd decision_matrix; // n x peel_count
    int peel_count = 0;
};

struct DetectionResult {
    Eigen::VectorXd scores;   // KDS or EKDS
    double threshold = 0.0;   // Tukey fence h
    std::vector<bool> flags;  // scores[i] > threshold, exactly
    int peel_count = 0;       // 0 for ensemble results
    double elapsed_seconds = 0.0;
};

// Iteratively fit an OCSVM on the survivors (bandwidth = active column
// count), score all original rows, and remove the support vectors, until
// n_peel or fewer observations remain.
PeelTrace boundary_peel(const DataMatrix& X, const PeelParams& params);

// KDS_i = (peel_count / depth_i) * row-mean of the decision matrix.
Eigen::VectorXd kds_scores(const PeelTrace& trace);

// Q3 + 1.5 * IQR with type-7 (linear interpolation) quartiles.
double tukey_threshold(const Eigen::VectorXd& scores);

DetectionResult bp_detect(const DataMatrix& X, const PeelParams& params);

}  // namespace bp
