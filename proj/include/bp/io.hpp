#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bp/dataset.hpp"
#include "bp/peel.hpp"

namespace bp::io {

// CSV with a header row. The named label column is mapped to booleans by
// positive_token match and excluded from the features.
LabeledDataset read_csv(const std::string& path, const std::string& label_column,
                        const std::string& positive_token);

// All columns as features, no labels.
DataMatrix read_csv_features(const std::string& path);

// Campos-style ARFF subset: numeric attributes plus a nominal outlier
// attribute with values {yes,no}; an "id" attribute is dropped. When
// require_outlier is false a file without the outlier attribute loads as
// unlabeled data.
LabeledDataset read_arff(const std::string& path, bool require_outlier = true);

// CSV `index,score,flag`; scores rendered with 17 significant digits.
void write_scores(const DetectionResult& result, const std::string& path);

// Reads a write_scores file back (round-trip checks, score ingestion).
DetectionResult read_scores(const std::string& path);

struct MetricRow {
    std::string dataset;
    std::string method;
    std::optional<double> cc, dr, prec, auc;
    double seconds = 0.0;
};

// CSV `dataset,method,cc,dr,prec,auc,seconds`; absent metrics are empty
// fields, seconds has 3 decimals.
void write_metrics(const std::vector<MetricRow>& rows, const std::string& path);

}  // namespace bp::io
