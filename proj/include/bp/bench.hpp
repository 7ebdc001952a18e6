#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bp/ensemble.hpp"
#include "bp/io.hpp"
#include "bp/synth.hpp"

namespace bp::bench {

struct ExperimentPlan {
    enum class Source { Preset, ScenarioFile, Directory };

    Source kind = Source::Preset;
    std::string source;                      // preset name, JSON path, or directory
    std::vector<std::string> methods{"bp", "ebp"};
    int replicates = 100;                    // simulation plans only
    std::uint64_t seed = 42;
    int workers = 1;
    PeelParams base;
    int ensembles = 50;
    bool standardize = false;
    std::string label_column = "outlier";    // CSV ingestion in directory runs
    std::string positive_token = "yes";
};

// Scenario for one replicate of a named preset. Fixed presets ignore the
// rng; "mixed" and "random" draw their configuration from it. Throws
// UnknownPreset.
synth::ScenarioConfig preset_scenario(const std::string& name, std::mt19937_64& rng);

// Scenario from a JSON config file (see README for the schema).
synth::ScenarioConfig scenario_from_json(const std::string& path);

// Per-replicate generation + detection, averaged into one row per method.
// Replicate r depends only on (plan.seed, r).
std::vector<io::MetricRow> run_simulation(const ExperimentPlan& plan);

// One row per (dataset group, method); versioned files share a group when
// their names agree up to the first "_v<digits>" delimiter. Failing files
// are skipped and reported in `failures`.
std::vector<io::MetricRow> run_benchmark(const ExperimentPlan& plan,
                                         std::vector<std::string>* failures = nullptr);

// Single detection dispatch used by the CLI and the harnesses.
DetectionResult detect(const DataMatrix& X, const std::string& method,
                       const ExperimentPlan& plan);

}  // namespace bp::bench
