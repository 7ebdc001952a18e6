#include "bp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <thread>

#include <json.hpp>

#include "bp/errors.hpp"
#include "bp/metrics.hpp"
#include "bp/rng.hpp"

namespace bp::bench {

namespace {

using synth::Distribution;
using synth::ModeSpec;
using synth::ScenarioConfig;

Distribution parse_distribution(const std::string& token) {
    if (token == "n" || token == "normal") return Distribution::Normal;
    if (token == "t" || token == "studentt") return Distribution::StudentT;
    if (token == "ln" || token == "lognormal") return Distribution::Lognormal;
    if (token == "w" || token == "wishart") return Distribution::Wishart;
    throw UnknownPreset("unknown distribution token '" + token + "'");
}

ModeSpec make_mode(Distribution dist, int p, double mean, double rho, int count) {
    ModeSpec mode;
    mode.distribution = dist;
    mode.mean = Eigen::VectorXd::Constant(p, mean);
    mode.rho = rho;
    mode.count = count;
    return mode;
}

// Paper-grid scenario: n = 50 total, p = 100, optionally 10% outliers,
// unimodal mean 0 or bimodal means 0 and 5.
ScenarioConfig grid_scenario(Distribution dist, bool bimodal, double rho,
                             bool with_outliers) {
    ScenarioConfig config;
    config.p = 100;
    config.outlier_count = with_outliers ? 5 : 0;
    config.outlier_halfwidth = dist == Distribution::Lognormal ? 20.0 : 10.0;
    const int inliers = 50 - config.outlier_count;
    if (bimodal) {
        const int first = (inliers + 1) / 2;
        config.modes.push_back(make_mode(dist, config.p, 0.0, rho, first));
        config.modes.push_back(make_mode(dist, config.p, 5.0, rho, inliers - first));
    } else {
        config.modes.push_back(make_mode(dist, config.p, 0.0, rho, inliers));
    }
    return config;
}

ScenarioConfig mixed_scenario(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist_draw(0, 3);
    std::uniform_int_distribution<int> cor_draw(0, 2);
    const double cors[] = {0.0, 0.5, 0.75};
    ScenarioConfig config;
    config.p = 100;
    config.outlier_count = 5;
    const double rho = cors[cor_draw(rng)];
    const auto d1 = static_cast<Distribution>(dist_draw(rng));
    const auto d2 = static_cast<Distribution>(dist_draw(rng));
    config.outlier_halfwidth =
        (d1 == Distribution::Lognormal || d2 == Distribution::Lognormal) ? 20.0 : 10.0;
    config.modes.push_back(make_mode(d1, config.p, 0.0, rho, 23));
    config.modes.push_back(make_mode(d2, config.p, 5.0, rho, 22));
    return config;
}

}  // namespace

synth::ScenarioConfig preset_scenario(const std::string& name, std::mt19937_64& rng) {
    if (name == "figure1") {
        ScenarioConfig config;
        config.p = 2;
        config.outlier_count = 10;
        config.outlier_halfwidth = 10.0;
        config.modes.push_back(
            make_mode(Distribution::StudentT, config.p, 0.0, 0.0, 100));
        return config;
    }
    if (name == "random") return synth::random_scenario(rng);
    if (name == "mixed" || name == "table2-mixed") return mixed_scenario(rng);

    // table{1,2}-<dist><modes>-cor<rho>, e.g. "table1-n0-cor0",
    // "table2-t0,5-cor0.5". Table 1 has no outliers, table 2 has 10%.
    bool with_outliers;
    if (name.rfind("table1-", 0) == 0)
        with_outliers = false;
    else if (name.rfind("table2-", 0) == 0)
        with_outliers = true;
    else
        throw UnknownPreset("unknown preset '" + name + "'");

    const std::string body = name.substr(7);
    const std::size_t dash = body.rfind("-cor");
    if (dash == std::string::npos)
        throw UnknownPreset("preset '" + name + "' lacks a -cor suffix");
    const std::string mode_part = body.substr(0, dash);
    const std::string cor_part = body.substr(dash + 4);

    std::size_t split = 0;
    while (split < mode_part.size() && std::isalpha(static_cast<unsigned char>(mode_part[split])))
        ++split;
    const Distribution dist = parse_distribution(mode_part.substr(0, split));
    const std::string modes = mode_part.substr(split);
    bool bimodal;
    if (modes == "0")
        bimodal = false;
    else if (modes == "0,5" || modes == "0-5" || modes == "05")
        bimodal = true;
    else
        throw UnknownPreset("unknown mode spec '" + modes + "' in '" + name + "'");

    double rho;
    if (cor_part == "0")
        rho = 0.0;
    else if (cor_part == "0.5" || cor_part == "05" || cor_part == "50")
        rho = 0.5;
    else if (cor_part == "0.75" || cor_part == "075" || cor_part == "75")
        rho = 0.75;
    else
        throw UnknownPreset("unknown correlation '" + cor_part + "' in '" + name + "'");

    return grid_scenario(dist, bimodal, rho, with_outliers);
}

synth::ScenarioConfig scenario_from_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("bad scenario JSON: ") + e.what());
    }
    ScenarioConfig config;
    config.p = doc.at("p").get<int>();
    config.outlier_count = doc.value("outlier_count", 0);
    config.outlier_halfwidth = doc.value("outlier_halfwidth", 10.0);
    for (const auto& m : doc.at("modes")) {
        ModeSpec mode;
        mode.distribution = parse_distribution(m.value("distribution", "normal"));
        mode.rho = m.value("rho", 0.0);
        mode.count = m.at("count").get<int>();
        if (m.at("mean").is_array()) {
            const auto vals = m.at("mean").get<std::vector<double>>();
            if (static_cast<int>(vals.size()) != config.p)
                throw InvalidSpec("mean length does not match p");
            mode.mean = Eigen::Map<const Eigen::VectorXd>(vals.data(), vals.size());
        } else {
            mode.mean = Eigen::VectorXd::Constant(config.p, m.at("mean").get<double>());
        }
        config.modes.push_back(std::move(mode));
    }
    return config;
}

DetectionResult detect(const DataMatrix& X, const std::string& method,
                       const ExperimentPlan& plan) {
    const DataMatrix input = plan.standardize ? standardize(X) : X;
    if (method == "bp") return bp_detect(input, plan.base);
    if (method == "ebp") {
        EnsembleParams params;
        params.base = plan.base;
        params.c = plan.ensembles;
        params.seed = plan.seed;
        params.workers = plan.workers;
        return ebp_detect(input, params);
    }
    throw UnknownPreset("unknown method '" + method + "'");
}

namespace {

struct Accumulator {
    double cc_sum = 0.0, dr_sum = 0.0, prec_sum = 0.0, auc_sum = 0.0, secs_sum = 0.0;
    long cc_n = 0, dr_n = 0, prec_n = 0, auc_n = 0, secs_n = 0;

    void add(const metrics::Confusion& conf, const Eigen::VectorXd& scores,
             const std::vector<bool>& labels, double seconds, bool has_outliers) {
        cc_sum += metrics::correct_classification(conf);
        ++cc_n;
        secs_sum += seconds;
        ++secs_n;
        if (has_outliers) {
            if (auto dr = metrics::detection_rate(conf)) {
                dr_sum += *dr;
                ++dr_n;
            }
            if (auto prec = metrics::precision(conf)) {
                prec_sum += *prec;
                ++prec_n;
            }
            auc_sum += metrics::roc_auc(scores, labels);
            ++auc_n;
        }
    }

    io::MetricRow row(const std::string& dataset, const std::string& method) const {
        io::MetricRow r;
        r.dataset = dataset;
        r.method = method;
        if (cc_n > 0) r.cc = cc_sum / cc_n;
        if (dr_n > 0) r.dr = dr_sum / dr_n;
        if (prec_n > 0) r.prec = prec_sum / prec_n;
        if (auc_n > 0) r.auc = auc_sum / auc_n;
        r.seconds = secs_n > 0 ? secs_sum / secs_n : 0.0;
        return r;
    }
};

struct ReplicateOutcome {
    metrics::Confusion conf;
    Eigen::VectorXd scores;
    std::vector<bool> labels;
    double seconds = 0.0;
    bool has_outliers = false;
};

}  // namespace

std::vector<io::MetricRow> run_simulation(const ExperimentPlan& plan) {
    if (plan.replicates < 1) throw InvalidSpec("replicates must be at least 1");

    const int R = plan.replicates;
    const int M = static_cast<int>(plan.methods.size());
    std::vector<ReplicateOutcome> outcomes(static_cast<std::size_t>(R) * M);

    auto run_replicate = [&](int r) {
        std::mt19937_64 rng = make_rng(plan.seed, static_cast<std::uint64_t>(r));
        ScenarioConfig config;
        if (plan.kind == ExperimentPlan::Source::ScenarioFile)
            config = scenario_from_json(plan.source);
        else
            config = preset_scenario(plan.source, rng);
        config.seed = splitmix64(plan.seed ^ splitmix64(static_cast<std::uint64_t>(r)));
        const LabeledDataset ds = synth::inject_outliers(config, rng);

        for (int m = 0; m < M; ++m) {
            ExperimentPlan local = plan;
            local.seed = splitmix64(config.seed + static_cast<std::uint64_t>(m));
            const DetectionResult result = detect(ds.data, plan.methods[m], local);
            ReplicateOutcome& out = outcomes[static_cast<std::size_t>(r) * M + m];
            out.conf = metrics::confusion(result.flags, ds.labels);
            out.scores = result.scores;
            out.labels = ds.labels;
            out.seconds = result.elapsed_seconds;
            out.has_outliers = config.outlier_count > 0;
        }
    };

    if (plan.workers > 1) {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        const int n_threads = std::min(plan.workers, R);
        for (int t = 0; t < n_threads; ++t)
            pool.emplace_back([&] {
                for (int r = next.fetch_add(1); r < R; r = next.fetch_add(1))
                    run_replicate(r);
            });
        for (auto& th : pool) th.join();
    } else {
        for (int r = 0; r < R; ++r) run_replicate(r);
    }

    std::vector<io::MetricRow> rows;
    for (int m = 0; m < M; ++m) {
        Accumulator acc;
        for (int r = 0; r < R; ++r) {
            const ReplicateOutcome& out = outcomes[static_cast<std::size_t>(r) * M + m];
            acc.add(out.conf, out.scores, out.labels, out.seconds, out.has_outliers);
        }
        rows.push_back(acc.row(plan.source, plan.methods[m]));
    }
    return rows;
}

namespace {

std::string group_key(const std::string& stem) {
    // "Parkinson_withoutdupl_norm_05_v01" -> "Parkinson_withoutdupl_norm_05"
    for (std::size_t pos = 0; (pos = stem.find("_v", pos)) != std::string::npos; ++pos)
        if (pos + 2 < stem.size() && std::isdigit(static_cast<unsigned char>(stem[pos + 2])))
            return stem.substr(0, pos);
    return stem;
}

LabeledDataset load_file(const std::filesystem::path& path, const ExperimentPlan& plan) {
    const std::string ext = path.extension().string();
    if (ext == ".arff") return io::read_arff(path.string());
    if (ext == ".csv")
        return io::read_csv(path.string(), plan.label_column, plan.positive_token);
    throw IoFailure("unsupported file type: " + path.string());
}

}  // namespace

std::vector<io::MetricRow> run_benchmark(const ExperimentPlan& plan,
                                         std::vector<std::string>* failures) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(plan.source)) {
        if (!entry.is_regular_file()) continue;
        const std::string ext = entry.path().extension().string();
        if (ext == ".arff" || ext == ".csv") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw IoFailure("no .arff or .csv files in " + plan.source);

    std::map<std::pair<std::string, std::string>, Accumulator> groups;
    for (const auto& file : files) {
        LabeledDataset ds;
        try {
            ds = load_file(file, plan);
        } catch (const std::exception& e) {
            if (failures)
                failures->push_back(file.filename().string() + ": " + e.what());
            continue;
        }
        const std::string key = group_key(file.stem().string());
        const bool has_outliers =
            std::find(ds.labels.begin(), ds.labels.end(), true) != ds.labels.end();
        for (const std::string& method : plan.methods) {
            try {
                const DetectionResult result = detect(ds.data, method, plan);
                const auto conf = metrics::confusion(result.flags, ds.labels);
                groups[{key, method}].add(conf, result.scores, ds.labels,
                                          result.elapsed_seconds, has_outliers);
            } catch (const std::exception& e) {
                if (failures)
                    failures->push_back(file.filename().string() + " [" + method +
                                        "]: " + e.what());
            }
        }
    }

    std::vector<io::MetricRow> rows;
    for (const auto& [key, acc] : groups) rows.push_back(acc.row(key.first, key.second));
    return rows;
}

}  // namespace bp::bench
