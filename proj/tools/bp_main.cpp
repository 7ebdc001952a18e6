#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "bp/bench.hpp"
#include "bp/errors.hpp"
#include "bp/io.hpp"
#include "bp/metrics.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct Options {
    std::string input, output, dir;
    std::string method = "bp";
    std::vector<std::string> methods{"bp", "ebp"};
    std::string format = "auto";
    std::string label_column = "outlier";
    std::string positive_token = "yes";
    std::string scenario, scenario_file;
    double nu = 0.01;
    int n_peel = 2;
    int ensembles = 50;
    std::uint64_t seed = 42;
    int replicates = 100;
    int workers = 1;
    bool standardize = false;
};

bp::bench::ExperimentPlan make_plan(const Options& opt) {
    bp::bench::ExperimentPlan plan;
    plan.base.nu = opt.nu;
    plan.base.n_peel = opt.n_peel;
    plan.ensembles = opt.ensembles;
    plan.seed = opt.seed;
    plan.workers = opt.workers;
    plan.standardize = opt.standardize;
    plan.label_column = opt.label_column;
    plan.positive_token = opt.positive_token;
    return plan;
}

void banner(const std::string& cmd, const Options& opt) {
    std::cout << "bp " << cmd << " | seed=" << opt.seed << " nu=" << opt.nu
              << " n_peel=" << opt.n_peel << " ensembles=" << opt.ensembles
              << " workers=" << opt.workers
              << " standardize=" << (opt.standardize ? "on" : "off");
    if (!opt.input.empty()) std::cout << " input=" << opt.input;
    if (!opt.dir.empty()) std::cout << " dir=" << opt.dir;
    if (!opt.scenario.empty())
        std::cout << " scenario=" << opt.scenario << " replicates=" << opt.replicates;
    if (!opt.scenario_file.empty())
        std::cout << " scenario-file=" << opt.scenario_file
                  << " replicates=" << opt.replicates;
    if (!opt.output.empty()) std::cout << " output=" << opt.output;
    std::cout << "\n";
}

bp::LabeledDataset load_input(const Options& opt) {
    std::string format = opt.format;
    if (format == "auto") {
        const std::string ext = std::filesystem::path(opt.input).extension().string();
        format = ext == ".arff" ? "arff" : "csv";
    }
    if (format == "arff") return bp::io::read_arff(opt.input, /*require_outlier=*/false);
    try {
        return bp::io::read_csv(opt.input, opt.label_column, opt.positive_token);
    } catch (const bp::MissingLabelColumn&) {
        return bp::LabeledDataset{bp::io::read_csv_features(opt.input), {}};
    }
}

int cmd_detect(const Options& opt) {
    banner("detect", opt);
    const bp::LabeledDataset ds = load_input(opt);
    const auto plan = make_plan(opt);
    const bp::DetectionResult result = bp::bench::detect(ds.data, opt.method, plan);
    bp::io::write_scores(result, opt.output);

    long flagged = 0;
    for (bool f : result.flags) flagged += f ? 1 : 0;
    std::cout << "n=" << ds.data.n() << " p=" << ds.data.p() << " flagged=" << flagged
              << " threshold=" << result.threshold
              << " seconds=" << result.elapsed_seconds << "\n";

    if (ds.labeled()) {
        const auto conf = bp::metrics::confusion(result.flags, ds.labels);
        std::cout << "CC=" << bp::metrics::correct_classification(conf);
        if (auto dr = bp::metrics::detection_rate(conf)) std::cout << " DR=" << *dr;
        if (auto prec = bp::metrics::precision(conf)) std::cout << " PREC=" << *prec;
        bool pos = false, neg = false;
        for (bool b : ds.labels) (b ? pos : neg) = true;
        if (pos && neg)
            std::cout << " AUC=" << bp::metrics::roc_auc(result.scores, ds.labels);
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_simulate(const Options& opt) {
    banner("simulate", opt);
    auto plan = make_plan(opt);
    plan.replicates = opt.replicates;
    plan.methods = opt.methods;
    if (!opt.scenario_file.empty()) {
        plan.kind = bp::bench::ExperimentPlan::Source::ScenarioFile;
        plan.source = opt.scenario_file;
    } else {
        plan.kind = bp::bench::ExperimentPlan::Source::Preset;
        plan.source = opt.scenario;
        // Validate the preset name up front so typos exit before any work.
        std::mt19937_64 probe(0);
        bp::bench::preset_scenario(opt.scenario, probe);
    }
    const auto rows = bp::bench::run_simulation(plan);
    if (!opt.output.empty()) bp::io::write_metrics(rows, opt.output);
    for (const auto& r : rows) {
        std::cout << r.dataset << " " << r.method << ": CC=" << (r.cc ? *r.cc : 0.0);
        if (r.dr) std::cout << " DR=" << *r.dr;
        if (r.prec) std::cout << " PREC=" << *r.prec;
        if (r.auc) std::cout << " AUC=" << *r.auc;
        std::cout << " seconds=" << r.seconds << "\n";
    }
    return kExitOk;
}

int cmd_bench(const Options& opt) {
    banner("bench", opt);
    auto plan = make_plan(opt);
    plan.kind = bp::bench::ExperimentPlan::Source::Directory;
    plan.source = opt.dir;
    plan.methods = opt.methods;
    std::vector<std::string> failures;
    const auto rows = bp::bench::run_benchmark(plan, &failures);
    if (!opt.output.empty()) bp::io::write_metrics(rows, opt.output);
    for (const auto& r : rows) {
        std::cout << r.dataset << " " << r.method << ": CC=" << (r.cc ? *r.cc : 0.0);
        if (r.dr) std::cout << " DR=" << *r.dr;
        if (r.prec) std::cout << " PREC=" << *r.prec;
        if (r.auc) std::cout << " AUC=" << *r.auc;
        std::cout << " seconds=" << r.seconds << "\n";
    }
    if (!failures.empty()) {
        std::cout << "skipped " << failures.size() << " file(s):\n";
        for (const auto& f : failures) std::cout << "  " << f << "\n";
    }
    return kExitOk;
}

int classify_error(const std::exception& e) {
    if (dynamic_cast<const bp::IoFailure*>(&e) || dynamic_cast<const bp::ParseError*>(&e) ||
        dynamic_cast<const bp::MissingLabelColumn*>(&e) ||
        dynamic_cast<const bp::MissingOutlierAttribute*>(&e) ||
        dynamic_cast<const bp::UnsupportedAttributeKind*>(&e) ||
        dynamic_cast<const bp::UnknownPreset*>(&e) ||
        dynamic_cast<const bp::NonNumericFeature*>(&e) ||
        dynamic_cast<const bp::NonFiniteEntry*>(&e) ||
        dynamic_cast<const bp::EmptyMatrix*>(&e) ||
        dynamic_cast<const bp::TooFewRows*>(&e))
        return kExitInput;
    return kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    if (const char* env_seed = std::getenv("BP_SEED")) opt.seed = std::strtoull(env_seed, nullptr, 10);

    CLI::App app{"Boundary peeling outlier detection toolkit"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--nu", opt.nu, "OCSVM nu (default 0.01)");
        sub->add_option("--n-peel", opt.n_peel, "stop peeling at this many survivors");
        sub->add_option("--ensembles", opt.ensembles, "ensemble size for ebp");
        sub->add_option("--seed", opt.seed, "RNG seed (env BP_SEED overrides the default)");
        sub->add_option("--workers", opt.workers, "worker threads");
        sub->add_flag("--standardize", opt.standardize, "scale columns to unit variance first");
    };

    CLI::App* detect = app.add_subcommand("detect", "score one dataset");
    detect->add_option("--input", opt.input, "input data file")->required();
    detect->add_option("--output", opt.output, "score CSV path")->required();
    detect->add_option("--method", opt.method, "bp or ebp")
        ->check(CLI::IsMember({"bp", "ebp"}));
    detect->add_option("--format", opt.format, "csv, arff, or auto")
        ->check(CLI::IsMember({"csv", "arff", "auto"}));
    detect->add_option("--label-column", opt.label_column, "CSV label column name");
    detect->add_option("--positive-token", opt.positive_token, "label value meaning outlier");
    add_common(detect);

    CLI::App* simulate = app.add_subcommand("simulate", "run a synthetic scenario");
    simulate->add_option("--scenario", opt.scenario,
                         "preset name (e.g. table1-n0-cor0, figure1, mixed, random)");
    simulate->add_option("--scenario-file", opt.scenario_file, "scenario JSON path");
    simulate->add_option("--replicates", opt.replicates, "replicate count");
    simulate->add_option("--methods", opt.methods, "methods to run")->delimiter(',');
    simulate->add_option("--output", opt.output, "metrics CSV path");
    add_common(simulate);

    CLI::App* bench = app.add_subcommand("bench", "run a benchmark directory");
    bench->add_option("--dir", opt.dir, "directory of ARFF/CSV datasets")->required();
    bench->add_option("--methods", opt.methods, "methods to run")->delimiter(',');
    bench->add_option("--output", opt.output, "metrics CSV path");
    bench->add_option("--label-column", opt.label_column, "CSV label column name");
    bench->add_option("--positive-token", opt.positive_token, "label value meaning outlier");
    add_common(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (app.got_subcommand(detect)) return cmd_detect(opt);
        if (app.got_subcommand(simulate)) {
            if (opt.scenario.empty() && opt.scenario_file.empty()) {
                std::cerr << "simulate needs --scenario or --scenario-file\n";
                return kExitInput;
            }
            return cmd_simulate(opt);
        }
        return cmd_bench(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify_error(e);
    }
}
