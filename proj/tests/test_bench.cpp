#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "bp/bench.hpp"
#include "bp/errors.hpp"

using namespace bp;
using bench::ExperimentPlan;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("bp_bench_test_" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_arff_version(const std::string& path, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::ofstream out(path);
    out << "@relation toy\n@attribute a numeric\n@attribute b numeric\n"
           "@attribute outlier {yes,no}\n@data\n";
    for (int i = 0; i < 18; ++i)
        out << normal(rng) << "," << normal(rng) << ",no\n";
    out << "8.0,8.0,yes\n9.0,-9.0,yes\n";
}

}  // namespace

TEST_CASE("preset names resolve and reject") {
    std::mt19937_64 rng(0);
    const auto base = bench::preset_scenario("table1-n0-cor0", rng);
    CHECK(base.p == 100);
    CHECK(base.outlier_count == 0);
    CHECK(base.modes.size() == 1);
    CHECK(base.total_n() == 50);

    const auto out10 = bench::preset_scenario("table2-t0,5-cor0.5", rng);
    CHECK(out10.outlier_count == 5);
    CHECK(out10.modes.size() == 2);
    CHECK(out10.modes[0].rho == 0.5);
    CHECK(out10.modes[1].mean(0) == 5.0);
    CHECK(out10.total_n() == 50);

    const auto fig = bench::preset_scenario("figure1", rng);
    CHECK(fig.p == 2);
    CHECK(fig.total_n() == 110);

    CHECK_THROWS_AS(bench::preset_scenario("table9-zzz", rng), UnknownPreset);
    CHECK_THROWS_AS(bench::preset_scenario("table1-q0-cor0", rng), UnknownPreset);
}

TEST_CASE("simulation runs are deterministic and worker-independent") {
    ExperimentPlan plan;
    plan.source = "figure1";
    plan.methods = {"bp"};
    plan.replicates = 3;
    plan.seed = 7;
    const auto a = bench::run_simulation(plan);
    const auto b = bench::run_simulation(plan);
    plan.workers = 3;
    const auto c = bench::run_simulation(plan);

    REQUIRE(a.size() == 1);
    CHECK(a[0].dataset == "figure1");
    CHECK(a[0].method == "bp");
    CHECK(*a[0].cc == *b[0].cc);
    CHECK(*a[0].cc == *c[0].cc);
    CHECK(*a[0].dr == *c[0].dr);
    CHECK(*a[0].auc == *c[0].auc);
}

TEST_CASE("no-outlier presets omit DR/PREC/AUC") {
    ExperimentPlan plan;
    plan.source = "table1-n0-cor0";
    plan.methods = {"bp"};
    plan.replicates = 2;
    const auto rows = bench::run_simulation(plan);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].cc.has_value());
    CHECK(!rows[0].dr.has_value());
    CHECK(!rows[0].prec.has_value());
    CHECK(!rows[0].auc.has_value());
}

TEST_CASE("benchmark groups versioned files and skips corrupt ones") {
    TempDir dir;
    write_arff_version(dir.file("toy_norm_10_v01.arff"), 1);
    write_arff_version(dir.file("toy_norm_10_v02.arff"), 2);
    write_arff_version(dir.file("toy_norm_10_v03.arff"), 3);
    std::ofstream(dir.file("broken_v01.arff")) << "@attribute x string\n@data\n";

    ExperimentPlan plan;
    plan.kind = ExperimentPlan::Source::Directory;
    plan.source = dir.path.string();
    plan.methods = {"bp"};
    std::vector<std::string> failures;
    const auto rows = bench::run_benchmark(plan, &failures);

    REQUIRE(rows.size() == 1);  // three versions aggregated into one group
    CHECK(rows[0].dataset == "toy_norm_10");
    CHECK(rows[0].cc.has_value());
    CHECK(rows[0].auc.has_value());
    CHECK(rows[0].seconds > 0.0);
    REQUIRE(failures.size() == 1);
    CHECK(failures[0].find("broken_v01.arff") != std::string::npos);
}

TEST_CASE("empty directory is an error") {
    TempDir dir;
    ExperimentPlan plan;
    plan.kind = ExperimentPlan::Source::Directory;
    plan.source = dir.path.string();
    CHECK_THROWS_AS(bench::run_benchmark(plan), IoFailure);
}
