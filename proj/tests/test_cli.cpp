#include <doctest.h>

#include <cmath>
#include <string>

#include "lyap/commands.hpp"
#include "lyap/csv.hpp"

using namespace lyap;

TEST_CASE("number formatting uses twelve significant digits") {
    CHECK(csv::format_number(0.0) == "0");
    CHECK(csv::format_number(0.05) == "0.05");
    CHECK(csv::format_number(-0.75) == "-0.75");
    CHECK(csv::format_number(std::log(3.0)) == "1.09861228867");
    CHECK(csv::format_number(1e-15) == "1e-15");
}

TEST_CASE("csv round-trip is byte exact") {
    csv::Table t;
    t.header = {"param", "value"};
    t.rows = {{"0.5", "1.09861228867"}, {"0.75", "-3.25e-06"}};
    const std::string text = t.to_string();
    CHECK(csv::parse(text).to_string() == text);
    CHECK(text == "param,value\n0.5,1.09861228867\n0.75,-3.25e-06\n");
}

TEST_CASE("bounds command reproduces the published row constants") {
    RunConfig config;
    config.nmax = 3;
    const CommandOutput out = run_bounds(config);
    CHECK(out.exit_code == kExitOk);
    CHECK(out.csv_text ==
          "n,log_c,lower,upper,width\n"
          "0,1.09861228867,0.156944612667,0.274653072167,0.1177084595\n"
          "1,2.7080502011,0.169253137569,0.27080502011,0.101551882541\n"
          "2,6.1737861039,0.171494058442,0.257241087663,0.0857470292209\n"
          "3,14.2399936719,0.177999920899,0.254285601284,0.0762856803852\n");

    RunConfig multiset = config;
    multiset.engine = Engine::multiset;
    CHECK(run_bounds(multiset).csv_text == out.csv_text);

    // emitted files survive a parse/re-emit cycle byte for byte
    CHECK(csv::parse(out.csv_text).to_string() == out.csv_text);
}

TEST_CASE("bounds command emits a partial table past engine capacity") {
    RunConfig config;
    config.nmax = 12;
    config.depth_cap = 8;
    const CommandOutput out = run_bounds(config);
    CHECK(out.exit_code == kExitComputation);
    CHECK(out.error.find("level 9") != std::string::npos);
    const csv::Table table = csv::parse(out.csv_text);
    CHECK(table.rows.size() == 9);  // levels 0..8 completed
}

TEST_CASE("lambda curve emits grid, estimate and reference columns") {
    RunConfig config;
    config.model = ModelKind::bernoulli;
    config.range_a = 0.0;
    config.range_b = 1.0;
    config.range_set = true;
    config.k = 0.25;
    config.n = 20'000;
    config.workers = 2;
    const CommandOutput out = run_lambda_curve(config);
    REQUIRE(out.exit_code == kExitOk);
    const csv::Table table = csv::parse(out.csv_text);
    CHECK(table.header == std::vector<std::string>{"param", "lambda_hat", "analytic_lower",
                                                   "analytic_upper"});
    REQUIRE(table.rows.size() == 5);
    CHECK(table.rows[0][0] == "0");
    CHECK(table.rows[0][1] == "0");  // endpoint lambda is exact
    CHECK(table.rows[4][0] == "1");
    CHECK(table.rows[4][1] == csv::format_number(std::log((1.0 + std::sqrt(5.0)) / 2.0)));

    RunConfig cauchy = config;
    cauchy.model = ModelKind::cauchy;
    cauchy.range_a = -1.0;
    cauchy.range_b = 1.0;
    cauchy.k = 0.5;
    const CommandOutput cout_ = run_lambda_curve(cauchy);
    REQUIRE(cout_.exit_code == kExitOk);
    const csv::Table ct = csv::parse(cout_.csv_text);
    CHECK(ct.header == std::vector<std::string>{"param", "lambda_hat", "lambda_exact"});
    CHECK(ct.rows[2][0] == "0");  // xi = 0 row snapped exactly
    CHECK(ct.rows[2][1] == "0");
    CHECK(ct.rows[2][2] == "0");
}

TEST_CASE("lambda curve rejects bad grids") {
    RunConfig config;
    config.range_a = 0.0;
    config.range_b = 1.0;
    config.range_set = true;
    config.k = 0.3;
    CHECK(run_lambda_curve(config).exit_code == kExitUsage);

    config.k = 0.25;
    config.range_b = 1.5;  // outside [0,1] for Bernoulli
    CHECK(run_lambda_curve(config).exit_code == kExitUsage);
}

TEST_CASE("variance command pins endpoint rows to literal zero") {
    RunConfig config;
    config.model = ModelKind::bernoulli;
    config.range_a = 0.0;
    config.range_b = 1.0;
    config.range_set = true;
    config.k = 0.5;
    config.n = 100;
    config.m = 32;
    config.workers = 2;
    const CommandOutput out = run_variance_curve(config);
    REQUIRE(out.exit_code == kExitOk);
    const csv::Table table = csv::parse(out.csv_text);
    REQUIRE(table.rows.size() == 3);
    CHECK(table.rows[0] == std::vector<std::string>{"0", "0", "0"});
    CHECK(table.rows[2] == std::vector<std::string>{"1", "0", "0"});
    CHECK(table.rows[1][1] != "0");

    RunConfig bad = config;
    bad.m = 1;
    CHECK(run_variance_curve(bad).exit_code == kExitUsage);
}

TEST_CASE("invariant command emits one positive draw per line") {
    RunConfig config;
    config.p = 0.5;
    config.count = 5000;
    config.depth = 64;
    config.workers = 2;
    config.format = OutputFormat::both;
    config.out = "ignored";  // svg content generated in-memory
    const CommandOutput out = run_invariant(config);
    REQUIRE(out.exit_code == kExitOk);
    const csv::Table table = csv::parse(out.csv_text);
    CHECK(table.header == std::vector<std::string>{"value"});
    REQUIRE(table.rows.size() == 5000);
    for (const auto& row : table.rows) CHECK(std::stod(row[0]) > 0.0);

    REQUIRE(out.svg_files.size() == 2);
    CHECK(out.svg_files[0].first == "_hist");
    CHECK(out.svg_files[1].first == "_cdf");
    for (const auto& [suffix, content] : out.svg_files) {
        CHECK(content.find("<svg") != std::string::npos);
        CHECK(content.find("</svg>") != std::string::npos);
    }

    RunConfig bad = config;
    bad.p = 1.0;
    CHECK(run_invariant(bad).exit_code == kExitUsage);
}

TEST_CASE("identical invocations produce identical bytes") {
    RunConfig config;
    config.model = ModelKind::cauchy;
    config.range_a = -1.0;
    config.range_b = 1.0;
    config.range_set = true;
    config.k = 0.5;
    config.n = 50'000;
    config.seed = 314159;

    const std::string first = run_lambda_curve(config).csv_text;
    const std::string second = run_lambda_curve(config).csv_text;
    CHECK(first == second);

    RunConfig more_workers = config;
    more_workers.workers = 8;
    CHECK(run_lambda_curve(more_workers).csv_text == first);

    RunConfig other_seed = config;
    other_seed.seed = 4;
    CHECK(run_lambda_curve(other_seed).csv_text != first);
}
