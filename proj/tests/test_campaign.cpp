#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quermass/campaign.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace quermass;

namespace {

CampaignConfig small_config() {
    CampaignConfig config;
    config.dims = {2, 3};
    config.bodies_per_dim = 4;
    BodySpec random;
    random.family = BodyFamily::random_core;
    random.core_vertex_count = 6;
    BodySpec flat;
    flat.family = BodyFamily::flat_core;
    flat.core_dim = 1;
    flat.core_vertex_count = 4;
    config.families = {random, flat};
    config.mc_samples = 10000;
    config.rotations = 40;
    config.base_seed = 2024;
    return config;
}

}  // namespace

TEST_CASE("campaign runs clean on exact dimensions") {
    const CampaignResult result = run_campaign(small_config());
    CHECK(result.violated == 0);
    CHECK(result.kubota_failures == 0);
    CHECK(result.symbolic_pass);
    CHECK(result.all_ok());
    CHECK(result.reports.size() > 0);
    CHECK(result.holds > 0);
    CHECK(result.equality > 0);  // the flat-core bodies hit the sausage equality case

    // d=3 bodies get a Kubota row, d=2 bodies do not
    CHECK(result.kubota_rows.size() == 4);

    // reports are sorted
    for (std::size_t i = 1; i < result.reports.size(); ++i) {
        const auto& a = result.reports[i - 1];
        const auto& b = result.reports[i];
        CHECK(std::tie(a.body_id, a.inequality_id, a.i, a.j, a.k) <=
              std::tie(b.body_id, b.inequality_id, b.i, b.j, b.k));
    }
}

TEST_CASE("campaign is deterministic, including across worker counts") {
    setenv("QMC_THREADS", "1", 1);
    const CampaignResult a = run_campaign(small_config());
    setenv("QMC_THREADS", "4", 1);
    const CampaignResult b = run_campaign(small_config());
    unsetenv("QMC_THREADS");
    const CampaignResult c = run_campaign(small_config());
    REQUIRE(a.reports.size() == b.reports.size());
    REQUIRE(a.reports.size() == c.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i) {
        CHECK(a.reports[i].body_id == b.reports[i].body_id);
        CHECK(a.reports[i].lhs == b.reports[i].lhs);
        CHECK(a.reports[i].tol == b.reports[i].tol);
        CHECK(a.reports[i].lhs == c.reports[i].lhs);
    }
    REQUIRE(a.kubota_rows.size() == b.kubota_rows.size());
    for (std::size_t i = 0; i < a.kubota_rows.size(); ++i) {
        CHECK(a.kubota_rows[i].result.lhs == b.kubota_rows[i].result.lhs);
        CHECK(a.kubota_rows[i].result.stderr_ == b.kubota_rows[i].result.stderr_);
    }
}

TEST_CASE("campaign covers the monte-carlo route in dimension 4") {
    CampaignConfig config = small_config();
    config.dims = {4};
    config.bodies_per_dim = 2;
    config.rotations = 30;
    const CampaignResult result = run_campaign(config);
    CHECK(result.violated == 0);
    CHECK_FALSE(result.plot_body_id.empty());
    CHECK(result.plot_points.size() == 7);  // dim+3 grid points
    for (const auto& p : result.plot_points) {
        CHECK(p.estimated > 0);
        CHECK(p.fitted > 0);
    }
    // 4d kubota projects to 3d
    REQUIRE(result.kubota_rows.size() == 2);
    CHECK(result.kubota_rows[0].result.k == 2);
    CHECK(result.kubota_failures == 0);
}

TEST_CASE("campaign writes its report files") {
    CampaignConfig config = small_config();
    config.dims = {2};
    config.bodies_per_dim = 2;
    config.outputs.report_jsonl = "campaign_test_report.jsonl";
    config.outputs.summary_csv = "campaign_test_summary.csv";
    config.outputs.plot_csv = "campaign_test_plot.csv";
    const CampaignResult result = run_campaign(config);
    write_report_jsonl(config.outputs.report_jsonl, result);
    write_summary_csv(config.outputs.summary_csv, result);
    write_plot_csv(config.outputs.plot_csv, result);

    std::ifstream in(config.outputs.report_jsonl);
    REQUIRE(in.good());
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto j = nlohmann::json::parse(line);  // every line round-trips
        CHECK(j.contains("inequality_id"));
        CHECK(j.contains("verdict"));
        CHECK(j.contains("body_id"));
        ++lines;
    }
    CHECK(lines == result.reports.size());

    std::ifstream csv(config.outputs.summary_csv);
    REQUIRE(csv.good());
    std::getline(csv, line);
    CHECK(line == report_csv_header());

    std::remove(config.outputs.report_jsonl.c_str());
    std::remove(config.outputs.summary_csv.c_str());
    std::remove(config.outputs.plot_csv.c_str());
}

TEST_CASE("campaign config json") {
    CampaignConfig config = small_config();
    config.outputs.report_jsonl = "r.jsonl";
    const nlohmann::json j = config;
    const CampaignConfig back = j.get<CampaignConfig>();
    CHECK(back.dims == config.dims);
    CHECK(back.bodies_per_dim == config.bodies_per_dim);
    CHECK(back.families.size() == config.families.size());
    CHECK(back.mc_samples == config.mc_samples);
    CHECK(back.base_seed == config.base_seed);
    CHECK(back.outputs.report_jsonl == "r.jsonl");

    nlohmann::json bad = j;
    bad["mc_samples"] = 10;
    CHECK_THROWS_AS(bad.get<CampaignConfig>(), std::invalid_argument);
    bad = j;
    bad["bodies_per_dim"] = 0;
    CHECK_THROWS_AS(bad.get<CampaignConfig>(), std::invalid_argument);
}

TEST_CASE("symbolic suite passes") { CHECK(run_symbolic_suite(32, 6)); }
