#pragma once

#include "quermass/inequalities.hpp"
#include "quermass/integral_geometry.hpp"
#include "quermass/sampling.hpp"

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace quermass {

struct CampaignOutputs {
    std::string report_jsonl;
    std::string summary_csv;
    std::string plot_csv;
};

/// Randomized verification run: per dimension, bodies_per_dim bodies drawn by
/// cycling through the family templates, the full inequality battery on each,
/// a Kubota check where an exact projected route exists, and the symbolic
/// identity suites.
struct CampaignConfig {
    std::vector<int> dims = {2, 3, 4};
    int bodies_per_dim = 100;
    std::vector<BodySpec> families;  // dim and seed are overridden per body
    long long mc_samples = 100000;
    int rotations = 200;
    std::uint64_t base_seed = 1;
    TolPolicy tol_policy;
    CampaignOutputs outputs;
};

struct KubotaRow {
    std::string body_id;
    KubotaResult result;
};

struct CampaignResult {
    std::vector<InequalityReport> reports;  // sorted by (dim, body_id, id, i, j, k)
    std::vector<KubotaRow> kubota_rows;
    bool symbolic_pass = false;
    long long holds = 0, equality = 0, violated = 0;
    int kubota_failures = 0;
    std::string plot_body_id;
    std::vector<McFitPoint> plot_points;

    bool all_ok() const { return violated == 0 && kubota_failures == 0 && symbolic_pass; }
};

CampaignResult run_campaign(const CampaignConfig& config);

/// Runs the generating-function, collapse and certificate suites.
bool run_symbolic_suite(int n_max = 64, int d_max = 8);

void write_report_jsonl(const std::string& path, const CampaignResult& result);
void write_summary_csv(const std::string& path, const CampaignResult& result);
void write_plot_csv(const std::string& path, const CampaignResult& result);

void to_json(nlohmann::json& j, const CampaignConfig& config);
void from_json(const nlohmann::json& j, CampaignConfig& config);

}  // namespace quermass
