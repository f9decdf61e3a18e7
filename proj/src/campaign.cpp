#include "quermass/campaign.hpp"

#include "quermass/intpoly.hpp"
#include "quermass/parallel.hpp"
#include "quermass/rng.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace quermass {

namespace {

struct BodyTask {
    int dim;
    int index;
    BodySpec spec;
    std::string body_id;
};

struct BodyOutcome {
    std::vector<InequalityReport> reports;
    std::optional<KubotaRow> kubota;
    std::vector<McFitPoint> fit_points;  // non-empty only on the MC route
};

std::string make_body_id(int dim, int index, const BodySpec& spec) {
    std::ostringstream os;
    os << "d" << dim << "_b";
    if (index < 100) os << (index < 10 ? "00" : "0");
    os << index << "_" << family_name(spec.family);
    return os.str();
}

BodyOutcome evaluate_body(const BodyTask& task, const CampaignConfig& config) {
    const ConvexBody body = generate(task.spec);
    const double lambda = 1.0 / task.spec.radius;

    McSteinerOptions mc;
    mc.samples = config.mc_samples;
    mc.seed = mix_seed(config.base_seed, static_cast<std::uint64_t>(task.dim),
                       static_cast<std::uint64_t>(task.index));
    mc.threads = 1;  // campaign parallelism is at body level

    BodyOutcome outcome;
    QuermassVector w;
    const bool needs_mc = body.dim > 3 && has_core(body) && core_dimension(body) > 1;
    if (needs_mc) {
        w = quermass_mc_steiner(body, mc, &outcome.fit_points);
    } else {
        w = quermass_auto(body, mc);
    }

    outcome.reports = evaluate_all(body, lambda, w, config.tol_policy);
    for (auto& report : outcome.reports) report.body_id = task.body_id;

    const int k = body.dim - 2;
    if (k >= 1 && k + 1 <= 3 && config.rotations > 0) {
        const KubotaResult kub =
            kubota_check(body, w, k, 0, config.rotations,
                         mix_seed(config.base_seed, 0x6b75626fULL, task.index));
        outcome.kubota = KubotaRow{task.body_id, kub};
    }
    return outcome;
}

}  // namespace

bool run_symbolic_suite(int n_max, int d_max) {
    for (int n = 2; n <= n_max; ++n)
        if (!verify_generating_identity(n)) return false;
    // Collapse: sum_q C(m,q) x^q (1-x)^{d-q} = (1-x)^{d-m}.
    for (int d = 2; d <= 10; ++d)
        for (int m = 0; m <= d - 3; ++m) {
            IntPolynomial sum;
            for (int q = 0; q <= m; ++q)
                sum = sum + inner_parallel_coefficients(d, q) * big_binomial(m, q);
            const IntPolynomial expected =
                IntPolynomial({BigInt(1), BigInt(-1)}).pow(d - m);
            if (!(sum == expected)) return false;
        }
    for (int d = 2; d <= d_max; ++d)
        for (int i = 0; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                for (int k = j + 1; k <= d; ++k) {
                    try {
                        triple_from_consecutive(i, j, k, d);
                    } catch (const std::logic_error&) {
                        return false;
                    }
                }
    return true;
}

CampaignResult run_campaign(const CampaignConfig& config) {
    if (config.bodies_per_dim < 1)
        throw std::invalid_argument("bodies_per_dim: must be at least 1");
    if (config.mc_samples < 10000)
        throw std::invalid_argument("mc_samples: must be at least 1e4");
    std::vector<BodySpec> families = config.families;
    if (families.empty()) families.push_back(BodySpec{});

    std::vector<BodyTask> tasks;
    for (int dim : config.dims) {
        if (dim < 2) throw std::invalid_argument("dims: campaign dimensions must be >= 2");
        for (int index = 0; index < config.bodies_per_dim; ++index) {
            BodySpec spec = families[index % families.size()];
            spec.dim = dim;
            spec.seed = mix_seed(config.base_seed, static_cast<std::uint64_t>(dim),
                                 static_cast<std::uint64_t>(index));
            if (spec.family == BodyFamily::flat_core && spec.core_dim >= dim)
                spec.core_dim = dim - 1;
            tasks.push_back({dim, index, spec, make_body_id(dim, index, spec)});
        }
    }

    std::vector<BodyOutcome> outcomes(tasks.size());
    parallel_for(tasks.size(), default_threads(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) outcomes[t] = evaluate_body(tasks[t], config);
    });

    CampaignResult result;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        auto& outcome = outcomes[t];
        for (auto& report : outcome.reports) {
            switch (report.verdict) {
                case Verdict::holds: ++result.holds; break;
                case Verdict::equality: ++result.equality; break;
                case Verdict::violated: ++result.violated; break;
            }
            result.reports.push_back(std::move(report));
        }
        if (outcome.kubota) {
            if (!outcome.kubota->result.pass) ++result.kubota_failures;
            result.kubota_rows.push_back(std::move(*outcome.kubota));
        }
        if (result.plot_points.empty() && !outcome.fit_points.empty()) {
            result.plot_points = std::move(outcome.fit_points);
            result.plot_body_id = tasks[t].body_id;
        }
    }

    std::sort(result.reports.begin(), result.reports.end(),
              [](const InequalityReport& a, const InequalityReport& b) {
                  return std::tie(a.body_id, a.inequality_id, a.i, a.j, a.k) <
                         std::tie(b.body_id, b.inequality_id, b.i, b.j, b.k);
              });
    result.symbolic_pass = run_symbolic_suite();
    return result;
}

void write_report_jsonl(const std::string& path, const CampaignResult& result) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report file: " + path);
    for (const auto& report : result.reports) out << nlohmann::json(report).dump() << "\n";
}

void write_summary_csv(const std::string& path, const CampaignResult& result) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write summary file: " + path);
    out << report_csv_header() << "\n";
    for (const auto& report : result.reports) out << report_csv_line(report) << "\n";
    out << "\n# kubota: body_id,k,j,rotations,lhs,stderr,rhs,pass\n";
    for (const auto& row : result.kubota_rows) {
        out << "# " << row.body_id << "," << row.result.k << "," << row.result.j << ","
            << row.result.rotations << "," << row.result.lhs << "," << row.result.stderr_ << ","
            << row.result.rhs << "," << (row.result.pass ? "1" : "0") << "\n";
    }
    out << "# symbolic_pass," << (result.symbolic_pass ? "1" : "0") << "\n";
}

void write_plot_csv(const std::string& path, const CampaignResult& result) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write plot file: " + path);
    out.precision(17);
    out << "t,estimated_volume,fitted_volume\n";
    for (const auto& point : result.plot_points)
        out << point.t << "," << point.estimated << "," << point.fitted << "\n";
}

void to_json(nlohmann::json& j, const CampaignConfig& config) {
    j = nlohmann::json{{"dims", config.dims},
                       {"bodies_per_dim", config.bodies_per_dim},
                       {"families", config.families},
                       {"mc_samples", config.mc_samples},
                       {"rotations", config.rotations},
                       {"base_seed", config.base_seed},
                       {"tol_policy",
                        {{"exact_abs", config.tol_policy.exact_abs},
                         {"mc_sigma_multiplier", config.tol_policy.mc_sigma}}},
                       {"outputs",
                        {{"report_jsonl", config.outputs.report_jsonl},
                         {"summary_csv", config.outputs.summary_csv},
                         {"plot_csv", config.outputs.plot_csv}}}};
}

void from_json(const nlohmann::json& j, CampaignConfig& config) {
    config = CampaignConfig{};
    if (j.contains("dims")) config.dims = j.at("dims").get<std::vector<int>>();
    if (j.contains("bodies_per_dim")) config.bodies_per_dim = j.at("bodies_per_dim").get<int>();
    if (j.contains("families")) config.families = j.at("families").get<std::vector<BodySpec>>();
    if (j.contains("mc_samples")) config.mc_samples = j.at("mc_samples").get<long long>();
    if (j.contains("rotations")) config.rotations = j.at("rotations").get<int>();
    if (j.contains("base_seed")) config.base_seed = j.at("base_seed").get<std::uint64_t>();
    if (j.contains("tol_policy")) {
        const auto& tp = j.at("tol_policy");
        if (tp.contains("exact_abs")) config.tol_policy.exact_abs = tp.at("exact_abs").get<double>();
        if (tp.contains("mc_sigma_multiplier"))
            config.tol_policy.mc_sigma = tp.at("mc_sigma_multiplier").get<double>();
    }
    if (j.contains("outputs")) {
        const auto& out = j.at("outputs");
        config.outputs.report_jsonl = out.value("report_jsonl", std::string());
        config.outputs.summary_csv = out.value("summary_csv", std::string());
        config.outputs.plot_csv = out.value("plot_csv", std::string());
    }
    if (config.bodies_per_dim < 1)
        throw std::invalid_argument("bodies_per_dim: must be at least 1");
    if (config.mc_samples < 10000) throw std::invalid_argument("mc_samples: must be at least 1e4");
}

}  // namespace quermass
