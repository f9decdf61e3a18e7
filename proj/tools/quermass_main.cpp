#include "quermass/campaign.hpp"
#include "quermass/inequalities.hpp"
#include "quermass/integral_geometry.hpp"
#include "quermass/intpoly.hpp"
#include "quermass/parallel.hpp"
#include "quermass/quermass.hpp"
#include "quermass/sampling.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using nlohmann::json;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text << "\n";
}

std::vector<int> parse_triple(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    if (out.size() != 3) throw std::invalid_argument("--triple: expected i,j,k");
    return out;
}

quermass::McSteinerOptions mc_options_from(long long samples, std::uint64_t seed,
                                           const std::string& t_grid) {
    quermass::McSteinerOptions options;
    options.samples = samples;
    options.seed = seed;
    options.threads = quermass::default_threads();
    if (!t_grid.empty()) {
        std::stringstream ss(t_grid);
        std::string item;
        while (std::getline(ss, item, ',')) options.t_grid.push_back(std::stod(item));
    }
    return options;
}

quermass::QuermassVector compute_quermass(const quermass::ConvexBody& body,
                                          const std::string& method,
                                          const quermass::McSteinerOptions& options) {
    if (method == "exact") {
        if (body.dim == 2) return quermass::quermass_exact_2d(body);
        if (body.dim == 3) return quermass::quermass_exact_3d(body);
        throw std::invalid_argument("--method exact: exact face routes exist for dims 2 and 3");
    }
    if (method == "mc") return quermass::quermass_mc_steiner(body, options, nullptr);
    return quermass::quermass_auto(body, options);
}

int run_checks(const std::vector<quermass::InequalityReport>& reports) {
    bool violated = false;
    for (const auto& report : reports) {
        std::cout << json(report).dump() << "\n";
        if (report.verdict == quermass::Verdict::violated) violated = true;
    }
    return violated ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lambda-concave body toolkit: quermassintegrals and reverse inequalities"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a body and write its JSON");
    std::string gen_spec_path, gen_out, gen_family = "random_core";
    quermass::BodySpec spec;
    gen->add_option("--spec", gen_spec_path, "BodySpec JSON file (overrides the flags)");
    gen->add_option("--dim", spec.dim, "ambient dimension");
    gen->add_option("--family", gen_family, "random_core|sausage|ball|flat_core");
    gen->add_option("--core-dim", spec.core_dim, "core dimension for flat_core");
    gen->add_option("--core-vertices", spec.core_vertex_count, "number of core vertices");
    gen->add_option("--core-scale", spec.core_scale, "core sampling box half-width / axis length");
    gen->add_option("--radius", spec.radius, "ball radius (1/lambda)");
    gen->add_option("--seed", spec.seed, "generation seed");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // quermass
    auto* qm = app.add_subcommand("quermass", "compute the quermassintegral vector");
    std::string qm_body, qm_method = "auto", qm_grid, qm_out;
    long long qm_samples = 1000000;
    std::uint64_t qm_seed = 0;
    qm->add_option("--body", qm_body, "body JSON file")->required();
    qm->add_option("--method", qm_method, "auto|exact|mc");
    qm->add_option("--samples", qm_samples, "MC samples per t-grid point");
    qm->add_option("--seed", qm_seed, "MC seed");
    qm->add_option("--t-grid", qm_grid, "comma-separated dilation grid");
    qm->add_option("--out", qm_out, "output path (default stdout)");

    // check
    auto* check = app.add_subcommand("check", "evaluate inequalities on a body");
    std::string ck_body, ck_method = "auto", ck_grid, ck_triple;
    long long ck_samples = 1000000;
    std::uint64_t ck_seed = 0;
    double ck_lambda = 0.0;
    int ck_order = -1;
    bool ck_all = false, ck_isop = false, ck_isod = false, ck_bh = false, ck_classical = false;
    check->add_option("--body", ck_body, "body JSON file")->required();
    check->add_option("--lambda", ck_lambda, "concavity parameter (default 1/radius)");
    check->add_flag("--all", ck_all, "run the full battery");
    check->add_option("--triple", ck_triple, "reverse triple i,j,k");
    check->add_flag("--isoperimetric", ck_isop, "reverse isoperimetric inequality");
    check->add_flag("--isodiametric", ck_isod, "reverse isodiametric inequality");
    check->add_option("--order", ck_order, "quermassintegral order for --isodiametric");
    check->add_flag("--bokowski-heil", ck_bh, "Bokowski-Heil baseline (use with --triple)");
    check->add_flag("--classical", ck_classical, "classical isoperimetric baseline");
    check->add_option("--method", ck_method, "auto|exact|mc");
    check->add_option("--samples", ck_samples, "MC samples per t-grid point");
    check->add_option("--seed", ck_seed, "MC seed");
    check->add_option("--t-grid", ck_grid, "comma-separated dilation grid");

    // kubota
    auto* kub = app.add_subcommand("kubota", "Monte-Carlo Kubota formula check");
    std::string kub_body;
    int kub_k = 1, kub_j = 0, kub_rotations = 500;
    std::uint64_t kub_seed = 0;
    long long kub_samples = 200000;
    kub->add_option("--body", kub_body, "body JSON file")->required();
    kub->add_option("--k", kub_k, "projected dimension minus one (k+1 in {2,3})");
    kub->add_option("--j", kub_j, "projected quermassintegral order");
    kub->add_option("--rotations", kub_rotations, "number of Haar subspace samples");
    kub->add_option("--seed", kub_seed, "rotation seed");
    kub->add_option("--samples", kub_samples, "MC samples for the right side if needed");

    // symbolic
    auto* sym = app.add_subcommand("symbolic", "exact generating-function identity suites");
    int sym_nmax = 64, sym_dmax = 8;
    sym->add_option("--n-max", sym_nmax, "largest n for the generating identity");
    sym->add_option("--d-max", sym_dmax, "largest ambient dimension for certificates");

    // campaign
    auto* camp = app.add_subcommand("campaign", "randomized verification campaign");
    std::string camp_config;
    camp->add_option("--config", camp_config, "CampaignConfig JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            if (!gen_spec_path.empty()) spec = load_json_file(gen_spec_path).get<quermass::BodySpec>();
            else spec.family = quermass::family_from_name(gen_family);
            const quermass::ConvexBody body = quermass::generate(spec);
            write_text(gen_out, quermass::body_to_json_string(body));
            return 0;
        }
        if (qm->parsed()) {
            const auto body = load_json_file(qm_body).get<quermass::ConvexBody>();
            const auto options = mc_options_from(qm_samples, qm_seed, qm_grid);
            const auto w = compute_quermass(body, qm_method, options);
            write_text(qm_out, json(w).dump());
            return 0;
        }
        if (check->parsed()) {
            const auto body = load_json_file(ck_body).get<quermass::ConvexBody>();
            const double lambda = ck_lambda > 0 ? ck_lambda : 1.0 / quermass::ball_radius(body);
            const auto options = mc_options_from(ck_samples, ck_seed, ck_grid);
            const auto w = compute_quermass(body, ck_method, options);
            std::vector<quermass::InequalityReport> reports;
            if (ck_all) {
                reports = quermass::evaluate_all(body, lambda, w);
            } else {
                const std::string summary = quermass::body_summary(body);
                auto push = [&](quermass::InequalityReport rep) {
                    rep.body_summary = summary;
                    quermass::set_equality_case_flag(rep, body);
                    reports.push_back(std::move(rep));
                };
                if (!ck_triple.empty() && !ck_bh) {
                    const auto t = parse_triple(ck_triple);
                    push(quermass::reverse_triple(w, lambda, t[0], t[1], t[2]));
                }
                if (ck_bh) {
                    const auto t = ck_triple.empty() ? std::vector<int>{0, 1, body.dim}
                                                     : parse_triple(ck_triple);
                    push(quermass::bokowski_heil(w, quermass::circumradius(body), t[0], t[1], t[2]));
                }
                if (ck_isop) push(quermass::reverse_isoperimetric(w, lambda));
                if (ck_isod) {
                    const double diam = quermass::diameter(body);
                    if (ck_order >= 0)
                        push(quermass::reverse_isodiametric(w, lambda, diam, ck_order));
                    else
                        for (int i = 0; i < body.dim; ++i)
                            push(quermass::reverse_isodiametric(w, lambda, diam, i));
                }
                if (ck_classical) push(quermass::classical_isoperimetric(w));
                if (reports.empty())
                    throw std::invalid_argument("check: select --all or a specific inequality");
            }
            return run_checks(reports);
        }
        if (kub->parsed()) {
            const auto body = load_json_file(kub_body).get<quermass::ConvexBody>();
            quermass::McSteinerOptions options;
            options.samples = kub_samples;
            options.threads = quermass::default_threads();
            const auto result =
                quermass::kubota_check(body, kub_k, kub_j, kub_rotations, kub_seed, options);
            json j{{"k", result.k},          {"j", result.j},
                   {"rotations", result.rotations}, {"lhs", result.lhs},
                   {"stderr", result.stderr_},      {"rhs", result.rhs},
                   {"rhs_stderr", result.rhs_stderr}, {"pass", result.pass}};
            std::cout << j.dump() << "\n";
            return result.pass ? 0 : 1;
        }
        if (sym->parsed()) {
            const bool ok = quermass::run_symbolic_suite(sym_nmax, sym_dmax);
            std::cout << (ok ? "symbolic suites: pass" : "symbolic suites: FAIL") << "\n";
            return ok ? 0 : 1;
        }
        if (camp->parsed()) {
            const auto config = load_json_file(camp_config).get<quermass::CampaignConfig>();
            const auto result = quermass::run_campaign(config);
            if (!config.outputs.report_jsonl.empty())
                quermass::write_report_jsonl(config.outputs.report_jsonl, result);
            if (!config.outputs.summary_csv.empty())
                quermass::write_summary_csv(config.outputs.summary_csv, result);
            if (!config.outputs.plot_csv.empty())
                quermass::write_plot_csv(config.outputs.plot_csv, result);
            std::cout << "reports: " << result.reports.size() << " (holds " << result.holds
                      << ", equality " << result.equality << ", violated " << result.violated
                      << ")\n"
                      << "kubota checks: " << result.kubota_rows.size() << " (failures "
                      << result.kubota_failures << ")\n"
                      << "symbolic suites: " << (result.symbolic_pass ? "pass" : "FAIL") << "\n";
            return result.all_ok() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
