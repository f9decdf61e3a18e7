#include "quermass/inequalities.hpp"

#include "quermass/minball.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace quermass {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::equality: return "equality";
        case Verdict::violated: return "violated";
    }
    throw std::logic_error("unknown verdict");
}

namespace {

Verdict classify(double lhs, double tol) {
    if (std::abs(lhs) <= tol) return Verdict::equality;
    return lhs < 0 ? Verdict::violated : Verdict::holds;
}

struct Term {
    int index;
    double coeff;  // already includes lambda or R powers
};

/// lhs = sum coeff_m W_m with tol = exact_abs * sum |coeff_m W_m|
///       + sigma * sum |coeff_m| stderr_m.
InequalityReport combine(const QuermassVector& w, const std::vector<Term>& terms,
                         const TolPolicy& policy) {
    InequalityReport report;
    double lhs = 0.0, mass = 0.0, noise = 0.0;
    for (const auto& [m, c] : terms) {
        lhs += c * w.values[m];
        mass += std::abs(c * w.values[m]);
        noise += std::abs(c) * w.stderrs[m];
    }
    report.lhs = lhs;
    report.tol = policy.exact_abs * mass + policy.mc_sigma * noise;
    report.verdict = classify(report.lhs, report.tol);
    return report;
}

void check_indices(const QuermassVector& w, int i, int j, int k) {
    if (!(0 <= i && i < j && j < k && k <= w.dim))
        throw std::invalid_argument("indices: need 0 <= i < j < k <= dim");
}

}  // namespace

InequalityReport reverse_triple(const QuermassVector& w, double lambda, int i, int j, int k,
                                const TolPolicy& policy) {
    check_indices(w, i, j, k);
    if (!(lambda > 0) || !std::isfinite(lambda))
        throw std::invalid_argument("lambda: must be positive and finite");
    InequalityReport report = combine(
        w,
        {{i, (k - j) / std::pow(lambda, i)},
         {j, (i - k) / std::pow(lambda, j)},
         {k, (j - i) / std::pow(lambda, k)}},
        policy);
    report.inequality_id = "reverse_triple";
    report.i = i;
    report.j = j;
    report.k = k;
    report.lambda = lambda;
    return report;
}

InequalityReport reverse_isoperimetric(const QuermassVector& w, double lambda,
                                       const TolPolicy& policy) {
    const int d = w.dim;
    if (d < 2) throw std::invalid_argument("reverse_isoperimetric: dimension must be >= 2");
    if (!(lambda > 0) || !std::isfinite(lambda))
        throw std::invalid_argument("lambda: must be positive and finite");
    const double n = d - 1;
    InequalityReport report = combine(w,
                                      {{0, 1.0},
                                       {1, -d / (n * lambda)},
                                       {d, 1.0 / (n * std::pow(lambda, d))}},
                                      policy);
    // Exact-algebra cross-check against the (0, 1, d) triple.
    const InequalityReport triple = reverse_triple(w, lambda, 0, 1, d, policy);
    const double scaled = report.lhs * n;
    if (std::abs(scaled - triple.lhs) > 1e-12 * std::max({1.0, std::abs(scaled), std::abs(triple.lhs)}))
        throw std::logic_error("reverse_isoperimetric: cross-check against (0,1,d) triple failed");
    report.inequality_id = "reverse_isoperimetric";
    report.lambda = lambda;
    return report;
}

InequalityReport reverse_isodiametric(const QuermassVector& w, double lambda, double D, int i,
                                      const TolPolicy& policy) {
    const int d = w.dim;
    if (!(lambda > 0) || !std::isfinite(lambda))
        throw std::invalid_argument("lambda: must be positive and finite");
    if (i < 0 || i > d - 1) throw std::out_of_range("reverse_isodiametric: i out of range");
    const double r = 1.0 / lambda;
    if (D < 2.0 * r * (1.0 - 1e-12))
        throw std::invalid_argument(
            "reverse_isodiametric: no lambda-concave body has diameter below 2/lambda");
    const QuermassVector sausage = quermass_sausage(d, r, std::max(0.0, D - 2.0 * r));
    InequalityReport report;
    report.lhs = w.values[i] - sausage.values[i];
    report.tol = policy.exact_abs * (std::abs(w.values[i]) + std::abs(sausage.values[i])) +
                 policy.mc_sigma * w.stderrs[i];
    report.verdict = classify(report.lhs, report.tol);
    report.inequality_id = "reverse_isodiametric";
    report.i = i;
    report.lambda = lambda;
    return report;
}

InequalityReport bokowski_heil(const QuermassVector& w, double R, int i, int j, int k,
                               const TolPolicy& policy) {
    check_indices(w, i, j, k);
    if (!(R > 0)) throw std::invalid_argument("R: circumradius must be positive");
    InequalityReport report = combine(w,
                                      {{i, (k - j) * (i + 1) * std::pow(R, i)},
                                       {j, (i - k) * (j + 1) * std::pow(R, j)},
                                       {k, (j - i) * (k + 1) * std::pow(R, k)}},
                                      policy);
    report.inequality_id = "bokowski_heil";
    report.i = i;
    report.j = j;
    report.k = k;
    return report;
}

InequalityReport classical_isoperimetric(const QuermassVector& w, const TolPolicy& policy) {
    const int d = w.dim;
    if (d < 2) throw std::invalid_argument("classical_isoperimetric: dimension must be >= 2");
    const double vol = w.values[0];
    const double surf = d * w.values[1];
    const double wd = unit_ball_volume(d);
    const double expo = static_cast<double>(d) / (d - 1);
    const double denom = std::pow(wd, 1.0 / (d - 1)) * std::pow(static_cast<double>(d), expo);
    const double bound = std::pow(surf, expo) / denom;

    InequalityReport report;
    report.lhs = bound - vol;
    const double dbound_dsurf = expo * std::pow(surf, expo - 1.0) / denom;
    report.tol = policy.exact_abs * (std::abs(bound) + std::abs(vol)) +
                 policy.mc_sigma * (dbound_dsurf * d * w.stderrs[1] + w.stderrs[0]);
    report.verdict = classify(report.lhs, report.tol);
    report.inequality_id = "classical_isoperimetric";
    return report;
}

std::vector<double> difference_chain(const QuermassVector& w) {
    std::vector<double> deltas;
    for (int m = 0; m < w.dim; ++m) deltas.push_back(w.values[m + 1] - w.values[m]);
    return deltas;
}

double consecutive_deficit(const QuermassVector& w, int l) {
    if (l < 0 || l > w.dim - 2) throw std::out_of_range("consecutive_deficit: l out of range");
    return w.values[l] - 2.0 * w.values[l + 1] + w.values[l + 2];
}

InequalityReport consecutive_deficit_report(const QuermassVector& w_lambda1, int l,
                                            const TolPolicy& policy) {
    if (l < 0 || l > w_lambda1.dim - 2)
        throw std::out_of_range("consecutive_deficit: l out of range");
    InequalityReport report =
        combine(w_lambda1, {{l, 1.0}, {l + 1, -2.0}, {l + 2, 1.0}}, policy);
    report.inequality_id = "consecutive_deficit";
    report.i = l;
    return report;
}

bool is_sausage(const ConvexBody& body, double tol) {
    return core_dimension(body, tol) <= 1;
}

void set_equality_case_flag(InequalityReport& report, const ConvexBody& body) {
    if (!has_core(body)) {
        report.equality_case_expected = false;
        return;
    }
    const std::string& id = report.inequality_id;
    if (id == "classical_isoperimetric")
        report.equality_case_expected = core_dimension(body) == 0;
    else if (id == "bokowski_heil")
        report.equality_case_expected = false;
    else
        report.equality_case_expected = is_sausage(body);
}

double circumradius(const ConvexBody& body) {
    return min_enclosing_ball(polytope_vertices(body)).radius + ball_radius(body);
}

std::string body_summary(const ConvexBody& body) {
    std::ostringstream os;
    os << kind_name(body) << " d=" << body.dim;
    if (has_core(body))
        os << " r=" << ball_radius(body) << " core=" << core_vertices(body).size() << "v";
    else
        os << " verts=" << std::get<VPolytope>(body.shape).vertices.size();
    return os.str();
}

std::vector<InequalityReport> evaluate_all(const ConvexBody& body, double lambda,
                                           const QuermassVector& w, const TolPolicy& policy) {
    if (!has_core(body))
        throw std::invalid_argument("evaluate_all: v_polytope bodies are not lambda-concave");
    if (w.dim != body.dim) throw std::invalid_argument("evaluate_all: dimension mismatch");
    if (!(lambda > 0) || !std::isfinite(lambda))
        throw std::invalid_argument("lambda: must be positive and finite");
    const double r = ball_radius(body);
    if (std::abs(lambda * r - 1.0) > 1e-12)
        throw std::invalid_argument("lambda: inconsistent with the body's ball radius");

    const int d = body.dim;
    const std::string summary = body_summary(body);
    const double diam = diameter(body);
    const double R = circumradius(body);
    const QuermassVector w1 = rescale_quermass(w, lambda);

    std::vector<InequalityReport> reports;
    auto finish = [&](InequalityReport rep) {
        rep.body_summary = summary;
        set_equality_case_flag(rep, body);
        reports.push_back(std::move(rep));
    };

    for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            for (int k = j + 1; k <= d; ++k) {
                finish(reverse_triple(w, lambda, i, j, k, policy));
                finish(bokowski_heil(w, R, i, j, k, policy));
            }
    if (d >= 2) {
        finish(reverse_isoperimetric(w, lambda, policy));
        finish(classical_isoperimetric(w, policy));
    }
    for (int i = 0; i < d; ++i) finish(reverse_isodiametric(w, lambda, diam, i, policy));
    for (int l = 0; l <= d - 2; ++l) {
        InequalityReport rep = consecutive_deficit_report(w1, l, policy);
        rep.lambda = lambda;
        finish(std::move(rep));
    }
    return reports;
}

void to_json(nlohmann::json& j, const InequalityReport& report) {
    j = nlohmann::json{{"inequality_id", report.inequality_id},
                       {"lhs", report.lhs},
                       {"tol", report.tol},
                       {"verdict", verdict_name(report.verdict)},
                       {"body_summary", report.body_summary},
                       {"lambda", report.lambda},
                       {"equality_case_expected", report.equality_case_expected}};
    if (report.i >= 0) j["i"] = report.i;
    if (report.j >= 0) j["j"] = report.j;
    if (report.k >= 0) j["k"] = report.k;
    if (!report.body_id.empty()) j["body_id"] = report.body_id;
}

std::string report_csv_header() { return "body_id,inequality_id,i,j,k,lhs,tol,verdict"; }

std::string report_csv_line(const InequalityReport& report) {
    std::ostringstream os;
    os.precision(17);
    os << report.body_id << "," << report.inequality_id << ",";
    if (report.i >= 0) os << report.i;
    os << ",";
    if (report.j >= 0) os << report.j;
    os << ",";
    if (report.k >= 0) os << report.k;
    os << "," << report.lhs << "," << report.tol << "," << verdict_name(report.verdict);
    return os.str();
}

}  // namespace quermass
