#pragma once

#include "quermass/body.hpp"
#include "quermass/quermass.hpp"

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace quermass {

enum class Verdict { holds, equality, violated };

std::string verdict_name(Verdict v);

/// Tolerance policy: exact routes get a relative absolute floor, MC routes
/// add a sigma multiple of the linearly propagated standard error.
struct TolPolicy {
    double exact_abs = 1e-9;
    double mc_sigma = 3.0;
};

/// Evaluation record of one inequality instance. verdict is numeric
/// (equality iff |lhs| <= tol, violated iff lhs < -tol); the geometric
/// equality-case flag is set from the body's core rank and is authoritative
/// where the two disagree.
struct InequalityReport {
    std::string inequality_id;
    int i = -1, j = -1, k = -1;  // indices where applicable (i doubles as l)
    double lhs = 0.0;
    double tol = 0.0;
    Verdict verdict = Verdict::holds;
    std::string body_summary;
    double lambda = 1.0;
    bool equality_case_expected = false;
    std::string body_id;
};

/// Theorem A: (k-j) W_i / lambda^i + (i-k) W_j / lambda^j + (j-i) W_k / lambda^k >= 0,
/// equality exactly on lambda-sausage bodies.
InequalityReport reverse_triple(const QuermassVector& w, double lambda, int i, int j, int k,
                                const TolPolicy& policy = {});

/// Theorem B: Vol >= Surf/(n lambda) - omega_d/(n lambda^d) with n = d-1;
/// cross-checked against reverse_triple(0, 1, d) / n.
InequalityReport reverse_isoperimetric(const QuermassVector& w, double lambda,
                                       const TolPolicy& policy = {});

/// W_i(K) - W_i(S_lambda(D)) where S_lambda(D) is the sausage of radius
/// 1/lambda and diameter D. Requires D >= 2/lambda.
InequalityReport reverse_isodiametric(const QuermassVector& w, double lambda, double D, int i,
                                      const TolPolicy& policy = {});

/// Bokowski-Heil: c_ijk R^i W_i + c_jki R^j W_j + c_kij R^k W_k >= 0 with
/// c_pqr = (r-q)(p+1) and R the circumradius.
InequalityReport bokowski_heil(const QuermassVector& w, double R, int i, int j, int k,
                               const TolPolicy& policy = {});

/// Classical isoperimetric deficit Surf^{d/(d-1)} / (omega_d^{1/(d-1)} d^{d/(d-1)}) - Vol.
InequalityReport classical_isoperimetric(const QuermassVector& w, const TolPolicy& policy = {});

/// Differences W_{m+1} - W_m for m = 0..d-1 of a lambda=1 body; consecutive
/// deficits make this sequence non-decreasing.
std::vector<double> difference_chain(const QuermassVector& w);

/// E_l = W_l - 2 W_{l+1} + W_{l+2}; non-negative for 1-concave bodies, zero
/// exactly on sausages.
double consecutive_deficit(const QuermassVector& w, int l);

InequalityReport consecutive_deficit_report(const QuermassVector& w_lambda1, int l,
                                            const TolPolicy& policy = {});

/// Core dimension at most one.
bool is_sausage(const ConvexBody& body, double tol = 1e-9);

/// Circumradius of a core-ball body: minimal enclosing ball of the core plus
/// the ball radius (exact for this representation).
double circumradius(const ConvexBody& body);

/// Sets the geometric equality-case flag for the report's inequality family:
/// the sausage class for the reverse inequalities, the ball for the classical
/// one, nothing for Bokowski-Heil (the paper claims no equality case there).
void set_equality_case_flag(InequalityReport& report, const ConvexBody& body);

/// Runs the whole battery (all reverse triples, reverse isoperimetric,
/// reverse isodiametric for each order, Bokowski-Heil, classical
/// isoperimetric, consecutive deficits) on one body. Rejects bodies whose
/// ball radius is inconsistent with 1/lambda.
std::vector<InequalityReport> evaluate_all(const ConvexBody& body, double lambda,
                                           const QuermassVector& w, const TolPolicy& policy = {});

std::string body_summary(const ConvexBody& body);

void to_json(nlohmann::json& j, const InequalityReport& report);
std::string report_csv_header();
std::string report_csv_line(const InequalityReport& report);

}  // namespace quermass
