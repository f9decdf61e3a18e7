#pragma once

#include "quermass/body.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace quermass {

enum class QuermassMethod { exact_closed_form, exact_face, mc_steiner };

std::string method_name(QuermassMethod m);

/// The sequence (W_0, ..., W_d) of a body in ambient dimension d, with
/// per-entry standard errors (zero on exact routes).
struct QuermassVector {
    int dim;
    std::vector<double> values;
    std::vector<double> stderrs;
    QuermassMethod method;
};

/// Volume of the d-dimensional unit ball via the recurrence
/// w_d = w_{d-2} * 2*pi / d seeded by w_0 = 1, w_1 = 2.
double unit_ball_volume(int d);

/// Binomial coefficient as a double (exact for the small arguments used here).
double binomial(int n, int k);

/// W_i(B_r) = w_d r^{d-i}.
QuermassVector quermass_ball(int dim, double r);

/// Closed form for a sausage of radius r and axis length L, by homogeneity
/// from the unit-radius formula W_i = w_d + ((d-i)/d) L w_{d-1}.
QuermassVector quermass_sausage(int dim, double r, double L);

/// Exact 2D route: area/perimeter of the core polygon plus the ball terms.
QuermassVector quermass_exact_2d(const ConvexBody& body);

/// Exact 3D route from core intrinsics (volume, surface area, edge integral),
/// with dimension fallbacks for flat and linear cores.
QuermassVector quermass_exact_3d(const ConvexBody& body);

struct McSteinerOptions {
    long long samples = 1000000;  // per t-grid point
    std::vector<double> t_grid;   // empty = default Chebyshev grid
    std::uint64_t seed = 0;
    int threads = 1;
};

/// One Steiner-fit observation: dilation t, hit-or-miss volume estimate, and
/// the fitted polynomial value at t.
struct McFitPoint {
    double t;
    double estimated;
    double fitted;
};

/// Default grid: dim+3 Chebyshev-Lobatto points on [0, 2r] (or [0, max(1, D/2)]
/// for bodies without a ball part).
std::vector<double> default_t_grid(const ConvexBody& body);

/// Monte-Carlo Steiner fit: hit-or-miss volume estimates of body + tB on the
/// grid, weighted least squares in the basis {C(d,i) t^i}. Deterministic for
/// fixed (samples, t_grid, seed) regardless of thread count.
QuermassVector quermass_mc_steiner(const ConvexBody& body, long long samples,
                                   const std::vector<double>& t_grid, std::uint64_t seed);
QuermassVector quermass_mc_steiner(const ConvexBody& body, const McSteinerOptions& options,
                                   std::vector<McFitPoint>* fit_points = nullptr);

/// Best available route: closed form for balls/sausages (and 1-dimensional
/// cores), exact face decomposition in dims 2-3, MC otherwise.
QuermassVector quermass_auto(const ConvexBody& body, const McSteinerOptions& options = {});

/// W_q(K - B) by the alternating inner-parallel-body sum
/// sum_i (-1)^i C(d-q, i) W_{q+i}(K); expects W of a 1-concave body.
double inner_parallel_quermass(const QuermassVector& w, int q);

/// W_i(cK) = c^{d-i} W_i(K).
QuermassVector rescale_quermass(const QuermassVector& w, double c);

void to_json(nlohmann::json& j, const QuermassVector& w);
void from_json(const nlohmann::json& j, QuermassVector& w);

}  // namespace quermass
