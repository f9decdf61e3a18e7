#include "quermass/integral_geometry.hpp"

#include "quermass/inequalities.hpp"
#include "quermass/parallel.hpp"
#include "quermass/rng.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace quermass {

SubspaceSample sample_subspace(int d, int m, std::uint64_t seed) {
    if (m < 1 || m >= d) throw std::invalid_argument("sample_subspace: need 1 <= m < d");
    for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
        SplitMix64 rng(mix_seed(seed, attempt));
        Eigen::MatrixXd gauss(d, m);
        for (int c = 0; c < m; ++c)
            for (int r = 0; r < d; ++r) gauss(r, c) = rng.next_gaussian();
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(gauss);
        const Eigen::MatrixXd r_full = qr.matrixQR().topRows(m).triangularView<Eigen::Upper>();
        bool degenerate = false;
        for (int c = 0; c < m; ++c)
            if (std::abs(r_full(c, c)) <= 1e-12) degenerate = true;
        if (degenerate) continue;
        Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(d, m);
        // Positive R diagonal makes the distribution exactly Haar.
        for (int c = 0; c < m; ++c)
            if (r_full(c, c) < 0) q.col(c) = -q.col(c);
        return {q, seed};
    }
    throw std::runtime_error("sample_subspace: degenerate Gaussian draws (retries exhausted)");
}

namespace {

QuermassVector projected_quermass(const ConvexBody& body, const Eigen::MatrixXd& frame) {
    const ConvexBody shadow = project(body, frame);
    return shadow.dim == 2 ? quermass_exact_2d(shadow) : quermass_exact_3d(shadow);
}

struct MeanStderr {
    double mean, stderr_;
};

/// Compensated mean and standard error of a per-rotation statistic; rotation
/// order is fixed by index so the result is thread-count independent.
MeanStderr rotation_average(const ConvexBody& body, int proj_dim, int rotations,
                            std::uint64_t seed,
                            const std::function<double(const QuermassVector&)>& statistic) {
    std::vector<double> values(rotations);
    parallel_for(rotations, default_threads(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t rot = begin; rot < end; ++rot) {
            const SubspaceSample sub =
                sample_subspace(body.dim, proj_dim, mix_seed(seed, rot));
            values[rot] = statistic(projected_quermass(body, sub.frame));
        }
    });
    double sum = 0.0, comp = 0.0;
    for (double v : values) {
        const double t = v - comp;
        const double next = sum + t;
        comp = (next - sum) - t;
        sum = next;
    }
    const double mean = sum / rotations;
    double sq = 0.0;
    for (double v : values) sq += (v - mean) * (v - mean);
    const double sd = rotations > 1 ? std::sqrt(sq / (rotations - 1)) : 0.0;
    return {mean, sd / std::sqrt(static_cast<double>(rotations))};
}

}  // namespace

KubotaResult kubota_check(const ConvexBody& body, const QuermassVector& w_body, int k, int j,
                          int rotations, std::uint64_t seed) {
    const int d = body.dim;
    if (!(k > 0 && k <= d - 2)) throw std::invalid_argument("kubota_check: need 0 < k <= dim-2");
    if (j < 0 || j > k) throw std::invalid_argument("kubota_check: need 0 <= j <= k");
    const int m = k + 1;
    if (m != 2 && m != 3)
        throw UnsupportedError("kubota_check: exact projected routes exist only for k+1 in {2,3}");
    if (rotations < 1) throw std::invalid_argument("kubota_check: need at least one rotation");
    if (!has_core(body))
        throw std::invalid_argument("kubota_check: body must have a core decomposition");

    const MeanStderr lhs = rotation_average(
        body, m, rotations, seed, [&](const QuermassVector& w) { return w.values[j]; });

    KubotaResult result;
    result.k = k;
    result.j = j;
    result.rotations = rotations;
    result.lhs = lhs.mean;
    result.stderr_ = lhs.stderr_;
    const double scale = unit_ball_volume(m) / unit_ball_volume(d);
    result.rhs = scale * w_body.values[d - m + j];
    result.rhs_stderr = scale * w_body.stderrs[d - m + j];
    const double tol = 3.0 * (result.stderr_ + result.rhs_stderr) +
                       1e-9 * std::max({1.0, std::abs(result.lhs), std::abs(result.rhs)});
    result.pass = std::abs(result.lhs - result.rhs) <= tol;
    return result;
}

KubotaResult kubota_check(const ConvexBody& body, int k, int j, int rotations, std::uint64_t seed,
                          const McSteinerOptions& mc_options) {
    McSteinerOptions options = mc_options;
    if (options.seed == 0) options.seed = mix_seed(seed, 0x7268735fULL);
    return kubota_check(body, quermass_auto(body, options), k, j, rotations, seed);
}

DeficitOracle projected_deficit_oracle(const ConvexBody& body, int l, int rotations,
                                       std::uint64_t seed) {
    const int d = body.dim;
    if (l < 1 || l > d - 2) throw std::invalid_argument("projected_deficit_oracle: need 1 <= l <= dim-2");
    const int m = d - l;
    if (m != 2 && m != 3)
        throw UnsupportedError(
            "projected_deficit_oracle: projected dimension d-l must be 2 or 3");
    if (rotations < 1) throw std::invalid_argument("projected_deficit_oracle: need rotations >= 1");

    const MeanStderr avg = rotation_average(
        body, m, rotations, seed,
        [&](const QuermassVector& w) { return consecutive_deficit(w, 0); });
    const double scale = unit_ball_volume(d) / unit_ball_volume(m);
    return {scale * avg.mean, scale * avg.stderr_};
}

}  // namespace quermass
