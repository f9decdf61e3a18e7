#include "quermass/minball.hpp"

#include "quermass/rng.hpp"

#include <stdexcept>

namespace quermass {

namespace {

MinBall ball_from_boundary(const std::vector<Eigen::VectorXd>& boundary, int dim) {
    if (boundary.empty()) return {Eigen::VectorXd::Zero(dim), -1.0};
    if (boundary.size() == 1) return {boundary[0], 0.0};
    const long m = static_cast<long>(boundary.size()) - 1;
    Eigen::MatrixXd diffs(m, dim);
    Eigen::VectorXd rhs(m);
    for (long i = 0; i < m; ++i) {
        diffs.row(i) = (boundary[i + 1] - boundary[0]).transpose();
        rhs(i) = 0.5 * diffs.row(i).squaredNorm();
    }
    // Center lies in the affine hull of the boundary points.
    const Eigen::MatrixXd gram = diffs * diffs.transpose();
    const Eigen::VectorXd mu = gram.completeOrthogonalDecomposition().solve(rhs);
    Eigen::VectorXd center = boundary[0] + diffs.transpose() * mu;
    return {center, (center - boundary[0]).norm()};
}

MinBall welzl(std::vector<Eigen::VectorXd>& pts, std::size_t n,
              std::vector<Eigen::VectorXd>& boundary, int dim, double eps) {
    if (n == 0 || static_cast<int>(boundary.size()) == dim + 1)
        return ball_from_boundary(boundary, dim);
    MinBall ball = welzl(pts, n - 1, boundary, dim, eps);
    if (ball.radius >= 0 && (pts[n - 1] - ball.center).norm() <= ball.radius + eps) return ball;
    boundary.push_back(pts[n - 1]);
    ball = welzl(pts, n - 1, boundary, dim, eps);
    boundary.pop_back();
    return ball;
}

}  // namespace

MinBall min_enclosing_ball(const std::vector<Eigen::VectorXd>& points) {
    if (points.empty()) throw std::invalid_argument("min_enclosing_ball: empty point set");
    const int dim = static_cast<int>(points[0].size());
    std::vector<Eigen::VectorXd> pts = points;
    SplitMix64 rng(0x6d696e62616c6cULL);
    for (std::size_t i = pts.size(); i > 1; --i)
        std::swap(pts[i - 1], pts[rng.next_u64() % i]);
    double scale = 1.0;
    for (const auto& p : pts) scale = std::max(scale, p.lpNorm<Eigen::Infinity>());
    std::vector<Eigen::VectorXd> boundary;
    return welzl(pts, pts.size(), boundary, dim, 1e-12 * scale);
}

}  // namespace quermass
