#pragma once

#include <Eigen/Dense>

#include <vector>

namespace quermass {

struct MinBall {
    Eigen::VectorXd center;
    double radius;
};

/// Minimal enclosing ball by Welzl's algorithm (deterministic shuffle).
/// Exact in low dimensions up to conditioning of the boundary solves.
MinBall min_enclosing_ball(const std::vector<Eigen::VectorXd>& points);

}  // namespace quermass
