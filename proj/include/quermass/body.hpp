#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace quermass {

/// Thrown when an iterative solver runs out of budget; carries the last
/// certified duality gap.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& what, double gap)
        : std::runtime_error(what), achieved_gap(gap) {}
    double achieved_gap;
};

/// Thrown for documented limitations (e.g. deep erosion above dimension 3).
class UnsupportedError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Ball {
    Eigen::VectorXd center;
    double radius;
};

struct Sausage {
    Eigen::VectorXd p;
    Eigen::VectorXd q;
    double radius;
};

/// Polytope core dilated by a ball: conv(core_vertices) + radius * B.
/// A body of this kind with radius r is exactly (1/r)-concave.
struct CoreBall {
    std::vector<Eigen::VectorXd> core_vertices;
    double radius;  // >= 0; zero only as an intermediate erosion result
};

struct VPolytope {
    std::vector<Eigen::VectorXd> vertices;
};

struct ConvexBody {
    int dim;
    std::variant<Ball, Sausage, CoreBall, VPolytope> shape;
};

struct SupportSample {
    Eigen::VectorXd direction;  // unit
    double value;
};

ConvexBody make_ball(Eigen::VectorXd center, double radius);
ConvexBody make_sausage(Eigen::VectorXd p, Eigen::VectorXd q, double radius);
ConvexBody make_core_ball(std::vector<Eigen::VectorXd> core_vertices, double radius);
ConvexBody make_vpolytope(std::vector<Eigen::VectorXd> vertices);

std::string kind_name(const ConvexBody& body);
bool has_core(const ConvexBody& body);
/// Ball radius of the decomposition (0 for a bare polytope).
double ball_radius(const ConvexBody& body);
/// Core vertices; Ball yields its center and Sausage its endpoints.
/// Throws for VPolytope, which has no core.
std::vector<Eigen::VectorXd> core_vertices(const ConvexBody& body);
/// Vertex set of the body's polytope part (core vertices, or the polytope
/// vertices themselves for VPolytope).
std::vector<Eigen::VectorXd> polytope_vertices(const ConvexBody& body);

/// h_K(u) = max over K of <x, u>. Requires |u| = 1 within 1e-12.
double support(const ConvexBody& body, const Eigen::VectorXd& u);

/// Support values on seeded uniformly random unit directions.
std::vector<SupportSample> sample_support(const ConvexBody& body, int count, std::uint64_t seed);

/// Inclusion test via support dominance on random directions:
/// h_inner <= h_outer + tol on every sampled direction.
bool support_dominated(const ConvexBody& inner, const ConvexBody& outer, int count,
                       std::uint64_t seed, double tol = 1e-12);

/// dist(x, body) <= tol.
bool contains(const ConvexBody& body, const Eigen::VectorXd& x, double tol);

struct ProjectionResult {
    Eigen::VectorXd nearest;
    double distance;
};

/// Euclidean projection of x onto conv(vertices) by away-step conditional
/// gradient; stops at duality gap <= tol^2 within max_iter iterations.
ProjectionResult project_onto_hull(const Eigen::VectorXd& x,
                                   const std::vector<Eigen::VectorXd>& vertices, double tol,
                                   int max_iter = 10000);

/// body + t*B.
ConvexBody dilate(const ConvexBody& body, double t);

/// body - t*B; nullopt when empty. Erosion past the ball radius needs facet
/// enumeration and is supported in dimensions <= 3 only.
std::optional<ConvexBody> erode(const ConvexBody& body, double t);

/// Orthogonal projection onto span(frame columns), expressed in frame
/// coordinates. Frame must have orthonormal columns within 1e-10.
ConvexBody project(const ConvexBody& body, const Eigen::MatrixXd& frame);

double diameter(const ConvexBody& body);

/// Affine dimension of the core (Ball -> 0, distinct-endpoint Sausage -> 1).
/// Rejects VPolytope.
int core_dimension(const ConvexBody& body, double tol = 1e-9);

/// Flat-buffer membership oracle for tight sampling loops. Semantics match
/// contains(dilate(body, t), x, 0) via distance_leq(x, ball_radius + t).
/// Holds per-call scratch space: create one instance per thread.
class MembershipOracle {
  public:
    explicit MembershipOracle(const ConvexBody& body);

    /// dist(x, polytope part) <= r, decided by bounding tests plus an
    /// early-exit conditional-gradient loop.
    bool distance_leq(const double* x, double r) const;

    int dim() const { return dim_; }

  private:
    int dim_;
    int nverts_;
    std::vector<double> verts_;     // row-major nverts x dim
    std::vector<double> centroid_;
    double enclosing_radius_;
    double terminal_slack2_;
    bool segment_;  // 1- or 2-vertex fast path
    mutable std::vector<double> work_y_, work_w_;
};

void to_json(nlohmann::json& j, const ConvexBody& body);
void from_json(const nlohmann::json& j, ConvexBody& body);
ConvexBody body_from_json_string(const std::string& text);
std::string body_to_json_string(const ConvexBody& body);

}  // namespace quermass
