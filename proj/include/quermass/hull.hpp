#pragma once

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <vector>

namespace quermass {

/// Convex hull of a 2D point set as a CCW vertex loop. Degenerate inputs
/// yield loops with one or two vertices.
std::vector<Eigen::Vector2d> convex_hull_2d(const std::vector<Eigen::Vector2d>& points);

/// Shoelace area of a CCW loop (0 for loops with fewer than 3 vertices).
double polygon_area(const std::vector<Eigen::Vector2d>& loop);

/// Length of the closed boundary walk. A two-vertex loop counts both
/// traversals of the segment, which is the correct Steiner perimeter of a
/// degenerate "polygon".
double polygon_perimeter(const std::vector<Eigen::Vector2d>& loop);

struct Hull3Facet {
    std::array<int, 3> v;    // CCW as seen from outside
    Eigen::Vector3d normal;  // unit outward
    double offset;           // normal . x <= offset on the hull
    double area;
};

/// Triangulated 3D convex hull with the intrinsic quantities needed by the
/// Steiner machinery. Requires full-dimensional input (rank 3); lower-rank
/// point sets are the caller's business.
struct Hull3 {
    std::vector<Eigen::Vector3d> points;  // deduplicated input
    std::vector<Hull3Facet> facets;
    double volume = 0.0;
    double surface_area = 0.0;
    /// Sum over edges of length * exterior dihedral angle / 2 (the quadratic
    /// Steiner coefficient).
    double edge_integral = 0.0;

    /// Facet planes with coplanar triangles merged; pairs (unit normal, offset).
    std::vector<std::pair<Eigen::Vector3d, double>> unique_planes(double tol) const;
    /// Indices (into points) of the vertices that lie on the hull.
    std::vector<int> hull_vertex_ids() const;
};

/// Incremental convex hull. Throws std::invalid_argument if the points are
/// not full-dimensional at the given relative tolerance.
Hull3 build_hull3(const std::vector<Eigen::Vector3d>& points, double eps_rel = 1e-10);

/// Affine rank of a point set: singular values above tol_rel * (max norm + 1).
int affine_rank(const std::vector<Eigen::VectorXd>& points, double tol_rel = 1e-9);

/// Inner parallel set of conv(points) at inward offset s, as hull vertices.
/// Returns nullopt when the erosion is empty. Points of affine rank < dim
/// erode to empty for any s > 0.
std::optional<std::vector<Eigen::Vector2d>> erode_polytope_2d(
    const std::vector<Eigen::Vector2d>& points, double s);
std::optional<std::vector<Eigen::Vector3d>> erode_polytope_3d(
    const std::vector<Eigen::Vector3d>& points, double s);

}  // namespace quermass
