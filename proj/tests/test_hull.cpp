#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quermass/hull.hpp"
#include "quermass/rng.hpp"

#include <cmath>
#include <numbers>

using namespace quermass;
namespace {
constexpr double kPi = std::numbers::pi;

std::vector<Eigen::Vector2d> unit_square() {
    return {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
}

std::vector<Eigen::Vector3d> unit_cube() {
    std::vector<Eigen::Vector3d> pts;
    for (int i = 0; i < 8; ++i) pts.emplace_back(i & 1, (i >> 1) & 1, (i >> 2) & 1);
    return pts;
}
}  // namespace

TEST_CASE("2d hull drops interior and collinear points") {
    auto pts = unit_square();
    pts.push_back({0.5, 0.5});
    pts.push_back({0.5, 0.0});  // collinear on the bottom edge
    const auto hull = convex_hull_2d(pts);
    CHECK(hull.size() == 4);
    CHECK(polygon_area(hull) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(polygon_perimeter(hull) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("2d hull of collinear points is the segment with doubled perimeter") {
    std::vector<Eigen::Vector2d> pts = {{0, 0}, {1, 0}, {3, 0}, {2, 0}};
    const auto hull = convex_hull_2d(pts);
    REQUIRE(hull.size() == 2);
    CHECK(polygon_area(hull) == 0.0);
    CHECK(polygon_perimeter(hull) == doctest::Approx(6.0));
}

TEST_CASE("2d hull orientation is counter-clockwise") {
    const auto hull = convex_hull_2d(unit_square());
    double twice = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        twice += a.x() * b.y() - b.x() * a.y();
    }
    CHECK(twice > 0);
}

TEST_CASE("3d hull of the unit cube") {
    auto pts = unit_cube();
    pts.emplace_back(0.5, 0.5, 0.5);  // interior
    const Hull3 hull = build_hull3(pts);
    CHECK(hull.volume == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(hull.surface_area == doctest::Approx(6.0).epsilon(1e-12));
    // 12 edges of length 1, exterior dihedral pi/2 each.
    CHECK(hull.edge_integral == doctest::Approx(3.0 * kPi).epsilon(1e-12));
    CHECK(hull.unique_planes(1e-8).size() == 6);
    CHECK(hull.hull_vertex_ids().size() == 8);
}

TEST_CASE("3d hull of a regular tetrahedron") {
    const std::vector<Eigen::Vector3d> pts = {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 0}};
    const Hull3 hull = build_hull3(pts);
    const double edge = std::sqrt(2.0);
    CHECK(hull.volume == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(hull.surface_area ==
          doctest::Approx(4.0 * (std::sqrt(3.0) / 4.0) * edge * edge).epsilon(1e-12));
    const double exterior = kPi - std::acos(1.0 / 3.0);
    CHECK(hull.edge_integral == doctest::Approx(6.0 * edge * exterior / 2.0).epsilon(1e-12));
}

TEST_CASE("3d hull volume matches determinant oracle on random tetrahedra") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Eigen::Vector3d> pts(4);
        for (auto& p : pts)
            p = Eigen::Vector3d(rng.next_double(-1, 1), rng.next_double(-1, 1),
                                rng.next_double(-1, 1));
        Eigen::Matrix3d m;
        for (int i = 0; i < 3; ++i) m.col(i) = pts[i + 1] - pts[0];
        const double oracle = std::abs(m.determinant()) / 6.0;
        if (oracle < 1e-4) continue;
        CHECK(build_hull3(pts).volume == doctest::Approx(oracle).epsilon(1e-10));
    }
}

TEST_CASE("3d hull rejects flat input") {
    const std::vector<Eigen::Vector3d> flat = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
    CHECK_THROWS_AS(build_hull3(flat), std::invalid_argument);
}

TEST_CASE("affine rank") {
    auto vec = [](std::initializer_list<double> v) {
        Eigen::VectorXd out(static_cast<long>(v.size()));
        long i = 0;
        for (double x : v) out(i++) = x;
        return out;
    };
    CHECK(affine_rank({vec({1, 2, 3})}) == 0);
    CHECK(affine_rank({vec({0, 0}), vec({1, 0}), vec({2, 0})}) == 1);
    CHECK(affine_rank({vec({0, 0}), vec({1, 0}), vec({0, 1})}) == 2);
    // repeated vertices are deduplicated before the rank computation
    CHECK(affine_rank({vec({1, 1}), vec({1, 1}), vec({1, 1})}) == 0);
}

TEST_CASE("2d erosion of the unit square") {
    const auto eroded = erode_polytope_2d(unit_square(), 0.25);
    REQUIRE(eroded.has_value());
    CHECK(eroded->size() == 4);
    const auto hull = convex_hull_2d(*eroded);
    CHECK(polygon_area(hull) == doctest::Approx(0.25).epsilon(1e-9));
    for (const auto& v : *eroded)
        for (int c = 0; c < 2; ++c)
            CHECK(std::min(std::abs(v(c) - 0.25), std::abs(v(c) - 0.75)) < 1e-9);
    CHECK_FALSE(erode_polytope_2d(unit_square(), 0.6).has_value());
}

TEST_CASE("3d erosion of the unit cube") {
    const auto eroded = erode_polytope_3d(unit_cube(), 0.25);
    REQUIRE(eroded.has_value());
    CHECK(eroded->size() == 8);
    const Hull3 hull = build_hull3(*eroded);
    CHECK(hull.volume == doctest::Approx(0.125).epsilon(1e-9));

    const auto point = erode_polytope_3d(unit_cube(), 0.5);
    REQUIRE(point.has_value());
    REQUIRE(point->size() == 1);
    CHECK(((*point)[0] - Eigen::Vector3d(0.5, 0.5, 0.5)).norm() < 1e-9);

    CHECK_FALSE(erode_polytope_3d(unit_cube(), 0.51).has_value());
}

TEST_CASE("erosion of flat sets is empty for positive offsets") {
    const std::vector<Eigen::Vector2d> segment = {{0, 0}, {2, 0}};
    CHECK_FALSE(erode_polytope_2d(segment, 0.1).has_value());
}
