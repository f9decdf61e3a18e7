#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quermass/body.hpp"
#include "quermass/rng.hpp"

#include <nlohmann/json.hpp>

#include <cmath>

using namespace quermass;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
    Eigen::VectorXd out(static_cast<long>(v.size()));
    long i = 0;
    for (double x : v) out(i++) = x;
    return out;
}

Eigen::VectorXd random_unit(SplitMix64& rng, int dim) {
    Eigen::VectorXd u(dim);
    do {
        for (int c = 0; c < dim; ++c) u(c) = rng.next_gaussian();
    } while (u.norm() < 1e-6);
    return u / u.norm();
}

ConvexBody segment_core_ball() {
    return make_core_ball({vec({0, 0}), vec({3, 0})}, 1.0);
}

ConvexBody unit_square_polytope() {
    return make_vpolytope({vec({0, 0}), vec({1, 0}), vec({1, 1}), vec({0, 1})});
}

}  // namespace

TEST_CASE("support function") {
    const ConvexBody ball = make_ball(vec({0, 0, 0}), 1.0);
    SplitMix64 rng(1);
    for (int i = 0; i < 20; ++i)
        CHECK(support(ball, random_unit(rng, 3)) == doctest::Approx(1.0).epsilon(1e-12));

    const ConvexBody cb = segment_core_ball();
    CHECK(support(cb, vec({1, 0})) == doctest::Approx(4.0));
    CHECK(support(cb, vec({0, 1})) == doctest::Approx(1.0));

    CHECK_THROWS_AS(support(cb, vec({1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(support(cb, vec({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("membership") {
    const ConvexBody ball = make_ball(vec({0, 0}), 1.0);
    CHECK(contains(ball, vec({0, 0}), 0.0));
    CHECK_FALSE(contains(ball, vec({1.01, 0}), 1e-9));

    const ConvexBody cb = segment_core_ball();
    CHECK(contains(cb, vec({1.5, 0.999}), 1e-9));
    // dist((4,1), segment) = sqrt(2) > 1
    CHECK_FALSE(contains(cb, vec({4.0, 1.0}), 1e-9));

    const ConvexBody square = unit_square_polytope();
    CHECK(contains(square, vec({0.5, 0.5}), 1e-9));
    CHECK(contains(square, vec({1.0, 1.0}), 1e-9));
    CHECK_FALSE(contains(square, vec({1.2, 0.5}), 1e-9));
}

TEST_CASE("hull projection closed forms") {
    SUBCASE("point on the hull") {
        const auto r = project_onto_hull(vec({1, 0}), {vec({0, 0}), vec({1, 0})}, 1e-10);
        CHECK(r.distance <= 1e-9);
    }
    SUBCASE("projection onto a segment") {
        const auto r = project_onto_hull(vec({2, 2}), {vec({0, 0}), vec({1, 0})}, 1e-10);
        CHECK(r.distance == doctest::Approx(std::sqrt(5.0)).epsilon(1e-9));
        CHECK((r.nearest - vec({1, 0})).norm() < 1e-8);
    }
    SUBCASE("interior point of the square") {
        const auto r = project_onto_hull(
            vec({0.5, 0.5}), {vec({0, 0}), vec({1, 0}), vec({1, 1}), vec({0, 1})}, 1e-8);
        CHECK(r.distance <= 1e-7);
    }
}

TEST_CASE("hull projection satisfies the variational inequality") {
    SplitMix64 rng(7);
    const double tol = 1e-8;
    for (int trial = 0; trial < 50; ++trial) {
        const int dim = 2 + static_cast<int>(rng.next_u64() % 3);
        std::vector<Eigen::VectorXd> verts;
        const int n = 3 + static_cast<int>(rng.next_u64() % 6);
        for (int i = 0; i < n; ++i) {
            Eigen::VectorXd v(dim);
            for (int c = 0; c < dim; ++c) v(c) = rng.next_double(-1, 1);
            verts.push_back(v);
        }
        Eigen::VectorXd x(dim);
        for (int c = 0; c < dim; ++c) x(c) = rng.next_double(-2, 2);
        const auto r = project_onto_hull(x, verts, tol);
        for (const auto& v : verts)
            CHECK((x - r.nearest).dot(v - r.nearest) <= tol * 10);
        // convex combinations project to themselves
        Eigen::VectorXd combo = Eigen::VectorXd::Zero(dim);
        double total = 0.0;
        std::vector<double> weights(verts.size());
        for (auto& w : weights) {
            w = rng.next_double();
            total += w;
        }
        for (std::size_t i = 0; i < verts.size(); ++i) combo += weights[i] / total * verts[i];
        CHECK(project_onto_hull(combo, verts, tol).distance <= 1e-6);
    }
}

TEST_CASE("dilation") {
    const ConvexBody ball = make_ball(vec({0, 0}), 1.0);
    const ConvexBody grown = dilate(ball, 1.0);
    CHECK(ball_radius(grown) == doctest::Approx(2.0));

    const ConvexBody square = unit_square_polytope();
    const ConvexBody rounded = dilate(square, 0.25);
    CHECK(kind_name(rounded) == "core_ball");
    CHECK(ball_radius(rounded) == doctest::Approx(0.25));
    CHECK(core_vertices(rounded).size() == 4);

    CHECK_THROWS_AS(dilate(ball, -0.5), std::invalid_argument);

    // support additivity on 100 random directions
    SplitMix64 rng(3);
    const ConvexBody cb = segment_core_ball();
    for (int i = 0; i < 100; ++i) {
        const Eigen::VectorXd u = random_unit(rng, 2);
        const double t = rng.next_double(0, 2);
        CHECK(support(dilate(cb, t), u) ==
              doctest::Approx(support(cb, u) + t).epsilon(1e-12));
    }
}

TEST_CASE("erosion within and at the core radius") {
    const ConvexBody cb = segment_core_ball();
    const auto shrunk = erode(cb, 0.5);
    REQUIRE(shrunk.has_value());
    CHECK(ball_radius(*shrunk) == doctest::Approx(0.5));

    const auto core = erode(cb, 1.0);
    REQUIRE(core.has_value());
    CHECK(kind_name(*core) == "v_polytope");
    CHECK(std::get<VPolytope>(core->shape).vertices.size() == 2);

    // opening identity: dilate(erode(K, t), t) = K on random directions
    SplitMix64 rng(11);
    const ConvexBody square_cb =
        make_core_ball({vec({0, 0}), vec({2, 0}), vec({2, 2}), vec({0, 2})}, 1.0);
    for (double t : {0.25, 0.7, 1.0}) {
        const auto opened = dilate(*erode(square_cb, t), t);
        for (int i = 0; i < 200; ++i) {
            const Eigen::VectorXd u = random_unit(rng, 2);
            CHECK(support(opened, u) == doctest::Approx(support(square_cb, u)).epsilon(1e-12));
        }
    }
}

TEST_CASE("erosion past the core radius") {
    const ConvexBody square = unit_square_polytope();
    const auto eroded = erode(square, 0.25);
    REQUIRE(eroded.has_value());
    CHECK(kind_name(*eroded) == "v_polytope");
    for (const auto& v : std::get<VPolytope>(eroded->shape).vertices)
        for (int c = 0; c < 2; ++c)
            CHECK(std::min(std::abs(v(c) - 0.25), std::abs(v(c) - 0.75)) < 1e-9);

    CHECK_FALSE(erode(square, 0.75).has_value());

    // ball: point core erodes to empty past the radius
    const ConvexBody ball = make_ball(vec({0, 0, 0, 0}), 1.0);
    CHECK_FALSE(erode(ball, 1.5).has_value());

    // deep erosion is unsupported above dimension 3
    const ConvexBody cb4 = make_core_ball(
        {vec({0, 0, 0, 0}), vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 1, 0}),
         vec({0, 0, 0, 1}), vec({1, 1, 1, 1})},
        0.5);
    CHECK_THROWS_AS(erode(cb4, 1.0), UnsupportedError);
}

TEST_CASE("orthogonal projection") {
    const ConvexBody ball3 = make_ball(vec({0, 0, 0}), 1.0);
    Eigen::MatrixXd frame(3, 2);
    frame << 1, 0, 0, 1, 0, 0;
    const ConvexBody disk = project(ball3, frame);
    CHECK(disk.dim == 2);
    CHECK(ball_radius(disk) == doctest::Approx(1.0));

    // sausage projected along a frame containing its axis keeps its length
    const ConvexBody sausage = make_sausage(vec({0, 0, 0}), vec({2, 0, 0}), 0.5);
    const ConvexBody shadow = project(sausage, frame);
    CHECK(kind_name(shadow) == "sausage");
    CHECK(ball_radius(shadow) == doctest::Approx(0.5));
    CHECK(diameter(shadow) == doctest::Approx(3.0));

    // projection of a core-ball keeps the radius and cannot raise core rank
    SplitMix64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Eigen::VectorXd> verts;
        for (int i = 0; i < 6; ++i) {
            Eigen::VectorXd v(4);
            for (int c = 0; c < 4; ++c) v(c) = rng.next_double(-1, 1);
            verts.push_back(v);
        }
        const ConvexBody cb = make_core_ball(verts, 0.7);
        Eigen::MatrixXd gauss(4, 3);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 3; ++c) gauss(r, c) = rng.next_gaussian();
        const Eigen::MatrixXd q =
            Eigen::HouseholderQR<Eigen::MatrixXd>(gauss).householderQ() *
            Eigen::MatrixXd::Identity(4, 3);
        const ConvexBody shadow4 = project(cb, q);
        CHECK(kind_name(shadow4) == "core_ball");
        CHECK(ball_radius(shadow4) == doctest::Approx(0.7));
        CHECK(core_dimension(shadow4) <= core_dimension(cb));
    }

    Eigen::MatrixXd bad(3, 2);
    bad << 1, 1, 0, 1, 0, 0;
    CHECK_THROWS_AS(project(ball3, bad), std::invalid_argument);
}

TEST_CASE("diameter") {
    CHECK(diameter(make_ball(vec({1, 2}), 1.0)) == doctest::Approx(2.0));
    CHECK(diameter(make_sausage(vec({0, 0}), vec({3, 0}), 1.0)) == doctest::Approx(5.0));
    const ConvexBody square_cb =
        make_core_ball({vec({0, 0}), vec({1, 0}), vec({1, 1}), vec({0, 1})}, 1.0);
    CHECK(diameter(square_cb) == doctest::Approx(std::sqrt(2.0) + 2.0));
    // diameter grows by 2t under dilation
    CHECK(diameter(dilate(square_cb, 0.5)) == doctest::Approx(diameter(square_cb) + 1.0));
}

TEST_CASE("core dimension") {
    CHECK(core_dimension(make_ball(vec({0, 0, 0}), 2.0)) == 0);
    CHECK(core_dimension(make_core_ball({vec({0, 0}), vec({1, 0}), vec({2, 0})}, 1.0)) == 1);
    CHECK(core_dimension(
              make_core_ball({vec({0, 0}), vec({1, 0}), vec({1, 1}), vec({0, 1})}, 1.0)) == 2);
    CHECK(core_dimension(make_sausage(vec({0, 0}), vec({1, 1}), 1.0)) == 1);
    CHECK(core_dimension(make_sausage(vec({1, 1}), vec({1, 1}), 1.0)) == 0);
    // repeated vertices are deduplicated
    CHECK(core_dimension(make_core_ball({vec({1, 1}), vec({1, 1})}, 1.0)) == 0);
    CHECK_THROWS_AS(core_dimension(unit_square_polytope()), std::invalid_argument);
}

TEST_CASE("body json round trip and rejection") {
    const ConvexBody cb = segment_core_ball();
    const std::string text = body_to_json_string(cb);
    const ConvexBody back = body_from_json_string(text);
    CHECK(body_to_json_string(back) == text);
    CHECK(back.dim == 2);
    CHECK(kind_name(back) == "core_ball");

    const ConvexBody sausage = make_sausage(vec({0, 0, 0}), vec({1, 0, 0}), 2.0);
    CHECK(body_to_json_string(body_from_json_string(body_to_json_string(sausage))) ==
          body_to_json_string(sausage));

    CHECK_THROWS_WITH_AS(body_from_json_string(R"({"dim":2,"kind":"simplex","vertices":[[0,0]]})"),
                         doctest::Contains("kind"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        body_from_json_string(R"({"dim":3,"kind":"ball","center":[0,0],"radius":1})"),
        doctest::Contains("center"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        body_from_json_string(
            R"({"dim":2,"kind":"core_ball","core_vertices":[[0,0],[1,2,3]],"radius":1})"),
        doctest::Contains("core_vertices[1]"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        body_from_json_string(R"({"dim":2,"kind":"ball","center":[0,0],"radius":-1})"),
        doctest::Contains("radius"), std::invalid_argument);
}
