#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quermass/inequalities.hpp"
#include "quermass/sampling.hpp"

#include <nlohmann/json.hpp>

using namespace quermass;

TEST_CASE("generation is deterministic per seed") {
    BodySpec spec;
    spec.dim = 3;
    spec.family = BodyFamily::random_core;
    spec.core_vertex_count = 6;
    spec.seed = 1234;
    const std::string a = body_to_json_string(generate(spec));
    const std::string b = body_to_json_string(generate(spec));
    CHECK(a == b);
    spec.seed = 1235;
    CHECK(body_to_json_string(generate(spec)) != a);
}

TEST_CASE("canonical families") {
    BodySpec spec;
    spec.dim = 4;
    spec.family = BodyFamily::ball;
    spec.radius = 2.0;
    const ConvexBody ball = generate(spec);
    CHECK(kind_name(ball) == "ball");
    CHECK(ball_radius(ball) == doctest::Approx(2.0));

    spec.family = BodyFamily::sausage;
    spec.core_scale = 3.0;
    const ConvexBody sausage = generate(spec);
    CHECK(kind_name(sausage) == "sausage");
    CHECK(diameter(sausage) == doctest::Approx(3.0 + 4.0));
}

TEST_CASE("generated bodies satisfy the representation invariants") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        BodySpec spec;
        spec.dim = 2 + static_cast<int>(seed % 3);
        spec.family = seed % 2 == 0 ? BodyFamily::random_core : BodyFamily::flat_core;
        spec.core_dim = 1;
        spec.core_vertex_count = 5;
        spec.seed = seed;
        const ConvexBody body = generate(spec);
        CHECK(body.dim == spec.dim);
        for (const auto& v : core_vertices(body)) {
            CHECK(v.size() == spec.dim);
            CHECK(v.allFinite());
        }
        CHECK(ball_radius(body) > 0);
        // bodies round-trip through the JSON schema
        CHECK(body_to_json_string(body_from_json_string(body_to_json_string(body))) ==
              body_to_json_string(body));
    }
}

TEST_CASE("flat cores have the requested dimension") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        BodySpec spec;
        spec.dim = 4;
        spec.family = BodyFamily::flat_core;
        spec.core_dim = 2;
        spec.core_vertex_count = 8;
        spec.seed = seed;
        CHECK(core_dimension(generate(spec)) == 2);
    }
    // core_dim = 1 generates sausage-like bodies
    BodySpec spec;
    spec.dim = 3;
    spec.family = BodyFamily::flat_core;
    spec.core_dim = 1;
    spec.core_vertex_count = 4;
    spec.seed = 9;
    CHECK(is_sausage(generate(spec)));
}

TEST_CASE("spec json round trip") {
    BodySpec spec;
    spec.dim = 4;
    spec.family = BodyFamily::flat_core;
    spec.core_dim = 2;
    spec.core_vertex_count = 12;
    spec.core_scale = 1.5;
    spec.radius = 0.5;
    spec.seed = 77;
    const nlohmann::json j = spec;
    const BodySpec back = j.get<BodySpec>();
    CHECK(back.dim == spec.dim);
    CHECK(back.family == spec.family);
    CHECK(back.core_dim == spec.core_dim);
    CHECK(back.core_vertex_count == spec.core_vertex_count);
    CHECK(back.core_scale == spec.core_scale);
    CHECK(back.radius == spec.radius);
    CHECK(back.seed == spec.seed);

    const nlohmann::json unknown = {{"family", "torus"}};
    CHECK_THROWS_AS(unknown.get<BodySpec>(), std::invalid_argument);
}

TEST_CASE("invalid specs are rejected") {
    BodySpec spec;
    spec.core_vertex_count = 0;
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);
    spec = BodySpec{};
    spec.radius = -1.0;
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);
    spec = BodySpec{};
    spec.family = BodyFamily::flat_core;
    spec.core_dim = 5;
    spec.dim = 3;
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);
}
