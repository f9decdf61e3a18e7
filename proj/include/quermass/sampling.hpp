#pragma once

#include "quermass/body.hpp"

#include <cstdint>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace quermass {

enum class BodyFamily { random_core, sausage, ball, flat_core };

std::string family_name(BodyFamily f);
BodyFamily family_from_name(const std::string& name);

/// Description of one randomly generated test body; generation is a pure
/// function of the spec (in particular of seed).
struct BodySpec {
    int dim = 2;
    BodyFamily family = BodyFamily::random_core;
    int core_dim = 1;             // flat_core only
    int core_vertex_count = 8;
    double core_scale = 1.0;
    double radius = 1.0;
    std::uint64_t seed = 0;
};

/// random_core: vertices i.i.d. uniform in [-core_scale, core_scale]^dim;
/// flat_core: the same in core_dim coordinates, embedded along a seeded Haar
/// frame; sausage/ball: canonical (axis along e_1 of length core_scale).
ConvexBody generate(const BodySpec& spec);

void to_json(nlohmann::json& j, const BodySpec& spec);
void from_json(const nlohmann::json& j, BodySpec& spec);

}  // namespace quermass
