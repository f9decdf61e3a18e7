#include "quermass/sampling.hpp"

#include "quermass/integral_geometry.hpp"
#include "quermass/rng.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace quermass {

std::string family_name(BodyFamily f) {
    switch (f) {
        case BodyFamily::random_core: return "random_core";
        case BodyFamily::sausage: return "sausage";
        case BodyFamily::ball: return "ball";
        case BodyFamily::flat_core: return "flat_core";
    }
    throw std::logic_error("unknown family");
}

BodyFamily family_from_name(const std::string& name) {
    if (name == "random_core") return BodyFamily::random_core;
    if (name == "sausage") return BodyFamily::sausage;
    if (name == "ball") return BodyFamily::ball;
    if (name == "flat_core") return BodyFamily::flat_core;
    throw std::invalid_argument("family: unknown family '" + name + "'");
}

ConvexBody generate(const BodySpec& spec) {
    if (spec.dim < 1) throw std::invalid_argument("dim: must be positive");
    if (spec.core_vertex_count < 1)
        throw std::invalid_argument("core_vertex_count: must be at least 1");
    if (!(spec.core_scale > 0)) throw std::invalid_argument("core_scale: must be positive");
    if (!(spec.radius > 0)) throw std::invalid_argument("radius: must be positive");

    SplitMix64 rng(mix_seed(spec.seed, 0x626f6479ULL));
    switch (spec.family) {
        case BodyFamily::ball:
            return make_ball(Eigen::VectorXd::Zero(spec.dim), spec.radius);
        case BodyFamily::sausage: {
            Eigen::VectorXd q = Eigen::VectorXd::Zero(spec.dim);
            q(0) = spec.core_scale;
            return make_sausage(Eigen::VectorXd::Zero(spec.dim), q, spec.radius);
        }
        case BodyFamily::random_core: {
            std::vector<Eigen::VectorXd> verts;
            verts.reserve(spec.core_vertex_count);
            for (int i = 0; i < spec.core_vertex_count; ++i) {
                Eigen::VectorXd v(spec.dim);
                for (int c = 0; c < spec.dim; ++c)
                    v(c) = rng.next_double(-spec.core_scale, spec.core_scale);
                verts.push_back(v);
            }
            return make_core_ball(std::move(verts), spec.radius);
        }
        case BodyFamily::flat_core: {
            if (spec.core_dim < 0 || spec.core_dim >= spec.dim)
                throw std::invalid_argument("core_dim: must be in [0, dim)");
            if (spec.core_dim == 0)
                return make_core_ball({Eigen::VectorXd::Zero(spec.dim)}, spec.radius);
            const Eigen::MatrixXd frame =
                sample_subspace(spec.dim, spec.core_dim, mix_seed(spec.seed, 0x666c6174ULL)).frame;
            std::vector<Eigen::VectorXd> verts;
            verts.reserve(spec.core_vertex_count);
            for (int i = 0; i < spec.core_vertex_count; ++i) {
                Eigen::VectorXd flat(spec.core_dim);
                for (int c = 0; c < spec.core_dim; ++c)
                    flat(c) = rng.next_double(-spec.core_scale, spec.core_scale);
                verts.push_back(frame * flat);
            }
            return make_core_ball(std::move(verts), spec.radius);
        }
    }
    throw std::logic_error("unknown family");
}

void to_json(nlohmann::json& j, const BodySpec& spec) {
    j = nlohmann::json{{"dim", spec.dim},
                       {"family", family_name(spec.family)},
                       {"core_vertex_count", spec.core_vertex_count},
                       {"core_scale", spec.core_scale},
                       {"radius", spec.radius},
                       {"seed", spec.seed}};
    if (spec.family == BodyFamily::flat_core) j["core_dim"] = spec.core_dim;
}

void from_json(const nlohmann::json& j, BodySpec& spec) {
    spec = BodySpec{};
    if (j.contains("dim")) spec.dim = j.at("dim").get<int>();
    spec.family = family_from_name(j.value("family", std::string("random_core")));
    if (j.contains("core_dim")) spec.core_dim = j.at("core_dim").get<int>();
    if (j.contains("core_vertex_count"))
        spec.core_vertex_count = j.at("core_vertex_count").get<int>();
    if (j.contains("core_scale")) spec.core_scale = j.at("core_scale").get<double>();
    if (j.contains("radius")) spec.radius = j.at("radius").get<double>();
    if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
}

}  // namespace quermass
