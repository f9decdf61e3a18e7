#include "quermass/body.hpp"

#include "quermass/hull.hpp"
#include "quermass/rng.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace quermass {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_finite(const Eigen::VectorXd& v, const char* what) {
    if (!v.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite coordinate");
}

void require_dim(const Eigen::VectorXd& v, int dim, const char* what) {
    if (v.size() != dim)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(dim) +
                                    " coordinates, got " + std::to_string(v.size()));
}

}  // namespace

ConvexBody make_ball(Eigen::VectorXd center, double radius) {
    require_finite(center, "center");
    if (!(radius > 0) || !std::isfinite(radius))
        throw std::invalid_argument("radius: must be positive and finite");
    const int dim = static_cast<int>(center.size());
    if (dim < 1) throw std::invalid_argument("center: empty point");
    return ConvexBody{dim, Ball{std::move(center), radius}};
}

ConvexBody make_sausage(Eigen::VectorXd p, Eigen::VectorXd q, double radius) {
    require_finite(p, "p");
    require_finite(q, "q");
    if (p.size() != q.size()) throw std::invalid_argument("q: dimension differs from p");
    if (!(radius > 0) || !std::isfinite(radius))
        throw std::invalid_argument("radius: must be positive and finite");
    const int dim = static_cast<int>(p.size());
    if (dim < 1) throw std::invalid_argument("p: empty point");
    return ConvexBody{dim, Sausage{std::move(p), std::move(q), radius}};
}

ConvexBody make_core_ball(std::vector<Eigen::VectorXd> core, double radius) {
    if (core.empty()) throw std::invalid_argument("core_vertices: empty list");
    if (!(radius >= 0) || !std::isfinite(radius))
        throw std::invalid_argument("radius: must be non-negative and finite");
    const int dim = static_cast<int>(core[0].size());
    if (dim < 1) throw std::invalid_argument("core_vertices[0]: empty point");
    for (std::size_t i = 0; i < core.size(); ++i) {
        const std::string field = "core_vertices[" + std::to_string(i) + "]";
        require_finite(core[i], field.c_str());
        require_dim(core[i], dim, field.c_str());
    }
    return ConvexBody{dim, CoreBall{std::move(core), radius}};
}

ConvexBody make_vpolytope(std::vector<Eigen::VectorXd> vertices) {
    if (vertices.empty()) throw std::invalid_argument("vertices: empty list");
    const int dim = static_cast<int>(vertices[0].size());
    if (dim < 1) throw std::invalid_argument("vertices[0]: empty point");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const std::string field = "vertices[" + std::to_string(i) + "]";
        require_finite(vertices[i], field.c_str());
        require_dim(vertices[i], dim, field.c_str());
    }
    return ConvexBody{dim, VPolytope{std::move(vertices)}};
}

std::string kind_name(const ConvexBody& body) {
    return std::visit(overloaded{[](const Ball&) { return std::string("ball"); },
                                 [](const Sausage&) { return std::string("sausage"); },
                                 [](const CoreBall&) { return std::string("core_ball"); },
                                 [](const VPolytope&) { return std::string("v_polytope"); }},
                      body.shape);
}

bool has_core(const ConvexBody& body) { return !std::holds_alternative<VPolytope>(body.shape); }

double ball_radius(const ConvexBody& body) {
    return std::visit(overloaded{[](const Ball& b) { return b.radius; },
                                 [](const Sausage& s) { return s.radius; },
                                 [](const CoreBall& c) { return c.radius; },
                                 [](const VPolytope&) { return 0.0; }},
                      body.shape);
}

std::vector<Eigen::VectorXd> core_vertices(const ConvexBody& body) {
    return std::visit(
        overloaded{[](const Ball& b) { return std::vector<Eigen::VectorXd>{b.center}; },
                   [](const Sausage& s) { return std::vector<Eigen::VectorXd>{s.p, s.q}; },
                   [](const CoreBall& c) { return c.core_vertices; },
                   [](const VPolytope&) -> std::vector<Eigen::VectorXd> {
                       throw std::invalid_argument("v_polytope has no core");
                   }},
        body.shape);
}

std::vector<Eigen::VectorXd> polytope_vertices(const ConvexBody& body) {
    if (std::holds_alternative<VPolytope>(body.shape))
        return std::get<VPolytope>(body.shape).vertices;
    return core_vertices(body);
}

double support(const ConvexBody& body, const Eigen::VectorXd& u) {
    require_dim(u, body.dim, "direction");
    if (std::abs(u.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("direction: not a unit vector");
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : polytope_vertices(body)) best = std::max(best, v.dot(u));
    return best + ball_radius(body);
}

std::vector<SupportSample> sample_support(const ConvexBody& body, int count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("count: must be positive");
    SplitMix64 rng(seed);
    std::vector<SupportSample> samples;
    samples.reserve(count);
    for (int i = 0; i < count; ++i) {
        Eigen::VectorXd u(body.dim);
        double norm = 0.0;
        do {
            for (int c = 0; c < body.dim; ++c) u(c) = rng.next_gaussian();
            norm = u.norm();
        } while (norm < 1e-6);
        u /= norm;
        samples.push_back({u, support(body, u)});
    }
    return samples;
}

bool support_dominated(const ConvexBody& inner, const ConvexBody& outer, int count,
                       std::uint64_t seed, double tol) {
    if (inner.dim != outer.dim) throw std::invalid_argument("bodies: dimension mismatch");
    for (const auto& sample : sample_support(inner, count, seed))
        if (sample.value > support(outer, sample.direction) + tol) return false;
    return true;
}

bool contains(const ConvexBody& body, const Eigen::VectorXd& x, double tol) {
    require_dim(x, body.dim, "point");
    MembershipOracle oracle(body);
    return oracle.distance_leq(x.data(), ball_radius(body) + tol);
}

ProjectionResult project_onto_hull(const Eigen::VectorXd& x,
                                   const std::vector<Eigen::VectorXd>& vertices, double tol,
                                   int max_iter) {
    if (vertices.empty()) throw std::invalid_argument("vertices: empty list");
    const std::size_t n = vertices.size();
    if (n == 1) return {vertices[0], (x - vertices[0]).norm()};

    // Warm start at the nearest vertex.
    std::size_t start = 0;
    double best = (x - vertices[0]).squaredNorm();
    for (std::size_t i = 1; i < n; ++i) {
        const double d2 = (x - vertices[i]).squaredNorm();
        if (d2 < best) {
            best = d2;
            start = i;
        }
    }
    std::vector<double> w(n, 0.0);
    w[start] = 1.0;
    Eigen::VectorXd y = vertices[start];

    const double gap_tol = tol * tol;
    double gap = std::numeric_limits<double>::infinity();
    double fp_floor = 0.0;
    bool stalled = false;
    for (int iter = 0; iter < max_iter && !stalled; ++iter) {
        const Eigen::VectorXd g = y - x;
        std::size_t fw = 0, away = 0;
        double fw_val = std::numeric_limits<double>::infinity();
        double away_val = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            const double d = g.dot(vertices[i]);
            if (d < fw_val) {
                fw_val = d;
                fw = i;
            }
            if (w[i] > 0 && d > away_val) {
                away_val = d;
                away = i;
            }
        }
        const double gy = g.dot(y);
        gap = gy - fw_val;
        // The gap is a difference of O(|g||v|) quantities; below this level it
        // is indistinguishable from zero in double precision.
        fp_floor = 256.0 * std::numeric_limits<double>::epsilon() *
                   (1.0 + std::abs(gy) + std::abs(fw_val));
        if (gap <= gap_tol) return {y, (y - x).norm()};

        const double away_gap = away_val - gy;
        const Eigen::VectorXd y_before = y;
        if (gap >= away_gap) {
            const Eigen::VectorXd d = vertices[fw] - y;
            const double d2 = d.squaredNorm();
            if (d2 == 0.0) return {y, (y - x).norm()};
            const double gamma = std::clamp(-g.dot(d) / d2, 0.0, 1.0);
            for (auto& wi : w) wi *= (1.0 - gamma);
            w[fw] += gamma;
            y += gamma * d;
        } else {
            const Eigen::VectorXd d = y - vertices[away];
            const double d2 = d.squaredNorm();
            const double gamma_max = w[away] >= 1.0 ? 0.0 : w[away] / (1.0 - w[away]);
            if (d2 == 0.0 || gamma_max == 0.0) continue;
            const double gamma = std::clamp(-g.dot(d) / d2, 0.0, gamma_max);
            for (auto& wi : w) wi *= (1.0 + gamma);
            w[away] = std::max(0.0, w[away] - gamma);
            y += gamma * d;
        }
        stalled = (y == y_before);
    }
    if (gap <= std::max(gap_tol, fp_floor)) return {y, (y - x).norm()};
    throw ConvergenceError(stalled ? "project_onto_hull: stalled at machine precision"
                                   : "project_onto_hull: iteration budget exhausted",
                           gap);
}

ConvexBody dilate(const ConvexBody& body, double t) {
    if (t < 0) throw std::invalid_argument("t: must be non-negative");
    if (t == 0.0) return body;
    return std::visit(
        overloaded{[&](const Ball& b) { return make_ball(b.center, b.radius + t); },
                   [&](const Sausage& s) { return make_sausage(s.p, s.q, s.radius + t); },
                   [&](const CoreBall& c) { return make_core_ball(c.core_vertices, c.radius + t); },
                   [&](const VPolytope& p) { return make_core_ball(p.vertices, t); }},
        body.shape);
}

namespace {

/// Erodes conv(vertices) by s > 0 in dimension <= 3; nullopt when empty.
std::optional<ConvexBody> erode_polytope(const std::vector<Eigen::VectorXd>& vertices, int dim,
                                         double s) {
    if (dim == 1) {
        double lo = vertices[0](0), hi = lo;
        for (const auto& v : vertices) {
            lo = std::min(lo, v(0));
            hi = std::max(hi, v(0));
        }
        lo += s;
        hi -= s;
        if (lo > hi) return std::nullopt;
        std::vector<Eigen::VectorXd> out;
        out.push_back(Eigen::VectorXd::Constant(1, lo));
        if (hi > lo) out.push_back(Eigen::VectorXd::Constant(1, hi));
        return make_vpolytope(std::move(out));
    }
    if (dim == 2) {
        std::vector<Eigen::Vector2d> pts;
        pts.reserve(vertices.size());
        for (const auto& v : vertices) pts.emplace_back(v(0), v(1));
        const auto result = erode_polytope_2d(pts, s);
        if (!result) return std::nullopt;
        std::vector<Eigen::VectorXd> out;
        for (const auto& p : *result) out.push_back(p);
        return make_vpolytope(std::move(out));
    }
    if (dim == 3) {
        std::vector<Eigen::Vector3d> pts;
        pts.reserve(vertices.size());
        for (const auto& v : vertices) pts.emplace_back(v(0), v(1), v(2));
        const auto result = erode_polytope_3d(pts, s);
        if (!result) return std::nullopt;
        std::vector<Eigen::VectorXd> out;
        for (const auto& p : *result) out.push_back(p);
        return make_vpolytope(std::move(out));
    }
    throw UnsupportedError(
        "erode: facet enumeration beyond the ball radius is only available in dimensions <= 3");
}

}  // namespace

std::optional<ConvexBody> erode(const ConvexBody& body, double t) {
    if (t < 0) throw std::invalid_argument("t: must be non-negative");
    if (t == 0.0) return body;
    const double r = ball_radius(body);
    if (t < r) {
        return std::visit(
            overloaded{
                [&](const Ball& b) { return make_ball(b.center, b.radius - t); },
                [&](const Sausage& s) { return make_sausage(s.p, s.q, s.radius - t); },
                [&](const CoreBall& c) { return make_core_ball(c.core_vertices, c.radius - t); },
                [&](const VPolytope&) -> ConvexBody { throw std::logic_error("unreachable"); }},
            body.shape);
    }
    if (t == r && r > 0) return make_vpolytope(core_vertices(body));
    // Past the ball radius: erode the polytope part itself. A part of affine
    // rank < dim has empty interior, so its erosion is empty in any dimension.
    const std::vector<Eigen::VectorXd> verts = polytope_vertices(body);
    if (affine_rank(verts) < body.dim) return std::nullopt;
    return erode_polytope(verts, body.dim, t - r);
}

ConvexBody project(const ConvexBody& body, const Eigen::MatrixXd& frame) {
    if (frame.rows() != body.dim)
        throw std::invalid_argument("frame: row count must equal body dimension");
    const int m = static_cast<int>(frame.cols());
    if (m < 1 || m >= body.dim)
        throw std::invalid_argument("frame: column count must be in [1, dim)");
    const Eigen::MatrixXd gram = frame.transpose() * frame;
    if ((gram - Eigen::MatrixXd::Identity(m, m)).lpNorm<Eigen::Infinity>() > 1e-10)
        throw std::invalid_argument("frame: columns are not orthonormal");

    auto proj_point = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
        return frame.transpose() * v;
    };
    auto prune = [m](std::vector<Eigen::VectorXd> pts) {
        if (m == 2) {
            std::vector<Eigen::Vector2d> p2;
            p2.reserve(pts.size());
            for (const auto& p : pts) p2.emplace_back(p(0), p(1));
            const auto hull = convex_hull_2d(p2);
            std::vector<Eigen::VectorXd> out;
            for (const auto& p : hull) out.push_back(p);
            return out;
        }
        if (m == 3 && affine_rank(pts) == 3) {
            std::vector<Eigen::Vector3d> p3;
            p3.reserve(pts.size());
            for (const auto& p : pts) p3.emplace_back(p(0), p(1), p(2));
            const auto hull = build_hull3(p3);
            std::vector<Eigen::VectorXd> out;
            for (int id : hull.hull_vertex_ids()) out.push_back(hull.points[id]);
            return out;
        }
        return pts;
    };

    return std::visit(
        overloaded{[&](const Ball& b) { return make_ball(proj_point(b.center), b.radius); },
                   [&](const Sausage& s) {
                       return make_sausage(proj_point(s.p), proj_point(s.q), s.radius);
                   },
                   [&](const CoreBall& c) {
                       std::vector<Eigen::VectorXd> pts;
                       pts.reserve(c.core_vertices.size());
                       for (const auto& v : c.core_vertices) pts.push_back(proj_point(v));
                       return make_core_ball(prune(std::move(pts)), c.radius);
                   },
                   [&](const VPolytope& p) {
                       std::vector<Eigen::VectorXd> pts;
                       pts.reserve(p.vertices.size());
                       for (const auto& v : p.vertices) pts.push_back(proj_point(v));
                       return make_vpolytope(prune(std::move(pts)));
                   }},
        body.shape);
}

double diameter(const ConvexBody& body) {
    const std::vector<Eigen::VectorXd> verts = polytope_vertices(body);
    double best = 0.0;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            best = std::max(best, (verts[i] - verts[j]).norm());
    return best + 2.0 * ball_radius(body);
}

int core_dimension(const ConvexBody& body, double tol) {
    if (!has_core(body)) throw std::invalid_argument("core_dimension: v_polytope has no core");
    return affine_rank(core_vertices(body), tol);
}

MembershipOracle::MembershipOracle(const ConvexBody& body) : dim_(body.dim) {
    const std::vector<Eigen::VectorXd> verts = polytope_vertices(body);
    nverts_ = static_cast<int>(verts.size());
    verts_.resize(static_cast<std::size_t>(nverts_) * dim_);
    centroid_.assign(dim_, 0.0);
    for (int i = 0; i < nverts_; ++i)
        for (int c = 0; c < dim_; ++c) {
            verts_[static_cast<std::size_t>(i) * dim_ + c] = verts[i](c);
            centroid_[c] += verts[i](c) / nverts_;
        }
    enclosing_radius_ = 0.0;
    for (int i = 0; i < nverts_; ++i) {
        double d2 = 0.0;
        for (int c = 0; c < dim_; ++c) {
            const double diff = verts_[static_cast<std::size_t>(i) * dim_ + c] - centroid_[c];
            d2 += diff * diff;
        }
        enclosing_radius_ = std::max(enclosing_radius_, std::sqrt(d2));
    }
    // Interior points converge to distance 0 but never reach it exactly; the
    // terminal comparisons allow this much slack so that r = 0 queries
    // (bare polytopes) classify interior points correctly.
    const double slack = 1e-9 * (enclosing_radius_ + 1.0);
    terminal_slack2_ = slack * slack;
    segment_ = nverts_ <= 2;
    work_y_.resize(dim_);
    work_w_.resize(nverts_);
}

bool MembershipOracle::distance_leq(const double* x, double r) const {
    const int d = dim_;
    if (segment_) {
        if (nverts_ == 1) {
            double d2 = 0.0;
            for (int c = 0; c < d; ++c) {
                const double diff = x[c] - verts_[c];
                d2 += diff * diff;
            }
            return d2 <= r * r;
        }
        const double* p = verts_.data();
        const double* q = verts_.data() + d;
        double len2 = 0.0, dot = 0.0;
        for (int c = 0; c < d; ++c) {
            const double e = q[c] - p[c];
            len2 += e * e;
            dot += (x[c] - p[c]) * e;
        }
        const double t = len2 > 0 ? std::clamp(dot / len2, 0.0, 1.0) : 0.0;
        double d2 = 0.0;
        for (int c = 0; c < d; ++c) {
            const double diff = x[c] - (p[c] + t * (q[c] - p[c]));
            d2 += diff * diff;
        }
        return d2 <= r * r;
    }

    // Bounding-sphere reject and nearest-vertex accept.
    double dc2 = 0.0;
    for (int c = 0; c < d; ++c) {
        const double diff = x[c] - centroid_[c];
        dc2 += diff * diff;
    }
    const double reach = enclosing_radius_ + r;
    if (dc2 > reach * reach) return false;

    int nearest = 0;
    double nearest2 = std::numeric_limits<double>::infinity();
    for (int i = 0; i < nverts_; ++i) {
        const double* v = verts_.data() + static_cast<std::size_t>(i) * d;
        double d2 = 0.0;
        for (int c = 0; c < d; ++c) {
            const double diff = x[c] - v[c];
            d2 += diff * diff;
        }
        if (d2 < nearest2) {
            nearest2 = d2;
            nearest = i;
        }
    }
    const double r2 = r * r;
    if (nearest2 <= r2) return true;

    // Early-exit away-step conditional gradient: decide dist <=> r from the
    // upper bound |y-x| and the duality-gap lower bound.
    double* y = work_y_.data();
    double* w = work_w_.data();
    std::fill(w, w + nverts_, 0.0);
    w[nearest] = 1.0;
    const double* v0 = verts_.data() + static_cast<std::size_t>(nearest) * d;
    for (int c = 0; c < d; ++c) y[c] = v0[c];

    for (int iter = 0; iter < 10000; ++iter) {
        double ub2 = 0.0;
        for (int c = 0; c < d; ++c) {
            const double diff = y[c] - x[c];
            ub2 += diff * diff;
        }
        if (ub2 <= r2) return true;

        int fw = 0, away = 0;
        double fw_val = std::numeric_limits<double>::infinity();
        double away_val = -std::numeric_limits<double>::infinity();
        double gy = 0.0;
        for (int c = 0; c < d; ++c) gy += (y[c] - x[c]) * y[c];
        for (int i = 0; i < nverts_; ++i) {
            const double* v = verts_.data() + static_cast<std::size_t>(i) * d;
            double dot = 0.0;
            for (int c = 0; c < d; ++c) dot += (y[c] - x[c]) * v[c];
            if (dot < fw_val) {
                fw_val = dot;
                fw = i;
            }
            if (w[i] > 0 && dot > away_val) {
                away_val = dot;
                away = i;
            }
        }
        const double gap = gy - fw_val;
        const double lb2 = ub2 - 2.0 * gap;
        if (lb2 > r2 + terminal_slack2_) return false;
        if (gap <= 1e-14 * (1.0 + ub2)) return ub2 <= r2 + terminal_slack2_;

        const double away_gap = away_val - gy;
        if (gap >= away_gap) {
            const double* v = verts_.data() + static_cast<std::size_t>(fw) * d;
            double d2 = 0.0, gd = 0.0;
            for (int c = 0; c < d; ++c) {
                const double dir = v[c] - y[c];
                d2 += dir * dir;
                gd += (y[c] - x[c]) * dir;
            }
            if (d2 == 0.0) return ub2 <= r2 + terminal_slack2_;
            const double gamma = std::clamp(-gd / d2, 0.0, 1.0);
            for (int i = 0; i < nverts_; ++i) w[i] *= (1.0 - gamma);
            w[fw] += gamma;
            for (int c = 0; c < d; ++c) y[c] += gamma * (v[c] - y[c]);
        } else {
            const double* v = verts_.data() + static_cast<std::size_t>(away) * d;
            const double gamma_max = w[away] >= 1.0 ? 0.0 : w[away] / (1.0 - w[away]);
            double d2 = 0.0, gd = 0.0;
            for (int c = 0; c < d; ++c) {
                const double dir = y[c] - v[c];
                d2 += dir * dir;
                gd += (y[c] - x[c]) * dir;
            }
            if (d2 == 0.0 || gamma_max == 0.0) return ub2 <= r2 + terminal_slack2_;
            const double gamma = std::clamp(-gd / d2, 0.0, gamma_max);
            const double scale = 1.0 + gamma;
            for (int i = 0; i < nverts_; ++i) w[i] *= scale;
            w[away] -= gamma;
            w[away] = std::max(0.0, w[away]);
            for (int c = 0; c < d; ++c) y[c] += gamma * (y[c] - v[c]);
        }
    }
    double ub2 = 0.0;
    for (int c = 0; c < d; ++c) {
        const double diff = y[c] - x[c];
        ub2 += diff * diff;
    }
    return ub2 <= r2 + terminal_slack2_;
}

namespace {

Eigen::VectorXd point_from_json(const nlohmann::json& j, const std::string& field, int dim) {
    if (!j.is_array())
        throw std::invalid_argument(field + ": expected an array of numbers");
    if (static_cast<int>(j.size()) != dim)
        throw std::invalid_argument(field + ": expected " + std::to_string(dim) +
                                    " coordinates, got " + std::to_string(j.size()));
    Eigen::VectorXd v(dim);
    for (int c = 0; c < dim; ++c) {
        if (!j[c].is_number()) throw std::invalid_argument(field + ": non-numeric coordinate");
        v(c) = j[c].get<double>();
    }
    return v;
}

nlohmann::json point_to_json(const Eigen::VectorXd& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (long c = 0; c < v.size(); ++c) arr.push_back(v(c));
    return arr;
}

}  // namespace

void to_json(nlohmann::json& j, const ConvexBody& body) {
    j = nlohmann::json{{"dim", body.dim}, {"kind", kind_name(body)}};
    std::visit(overloaded{[&](const Ball& b) {
                              j["center"] = point_to_json(b.center);
                              j["radius"] = b.radius;
                          },
                          [&](const Sausage& s) {
                              j["p"] = point_to_json(s.p);
                              j["q"] = point_to_json(s.q);
                              j["radius"] = s.radius;
                          },
                          [&](const CoreBall& c) {
                              nlohmann::json arr = nlohmann::json::array();
                              for (const auto& v : c.core_vertices) arr.push_back(point_to_json(v));
                              j["core_vertices"] = arr;
                              j["radius"] = c.radius;
                          },
                          [&](const VPolytope& p) {
                              nlohmann::json arr = nlohmann::json::array();
                              for (const auto& v : p.vertices) arr.push_back(point_to_json(v));
                              j["vertices"] = arr;
                          }},
               body.shape);
}

void from_json(const nlohmann::json& j, ConvexBody& body) {
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<int>() < 1)
        throw std::invalid_argument("dim: expected a positive integer");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw std::invalid_argument("kind: expected a string");
    const int dim = j["dim"].get<int>();
    const std::string kind = j["kind"].get<std::string>();

    auto get_radius = [&](bool allow_zero) {
        if (!j.contains("radius") || !j["radius"].is_number())
            throw std::invalid_argument("radius: expected a number");
        const double r = j["radius"].get<double>();
        if (!std::isfinite(r) || r < 0 || (r == 0 && !allow_zero))
            throw std::invalid_argument("radius: out of range");
        return r;
    };
    auto get_points = [&](const char* field) {
        if (!j.contains(field) || !j[field].is_array() || j[field].empty())
            throw std::invalid_argument(std::string(field) + ": expected a non-empty array");
        std::vector<Eigen::VectorXd> pts;
        pts.reserve(j[field].size());
        for (std::size_t i = 0; i < j[field].size(); ++i)
            pts.push_back(point_from_json(j[field][i], std::string(field) + "[" + std::to_string(i) + "]", dim));
        return pts;
    };

    if (kind == "ball") {
        if (!j.contains("center")) throw std::invalid_argument("center: missing");
        body = make_ball(point_from_json(j["center"], "center", dim), get_radius(false));
    } else if (kind == "sausage") {
        if (!j.contains("p")) throw std::invalid_argument("p: missing");
        if (!j.contains("q")) throw std::invalid_argument("q: missing");
        body = make_sausage(point_from_json(j["p"], "p", dim), point_from_json(j["q"], "q", dim),
                            get_radius(false));
    } else if (kind == "core_ball") {
        body = make_core_ball(get_points("core_vertices"), get_radius(true));
    } else if (kind == "v_polytope") {
        body = make_vpolytope(get_points("vertices"));
    } else {
        throw std::invalid_argument("kind: unknown kind '" + kind + "'");
    }
}

ConvexBody body_from_json_string(const std::string& text) {
    return nlohmann::json::parse(text).get<ConvexBody>();
}

std::string body_to_json_string(const ConvexBody& body) {
    return nlohmann::json(body).dump();
}

}  // namespace quermass
