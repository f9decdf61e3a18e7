#include "quermass/quermass.hpp"

#include "quermass/hull.hpp"
#include "quermass/parallel.hpp"
#include "quermass/rng.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace quermass {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::string method_name(QuermassMethod m) {
    switch (m) {
        case QuermassMethod::exact_closed_form: return "exact_closed_form";
        case QuermassMethod::exact_face: return "exact_face";
        case QuermassMethod::mc_steiner: return "mc_steiner";
    }
    throw std::logic_error("unknown method");
}

double unit_ball_volume(int d) {
    if (d < 0) throw std::invalid_argument("unit_ball_volume: negative dimension");
    static const std::vector<double> table = [] {
        std::vector<double> w(33);
        w[0] = 1.0;
        w[1] = 2.0;
        for (int i = 2; i < 33; ++i) w[i] = w[i - 2] * 2.0 * kPi / i;
        return w;
    }();
    if (d >= static_cast<int>(table.size()))
        throw std::invalid_argument("unit_ball_volume: dimension too large");
    return table[d];
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double result = 1.0;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return std::round(result);
}

QuermassVector quermass_ball(int dim, double r) {
    if (!(r > 0)) throw std::invalid_argument("quermass_ball: radius must be positive");
    QuermassVector w{dim, {}, {}, QuermassMethod::exact_closed_form};
    const double wd = unit_ball_volume(dim);
    for (int i = 0; i <= dim; ++i) w.values.push_back(wd * std::pow(r, dim - i));
    w.stderrs.assign(dim + 1, 0.0);
    return w;
}

QuermassVector quermass_sausage(int dim, double r, double L) {
    if (!(r > 0)) throw std::invalid_argument("quermass_sausage: radius must be positive");
    if (L < 0) throw std::invalid_argument("quermass_sausage: negative axis length");
    QuermassVector w{dim, {}, {}, QuermassMethod::exact_closed_form};
    const double wd = unit_ball_volume(dim);
    const double wd1 = unit_ball_volume(dim - 1);
    const double unit_axis = L / r;
    for (int i = 0; i <= dim; ++i) {
        const double unit_value = wd + (static_cast<double>(dim - i) / dim) * unit_axis * wd1;
        w.values.push_back(std::pow(r, dim - i) * unit_value);
    }
    w.stderrs.assign(dim + 1, 0.0);
    return w;
}

QuermassVector quermass_exact_2d(const ConvexBody& body) {
    if (body.dim != 2) throw std::invalid_argument("quermass_exact_2d: body must be 2-dimensional");
    if (!has_core(body))
        throw std::invalid_argument("quermass_exact_2d: body must have a core decomposition");
    const double r = ball_radius(body);
    std::vector<Eigen::Vector2d> pts;
    for (const auto& v : core_vertices(body)) pts.emplace_back(v(0), v(1));
    const auto hull = convex_hull_2d(pts);
    const double area = polygon_area(hull);
    const double perim = polygon_perimeter(hull);
    QuermassVector w{2,
                     {area + perim * r + kPi * r * r, 0.5 * (perim + 2.0 * kPi * r), kPi},
                     {0.0, 0.0, 0.0},
                     QuermassMethod::exact_face};
    return w;
}

namespace {

struct CoreIntrinsics3 {
    double volume = 0.0;
    double area = 0.0;
    double edge_integral = 0.0;
};

/// Intrinsic Steiner data of conv(core) in R^3; flat and linear cores are
/// handled by their degenerate closed forms.
CoreIntrinsics3 core_intrinsics_3d(const std::vector<Eigen::VectorXd>& core) {
    CoreIntrinsics3 out;
    const int rank = affine_rank(core);
    if (rank == 0) return out;
    if (rank == 1) {
        double len = 0.0;
        for (std::size_t i = 0; i < core.size(); ++i)
            for (std::size_t j = i + 1; j < core.size(); ++j)
                len = std::max(len, (core[i] - core[j]).norm());
        out.edge_integral = kPi * len;
        return out;
    }
    if (rank == 2) {
        // Planar core: both flat sides count for area, every boundary edge has
        // exterior dihedral pi.
        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(3);
        for (const auto& v : core) centroid += v;
        centroid /= static_cast<double>(core.size());
        Eigen::MatrixXd diffs(3, core.size());
        for (std::size_t i = 0; i < core.size(); ++i) diffs.col(i) = core[i] - centroid;
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(diffs, Eigen::ComputeFullU);
        const Eigen::MatrixXd basis = svd.matrixU().leftCols(2);
        std::vector<Eigen::Vector2d> flat;
        for (const auto& v : core) {
            const Eigen::VectorXd c = basis.transpose() * (v - centroid);
            flat.emplace_back(c(0), c(1));
        }
        const auto hull = convex_hull_2d(flat);
        out.area = 2.0 * polygon_area(hull);
        out.edge_integral = 0.5 * kPi * polygon_perimeter(hull);
        return out;
    }
    std::vector<Eigen::Vector3d> pts;
    pts.reserve(core.size());
    for (const auto& v : core) pts.emplace_back(v(0), v(1), v(2));
    const Hull3 hull = build_hull3(pts);
    out.volume = hull.volume;
    out.area = hull.surface_area;
    out.edge_integral = hull.edge_integral;
    return out;
}

}  // namespace

QuermassVector quermass_exact_3d(const ConvexBody& body) {
    if (body.dim != 3) throw std::invalid_argument("quermass_exact_3d: body must be 3-dimensional");
    if (!has_core(body))
        throw std::invalid_argument("quermass_exact_3d: body must have a core decomposition");
    const double r = ball_radius(body);
    const CoreIntrinsics3 c = core_intrinsics_3d(core_vertices(body));
    const double w3 = 4.0 * kPi / 3.0;
    QuermassVector w{3,
                     {c.volume + c.area * r + c.edge_integral * r * r + w3 * r * r * r,
                      (c.area + 2.0 * c.edge_integral * r + 4.0 * kPi * r * r) / 3.0,
                      (c.edge_integral + 4.0 * kPi * r) / 3.0, w3},
                     {0.0, 0.0, 0.0, 0.0},
                     QuermassMethod::exact_face};
    return w;
}

std::vector<double> default_t_grid(const ConvexBody& body) {
    const double r = ball_radius(body);
    const double upper = r > 0 ? 2.0 * r : std::max(1.0, 0.5 * diameter(body));
    const int m = body.dim + 3;
    std::vector<double> grid(m);
    for (int j = 0; j < m; ++j) grid[j] = upper * (1.0 - std::cos(kPi * j / (m - 1))) / 2.0;
    return grid;
}

namespace {
constexpr long long kChunkSamples = 65536;
}

QuermassVector quermass_mc_steiner(const ConvexBody& body, long long samples,
                                   const std::vector<double>& t_grid, std::uint64_t seed) {
    McSteinerOptions options;
    options.samples = samples;
    options.t_grid = t_grid;
    options.seed = seed;
    options.threads = default_threads();
    return quermass_mc_steiner(body, options, nullptr);
}

QuermassVector quermass_mc_steiner(const ConvexBody& body, const McSteinerOptions& options,
                                   std::vector<McFitPoint>* fit_points) {
    const int d = body.dim;
    const long long samples = options.samples;
    if (samples < 10000)
        throw std::invalid_argument("quermass_mc_steiner: need at least 1e4 samples per grid point");
    std::vector<double> grid = options.t_grid.empty() ? default_t_grid(body) : options.t_grid;
    std::sort(grid.begin(), grid.end());
    if (static_cast<int>(grid.size()) < d + 1)
        throw std::invalid_argument("quermass_mc_steiner: t_grid needs at least dim+1 entries");
    for (std::size_t j = 0; j < grid.size(); ++j) {
        if (grid[j] < 0) throw std::invalid_argument("quermass_mc_steiner: negative t in grid");
        if (j > 0 && grid[j] == grid[j - 1])
            throw std::invalid_argument("quermass_mc_steiner: duplicate t in grid");
    }
    const int m = static_cast<int>(grid.size());

    // Tight per-t sampling boxes from support values in coordinate directions.
    const double r = ball_radius(body);
    Eigen::VectorXd lo0(d), hi0(d);
    for (int c = 0; c < d; ++c) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
        e(c) = 1.0;
        hi0(c) = support(body, e);
        e(c) = -1.0;
        lo0(c) = -support(body, e);
    }

    const long long chunks = (samples + kChunkSamples - 1) / kChunkSamples;
    std::vector<long long> hits(static_cast<std::size_t>(m) * chunks, 0);

    parallel_for(static_cast<std::size_t>(m) * chunks, options.threads,
                 [&](std::size_t begin, std::size_t end) {
                     MembershipOracle oracle(body);
                     std::vector<double> x(d);
                     for (std::size_t task = begin; task < end; ++task) {
                         const int j = static_cast<int>(task / chunks);
                         const long long chunk = static_cast<long long>(task % chunks);
                         const double t = grid[j];
                         const double reach = r + t;
                         SplitMix64 rng(mix_seed(options.seed, static_cast<std::uint64_t>(j),
                                                 static_cast<std::uint64_t>(chunk)));
                         const long long count =
                             std::min(kChunkSamples, samples - chunk * kChunkSamples);
                         long long h = 0;
                         for (long long s = 0; s < count; ++s) {
                             for (int c = 0; c < d; ++c)
                                 x[c] = rng.next_double(lo0(c) - t, hi0(c) + t);
                             if (oracle.distance_leq(x.data(), reach)) ++h;
                         }
                         hits[task] = h;
                     }
                 });

    Eigen::VectorXd y(m), var(m);
    for (int j = 0; j < m; ++j) {
        long long total = 0;
        for (long long chunk = 0; chunk < chunks; ++chunk)
            total += hits[static_cast<std::size_t>(j) * chunks + chunk];
        double boxvol = 1.0;
        for (int c = 0; c < d; ++c) boxvol *= (hi0(c) - lo0(c)) + 2.0 * grid[j];
        const double p = static_cast<double>(total) / samples;
        y(j) = boxvol * p;
        var(j) = boxvol * boxvol * std::max(p * (1.0 - p), 0.25 / samples) / samples;
    }

    // Weighted least squares in the Steiner basis {C(d,i) t^i}.
    Eigen::MatrixXd design(m, d + 1);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i <= d; ++i) design(j, i) = binomial(d, i) * std::pow(grid[j], i);
    Eigen::VectorXd wsqrt = var.cwiseInverse().cwiseSqrt();
    const Eigen::MatrixXd scaled = wsqrt.asDiagonal() * design;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(scaled);
    const double cond = svd.singularValues()(0) / svd.singularValues()(d);
    if (!(cond < 1e8))
        throw std::invalid_argument(
            "quermass_mc_steiner: ill-conditioned Steiner fit; use a wider or Chebyshev t_grid");

    const Eigen::MatrixXd normal = scaled.transpose() * scaled;
    const Eigen::VectorXd rhs = scaled.transpose() * (wsqrt.asDiagonal() * y);
    const Eigen::MatrixXd cov = normal.ldlt().solve(Eigen::MatrixXd::Identity(d + 1, d + 1));
    const Eigen::VectorXd coeff = normal.ldlt().solve(rhs);

    QuermassVector w{d, {}, {}, QuermassMethod::mc_steiner};
    for (int i = 0; i <= d; ++i) {
        w.values.push_back(coeff(i));
        w.stderrs.push_back(std::sqrt(std::max(0.0, cov(i, i))));
    }
    if (fit_points) {
        fit_points->clear();
        for (int j = 0; j < m; ++j)
            fit_points->push_back({grid[j], y(j), design.row(j).dot(coeff)});
    }
    return w;
}

QuermassVector quermass_auto(const ConvexBody& body, const McSteinerOptions& options) {
    if (std::holds_alternative<Ball>(body.shape))
        return quermass_ball(body.dim, ball_radius(body));
    if (std::holds_alternative<Sausage>(body.shape)) {
        const auto& s = std::get<Sausage>(body.shape);
        return quermass_sausage(body.dim, s.radius, (s.p - s.q).norm());
    }
    if (has_core(body)) {
        if (body.dim == 2) return quermass_exact_2d(body);
        if (body.dim == 3) return quermass_exact_3d(body);
        // Sausage-equivalent cores stay exact in any dimension.
        if (core_dimension(body) <= 1)
            return quermass_sausage(body.dim, ball_radius(body), diameter(body) - 2.0 * ball_radius(body));
    }
    return quermass_mc_steiner(body, options, nullptr);
}

double inner_parallel_quermass(const QuermassVector& w, int q) {
    const int d = w.dim;
    if (q < 0 || q > d) throw std::out_of_range("inner_parallel_quermass: q out of range");
    double sum = 0.0;
    for (int i = 0; i <= d - q; ++i)
        sum += (i % 2 == 0 ? 1.0 : -1.0) * binomial(d - q, i) * w.values[q + i];
    return sum;
}

QuermassVector rescale_quermass(const QuermassVector& w, double c) {
    if (!(c > 0)) throw std::invalid_argument("rescale_quermass: scale must be positive");
    QuermassVector out = w;
    for (int i = 0; i <= w.dim; ++i) {
        const double f = std::pow(c, w.dim - i);
        out.values[i] *= f;
        out.stderrs[i] *= f;
    }
    return out;
}

void to_json(nlohmann::json& j, const QuermassVector& w) {
    j = nlohmann::json{{"dim", w.dim},
                       {"method", method_name(w.method)},
                       {"values", w.values},
                       {"stderr", w.stderrs}};
}

void from_json(const nlohmann::json& j, QuermassVector& w) {
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw std::invalid_argument("dim: expected an integer");
    w.dim = j["dim"].get<int>();
    const std::string method = j.at("method").get<std::string>();
    if (method == "exact_closed_form") w.method = QuermassMethod::exact_closed_form;
    else if (method == "exact_face") w.method = QuermassMethod::exact_face;
    else if (method == "mc_steiner") w.method = QuermassMethod::mc_steiner;
    else throw std::invalid_argument("method: unknown method '" + method + "'");
    w.values = j.at("values").get<std::vector<double>>();
    w.stderrs = j.at("stderr").get<std::vector<double>>();
    if (static_cast<int>(w.values.size()) != w.dim + 1)
        throw std::invalid_argument("values: expected dim+1 entries");
    if (static_cast<int>(w.stderrs.size()) != w.dim + 1)
        throw std::invalid_argument("stderr: expected dim+1 entries");
}

}  // namespace quermass
