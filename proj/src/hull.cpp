#include "quermass/hull.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace quermass {

namespace {

double cross2(const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

template <typename Vec>
std::vector<Vec> dedupe_points(const std::vector<Vec>& pts, double tol) {
    std::vector<Vec> out;
    for (const auto& p : pts) {
        bool seen = false;
        for (const auto& q : out) {
            if ((p - q).norm() <= tol) {
                seen = true;
                break;
            }
        }
        if (!seen) out.push_back(p);
    }
    return out;
}

template <typename Vec>
double coordinate_scale(const std::vector<Vec>& pts) {
    double s = 0.0;
    for (const auto& p : pts) s = std::max(s, p.template lpNorm<Eigen::Infinity>());
    return s + 1.0;
}

}  // namespace

std::vector<Eigen::Vector2d> convex_hull_2d(const std::vector<Eigen::Vector2d>& points) {
    if (points.empty()) throw std::invalid_argument("convex_hull_2d: empty point set");
    const double tol = 1e-12 * coordinate_scale(points);
    std::vector<Eigen::Vector2d> pts = dedupe_points(points, tol);
    std::sort(pts.begin(), pts.end(), [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
        return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
    });
    const std::size_t n = pts.size();
    if (n <= 2) return pts;

    // Andrew monotone chain; strict turns only, so collinear interior points drop out.
    std::vector<Eigen::Vector2d> hull(2 * n);
    std::size_t k = 0;
    const double area_tol = tol * coordinate_scale(points);
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross2(hull[k - 2], hull[k - 1], pts[i]) <= area_tol) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross2(hull[k - 2], hull[k - 1], pts[i]) <= area_tol) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

double polygon_area(const std::vector<Eigen::Vector2d>& loop) {
    if (loop.size() < 3) return 0.0;
    double twice = 0.0;
    for (std::size_t i = 0; i < loop.size(); ++i) {
        const auto& a = loop[i];
        const auto& b = loop[(i + 1) % loop.size()];
        twice += a.x() * b.y() - b.x() * a.y();
    }
    return 0.5 * std::abs(twice);
}

double polygon_perimeter(const std::vector<Eigen::Vector2d>& loop) {
    if (loop.size() < 2) return 0.0;
    if (loop.size() == 2) return 2.0 * (loop[1] - loop[0]).norm();
    double len = 0.0;
    for (std::size_t i = 0; i < loop.size(); ++i)
        len += (loop[(i + 1) % loop.size()] - loop[i]).norm();
    return len;
}

int affine_rank(const std::vector<Eigen::VectorXd>& points, double tol_rel) {
    if (points.empty()) throw std::invalid_argument("affine_rank: empty point set");
    const long dim = points[0].size();
    double max_norm = 0.0;
    for (const auto& p : points) max_norm = std::max(max_norm, p.norm());
    const double dedupe_tol = 1e-12 * (max_norm + 1.0);

    std::vector<Eigen::VectorXd> uniq = dedupe_points(points, dedupe_tol);
    if (uniq.size() <= 1) return 0;
    Eigen::MatrixXd diffs(dim, static_cast<long>(uniq.size()) - 1);
    for (std::size_t i = 1; i < uniq.size(); ++i) diffs.col(static_cast<long>(i) - 1) = uniq[i] - uniq[0];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(diffs);
    const double thresh = tol_rel * (max_norm + 1.0);
    int rank = 0;
    for (long i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > thresh) ++rank;
    return rank;
}

namespace {

struct FacetRec {
    std::array<int, 3> v;
    Eigen::Vector3d normal;
    double offset;
    bool alive = true;
};

FacetRec make_facet(const std::vector<Eigen::Vector3d>& pts, int a, int b, int c,
                    const Eigen::Vector3d& inside) {
    FacetRec f;
    f.v = {a, b, c};
    Eigen::Vector3d n = (pts[b] - pts[a]).cross(pts[c] - pts[a]);
    const double len = n.norm();
    if (len > 0) n /= len;
    if (n.dot(inside - pts[a]) > 0) {
        std::swap(f.v[1], f.v[2]);
        n = -n;
    }
    f.normal = n;
    f.offset = n.dot(pts[a]);
    return f;
}

}  // namespace

Hull3 build_hull3(const std::vector<Eigen::Vector3d>& points, double eps_rel) {
    if (points.empty()) throw std::invalid_argument("build_hull3: empty point set");
    const double scale = coordinate_scale(points);
    const double eps = eps_rel * scale;
    std::vector<Eigen::Vector3d> pts = dedupe_points(points, 1e-12 * scale);
    const int n = static_cast<int>(pts.size());

    // Initial tetrahedron from extreme points.
    int i0 = 0, i1 = 0;
    for (int i = 1; i < n; ++i) {
        if (pts[i].x() < pts[i0].x()) i0 = i;
        if (pts[i].x() > pts[i1].x()) i1 = i;
    }
    if (i0 == i1) {
        for (int i = 1; i < n; ++i)
            if ((pts[i] - pts[i0]).norm() > (pts[i1] - pts[i0]).norm()) i1 = i;
    }
    if ((pts[i1] - pts[i0]).norm() <= eps)
        throw std::invalid_argument("build_hull3: point set is not full-dimensional");
    const Eigen::Vector3d axis = (pts[i1] - pts[i0]).normalized();
    int i2 = -1;
    double best = eps;
    for (int i = 0; i < n; ++i) {
        const Eigen::Vector3d d = pts[i] - pts[i0];
        const double off = (d - d.dot(axis) * axis).norm();
        if (off > best) {
            best = off;
            i2 = i;
        }
    }
    if (i2 < 0) throw std::invalid_argument("build_hull3: point set is not full-dimensional");
    Eigen::Vector3d plane_n = (pts[i1] - pts[i0]).cross(pts[i2] - pts[i0]).normalized();
    int i3 = -1;
    best = eps;
    for (int i = 0; i < n; ++i) {
        const double off = std::abs(plane_n.dot(pts[i] - pts[i0]));
        if (off > best) {
            best = off;
            i3 = i;
        }
    }
    if (i3 < 0) throw std::invalid_argument("build_hull3: point set is not full-dimensional");

    const Eigen::Vector3d inside = 0.25 * (pts[i0] + pts[i1] + pts[i2] + pts[i3]);
    std::vector<FacetRec> facets;
    facets.push_back(make_facet(pts, i0, i1, i2, inside));
    facets.push_back(make_facet(pts, i0, i1, i3, inside));
    facets.push_back(make_facet(pts, i0, i2, i3, inside));
    facets.push_back(make_facet(pts, i1, i2, i3, inside));

    for (int p = 0; p < n; ++p) {
        if (p == i0 || p == i1 || p == i2 || p == i3) continue;
        std::vector<int> visible;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (!facets[f].alive) continue;
            if (facets[f].normal.dot(pts[p]) - facets[f].offset > eps) visible.push_back(static_cast<int>(f));
        }
        if (visible.empty()) continue;

        // Horizon: directed edges of visible facets whose reverse is not visible.
        std::map<std::pair<int, int>, int> edge_count;
        for (int f : visible) {
            const auto& v = facets[f].v;
            for (int e = 0; e < 3; ++e) {
                const int a = v[e], b = v[(e + 1) % 3];
                ++edge_count[{std::min(a, b), std::max(a, b)}];
            }
        }
        std::vector<std::pair<int, int>> horizon;
        for (int f : visible) {
            const auto& v = facets[f].v;
            for (int e = 0; e < 3; ++e) {
                const int a = v[e], b = v[(e + 1) % 3];
                if (edge_count[{std::min(a, b), std::max(a, b)}] == 1) horizon.emplace_back(a, b);
            }
        }
        for (int f : visible) facets[f].alive = false;
        for (const auto& [a, b] : horizon) facets.push_back(make_facet(pts, a, b, p, inside));
    }

    Hull3 hull;
    hull.points = std::move(pts);
    double vol6 = 0.0;
    for (const auto& f : facets) {
        if (!f.alive) continue;
        Hull3Facet out;
        out.v = f.v;
        out.normal = f.normal;
        out.offset = f.offset;
        const Eigen::Vector3d a = hull.points[f.v[0]] - inside;
        const Eigen::Vector3d b = hull.points[f.v[1]] - inside;
        const Eigen::Vector3d c = hull.points[f.v[2]] - inside;
        vol6 += a.cross(b).dot(c);
        out.area = 0.5 * (hull.points[f.v[1]] - hull.points[f.v[0]])
                             .cross(hull.points[f.v[2]] - hull.points[f.v[0]])
                             .norm();
        hull.surface_area += out.area;
        hull.facets.push_back(out);
    }
    hull.volume = vol6 / 6.0;

    // Exterior dihedral term: every undirected edge is shared by exactly two
    // facets; coplanar neighbours contribute angle 0 and drop out on their own.
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (std::size_t f = 0; f < hull.facets.size(); ++f) {
        const auto& v = hull.facets[f].v;
        for (int e = 0; e < 3; ++e) {
            const int a = v[e], b = v[(e + 1) % 3];
            edge_faces[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(f));
        }
    }
    for (const auto& [edge, fs] : edge_faces) {
        if (fs.size() != 2) throw std::runtime_error("build_hull3: hull is not watertight");
        const Eigen::Vector3d& n1 = hull.facets[fs[0]].normal;
        const Eigen::Vector3d& n2 = hull.facets[fs[1]].normal;
        const double theta = std::atan2(n1.cross(n2).norm(), n1.dot(n2));
        const double len = (hull.points[edge.second] - hull.points[edge.first]).norm();
        hull.edge_integral += 0.5 * len * theta;
    }
    return hull;
}

std::vector<std::pair<Eigen::Vector3d, double>> Hull3::unique_planes(double tol) const {
    std::vector<std::pair<Eigen::Vector3d, double>> planes;
    for (const auto& f : facets) {
        bool seen = false;
        for (const auto& [n, b] : planes) {
            if ((n - f.normal).norm() <= tol && std::abs(b - f.offset) <= tol * (1.0 + std::abs(b))) {
                seen = true;
                break;
            }
        }
        if (!seen) planes.emplace_back(f.normal, f.offset);
    }
    return planes;
}

std::vector<int> Hull3::hull_vertex_ids() const {
    std::vector<int> ids;
    for (const auto& f : facets)
        for (int v : f.v)
            if (std::find(ids.begin(), ids.end(), v) == ids.end()) ids.push_back(v);
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::optional<std::vector<Eigen::Vector2d>> erode_polytope_2d(
    const std::vector<Eigen::Vector2d>& points, double s) {
    if (s < 0) throw std::invalid_argument("erode_polytope_2d: negative offset");
    const auto hull = convex_hull_2d(points);
    if (s == 0.0) return hull;
    if (hull.size() < 3) return std::nullopt;  // flat sets have empty erosion

    const double scale = coordinate_scale(points) + s;
    // Start from a box that surely contains the hull, clip by each inward
    // offset edge halfplane.
    std::vector<Eigen::Vector2d> poly = {
        {-scale, -scale}, {scale, -scale}, {scale, scale}, {-scale, scale}};
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Eigen::Vector2d a = hull[i];
        const Eigen::Vector2d b = hull[(i + 1) % hull.size()];
        Eigen::Vector2d edge = b - a;
        Eigen::Vector2d n(edge.y(), -edge.x());  // outward for a CCW loop
        n.normalize();
        const double off = n.dot(a) - s;

        std::vector<Eigen::Vector2d> clipped;
        const std::size_t m = poly.size();
        for (std::size_t j = 0; j < m; ++j) {
            const Eigen::Vector2d& p = poly[j];
            const Eigen::Vector2d& q = poly[(j + 1) % m];
            const double dp = n.dot(p) - off;
            const double dq = n.dot(q) - off;
            if (dp <= 0) clipped.push_back(p);
            if ((dp < 0 && dq > 0) || (dp > 0 && dq < 0)) {
                const double t = dp / (dp - dq);
                clipped.push_back(p + t * (q - p));
            }
        }
        poly = std::move(clipped);
        if (poly.empty()) return std::nullopt;
    }
    poly = dedupe_points(poly, 1e-9 * scale);
    if (poly.empty()) return std::nullopt;
    return poly;
}

std::optional<std::vector<Eigen::Vector3d>> erode_polytope_3d(
    const std::vector<Eigen::Vector3d>& points, double s) {
    if (s < 0) throw std::invalid_argument("erode_polytope_3d: negative offset");
    std::vector<Eigen::VectorXd> generic;
    generic.reserve(points.size());
    for (const auto& p : points) generic.push_back(p);
    const int rank = affine_rank(generic);
    if (s == 0.0) {
        if (rank < 3) return points;
        const auto hull = build_hull3(points);
        std::vector<Eigen::Vector3d> verts;
        for (int id : hull.hull_vertex_ids()) verts.push_back(hull.points[id]);
        return verts;
    }
    if (rank < 3) return std::nullopt;

    const auto hull = build_hull3(points);
    const double scale = coordinate_scale(points) + s;
    auto planes = hull.unique_planes(1e-8);
    for (auto& [n, b] : planes) b -= s;

    const double feas_tol = 1e-9 * scale;
    std::vector<Eigen::Vector3d> verts;
    const std::size_t m = planes.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                Eigen::Matrix3d A;
                A.row(0) = planes[i].first;
                A.row(1) = planes[j].first;
                A.row(2) = planes[k].first;
                if (std::abs(A.determinant()) < 1e-12) continue;
                const Eigen::Vector3d b(planes[i].second, planes[j].second, planes[k].second);
                const Eigen::Vector3d x = A.partialPivLu().solve(b);
                bool feasible = true;
                for (const auto& [pn, pb] : planes) {
                    if (pn.dot(x) > pb + feas_tol) {
                        feasible = false;
                        break;
                    }
                }
                if (feasible) verts.push_back(x);
            }
    verts = dedupe_points(verts, 1e-8 * scale);
    if (verts.empty()) return std::nullopt;
    return verts;
}

}  // namespace quermass
