#pragma once

// Planar primitives for cone-based proximity graphs: the k-cone partition
// at a point, half-open cone membership, projective distance, canonical
// triangles, and the position predicates the graph builders rely on.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace conespan {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Fixed angular epsilon for boundary comparisons in cone membership and
// general-position tests. Boundaries are measure-zero under general
// position; a fixed rule keeps results deterministic.
inline constexpr double kAngularEpsilon = 1e-12;

struct Point {
    double x = 0.0;
    double y = 0.0;
    int id = -1;
};

inline double euclidean_distance(const Point& u, const Point& v) {
    const double dx = v.x - u.x;
    const double dy = v.y - u.y;
    return std::sqrt(dx * dx + dy * dy);
}

inline double cross(double ux, double uy, double vx, double vy) {
    return ux * vy - uy * vx;
}

// Ordered set of distinct points; ids equal positions.
class PointSet {
public:
    PointSet() = default;

    explicit PointSet(std::vector<std::pair<double, double>> coords) {
        points_.reserve(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i) {
            const auto [x, y] = coords[i];
            if (!std::isfinite(x) || !std::isfinite(y)) {
                throw std::invalid_argument("point coordinates must be finite");
            }
            points_.push_back(Point{x, y, static_cast<int>(i)});
        }
        for (std::size_t i = 0; i < points_.size(); ++i) {
            for (std::size_t j = i + 1; j < points_.size(); ++j) {
                if (points_[i].x == points_[j].x && points_[i].y == points_[j].y) {
                    throw std::invalid_argument(
                        "duplicate point at indices " + std::to_string(i) + " and " +
                        std::to_string(j));
                }
            }
        }
    }

    int size() const { return static_cast<int>(points_.size()); }
    const Point& operator[](int id) const { return points_[static_cast<std::size_t>(id)]; }
    const std::vector<Point>& points() const { return points_; }

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

private:
    std::vector<Point> points_;
};

// The k equiangular cones, each of angle theta = 2*pi/k. Cone 1's clockwise
// boundary ray is the positive x-axis; each cone is half-open, containing
// its clockwise boundary ray and excluding the counterclockwise one.
struct ConeSystem {
    int k = 6;
    double theta = kTwoPi / 6.0;

    explicit ConeSystem(int cones = 6) : k(cones), theta(kTwoPi / cones) {
        if (cones < 2) {
            throw std::invalid_argument("cone system requires k >= 2");
        }
    }

    double bisector_angle(int cone) const { return (cone - 0.5) * theta; }
    double clockwise_boundary_angle(int cone) const { return (cone - 1) * theta; }
};

// Direction angle of v - u normalized to [0, 2*pi).
inline double direction_angle(const Point& u, const Point& v) {
    if (u.x == v.x && u.y == v.y) {
        throw std::invalid_argument("degenerate direction");
    }
    double phi = std::atan2(v.y - u.y, v.x - u.x);
    if (phi < 0.0) phi += kTwoPi;
    if (phi >= kTwoPi) phi = 0.0;
    return phi;
}

// Index in 1..k of the cone at u containing v. The ray at angle (i-1)*theta
// belongs to cone i; directions within kAngularEpsilon of a boundary snap
// onto it.
inline int cone_index(const Point& u, const Point& v, const ConeSystem& sys) {
    const double phi = direction_angle(u, v);
    int i = static_cast<int>(std::floor(phi / sys.theta));
    if ((i + 1) * sys.theta - phi <= kAngularEpsilon) ++i;
    i %= sys.k;
    return i + 1;
}

// Distance from u to the orthogonal projection of v onto the bisector of
// the cone at u containing v.
inline double projective_distance(const Point& u, const Point& v, const ConeSystem& sys) {
    const int cone = cone_index(u, v, sys);
    const double bis = sys.bisector_angle(cone);
    return (v.x - u.x) * std::cos(bis) + (v.y - u.y) * std::sin(bis);
}

// Triangle bounded by the rays of the cone at `apex` containing `target`
// and the perpendicular through `target` to that cone's bisector.
struct CanonicalTriangle {
    Point apex;
    Point target;
    int cone = 0;
    // corners[0] is the apex; corners[1] and corners[2] are the
    // intersections of the cone's boundary rays with the closing line.
    std::array<Point, 3> corners{};
};

inline CanonicalTriangle canonical_triangle(const Point& a, const Point& b,
                                            const ConeSystem& sys) {
    const int cone = cone_index(a, b, sys);
    const double d = projective_distance(a, b, sys);
    const double reach = d / std::cos(sys.theta / 2.0);
    const double lo = sys.clockwise_boundary_angle(cone);
    const double hi = lo + sys.theta;

    CanonicalTriangle t;
    t.apex = a;
    t.target = b;
    t.cone = cone;
    t.corners[0] = a;
    t.corners[1] = Point{a.x + reach * std::cos(lo), a.y + reach * std::sin(lo), -1};
    t.corners[2] = Point{a.x + reach * std::cos(hi), a.y + reach * std::sin(hi), -1};
    return t;
}

namespace detail {

// Inclusive point-in-triangle test: boundary points count as inside.
inline bool point_in_triangle_inclusive(const Point& p, const Point& c0, const Point& c1,
                                        const Point& c2) {
    const double orient = cross(c1.x - c0.x, c1.y - c0.y, c2.x - c0.x, c2.y - c0.y);
    const double sign = orient >= 0.0 ? 1.0 : -1.0;
    const std::array<const Point*, 3> v{&c0, &c1, &c2};
    double scale = 0.0;
    for (int e = 0; e < 3; ++e) {
        const Point& s = *v[static_cast<std::size_t>(e)];
        const Point& t = *v[static_cast<std::size_t>((e + 1) % 3)];
        scale = std::max(scale, std::hypot(t.x - s.x, t.y - s.y));
    }
    const double tol = 1e-12 * scale * scale;
    for (int e = 0; e < 3; ++e) {
        const Point& s = *v[static_cast<std::size_t>(e)];
        const Point& t = *v[static_cast<std::size_t>((e + 1) % 3)];
        const double c = cross(t.x - s.x, t.y - s.y, p.x - s.x, p.y - s.y);
        if (sign * c < -tol) return false;
    }
    return true;
}

}  // namespace detail

// True iff no point of s other than the triangle's apex and target lies in
// the closed triangle. Boundary points count as inside: emptiness claims
// stay conservative.
inline bool triangle_is_empty(const CanonicalTriangle& t, const PointSet& s) {
    for (const Point& p : s) {
        if (p.id == t.apex.id || p.id == t.target.id) continue;
        if (detail::point_in_triangle_inclusive(p, t.corners[0], t.corners[1], t.corners[2])) {
            return false;
        }
    }
    return true;
}

// True iff segments ab and cd share a point that is not an endpoint of
// either. Shared endpoints alone do not count; collinear segments sharing
// more than one point do.
inline bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    const double abx = b.x - a.x, aby = b.y - a.y;
    const double cdx = d.x - c.x, cdy = d.y - c.y;

    const double d1 = cross(cdx, cdy, a.x - c.x, a.y - c.y);
    const double d2 = cross(cdx, cdy, b.x - c.x, b.y - c.y);
    const double d3 = cross(abx, aby, c.x - a.x, c.y - a.y);
    const double d4 = cross(abx, aby, d.x - a.x, d.y - a.y);

    const double lab = std::hypot(abx, aby);
    const double lcd = std::hypot(cdx, cdy);
    const double t1 = 1e-12 * lcd * std::max(std::hypot(a.x - c.x, a.y - c.y), 1e-300);
    const double t2 = 1e-12 * lcd * std::max(std::hypot(b.x - c.x, b.y - c.y), 1e-300);
    const double t3 = 1e-12 * lab * std::max(std::hypot(c.x - a.x, c.y - a.y), 1e-300);
    const double t4 = 1e-12 * lab * std::max(std::hypot(d.x - a.x, d.y - a.y), 1e-300);

    const bool z1 = std::abs(d1) <= t1, z2 = std::abs(d2) <= t2;
    const bool z3 = std::abs(d3) <= t3, z4 = std::abs(d4) <= t4;

    if (z1 && z2 && z3 && z4) {
        // Collinear: crossing iff they overlap in more than one point.
        const bool use_x = std::abs(abx) >= std::abs(aby);
        const double a1 = use_x ? a.x : a.y, b1 = use_x ? b.x : b.y;
        const double c1 = use_x ? c.x : c.y, e1 = use_x ? d.x : d.y;
        const double lo = std::max(std::min(a1, b1), std::min(c1, e1));
        const double hi = std::min(std::max(a1, b1), std::max(c1, e1));
        return lo < hi;
    }
    if (z1 || z2 || z3 || z4) {
        // An endpoint lies on the other segment's line: any shared point is
        // an endpoint, so this is touching, not crossing.
        return false;
    }
    return (d1 > 0.0) != (d2 > 0.0) && (d3 > 0.0) != (d4 > 0.0);
}

// True iff no two points lie on a line parallel to one of the rays that
// define the cones, i.e. no pairwise direction is a multiple of theta.
inline bool is_general_position(const PointSet& s, const ConeSystem& sys) {
    const int n = s.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double phi = direction_angle(s[i], s[j]);
            if (std::abs(std::remainder(phi, sys.theta)) <= kAngularEpsilon) {
                return false;
            }
        }
    }
    return true;
}

namespace detail {

// Andrew's monotone chain keeping strict turns only; collinear points are
// dropped and therefore are not hull vertices.
inline std::vector<int> convex_hull_vertices(const PointSet& s) {
    std::vector<int> order(static_cast<std::size_t>(s.size()));
    for (int i = 0; i < s.size(); ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return s[i].x < s[j].x || (s[i].x == s[j].x && s[i].y < s[j].y);
    });

    auto turn = [&](int o, int p, int q) {
        return cross(s[p].x - s[o].x, s[p].y - s[o].y, s[q].x - s[o].x, s[q].y - s[o].y);
    };

    std::vector<int> hull;
    for (int idx : order) {
        while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), idx) <= 0.0) {
            hull.pop_back();
        }
        hull.push_back(idx);
    }
    const std::size_t lower = hull.size() + 1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        while (hull.size() >= lower && turn(hull[hull.size() - 2], hull.back(), *it) <= 0.0) {
            hull.pop_back();
        }
        hull.push_back(*it);
    }
    hull.pop_back();
    return hull;
}

}  // namespace detail

// True iff every point of s is a vertex of the convex hull of s. Sets with
// fewer than three points are in convex position by convention.
inline bool is_convex_position(const PointSet& s) {
    if (s.size() < 3) return true;
    return detail::convex_hull_vertices(s).size() == static_cast<std::size_t>(s.size());
}

}  // namespace conespan
