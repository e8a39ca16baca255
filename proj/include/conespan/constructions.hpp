#pragma once

// Deterministic generators for the adversarial point-set families used by
// the verification suites, plus random convex / general-position fixtures.
// Each named family validates its defining geometric conditions before
// returning and fails loudly naming the first violated condition.

#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "conespan/geometry.hpp"

namespace conespan {

class ConstructionError : public std::runtime_error {
public:
    explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

struct LabeledPointSet {
    PointSet points;
    std::map<std::string, int> labels;

    int label(const std::string& name) const {
        auto it = labels.find(name);
        if (it == labels.end()) {
            throw std::invalid_argument("unknown point label: " + name);
        }
        return it->second;
    }
};

enum class ConstructionFamily {
    MollaStrip,
    ConvexLowerBound,
    NonConvexZigzag,
    RandomConvex,
    RandomGeneral,
};

struct ConstructionSpec {
    ConstructionFamily family = ConstructionFamily::RandomGeneral;
    int n = 10;
    double alpha = 0.0;           // chain rotation angle, radians
    double delta_fraction = 0.5;  // nonconvex shift as a fraction of its bound
    double epsilon = 0.0;         // perturbation magnitude
    std::uint64_t seed = 1;
};

namespace detail {

inline Point intersect_lines(const Point& p, double dir_p, const Point& q, double dir_q) {
    const double d1x = std::cos(dir_p), d1y = std::sin(dir_p);
    const double d2x = std::cos(dir_q), d2y = std::sin(dir_q);
    const double denom = cross(d1x, d1y, d2x, d2y);
    if (denom == 0.0) {
        throw ConstructionError("parallel lines in construction");
    }
    const double t = cross(q.x - p.x, q.y - p.y, d2x, d2y) / denom;
    return Point{p.x + t * d1x, p.y + t * d1y, -1};
}

inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

[[noreturn]] inline void fail(const std::string& family, const std::string& condition, int index) {
    std::ostringstream os;
    os << family << " construction failed: " << condition << " at index " << index;
    throw ConstructionError(os.str());
}

}  // namespace detail

// Two nearly horizontal unit-step chains (lower a-chain, upper b-chain)
// that tilt apart by angles of order alpha while each rung a_i-b_i stays
// just inside cone 1 of a_i. Euclidean distances then favor the along-chain
// neighbor and projective distances favor the cross-chain neighbor, which
// the validation below asserts for every index, together with emptiness of
// C_2(a_i) and C_5(b_i) and convex/general position.
inline LabeledPointSet gen_molla(int n, double alpha, double epsilon) {
    if (n < 2) throw ConstructionError("molla strip requires n >= 2");
    if (!(alpha > 0.0) || alpha > 0.05) {
        throw ConstructionError("molla strip requires 0 < alpha <= 0.05");
    }
    if (!(epsilon > 0.0) || epsilon > 1e-3) {
        throw ConstructionError("molla strip requires 0 < epsilon <= 1e-3");
    }
    if (!(alpha > 6.0 * epsilon)) {
        throw ConstructionError("molla strip requires alpha > 6*epsilon for the chain steps "
                                "to dominate the rung tilts");
    }

    const double third = std::numbers::pi / 3.0;  // 60 degrees
    const double beta = epsilon;                  // rung tilt below 60 degrees
    const double gamma = epsilon;                 // back-rung tilt above 120 degrees
    auto step_angle = [&](int i) {
        // Strictly decreasing in i, between alpha/2 and alpha: keeps both
        // chains strictly convex while exceeding 2*beta + gamma.
        return alpha * (0.5 + static_cast<double>(n - i) / (2.0 * n));
    };

    std::vector<Point> a(static_cast<std::size_t>(n));
    std::vector<Point> b(static_cast<std::size_t>(n));
    a[0] = Point{0.0, 0.0, -1};
    b[0] = Point{std::cos(third - beta), std::sin(third - beta), -1};
    for (int i = 1; i < n; ++i) {
        const double u = step_angle(i + 1);  // a-step dips below horizontal
        const double v = step_angle(i + 1);  // b-step rises above horizontal
        const std::size_t s = static_cast<std::size_t>(i);
        // a_i: on the ray from a_{i-1} at angle -u, seen from b_{i-1} at
        // angle (gamma - 60) so that b_{i-1} sits just inside C_3(a_i).
        a[s] = detail::intersect_lines(a[s - 1], -u, b[s - 1], gamma - third);
        // b_i: on the ray from b_{i-1} at angle +v, seen from a_i at angle
        // (60 - beta) so that b_i sits just inside C_1(a_i).
        b[s] = detail::intersect_lines(b[s - 1], v, a[s], third - beta);
    }

    std::vector<std::pair<double, double>> coords;
    coords.reserve(static_cast<std::size_t>(2 * n));
    LabeledPointSet out;
    for (int i = 0; i < n; ++i) {
        coords.emplace_back(a[static_cast<std::size_t>(i)].x, a[static_cast<std::size_t>(i)].y);
        out.labels["a_" + std::to_string(i + 1)] = i;
    }
    for (int i = 0; i < n; ++i) {
        coords.emplace_back(b[static_cast<std::size_t>(i)].x, b[static_cast<std::size_t>(i)].y);
        out.labels["b_" + std::to_string(i + 1)] = n + i;
    }
    out.points = PointSet(std::move(coords));

    const ConeSystem sys(6);
    const PointSet& s = out.points;
    auto A = [&](int i) { return s[i - 1]; };          // a_i, 1-based
    auto B = [&](int i) { return s[n + i - 1]; };      // b_i, 1-based

    for (int i = 2; i <= n; ++i) {
        if (!(euclidean_distance(A(i - 1), A(i)) < euclidean_distance(B(i - 1), A(i)))) {
            detail::fail("molla", "|a_(i-1) a_i| < |b_(i-1) a_i|", i);
        }
        if (!(euclidean_distance(B(i - 1), B(i)) < euclidean_distance(A(i), B(i)))) {
            detail::fail("molla", "|b_(i-1) b_i| < |a_i b_i|", i);
        }
        if (!(projective_distance(A(i - 1), A(i), sys) > projective_distance(B(i - 1), A(i), sys))) {
            detail::fail("molla", "proj |a_(i-1) a_i| > proj |b_(i-1) a_i|", i);
        }
        if (!(projective_distance(B(i - 1), B(i), sys) > projective_distance(A(i), B(i), sys))) {
            detail::fail("molla", "proj |b_(i-1) b_i| > proj |a_i b_i|", i);
        }
        if (cone_index(A(i), B(i - 1), sys) != 3) {
            detail::fail("molla", "b_(i-1) inside C_3(a_i)", i);
        }
        if (cone_index(B(i), A(i), sys) != 4) {
            detail::fail("molla", "a_i inside C_4(b_i)", i);
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (const Point& p : s) {
            if (p.id != A(i).id && cone_index(A(i), p, sys) == 2) {
                detail::fail("molla", "C_2(a_i) must be empty", i);
            }
            if (p.id != B(i).id && cone_index(B(i), p, sys) == 5) {
                detail::fail("molla", "C_5(b_i) must be empty", i);
            }
        }
    }
    if (!is_general_position(s, sys)) detail::fail("molla", "general position", 0);
    if (!is_convex_position(s)) detail::fail("molla", "convex position", 0);
    return out;
}

// Five points: an apex and four near-unit neighbors just inside cones 1..4,
// placed so the filtered graph keeps only the arc a-b4-b3-b2-b1 and drops
// the direct edge into b1. Radial shrinks grow with the cone index so each
// ring chord projects shorter than the spoke it replaces.
inline LabeledPointSet gen_convex_lb(double epsilon) {
    if (!(epsilon > 0.0) || epsilon > 1e-3) {
        throw ConstructionError("convex lower-bound set requires 0 < epsilon <= 1e-3");
    }
    const double third = std::numbers::pi / 3.0;
    // Angular retreats from the counterclockwise cone boundaries and radial
    // shrinks, in units of epsilon. The shrink gaps dominate the angular
    // terms so each b_(i+1) drops below the cone boundary seen from b_i.
    const double c[4] = {0.2, 0.3, 0.4, 0.5};
    const double d[4] = {0.0, 0.5, 1.1, 1.8};

    std::vector<std::pair<double, double>> coords;
    coords.emplace_back(0.0, 0.0);
    for (int i = 0; i < 4; ++i) {
        const double phi = (i + 1) * third - c[i] * epsilon;
        const double r = 1.0 - d[i] * epsilon;
        coords.emplace_back(r * std::cos(phi), r * std::sin(phi));
    }

    LabeledPointSet out;
    out.points = PointSet(std::move(coords));
    out.labels["a"] = 0;
    for (int i = 1; i <= 4; ++i) out.labels["b_" + std::to_string(i)] = i;

    const ConeSystem sys(6);
    const PointSet& s = out.points;
    const Point& a = s[0];
    auto B = [&](int i) { return s[i]; };

    for (int i = 1; i <= 4; ++i) {
        if (cone_index(a, B(i), sys) != i) {
            detail::fail("convex-lb", "b_i strictly inside C_i(a)", i);
        }
        if (std::abs(euclidean_distance(a, B(i)) - 1.0) > 2.0 * epsilon) {
            detail::fail("convex-lb", "|a b_i| within 1 +- 2 epsilon", i);
        }
    }
    for (int i = 1; i <= 3; ++i) {
        if (std::abs(euclidean_distance(B(i), B(i + 1)) - 1.0) > 2.0 * epsilon) {
            detail::fail("convex-lb", "|b_i b_(i+1)| within 1 +- 2 epsilon", i);
        }
        // b_(i+1) must fall in the same cone of b_i that contains a, and its
        // chord must project strictly shorter than the spoke from a.
        const int cone_of_a = cone_index(B(i), a, sys);
        if (cone_index(B(i), B(i + 1), sys) != cone_of_a) {
            detail::fail("convex-lb", "b_(i+1) in the cone of b_i containing a", i);
        }
        if (!(projective_distance(B(i + 1), B(i), sys) < projective_distance(a, B(i), sys))) {
            detail::fail("convex-lb", "proj |b_(i+1) b_i| < proj |a b_i|", i);
        }
    }
    if (!is_general_position(s, sys)) detail::fail("convex-lb", "general position", 0);
    if (!is_convex_position(s)) detail::fail("convex-lb", "convex position", 0);
    return out;
}

// Non-convex 4n-point family: two rays diverging by alpha carry zig-zag
// chains a_i, b_i whose cross segments run at exactly +-60 degrees; every
// point except a_1 is then slid along its supporting ray until each pair of
// parallel cone boundaries sits a fixed horizontal distance delta apart,
// and c_i (d_i) are copies of b_i (a_i) shifted vertically by +-2*delta.
inline LabeledPointSet gen_nonconvex(int n, double alpha, double delta_fraction) {
    if (n < 2) throw ConstructionError("nonconvex zigzag requires n >= 2");
    if (!(alpha > 0.0) || !(alpha < 2.0)) {
        throw ConstructionError("nonconvex zigzag requires 0 < alpha < 2");
    }
    if (!(delta_fraction > 0.0)) {
        throw ConstructionError("nonconvex zigzag requires delta_fraction > 0");
    }

    const double third = std::numbers::pi / 3.0;
    const double sqrt3 = std::numbers::sqrt3;

    std::vector<Point> a(static_cast<std::size_t>(n));
    std::vector<Point> b(static_cast<std::size_t>(n));
    a[0] = Point{0.0, 0.0, -1};
    b[0] = Point{std::cos(third), std::sin(third), -1};
    for (int i = 1; i < n; ++i) {
        const std::size_t s = static_cast<std::size_t>(i);
        a[s] = detail::intersect_lines(a[0], -alpha, b[s - 1], -third);
        b[s] = detail::intersect_lines(b[0], alpha, a[s], third);
    }

    // The reflected segments meet both rays at exactly pi/3 to within
    // floating error; anything larger means the intersections degenerated.
    auto angle_at = [](const Point& apex, const Point& p, const Point& q) {
        const double a1 = std::atan2(p.y - apex.y, p.x - apex.x);
        const double a2 = std::atan2(q.y - apex.y, q.x - apex.x);
        double diff = std::abs(a1 - a2);
        if (diff > std::numbers::pi) diff = kTwoPi - diff;
        return diff;
    };
    for (int i = 1; i < n; ++i) {
        const std::size_t s = static_cast<std::size_t>(i);
        if (std::abs(angle_at(a[s], b[s - 1], b[s]) - third) > 1e-9) {
            detail::fail("nonconvex", "zigzag angle at a_i is pi/3", i + 1);
        }
    }
    for (int i = 0; i + 1 < n; ++i) {
        const std::size_t s = static_cast<std::size_t>(i);
        if (std::abs(angle_at(b[s], a[s], a[s + 1]) - third) > 1e-9) {
            detail::fail("nonconvex", "zigzag angle at b_i is pi/3", i + 1);
        }
    }

    const double step = euclidean_distance(a[0], a[1]);
    const double bound = step * std::sin(alpha) / 2.0;
    const double delta = delta_fraction * bound;
    if (!(delta < bound)) {
        throw ConstructionError(
            "nonconvex zigzag: shift delta must be strictly less than |a_1 a_2| * sin(alpha) / 2");
    }

    // Slide every point except a_1 rightward along its supporting ray so
    // that both families of parallel cone boundaries end up a horizontal
    // distance delta apart: b_i's downward boundary sits delta right of
    // a_i's upward boundary, and a_(i+1) sits delta right of b_i's downward
    // boundary toward a_(i+1). A shift by t along a ray changes those two
    // horizontal offsets by t*M and t*P respectively, so the required
    // shifts propagate left to right.
    const double plus = std::cos(alpha) + std::sin(alpha) / sqrt3;
    const double minus = std::cos(alpha) - std::sin(alpha) / sqrt3;
    if (!(minus > 0.0)) {
        throw ConstructionError("nonconvex zigzag: alpha too large for the shift step");
    }
    {
        double t_shift = 0.0;  // a_i slide along r_a; zero for a_1
        for (int i = 0; i < n; ++i) {
            const std::size_t s = static_cast<std::size_t>(i);
            a[s].x += t_shift * std::cos(alpha);
            a[s].y -= t_shift * std::sin(alpha);
            const double s_shift = (delta + t_shift * plus) / minus;
            b[s].x += s_shift * std::cos(alpha);
            b[s].y += s_shift * std::sin(alpha);
            t_shift = (delta + s_shift * plus) / minus;
        }
    }

    std::vector<std::pair<double, double>> coords;
    coords.reserve(static_cast<std::size_t>(4 * n));
    LabeledPointSet out;
    for (int i = 0; i < n; ++i) {
        coords.emplace_back(a[static_cast<std::size_t>(i)].x, a[static_cast<std::size_t>(i)].y);
        out.labels["a_" + std::to_string(i + 1)] = i;
    }
    for (int i = 0; i < n; ++i) {
        coords.emplace_back(b[static_cast<std::size_t>(i)].x, b[static_cast<std::size_t>(i)].y);
        out.labels["b_" + std::to_string(i + 1)] = n + i;
    }
    for (int i = 0; i < n; ++i) {
        coords.emplace_back(b[static_cast<std::size_t>(i)].x,
                            b[static_cast<std::size_t>(i)].y + 2.0 * delta);
        out.labels["c_" + std::to_string(i + 1)] = 2 * n + i;
    }
    for (int i = 0; i < n; ++i) {
        coords.emplace_back(a[static_cast<std::size_t>(i)].x,
                            a[static_cast<std::size_t>(i)].y - 2.0 * delta);
        out.labels["d_" + std::to_string(i + 1)] = 3 * n + i;
    }
    out.points = PointSet(std::move(coords));

    const ConeSystem sys(6);
    const PointSet& s = out.points;
    auto A = [&](int i) { return s[i - 1]; };
    auto B = [&](int i) { return s[n + i - 1]; };
    auto C = [&](int i) { return s[2 * n + i - 1]; };
    auto D = [&](int i) { return s[3 * n + i - 1]; };

    for (int i = 1; i <= n; ++i) {
        const double gap = (B(i).x - A(i).x) - (B(i).y - A(i).y) / sqrt3;
        if (std::abs(gap - delta) > 1e-9 * (1.0 + std::abs(B(i).x))) {
            detail::fail("nonconvex", "horizontal cone-boundary gap equals delta", i);
        }
    }
    for (int i = 1; i < n; ++i) {
        const double gap = (A(i + 1).x - B(i).x) + (A(i + 1).y - B(i).y) / sqrt3;
        if (std::abs(gap - delta) > 1e-9 * (1.0 + std::abs(A(i + 1).x))) {
            detail::fail("nonconvex", "horizontal gap to the next lower point equals delta", i);
        }
    }
    for (int i = 1; i < n; ++i) {
        // Wedge apex between the upward cone boundaries of a_i and a_(i+1):
        // b_i must clear it by less than the 2*delta lift of c_i.
        const Point y = detail::intersect_lines(A(i), third, A(i + 1), 2.0 * third);
        if (!(euclidean_distance(B(i), y) < 2.0 * delta)) {
            detail::fail("nonconvex", "|b_i y| < 2 delta below the c_i lift", i);
        }
        if (cone_index(A(i), C(i), sys) != 2) {
            detail::fail("nonconvex", "c_i inside C_2(a_i)", i);
        }
        if (cone_index(A(i + 1), C(i), sys) != 2) {
            detail::fail("nonconvex", "c_i inside C_2(a_(i+1))", i);
        }
        if (cone_index(B(i + 1), C(i), sys) != 4) {
            detail::fail("nonconvex", "c_i inside C_4(b_(i+1))", i);
        }
    }
    for (int i = 1; i <= n; ++i) {
        if (i >= 2 && cone_index(B(i - 1), D(i), sys) != 5) {
            detail::fail("nonconvex", "d_i inside C_5(b_(i-1))", i);
        }
        if (cone_index(B(i), D(i), sys) != 5) {
            detail::fail("nonconvex", "d_i inside C_5(b_i)", i);
        }
        if (i < n && cone_index(A(i + 1), D(i), sys) != 3) {
            detail::fail("nonconvex", "d_i inside C_3(a_(i+1))", i);
        }
    }
    if (!is_general_position(s, sys)) detail::fail("nonconvex", "general position", 0);
    if (is_convex_position(s)) detail::fail("nonconvex", "set must not be in convex position", 0);
    return out;
}

// Random points on the unit circle, sorted by angle: convex by placement,
// resampled until the general-position predicate holds.
inline PointSet gen_random_convex(int n, std::uint64_t seed) {
    if (n < 3) throw ConstructionError("random convex set requires n >= 3");
    const ConeSystem sys(6);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<double> angles(static_cast<std::size_t>(n));
        for (double& t : angles) t = detail::uniform_unit(rng) * kTwoPi;
        std::sort(angles.begin(), angles.end());
        std::vector<std::pair<double, double>> coords;
        coords.reserve(angles.size());
        for (double t : angles) coords.emplace_back(std::cos(t), std::sin(t));
        try {
            PointSet s(std::move(coords));
            if (is_general_position(s, sys) && is_convex_position(s)) return s;
        } catch (const std::invalid_argument&) {
            // duplicate angles; redraw
        }
    }
    throw ConstructionError("random convex set failed to reach general position");
}

// Uniform points in the unit square, resampled to general position.
inline PointSet gen_random_general(int n, std::uint64_t seed) {
    if (n < 1) throw ConstructionError("random general set requires n >= 1");
    const ConeSystem sys(6);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<std::pair<double, double>> coords;
        coords.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            coords.emplace_back(detail::uniform_unit(rng), detail::uniform_unit(rng));
        }
        try {
            PointSet s(std::move(coords));
            if (is_general_position(s, sys)) return s;
        } catch (const std::invalid_argument&) {
            // coincident points; redraw
        }
    }
    throw ConstructionError("random general set failed to reach general position");
}

inline LabeledPointSet generate(const ConstructionSpec& spec) {
    switch (spec.family) {
        case ConstructionFamily::MollaStrip:
            return gen_molla(spec.n, spec.alpha, spec.epsilon);
        case ConstructionFamily::ConvexLowerBound:
            return gen_convex_lb(spec.epsilon);
        case ConstructionFamily::NonConvexZigzag:
            return gen_nonconvex(spec.n, spec.alpha, spec.delta_fraction);
        case ConstructionFamily::RandomConvex:
            return LabeledPointSet{gen_random_convex(spec.n, spec.seed), {}};
        case ConstructionFamily::RandomGeneral:
            return LabeledPointSet{gen_random_general(spec.n, spec.seed), {}};
    }
    throw std::invalid_argument("unknown construction family");
}

}  // namespace conespan
