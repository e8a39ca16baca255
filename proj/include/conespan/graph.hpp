#pragma once

// Construction of the cone graph families: Yao and Theta by nearest-per-cone
// selection, YaoYao and ThetaTheta by the incoming-edge filtering step, the
// two half-Theta-6 subgraphs, and cone-monotone paths.

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conespan/geometry.hpp"

namespace conespan {

enum class Family { Yao, Theta, YaoYao, ThetaTheta, HalfThetaOdd, HalfThetaEven };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::Yao: return "yao";
        case Family::Theta: return "theta";
        case Family::YaoYao: return "yaoyao";
        case Family::ThetaTheta: return "thetatheta";
        case Family::HalfThetaOdd: return "half-theta-odd";
        case Family::HalfThetaEven: return "half-theta-even";
    }
    return "unknown";
}

inline std::optional<Family> family_from_name(const std::string& name) {
    if (name == "yao") return Family::Yao;
    if (name == "theta") return Family::Theta;
    if (name == "yaoyao") return Family::YaoYao;
    if (name == "thetatheta") return Family::ThetaTheta;
    if (name == "half-theta-odd") return Family::HalfThetaOdd;
    if (name == "half-theta-even") return Family::HalfThetaEven;
    return std::nullopt;
}

struct DirectedEdge {
    int src = -1;
    int dst = -1;
    int cone_at_src = 0;
    double euclid = 0.0;
    double projective = 0.0;
};

// A directed geometric graph over a point set. Edges are kept sorted by
// (src, cone_at_src) so serialized output is byte-stable. tie_events counts
// equal-metric candidates met during nearest/shortest selection; on
// general-position inputs it stays zero.
struct ConeGraph {
    PointSet points;
    ConeSystem sys{6};
    Family family = Family::Theta;
    std::vector<DirectedEdge> edges;
    long tie_events = 0;

    const DirectedEdge* edge_from(int src, int cone) const {
        for (const DirectedEdge& e : edges) {
            if (e.src == src && e.cone_at_src == cone) return &e;
        }
        return nullptr;
    }
};

namespace detail {

inline ConeGraph build_nearest_per_cone(const PointSet& s, const ConeSystem& sys,
                                        bool projective_metric) {
    ConeGraph g;
    g.points = s;
    g.sys = sys;
    g.family = projective_metric ? Family::Theta : Family::Yao;

    const int n = s.size();
    std::vector<int> best(static_cast<std::size_t>(sys.k), -1);
    std::vector<double> best_metric(static_cast<std::size_t>(sys.k), 0.0);
    std::vector<DirectedEdge> best_edge(static_cast<std::size_t>(sys.k));

    for (int src = 0; src < n; ++src) {
        std::fill(best.begin(), best.end(), -1);
        for (int dst = 0; dst < n; ++dst) {
            if (dst == src) continue;
            DirectedEdge e;
            e.src = src;
            e.dst = dst;
            e.cone_at_src = cone_index(s[src], s[dst], sys);
            e.euclid = euclidean_distance(s[src], s[dst]);
            e.projective = projective_distance(s[src], s[dst], sys);
            const double metric = projective_metric ? e.projective : e.euclid;
            const std::size_t c = static_cast<std::size_t>(e.cone_at_src - 1);
            if (best[c] < 0 || metric < best_metric[c]) {
                best[c] = dst;
                best_metric[c] = metric;
                best_edge[c] = e;
            } else if (metric == best_metric[c]) {
                // Tie: the smaller destination id was seen first and stays.
                ++g.tie_events;
            }
        }
        for (std::size_t c = 0; c < static_cast<std::size_t>(sys.k); ++c) {
            if (best[c] >= 0) g.edges.push_back(best_edge[c]);
        }
    }
    return g;
}

}  // namespace detail

// Theta graph: per cone, an edge from each point to the candidate that
// minimizes the projective distance.
inline ConeGraph build_theta(const PointSet& s, const ConeSystem& sys) {
    return detail::build_nearest_per_cone(s, sys, true);
}

// Yao graph: per cone, an edge to the Euclidean-nearest candidate.
inline ConeGraph build_yao(const PointSet& s, const ConeSystem& sys) {
    return detail::build_nearest_per_cone(s, sys, false);
}

// Second filtering step: for each vertex a and each cone i, among incoming
// edges whose tail lies in cone i of a, keep only the shortest one by the
// family's metric (measured at the tail). Yao input yields YaoYao, Theta
// input yields ThetaTheta.
inline ConeGraph filter_incoming(const ConeGraph& g) {
    if (g.family != Family::Yao && g.family != Family::Theta) {
        throw std::invalid_argument("filter requires unfiltered family");
    }
    const bool projective_metric = g.family == Family::Theta;

    ConeGraph out;
    out.points = g.points;
    out.sys = g.sys;
    out.family = projective_metric ? Family::ThetaTheta : Family::YaoYao;
    out.tie_events = g.tie_events;

    // (head, cone at head containing tail) -> retained edge index
    std::map<std::pair<int, int>, std::size_t> kept;
    for (std::size_t idx = 0; idx < g.edges.size(); ++idx) {
        const DirectedEdge& e = g.edges[idx];
        const int head_cone = cone_index(g.points[e.dst], g.points[e.src], g.sys);
        const double metric = projective_metric ? e.projective : e.euclid;
        const auto key = std::make_pair(e.dst, head_cone);
        auto it = kept.find(key);
        if (it == kept.end()) {
            kept.emplace(key, idx);
            continue;
        }
        const DirectedEdge& cur = g.edges[it->second];
        const double cur_metric = projective_metric ? cur.projective : cur.euclid;
        if (metric < cur_metric || (metric == cur_metric && e.src < cur.src)) {
            if (metric == cur_metric) ++out.tie_events;
            it->second = idx;
        } else if (metric == cur_metric) {
            ++out.tie_events;
        }
    }

    std::vector<bool> keep_flags(g.edges.size(), false);
    for (const auto& [key, idx] : kept) keep_flags[idx] = true;
    for (std::size_t idx = 0; idx < g.edges.size(); ++idx) {
        if (keep_flags[idx]) out.edges.push_back(g.edges[idx]);
    }
    return out;
}

enum class HalfParity { Odd, Even };

// Subgraph of Theta-6 restricted to edges in odd (cones 1,3,5) or even
// (cones 2,4,6) cones. The two halves partition the Theta-6 edge set.
inline ConeGraph half_theta(const ConeGraph& g, HalfParity parity) {
    if (g.family != Family::Theta) {
        throw std::invalid_argument("half-theta requires a theta graph");
    }
    if (g.sys.k != 6) {
        throw std::invalid_argument("half-theta is defined for k = 6 only");
    }
    ConeGraph out;
    out.points = g.points;
    out.sys = g.sys;
    out.family = parity == HalfParity::Odd ? Family::HalfThetaOdd : Family::HalfThetaEven;
    out.tie_events = g.tie_events;
    const int want = parity == HalfParity::Odd ? 1 : 0;
    for (const DirectedEdge& e : g.edges) {
        if (e.cone_at_src % 2 == want) out.edges.push_back(e);
    }
    return out;
}

// Maximal path from `start` that repeatedly follows the Theta edge in cone
// `cone`. Monotone along that cone's bisector, hence finite.
inline std::vector<int> cone_path(const ConeGraph& g, int start, int cone) {
    if (g.family != Family::Theta) {
        throw std::invalid_argument("cone path requires a theta graph");
    }
    if (start < 0 || start >= g.points.size()) {
        throw std::invalid_argument("cone path start out of range");
    }
    if (cone < 1 || cone > g.sys.k) {
        throw std::invalid_argument("cone path cone index out of range");
    }
    std::vector<int> path{start};
    int current = start;
    const int limit = g.points.size();
    while (static_cast<int>(path.size()) <= limit) {
        const DirectedEdge* e = g.edge_from(current, cone);
        if (e == nullptr) return path;
        current = e->dst;
        path.push_back(current);
    }
    throw std::logic_error("cone path exceeded vertex count; graph is inconsistent");
}

}  // namespace conespan
