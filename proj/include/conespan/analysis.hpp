#pragma once

// Shortest-path machinery and spanner diagnostics: exact spanning ratio
// with witness pair and path, per-edge stretch for filtered graphs, crossing
// counts and degree statistics.

#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "conespan/graph.hpp"

namespace conespan {

enum class Directedness { Directed, Undirected };

inline constexpr double kInfiniteDistance = std::numeric_limits<double>::infinity();

struct PathQueryResult {
    double length = 0.0;
    std::vector<int> vertices;
};

struct DegreeStats {
    int max_out = 0;
    int max_in = 0;
    int max_total = 0;
    std::vector<int> out_degree;
    std::vector<int> in_degree;
};

struct StretchReport {
    double ratio = 0.0;  // +infinity when any pair is disconnected
    int witness_src = -1;
    int witness_dst = -1;
    std::vector<int> witness_path;
    int max_degree = 0;
    long crossing_count = 0;
    long disconnected_pairs = 0;
};

namespace detail {

using Adjacency = std::vector<std::vector<std::pair<int, double>>>;

inline Adjacency build_adjacency(const ConeGraph& g, Directedness mode) {
    Adjacency adj(static_cast<std::size_t>(g.points.size()));
    for (const DirectedEdge& e : g.edges) {
        adj[static_cast<std::size_t>(e.src)].emplace_back(e.dst, e.euclid);
        if (mode == Directedness::Undirected) {
            adj[static_cast<std::size_t>(e.dst)].emplace_back(e.src, e.euclid);
        }
    }
    return adj;
}

struct ShortestPathTree {
    std::vector<double> dist;
    std::vector<int> parent;
};

inline ShortestPathTree dijkstra(const Adjacency& adj, int source) {
    const std::size_t n = adj.size();
    ShortestPathTree t;
    t.dist.assign(n, kInfiniteDistance);
    t.parent.assign(n, -1);
    t.dist[static_cast<std::size_t>(source)] = 0.0;

    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    queue.emplace(0.0, source);
    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (d > t.dist[static_cast<std::size_t>(u)]) continue;
        for (const auto& [v, w] : adj[static_cast<std::size_t>(u)]) {
            const double nd = d + w;
            if (nd < t.dist[static_cast<std::size_t>(v)]) {
                t.dist[static_cast<std::size_t>(v)] = nd;
                t.parent[static_cast<std::size_t>(v)] = u;
                queue.emplace(nd, v);
            }
        }
    }
    return t;
}

inline std::vector<int> extract_path(const ShortestPathTree& t, int source, int target) {
    std::vector<int> path;
    for (int v = target; v != -1; v = t.parent[static_cast<std::size_t>(v)]) {
        path.push_back(v);
        if (v == source) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace detail

// Shortest weighted path between two vertices using Euclidean edge weights;
// nullopt when unreachable. Undirected mode treats every directed edge as
// traversable both ways.
inline std::optional<PathQueryResult> shortest_path(const ConeGraph& g, int u, int v,
                                                    Directedness mode) {
    if (u < 0 || u >= g.points.size() || v < 0 || v >= g.points.size()) {
        throw std::invalid_argument("shortest path endpoint out of range");
    }
    if (u == v) return PathQueryResult{0.0, {u}};
    const auto adj = detail::build_adjacency(g, mode);
    const auto tree = detail::dijkstra(adj, u);
    if (tree.dist[static_cast<std::size_t>(v)] == kInfiniteDistance) return std::nullopt;
    PathQueryResult r;
    r.length = tree.dist[static_cast<std::size_t>(v)];
    r.vertices = detail::extract_path(tree, u, v);
    return r;
}

inline DegreeStats degree_stats(const ConeGraph& g) {
    DegreeStats d;
    d.out_degree.assign(static_cast<std::size_t>(g.points.size()), 0);
    d.in_degree.assign(static_cast<std::size_t>(g.points.size()), 0);
    for (const DirectedEdge& e : g.edges) {
        ++d.out_degree[static_cast<std::size_t>(e.src)];
        ++d.in_degree[static_cast<std::size_t>(e.dst)];
    }
    for (int i = 0; i < g.points.size(); ++i) {
        const std::size_t s = static_cast<std::size_t>(i);
        d.max_out = std::max(d.max_out, d.out_degree[s]);
        d.max_in = std::max(d.max_in, d.in_degree[s]);
        d.max_total = std::max(d.max_total, d.out_degree[s] + d.in_degree[s]);
    }
    return d;
}

// Number of unordered pairs of distinct undirected segments that cross.
// Directed edges are deduplicated into undirected segments first.
inline long crossing_count(const ConeGraph& g) {
    std::set<std::pair<int, int>> segs;
    for (const DirectedEdge& e : g.edges) {
        segs.emplace(std::min(e.src, e.dst), std::max(e.src, e.dst));
    }
    std::vector<std::pair<int, int>> list(segs.begin(), segs.end());
    long count = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::size_t j = i + 1; j < list.size(); ++j) {
            if (segments_cross(g.points[list[i].first], g.points[list[i].second],
                               g.points[list[j].first], g.points[list[j].second])) {
                ++count;
            }
        }
    }
    return count;
}

// Maximum over point pairs of graph distance divided by Euclidean distance,
// with the witness pair and path. A disconnected pair makes the ratio
// +infinity; disconnected_pairs is counted instead of throwing. Equal
// ratios resolve to the lexicographically smallest witness pair.
inline StretchReport spanning_ratio(const ConeGraph& g, Directedness mode) {
    const int n = g.points.size();
    if (n < 2) {
        throw std::invalid_argument("spanning ratio requires at least two points");
    }
    const auto adj = detail::build_adjacency(g, mode);

    StretchReport report;
    double best = -1.0;
    for (int src = 0; src < n; ++src) {
        const auto tree = detail::dijkstra(adj, src);
        const int first_dst = mode == Directedness::Undirected ? src + 1 : 0;
        for (int dst = first_dst; dst < n; ++dst) {
            if (dst == src) continue;
            const double d = tree.dist[static_cast<std::size_t>(dst)];
            if (d == kInfiniteDistance) {
                ++report.disconnected_pairs;
                continue;
            }
            const double stretch = d / euclidean_distance(g.points[src], g.points[dst]);
            if (stretch > best) {
                best = stretch;
                report.witness_src = src;
                report.witness_dst = dst;
            }
        }
    }

    if (report.witness_src >= 0) {
        const auto tree = detail::dijkstra(adj, report.witness_src);
        report.witness_path = detail::extract_path(tree, report.witness_src, report.witness_dst);
    }
    report.ratio = report.disconnected_pairs > 0 ? kInfiniteDistance : best;
    report.max_degree = degree_stats(g).max_total;
    report.crossing_count = crossing_count(g);
    return report;
}

struct EdgeStretch {
    DirectedEdge edge;
    double stretch = 0.0;
};

struct PerEdgeStretchReport {
    std::vector<EdgeStretch> items;
    std::size_t max_index = 0;

    double max_stretch() const {
        return items.empty() ? 0.0 : items[max_index].stretch;
    }
};

// For every edge a->b of the base Theta graph, the undirected distance in
// the filtered ThetaTheta graph divided by |ab|.
inline PerEdgeStretchReport per_edge_stretch(const ConeGraph& base, const ConeGraph& filtered) {
    if (base.family != Family::Theta || filtered.family != Family::ThetaTheta) {
        throw std::invalid_argument("per-edge stretch expects a theta graph and its filtered graph");
    }
    if (base.sys.k != 6 || filtered.sys.k != 6) {
        throw std::invalid_argument("per-edge stretch is defined for k = 6");
    }
    if (base.points.size() != filtered.points.size()) {
        throw std::invalid_argument("per-edge stretch requires matching point sets");
    }
    for (int i = 0; i < base.points.size(); ++i) {
        if (base.points[i].x != filtered.points[i].x || base.points[i].y != filtered.points[i].y) {
            throw std::invalid_argument("per-edge stretch requires matching point sets");
        }
    }

    const auto adj = detail::build_adjacency(filtered, Directedness::Undirected);
    PerEdgeStretchReport report;
    int cached_src = -1;
    detail::ShortestPathTree tree;
    for (const DirectedEdge& e : base.edges) {
        if (e.src != cached_src) {
            tree = detail::dijkstra(adj, e.src);
            cached_src = e.src;
        }
        EdgeStretch item;
        item.edge = e;
        item.stretch = tree.dist[static_cast<std::size_t>(e.dst)] / e.euclid;
        report.items.push_back(item);
        if (item.stretch > report.max_stretch()) {
            report.max_index = report.items.size() - 1;
        }
    }
    return report;
}

}  // namespace conespan
