#pragma once

// Reproducible verification suites bundling the generators, builders and
// analysis into named checks with measured value, bound and tolerance, plus
// the independent oracles they compare against (exhaustive per-cone nearest
// selection and dense cubic all-pairs shortest paths).

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "conespan/analysis.hpp"
#include "conespan/constructions.hpp"
#include "conespan/graph.hpp"

namespace conespan {

struct VerificationCheck {
    std::string id;
    bool pass = false;
    double measured = 0.0;
    double bound = 0.0;
    std::string comparison;  // "<=", ">=", "==" ...
    double tolerance = 0.0;
    std::string note;
};

struct VerificationOutcome {
    std::string suite;
    std::string claim;
    std::vector<VerificationCheck> checks;

    bool pass() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }

    void add(const std::string& id, double measured, const std::string& cmp, double bound,
             double tolerance, bool ok, const std::string& note = "") {
        checks.push_back(VerificationCheck{id, ok, measured, bound, cmp, tolerance, note});
    }

    void add_le(const std::string& id, double measured, double bound, double tol,
                const std::string& note = "") {
        add(id, measured, "<=", bound, tol, measured <= bound + tol, note);
    }

    void add_ge(const std::string& id, double measured, double bound, double tol,
                const std::string& note = "") {
        add(id, measured, ">=", bound, tol, measured >= bound - tol, note);
    }

    void add_flag(const std::string& id, bool ok, const std::string& note = "") {
        add(id, ok ? 1.0 : 0.0, "==", 1.0, 0.0, ok, note);
    }
};

inline nlohmann::json outcome_to_json(const VerificationOutcome& o) {
    nlohmann::json j;
    j["suite"] = o.suite;
    j["claim"] = o.claim;
    j["pass"] = o.pass();
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : o.checks) {
        nlohmann::json cj{{"id", c.id},         {"pass", c.pass},
                          {"measured", c.measured}, {"comparison", c.comparison},
                          {"bound", c.bound},   {"tolerance", c.tolerance}};
        if (!c.note.empty()) cj["note"] = c.note;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

// ---------------------------------------------------------------------------
// Oracles, deliberately naive: used only to cross-check the production path.

namespace oracle {

// Exhaustive per-cone nearest selection: for every vertex and cone, list
// the candidates, then pick the metric minimum with smallest-id ties.
inline std::vector<DirectedEdge> nearest_per_cone(const PointSet& s, const ConeSystem& sys,
                                                  bool projective_metric) {
    std::vector<DirectedEdge> edges;
    for (int src = 0; src < s.size(); ++src) {
        for (int cone = 1; cone <= sys.k; ++cone) {
            int best = -1;
            double best_metric = 0.0;
            for (int dst = 0; dst < s.size(); ++dst) {
                if (dst == src || cone_index(s[src], s[dst], sys) != cone) continue;
                const double metric = projective_metric ? projective_distance(s[src], s[dst], sys)
                                                        : euclidean_distance(s[src], s[dst]);
                if (best < 0 || metric < best_metric ||
                    (metric == best_metric && dst < best)) {
                    best = dst;
                    best_metric = metric;
                }
            }
            if (best >= 0) {
                DirectedEdge e;
                e.src = src;
                e.dst = best;
                e.cone_at_src = cone;
                e.euclid = euclidean_distance(s[src], s[best]);
                e.projective = projective_distance(s[src], s[best], sys);
                edges.push_back(e);
            }
        }
    }
    return edges;
}

// Dense cubic all-pairs shortest paths over Euclidean edge weights.
inline std::vector<std::vector<double>> floyd_warshall(const ConeGraph& g, Directedness mode) {
    const std::size_t n = static_cast<std::size_t>(g.points.size());
    std::vector<std::vector<double>> d(n, std::vector<double>(n, kInfiniteDistance));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
    for (const DirectedEdge& e : g.edges) {
        const std::size_t u = static_cast<std::size_t>(e.src);
        const std::size_t v = static_cast<std::size_t>(e.dst);
        d[u][v] = std::min(d[u][v], e.euclid);
        if (mode == Directedness::Undirected) d[v][u] = std::min(d[v][u], e.euclid);
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (d[i][k] == kInfiniteDistance) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const double via = d[i][k] + d[k][j];
                if (via < d[i][j]) d[i][j] = via;
            }
        }
    }
    return d;
}

}  // namespace oracle

inline bool same_edge_set(const std::vector<DirectedEdge>& a, const std::vector<DirectedEdge>& b) {
    auto key = [](const DirectedEdge& e) { return std::make_tuple(e.src, e.cone_at_src, e.dst); };
    std::set<std::tuple<int, int, int>> sa, sb;
    for (const auto& e : a) sa.insert(key(e));
    for (const auto& e : b) sb.insert(key(e));
    return sa == sb;
}

inline std::set<std::pair<int, int>> undirected_edge_set(const ConeGraph& g) {
    std::set<std::pair<int, int>> s;
    for (const DirectedEdge& e : g.edges) {
        s.emplace(std::min(e.src, e.dst), std::max(e.src, e.dst));
    }
    return s;
}

// n-1 points spread around a circle centered on the n-th point: the center
// collects one incoming edge from every rim point in both Yao and Theta.
inline PointSet make_star(int n, std::uint64_t seed = 7) {
    if (n < 8) throw std::invalid_argument("star fixture requires n >= 8");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<double, double>> coords;
    const int rim = n - 1;
    for (int i = 0; i < rim; ++i) {
        const double jitter =
            (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 0.2 * kTwoPi / rim;
        const double t = kTwoPi * i / rim + jitter;
        coords.emplace_back(std::cos(t), std::sin(t));
    }
    coords.emplace_back(0.0, 0.0);
    return PointSet(std::move(coords));
}

// ---------------------------------------------------------------------------
// Suites

// Theta-Theta-6 on convex point sets: spanning ratio at most 8, and every
// Theta-6 edge is spanned in the filtered graph by a path at most 4 times
// its length.
inline VerificationOutcome suite_convex_upper(std::vector<int> ns = {10, 30, 100},
                                              int seeds = 50) {
    VerificationOutcome o;
    o.suite = "convex-upper";
    o.claim = "thetatheta-6 on points in convex position is an 8-spanner; "
              "each theta-6 edge is spanned by a path at most 4 times its length";
    const ConeSystem sys(6);
    for (int n : ns) {
        double worst_ratio = 0.0;
        double worst_edge = 0.0;
        for (int seed = 1; seed <= seeds; ++seed) {
            const PointSet s = gen_random_convex(n, static_cast<std::uint64_t>(seed));
            const ConeGraph theta = build_theta(s, sys);
            const ConeGraph tt = filter_incoming(theta);
            const StretchReport r = spanning_ratio(tt, Directedness::Undirected);
            worst_ratio = std::max(worst_ratio, r.ratio);
            worst_edge = std::max(worst_edge, per_edge_stretch(theta, tt).max_stretch());
        }
        o.add_le("ratio-n" + std::to_string(n), worst_ratio, 8.0, 1e-6,
                 std::to_string(seeds) + " seeds");
        o.add_le("edge-stretch-n" + std::to_string(n), worst_edge, 4.0, 1e-6,
                 std::to_string(seeds) + " seeds");
    }
    return o;
}

// Five-point convex set whose filtered graph stretches one pair to 4.
inline VerificationOutcome suite_convex_lower(double epsilon = 1e-6) {
    VerificationOutcome o;
    o.suite = "convex-lower";
    o.claim = "thetatheta-6 on points in convex position can have spanning ratio 4";
    const ConeSystem sys(6);
    const LabeledPointSet lp = gen_convex_lb(epsilon);
    const ConeGraph theta = build_theta(lp.points, sys);
    const ConeGraph tt = filter_incoming(theta);
    const StretchReport r = spanning_ratio(tt, Directedness::Undirected);

    o.add_ge("ratio-lower", r.ratio, 3.99, 0.0);
    o.add_le("ratio-upper", r.ratio, 4.01, 0.0);
    const bool witness_ok =
        r.witness_src == lp.label("a") && r.witness_dst == lp.label("b_1");
    o.add_flag("witness-pair", witness_ok, "expected (a, b_1)");
    const std::vector<int> want{lp.label("a"), lp.label("b_4"), lp.label("b_3"),
                                lp.label("b_2"), lp.label("b_1")};
    o.add_flag("witness-path", r.witness_path == want, "expected a-b_4-b_3-b_2-b_1");
    return o;
}

// Strip family on which YaoYao-6 degenerates to a Hamiltonian path while
// ThetaTheta-6 keeps a short zig-zag.
inline VerificationOutcome suite_molla_yy6(std::vector<int> ns = {4, 8, 16},
                                           double alpha = 0.02, double epsilon = 1e-4) {
    VerificationOutcome o;
    o.suite = "molla-yy6";
    o.claim = "yaoyao-6 is not a spanner even in convex position: the a_n to b_n distance "
              "grows like 2n-1 unit lengths; thetatheta-6 stays an 8-spanner there";
    const ConeSystem sys(6);
    double previous = 0.0;
    for (int n : ns) {
        const LabeledPointSet lp = gen_molla(n, alpha, epsilon);
        const ConeGraph yy = filter_incoming(build_yao(lp.points, sys));
        const auto path = shortest_path(yy, lp.label("a_" + std::to_string(n)),
                                        lp.label("b_" + std::to_string(n)),
                                        Directedness::Undirected);
        const double d = path ? path->length : kInfiniteDistance;
        o.add_ge("yy-distance-n" + std::to_string(n), d, (2.0 * n - 1.0) * 0.95, 0.0,
                 "undirected a_n to b_n distance in yaoyao-6");
        o.add_flag("yy-distance-increasing-n" + std::to_string(n), d > previous,
                   "distance strictly increases with n");
        previous = d;

        const ConeGraph tt = filter_incoming(build_theta(lp.points, sys));
        const StretchReport r = spanning_ratio(tt, Directedness::Undirected);
        o.add_le("tt-ratio-n" + std::to_string(n), r.ratio, 8.0, 1e-6,
                 "thetatheta-6 on the same set");
    }
    return o;
}

// Non-convex family on which ThetaTheta-6 collapses to a single path and
// the a_n to b_n distance grows linearly while |a_n b_n| stays near one
// unit, so the spanning ratio is unbounded in n.
inline VerificationOutcome suite_nonconvex(std::vector<int> ns = {4, 8, 12, 16},
                                           double alpha = 0.01, double delta_fraction = 0.5,
                                           int property_n = 20) {
    VerificationOutcome o;
    o.suite = "nonconvex";
    o.claim = "thetatheta-6 has unbounded spanning ratio off convex position: the filtered "
              "graph is a 4n-1 edge path and d(a_n,b_n) exceeds (2n-1)*|a_1 b_1|";
    const ConeSystem sys(6);
    double first_ratio = -1.0, last_ratio = -1.0;
    for (int n : ns) {
        const LabeledPointSet lp = gen_nonconvex(n, alpha, delta_fraction);
        const ConeGraph tt = filter_incoming(build_theta(lp.points, sys));

        std::set<std::pair<int, int>> expect;
        auto add_edge = [&](const std::string& u, const std::string& v) {
            const int a = lp.label(u), b = lp.label(v);
            expect.emplace(std::min(a, b), std::max(a, b));
        };
        add_edge("a_1", "b_1");
        for (int i = 1; i <= n; ++i) {
            add_edge("a_" + std::to_string(i), "d_" + std::to_string(i));
            add_edge("b_" + std::to_string(i), "c_" + std::to_string(i));
        }
        for (int i = 1; i < n; ++i) {
            add_edge("d_" + std::to_string(i), "a_" + std::to_string(i + 1));
            add_edge("c_" + std::to_string(i), "b_" + std::to_string(i + 1));
        }
        const bool edges_ok = undirected_edge_set(tt) == expect;
        o.add_flag("edge-set-n" + std::to_string(n), edges_ok,
                   "filtered edge set equals the expected " + std::to_string(4 * n - 1) +
                       "-edge path");

        const auto path = shortest_path(tt, lp.label("a_" + std::to_string(n)),
                                        lp.label("b_" + std::to_string(n)),
                                        Directedness::Undirected);
        const double unit = euclidean_distance(lp.points[lp.label("a_1")],
                                               lp.points[lp.label("b_1")]);
        const double normalized = path ? path->length / unit : 0.0;
        o.add_ge("path-growth-n" + std::to_string(n), normalized, 0.95 * (2.0 * n - 1.0), 0.0,
                 "d(a_n,b_n) / |a_1 b_1|");

        const StretchReport r = spanning_ratio(tt, Directedness::Undirected);
        if (first_ratio < 0.0) first_ratio = r.ratio;
        last_ratio = r.ratio;
    }
    if (ns.size() >= 2) {
        o.add_ge("ratio-growth-factor", last_ratio / first_ratio, 3.0, 0.0,
                 "spanning ratio at n=" + std::to_string(ns.back()) + " over n=" +
                     std::to_string(ns.front()));
    }

    bool property_ok = true;
    std::string property_note = "cone-membership validation up to n=" + std::to_string(property_n);
    try {
        for (int n = 2; n <= property_n; ++n) gen_nonconvex(n, alpha, delta_fraction);
    } catch (const ConstructionError& e) {
        property_ok = false;
        property_note = e.what();
    }
    o.add_flag("containment-properties", property_ok, property_note);

    bool mutation_rejected = false;
    try {
        gen_nonconvex(6, alpha, 2.0 * delta_fraction);
    } catch (const ConstructionError&) {
        mutation_rejected = true;
    }
    o.add_flag("delta-bound-mutation", mutation_rejected,
               "doubling delta beyond its bound must fail the generator");
    return o;
}

// Both halves of Theta-6 on random general-position sets: no crossings and
// spanning ratio at most 2.
inline VerificationOutcome suite_half_theta6(std::vector<int> ns = {20, 50}, int seeds = 50) {
    VerificationOutcome o;
    o.suite = "half-theta6";
    o.claim = "each half of theta-6 is a plane 2-spanner";
    const ConeSystem sys(6);
    for (int n : ns) {
        double worst_ratio = 0.0;
        long worst_crossings = 0;
        for (int seed = 1; seed <= seeds; ++seed) {
            const PointSet s = gen_random_general(n, static_cast<std::uint64_t>(seed));
            const ConeGraph theta = build_theta(s, sys);
            for (HalfParity parity : {HalfParity::Odd, HalfParity::Even}) {
                const ConeGraph half = half_theta(theta, parity);
                const StretchReport r = spanning_ratio(half, Directedness::Undirected);
                worst_ratio = std::max(worst_ratio, r.ratio);
                worst_crossings = std::max(worst_crossings, r.crossing_count);
            }
        }
        o.add_le("crossings-n" + std::to_string(n), static_cast<double>(worst_crossings), 0.0,
                 0.0, std::to_string(seeds) + " seeds, both halves");
        o.add_le("ratio-n" + std::to_string(n), worst_ratio, 2.0, 1e-6,
                 std::to_string(seeds) + " seeds, both halves");
    }
    return o;
}

// Production builders and path engine against the naive oracles.
inline VerificationOutcome suite_oracle(int trials = 20, std::uint64_t seed_base = 1000) {
    VerificationOutcome o;
    o.suite = "oracle";
    o.claim = "per-cone nearest selection matches exhaustive scan; priority-queue shortest "
              "paths match dense cubic all-pairs distances";
    const ConeSystem sys(6);
    int selection_failures = 0;
    double worst_rel = 0.0;
    std::string seeds_note = "seeds";
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t seed = seed_base + static_cast<std::uint64_t>(t);
        const int n = 10 + (t * 90) / std::max(trials - 1, 1);  // 10..100
        seeds_note += " " + std::to_string(seed);
        const PointSet s = gen_random_general(n, seed);

        const ConeGraph theta = build_theta(s, sys);
        const ConeGraph yao = build_yao(s, sys);
        if (!same_edge_set(theta.edges, oracle::nearest_per_cone(s, sys, true))) {
            ++selection_failures;
        }
        if (!same_edge_set(yao.edges, oracle::nearest_per_cone(s, sys, false))) {
            ++selection_failures;
        }

        for (Directedness mode : {Directedness::Directed, Directedness::Undirected}) {
            const auto dense = oracle::floyd_warshall(theta, mode);
            const auto adj = detail::build_adjacency(theta, mode);
            for (int src = 0; src < n; ++src) {
                const auto tree = detail::dijkstra(adj, src);
                for (int dst = 0; dst < n; ++dst) {
                    const double a = tree.dist[static_cast<std::size_t>(dst)];
                    const double b = dense[static_cast<std::size_t>(src)][static_cast<std::size_t>(dst)];
                    if (a == kInfiniteDistance && b == kInfiniteDistance) continue;
                    if (a == kInfiniteDistance || b == kInfiniteDistance) {
                        worst_rel = kInfiniteDistance;
                        continue;
                    }
                    const double denom = std::max({std::abs(a), std::abs(b), 1e-300});
                    worst_rel = std::max(worst_rel, std::abs(a - b) / denom);
                }
            }
        }
    }
    o.add_le("selection-mismatches", selection_failures, 0.0, 0.0,
             std::to_string(trials) + " instances, theta and yao; " + seeds_note);
    o.add_le("apsp-relative-error", worst_rel, 0.0, 1e-9, "dijkstra vs dense apsp");
    return o;
}

inline VerificationOutcome run_suite(const std::string& name, int n_override = 0,
                                     int seeds_override = 0, int trials_override = 0) {
    if (name == "convex-upper") {
        std::vector<int> ns = n_override > 0 ? std::vector<int>{n_override}
                                             : std::vector<int>{10, 30, 100};
        return suite_convex_upper(ns, seeds_override > 0 ? seeds_override : 50);
    }
    if (name == "convex-lower") return suite_convex_lower();
    if (name == "molla-yy6") {
        std::vector<int> ns = n_override > 0 ? std::vector<int>{n_override}
                                             : std::vector<int>{4, 8, 16};
        return suite_molla_yy6(ns);
    }
    if (name == "nonconvex") {
        std::vector<int> ns = n_override > 0 ? std::vector<int>{n_override}
                                             : std::vector<int>{4, 8, 12, 16};
        return suite_nonconvex(ns);
    }
    if (name == "half-theta6") {
        std::vector<int> ns = n_override > 0 ? std::vector<int>{n_override}
                                             : std::vector<int>{20, 50};
        return suite_half_theta6(ns, seeds_override > 0 ? seeds_override : 50);
    }
    if (name == "oracle") {
        return suite_oracle(trials_override > 0 ? trials_override : 20);
    }
    throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace conespan
