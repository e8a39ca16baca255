#pragma once

// Command-line surface: gen | build | analyze | render | verify.
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage error, 3 I/O error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "conespan/analysis.hpp"
#include "conespan/constructions.hpp"
#include "conespan/graph.hpp"
#include "conespan/io.hpp"
#include "conespan/svg.hpp"
#include "conespan/verify.hpp"

namespace conespan {

namespace detail {

inline std::uint64_t default_seed() {
    if (const char* env = std::getenv("CONE_SPANNER_SEED")) {
        try {
            return static_cast<std::uint64_t>(std::stoull(env));
        } catch (const std::exception&) {
            throw std::invalid_argument("CONE_SPANNER_SEED must be a non-negative integer");
        }
    }
    return 1;
}

inline ConeGraph build_family(const PointSet& points, Family family, int k) {
    const ConeSystem sys(k);
    switch (family) {
        case Family::Yao: return build_yao(points, sys);
        case Family::Theta: return build_theta(points, sys);
        case Family::YaoYao: return filter_incoming(build_yao(points, sys));
        case Family::ThetaTheta: return filter_incoming(build_theta(points, sys));
        case Family::HalfThetaOdd: return half_theta(build_theta(points, sys), HalfParity::Odd);
        case Family::HalfThetaEven: return half_theta(build_theta(points, sys), HalfParity::Even);
    }
    throw std::invalid_argument("unknown graph family");
}

inline nlohmann::json analysis_to_json(const ConeGraph& g, Directedness mode) {
    nlohmann::json a;
    a["directed"] = mode == Directedness::Directed;
    const DegreeStats deg = degree_stats(g);
    a["max_out_degree"] = deg.max_out;
    a["max_in_degree"] = deg.max_in;
    a["max_degree"] = deg.max_total;
    if (g.points.size() < 2) {
        a["ratio"] = nullptr;
        a["witness_src"] = nullptr;
        a["witness_dst"] = nullptr;
        a["witness_path"] = nlohmann::json::array();
        a["crossing_count"] = crossing_count(g);
        a["disconnected_pairs"] = 0;
        return a;
    }
    const StretchReport r = spanning_ratio(g, mode);
    if (std::isfinite(r.ratio)) {
        a["ratio"] = r.ratio;
    } else {
        a["ratio"] = nullptr;
    }
    a["witness_src"] = r.witness_src;
    a["witness_dst"] = r.witness_dst;
    a["witness_path"] = r.witness_path;
    a["crossing_count"] = r.crossing_count;
    a["disconnected_pairs"] = r.disconnected_pairs;
    return a;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv) {
    CLI::App app{"cone-based proximity graphs: generators, builders, analysis, rendering "
                 "and verification suites"};
    app.require_subcommand(1);

    // --- gen ---
    auto* gen = app.add_subcommand("gen", "generate a point set");
    std::string gen_family;
    int gen_n = 10;
    double gen_alpha = -1.0, gen_delta_frac = 0.5, gen_epsilon = -1.0;
    std::uint64_t gen_seed = 0;
    bool gen_seed_given = false;
    std::string gen_out;
    gen->add_option("--family", gen_family, "molla | convex-lb | nonconvex | random-convex | random")
        ->required();
    gen->add_option("--n", gen_n, "number of chain links or points");
    gen->add_option("--alpha", gen_alpha, "chain rotation angle in radians");
    gen->add_option("--delta-frac", gen_delta_frac, "shift as a fraction of its strict bound");
    gen->add_option("--epsilon", gen_epsilon, "perturbation magnitude");
    gen->add_option("--seed", gen_seed, "random seed")->each([&](const std::string&) {
        gen_seed_given = true;
    });
    gen->add_option("-o,--output", gen_out, "output point file")->required();

    // --- build ---
    auto* build = app.add_subcommand("build", "build a cone graph from a point file");
    std::string build_family, build_in, build_out;
    int build_k = 6;
    build->add_option("--family", build_family,
                      "yao | theta | yaoyao | thetatheta | half-theta-odd | half-theta-even")
        ->required();
    build->add_option("--k", build_k, "number of cones");
    build->add_option("-i,--input", build_in, "input point file")->required();
    build->add_option("-o,--output", build_out, "output graph json")->required();

    // --- analyze ---
    auto* analyze = app.add_subcommand("analyze", "stretch, degree and crossing report");
    std::string analyze_in, analyze_out;
    bool analyze_directed = false;
    analyze->add_option("-i,--input", analyze_in, "input graph json")->required();
    analyze->add_option("-o,--output", analyze_out, "output report json")->required();
    analyze->add_flag("--directed", analyze_directed, "respect edge directions");

    // --- render ---
    auto* render = app.add_subcommand("render", "render a graph to svg");
    std::string render_in, render_out;
    int render_cones_at = -1;
    render->add_option("-i,--input", render_in, "input graph json")->required();
    render->add_option("-o,--output", render_out, "output svg file")->required();
    render->add_option("--cones-at", render_cones_at, "draw the cone wedges at this vertex id");

    // --- verify ---
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string verify_suite;
    int verify_n = 0, verify_seeds = 0, verify_trials = 0;
    verify->add_option("--suite", verify_suite,
                       "convex-upper | convex-lower | nonconvex | molla-yy6 | half-theta6 | oracle")
        ->required();
    verify->add_option("--n", verify_n, "restrict to a single size");
    verify->add_option("--seeds", verify_seeds, "number of random seeds");
    verify->add_option("--trials", verify_trials, "number of oracle trials");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            LabeledPointSet lp;
            const std::uint64_t seed = gen_seed_given ? gen_seed : detail::default_seed();
            if (gen_family == "molla") {
                const double alpha = gen_alpha > 0.0 ? gen_alpha : 0.02;
                const double eps = gen_epsilon > 0.0 ? gen_epsilon : 1e-4;
                lp = gen_molla(gen_n, alpha, eps);
            } else if (gen_family == "convex-lb") {
                const double eps = gen_epsilon > 0.0 ? gen_epsilon : 1e-6;
                lp = gen_convex_lb(eps);
            } else if (gen_family == "nonconvex") {
                const double alpha = gen_alpha > 0.0 ? gen_alpha : 0.01;
                lp = gen_nonconvex(gen_n, alpha, gen_delta_frac);
            } else if (gen_family == "random-convex") {
                lp.points = gen_random_convex(gen_n, seed);
            } else if (gen_family == "random") {
                lp.points = gen_random_general(gen_n, seed);
            } else {
                std::cerr << "unknown construction family: " << gen_family << "\n";
                return 2;
            }
            write_file(gen_out, render_points(lp));
            return 0;
        }

        if (build->parsed()) {
            const auto family = family_from_name(build_family);
            if (!family) {
                std::cerr << "unknown graph family: " << build_family << "\n";
                return 2;
            }
            const LabeledPointSet lp = parse_points(read_file(build_in));
            const ConeGraph g = detail::build_family(lp.points, *family, build_k);
            write_file(build_out, graph_to_json(g, lp.labels).dump(2) + "\n");
            return 0;
        }

        if (analyze->parsed()) {
            const GraphDocument doc =
                graph_from_json(nlohmann::json::parse(read_file(analyze_in)));
            nlohmann::json out = graph_to_json(doc.graph, doc.labels);
            out["analysis"] = detail::analysis_to_json(
                doc.graph, analyze_directed ? Directedness::Directed : Directedness::Undirected);
            write_file(analyze_out, out.dump(2) + "\n");
            return 0;
        }

        if (render->parsed()) {
            const GraphDocument doc =
                graph_from_json(nlohmann::json::parse(read_file(render_in)));
            SvgOptions options;
            options.cones_at = render_cones_at;
            write_file(render_out, render_svg(doc.graph, options, doc.labels));
            return 0;
        }

        if (verify->parsed()) {
            const VerificationOutcome outcome =
                run_suite(verify_suite, verify_n, verify_seeds, verify_trials);
            std::cout << outcome_to_json(outcome).dump(2) << "\n";
            if (!outcome.pass()) {
                for (const auto& c : outcome.checks) {
                    if (!c.pass) {
                        std::cerr << "verification failed: " << outcome.suite << "/" << c.id
                                  << "\n";
                    }
                }
                return 1;
            }
            return 0;
        }
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const ConstructionError& e) {
        std::cerr << "construction error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace conespan
