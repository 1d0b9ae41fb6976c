#include "planarcut/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "planarcut/generator.hpp"
#include "planarcut/oracle.hpp"
#include "planarcut/solver.hpp"
#include "planarcut/svg.hpp"

namespace planarcut {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot write " + path);
    out << content;
}

std::vector<int> parse_cut_arg(const ParsedInstance& pi, const std::string& arg) {
    std::vector<int> edges;
    std::string tok;
    std::stringstream ss(arg);
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok[0] == 'e' || tok[0] == 'E') tok = tok.substr(1);
        edges.push_back(pi.dense_edge(std::stoll(tok)));
    }
    return edges;
}

std::string edge_list(const ParsedInstance& pi, const std::vector<int>& edges) {
    std::string s;
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i) s += ",";
        s += "e" + std::to_string(pi.edge_names[edges[i]]);
    }
    return s.empty() ? "(none)" : s;
}

void check_solver_preconditions(const ParsedInstance& pi) {
    Preconditions pre = check_preconditions(pi.graph());
    if (!pre.ok()) {
        std::string what = !pre.connected ? "connected" : "2-vertex-connected";
        throw Error(Err::InfeasibleParams, "the solver requires a " + what + " graph");
    }
}

CutSolution dispatch_solve(const ParsedInstance& pi, const SolverConfig& cfg) {
    if (pi.is_minmc()) return solve_minmc(pi.minmc(), cfg);
    return solve_mcc(pi.mcc(), cfg);
}

CutSolution dispatch_oracle(const ParsedInstance& pi) {
    if (pi.is_minmc()) return oracle_minmc(pi.minmc());
    return oracle_mcc(pi.mcc());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact minimum multicut / multi-cluster cut solver for embedded planar graphs"};
    app.require_subcommand(1);

    std::string input, mode, cut_arg, render_out, family = "grid", gen_out;
    SolverConfig cfg;
    GenParams gp;
    int bench_reps = 3;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--input", input, "instance file")->required();
        c->add_option("--mode", mode, "minmc|minmcc (must match the file's directives)");
    };
    auto add_solver_flags = [&](CLI::App* c) {
        c->add_option("--depth-cap", cfg.depth_cap, "homotopy word depth cap (-1 = auto)");
        c->add_option("--max-joint-sets", cfg.max_joint_sets, "joint-set enumeration budget");
        c->add_option("--max-interval-assignments", cfg.max_interval_assignments,
                      "interval assignment budget");
        c->add_option("--time-limit", cfg.time_limit_sec, "time limit in seconds (0 = none)");
        c->add_option("--jobs", cfg.jobs, "parallel workers for the outer enumeration");
        c->add_flag("--check-oracle", cfg.check_oracle,
                    "cross-check against the brute-force oracle (small instances)");
    };

    CLI::App* solve = app.add_subcommand("solve", "solve an instance exactly");
    add_common(solve);
    add_solver_flags(solve);
    solve->add_option("--render", render_out, "write an SVG of the solution");

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force reference solver");
    add_common(oracle);

    CLI::App* verify = app.add_subcommand("verify", "check a cut against an instance");
    add_common(verify);
    verify->add_option("--cut", cut_arg, "comma-separated edge ids, e.g. e2,e5")->required();

    CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--family", gp.family, "grid|triangulated");
    gen->add_option("--n", gp.n, "vertex count");
    gen->add_option("--k", gp.k, "source-sink pairs");
    gen->add_option("--clusters", gp.clusters, "cluster count (MinMCC mode)");
    gen->add_option("--cluster-size", gp.cluster_size, "terminals per cluster");
    gen->add_option("--wmin", gp.wmin, "minimum edge weight");
    gen->add_option("--wmax", gp.wmax, "maximum edge weight");
    gen->add_option("--seed", gp.seed, "random seed");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    CLI::App* render = app.add_subcommand("render", "render an instance to SVG");
    add_common(render);
    render->add_option("--out", render_out, "output SVG file")->required();
    render->add_option("--cut", cut_arg, "optional cut to draw dashed");

    CLI::App* bench = app.add_subcommand("bench", "time the solver on an instance");
    add_common(bench);
    add_solver_flags(bench);
    bench->add_option("--reps", bench_reps, "repetitions");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) {
            ParsedInstance pi = generate_instance(gp);
            std::string text = serialize_instance(pi);
            if (gen_out.empty())
                out << text;
            else
                write_file(gen_out, text);
            return 0;
        }

        ParsedInstance pi = parse_instance(read_file(input));
        if (!mode.empty()) {
            bool want_minmc = mode == "minmc";
            if (mode != "minmc" && mode != "minmcc") {
                err << "usage error: --mode must be minmc or minmcc\n";
                return 2;
            }
            if (want_minmc != pi.is_minmc()) {
                err << "usage error: --mode " << mode << " does not match the file's directives\n";
                return 2;
            }
        }
        if (pi.is_minmc())
            for (const auto& w : pi.minmc().warnings) err << "warning: " << w << "\n";

        if (solve->parsed() || bench->parsed()) {
            check_solver_preconditions(pi);
            if (bench->parsed()) {
                for (int r = 0; r < bench_reps; ++r) {
                    auto t0 = std::chrono::steady_clock::now();
                    CutSolution sol = dispatch_solve(pi, cfg);
                    auto ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count();
                    out << "rep " << r << ": weight " << sol.weight << " in " << ms << " ms ("
                        << (sol.exact ? "exact" : "budget-limited") << ")\n";
                }
                return 0;
            }
            CutSolution sol = dispatch_solve(pi, cfg);
            out << "weight: " << sol.weight << "\n";
            out << "edges: " << edge_list(pi, sol.edges) << "\n";
            out << "joint-vertices: " << sol.joint_vertices << "\n";
            out << "mode: " << (sol.exact ? "exact" : "budget-limited") << "\n";
            if (!render_out.empty()) write_file(render_out, render_svg(pi, sol.edges));
            return sol.exact ? 0 : 4;
        }
        if (oracle->parsed()) {
            CutSolution sol = dispatch_oracle(pi);
            out << "weight: " << sol.weight << "\n";
            out << "edges: " << edge_list(pi, sol.edges) << "\n";
            out << "joint-vertices: " << sol.joint_vertices << "\n";
            return 0;
        }
        if (verify->parsed()) {
            std::vector<int> edges = parse_cut_arg(pi, cut_arg);
            CutSolution sol = pi.is_minmc() ? validate_cut(pi.minmc(), edges)
                                            : validate_cut(pi.mcc(), edges);
            if (sol.valid) {
                out << "valid, weight " << sol.weight << ", joint-vertices "
                    << sol.joint_vertices << "\n";
                return 0;
            }
            out << "invalid: " << sol.violation << "\n";
            return 1;
        }
        if (render->parsed()) {
            std::vector<int> edges =
                cut_arg.empty() ? std::vector<int>{} : parse_cut_arg(pi, cut_arg);
            write_file(render_out, render_svg(pi, edges));
            return 0;
        }
    } catch (const Error& e) {
        if (e.code == Err::NoFeasibleCandidate && std::string(e.what()).find("oracle") !=
                                                      std::string::npos) {
            err << "error: " << e.what() << "\n";
            return 1;
        }
        if (e.code == Err::BudgetExceeded) {
            err << "error: " << e.what() << "\n";
            return 4;
        }
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::ios_base::failure& e) {
        err << "io error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace planarcut
