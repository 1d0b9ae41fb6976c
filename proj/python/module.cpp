#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "planarcut/generator.hpp"
#include "planarcut/oracle.hpp"
#include "planarcut/solver.hpp"
#include "planarcut/svg.hpp"

namespace py = pybind11;
using namespace planarcut;

namespace {

py::dict solution_dict(const ParsedInstance& pi, const CutSolution& sol) {
    py::dict d;
    d["weight"] = sol.weight;
    py::list edges;
    for (int e : sol.edges) edges.append(pi.edge_names[e]);
    d["edges"] = edges;
    d["joint_vertices"] = sol.joint_vertices;
    d["valid"] = sol.valid;
    d["exact"] = sol.exact;
    d["num_components"] = sol.num_components;
    return d;
}

SolverConfig config_from_kwargs(int depth_cap, long long max_joint_sets,
                                long long max_interval_assignments, double time_limit,
                                int jobs, bool check_oracle) {
    SolverConfig cfg;
    cfg.depth_cap = depth_cap;
    cfg.max_joint_sets = max_joint_sets;
    cfg.max_interval_assignments = max_interval_assignments;
    cfg.time_limit_sec = time_limit;
    cfg.jobs = jobs;
    cfg.check_oracle = check_oracle;
    return cfg;
}

std::vector<int> dense_edges(const ParsedInstance& pi, const std::vector<long long>& named) {
    std::vector<int> out;
    for (long long e : named) out.push_back(pi.dense_edge(e));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact minimum multicut / multi-cluster cut solver for embedded planar graphs";

    py::register_exception<Error>(m, "PlanarCutError");

    m.def(
        "solve",
        [](const std::string& text, int depth_cap, long long max_joint_sets,
           long long max_interval_assignments, double time_limit, int jobs, bool check_oracle) {
            ParsedInstance pi = parse_instance(text);
            SolverConfig cfg = config_from_kwargs(depth_cap, max_joint_sets,
                                                  max_interval_assignments, time_limit, jobs,
                                                  check_oracle);
            CutSolution sol =
                pi.is_minmc() ? solve_minmc(pi.minmc(), cfg) : solve_mcc(pi.mcc(), cfg);
            return solution_dict(pi, sol);
        },
        py::arg("text"), py::arg("depth_cap") = -1, py::arg("max_joint_sets") = 200000,
        py::arg("max_interval_assignments") = 500000, py::arg("time_limit") = 0.0,
        py::arg("jobs") = 1, py::arg("check_oracle") = false,
        "Solve an instance given in the text format; returns a result dict.");

    m.def(
        "oracle",
        [](const std::string& text) {
            ParsedInstance pi = parse_instance(text);
            CutSolution sol = pi.is_minmc() ? oracle_minmc(pi.minmc()) : oracle_mcc(pi.mcc());
            return solution_dict(pi, sol);
        },
        py::arg("text"), "Brute-force reference solver (small instances only).");

    m.def(
        "verify",
        [](const std::string& text, const std::vector<long long>& edges) {
            ParsedInstance pi = parse_instance(text);
            std::vector<int> dense = dense_edges(pi, edges);
            CutSolution sol = pi.is_minmc() ? validate_cut(pi.minmc(), dense)
                                            : validate_cut(pi.mcc(), dense);
            py::dict d = solution_dict(pi, sol);
            d["violation"] = sol.violation;
            return d;
        },
        py::arg("text"), py::arg("edges"), "Validate a cut against an instance.");

    m.def(
        "generate",
        [](const std::string& family, int n, int k, int clusters, int cluster_size,
           long long wmin, long long wmax, std::uint64_t seed) {
            GenParams p;
            p.family = family;
            p.n = n;
            p.k = k;
            p.clusters = clusters;
            p.cluster_size = cluster_size;
            p.wmin = wmin;
            p.wmax = wmax;
            p.seed = seed;
            return serialize_instance(generate_instance(p));
        },
        py::arg("family") = "grid", py::arg("n") = 9, py::arg("k") = 1, py::arg("clusters") = 0,
        py::arg("cluster_size") = 1, py::arg("wmin") = 1, py::arg("wmax") = 9, py::arg("seed") = 0,
        "Generate a random instance; returns its text form.");

    m.def(
        "render_svg",
        [](const std::string& text, const std::vector<long long>& edges) {
            ParsedInstance pi = parse_instance(text);
            return render_svg(pi, dense_edges(pi, edges));
        },
        py::arg("text"), py::arg("edges") = std::vector<long long>{},
        "Render an instance (and optional cut) to an SVG string.");

    m.def(
        "graph_stats",
        [](const std::string& text) {
            ParsedInstance pi = parse_instance(text);
            const PlanarGraph& g = pi.graph();
            FaceSet fs = trace_faces(g);
            Preconditions pre = check_preconditions(g);
            py::dict d;
            d["n"] = g.n;
            d["m"] = g.m();
            d["faces"] = fs.count();
            d["simple"] = pre.simple;
            d["connected"] = pre.connected;
            d["two_vertex_connected"] = pre.two_vertex_connected;
            return d;
        },
        py::arg("text"), "Validated counts for an instance's embedded graph.");
}
