#include "planarcut/instance_io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace planarcut {

int ParsedInstance::dense_edge(long long external) const {
    for (size_t i = 0; i < edge_names.size(); ++i)
        if (edge_names[i] == external) return static_cast<int>(i);
    throw Error(Err::UnknownEdge, "no edge named " + std::to_string(external));
}

ParsedInstance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    struct PEdge { long long name; int u, v; long long w; };
    std::vector<PEdge> pedges;
    std::map<int, std::pair<double, double>> coords;
    std::map<int, std::vector<long long>> rotations;  // in external edge ids
    std::vector<int> outer;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> clusters;
    int lineno = 0;

    auto fail = [&](const std::string& msg) -> void {
        throw Error(Err::SyntaxError, "line " + std::to_string(lineno) + ": " + msg);
    };
    auto check_vertex = [&](long long v) {
        if (v < 0 || v >= n)
            throw Error(Err::UnknownVertex,
                        "line " + std::to_string(lineno) + ": vertex " + std::to_string(v));
        return static_cast<int>(v);
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string cmd;
        if (!(ls >> cmd)) continue;
        if (cmd == "graph") {
            if (n != -1) fail("duplicate graph directive");
            if (!(ls >> n) || n < 0) fail("graph needs a vertex count");
        } else if (cmd == "vertex") {
            long long v;
            if (!(ls >> v)) fail("vertex needs an id");
            check_vertex(v);
            double x, y;
            if (ls >> x >> y) coords[static_cast<int>(v)] = {x, y};
        } else if (cmd == "edge") {
            long long name, u, v, w;
            if (!(ls >> name >> u >> v >> w)) fail("edge needs <eid> <u> <v> <weight>");
            pedges.push_back({name, check_vertex(u), check_vertex(v), w});
        } else if (cmd == "rotation") {
            long long v;
            if (!(ls >> v)) fail("rotation needs a vertex");
            std::vector<long long> order;
            long long e;
            while (ls >> e) order.push_back(e);
            rotations[check_vertex(v)] = order;
        } else if (cmd == "outer") {
            long long v;
            while (ls >> v) outer.push_back(check_vertex(v));
        } else if (cmd == "pair") {
            long long s, t;
            if (!(ls >> s >> t)) fail("pair needs two vertices");
            if (s == t)
                throw Error(Err::PairWithEqualEndpoints,
                            "line " + std::to_string(lineno) + ": pair " + std::to_string(s) +
                                " " + std::to_string(t));
            pairs.push_back({check_vertex(s), check_vertex(t)});
        } else if (cmd == "cluster") {
            std::vector<int> c;
            long long v;
            while (ls >> v) c.push_back(check_vertex(v));
            if (c.empty()) fail("cluster needs at least one vertex");
            clusters.push_back(c);
        } else {
            fail("unknown directive '" + cmd + "'");
        }
    }
    if (n < 0) throw Error(Err::SyntaxError, "missing graph directive");
    if (!pairs.empty() && !clusters.empty())
        throw Error(Err::BothPairAndClusterDirectives,
                    "a file may use pair or cluster directives, not both");

    // dense edge ids in file order
    std::set<long long> names;
    RawGraph raw;
    raw.n = n;
    std::vector<long long> edge_names;
    for (const auto& pe : pedges) {
        if (!names.insert(pe.name).second)
            throw Error(Err::SyntaxError, "duplicate edge id " + std::to_string(pe.name));
        raw.edges.push_back({pe.u, pe.v, pe.w});
        edge_names.push_back(pe.name);
    }
    auto dense = [&](long long name) -> int {
        for (size_t i = 0; i < edge_names.size(); ++i)
            if (edge_names[i] == name) return static_cast<int>(i);
        throw Error(Err::UnknownEdge, "rotation names unknown edge " + std::to_string(name));
    };
    raw.coords.resize(n);
    for (auto& [v, xy] : coords) raw.coords[v] = xy;
    bool all_coords = static_cast<int>(coords.size()) == n && n > 0;
    if (!rotations.empty()) {
        if (static_cast<int>(rotations.size()) != n)
            throw Error(Err::SyntaxError, "rotation must be given for every vertex or none");
        raw.rotation.resize(n);
        for (auto& [v, order] : rotations)
            for (long long name : order) raw.rotation[v].push_back(dense(name));
    } else if (!all_coords) {
        throw Error(Err::SyntaxError, "need rotations or coordinates for every vertex");
    }
    raw.outer_hint = outer;

    PlanarGraph g = build_planar_graph(raw);
    // fail early if the outer face cannot be determined
    trace_faces(g);

    ParsedInstance pi;
    pi.edge_names = edge_names;
    if (!clusters.empty()) {
        MCCInstance mcc;
        mcc.graph = std::move(g);
        std::set<int> seen;
        for (auto& c : clusters) {
            std::sort(c.begin(), c.end());
            c.erase(std::unique(c.begin(), c.end()), c.end());
            for (int v : c)
                if (!seen.insert(v).second)
                    throw Error(Err::InvalidClustering,
                                "terminal " + std::to_string(v) + " appears in two clusters");
        }
        mcc.clusters = clusters;
        pi.inst = std::move(mcc);
    } else {
        MinMCInstance mi;
        mi.graph = std::move(g);
        std::set<std::pair<int, int>> seen;
        for (auto [s, t] : pairs) {
            auto key = std::minmax(s, t);
            if (!seen.insert(key).second) {
                mi.warnings.push_back("duplicate pair (" + std::to_string(s) + "," +
                                      std::to_string(t) + ") ignored");
                continue;
            }
            mi.pairs.push_back({s, t});
        }
        pi.inst = std::move(mi);
    }
    return pi;
}

std::string serialize_instance(const ParsedInstance& pi) {
    const PlanarGraph& g = pi.graph();
    std::ostringstream out;
    out << "graph " << g.n << "\n";
    for (int v = 0; v < g.n; ++v) {
        out << "vertex " << v;
        if (g.coords[v]) out << " " << g.coords[v]->first << " " << g.coords[v]->second;
        out << "\n";
    }
    for (int e = 0; e < g.m(); ++e)
        out << "edge " << pi.edge_names[e] << " " << g.edges[e].u << " " << g.edges[e].v << " "
            << g.edges[e].weight << "\n";
    for (int v = 0; v < g.n; ++v) {
        out << "rotation " << v;
        for (int e : g.rotation[v]) out << " " << pi.edge_names[e];
        out << "\n";
    }
    if (!g.outer_hint.empty()) {
        out << "outer";
        for (int v : g.outer_hint) out << " " << v;
        out << "\n";
    }
    if (pi.is_minmc()) {
        for (auto [s, t] : pi.minmc().pairs) out << "pair " << s << " " << t << "\n";
    } else {
        for (const auto& c : pi.mcc().clusters) {
            out << "cluster";
            for (int v : c) out << " " << v;
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace planarcut
