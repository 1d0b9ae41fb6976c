#include "planarcut/instance.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace planarcut {

std::vector<int> MinMCInstance::terminals() const {
    std::set<int> t;
    for (auto [s, s2] : pairs) { t.insert(s); t.insert(s2); }
    return {t.begin(), t.end()};
}

std::vector<int> MCCInstance::terminals() const {
    std::set<int> t;
    for (const auto& c : clusters) t.insert(c.begin(), c.end());
    return {t.begin(), t.end()};
}

std::vector<Clustering> enumerate_clusterings(const MinMCInstance& inst) {
    std::vector<int> terms = inst.terminals();
    int t = static_cast<int>(terms.size());
    std::vector<Clustering> out;
    if (t == 0) return out;
    // restricted growth strings: a[0]=0, a[i] <= max(a[0..i-1])+1
    std::vector<int> a(t, 0);
    auto splits_all_pairs = [&]() {
        for (auto [s, s2] : inst.pairs) {
            int i = static_cast<int>(std::lower_bound(terms.begin(), terms.end(), s) - terms.begin());
            int j = static_cast<int>(std::lower_bound(terms.begin(), terms.end(), s2) - terms.begin());
            if (a[i] == a[j]) return false;
        }
        return true;
    };
    while (true) {
        if (splits_all_pairs()) {
            int blocks = *std::max_element(a.begin(), a.end()) + 1;
            Clustering cl;
            cl.blocks.assign(blocks, {});
            for (int i = 0; i < t; ++i) cl.blocks[a[i]].push_back(terms[i]);
            out.push_back(std::move(cl));
        }
        // next RGS
        int i = t - 1;
        while (i > 0) {
            int mx = 0;
            for (int j = 0; j < i; ++j) mx = std::max(mx, a[j]);
            if (a[i] <= mx) break;
            --i;
        }
        if (i == 0) break;
        a[i]++;
        std::fill(a.begin() + i + 1, a.end(), 0);
    }
    return out;
}

MCCInstance to_mcc(const MinMCInstance& inst, const Clustering& cl) {
    for (auto [s, s2] : inst.pairs) {
        for (const auto& b : cl.blocks) {
            bool has_s = std::find(b.begin(), b.end(), s) != b.end();
            bool has_s2 = std::find(b.begin(), b.end(), s2) != b.end();
            if (has_s && has_s2)
                throw Error(Err::InvalidClustering,
                            "pair (" + std::to_string(s) + "," + std::to_string(s2) + ") not split");
        }
    }
    MCCInstance mcc;
    mcc.graph = inst.graph;
    mcc.clusters = cl.blocks;
    for (auto& c : mcc.clusters) std::sort(c.begin(), c.end());
    return mcc;
}

namespace {

// component labels of (V, E \ cut), labels 0..k-1 assigned in vertex order
std::pair<std::vector<int>, int> components_without(const PlanarGraph& g,
                                                    const std::vector<int>& cut) {
    std::vector<char> removed(g.m(), 0);
    for (int e : cut) {
        if (e < 0 || e >= g.m()) throw Error(Err::UnknownEdge, "cut names edge " + std::to_string(e));
        removed[e] = 1;
    }
    std::vector<int> comp(g.n, -1);
    int k = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = k;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.rotation[v]) {
                if (removed[e]) continue;
                int w = g.other_end(e, v);
                if (comp[w] == -1) { comp[w] = k; stack.push_back(w); }
            }
        }
        ++k;
    }
    return {comp, k};
}

CutSolution validate_common(const PlanarGraph& g, const std::vector<int>& edges) {
    CutSolution sol;
    sol.edges = edges;
    std::sort(sol.edges.begin(), sol.edges.end());
    sol.edges.erase(std::unique(sol.edges.begin(), sol.edges.end()), sol.edges.end());
    for (int e : sol.edges) {
        if (e < 0 || e >= g.m()) throw Error(Err::UnknownEdge, "cut names edge " + std::to_string(e));
        sol.weight += g.edges[e].weight;
    }
    auto [comp, k] = components_without(g, sol.edges);
    sol.component = comp;
    sol.num_components = k;
    return sol;
}

}  // namespace

CutSolution validate_cut(const MinMCInstance& inst, const std::vector<int>& edges) {
    CutSolution sol = validate_common(inst.graph, edges);
    sol.valid = true;
    for (auto [s, s2] : inst.pairs) {
        if (sol.component[s] == sol.component[s2]) {
            sol.valid = false;
            sol.violation = "pair (" + std::to_string(s) + "," + std::to_string(s2) + ") still connected";
            break;
        }
    }
    FaceSet fs = trace_faces(inst.graph);
    DualGraph dual = build_dual(inst.graph, fs);
    sol.joint_vertices = count_joint_vertices(dual, sol.edges);
    return sol;
}

CutSolution validate_cut(const MCCInstance& inst, const std::vector<int>& edges) {
    CutSolution sol = validate_common(inst.graph, edges);
    sol.valid = true;
    for (int i = 0; i < inst.p() && sol.valid; ++i) {
        std::set<int> comps_i;
        for (int v : inst.clusters[i]) comps_i.insert(sol.component[v]);
        for (int j = i + 1; j < inst.p(); ++j) {
            for (int v : inst.clusters[j]) {
                if (comps_i.count(sol.component[v])) {
                    sol.valid = false;
                    sol.violation = "clusters " + std::to_string(i) + " and " + std::to_string(j) +
                                    " share a component (vertex " + std::to_string(v) + ")";
                    break;
                }
            }
            if (!sol.valid) break;
        }
    }
    sol.cluster_component_count.resize(inst.p());
    for (int i = 0; i < inst.p(); ++i) {
        std::set<int> comps;
        for (int v : inst.clusters[i]) comps.insert(sol.component[v]);
        sol.cluster_component_count[i] = static_cast<int>(comps.size());
    }
    FaceSet fs = trace_faces(inst.graph);
    DualGraph dual = build_dual(inst.graph, fs);
    sol.joint_vertices = count_joint_vertices(dual, sol.edges);
    return sol;
}

std::vector<int> joint_vertices_of(const DualGraph& dual, const std::vector<int>& cut) {
    std::vector<int> deg(dual.num_vertices, 0);
    std::set<int> cs(cut.begin(), cut.end());
    for (int e : cs) {
        deg[dual.ends[e].first]++;
        deg[dual.ends[e].second]++;
    }
    std::vector<int> out;
    for (int f = 0; f < dual.num_vertices; ++f)
        if (deg[f] >= 3) out.push_back(f);
    return out;
}

int count_joint_vertices(const DualGraph& dual, const std::vector<int>& cut) {
    return static_cast<int>(joint_vertices_of(dual, cut).size());
}

}  // namespace planarcut
