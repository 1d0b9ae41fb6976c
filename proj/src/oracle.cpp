#include "planarcut/oracle.hpp"

#include <algorithm>
#include <climits>
#include <queue>
#include <set>

namespace planarcut {

namespace {

// Dinic max-flow on an undirected unit-weight-per-edge network.
struct FlowNet {
    struct Arc { int to, rev; long long cap; };
    std::vector<std::vector<Arc>> adj;
    std::vector<int> level, iter;

    explicit FlowNet(int n) : adj(n) {}

    void add_edge(int a, int b, long long cab, long long cba) {
        adj[a].push_back({b, static_cast<int>(adj[b].size()), cab});
        adj[b].push_back({a, static_cast<int>(adj[a].size()) - 1, cba});
    }

    bool bfs(int s, int t) {
        level.assign(adj.size(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& a : adj[v])
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    q.push(a.to);
                }
        }
        return level[t] >= 0;
    }

    long long dfs(int v, int t, long long f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < static_cast<int>(adj[v].size()); ++i) {
            Arc& a = adj[v][i];
            if (a.cap > 0 && level[v] < level[a.to]) {
                long long d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    adj[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    long long max_flow(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            iter.assign(adj.size(), 0);
            long long f;
            while ((f = dfs(s, t, LLONG_MAX)) > 0) flow += f;
        }
        return flow;
    }

    std::vector<char> min_cut_side(int s) {
        std::vector<char> side(adj.size(), 0);
        std::vector<int> stack = {s};
        side[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& a : adj[v])
                if (a.cap > 0 && !side[a.to]) {
                    side[a.to] = 1;
                    stack.push_back(a.to);
                }
        }
        return side;
    }
};

CutSolution cut_from_edges(const PlanarGraph& g, std::vector<int> edges) {
    CutSolution sol;
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    sol.edges = std::move(edges);
    for (int e : sol.edges) sol.weight += g.edges[e].weight;
    sol.valid = true;
    return sol;
}

long long labeling_budget(int p, int free_vertices) {
    long long b = 1;
    for (int i = 0; i < free_vertices; ++i) {
        b *= p;
        if (b > (1LL << 40)) return b;
    }
    return b;
}

}  // namespace

CutSolution oracle_mcc(const MCCInstance& inst, const OracleLimits& lim) {
    const PlanarGraph& g = inst.graph;
    int p = inst.p();
    if (p <= 1) {
        CutSolution sol;
        sol.valid = true;
        sol.component.assign(g.n, 0);
        sol.num_components = g.n > 0 ? 1 : 0;
        return sol;
    }
    int guard = p == 2 ? lim.max_n_p2 : (p <= 4 ? lim.max_n_small_p : lim.max_n_any);
    if (g.n > guard)
        throw Error(Err::BudgetExceeded,
                    "oracle guard: n=" + std::to_string(g.n) + " with p=" + std::to_string(p));

    std::vector<int> label(g.n, -1);
    for (int i = 0; i < p; ++i)
        for (int v : inst.clusters[i]) label[v] = i;
    std::vector<int> free_vs;
    for (int v = 0; v < g.n; ++v)
        if (label[v] == -1) free_vs.push_back(v);
    if (labeling_budget(p, static_cast<int>(free_vs.size())) > (1LL << 34))
        throw Error(Err::BudgetExceeded, "oracle labeling budget exceeded");

    long long best = -1;
    std::vector<int> best_label;
    std::vector<int> cur(free_vs.size(), 0);
    // lexicographically first optimal labeling wins (deterministic)
    while (true) {
        for (size_t i = 0; i < free_vs.size(); ++i) label[free_vs[i]] = cur[i];
        long long w = 0;
        for (const auto& e : g.edges)
            if (label[e.u] != label[e.v]) w += e.weight;
        if (best < 0 || w < best) {
            best = w;
            best_label = label;
        }
        int i = static_cast<int>(cur.size()) - 1;
        while (i >= 0 && cur[i] == p - 1) { cur[i] = 0; --i; }
        if (i < 0) break;
        cur[i]++;
    }

    std::vector<int> cut;
    for (int e = 0; e < g.m(); ++e)
        if (best_label[g.edges[e].u] != best_label[g.edges[e].v]) cut.push_back(e);
    CutSolution sol = validate_cut(inst, cut);
    return sol;
}

CutSolution oracle_minmc(const MinMCInstance& inst, const OracleLimits& lim) {
    auto clusterings = enumerate_clusterings(inst);
    if (clusterings.empty()) throw Error(Err::InfeasibleParams, "instance has no pairs");
    CutSolution best;
    bool have = false;
    for (const auto& cl : clusterings) {
        MCCInstance mcc = to_mcc(inst, cl);
        CutSolution sol = oracle_mcc(mcc, lim);
        if (!have || sol.weight < best.weight ||
            (sol.weight == best.weight && sol.edges < best.edges)) {
            best = sol;
            have = true;
        }
    }
    CutSolution out = validate_cut(inst, best.edges);
    return out;
}

CutSolution min_cut(const PlanarGraph& g, const std::vector<int>& S, const std::vector<int>& T) {
    std::set<int> sset(S.begin(), S.end()), tset(T.begin(), T.end());
    // already separated?
    {
        std::vector<char> vis(g.n, 0);
        std::vector<int> stack;
        for (int s : S)
            if (!vis[s]) { vis[s] = 1; stack.push_back(s); }
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.rotation[v]) {
                int w = g.other_end(e, v);
                if (!vis[w]) { vis[w] = 1; stack.push_back(w); }
            }
        }
        bool hit = std::any_of(T.begin(), T.end(), [&](int t) { return vis[t] != 0; });
        if (!hit) return cut_from_edges(g, {});
    }

    FlowNet net(g.n + 2);
    int src = g.n, snk = g.n + 1;
    const long long INF = 1LL << 50;
    for (int s : sset) net.add_edge(src, s, INF, 0);
    for (int t : tset) net.add_edge(t, snk, INF, 0);
    for (int e = 0; e < g.m(); ++e)
        net.add_edge(g.edges[e].u, g.edges[e].v, g.edges[e].weight, g.edges[e].weight);
    net.max_flow(src, snk);
    auto side = net.min_cut_side(src);
    std::vector<int> cut;
    for (int e = 0; e < g.m(); ++e)
        if (side[g.edges[e].u] != side[g.edges[e].v]) cut.push_back(e);
    return cut_from_edges(g, cut);
}

CutSolution two_pair_multicut(const MinMCInstance& inst) {
    if (inst.pairs.size() != 2)
        throw Error(Err::InfeasibleParams, "two_pair_multicut needs exactly two pairs");
    auto [s1, t1] = inst.pairs[0];
    auto [s2, t2] = inst.pairs[1];
    CutSolution a = min_cut(inst.graph, {s1, s2}, {t1, t2});
    CutSolution b = min_cut(inst.graph, {s1, t2}, {t1, s2});
    const CutSolution& c =
        (a.weight < b.weight || (a.weight == b.weight && a.edges <= b.edges)) ? a : b;
    return validate_cut(inst, c.edges);
}

}  // namespace planarcut
