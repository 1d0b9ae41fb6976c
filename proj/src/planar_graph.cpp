#include "planarcut/planar_graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace planarcut {

const char* err_name(Err e) {
    switch (e) {
        case Err::LoopEdge: return "LoopEdge";
        case Err::ParallelEdge: return "ParallelEdge";
        case Err::Disconnected: return "Disconnected";
        case Err::NotPlaneEmbedding: return "NotPlaneEmbedding";
        case Err::NonPositiveWeight: return "NonPositiveWeight";
        case Err::UnknownEdge: return "UnknownEdge";
        case Err::SyntaxError: return "SyntaxError";
        case Err::UnknownVertex: return "UnknownVertex";
        case Err::PairWithEqualEndpoints: return "PairWithEqualEndpoints";
        case Err::BothPairAndClusterDirectives: return "BothPairAndClusterDirectives";
        case Err::InvalidClustering: return "InvalidClustering";
        case Err::RayRoutingFailed: return "RayRoutingFailed";
        case Err::EndpointMismatch: return "EndpointMismatch";
        case Err::DepthCapExhausted: return "DepthCapExhausted";
        case Err::BoundaryNotClosedWalk: return "BoundaryNotClosedWalk";
        case Err::NoFeasibleCandidate: return "NoFeasibleCandidate";
        case Err::BudgetExceeded: return "BudgetExceeded";
        case Err::InfeasibleParams: return "InfeasibleParams";
        case Err::MissingCoordinates: return "MissingCoordinates";
    }
    return "Error";
}

bool PlanarGraph::has_coords() const {
    if (n == 0) return false;
    for (const auto& c : coords)
        if (!c) return false;
    return true;
}

long long PlanarGraph::total_weight() const {
    long long s = 0;
    for (const auto& e : edges) s += e.weight;
    return s;
}

int PlanarGraph::rot_index(int v, int e) const {
    const auto& r = rotation[v];
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i] == e) return i;
    throw Error(Err::UnknownEdge, "edge " + std::to_string(e) + " not incident to vertex " + std::to_string(v));
}

int PlanarGraph::rot_next(int v, int e) const {
    const auto& r = rotation[v];
    return r[(rot_index(v, e) + 1) % r.size()];
}

int PlanarGraph::rot_prev(int v, int e) const {
    const auto& r = rotation[v];
    return r[(rot_index(v, e) + r.size() - 1) % r.size()];
}

namespace {

std::vector<std::vector<int>> derive_rotation_from_coords(const RawGraph& raw) {
    std::vector<std::vector<int>> rot(raw.n);
    for (int e = 0; e < static_cast<int>(raw.edges.size()); ++e) {
        rot[raw.edges[e].u].push_back(e);
        rot[raw.edges[e].v].push_back(e);
    }
    for (int v = 0; v < raw.n; ++v) {
        if (!raw.coords[v])
            throw Error(Err::MissingCoordinates, "vertex " + std::to_string(v) + " has no coordinates");
        auto [x0, y0] = *raw.coords[v];
        auto angle = [&](int e) {
            int w = raw.edges[e].u == v ? raw.edges[e].v : raw.edges[e].u;
            auto [x1, y1] = *raw.coords[w];
            return std::atan2(y1 - y0, x1 - x0);
        };
        // clockwise = descending angle
        std::stable_sort(rot[v].begin(), rot[v].end(),
                         [&](int a, int b) { return angle(a) > angle(b); });
    }
    return rot;
}

void trace_all_faces(const PlanarGraph& g, std::vector<std::vector<int>>& walks,
                     std::vector<int>& face_of) {
    walks.clear();
    face_of.assign(2 * g.m(), -1);
    for (int d0 = 0; d0 < 2 * g.m(); ++d0) {
        if (face_of[d0] != -1) continue;
        std::vector<int> walk;
        int d = d0;
        int fid = static_cast<int>(walks.size());
        do {
            face_of[d] = fid;
            walk.push_back(d);
            int v = g.dart_head(d);
            int e2 = g.rot_next(v, edge_of_dart(d));
            bool forward = g.edges[e2].u == v;
            d = dart_of(e2, forward);
        } while (d != d0);
        walks.push_back(std::move(walk));
    }
}

}  // namespace

PlanarGraph build_planar_graph(const RawGraph& raw) {
    PlanarGraph g;
    g.n = raw.n;
    g.edges = raw.edges;
    g.coords = raw.coords;
    g.coords.resize(raw.n);
    g.outer_hint = raw.outer_hint;

    std::set<std::pair<int, int>> seen;
    for (const auto& e : g.edges) {
        if (e.u < 0 || e.u >= g.n || e.v < 0 || e.v >= g.n)
            throw Error(Err::UnknownVertex, "edge endpoint out of range");
        if (e.u == e.v)
            throw Error(Err::LoopEdge, "loop at vertex " + std::to_string(e.u));
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second)
            throw Error(Err::ParallelEdge,
                        "duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        if (e.weight < 1)
            throw Error(Err::NonPositiveWeight, "edge weight must be a positive integer");
    }

    if (!raw.rotation.empty()) {
        if (static_cast<int>(raw.rotation.size()) != g.n)
            throw Error(Err::SyntaxError, "rotation table size mismatch");
        g.rotation = raw.rotation;
        std::vector<int> deg(g.n, 0);
        for (const auto& e : g.edges) { deg[e.u]++; deg[e.v]++; }
        for (int v = 0; v < g.n; ++v) {
            if (static_cast<int>(g.rotation[v].size()) != deg[v])
                throw Error(Err::SyntaxError,
                            "rotation of vertex " + std::to_string(v) + " does not list each incident edge once");
            std::set<int> s(g.rotation[v].begin(), g.rotation[v].end());
            if (static_cast<int>(s.size()) != deg[v])
                throw Error(Err::SyntaxError, "rotation of vertex " + std::to_string(v) + " repeats an edge");
            for (int e : g.rotation[v])
                if (e < 0 || e >= g.m() || (g.edges[e].u != v && g.edges[e].v != v))
                    throw Error(Err::SyntaxError,
                                "rotation of vertex " + std::to_string(v) + " names a non-incident edge");
        }
    } else {
        g.rotation = derive_rotation_from_coords(raw);
    }

    // connectivity
    if (g.n > 0) {
        std::vector<char> vis(g.n, 0);
        std::vector<int> stack = {0};
        vis[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.rotation[v]) {
                int w = g.other_end(e, v);
                if (!vis[w]) { vis[w] = 1; cnt++; stack.push_back(w); }
            }
        }
        if (cnt != g.n) throw Error(Err::Disconnected, "graph is not connected");
    }

    // Euler check V - E + F = 2
    if (g.m() > 0) {
        std::vector<std::vector<int>> walks;
        std::vector<int> face_of;
        trace_all_faces(g, walks, face_of);
        long long F = static_cast<long long>(walks.size());
        if (g.n - g.m() + F != 2)
            throw Error(Err::NotPlaneEmbedding,
                        "face tracing yields F=" + std::to_string(F) + ", Euler check failed");
    }
    return g;
}

double face_signed_area(const PlanarGraph& g, const std::vector<int>& walk) {
    double a = 0;
    for (int d : walk) {
        auto [x1, y1] = *g.coords[g.dart_tail(d)];
        auto [x2, y2] = *g.coords[g.dart_head(d)];
        a += x1 * y2 - x2 * y1;
    }
    return a / 2.0;
}

FaceSet trace_faces(const PlanarGraph& g) {
    FaceSet fs;
    if (g.m() == 0) {
        fs.walks.push_back({});
        fs.outer = 0;
        return fs;
    }
    trace_all_faces(g, fs.walks, fs.face_of);

    if (g.has_coords()) {
        // outer face is the unique one traced clockwise
        int best = -1;
        double best_area = 0;
        for (int f = 0; f < fs.count(); ++f) {
            double a = face_signed_area(g, fs.walks[f]);
            if (a < best_area) { best_area = a; best = f; }
        }
        if (best < 0)
            throw Error(Err::NotPlaneEmbedding, "no clockwise face found from coordinates");
        fs.outer = best;
    } else {
        if (g.outer_hint.empty())
            throw Error(Err::SyntaxError, "outer face hint required when coordinates are absent");
        std::set<int> hint(g.outer_hint.begin(), g.outer_hint.end());
        std::vector<int> candidates;
        for (int f = 0; f < fs.count(); ++f) {
            std::set<int> verts;
            for (int d : fs.walks[f]) verts.insert(g.dart_tail(d));
            bool all = std::all_of(hint.begin(), hint.end(),
                                   [&](int v) { return verts.count(v) > 0; });
            if (all) candidates.push_back(f);
        }
        if (candidates.size() > 1) {
            // tiebreak: the face whose walk visits the hint in its cyclic order
            auto visits_in_order = [&](int f) {
                const auto& walk = fs.walks[f];
                int L = static_cast<int>(walk.size());
                const auto& h = g.outer_hint;
                for (int start = 0; start < L; ++start) {
                    size_t hi = 0;
                    for (int i = 0; i < L && hi < h.size(); ++i)
                        if (g.dart_tail(walk[(start + i) % L]) == h[hi]) ++hi;
                    if (hi == h.size()) return true;
                }
                return false;
            };
            std::vector<int> ordered;
            for (int f : candidates)
                if (visits_in_order(f)) ordered.push_back(f);
            if (!ordered.empty()) candidates = ordered;
        }
        if (candidates.empty())
            throw Error(Err::SyntaxError, "outer face hint matches no face");
        if (candidates.size() > 1)
            throw Error(Err::SyntaxError, "outer face hint is ambiguous");
        fs.outer = candidates[0];
    }
    return fs;
}

DualGraph build_dual(const PlanarGraph& g, const FaceSet& faces) {
    DualGraph d;
    d.num_vertices = faces.count();
    d.outer = faces.outer;
    d.ends.resize(g.m());
    d.weight.resize(g.m());
    for (int e = 0; e < g.m(); ++e) {
        d.ends[e] = {faces.face_of[dart_of(e, true)], faces.face_of[dart_of(e, false)]};
        d.weight[e] = g.edges[e].weight;
    }
    d.rotation = faces.walks;
    return d;
}

PlanarGraph subdivide_edge(const PlanarGraph& g, int e) {
    if (e < 0 || e >= g.m()) throw Error(Err::UnknownEdge, "no edge " + std::to_string(e));
    PlanarGraph h = g;
    int x = h.n++;
    int u = h.edges[e].u, v = h.edges[e].v;
    long long w = h.edges[e].weight;
    int e2 = h.m();
    h.edges[e] = {u, x, w};
    h.edges.push_back({x, v, w});
    h.rotation.push_back({e, e2});
    // v keeps its slot, now referring to the new edge
    for (int& re : h.rotation[v])
        if (re == e) re = e2;
    if (g.coords[u] && g.coords[v]) {
        h.coords.push_back(std::make_pair((g.coords[u]->first + g.coords[v]->first) / 2,
                                          (g.coords[u]->second + g.coords[v]->second) / 2));
    } else {
        h.coords.push_back(std::nullopt);
    }
    return h;
}

Preconditions check_preconditions(const PlanarGraph& g) {
    Preconditions p;
    p.simple = true;  // enforced at construction
    std::vector<char> vis(g.n, 0);
    int cnt = 0;
    if (g.n > 0) {
        std::vector<int> stack = {0};
        vis[0] = 1;
        cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.rotation[v]) {
                int w = g.other_end(e, v);
                if (!vis[w]) { vis[w] = 1; cnt++; stack.push_back(w); }
            }
        }
    }
    p.connected = (cnt == g.n);
    if (!p.connected || g.n < 3) {
        p.two_vertex_connected = false;
        return p;
    }
    // remove each vertex in turn; fine at the sizes this library targets
    p.two_vertex_connected = true;
    for (int cut = 0; cut < g.n && p.two_vertex_connected; ++cut) {
        std::fill(vis.begin(), vis.end(), 0);
        vis[cut] = 1;
        int start = cut == 0 ? 1 : 0;
        std::vector<int> stack = {start};
        vis[start] = 1;
        int seen = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.rotation[v]) {
                int w = g.other_end(e, v);
                if (!vis[w]) { vis[w] = 1; seen++; stack.push_back(w); }
            }
        }
        if (seen != g.n - 1) p.two_vertex_connected = false;
    }
    return p;
}

}  // namespace planarcut
