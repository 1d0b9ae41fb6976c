#include "planarcut/homotopy.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <tuple>

namespace planarcut {

namespace {

void append_reduced(Word& w, int letter) {
    if (!w.empty() && w.back() == -letter)
        w.pop_back();
    else
        w.push_back(letter);
}

// strand key: root-down sequence of clockwise child-edge ranks; lexicographic
// comparison with shorter-prefix-first realizes "spawn at the vertex comes
// before any deeper strand".
std::vector<int> strand_key(const CutSystem& cs, int puncture_vx) {
    std::vector<int> path_edges;  // puncture -> root
    for (int v = puncture_vx; cs.parent_edge[v] != -1;) {
        path_edges.push_back(cs.parent_edge[v]);
        v = cs.g.other_end(cs.parent_edge[v], v);
    }
    std::vector<int> key;
    int m_vx = cs.root_vx[puncture_vx];
    for (auto it = path_edges.rbegin(); it != path_edges.rend(); ++it) {
        int child_edge = *it;
        const auto& rot = cs.g.rotation[m_vx];
        int deg = static_cast<int>(rot.size());
        int start;
        if (cs.parent_edge[m_vx] != -1) {
            start = cs.g.rot_index(m_vx, cs.parent_edge[m_vx]);
        } else {
            // root: scan starts at the departure edge of the anchor corner
            const auto& walk = cs.faces.walks[cs.faces.outer];
            int dep = -1;
            for (size_t t = 0; t < walk.size(); ++t) {
                if (cs.g.dart_head(walk[t]) == m_vx &&
                    cs.corner_slot[m_vx] == static_cast<long long>(2 * t + 1)) {
                    dep = edge_of_dart(walk[(t + 1) % walk.size()]);
                    break;
                }
            }
            start = cs.g.rot_index(m_vx, dep);
        }
        key.push_back((cs.g.rot_index(m_vx, child_edge) - start + deg) % deg);
        m_vx = cs.g.other_end(child_edge, m_vx);
    }
    return key;
}

}  // namespace

CutSystem build_cut_system(const PlanarGraph& g, const FaceSet& faces, const DualGraph& dual,
                           std::vector<int> punctures) {
    CutSystem cs;
    cs.g = g;
    cs.faces = faces;
    cs.dual = dual;
    std::sort(punctures.begin(), punctures.end());
    if (std::adjacent_find(punctures.begin(), punctures.end()) != punctures.end())
        throw Error(Err::RayRoutingFailed, "punctures must be distinct");
    for (int v : punctures)
        if (v < 0 || v >= g.n) throw Error(Err::RayRoutingFailed, "puncture out of range");
    cs.punctures = punctures;

    // outer walk slots
    cs.dart_slot.assign(2 * g.m(), -1);
    cs.corner_slot.assign(g.n, -1);
    const auto& walk = faces.walks[faces.outer];
    for (size_t t = 0; t < walk.size(); ++t) {
        cs.dart_slot[walk[t]] = static_cast<long long>(2 * t);
        int v = g.dart_head(walk[t]);
        if (cs.corner_slot[v] == -1) cs.corner_slot[v] = static_cast<long long>(2 * t + 1);
    }

    // shortest-path forest from the outer boundary, boundary vertices in walk order
    cs.parent_edge.assign(g.n, -1);
    cs.root_vx.assign(g.n, -1);
    std::queue<int> q;
    for (int d : walk) {
        int v = g.dart_tail(d);
        if (cs.root_vx[v] == -1) {
            cs.root_vx[v] = v;
            q.push(v);
        }
    }
    if (g.n == 1) cs.root_vx[0] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e : g.rotation[v]) {
            int w = g.other_end(e, v);
            if (cs.root_vx[w] == -1) {
                cs.root_vx[w] = cs.root_vx[v];
                cs.parent_edge[w] = e;
                q.push(w);
            }
        }
    }

    // rays and bundles
    int mu = static_cast<int>(cs.punctures.size());
    cs.ray.resize(mu);
    cs.bundle.assign(g.m(), {});
    cs.rootward.assign(g.m(), -1);
    std::vector<std::vector<int>> keys(mu);
    for (int i = 0; i < mu; ++i) {
        for (int v = cs.punctures[i]; cs.parent_edge[v] != -1;) {
            int e = cs.parent_edge[v];
            cs.ray[i].push_back(e);
            cs.bundle[e].push_back(i);
            cs.rootward[e] = dart_of(e, g.edges[e].u == v);
            v = g.other_end(e, v);
        }
        keys[i] = strand_key(cs, cs.punctures[i]);
    }
    for (auto& b : cs.bundle)
        std::sort(b.begin(), b.end(), [&](int a, int c) {
            if (keys[a] != keys[c]) return keys[a] < keys[c];
            return a < c;
        });

    // anchors: per root corner, in x order (= descending strand key)
    std::map<long long, std::vector<int>> by_corner;
    for (int i = 0; i < mu; ++i)
        by_corner[cs.corner_slot[cs.root_vx[cs.punctures[i]]]].push_back(i);
    for (auto& [slot, ps] : by_corner) {
        std::sort(ps.begin(), ps.end(), [&](int a, int c) {
            if (keys[a] != keys[c]) return keys[a] > keys[c];
            return a > c;
        });
        for (int sub = 0; sub < static_cast<int>(ps.size()); ++sub)
            cs.anchors.push_back({{slot, sub}, ps[sub]});
    }
    std::sort(cs.anchors.begin(), cs.anchors.end());
    return cs;
}

CutSystem build_cut_system(const PlanarGraph& g, std::vector<int> punctures) {
    FaceSet fs = trace_faces(g);
    DualGraph dual = build_dual(g, fs);
    return build_cut_system(g, fs, dual, std::move(punctures));
}

namespace {

// transit through the outer dual vertex: the walk follows the dual arcs of
// the entry and exit boundary edges past the fan origin, which sits after all
// walk slots; tails at anchor slots in between are crossed.
void append_transit(const CutSystem& cs, int prev_dart, int exit_dart, Word& w) {
    long long x_in = cs.dart_slot[reverse_dart(prev_dart)];
    long long x_out = cs.dart_slot[exit_dart];
    // leg toward the fan origin: anchors above x_in, ascending, positive
    for (const auto& [xk, p] : cs.anchors)
        if (xk.first > x_in) append_reduced(w, p + 1);
    // leg back down to the exit: anchors above x_out, descending, negative
    for (auto it = cs.anchors.rbegin(); it != cs.anchors.rend(); ++it)
        if (it->first.first > x_out) append_reduced(w, -(it->second + 1));
}

void append_bundle(const CutSystem& cs, int d, Word& w) {
    const auto& b = cs.bundle[edge_of_dart(d)];
    if (b.empty()) return;
    if (d == cs.rootward[edge_of_dart(d)]) {
        // left-to-right crossing: leftmost strand (largest key) first
        for (auto it = b.rbegin(); it != b.rend(); ++it) append_reduced(w, *it + 1);
    } else {
        for (int p : b) append_reduced(w, -(p + 1));
    }
}

Word word_of(const CutSystem& cs, const DualWalk& walk, bool closed, bool reduced) {
    Word w;
    const auto& D = walk.darts;
    for (size_t i = 0; i < D.size(); ++i) {
        int d = D[i];
        if (cs.faces.face_of[d] == cs.outer()) {
            if (i > 0)
                append_transit(cs, D[i - 1], d, w);
            else if (closed && !D.empty())
                append_transit(cs, D.back(), d, w);
        }
        append_bundle(cs, d, w);
    }
    (void)reduced;
    return w;
}

Word least_rotation(const Word& w) {
    if (w.empty()) return w;
    Word best = w;
    Word cur = w;
    for (size_t i = 1; i < w.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

}  // namespace

Word crossing_word(const CutSystem& cs, const DualWalk& walk, bool closed) {
    // raw sequence: rebuild without the on-the-fly cancellation
    Word w;
    const auto& D = walk.darts;
    for (size_t i = 0; i < D.size(); ++i) {
        int d = D[i];
        if (cs.faces.face_of[d] == cs.outer()) {
            Word t;
            if (i > 0)
                append_transit(cs, D[i - 1], d, t);
            else if (closed && !D.empty())
                append_transit(cs, D.back(), d, t);
            w.insert(w.end(), t.begin(), t.end());
        }
        const auto& b = cs.bundle[edge_of_dart(d)];
        if (!b.empty()) {
            if (d == cs.rootward[edge_of_dart(d)])
                for (auto it = b.rbegin(); it != b.rend(); ++it) w.push_back(*it + 1);
            else
                for (int p : b) w.push_back(-(p + 1));
        }
    }
    return w;
}

Word reduce_word(Word w, bool cyclic) {
    Word r;
    for (int x : w) append_reduced(r, x);
    if (cyclic) {
        while (r.size() >= 2 && r.front() == -r.back()) {
            r.erase(r.begin());
            r.pop_back();
        }
    }
    return r;
}

Word cyclic_canonical(const CutSystem& cs, const DualWalk& walk) {
    Word w = word_of(cs, walk, true, true);
    return least_rotation(reduce_word(std::move(w), true));
}

bool is_valid_walk(const CutSystem& cs, const DualWalk& walk, bool closed) {
    const auto& D = walk.darts;
    for (size_t i = 0; i + 1 < D.size(); ++i)
        if (cs.faces.face_of[reverse_dart(D[i])] != cs.faces.face_of[D[i + 1]]) return false;
    if (closed && !D.empty() &&
        cs.faces.face_of[reverse_dart(D.back())] != cs.faces.face_of[D.front()])
        return false;
    return true;
}

bool same_homotopy(const CutSystem& cs, const DualWalk& a, const DualWalk& b, bool closed) {
    if (closed) {
        return cyclic_canonical(cs, a) == cyclic_canonical(cs, b);
    }
    auto start = [&](const DualWalk& w) {
        return w.empty() ? w.start_face : cs.faces.face_of[w.darts.front()];
    };
    auto end = [&](const DualWalk& w) {
        return w.empty() ? w.start_face : cs.faces.face_of[reverse_dart(w.darts.back())];
    };
    if (start(a) != start(b) || end(a) != end(b))
        throw Error(Err::EndpointMismatch, "open walks must share both endpoints");
    // glue a with the reverse of b; the loop is contractible iff homotopic
    DualWalk loop;
    loop.darts = a.darts;
    for (auto it = b.darts.rbegin(); it != b.darts.rend(); ++it)
        loop.darts.push_back(reverse_dart(*it));
    Word w = word_of(cs, loop, true, true);
    return reduce_word(std::move(w), false).empty();
}

int vertex_side_parity(const CutSystem& cs, const DualWalk& walk, int v) {
    std::set<int> path;
    for (int x = v; cs.parent_edge[x] != -1;) {
        path.insert(cs.parent_edge[x]);
        x = cs.g.other_end(cs.parent_edge[x], x);
    }
    long long corner = cs.corner_slot[cs.root_vx[v]];
    long long cnt = 0;
    const auto& D = walk.darts;
    for (size_t i = 0; i < D.size(); ++i) {
        int d = D[i];
        if (path.count(edge_of_dart(d))) cnt++;
        if (cs.faces.face_of[d] == cs.outer()) {
            int prev = i > 0 ? D[i - 1] : D.back();
            if (corner > cs.dart_slot[reverse_dart(prev)]) cnt++;
            if (corner > cs.dart_slot[d]) cnt++;
        }
    }
    return static_cast<int>(cnt & 1);
}

long long walk_weight(const DualGraph& dual, const DualWalk& walk) {
    long long w = 0;
    for (int d : walk.darts) w += dual.weight[edge_of_dart(d)];
    return w;
}

DualWalk tree_boundary_walk(const PlanarGraph& g, const FaceSet& faces,
                            const std::vector<int>& tree_vertices,
                            const std::vector<int>& tree_edges) {
    DualWalk out;
    if (tree_edges.empty()) {
        if (tree_vertices.size() != 1)
            throw Error(Err::BoundaryNotClosedWalk, "tree without edges must be a single vertex");
        int v = tree_vertices[0];
        for (int e : g.rotation[v]) out.darts.push_back(dart_of(e, g.edges[e].u == v));
        if (out.darts.empty())
            throw Error(Err::BoundaryNotClosedWalk, "isolated vertex has no boundary");
        return out;
    }
    std::vector<char> in_tree(g.m(), 0);
    for (int e : tree_edges) in_tree[e] = 1;
    int e0 = *std::min_element(tree_edges.begin(), tree_edges.end());
    int d0 = dart_of(e0, true);
    int cur = d0;
    do {
        int b = g.dart_head(cur);
        int e = edge_of_dart(cur);
        while (true) {
            e = g.rot_next(b, e);
            if (in_tree[e]) break;
            out.darts.push_back(dart_of(e, g.edges[e].u == b));
        }
        cur = dart_of(e, g.edges[e].u == b);
    } while (cur != d0);
    if (out.darts.empty())
        throw Error(Err::BoundaryNotClosedWalk, "tree has no boundary edges");
    (void)faces;
    return out;
}

int reference_prefix_depth(const CutSystem& cs, const DualWalk& reference) {
    Word w;
    int depth = 0;
    const auto& D = reference.darts;
    for (size_t i = 0; i < D.size(); ++i) {
        int d = D[i];
        if (cs.faces.face_of[d] == cs.outer()) {
            if (i > 0)
                append_transit(cs, D[i - 1], d, w);
            else if (!D.empty())
                append_transit(cs, D.back(), d, w);
        }
        append_bundle(cs, d, w);
        depth = std::max(depth, static_cast<int>(w.size()));
    }
    return depth;
}

namespace {

struct SearchState {
    int face;
    int entry;  // entry dart when face == outer, else -1
    Word word;

    bool operator<(const SearchState& o) const {
        return std::tie(face, entry, word) < std::tie(o.face, o.entry, o.word);
    }
};

}  // namespace

DualWalk shortest_homotopic_cycle(const CutSystem& cs, const DualWalk& reference, int depth_cap,
                                  const ShortestCycleLimits& lim) {
    Word target = cyclic_canonical(cs, reference);
    if (target.empty()) {
        DualWalk w;
        w.start_face = reference.empty() ? reference.start_face
                                         : cs.faces.face_of[reference.darts.front()];
        return w;
    }
    if (depth_cap < static_cast<int>(target.size()))
        throw Error(Err::DepthCapExhausted,
                    "depth cap " + std::to_string(depth_cap) + " below reduced reference length " +
                        std::to_string(target.size()));

    long long best_weight = -1;
    std::vector<int> best_darts;
    Word best_tiekey;
    long long states_budget = lim.max_states;

    auto edge_key = [&](const std::vector<int>& darts) {
        Word ids;
        for (int d : darts) ids.push_back(edge_of_dart(d));
        return least_rotation(ids);
    };

    for (int seed = 0; seed < cs.dual.num_vertices; ++seed) {
        if (seed == cs.outer()) continue;
        using PQItem = std::pair<long long, SearchState>;
        auto cmp = [](const PQItem& a, const PQItem& b) {
            if (a.first != b.first) return a.first > b.first;
            return b.second < a.second;
        };
        std::priority_queue<PQItem, std::vector<PQItem>, decltype(cmp)> pq(cmp);
        std::map<SearchState, long long> dist;
        std::map<SearchState, std::pair<SearchState, int>> parent;
        SearchState s0{seed, -1, {}};
        dist[s0] = 0;
        pq.push({0, s0});
        while (!pq.empty()) {
            auto [wgt, st] = pq.top();
            pq.pop();
            auto it = dist.find(st);
            if (it == dist.end() || it->second < wgt) continue;
            if (--states_budget < 0)
                throw Error(Err::DepthCapExhausted, "state budget exhausted in cycle search");
            if (st.face == seed && st.entry == -1 && wgt > 0 &&
                least_rotation(reduce_word(st.word, true)) == target) {
                // reconstruct
                std::vector<int> darts;
                SearchState cur = st;
                while (!(cur.face == seed && cur.entry == -1 && cur.word.empty())) {
                    auto pit = parent.find(cur);
                    darts.push_back(pit->second.second);
                    cur = pit->second.first;
                }
                std::reverse(darts.begin(), darts.end());
                Word tk = edge_key(darts);
                if (best_weight < 0 || wgt < best_weight ||
                    (wgt == best_weight && tk < best_tiekey)) {
                    best_weight = wgt;
                    best_darts = darts;
                    best_tiekey = tk;
                }
                break;
            }
            if (best_weight >= 0 && wgt > best_weight) break;
            for (int d : cs.dual.rotation[st.face]) {
                Word nw = st.word;
                if (st.face == cs.outer()) {
                    if (st.entry == -1) continue;  // seeds are never the outer face
                    append_transit(cs, st.entry, d, nw);
                }
                append_bundle(cs, d, nw);
                if (static_cast<int>(nw.size()) > depth_cap) continue;
                int nf = cs.faces.face_of[reverse_dart(d)];
                SearchState ns{nf, nf == cs.outer() ? d : -1, std::move(nw)};
                long long nwgt = wgt + cs.dual.weight[edge_of_dart(d)];
                if (best_weight >= 0 && nwgt > best_weight) continue;
                auto dit = dist.find(ns);
                if (dit == dist.end() || nwgt < dit->second) {
                    dist[ns] = nwgt;
                    parent[ns] = {st, d};
                    pq.push({nwgt, ns});
                }
            }
        }
    }
    if (best_weight < 0)
        throw Error(Err::DepthCapExhausted, "no homotopic cycle found within the depth cap");
    DualWalk out;
    out.darts = best_darts;
    return out;
}

}  // namespace planarcut
