#include "planarcut/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "planarcut/oracle.hpp"

namespace planarcut {

int joint_vertex_bound(int p) { return std::max(0, 2 * p - 4); }

bool enumerate_joint_sets(const DualGraph& dual, int p,
                          const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> eligible;
    for (int f = 0; f < dual.num_vertices; ++f)
        if (f != dual.outer) eligible.push_back(f);
    int bound = std::min(joint_vertex_bound(p), static_cast<int>(eligible.size()));
    std::vector<int> pick;
    // subsets by ascending size, lexicographic within a size
    for (int s = 0; s <= bound; ++s) {
        std::vector<int> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            pick.clear();
            for (int i : idx) pick.push_back(eligible[i]);
            if (!visit(pick)) return false;
            if (s == 0) break;
            int i = s - 1;
            while (i >= 0 && idx[i] == static_cast<int>(eligible.size()) - s + i) --i;
            if (i < 0) break;
            idx[i]++;
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return true;
}

std::vector<InclusionForest> enumerate_inclusion_forests(int p) {
    std::vector<InclusionForest> out;
    std::vector<int> parent(p, -1);
    auto acyclic = [&]() {
        for (int i = 0; i < p; ++i) {
            int v = i, steps = 0;
            while (v != -1 && steps++ <= p) v = parent[v];
            if (v != -1) return false;
        }
        return true;
    };
    // odometer over parent vectors in {-1,0..p-1}^p
    while (true) {
        bool self = false;
        for (int i = 0; i < p; ++i)
            if (parent[i] == i) self = true;
        if (!self && acyclic()) out.push_back({parent});
        int i = p - 1;
        while (i >= 0 && parent[i] == p - 1) { parent[i] = -1; --i; }
        if (i < 0) break;
        parent[i]++;
    }
    return out;
}

bool enumerate_interval_assignments(const PlanarGraph& g, const FaceSet& faces,
                                    const std::vector<int>& joint_faces, int p,
                                    const std::vector<std::vector<int>>& clusters, int cap,
                                    const std::function<bool(const IntervalAssignment&)>& visit) {
    // boundary vertex cycles
    std::vector<std::vector<int>> cyc;
    std::set<int> involved;
    for (int f : joint_faces) {
        std::vector<int> verts;
        for (int d : faces.walks[f]) verts.push_back(g.dart_tail(d));
        involved.insert(verts.begin(), verts.end());
        cyc.push_back(std::move(verts));
    }
    std::vector<int> vs(involved.begin(), involved.end());

    std::vector<int> pinned(g.n, -1);
    for (int i = 0; i < p; ++i)
        for (int v : clusters[i]) pinned[v] = i;

    std::vector<int> label(g.n, -1);
    std::vector<int> free_vs;
    for (int v : vs) {
        if (pinned[v] >= 0)
            label[v] = pinned[v];
        else
            free_vs.push_back(v);
    }

    auto face_ok = [&](const std::vector<int>& verts) {
        int L = static_cast<int>(verts.size());
        std::set<int> present;
        std::vector<int> runs(p, 0);
        for (int i = 0; i < L; ++i) {
            int c = label[verts[i]];
            present.insert(c);
            if (label[verts[(i + 1) % L]] != c) runs[c]++;
        }
        if (present.size() < 2) return false;
        for (int c : present)
            if (runs[c] > cap) return false;  // runs[c]==0 means the whole cycle
        return true;
    };

    std::function<bool()> rec = [&]() -> bool {
        size_t next = 0;
        while (next < free_vs.size() && label[free_vs[next]] != -1) ++next;
        if (next == free_vs.size()) {
            for (const auto& verts : cyc)
                if (!face_ok(verts)) return true;  // skip, keep enumerating
            IntervalAssignment ia;
            ia.B.assign(p, {});
            for (size_t fi = 0; fi < cyc.size(); ++fi) {
                const auto& verts = cyc[fi];
                int L = static_cast<int>(verts.size());
                std::vector<std::tuple<int, int, int>> ivs;
                int start = 0;
                for (int i = 0; i < L; ++i)
                    if (label[verts[i]] != label[verts[(i + L - 1) % L]]) { start = i; break; }
                int i = start;
                do {
                    int c = label[verts[i]];
                    int j = i;
                    while (label[verts[(j + 1) % L]] == c && (j + 1) % L != start) j = (j + 1) % L;
                    ivs.emplace_back(i, j % L, c);
                    i = (j + 1) % L;
                } while (i != start);
                ia.intervals.push_back(std::move(ivs));
            }
            for (int v : vs) ia.B[label[v]].push_back(v);
            for (auto& b : ia.B) std::sort(b.begin(), b.end());
            return visit(ia);
        }
        int v = free_vs[next];
        for (int c = 0; c < p; ++c) {
            label[v] = c;
            if (!rec()) { label[v] = -1; return false; }
        }
        label[v] = -1;
        return true;
    };
    return rec();
}

std::optional<std::vector<std::vector<int>>> find_disjoint_trees(
    const PlanarGraph& g, const std::vector<std::vector<int>>& mandatory) {
    int p = static_cast<int>(mandatory.size());
    std::vector<int> label(g.n, -1);
    for (int i = 0; i < p; ++i) {
        if (mandatory[i].empty()) return std::nullopt;
        for (int v : mandatory[i]) {
            if (label[v] != -1 && label[v] != i) return std::nullopt;
            label[v] = i;
        }
    }

    auto cluster_component = [&](int i) {
        // component of mandatory[i][0] within label class i
        std::vector<int> comp;
        std::vector<char> vis(g.n, 0);
        std::vector<int> stack = {mandatory[i][0]};
        vis[mandatory[i][0]] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int e : g.rotation[v]) {
                int w = g.other_end(e, v);
                if (!vis[w] && label[w] == i) { vis[w] = 1; stack.push_back(w); }
            }
        }
        return comp;
    };

    auto reachable_ok = [&](int i) {
        // all mandatory[i] reachable through free or own-label vertices
        std::vector<char> vis(g.n, 0);
        std::vector<int> stack = {mandatory[i][0]};
        vis[mandatory[i][0]] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.rotation[v]) {
                int w = g.other_end(e, v);
                if (!vis[w] && (label[w] == -1 || label[w] == i)) { vis[w] = 1; stack.push_back(w); }
            }
        }
        for (int v : mandatory[i])
            if (!vis[v]) return false;
        return true;
    };

    std::function<bool()> rec = [&]() -> bool {
        int deficient = -1;
        std::vector<int> comp;
        for (int i = 0; i < p; ++i) {
            comp = cluster_component(i);
            std::set<int> cs(comp.begin(), comp.end());
            bool all = std::all_of(mandatory[i].begin(), mandatory[i].end(),
                                   [&](int v) { return cs.count(v) > 0; });
            if (!all) { deficient = i; break; }
        }
        if (deficient == -1) return true;
        if (!reachable_ok(deficient)) return false;
        comp = cluster_component(deficient);
        std::set<int> frontier;
        for (int v : comp)
            for (int e : g.rotation[v]) {
                int w = g.other_end(e, v);
                if (label[w] == -1) frontier.insert(w);
            }
        for (int f : frontier) {
            label[f] = deficient;
            if (rec()) return true;
            label[f] = -1;
        }
        return false;
    };
    if (!rec()) return std::nullopt;
    std::vector<std::vector<int>> out(p);
    for (int i = 0; i < p; ++i) {
        out[i] = cluster_component(i);
        std::sort(out[i].begin(), out[i].end());
    }
    return out;
}

DualWalk reference_curve(const PlanarGraph& g, const FaceSet& faces,
                         const std::vector<int>& tree_vertices) {
    std::set<int> in_set(tree_vertices.begin(), tree_vertices.end());
    // BFS spanning tree inside the induced subgraph
    std::vector<int> tree_edges;
    std::vector<char> vis(g.n, 0);
    int root = *std::min_element(tree_vertices.begin(), tree_vertices.end());
    std::vector<int> queue = {root};
    vis[root] = 1;
    size_t qi = 0;
    while (qi < queue.size()) {
        int v = queue[qi++];
        for (int e : g.rotation[v]) {
            int w = g.other_end(e, v);
            if (in_set.count(w) && !vis[w]) {
                vis[w] = 1;
                tree_edges.push_back(e);
                queue.push_back(w);
            }
        }
    }
    if (queue.size() != tree_vertices.size())
        throw Error(Err::BoundaryNotClosedWalk, "tree vertex set is not connected");
    return tree_boundary_walk(g, faces, tree_vertices, tree_edges);
}

namespace {

struct Component {
    PlanarGraph g;
    FaceSet faces;
    DualGraph dual;
    std::vector<int> orig_vertex;  // local -> instance
    std::vector<int> orig_edge;
    std::map<int, int> vmap;  // instance -> local

    bool has(int instance_vertex) const { return vmap.count(instance_vertex) > 0; }
};

FaceSet trace_faces_raw(const PlanarGraph& g) {
    FaceSet fs;
    if (g.m() == 0) {
        fs.walks.push_back({});
        fs.outer = 0;
        return fs;
    }
    fs.face_of.assign(2 * g.m(), -1);
    for (int d0 = 0; d0 < 2 * g.m(); ++d0) {
        if (fs.face_of[d0] != -1) continue;
        std::vector<int> walk;
        int d = d0;
        int fid = fs.count();
        do {
            fs.face_of[d] = fid;
            walk.push_back(d);
            int v = g.dart_head(d);
            int e2 = g.rot_next(v, edge_of_dart(d));
            d = dart_of(e2, g.edges[e2].u == v);
        } while (d != d0);
        fs.walks.push_back(std::move(walk));
    }
    return fs;
}

struct DSU {
    std::vector<int> up;
    explicit DSU(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
    void unite(int a, int b) { up[find(a)] = find(b); }
};

Component make_root_component(const PlanarGraph& g, const FaceSet& faces, const DualGraph& dual) {
    Component c;
    c.g = g;
    c.faces = faces;
    c.dual = dual;
    c.orig_vertex.resize(g.n);
    std::iota(c.orig_vertex.begin(), c.orig_vertex.end(), 0);
    c.orig_edge.resize(g.m());
    std::iota(c.orig_edge.begin(), c.orig_edge.end(), 0);
    for (int v = 0; v < g.n; ++v) c.vmap[v] = v;
    return c;
}

// Splits parent minus (deleted edges, removed vertices) into components, each
// with its faces and dual. The outer face of each piece is the one whose
// region absorbed the parent's outer face, falling back to the region where
// the deletions happened.
std::vector<Component> split_components(const Component& parent,
                                        const std::vector<char>& delete_edge,
                                        const std::vector<char>& remove_vertex) {
    const PlanarGraph& pg = parent.g;
    std::vector<char> edge_alive(pg.m(), 0);
    for (int e = 0; e < pg.m(); ++e)
        edge_alive[e] = !delete_edge[e] && !remove_vertex[pg.edges[e].u] && !remove_vertex[pg.edges[e].v];

    DSU vcomp(pg.n);
    for (int e = 0; e < pg.m(); ++e)
        if (edge_alive[e]) vcomp.unite(pg.edges[e].u, pg.edges[e].v);

    // face merge across every dead parent edge
    DSU fmerge(parent.faces.count());
    for (int e = 0; e < pg.m(); ++e)
        if (!edge_alive[e])
            fmerge.unite(parent.faces.face_of[dart_of(e, true)],
                         parent.faces.face_of[dart_of(e, false)]);
    std::set<int> removed_adjacent_classes;
    for (int v = 0; v < pg.n; ++v)
        if (remove_vertex[v])
            for (int e : pg.rotation[v]) {
                removed_adjacent_classes.insert(fmerge.find(parent.faces.face_of[dart_of(e, true)]));
                removed_adjacent_classes.insert(fmerge.find(parent.faces.face_of[dart_of(e, false)]));
            }
    int outer_class = fmerge.find(parent.faces.outer);
    std::vector<int> class_size(parent.faces.count(), 0);
    for (int f = 0; f < parent.faces.count(); ++f) class_size[fmerge.find(f)]++;

    std::map<int, std::vector<int>> groups;  // representative -> parent-local vertices
    for (int v = 0; v < pg.n; ++v)
        if (!remove_vertex[v]) groups[vcomp.find(v)].push_back(v);

    std::vector<Component> out;
    for (auto& [rep, verts] : groups) {
        Component c;
        std::map<int, int> lmap;
        for (int v : verts) {
            lmap[v] = static_cast<int>(c.orig_vertex.size());
            c.orig_vertex.push_back(parent.orig_vertex[v]);
            c.vmap[parent.orig_vertex[v]] = lmap[v];
        }
        c.g.n = static_cast<int>(verts.size());
        c.g.coords.resize(c.g.n);
        std::map<int, int> emap;
        std::vector<int> parent_edge_of;  // local edge -> parent-local edge
        for (int v : verts) {
            if (pg.coords[v]) c.g.coords[lmap[v]] = pg.coords[v];
        }
        for (int e = 0; e < pg.m(); ++e) {
            if (!edge_alive[e]) continue;
            if (vcomp.find(pg.edges[e].u) != rep) continue;
            emap[e] = static_cast<int>(c.g.edges.size());
            parent_edge_of.push_back(e);
            c.g.edges.push_back({lmap[pg.edges[e].u], lmap[pg.edges[e].v], pg.edges[e].weight});
            c.orig_edge.push_back(parent.orig_edge[e]);
        }
        c.g.rotation.resize(c.g.n);
        for (int v : verts)
            for (int e : pg.rotation[v])
                if (emap.count(e)) c.g.rotation[lmap[v]].push_back(emap[e]);

        c.faces = trace_faces_raw(c.g);
        if (c.g.m() == 0) {
            c.dual = build_dual(c.g, c.faces);
            out.push_back(std::move(c));
            continue;
        }
        // local face -> parent face class via any contained dart
        int outer_local = -1, removed_local = -1, merged_local = -1;
        for (int lf = 0; lf < c.faces.count(); ++lf) {
            int ld = c.faces.walks[lf].front();
            int pe = parent_edge_of[edge_of_dart(ld)];
            int pdart = dart_of(pe, (ld & 1) == 0);
            int cls = fmerge.find(parent.faces.face_of[pdart]);
            if (cls == outer_class && outer_local == -1) outer_local = lf;
            if (removed_adjacent_classes.count(cls) && removed_local == -1) removed_local = lf;
            if (class_size[cls] > 1 && merged_local == -1) merged_local = lf;
        }
        c.faces.outer = outer_local != -1 ? outer_local
                        : removed_local != -1 ? removed_local
                        : merged_local != -1 ? merged_local
                                             : 0;
        c.dual = build_dual(c.g, c.faces);
        out.push_back(std::move(c));
    }
    return out;
}

struct RunState {
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline = false;
    std::atomic<long long> joint_budget;
    std::atomic<long long> interval_budget;
    std::atomic<bool> truncated{false};

    std::mutex mu;
    long long best_w = -1;
    std::vector<int> best_edges;

    bool timed_out() {
        if (!has_deadline) return false;
        if (std::chrono::steady_clock::now() > deadline) {
            truncated = true;
            return true;
        }
        return false;
    }

    long long best_weight() {
        std::lock_guard lk(mu);
        return best_w;
    }

    void offer(long long w, const std::vector<int>& edges) {
        std::lock_guard lk(mu);
        if (best_w < 0 || w < best_w || (w == best_w && edges < best_edges)) {
            best_w = w;
            best_edges = edges;
        }
    }
};

// One enumeration branch: fixed clusters, fixed B sets, tree vertex sets.
// Processes clusters in every children-first order via recursion; prunes on
// the shared incumbent.
struct BranchRunner {
    const PlanarGraph& G;
    const std::vector<std::vector<int>>& clusters;   // instance vertex ids
    const std::vector<std::vector<int>>& mandatory;  // T_i u B_i
    const std::vector<std::vector<int>>& trees;      // S_i from find_disjoint_trees
    const SolverConfig& cfg;
    RunState& rs;
    const std::function<bool(const std::vector<int>&)>& candidate_valid;
    std::set<int> all_punctures;  // instance ids
    bool used_homotopy = false;

    BranchRunner(const PlanarGraph& G_, const std::vector<std::vector<int>>& cl,
                 const std::vector<std::vector<int>>& mand, const std::vector<std::vector<int>>& tr,
                 const SolverConfig& cfg_, RunState& rs_,
                 const std::function<bool(const std::vector<int>&)>& cv)
        : G(G_), clusters(cl), mandatory(mand), trees(tr), cfg(cfg_), rs(rs_), candidate_valid(cv) {
        for (const auto& m : mandatory) all_punctures.insert(m.begin(), m.end());
    }

    long long weight_of(const std::set<int>& edges) const {
        long long w = 0;
        for (int e : edges) w += G.edges[e].weight;
        return w;
    }

    // returns cut in instance edge ids, or nullopt to reject the branch step
    std::optional<std::vector<int>> cluster_cut(const Component& comp, int i) {
        std::vector<int> own_local, others_local;
        for (int v : all_punctures) {
            if (!comp.has(v)) continue;
            bool own = std::find(mandatory[i].begin(), mandatory[i].end(), v) != mandatory[i].end();
            (own ? own_local : others_local).push_back(comp.vmap.at(v));
        }
        bool has_b = mandatory[i].size() > clusters[i].size();
        if (!has_b) {
            std::vector<int> t_local;
            for (int v : clusters[i]) t_local.push_back(comp.vmap.at(v));
            CutSolution mc = min_cut(comp.g, t_local, others_local);
            std::vector<int> inst;
            for (int e : mc.edges) inst.push_back(comp.orig_edge[e]);
            return inst;
        }
        // homotopy route: tree must be fully present
        std::vector<int> s_local;
        for (int v : trees[i]) {
            if (!comp.has(v)) return std::nullopt;
            s_local.push_back(comp.vmap.at(v));
        }
        std::vector<int> punct_local = own_local;
        punct_local.insert(punct_local.end(), others_local.begin(), others_local.end());
        try {
            CutSystem cs = build_cut_system(comp.g, comp.faces, comp.dual, punct_local);
            DualWalk ref = reference_curve(comp.g, comp.faces, s_local);
            Word target = cyclic_canonical(cs, ref);
            int cap = cfg.depth_cap >= 0
                          ? cfg.depth_cap
                          : static_cast<int>(target.size()) + 2 * static_cast<int>(punct_local.size());
            cap = std::max(cap, reference_prefix_depth(cs, ref));
            used_homotopy = true;
            DualWalk cyc = shortest_homotopic_cycle(cs, ref, cap, {cfg.max_search_states});
            // separation: own punctures on one side, every other on the other
            int own_side = -1, other_side = -1;
            for (int v : own_local) {
                int s = vertex_side_parity(cs, cyc, v);
                if (own_side == -1) own_side = s;
                if (s != own_side) return std::nullopt;
            }
            for (int v : others_local) {
                int s = vertex_side_parity(cs, cyc, v);
                if (other_side == -1) other_side = s;
                if (s != other_side || s == own_side) return std::nullopt;
            }
            std::set<int> es;
            for (int d : cyc.darts) es.insert(edge_of_dart(d));
            std::vector<int> inst;
            for (int e : es) inst.push_back(comp.orig_edge[e]);
            return inst;
        } catch (const Error& err) {
            if (err.code == Err::DepthCapExhausted || err.code == Err::BoundaryNotClosedWalk ||
                err.code == Err::RayRoutingFailed) {
                if (err.code == Err::DepthCapExhausted) rs.truncated = true;
                return std::nullopt;
            }
            throw;
        }
    }

    void rec(std::vector<Component>& pieces, std::set<int>& acc, std::vector<char>& done,
             int remaining) {
        if (rs.timed_out()) return;
        if (remaining <= 1) {
            std::vector<int> edges(acc.begin(), acc.end());
            if (!candidate_valid(edges)) return;
            rs.offer(weight_of(acc), edges);
            return;
        }
        int p = static_cast<int>(clusters.size());
        for (int i = 0; i < p; ++i) {
            if (done[i]) continue;
            // locate the piece holding cluster i
            int pidx = -1;
            bool split_cluster = false;
            for (size_t j = 0; j < pieces.size() && !split_cluster; ++j) {
                bool any = false, all = true;
                for (int v : clusters[i]) {
                    if (pieces[j].has(v))
                        any = true;
                    else
                        all = false;
                }
                if (any && !all) split_cluster = true;
                if (any && all) pidx = static_cast<int>(j);
            }
            if (split_cluster || pidx == -1) continue;
            Component& comp = pieces[pidx];

            bool others_present = false;
            for (int v : all_punctures)
                if (comp.has(v) &&
                    std::find(mandatory[i].begin(), mandatory[i].end(), v) == mandatory[i].end())
                    others_present = true;

            std::vector<Component> next_pieces;
            std::set<int> next_acc = acc;
            if (!others_present) {
                // cluster alone in its piece: drop the piece
                for (size_t j = 0; j < pieces.size(); ++j)
                    if (static_cast<int>(j) != pidx) next_pieces.push_back(pieces[j]);
            } else {
                auto cut = cluster_cut(comp, i);
                if (!cut) continue;
                for (int e : *cut) next_acc.insert(e);
                long long w = weight_of(next_acc);
                long long incumbent = rs.best_weight();
                if (incumbent >= 0 && w > incumbent) continue;
                // delete the cut, remove the component holding cluster i
                std::vector<char> del(comp.g.m(), 0);
                std::set<int> cut_set(cut->begin(), cut->end());
                for (int e = 0; e < comp.g.m(); ++e)
                    if (cut_set.count(comp.orig_edge[e])) del[e] = 1;
                DSU sub(comp.g.n);
                for (int e = 0; e < comp.g.m(); ++e)
                    if (!del[e]) sub.unite(comp.g.edges[e].u, comp.g.edges[e].v);
                int krep = sub.find(comp.vmap.at(clusters[i][0]));
                bool coherent = true;
                for (int v : clusters[i])
                    if (sub.find(comp.vmap.at(v)) != krep) coherent = false;
                for (int v : mandatory[i])
                    if (comp.has(v) && sub.find(comp.vmap.at(v)) != krep) coherent = false;
                if (!coherent) continue;
                bool foreign_inside = false;
                for (int v : all_punctures)
                    if (comp.has(v) && sub.find(comp.vmap.at(v)) == krep &&
                        std::find(mandatory[i].begin(), mandatory[i].end(), v) ==
                            mandatory[i].end())
                        foreign_inside = true;
                if (foreign_inside) continue;
                std::vector<char> rem(comp.g.n, 0);
                for (int v = 0; v < comp.g.n; ++v)
                    if (sub.find(v) == krep) rem[v] = 1;
                next_pieces = split_components(comp, del, rem);
                for (size_t j = 0; j < pieces.size(); ++j)
                    if (static_cast<int>(j) != pidx) next_pieces.push_back(pieces[j]);
            }
            done[i] = 1;
            rec(next_pieces, next_acc, done, remaining - 1);
            done[i] = 0;
        }
    }
};

struct ClusterTask {
    std::vector<std::vector<int>> clusters;
};

// exact lower bound on any multi-cluster cut for these clusters
long long cluster_lower_bound(const PlanarGraph& g, const std::vector<std::vector<int>>& clusters) {
    long long lb = 0;
    std::vector<int> rest;
    for (size_t i = 0; i < clusters.size(); ++i) {
        rest.clear();
        for (size_t j = 0; j < clusters.size(); ++j)
            if (j != i) rest.insert(rest.end(), clusters[j].begin(), clusters[j].end());
        if (rest.empty()) continue;
        lb = std::max(lb, min_cut(g, clusters[i], rest).weight);
    }
    return lb;
}

void solve_clusters(const PlanarGraph& G, const FaceSet& faces, const DualGraph& dual,
                    const std::vector<std::vector<int>>& clusters, const SolverConfig& cfg,
                    RunState& rs, const std::function<bool(const std::vector<int>&)>& valid) {
    int p = static_cast<int>(clusters.size());
    if (p <= 1) {
        rs.offer(0, {});
        return;
    }
    {
        long long inc = rs.best_weight();
        if (inc >= 0 && cluster_lower_bound(G, clusters) > inc) return;
    }
    Component root = make_root_component(G, faces, dual);
    std::set<std::vector<std::vector<int>>> seen_mandatory;

    enumerate_joint_sets(dual, p, [&](const std::vector<int>& js) {
        if (rs.timed_out()) return false;
        if (--rs.joint_budget < 0) {
            rs.truncated = true;
            return false;
        }
        enumerate_interval_assignments(
            G, faces, js, p, clusters, p + 1, [&](const IntervalAssignment& ia) {
                if (rs.timed_out()) return false;
                if (--rs.interval_budget < 0) {
                    rs.truncated = true;
                    return false;
                }
                std::vector<std::vector<int>> mandatory(p);
                for (int i = 0; i < p; ++i) {
                    std::set<int> m(clusters[i].begin(), clusters[i].end());
                    m.insert(ia.B[i].begin(), ia.B[i].end());
                    mandatory[i] = {m.begin(), m.end()};
                }
                if (!seen_mandatory.insert(mandatory).second) return true;
                auto trees = find_disjoint_trees(G, mandatory);
                if (!trees) return true;
                BranchRunner br(G, clusters, mandatory, *trees, cfg, rs, valid);
                std::vector<Component> pieces = {root};
                std::set<int> acc;
                std::vector<char> done(p, 0);
                br.rec(pieces, acc, done, p);
                return true;
            });
        return !rs.timed_out();
    });
}

CutSolution finalize(const MCCInstance* mcc, const MinMCInstance* minmc, RunState& rs) {
    if (rs.best_w < 0) throw Error(Err::NoFeasibleCandidate, "no valid candidate found");
    CutSolution sol = mcc ? validate_cut(*mcc, rs.best_edges) : validate_cut(*minmc, rs.best_edges);
    sol.exact = !rs.truncated.load();
    return sol;
}

void require_solver_preconditions(const PlanarGraph& g) {
    Preconditions pre = check_preconditions(g);
    if (!pre.ok()) {
        std::string what = !pre.connected ? "connected" : "2-vertex-connected";
        throw Error(Err::InfeasibleParams, "solver requires a " + what + " input graph");
    }
}

// all refinements of the given clusters: product of set partitions per cluster
void refinements_rec(const std::vector<std::vector<int>>& clusters, size_t idx,
                     std::vector<std::vector<int>>& cur,
                     std::vector<std::vector<std::vector<int>>>& out) {
    if (idx == clusters.size()) {
        out.push_back(cur);
        return;
    }
    const auto& T = clusters[idx];
    int t = static_cast<int>(T.size());
    std::vector<int> a(t, 0);
    while (true) {
        int blocks = t == 0 ? 0 : *std::max_element(a.begin(), a.end()) + 1;
        size_t base = cur.size();
        for (int b = 0; b < blocks; ++b) cur.push_back({});
        for (int i = 0; i < t; ++i) cur[base + a[i]].push_back(T[i]);
        refinements_rec(clusters, idx + 1, cur, out);
        cur.resize(base);
        int i = t - 1;
        while (i > 0) {
            int mx = 0;
            for (int j = 0; j < i; ++j) mx = std::max(mx, a[j]);
            if (a[i] <= mx) break;
            --i;
        }
        if (i <= 0) break;
        a[i]++;
        std::fill(a.begin() + i + 1, a.end(), 0);
    }
}

void run_tasks(const PlanarGraph& G, const FaceSet& faces, const DualGraph& dual,
               std::vector<ClusterTask>& tasks, const SolverConfig& cfg, RunState& rs,
               const std::function<bool(const std::vector<int>&)>& valid) {
    std::atomic<size_t> next{0};
    int jobs = std::max(1, cfg.jobs);
    auto worker = [&]() {
        while (true) {
            size_t k = next.fetch_add(1);
            if (k >= tasks.size()) break;
            solve_clusters(G, faces, dual, tasks[k].clusters, cfg, rs, valid);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
}

}  // namespace

CutSolution solve_mcc(const MCCInstance& inst, const SolverConfig& cfg) {
    require_solver_preconditions(inst.graph);
    if (inst.p() <= 1) {
        CutSolution sol;
        sol.valid = true;
        sol.exact = true;
        sol.component.assign(inst.graph.n, 0);
        sol.num_components = inst.graph.n > 0 ? 1 : 0;
        sol.cluster_component_count.assign(inst.p(), 1);
        return sol;
    }
    FaceSet faces = trace_faces(inst.graph);
    DualGraph dual = build_dual(inst.graph, faces);

    RunState rs;
    rs.joint_budget = cfg.max_joint_sets;
    rs.interval_budget = cfg.max_interval_assignments;
    if (cfg.time_limit_sec > 0) {
        rs.has_deadline = true;
        rs.deadline = std::chrono::steady_clock::now() +
                      std::chrono::milliseconds(static_cast<long long>(cfg.time_limit_sec * 1000));
    }
    auto valid = [&](const std::vector<int>& edges) {
        return validate_cut(inst, edges).valid;
    };
    // all-edges fallback keeps NoFeasibleCandidate out of normal operation
    {
        std::vector<int> all(inst.graph.m());
        std::iota(all.begin(), all.end(), 0);
        if (valid(all)) rs.offer(inst.graph.total_weight(), all);
    }
    std::vector<std::vector<std::vector<int>>> refs;
    {
        std::vector<std::vector<int>> cur;
        refinements_rec(inst.clusters, 0, cur, refs);
    }
    std::vector<ClusterTask> tasks;
    for (auto& r : refs) tasks.push_back({r});
    run_tasks(inst.graph, faces, dual, tasks, cfg, rs, valid);
    CutSolution sol = finalize(&inst, nullptr, rs);
    if (cfg.check_oracle) {
        CutSolution o = oracle_mcc(inst);
        if (o.weight != sol.weight)
            throw Error(Err::NoFeasibleCandidate,
                        "oracle mismatch: solver " + std::to_string(sol.weight) + " vs oracle " +
                            std::to_string(o.weight));
    }
    return sol;
}

CutSolution solve_minmc(const MinMCInstance& inst, const SolverConfig& cfg) {
    require_solver_preconditions(inst.graph);
    FaceSet faces = trace_faces(inst.graph);
    DualGraph dual = build_dual(inst.graph, faces);

    RunState rs;
    rs.joint_budget = cfg.max_joint_sets;
    rs.interval_budget = cfg.max_interval_assignments;
    if (cfg.time_limit_sec > 0) {
        rs.has_deadline = true;
        rs.deadline = std::chrono::steady_clock::now() +
                      std::chrono::milliseconds(static_cast<long long>(cfg.time_limit_sec * 1000));
    }
    auto valid = [&](const std::vector<int>& edges) {
        return validate_cut(inst, edges).valid;
    };
    {
        std::vector<int> all(inst.graph.m());
        std::iota(all.begin(), all.end(), 0);
        if (valid(all)) rs.offer(inst.graph.total_weight(), all);
    }
    auto clusterings = enumerate_clusterings(inst);
    std::vector<ClusterTask> tasks;
    for (const auto& cl : clusterings) tasks.push_back({cl.blocks});
    // small cluster counts first: cheap candidates tighten the incumbent early
    std::stable_sort(tasks.begin(), tasks.end(), [](const ClusterTask& a, const ClusterTask& b) {
        return a.clusters.size() < b.clusters.size();
    });
    run_tasks(inst.graph, faces, dual, tasks, cfg, rs, valid);
    CutSolution sol = finalize(nullptr, &inst, rs);
    if (cfg.check_oracle) {
        CutSolution o = oracle_minmc(inst);
        if (o.weight != sol.weight)
            throw Error(Err::NoFeasibleCandidate,
                        "oracle mismatch: solver " + std::to_string(sol.weight) + " vs oracle " +
                            std::to_string(o.weight));
    }
    return sol;
}

}  // namespace planarcut
