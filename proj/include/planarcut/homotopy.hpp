#pragma once

#include <optional>
#include <vector>

#include "planarcut/planar_graph.hpp"

namespace planarcut {

// A walk in the dual graph is a sequence of primal darts. The step for dart d
// crosses edge(d) from the face left of d to the face left of reverse(d).
// Consecutive steps must chain: face_of(rev(darts[i])) == face_of(darts[i+1]).
struct DualWalk {
    std::vector<int> darts;
    int start_face = -1;  // used when darts is empty

    bool empty() const { return darts.empty(); }
    int size() const { return static_cast<int>(darts.size()); }
};

// Crossing words live in the free group on the punctures: letter +(i+1) is a
// left-to-right crossing of puncture i's ray, -(i+1) the reverse.
using Word = std::vector<int>;

// Homotopy of dual walks relative to the puncture faces, encoded by signed
// crossings of a system of rays. Each puncture is joined to the outer
// boundary along a shortest-path forest rooted at the outer face vertices and
// continues to infinity at an anchor corner of the outer walk. Rays routed
// through shared forest edges run as parallel non-crossing strands; the
// per-edge strand order is fixed by a global comparator so the whole system
// is realizable by pairwise disjoint arcs.
struct CutSystem {
    PlanarGraph g;
    FaceSet faces;
    DualGraph dual;
    std::vector<int> punctures;  // sorted vertex ids

    // boundary forest
    std::vector<int> parent_edge;  // -1 at roots
    std::vector<int> root_vx;
    std::vector<std::vector<int>> ray;  // per puncture: edges, puncture -> root

    // per edge: punctures whose ray uses it, in strand-key order; the dart
    // from child to parent for forest edges with a nonempty bundle
    std::vector<std::vector<int>> bundle;
    std::vector<int> rootward;

    // outer walk slots: darts at even positions, corners at odd ones
    std::vector<long long> dart_slot;          // per dart, -1 if not on outer walk
    std::vector<long long> corner_slot;        // per vertex: first corner, -1 if interior
    std::vector<std::pair<std::pair<long long, int>, int>> anchors;  // ((slot,sub), puncture)

    int outer() const { return faces.outer; }
};

CutSystem build_cut_system(const PlanarGraph& g, const FaceSet& faces, const DualGraph& dual,
                           std::vector<int> punctures);
CutSystem build_cut_system(const PlanarGraph& g, std::vector<int> punctures);

/// Raw signed crossing sequence of a walk (no reduction applied).
Word crossing_word(const CutSystem& cs, const DualWalk& walk, bool closed);

/// Free reduction; with cyclic=true also cancels across the wrap-around.
Word reduce_word(Word w, bool cyclic);

/// Canonical representative of a closed walk's homotopy class: the
/// lexicographically least rotation of the cyclically reduced word.
Word cyclic_canonical(const CutSystem& cs, const DualWalk& walk);

bool same_homotopy(const CutSystem& cs, const DualWalk& a, const DualWalk& b, bool closed);

/// Crossing parity of vertex v's ray (real or virtual) with a closed walk:
/// 1 when v is on the side away from infinity.
int vertex_side_parity(const CutSystem& cs, const DualWalk& walk, int v);

long long walk_weight(const DualGraph& dual, const DualWalk& walk);

/// Closed dual walk hugging a connected subgraph given by tree edges (or a
/// single vertex); crosses every edge with exactly one endpoint in the tree
/// once and every chord twice. Throws BoundaryNotClosedWalk when empty.
DualWalk tree_boundary_walk(const PlanarGraph& g, const FaceSet& faces,
                            const std::vector<int>& tree_vertices,
                            const std::vector<int>& tree_edges);

struct ShortestCycleLimits {
    long long max_states = 4000000;
};

/// Minimum-weight closed dual walk freely homotopic to the reference, by
/// least-weight search over (dual vertex, reduced word prefix) states with
/// the reduced word capped at depth_cap letters.
DualWalk shortest_homotopic_cycle(const CutSystem& cs, const DualWalk& reference, int depth_cap,
                                  const ShortestCycleLimits& lim = {});

/// Largest reduced-prefix length seen while walking the reference; a
/// sufficient depth_cap for the search to at least rediscover the reference.
int reference_prefix_depth(const CutSystem& cs, const DualWalk& reference);

bool is_valid_walk(const CutSystem& cs, const DualWalk& walk, bool closed);

}  // namespace planarcut
