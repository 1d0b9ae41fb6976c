#pragma once

#include <functional>
#include <optional>

#include "planarcut/homotopy.hpp"
#include "planarcut/instance.hpp"

namespace planarcut {

struct SolverConfig {
    int depth_cap = -1;  // -1: reduced reference length + 2 * puncture count
    long long max_joint_sets = 200000;
    long long max_interval_assignments = 500000;
    double time_limit_sec = 0;  // 0 = unlimited
    int jobs = 1;
    bool check_oracle = false;
    long long max_search_states = 4000000;
};

/// Lemma bound on joint-vertex count: max(0, 2p - 4).
int joint_vertex_bound(int p);

/// All subsets of non-outer dual vertices of size 0..joint_vertex_bound(p),
/// smallest first; returns false when the visitor stops the enumeration.
bool enumerate_joint_sets(const DualGraph& dual, int p,
                          const std::function<bool(const std::vector<int>&)>& visit);

struct InclusionForest {
    std::vector<int> parent;  // -1 for roots
};

/// All rooted labeled forests on p nodes, deterministic order.
std::vector<InclusionForest> enumerate_inclusion_forests(int p);

struct IntervalAssignment {
    // per joint face (aligned with the joint set): intervals as
    // (start position, end position, cluster) on the face's boundary cycle
    std::vector<std::vector<std::tuple<int, int, int>>> intervals;
    std::vector<std::vector<int>> B;  // per cluster, sorted vertex ids
};

/// All partitions of the joint faces' boundary vertices into cyclic intervals
/// assigned to clusters: terminals pinned to their own cluster, at least two
/// clusters per face, at most cap intervals per cluster per face.
bool enumerate_interval_assignments(const PlanarGraph& g, const FaceSet& faces,
                                    const std::vector<int>& joint_faces, int p,
                                    const std::vector<std::vector<int>>& clusters, int cap,
                                    const std::function<bool(const IntervalAssignment&)>& visit);

/// p pairwise vertex-disjoint connected vertex sets, the i-th spanning
/// mandatory[i]; exhaustive region-growing backtracking.
std::optional<std::vector<std::vector<int>>> find_disjoint_trees(
    const PlanarGraph& g, const std::vector<std::vector<int>>& mandatory);

/// Closed dual walk around a spanning tree of the (connected) vertex set.
DualWalk reference_curve(const PlanarGraph& g, const FaceSet& faces,
                         const std::vector<int>& tree_vertices);

CutSolution solve_mcc(const MCCInstance& inst, const SolverConfig& cfg = {});
CutSolution solve_minmc(const MinMCInstance& inst, const SolverConfig& cfg = {});

}  // namespace planarcut
