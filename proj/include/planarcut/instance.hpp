#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planarcut/planar_graph.hpp"

namespace planarcut {

struct MinMCInstance {
    PlanarGraph graph;
    std::vector<std::pair<int, int>> pairs;  // (source, sink)
    std::vector<std::string> warnings;       // e.g. deduplicated pairs

    std::vector<int> terminals() const;  // distinct terminal vertices, sorted
};

struct MCCInstance {
    PlanarGraph graph;
    std::vector<std::vector<int>> clusters;  // T_1..T_p, disjoint, sorted

    int p() const { return static_cast<int>(clusters.size()); }
    std::vector<int> terminals() const;
};

/// A partition of the terminal set in which every source-sink pair is split.
struct Clustering {
    std::vector<std::vector<int>> blocks;
};

struct CutSolution {
    std::vector<int> edges;       // dense edge ids, sorted
    long long weight = 0;
    std::vector<int> component;   // per vertex component label
    int num_components = 0;
    std::vector<int> cluster_component_count;  // per cluster (MCC mode)
    int joint_vertices = 0;       // dual vertices of degree >= 3 in the cut's dual image
    bool valid = false;
    std::string violation;        // names one violated pair / cluster pair
    bool exact = true;            // false when budgets truncated the search
};

/// Set partitions of the terminals splitting every pair, in
/// restricted-growth-string order.
std::vector<Clustering> enumerate_clusterings(const MinMCInstance& inst);

MCCInstance to_mcc(const MinMCInstance& inst, const Clustering& cl);

CutSolution validate_cut(const MinMCInstance& inst, const std::vector<int>& edges);
CutSolution validate_cut(const MCCInstance& inst, const std::vector<int>& edges);

/// Dual vertices incident to >= 3 distinct cut edges.
int count_joint_vertices(const DualGraph& dual, const std::vector<int>& cut);
std::vector<int> joint_vertices_of(const DualGraph& dual, const std::vector<int>& cut);

}  // namespace planarcut
