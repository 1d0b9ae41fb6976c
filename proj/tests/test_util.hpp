#pragma once

#include <numeric>
#include <vector>

#include "planarcut/instance.hpp"
#include "planarcut/planar_graph.hpp"

namespace testutil {

using namespace planarcut;

inline PlanarGraph triangle(long long w01 = 1, long long w12 = 1, long long w20 = 1) {
    RawGraph raw;
    raw.n = 3;
    raw.edges = {{0, 1, w01}, {1, 2, w12}, {2, 0, w20}};
    raw.coords = {std::make_pair(0.0, 0.0), std::make_pair(1.0, 0.0), std::make_pair(0.5, 1.0)};
    return build_planar_graph(raw);
}

// path v0 - v1 - ... with explicit rotations and every vertex on the outer face
inline PlanarGraph path_graph(const std::vector<long long>& weights) {
    RawGraph raw;
    raw.n = static_cast<int>(weights.size()) + 1;
    raw.coords.resize(raw.n);
    raw.rotation.resize(raw.n);
    for (int i = 0; i < static_cast<int>(weights.size()); ++i) {
        raw.edges.push_back({i, i + 1, weights[i]});
        raw.rotation[i].push_back(i);
        raw.rotation[i + 1].push_back(i);
    }
    for (int v = 0; v < raw.n; ++v) raw.outer_hint.push_back(v);
    return build_planar_graph(raw);
}

inline PlanarGraph k4_plane() {
    RawGraph raw;
    raw.n = 4;
    raw.edges = {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}};
    raw.coords = {std::make_pair(0.0, 0.0), std::make_pair(0.0, 2.0), std::make_pair(2.0, -1.0),
                  std::make_pair(-2.0, -1.0)};
    return build_planar_graph(raw);
}

// outer 4-cycle 0..3, inner 4-cycle 4..7, spokes i -> i+4
inline PlanarGraph cube_graph() {
    RawGraph raw;
    raw.n = 8;
    raw.edges = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}, {4, 5, 1}, {5, 6, 1},
                 {6, 7, 1}, {7, 4, 1}, {0, 4, 1}, {1, 5, 1}, {2, 6, 1}, {3, 7, 1}};
    raw.coords = {std::make_pair(0.0, 0.0), std::make_pair(4.0, 0.0), std::make_pair(4.0, 4.0),
                  std::make_pair(0.0, 4.0), std::make_pair(1.0, 1.0), std::make_pair(3.0, 1.0),
                  std::make_pair(3.0, 3.0), std::make_pair(1.0, 3.0)};
    return build_planar_graph(raw);
}

inline PlanarGraph grid_graph(int rows, int cols,
                              const std::vector<long long>& weights = {}) {
    RawGraph raw;
    raw.n = rows * cols;
    raw.coords.resize(raw.n);
    auto id = [&](int i, int j) { return i * cols + j; };
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            raw.coords[id(i, j)] =
                std::make_pair(static_cast<double>(j), static_cast<double>(rows - 1 - i));
    int e = 0;
    auto w = [&]() { return weights.empty() ? 1LL : weights[e++ % weights.size()]; };
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (j + 1 < cols) raw.edges.push_back({id(i, j), id(i, j + 1), w()});
            if (i + 1 < rows) raw.edges.push_back({id(i, j), id(i + 1, j), w()});
        }
    return build_planar_graph(raw);
}

// two vertices joined by three internally disjoint paths; path lengths give
// the number of interior vertices on each
inline PlanarGraph theta_graph(int left, int middle, int right) {
    RawGraph raw;
    int n = 2 + left + middle + right;
    raw.n = n;
    raw.coords.resize(n);
    raw.coords[0] = std::make_pair(0.0, 10.0);   // north
    raw.coords[1] = std::make_pair(0.0, -10.0);  // south
    int next = 2;
    auto chain = [&](int count, double x) {
        std::vector<int> vs = {0};
        for (int i = 0; i < count; ++i) {
            raw.coords[next] = std::make_pair(x, 8.0 - 16.0 * (i + 1) / (count + 1));
            vs.push_back(next++);
        }
        vs.push_back(1);
        for (size_t i = 0; i + 1 < vs.size(); ++i)
            raw.edges.push_back({vs[i], vs[i + 1], 1});
        return vs;
    };
    chain(left, -5.0);
    chain(middle, 0.0);
    chain(right, 5.0);
    return build_planar_graph(raw);
}

inline MinMCInstance make_minmc(PlanarGraph g, std::vector<std::pair<int, int>> pairs) {
    MinMCInstance inst;
    inst.graph = std::move(g);
    inst.pairs = std::move(pairs);
    return inst;
}

inline MCCInstance make_mcc(PlanarGraph g, std::vector<std::vector<int>> clusters) {
    MCCInstance inst;
    inst.graph = std::move(g);
    inst.clusters = std::move(clusters);
    return inst;
}

}  // namespace testutil
