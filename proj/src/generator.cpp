#include "planarcut/generator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

namespace planarcut {

namespace {

std::vector<int> sample_distinct(std::mt19937_64& rng, int n, int count) {
    if (count > n) throw Error(Err::InfeasibleParams, "more terminals than vertices");
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = 0; i < count; ++i) {
        std::uniform_int_distribution<int> pick(i, n - 1);
        std::swap(ids[i], ids[pick(rng)]);
    }
    ids.resize(count);
    return ids;
}

RawGraph make_grid(int n, std::mt19937_64& rng, long long wmin, long long wmax) {
    int rows = -1, cols = -1;
    for (int r = static_cast<int>(std::sqrt(static_cast<double>(n))); r >= 2; --r)
        if (n % r == 0 && n / r >= 2) { rows = r; cols = n / r; break; }
    if (rows < 0)
        throw Error(Err::InfeasibleParams,
                    "grid family needs n with a factorization r*c, r,c >= 2 (n=" +
                        std::to_string(n) + ")");
    RawGraph raw;
    raw.n = n;
    raw.coords.resize(n);
    auto id = [&](int i, int j) { return i * cols + j; };
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            raw.coords[id(i, j)] = std::make_pair(static_cast<double>(j),
                                                  static_cast<double>(rows - 1 - i));
    std::uniform_int_distribution<long long> w(wmin, wmax);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (j + 1 < cols) raw.edges.push_back({id(i, j), id(i, j + 1), w(rng)});
            if (i + 1 < rows) raw.edges.push_back({id(i, j), id(i + 1, j), w(rng)});
        }
    return raw;
}

RawGraph make_triangulated(int n, std::mt19937_64& rng, long long wmin, long long wmax) {
    if (n < 3) throw Error(Err::InfeasibleParams, "triangulated family needs n >= 3");
    RawGraph raw;
    raw.n = n;
    raw.coords.resize(n);
    raw.coords[0] = std::make_pair(0.0, 0.0);
    raw.coords[1] = std::make_pair(100.0, 0.0);
    raw.coords[2] = std::make_pair(50.0, 90.0);
    std::vector<std::array<int, 3>> tris;
    std::set<std::pair<int, int>> edge_set;
    auto add_edge = [&](int a, int b) {
        auto key = std::minmax(a, b);
        edge_set.insert(key);
    };
    add_edge(0, 1);
    add_edge(1, 2);
    add_edge(2, 0);
    tris.push_back({0, 1, 2});
    for (int v = 3; v < n; ++v) {
        std::uniform_int_distribution<size_t> pick(0, tris.size() - 1);
        size_t ti = pick(rng);
        auto [a, b, c] = tris[ti];
        std::uniform_real_distribution<double> u(0.2, 1.0);
        double wa = u(rng), wb = u(rng), wc = u(rng);
        double s = wa + wb + wc;
        raw.coords[v] = std::make_pair(
            (wa * raw.coords[a]->first + wb * raw.coords[b]->first + wc * raw.coords[c]->first) / s,
            (wa * raw.coords[a]->second + wb * raw.coords[b]->second + wc * raw.coords[c]->second) /
                s);
        add_edge(v, a);
        add_edge(v, b);
        add_edge(v, c);
        tris.erase(tris.begin() + ti);
        tris.push_back({a, b, v});
        tris.push_back({b, c, v});
        tris.push_back({c, a, v});
    }
    std::uniform_int_distribution<long long> w(wmin, wmax);
    for (auto [a, b] : edge_set) raw.edges.push_back({a, b, w(rng)});
    return raw;
}

}  // namespace

ParsedInstance generate_instance(const GenParams& p) {
    if (p.wmin < 1 || p.wmax < p.wmin)
        throw Error(Err::InfeasibleParams, "weight range must satisfy 1 <= wmin <= wmax");
    std::mt19937_64 rng(p.seed);
    RawGraph raw = p.family == "grid"           ? make_grid(p.n, rng, p.wmin, p.wmax)
                   : p.family == "triangulated" ? make_triangulated(p.n, rng, p.wmin, p.wmax)
                                                : throw Error(Err::InfeasibleParams,
                                                              "unknown family " + p.family);
    PlanarGraph g = build_planar_graph(raw);
    Preconditions pre = check_preconditions(g);
    if (!pre.ok()) throw Error(Err::InfeasibleParams, "generated graph fails preconditions");

    ParsedInstance pi;
    pi.edge_names.resize(g.m());
    std::iota(pi.edge_names.begin(), pi.edge_names.end(), 0);
    if (p.clusters > 0) {
        MCCInstance mcc;
        std::vector<int> ts = sample_distinct(rng, g.n, p.clusters * p.cluster_size);
        mcc.clusters.resize(p.clusters);
        for (int i = 0; i < p.clusters; ++i) {
            for (int j = 0; j < p.cluster_size; ++j)
                mcc.clusters[i].push_back(ts[i * p.cluster_size + j]);
            std::sort(mcc.clusters[i].begin(), mcc.clusters[i].end());
        }
        mcc.graph = std::move(g);
        pi.inst = std::move(mcc);
    } else {
        if (p.k < 1) throw Error(Err::InfeasibleParams, "need k >= 1 pairs or clusters > 0");
        MinMCInstance mi;
        std::vector<int> ts = sample_distinct(rng, g.n, 2 * p.k);
        for (int i = 0; i < p.k; ++i) mi.pairs.push_back({ts[2 * i], ts[2 * i + 1]});
        mi.graph = std::move(g);
        pi.inst = std::move(mi);
    }
    return pi;
}

}  // namespace planarcut
