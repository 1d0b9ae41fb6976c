#include <doctest.h>

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "planarcut/homotopy.hpp"
#include "planarcut/solver.hpp"
#include "test_util.hpp"

using namespace planarcut;
using namespace testutil;

namespace {

// all closed dual walks of at most max_len steps from every start face,
// returning the minimum weight among those homotopic to the reference
long long enumerate_min_homotopic(const CutSystem& cs, const DualWalk& reference, int max_len) {
    Word target = cyclic_canonical(cs, reference);
    long long best = -1;
    std::vector<int> darts;
    std::function<void(int, int, long long)> rec = [&](int start_face, int face, long long w) {
        if (best >= 0 && w > best) return;
        if (!darts.empty() && face == start_face) {
            DualWalk walk;
            walk.darts = darts;
            if (cyclic_canonical(cs, walk) == target)
                if (best < 0 || w < best) best = w;
        }
        if (static_cast<int>(darts.size()) == max_len) return;
        for (int d : cs.dual.rotation[face]) {
            darts.push_back(d);
            rec(start_face, cs.faces.face_of[reverse_dart(d)], w + cs.dual.weight[edge_of_dart(d)]);
            darts.pop_back();
        }
    };
    for (int f = 0; f < cs.dual.num_vertices; ++f) rec(f, f, 0);
    return best;
}

DualWalk random_closed_walk(const CutSystem& cs, std::mt19937_64& rng, int tries = 200) {
    for (int t = 0; t < tries; ++t) {
        std::uniform_int_distribution<int> fstart(0, cs.dual.num_vertices - 1);
        int start = fstart(rng);
        DualWalk w;
        int face = start;
        for (int step = 0; step < 40; ++step) {
            const auto& out = cs.dual.rotation[face];
            std::uniform_int_distribution<size_t> pick(0, out.size() - 1);
            int d = out[pick(rng)];
            w.darts.push_back(d);
            face = cs.faces.face_of[reverse_dart(d)];
            if (face == start && w.size() >= 2) return w;
        }
    }
    DualWalk w;
    w.start_face = 0;
    return w;
}

// boundary walk of the dual face around primal vertex v
DualWalk dual_face_walk(const CutSystem& cs, int v) {
    return tree_boundary_walk(cs.g, cs.faces, {v}, {});
}

// insert a contractible detour (face boundary away from punctures, or a spur)
DualWalk perturb(const CutSystem& cs, const DualWalk& w, std::mt19937_64& rng,
                 const std::vector<int>& neutral_vertices) {
    DualWalk out = w;
    std::uniform_int_distribution<int> mode(0, 1);
    std::uniform_int_distribution<size_t> posd(0, out.darts.size() - 1);
    size_t pos = posd(rng);
    int face_at = cs.faces.face_of[out.darts[pos]];
    if (mode(rng) == 0 && !neutral_vertices.empty()) {
        std::uniform_int_distribution<size_t> pickv(0, neutral_vertices.size() - 1);
        int v = neutral_vertices[pickv(rng)];
        DualWalk fb = dual_face_walk(cs, v);
        for (size_t i = 0; i < fb.darts.size(); ++i) {
            if (cs.faces.face_of[fb.darts[i]] == face_at) {
                std::vector<int> rot(fb.darts.begin() + i, fb.darts.end());
                rot.insert(rot.end(), fb.darts.begin(), fb.darts.begin() + i);
                out.darts.insert(out.darts.begin() + pos, rot.begin(), rot.end());
                return out;
            }
        }
    }
    const auto& cand = cs.dual.rotation[face_at];
    std::uniform_int_distribution<size_t> picke(0, cand.size() - 1);
    int d = cand[picke(rng)];
    std::vector<int> spur = {d, reverse_dart(d)};
    out.darts.insert(out.darts.begin() + pos, spur.begin(), spur.end());
    return out;
}

}  // namespace

TEST_CASE("reduce_word cancels adjacent inverses and is idempotent") {
    Word w = {1, 2, -2, -1};
    CHECK(reduce_word(w, false).empty());
    Word v = {1, 2, -1};
    CHECK(reduce_word(v, false) == Word{1, 2, -1});
    CHECK(reduce_word(v, true) == Word{2});
    for (const Word& x : {Word{1, -1, 1}, Word{3, 2, -2, -3, 1}, Word{}}) {
        Word once = reduce_word(x, false);
        CHECK(reduce_word(once, false) == once);
        Word conce = reduce_word(x, true);
        CHECK(reduce_word(conce, true) == conce);
    }
}

TEST_CASE("triangle canary: hug around one puncture gives a single letter") {
    PlanarGraph g = triangle();
    CutSystem cs = build_cut_system(g, {0, 1, 2});
    for (const auto& r : cs.ray) CHECK(r.empty());  // all punctures on the boundary

    DualWalk hug0 = tree_boundary_walk(g, cs.faces, {0}, {});
    REQUIRE(is_valid_walk(cs, hug0, true));
    Word w0 = reduce_word(crossing_word(cs, hug0, true), true);
    REQUIRE(w0.size() == 1);
    CHECK((w0[0] == 1 || w0[0] == -1));

    DualWalk hug1 = tree_boundary_walk(g, cs.faces, {1}, {});
    Word w1 = reduce_word(crossing_word(cs, hug1, true), true);
    REQUIRE(w1.size() == 1);
    CHECK((w1[0] == 2 || w1[0] == -2));

    // reversing the walk inverts the class
    DualWalk rev;
    for (auto it = hug0.darts.rbegin(); it != hug0.darts.rend(); ++it)
        rev.darts.push_back(reverse_dart(*it));
    Word wr = reduce_word(crossing_word(cs, rev, true), true);
    REQUIRE(wr.size() == 1);
    CHECK(wr[0] == -w0[0]);
}

TEST_CASE("interior puncture: hug crosses the ray once") {
    PlanarGraph g = grid_graph(3, 3);
    CutSystem cs = build_cut_system(g, {4});  // center vertex
    REQUIRE(cs.ray.size() == 1);
    CHECK(cs.ray[0].size() == 1);
    DualWalk hug = tree_boundary_walk(g, cs.faces, {4}, {});
    Word w = reduce_word(crossing_word(cs, hug, true), true);
    REQUIRE(w.size() == 1);
    CHECK((w[0] == 1 || w[0] == -1));
    CHECK(vertex_side_parity(cs, hug, 4) == 1);
    for (int v : {0, 2, 6, 8}) CHECK(vertex_side_parity(cs, hug, v) == 0);
}

TEST_CASE("cube: single interior puncture ray is a shortest escape") {
    PlanarGraph g = cube_graph();
    CutSystem cs = build_cut_system(g, {4});
    REQUIRE(cs.ray.size() == 1);
    CHECK(cs.ray[0].size() == 1);
}

TEST_CASE("theta: bundled rays through a shared corridor still separate punctures") {
    PlanarGraph g = theta_graph(1, 3, 1);
    std::vector<int> mid = {3, 4, 5};  // interior vertices of the middle path
    CutSystem cs = build_cut_system(g, mid);
    std::map<int, int> edge_use;
    for (const auto& r : cs.ray) {
        CHECK(!r.empty());
        for (int e : r) edge_use[e]++;
    }
    bool shared = false;
    for (auto& [e, c] : edge_use)
        if (c > 1) shared = true;
    CHECK(shared);
    for (int i = 0; i < 3; ++i) {
        DualWalk hug = tree_boundary_walk(g, cs.faces, {mid[i]}, {});
        Word w = reduce_word(crossing_word(cs, hug, true), true);
        REQUIRE(w.size() == 1);
        CHECK(std::abs(w[0]) == i + 1);
    }
    int e34 = -1;
    for (int e = 0; e < g.m(); ++e)
        if ((g.edges[e].u == 3 && g.edges[e].v == 4) || (g.edges[e].u == 4 && g.edges[e].v == 3))
            e34 = e;
    REQUIRE(e34 >= 0);
    DualWalk hug2 = tree_boundary_walk(g, cs.faces, {3, 4}, {e34});
    Word w2 = reduce_word(crossing_word(cs, hug2, true), true);
    CHECK(w2.size() == 2);
}

TEST_CASE("contractible walks reduce to the empty word") {
    PlanarGraph g = grid_graph(3, 3);
    CutSystem cs = build_cut_system(g, {0, 8});
    DualWalk fb = dual_face_walk(cs, 4);  // no puncture at vertex 4
    CHECK(reduce_word(crossing_word(cs, fb, true), true).empty());
    int d = cs.dual.rotation[0].front();
    DualWalk spur;
    spur.darts = {d, reverse_dart(d)};
    CHECK(reduce_word(crossing_word(cs, spur, true), true).empty());
}

TEST_CASE("same_homotopy is invariant under elementary moves") {
    PlanarGraph g = grid_graph(3, 4);
    CutSystem cs = build_cut_system(g, {1, 6});
    std::vector<int> neutral;
    for (int v = 0; v < g.n; ++v)
        if (v != 1 && v != 6) neutral.push_back(v);
    std::mt19937_64 rng(11);
    int done = 0;
    for (int t = 0; t < 1000 && done < 250; ++t) {
        DualWalk w = random_closed_walk(cs, rng);
        if (w.empty()) continue;
        DualWalk p = perturb(cs, w, rng, neutral);
        REQUIRE(is_valid_walk(cs, p, true));
        CHECK(same_homotopy(cs, w, p, true));
        ++done;
    }
    CHECK(done == 250);
}

TEST_CASE("same_homotopy distinguishes loops around different punctures") {
    PlanarGraph g = grid_graph(3, 4);
    CutSystem cs = build_cut_system(g, {1, 6});
    DualWalk h1 = dual_face_walk(cs, 1);
    DualWalk h6 = dual_face_walk(cs, 6);
    CHECK(same_homotopy(cs, h1, h1, true));
    CHECK_FALSE(same_homotopy(cs, h1, h6, true));
}

TEST_CASE("same_homotopy equivalence relation on random samples") {
    PlanarGraph g = grid_graph(3, 3);
    CutSystem cs = build_cut_system(g, {0, 4});
    std::vector<int> neutral;
    for (int v = 1; v < g.n; ++v)
        if (v != 4) neutral.push_back(v);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
        DualWalk a = random_closed_walk(cs, rng);
        if (a.empty()) continue;
        DualWalk b = perturb(cs, a, rng, neutral);
        DualWalk c = perturb(cs, b, rng, neutral);
        CHECK(same_homotopy(cs, a, a, true));
        CHECK(same_homotopy(cs, a, b, true) == same_homotopy(cs, b, a, true));
        if (same_homotopy(cs, a, b, true) && same_homotopy(cs, b, c, true))
            CHECK(same_homotopy(cs, a, c, true));
    }
}

TEST_CASE("re-rooting a closed walk preserves the cyclic canonical word") {
    PlanarGraph g = grid_graph(3, 4);
    CutSystem cs = build_cut_system(g, {1, 5, 6});
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        DualWalk w = random_closed_walk(cs, rng);
        if (w.empty()) continue;
        Word base = cyclic_canonical(cs, w);
        std::uniform_int_distribution<size_t> rot(0, w.darts.size() - 1);
        size_t r = rot(rng);
        DualWalk v;
        v.darts.assign(w.darts.begin() + r, w.darts.end());
        v.darts.insert(v.darts.end(), w.darts.begin(), w.darts.begin() + r);
        CHECK(cyclic_canonical(cs, v) == base);
    }
}

TEST_CASE("open-walk homotopy needs shared endpoints") {
    PlanarGraph g = grid_graph(3, 3);
    CutSystem cs = build_cut_system(g, {4});
    DualWalk a, b;
    a.darts = {cs.dual.rotation[0].front()};
    int other = cs.faces.face_of[reverse_dart(a.darts[0])];
    b.darts = {cs.dual.rotation[other].front()};
    if (cs.faces.face_of[b.darts[0]] != cs.faces.face_of[a.darts[0]])
        CHECK_THROWS_WITH_AS(same_homotopy(cs, a, b, false), doctest::Contains("EndpointMismatch"),
                             Error);
    CHECK(same_homotopy(cs, a, a, false));
}

TEST_CASE("shortest_homotopic_cycle returns the reference weight when already optimal") {
    PlanarGraph g = grid_graph(3, 3);
    CutSystem cs = build_cut_system(g, {4});
    DualWalk ref = dual_face_walk(cs, 4);
    DualWalk got = shortest_homotopic_cycle(cs, ref, 16);
    CHECK(walk_weight(cs.dual, got) == walk_weight(cs.dual, ref));
    CHECK(same_homotopy(cs, got, ref, true));
}

TEST_CASE("shortest_homotopic_cycle beats a heavy detouring reference") {
    std::vector<long long> w;
    for (int e = 0; e < 12; ++e) w.push_back(1 + (e % 3));
    PlanarGraph g = grid_graph(3, 3, w);
    CutSystem cs = build_cut_system(g, {4});
    DualWalk ref = dual_face_walk(cs, 4);
    std::mt19937_64 rng(3);
    DualWalk detour = perturb(cs, ref, rng, {0, 1, 2, 3, 5, 6, 7, 8});
    DualWalk got = shortest_homotopic_cycle(cs, detour, 16);
    CHECK(same_homotopy(cs, got, ref, true));
    CHECK(walk_weight(cs.dual, got) <= walk_weight(cs.dual, ref));
    long long best = enumerate_min_homotopic(cs, ref, 8);
    CHECK(walk_weight(cs.dual, got) == best);
}

TEST_CASE("shortest_homotopic_cycle matches exhaustive enumeration on small duals") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<long long> weights;
        for (int e = 0; e < 12; ++e) weights.push_back(1 + static_cast<long long>(rng() % 5));
        PlanarGraph g = grid_graph(3, 3, weights);  // 8 dual vertices
        std::vector<int> punct =
            trial % 2 == 0 ? std::vector<int>{4} : std::vector<int>{1, 4};
        CutSystem cs = build_cut_system(g, punct);
        DualWalk ref = dual_face_walk(cs, 4);
        DualWalk p = perturb(cs, ref, rng, {0, 2, 6, 8});
        DualWalk got = shortest_homotopic_cycle(cs, p, 20);
        CHECK(same_homotopy(cs, got, p, true));
        CHECK(walk_weight(cs.dual, got) <= walk_weight(cs.dual, p));
        long long best = enumerate_min_homotopic(cs, p, 8);
        REQUIRE(best >= 0);
        CHECK(walk_weight(cs.dual, got) == best);
    }
}

TEST_CASE("depth cap zero with a non-contractible reference is an error") {
    PlanarGraph g = grid_graph(3, 3);
    CutSystem cs = build_cut_system(g, {4});
    DualWalk ref = dual_face_walk(cs, 4);
    CHECK_THROWS_WITH_AS(shortest_homotopic_cycle(cs, ref, 0),
                         doctest::Contains("DepthCapExhausted"), Error);
}

TEST_CASE("contractible reference yields the empty cycle") {
    PlanarGraph g = grid_graph(3, 3);
    CutSystem cs = build_cut_system(g, {0});
    DualWalk ref = dual_face_walk(cs, 4);
    DualWalk got = shortest_homotopic_cycle(cs, ref, 8);
    CHECK(got.empty());
}

TEST_CASE("reference curve around a tree separates its punctures from the rest") {
    PlanarGraph g = grid_graph(3, 4);
    FaceSet fs = trace_faces(g);
    CutSystem cs = build_cut_system(g, {0, 5, 11});
    DualWalk ref = reference_curve(g, fs, {0, 1, 5});
    CHECK(vertex_side_parity(cs, ref, 0) == vertex_side_parity(cs, ref, 5));
    CHECK(vertex_side_parity(cs, ref, 0) != vertex_side_parity(cs, ref, 11));
    DualWalk single = reference_curve(g, fs, {5});
    CHECK(single.size() == static_cast<int>(g.rotation[5].size()));
    DualWalk pairw = reference_curve(g, fs, {5, 6});
    CHECK(pairw.size() == static_cast<int>(g.rotation[5].size() + g.rotation[6].size()) - 2);
}

TEST_CASE("walk words are insensitive to basepoint through the outer face") {
    PlanarGraph g = triangle();
    CutSystem cs = build_cut_system(g, {0, 1, 2});
    DualWalk hug = tree_boundary_walk(g, cs.faces, {0}, {});
    Word a = cyclic_canonical(cs, hug);
    DualWalk rot;
    rot.darts = {hug.darts[1], hug.darts[0]};
    CHECK(cyclic_canonical(cs, rot) == a);
}
