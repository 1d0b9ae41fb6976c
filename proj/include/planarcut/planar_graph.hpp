#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planarcut/errors.hpp"

namespace planarcut {

// Darts are directed edge-ends: dart 2*e is edge e traversed u->v, dart 2*e+1
// is v->u. All ids (vertices, edges, faces) are dense 0-based.
inline int dart_of(int edge, bool forward) { return 2 * edge + (forward ? 0 : 1); }
inline int edge_of_dart(int d) { return d >> 1; }
inline int reverse_dart(int d) { return d ^ 1; }

struct EdgeRec {
    int u = -1;
    int v = -1;
    long long weight = 1;
};

struct RawGraph {
    int n = 0;
    std::vector<EdgeRec> edges;
    // Clockwise cyclic order of incident edges per vertex. May be empty if
    // coordinates are given (then it is derived by clockwise angular sort).
    std::vector<std::vector<int>> rotation;
    std::vector<std::optional<std::pair<double, double>>> coords;
    // Outer face hint: vertices that all lie on the outer face. Required when
    // coordinates are absent.
    std::vector<int> outer_hint;
};

struct PlanarGraph {
    int n = 0;
    std::vector<EdgeRec> edges;
    std::vector<std::vector<int>> rotation;  // clockwise edge order per vertex
    std::vector<std::optional<std::pair<double, double>>> coords;
    std::vector<int> outer_hint;

    int m() const { return static_cast<int>(edges.size()); }
    int dart_tail(int d) const { return (d & 1) ? edges[d >> 1].v : edges[d >> 1].u; }
    int dart_head(int d) const { return (d & 1) ? edges[d >> 1].u : edges[d >> 1].v; }
    int other_end(int e, int v) const { return edges[e].u == v ? edges[e].v : edges[e].u; }
    bool has_coords() const;
    long long total_weight() const;

    // Position of edge e in rotation[v], and the rotation successor
    // (clockwise-next) of e around v.
    int rot_index(int v, int e) const;
    int rot_next(int v, int e) const;
    int rot_prev(int v, int e) const;
};

struct FaceSet {
    // One dart walk per face; walking a face, the face lies to the left of
    // each dart. Inner faces come out counterclockwise, the outer face
    // clockwise (negative signed area).
    std::vector<std::vector<int>> walks;
    std::vector<int> face_of;  // per dart
    int outer = -1;

    int count() const { return static_cast<int>(walks.size()); }
};

struct DualGraph {
    // Dual vertices are primal face ids; dual edge i is in bijection with
    // primal edge i and joins the faces left of its two darts.
    int num_vertices = 0;
    std::vector<std::pair<int, int>> ends;  // per edge: (face_of dart0, face_of dart1)
    std::vector<long long> weight;
    // Rotation of the dual: per dual vertex the incident darts in face-walk
    // order (a dart d appears at face_of(d)).
    std::vector<std::vector<int>> rotation;
    int outer = -1;

    int num_edges() const { return static_cast<int>(ends.size()); }
    int degree(int f) const { return static_cast<int>(rotation[f].size()); }
};

struct Preconditions {
    bool simple = false;
    bool connected = false;
    bool two_vertex_connected = false;
    bool ok() const { return simple && connected && two_vertex_connected; }
};

/// Validates a raw description and returns an embedded planar graph.
/// Rotations are taken as given or derived from coordinates (explicit
/// rotation wins). Fails the Euler check V - E + F = 2 with NotPlaneEmbedding.
PlanarGraph build_planar_graph(const RawGraph& raw);

/// Face tracing under the rotation system; picks the outer face by negative
/// signed area when coordinates exist, else by the outer_hint vertex list.
FaceSet trace_faces(const PlanarGraph& g);

DualGraph build_dual(const PlanarGraph& g, const FaceSet& faces);

/// Replaces edge e by two edges of the same weight through a fresh vertex.
PlanarGraph subdivide_edge(const PlanarGraph& g, int e);

Preconditions check_preconditions(const PlanarGraph& g);

// Signed area of a face walk (shoelace over the dart tails); requires coords.
double face_signed_area(const PlanarGraph& g, const std::vector<int>& walk);

}  // namespace planarcut
