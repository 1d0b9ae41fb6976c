#include "planarcut/svg.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace planarcut {

namespace {

const char* kClusterColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", x);
    return buf;
}

}  // namespace

std::string render_svg(const ParsedInstance& pi, const std::vector<int>& cut) {
    const PlanarGraph& g = pi.graph();
    if (!g.has_coords())
        throw Error(Err::MissingCoordinates, "rendering needs coordinates for every vertex");

    FaceSet faces = trace_faces(g);
    DualGraph dual = build_dual(g, faces);
    std::set<int> cut_set(cut.begin(), cut.end());
    std::vector<int> joints = joint_vertices_of(dual, cut);
    std::set<int> joint_set(joints.begin(), joints.end());

    double xmin = 1e18, xmax = -1e18, ymin = 1e18, ymax = -1e18;
    for (int v = 0; v < g.n; ++v) {
        xmin = std::min(xmin, g.coords[v]->first);
        xmax = std::max(xmax, g.coords[v]->first);
        ymin = std::min(ymin, g.coords[v]->second);
        ymax = std::max(ymax, g.coords[v]->second);
    }
    double span = std::max({xmax - xmin, ymax - ymin, 1.0});
    double scale = 400.0 / span;
    double margin = 60.0;
    auto X = [&](double x) { return margin + (x - xmin) * scale; };
    auto Y = [&](double y) { return margin + (ymax - y) * scale; };  // y axis flipped for SVG
    double W = 2 * margin + (xmax - xmin) * scale;
    double H = 2 * margin + (ymax - ymin) * scale;

    // face centers; the outer dual vertex is drawn below the drawing
    std::vector<std::pair<double, double>> fc(faces.count());
    for (int f = 0; f < faces.count(); ++f) {
        if (f == faces.outer) {
            fc[f] = {W / 2, H + margin / 2};
            continue;
        }
        double sx = 0, sy = 0;
        int cnt = 0;
        for (int d : faces.walks[f]) {
            int v = g.dart_tail(d);
            sx += X(g.coords[v]->first);
            sy += Y(g.coords[v]->second);
            cnt++;
        }
        fc[f] = {sx / cnt, sy / cnt};
    }

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(W) << " "
      << fmt(H + margin) << "\">\n";
    // primal edges
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v, w] = g.edges[e];
        s << "<line class=\"edge\" x1=\"" << fmt(X(g.coords[u]->first)) << "\" y1=\""
          << fmt(Y(g.coords[u]->second)) << "\" x2=\"" << fmt(X(g.coords[v]->first)) << "\" y2=\""
          << fmt(Y(g.coords[v]->second)) << "\" stroke=\"#444\" stroke-width=\"1.5\"/>\n";
    }
    // dual segments of the cut, dashed, bent through the edge midpoint
    for (int e = 0; e < g.m(); ++e) {
        if (!cut_set.count(e)) continue;
        auto [u, v, w] = g.edges[e];
        double mx = (X(g.coords[u]->first) + X(g.coords[v]->first)) / 2;
        double my = (Y(g.coords[u]->second) + Y(g.coords[v]->second)) / 2;
        auto [f1, f2] = dual.ends[e];
        s << "<path class=\"dualcut\" d=\"M " << fmt(fc[f1].first) << " " << fmt(fc[f1].second)
          << " L " << fmt(mx) << " " << fmt(my) << " L " << fmt(fc[f2].first) << " "
          << fmt(fc[f2].second) << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\""
          << " stroke-dasharray=\"6 3\"/>\n";
    }
    // dual vertices as squares, joint-vertices highlighted
    for (int f = 0; f < faces.count(); ++f) {
        bool joint = joint_set.count(f) > 0;
        double r = joint ? 7.0 : 4.0;
        s << "<rect class=\"" << (joint ? "joint" : "dualv") << "\" x=\"" << fmt(fc[f].first - r)
          << "\" y=\"" << fmt(fc[f].second - r) << "\" width=\"" << fmt(2 * r) << "\" height=\""
          << fmt(2 * r) << "\" fill=\"" << (joint ? "#999" : "#fff")
          << "\" stroke=\"#000\" stroke-width=\"1\"/>\n";
    }
    // vertices: terminals filled per cluster, others hollow
    std::vector<int> term_color(g.n, -1);
    if (pi.is_minmc()) {
        int c = 0;
        for (auto [a, b] : pi.minmc().pairs) {
            if (term_color[a] == -1) term_color[a] = c % 8;
            if (term_color[b] == -1) term_color[b] = c % 8;
            ++c;
        }
    } else {
        for (size_t i = 0; i < pi.mcc().clusters.size(); ++i)
            for (int v : pi.mcc().clusters[i]) term_color[v] = static_cast<int>(i % 8);
    }
    for (int v = 0; v < g.n; ++v) {
        bool term = term_color[v] >= 0;
        s << "<circle class=\"" << (term ? "terminal" : "vertex") << "\" cx=\""
          << fmt(X(g.coords[v]->first)) << "\" cy=\"" << fmt(Y(g.coords[v]->second)) << "\" r=\""
          << (term ? "6" : "4") << "\" fill=\""
          << (term ? kClusterColors[term_color[v]] : "#fff")
          << "\" stroke=\"#000\" stroke-width=\"1\"/>\n";
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace planarcut
