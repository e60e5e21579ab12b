#include "hamcut/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace hamcut {

namespace {

struct P2 {
    double x = 0, y = 0;
};

struct Box {
    double xmin, xmax, ymin, ymax;
};

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
    char buf[48];
    if (std::fabs(v) < 5e-5) v = 0.0;  // avoid "-0.0000"
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

// Clip the parametric line p + t*d to the box (Liang-Barsky); false when the
// line misses it entirely.
bool clip_line(const P2& p, const P2& d, const Box& b, P2& a_out, P2& b_out) {
    double t0 = -1e18, t1 = 1e18;
    const double q[4] = {b.xmin - p.x, p.x - b.xmax, b.ymin - p.y, p.y - b.ymax};
    const double r[4] = {d.x, -d.x, d.y, -d.y};
    for (int i = 0; i < 4; ++i) {
        if (std::fabs(r[i]) < 1e-300) {
            if (q[i] > 0) return false;  // parallel and outside
            continue;
        }
        double t = q[i] / r[i];
        if (r[i] > 0) t0 = std::max(t0, t);
        else t1 = std::min(t1, t);
    }
    if (t0 > t1) return false;
    a_out = {p.x + t0 * d.x, p.y + t0 * d.y};
    b_out = {p.x + t1 * d.x, p.y + t1 * d.y};
    return true;
}

// a point on the line f.p = y and the line's direction
void line_geometry(double f1, double f2, double y, P2& point, P2& dir) {
    double n2 = f1 * f1 + f2 * f2;
    point = {y * f1 / n2, y * f2 / n2};
    dir = {-f2, f1};
}

}  // namespace

std::string render_svg(const Instance<Rat>& inst, const SolutionView* solution) {
    if (inst.dimension != 2) throw WrongDimension("plots are limited to dimension 2");

    struct Line {
        double f1, f2, y;
        std::size_t family;
    };
    std::vector<Line> lines;
    std::vector<std::pair<P2, std::size_t>> dots;

    if (inst.kind == InstanceKind::Hyperplane) {
        for (std::size_t fi = 0; fi < inst.hyperplane_families.size(); ++fi)
            for (const auto& [h, w] : inst.hyperplane_families[fi].atoms)
                lines.push_back({to_double(h.f[0]), to_double(h.f[1]), to_double(h.y), fi});
    } else {
        for (std::size_t fi = 0; fi < inst.point_families.size(); ++fi)
            for (const auto& [v, w] : inst.point_families[fi].atoms)
                dots.push_back({{to_double(v[0]), to_double(v[1])}, fi});
    }

    // viewport: atom intersections, points, the witness, and the origin
    std::vector<P2> anchors;
    anchors.push_back({0, 0});
    for (const auto& [p, fi] : dots) anchors.push_back(p);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        P2 p, d;
        line_geometry(lines[i].f1, lines[i].f2, lines[i].y, p, d);
        anchors.push_back(p);  // closest point to the origin
        for (std::size_t k = i + 1; k < lines.size(); ++k) {
            double det = lines[i].f1 * lines[k].f2 - lines[i].f2 * lines[k].f1;
            double scale = std::max({std::fabs(lines[i].f1), std::fabs(lines[i].f2),
                                     std::fabs(lines[k].f1), std::fabs(lines[k].f2)});
            if (std::fabs(det) <= 1e-12 * scale * scale) continue;  // parallel pair
            anchors.push_back({(lines[i].y * lines[k].f2 - lines[k].y * lines[i].f2) / det,
                               (lines[i].f1 * lines[k].y - lines[k].f1 * lines[i].y) / det});
        }
    }

    P2 witness{0, 0};
    P2 sol_dir{0, 1};
    bool have_solution = solution && solution->feasible;
    bool classical = inst.kind == InstanceKind::Classical;
    if (have_solution) {
        double d0 = to_double(solution->direction[0]);
        double d1 = to_double(solution->direction[1]);
        double val = to_double(solution->value);
        if (classical) {
            // the cut line f.p = y; mark its closest point to the origin
            P2 p, d;
            line_geometry(d0, d1, val, p, d);
            witness = p;
            sol_dir = d;
        } else {
            witness = {val * d0, val * d1};
            sol_dir = {d0, d1};
        }
        anchors.push_back(witness);
    }

    Box box{-1, 1, -1, 1};
    for (const auto& a : anchors) {
        box.xmin = std::min(box.xmin, a.x);
        box.xmax = std::max(box.xmax, a.x);
        box.ymin = std::min(box.ymin, a.y);
        box.ymax = std::max(box.ymax, a.y);
    }
    double span = std::max({box.xmax - box.xmin, box.ymax - box.ymin, 2.0});
    double cx = 0.5 * (box.xmin + box.xmax), cy = 0.5 * (box.ymin + box.ymax);
    double half = 0.5 * span * 1.25;  // 25% padding
    box = {cx - half, cx + half, cy - half, cy + half};

    const double view = 640.0;
    double s = view / (2.0 * half);
    auto X = [&](double x) { return (x - box.xmin) * s; };
    auto Y = [&](double y) { return view - (y - box.ymin) * s; };  // flip to screen

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" "
           "height=\"640\" viewBox=\"0 0 640 640\">\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"640\" height=\"640\" fill=\"#ffffff\"/>\n";

    // light axes through the origin
    {
        P2 a, b2;
        if (clip_line({0, 0}, {1, 0}, box, a, b2))
            svg += "  <line x1=\"" + fmt(X(a.x)) + "\" y1=\"" + fmt(Y(a.y)) + "\" x2=\"" +
                   fmt(X(b2.x)) + "\" y2=\"" + fmt(Y(b2.y)) +
                   "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        if (clip_line({0, 0}, {0, 1}, box, a, b2))
            svg += "  <line x1=\"" + fmt(X(a.x)) + "\" y1=\"" + fmt(Y(a.y)) + "\" x2=\"" +
                   fmt(X(b2.x)) + "\" y2=\"" + fmt(Y(b2.y)) +
                   "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    }

    for (const auto& ln : lines) {
        P2 p, d, a, b2;
        line_geometry(ln.f1, ln.f2, ln.y, p, d);
        if (!clip_line(p, d, box, a, b2)) continue;
        const char* color = kPalette[ln.family % (sizeof(kPalette) / sizeof(kPalette[0]))];
        svg += "  <line x1=\"" + fmt(X(a.x)) + "\" y1=\"" + fmt(Y(a.y)) + "\" x2=\"" +
               fmt(X(b2.x)) + "\" y2=\"" + fmt(Y(b2.y)) + "\" stroke=\"" + color +
               "\" stroke-width=\"1.5\"/>\n";
    }

    for (const auto& [p, fi] : dots) {
        const char* color = kPalette[fi % (sizeof(kPalette) / sizeof(kPalette[0]))];
        svg += "  <circle cx=\"" + fmt(X(p.x)) + "\" cy=\"" + fmt(Y(p.y)) +
               "\" r=\"4\" fill=\"" + color + "\"/>\n";
    }

    if (have_solution) {
        // the two rays out of the witness along the solution line
        P2 a, b2;
        if (clip_line(witness, sol_dir, box, a, b2)) {
            svg += "  <line x1=\"" + fmt(X(witness.x)) + "\" y1=\"" + fmt(Y(witness.y)) +
                   "\" x2=\"" + fmt(X(b2.x)) + "\" y2=\"" + fmt(Y(b2.y)) +
                   "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
            svg += "  <line x1=\"" + fmt(X(witness.x)) + "\" y1=\"" + fmt(Y(witness.y)) +
                   "\" x2=\"" + fmt(X(a.x)) + "\" y2=\"" + fmt(Y(a.y)) +
                   "\" stroke=\"#000000\" stroke-width=\"2\" stroke-dasharray=\"7,4\"/>\n";
        }
        svg += "  <circle cx=\"" + fmt(X(witness.x)) + "\" cy=\"" + fmt(Y(witness.y)) +
               "\" r=\"5\" fill=\"#000000\"/>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace hamcut
