#pragma once

// Diamond diagrams for Omega^2(F_p) and its dual over C_p x C_p. Boxes are
// the presentation basis vectors; an edge drawn to the southwest of a box is
// the (sigma1 - 1) action and southeast is (sigma2 - 1). The dual diagram
// keeps the boxes and reverses every arrow.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "decomp.hpp"
#include "fp.hpp"

namespace syzygy {

enum class DiagramKind { omega2, omega_minus_2 };
enum class DiagramFormat { text, svg };

struct DiagramBox {
    std::string label;
    int x = 0;      // horizontal lattice position
    int depth = 0;  // 0 at the top, grows downward
};

struct DiagramEdge {
    size_t from = 0, to = 0;  // box indices; for omega_minus_2 already reversed
    int gen = 0;              // 0: sigma1 (southwest), 1: sigma2 (southeast)
};

struct DiagramData {
    uint32_t p = 0;
    DiagramKind kind = DiagramKind::omega2;
    std::vector<DiagramBox> boxes;
    std::vector<DiagramEdge> edges;
};

inline DiagramData diagram_data(uint32_t p, DiagramKind kind) {
    if (p > 7) throw std::domain_error("diagram_data: p must be at most 7");
    CpCpPresentation pres = verify_presentation(p, true);
    PrimeField f = pres.group.field();
    int ip = static_cast<int>(p);

    DiagramData out;
    out.p = p;
    out.kind = kind;
    out.boxes.push_back({"a1", -ip, ip - 2});
    out.boxes.push_back({"a2", ip, ip - 2});
    for (auto [k, l] : pres.grid) {
        std::string label =
            (k == 0 && l == 0) ? "a0" : "b" + std::to_string(k) + std::to_string(l);
        out.boxes.push_back({label, l - k, k + l});
    }

    for (int gen = 0; gen < 2; ++gen) {
        FpMatrix act = pres.module.action_matrix(pres.group.generators()[gen]);
        size_t n = act.rows();
        for (size_t b = 0; b < n; ++b) {
            size_t hits = 0, target = 0;
            for (size_t r = 0; r < n; ++r) {
                uint32_t v = r == b ? f.sub(act(r, b), 1) : act(r, b);
                if (v == 0) continue;
                if (v != 1) throw std::logic_error("diagram_data: edge coefficient is not 1");
                ++hits;
                target = r;
            }
            if (hits == 0) continue;
            if (hits > 1) throw std::logic_error("diagram_data: action is not single-target");
            const DiagramBox& sb = out.boxes[b];
            const DiagramBox& tb = out.boxes[target];
            int dx = gen == 0 ? -1 : 1;
            if (tb.x != sb.x + dx || tb.depth != sb.depth + 1)
                throw std::logic_error("diagram_data: edge breaks the lattice layout");
            if (kind == DiagramKind::omega2)
                out.edges.push_back({b, target, gen});
            else
                out.edges.push_back({target, b, gen});
        }
    }
    return out;
}

namespace detail {

inline std::string render_diagram_text(const DiagramData& d) {
    int ip = static_cast<int>(d.p);
    const size_t cw = 6;
    size_t width = (2 * size_t{d.p} + 1) * cw;
    int max_depth = 2 * ip - 3;
    if (max_depth < ip - 2) max_depth = ip - 2;
    std::vector<std::string> canvas(2 * size_t(max_depth) + 1, std::string(width, ' '));

    auto center = [&](int x) { return size_t(x + ip) * cw + cw / 2; };
    for (const DiagramBox& b : d.boxes) {
        std::string t = "[" + b.label + "]";
        size_t col = center(b.x) - t.size() / 2;
        canvas[2 * size_t(b.depth)].replace(col, t.size(), t);
    }
    for (const DiagramEdge& e : d.edges) {
        const DiagramBox& src = d.kind == DiagramKind::omega2 ? d.boxes[e.from] : d.boxes[e.to];
        size_t row = 2 * size_t(src.depth) + 1;
        char glyph = e.gen == 0 ? '/' : '\\';
        size_t col = e.gen == 0 ? center(src.x) - cw / 2 : center(src.x) + cw / 2;
        canvas[row][col] = glyph;
    }

    std::string head = d.kind == DiagramKind::omega2 ? "Omega^2(F_p)" : "Omega^-2(F_p)";
    std::string out = head + " over C" + std::to_string(d.p) + "xC" + std::to_string(d.p) + ": " +
                      std::to_string(d.boxes.size()) + " boxes, " + std::to_string(d.edges.size()) +
                      " edges\n";
    out += "southwest edge: sigma1 - 1; southeast edge: sigma2 - 1";
    out += d.kind == DiagramKind::omega2 ? " (arrows point down)\n" : " (arrows point up)\n";
    out += '\n';
    for (std::string& line : canvas) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

inline std::string render_diagram_svg(const DiagramData& d) {
    int ip = static_cast<int>(d.p);
    const int cellw = 64, cellh = 72, bw = 44, bh = 26, margin = 24;
    int max_depth = 2 * ip - 3;
    if (max_depth < ip - 2) max_depth = ip - 2;
    int width = 2 * margin + (2 * ip + 1) * cellw;
    int height = 2 * margin + 28 + (max_depth + 1) * cellh;
    auto cx = [&](int x) { return margin + (x + ip) * cellw + cellw / 2; };
    auto cy = [&](int depth) { return margin + 28 + depth * cellh + bh / 2; };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
    s += "  <defs><marker id=\"arrow\" markerWidth=\"7\" markerHeight=\"7\" refX=\"6\" refY=\"3\""
         " orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"#333333\"/></marker></defs>\n";
    s += "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    std::string head = d.kind == DiagramKind::omega2 ? "Omega^2(F_p)" : "Omega^-2(F_p)";
    s += "  <text x=\"" + std::to_string(margin) + "\" y=\"" + std::to_string(margin) +
         "\" font-family=\"monospace\" font-size=\"14\" fill=\"#111111\">" + head + " over C" +
         std::to_string(d.p) + "xC" + std::to_string(d.p) +
         " (southwest: sigma1-1, southeast: sigma2-1)</text>\n";
    for (const DiagramEdge& e : d.edges) {
        const DiagramBox& a = d.boxes[e.from];
        const DiagramBox& b = d.boxes[e.to];
        // Shorten toward the target so the arrowhead clears the box.
        double x1 = cx(a.x), y1 = cy(a.depth), x2 = cx(b.x), y2 = cy(b.depth);
        double vx = x2 - x1, vy = y2 - y1;
        double len = vx * vx + vy * vy > 0 ? std::sqrt(vx * vx + vy * vy) : 1.0;
        double keep_src = (bh / 2 + 4) / len, keep_dst = (bh / 2 + 8) / len;
        x1 += vx * keep_src;
        y1 += vy * keep_src;
        x2 -= vx * keep_dst;
        y2 -= vy * keep_dst;
        s += "  <line x1=\"" + std::to_string(int(x1)) + "\" y1=\"" + std::to_string(int(y1)) +
             "\" x2=\"" + std::to_string(int(x2)) + "\" y2=\"" + std::to_string(int(y2)) +
             "\" stroke=\"#333333\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
    }
    for (const DiagramBox& b : d.boxes) {
        s += "  <rect x=\"" + std::to_string(cx(b.x) - bw / 2) + "\" y=\"" +
             std::to_string(cy(b.depth) - bh / 2) + "\" width=\"" + std::to_string(bw) +
             "\" height=\"" + std::to_string(bh) +
             "\" rx=\"4\" fill=\"#f7f7f7\" stroke=\"#333333\"/>\n";
        s += "  <text x=\"" + std::to_string(cx(b.x)) + "\" y=\"" +
             std::to_string(cy(b.depth) + 5) +
             "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"13\""
             " fill=\"#111111\">" +
             b.label + "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace detail

inline std::string render_diagram(uint32_t p, DiagramKind kind, DiagramFormat format) {
    DiagramData d = diagram_data(p, kind);
    return format == DiagramFormat::text ? detail::render_diagram_text(d)
                                         : detail::render_diagram_svg(d);
}

}  // namespace syzygy
