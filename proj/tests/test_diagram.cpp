#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "syzygy/diagram.hpp"

using namespace syzygy;

TEST_CASE("diagram sizes per prime") {
    struct Expect {
        uint32_t p;
        size_t boxes, edges;
    };
    for (auto [p, nb, ne] : {Expect{2, 5, 4}, Expect{3, 10, 12}, Expect{5, 26, 40}}) {
        DiagramData d = diagram_data(p, DiagramKind::omega2);
        REQUIRE(d.boxes.size() == nb);
        REQUIRE(d.edges.size() == ne);
    }
    REQUIRE_THROWS_AS(diagram_data(11, DiagramKind::omega2), std::domain_error);
}

TEST_CASE("diagram geometry") {
    DiagramData d = diagram_data(3, DiagramKind::omega2);
    // All box positions are distinct.
    std::set<std::pair<int, int>> seen;
    for (const auto& b : d.boxes) REQUIRE(seen.insert({b.x, b.depth}).second);
    // a0 sits at the apex, a1 far southwest, a2 far southeast.
    REQUIRE(d.boxes[0].label == "a1");
    REQUIRE(d.boxes[0].x == -3);
    REQUIRE(d.boxes[0].depth == 1);
    REQUIRE(d.boxes[1].label == "a2");
    REQUIRE(d.boxes[1].x == 3);
    REQUIRE(d.boxes[2].label == "a0");
    REQUIRE(d.boxes[2].x == 0);
    REQUIRE(d.boxes[2].depth == 0);
    // Every edge steps one lattice unit down, southwest or southeast.
    for (const auto& e : d.edges) {
        const auto& from = d.boxes[e.from];
        const auto& to = d.boxes[e.to];
        REQUIRE(to.depth == from.depth + 1);
        REQUIRE(to.x - from.x == (e.gen == 0 ? -1 : 1));
    }
}

TEST_CASE("dual diagram reverses every edge") {
    DiagramData d2 = diagram_data(2, DiagramKind::omega2);
    DiagramData dm = diagram_data(2, DiagramKind::omega_minus_2);
    REQUIRE(d2.boxes.size() == dm.boxes.size());
    std::set<std::tuple<size_t, size_t, int>> fwd, rev;
    for (const auto& e : d2.edges) fwd.insert({e.from, e.to, e.gen});
    for (const auto& e : dm.edges) rev.insert({e.to, e.from, e.gen});
    REQUIRE(fwd == rev);
}

TEST_CASE("text rendering") {
    std::string t = render_diagram(2, DiagramKind::omega2, DiagramFormat::text);
    REQUIRE(t.find("[a0]") != std::string::npos);
    REQUIRE(t.find("[a1]") != std::string::npos);
    REQUIRE(t.find("[b10]") != std::string::npos);
    REQUIRE(t.find("[b11]") == std::string::npos);  // depth cap k+l < 2p-2
    REQUIRE(t.find("sigma1") != std::string::npos);
    REQUIRE(t.find('/') != std::string::npos);
    REQUIRE(t.find('\\') != std::string::npos);

    std::string t5 = render_diagram(5, DiagramKind::omega_minus_2, DiagramFormat::text);
    REQUIRE(t5.find("[a2]") != std::string::npos);
    REQUIRE(t5.find("[b33]") != std::string::npos);
}

TEST_CASE("svg rendering") {
    DiagramData d = diagram_data(3, DiagramKind::omega2);
    std::string s = render_diagram(3, DiagramKind::omega2, DiagramFormat::svg);
    REQUIRE(s.find("<svg") != std::string::npos);
    REQUIRE(s.find("</svg>") != std::string::npos);
    size_t rects = 0, lines = 0, pos = 0;
    while ((pos = s.find("<rect", pos)) != std::string::npos) ++rects, pos += 5;
    pos = 0;
    while ((pos = s.find("<line", pos)) != std::string::npos) ++lines, pos += 5;
    REQUIRE(rects == d.boxes.size() + 1);  // one background rect
    REQUIRE(lines == d.edges.size());
    REQUIRE(s.find(">a0<") != std::string::npos);
}
