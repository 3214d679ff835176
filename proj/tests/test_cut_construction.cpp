#include <doctest.h>

#include <algorithm>
#include <map>

#include "fixtures.hpp"
#include "vitality/cut.hpp"
#include "vitality/generators.hpp"

using namespace vitality;

namespace {

struct Ctx {
    EmbeddedGraph g;
    FaceStructure faces;
    DualGraph dual;
};

Ctx make(const GraphSpec& spec) {
    Ctx c{build_embedded_graph(spec), {}, {}};
    c.faces = trace_faces(c.g);
    c.dual = build_dual(c.g, c.faces);
    return c;
}

std::vector<Idx> faces_at(const Ctx& c, Idx v) {
    std::vector<Idx> out;
    for (Idx d : c.g.graph().rotation_of(v)) out.push_back(c.faces.face_of[d]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

TEST_CASE("terminal faces on the diamond are the two triangles") {
    Ctx c = make(fixtures::diamond());
    auto [f_s, f_t] = select_terminal_faces(c.g, c.faces);
    CHECK(f_s != f_t);
    // f_s touches s but not t, and vice versa: exactly the non-shared faces.
    std::vector<Idx> fs = faces_at(c, c.g.s()), ft = faces_at(c, c.g.t());
    CHECK(std::count(fs.begin(), fs.end(), f_s) == 1);
    CHECK(std::count(ft.begin(), ft.end(), f_s) == 0);
    CHECK(std::count(ft.begin(), ft.end(), f_t) == 1);
    CHECK(std::count(fs.begin(), fs.end(), f_t) == 0);
}

TEST_CASE("terminal faces on cycle4 are distinct although all are shared") {
    Ctx c = make(fixtures::cycle4());
    auto [f_s, f_t] = select_terminal_faces(c.g, c.faces);
    CHECK(f_s != f_t);
}

TEST_CASE("path3 raises OnlySharedFace") {
    Ctx c = make(fixtures::path3());
    CHECK_THROWS_AS(select_terminal_faces(c.g, c.faces), OnlySharedFace);
}

TEST_CASE("cut path on the diamond is the single dual edge through ab") {
    Ctx c = make(fixtures::diamond());
    auto [f_s, f_t] = select_terminal_faces(c.g, c.faces);
    CutPath pi = shortest_dual_path(c.g, c.faces, c.dual, f_s, f_t);
    CHECK(pi.length() == 1);
    CHECK(pi.edges[0] == 2);  // ab
}

TEST_CASE("cut path on cycle4 uses the smallest parallel edge") {
    Ctx c = make(fixtures::cycle4());
    auto [f_s, f_t] = select_terminal_faces(c.g, c.faces);
    CutPath pi = shortest_dual_path(c.g, c.faces, c.dual, f_s, f_t);
    CHECK(pi.length() == 1);
    CHECK(pi.edges[0] == 0);
}

TEST_CASE("cut path on grid3 has length two") {
    Ctx c = make(generate_grid(3, 3));
    auto [f_s, f_t] = select_terminal_faces(c.g, c.faces);
    CutPath pi = shortest_dual_path(c.g, c.faces, c.dual, f_s, f_t);
    CHECK(pi.length() == 2);
}

TEST_CASE("doubled dual sizes follow the construction identity") {
    for (const GraphSpec& spec :
         {fixtures::cycle4(), fixtures::diamond(), fixtures::theta(), generate_grid(3, 3),
          generate_grid(4, 6)}) {
        Ctx c = make(spec);
        auto [f_s, f_t] = select_terminal_faces(c.g, c.faces);
        CutPath pi = shortest_dual_path(c.g, c.faces, c.dual, f_s, f_t);
        DoubledDual dd = build_doubled_dual(c.dual, pi);
        Idx self_loops = static_cast<Idx>(std::count(c.dual.self_loop.begin(),
                                                     c.dual.self_loop.end(), 1));
        CHECK(dd.g.num_edges() == c.dual.g.num_edges() - self_loops + pi.length());
        CHECK(dd.g.num_vertices() == c.dual.g.num_vertices() + pi.length() + 1);
    }
}

TEST_CASE("cycle4 doubled dual has 4 vertices and 5 edges") {
    Ctx c = make(fixtures::cycle4());
    auto [f_s, f_t] = select_terminal_faces(c.g, c.faces);
    CutPath pi = shortest_dual_path(c.g, c.faces, c.dual, f_s, f_t);
    DoubledDual dd = build_doubled_dual(c.dual, pi);
    CHECK(dd.g.num_vertices() == 4);
    CHECK(dd.g.num_edges() == 5);
}

TEST_CASE("diamond doubled dual has 6 edges") {
    Ctx c = make(fixtures::diamond());
    auto [f_s, f_t] = select_terminal_faces(c.g, c.faces);
    CutPath pi = shortest_dual_path(c.g, c.faces, c.dual, f_s, f_t);
    DoubledDual dd = build_doubled_dual(c.dual, pi);
    CHECK(dd.g.num_edges() == 6);
}

TEST_CASE("collapsing the doubled dual restores the dual graph") {
    for (const GraphSpec& spec :
         {fixtures::cycle4(), fixtures::diamond(), fixtures::theta(), generate_grid(3, 3),
          generate_grid(5, 4)}) {
        Ctx c = make(spec);
        auto [f_s, f_t] = select_terminal_faces(c.g, c.faces);
        CutPath pi = shortest_dual_path(c.g, c.faces, c.dual, f_s, f_t);
        DoubledDual dd = build_doubled_dual(c.dual, pi);

        std::vector<char> on_pi(c.dual.g.num_edges(), 0);
        for (Idx e : pi.edges) on_pi[e] = 1;
        for (Idx e = 0; e < c.dual.g.num_edges(); ++e) {
            Idx de = dd.d_edge_of_dual[e];
            if (c.dual.self_loop[e]) {
                CHECK(de == kNone);
                continue;
            }
            REQUIRE(de != kNone);
            CHECK(dd.dual_edge_of_d[de] == e);
            auto ends = [&](const EmbeddedMultigraph& g, Idx edge, auto map) {
                Idx a = map(g.tail(dart_of(edge))), b = map(g.head(dart_of(edge)));
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            auto ident = [](Idx v) { return v; };
            auto to_orig = [&](Idx v) { return dd.orig_vertex[v]; };
            CHECK(ends(dd.g, de, to_orig) == ends(c.dual.g, e, ident));
            if (on_pi[e]) CHECK(dd.is_x_copy[de]);
        }
        // Every pi edge also has a y copy over the up copies.
        for (Idx j = 0; j < pi.length(); ++j) {
            Idx ey = dd.y_edge[j];
            CHECK(dd.is_y_copy[ey]);
            CHECK(dd.dual_edge_of_d[ey] == pi.edges[j]);
            CHECK(dd.g.tail(dart_of(ey)) == dd.up_copy[j]);
            CHECK(dd.g.head(dart_of(ey)) == dd.up_copy[j + 1]);
        }
    }
}

TEST_CASE("interior split pairs keep the original degree plus two") {
    Ctx c = make(generate_grid(4, 6));
    auto [f_s, f_t] = select_terminal_faces(c.g, c.faces);
    CutPath pi = shortest_dual_path(c.g, c.faces, c.dual, f_s, f_t);
    DoubledDual dd = build_doubled_dual(c.dual, pi);
    for (Idx j = 1; j < pi.length(); ++j) {
        Idx orig_deg = c.dual.g.degree(pi.verts[j]);
        CHECK(dd.g.degree(dd.low_copy[j]) + dd.g.degree(dd.up_copy[j]) == orig_deg + 2);
    }
}

TEST_CASE("pi copies run along the outer face of the doubled dual") {
    for (const GraphSpec& spec : {fixtures::diamond(), generate_grid(3, 3), generate_grid(4, 4)}) {
        Ctx c = make(spec);
        auto [f_s, f_t] = select_terminal_faces(c.g, c.faces);
        CutPath pi = shortest_dual_path(c.g, c.faces, c.dual, f_s, f_t);
        DoubledDual dd = build_doubled_dual(c.dual, pi);
        REQUIRE(dd.outer_face != kNone);
        // Every split copy lies on the outer face walk.
        std::vector<char> on_outer(dd.g.num_vertices(), 0);
        for (Idx d : dd.faces.walk(dd.g, dd.outer_face)) on_outer[dd.g.tail(d)] = 1;
        for (Idx j = 0; j <= pi.length(); ++j) {
            CHECK(on_outer[dd.low_copy[j]]);
            CHECK(on_outer[dd.up_copy[j]]);
        }
    }
}
