#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "vitality/engine.hpp"
#include "vitality/generators.hpp"
#include "vitality/oracle.hpp"

using namespace vitality;

namespace {

struct DualCtx {
    EmbeddedGraph g;
    FaceStructure faces;
    DualGraph dual;
    CutPath pi;
};

DualCtx dual_ctx(const GraphSpec& spec) {
    EmbeddedGraph g = build_embedded_graph(spec);
    FaceStructure faces = trace_faces(g);
    DualGraph dual = build_dual(g, faces);
    auto [f_s, f_t] = select_terminal_faces(g, faces);
    CutPath pi = shortest_dual_path(g, faces, dual, f_s, f_t);
    return {std::move(g), std::move(faces), std::move(dual), std::move(pi)};
}

}  // namespace

TEST_CASE("max flow values on the fixtures") {
    CHECK(max_flow_oracle(build_embedded_graph(fixtures::theta())) == 3);
    CHECK(max_flow_oracle(build_embedded_graph(fixtures::theta()), 0) == 2);  // drop st
    CHECK(max_flow_oracle(build_embedded_graph(generate_grid(3, 3))) == 2);
    CHECK(max_flow_oracle(build_embedded_graph(fixtures::single_edge())) == 1);
}

TEST_CASE("oracle vitality on the diamond and single edge") {
    VitalityReport d = vitality_oracle(build_embedded_graph(fixtures::diamond()));
    CHECK(d.vit == std::vector<signed char>{1, 1, 0, 1, 1});
    VitalityReport e = vitality_oracle(build_embedded_graph(fixtures::single_edge()));
    CHECK(e.mf == 1);
    CHECK(e.vit[0] == 1);
}

TEST_CASE("vitalities are always zero or one") {
    std::mt19937_64 rng(67);
    for (int it = 0; it < 25; ++it) {
        GraphSpec spec = generate_triangulated_disk(4 + rng() % 30, rng());
        VitalityReport r = vitality_oracle(build_embedded_graph(spec));
        for (signed char v : r.vit) CHECK((v == 0 || v == 1));
    }
}

TEST_CASE("pipeline MF equals oracle MF") {
    std::mt19937_64 rng(71);
    for (int it = 0; it < 30; ++it) {
        GraphSpec spec = it % 2 ? generate_triangulated_disk(4 + rng() % 40, rng())
                                : generate_grid(2 + rng() % 5, 2 + rng() % 5);
        EmbeddedGraph g = build_embedded_graph(spec);
        CHECK(compute_vitality(g).mf == max_flow_oracle(g));
    }
}

TEST_CASE("shortest separating cycles through cycle4 edges have length two") {
    DualCtx c = dual_ctx(fixtures::cycle4());
    for (Idx e = 0; e < c.g.num_edges(); ++e) {
        SeparatingCycleStats st = separating_cycle_oracle(c.g, c.faces, c.dual, c.pi, e);
        CHECK(st.min_length == 2);
    }
}

TEST_CASE("the diamond chord needs a length-three separating cycle") {
    DualCtx c = dual_ctx(fixtures::diamond());
    SeparatingCycleStats st = separating_cycle_oracle(c.g, c.faces, c.dual, c.pi, 2);  // ab
    CHECK(st.min_length == 3);
    CHECK(separating_cycle_oracle(c.g, c.faces, c.dual, c.pi, 0).min_length == 2);
}

TEST_CASE("vital edges admit single-crossing minimal witnesses") {
    std::mt19937_64 rng(73);
    int tested = 0;
    for (int it = 0; it < 40 && tested < 25; ++it) {
        GraphSpec spec = it % 2 ? generate_triangulated_disk(4 + rng() % 8, rng())
                                : generate_grid(2 + rng() % 2, 2 + rng() % 3);
        EmbeddedGraph g = build_embedded_graph(spec);
        BridgeInfo info = find_bridges(g);
        if (info.component[g.s()] != info.component[g.t()]) continue;
        DualCtx c = dual_ctx(spec);
        auto stats = separating_cycle_stats(c.g, c.faces, c.dual, c.pi);
        VitalityReport truth = vitality_oracle(c.g);
        ++tested;
        for (Idx e = 0; e < c.g.num_edges(); ++e) {
            if (truth.vit[e] != 1) continue;
            CHECK(stats[e].min_length == truth.mf);
            CHECK(stats[e].min_crossings <= 1);
        }
    }
    CHECK(tested >= 20);
}

TEST_CASE("the bond oracle refuses big instances") {
    DualCtx c = dual_ctx(generate_grid(6, 6));
    CHECK_THROWS_AS(separating_cycle_stats(c.g, c.faces, c.dual, c.pi), OracleCapExceeded);
}
