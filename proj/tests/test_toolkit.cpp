#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "vitality/bench.hpp"
#include "vitality/generators.hpp"
#include "vitality/io.hpp"

using namespace vitality;

TEST_CASE("cycle4 parses from text") {
    std::string text =
        "# four-cycle\n"
        "pg 1 4 4 0 2\n"
        "0: 1 3\n"
        "1: 2 0\n"
        "2: 1 3\n"
        "3: 0 2\n";
    EmbeddedGraph g = parse_instance(text);
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 4);
    CHECK(g.s() == 0);
    CHECK(g.t() == 2);
}

TEST_CASE("equal terminals are rejected") {
    std::string text = "pg 1 2 1 1 1\n0: 1\n1: 0\n";
    CHECK_THROWS_AS(parse_instance(text), BadTerminals);
}

TEST_CASE("parse errors carry line numbers") {
    std::string text = "pg 1 2 1 0 1\n0: 1\nbogus\n";
    try {
        parse_instance(text);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    try {
        parse_instance("pg 2 2 1 0 1\n0: 1\n1: 0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
}

TEST_CASE("serialize then parse is the identity") {
    std::mt19937_64 rng(79);
    std::vector<GraphSpec> specs = {fixtures::cycle4(), fixtures::diamond(), fixtures::theta(),
                                    generate_grid(3, 3)};
    for (int it = 0; it < 100; ++it) {
        switch (it % 3) {
            case 0: specs.push_back(generate_triangulated_disk(4 + rng() % 40, rng())); break;
            case 1: {
                Idx r = 2 + rng() % 5, c = 2 + rng() % 5;
                specs.push_back(generate_grid_minus(r, c, rng() % ((r - 1) * (c - 1) + 1), rng()));
                break;
            }
            default: specs.push_back(generate_grid(2 + rng() % 6, 2 + rng() % 6)); break;
        }
    }
    for (const GraphSpec& spec : specs) {
        GraphSpec round = parse_spec(serialize_instance(spec));
        CHECK(round.vertex_count == spec.vertex_count);
        CHECK(round.s == spec.s);
        CHECK(round.t == spec.t);
        CHECK(round.rotations == spec.rotations);
        CHECK(serialize_instance(round) == serialize_instance(spec));
    }
}

TEST_CASE("grid generator reproduces the canonical fixtures") {
    GraphSpec g33 = generate_grid(3, 3);
    CHECK(g33.vertex_count == 9);
    CHECK(g33.s == 0);
    CHECK(g33.t == 8);
    CHECK(build_embedded_graph(g33).num_edges() == 12);

    GraphSpec edge = generate_grid(1, 2);
    CHECK(edge.vertex_count == 2);
    CHECK(build_embedded_graph(edge).num_edges() == 1);
}

TEST_CASE("generator outputs pass embedding validation") {
    std::mt19937_64 rng(83);
    for (int it = 0; it < 40; ++it) {
        GraphSpec spec;
        if (it % 2)
            spec = generate_triangulated_disk(4 + rng() % 100, rng());
        else
            spec = generate_grid_minus(3 + rng() % 8, 3 + rng() % 8, rng() % 12, rng());
        EmbeddedGraph g = build_embedded_graph(spec);
        CHECK_NOTHROW(trace_faces(g));
    }
    CHECK_NOTHROW(trace_faces(build_embedded_graph(generate_grid_minus(10, 10, 20, 1))));
}

TEST_CASE("generators are deterministic per seed") {
    GraphSpec a = generate_triangulated_disk(50, 99);
    GraphSpec b = generate_triangulated_disk(50, 99);
    CHECK(serialize_instance(a) == serialize_instance(b));
    CHECK(serialize_instance(generate_grid_minus(6, 6, 5, 4)) ==
          serialize_instance(generate_grid_minus(6, 6, 5, 4)));
}

TEST_CASE("impossible deletions raise CannotSatisfy") {
    CHECK_THROWS_AS(generate_grid_minus(2, 2, 3, 1), CannotSatisfy);
}

TEST_CASE("bench rows carry the fixed column order") {
    BenchRecord rec = bench_one("grid", 100, 1);
    CHECK(rec.n == 100);
    CHECK(rec.mf == 2);
    std::string row = bench_csv_row(rec);
    CHECK(std::count(row.begin(), row.end(), ',') == 11);
    CHECK(std::string(kBenchCsvHeader) ==
          "n,m,MF,k,sum_slice_edges,t_dual,t_cut,t_pairs,t_family,t_slices,t_tests,t_total");
}
