#include "vitality/bench.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "vitality/generators.hpp"

namespace vitality {

std::string bench_csv_row(const BenchRecord& r) {
    std::ostringstream out;
    out << r.n << "," << r.m << "," << r.mf << "," << r.k << "," << r.sum_slice_edges;
    for (double t : {r.t_dual, r.t_cut, r.t_pairs, r.t_family, r.t_slices, r.t_tests, r.t_total})
        out << "," << t;
    return out.str();
}

BenchRecord bench_one(const std::string& kind, Idx n, std::uint64_t seed) {
    GraphSpec spec;
    if (kind == "grid") {
        Idx side = static_cast<Idx>(std::lround(std::sqrt(static_cast<double>(n))));
        side = std::max<Idx>(side, 2);
        spec = generate_grid(side, (n + side - 1) / side);
    } else if (kind == "grid-minus") {
        Idx side = std::max<Idx>(2, static_cast<Idx>(std::lround(std::sqrt(double(n)))));
        spec = generate_grid_minus(side, side, side / 4, seed);
    } else if (kind == "triangulated-disk") {
        spec = generate_triangulated_disk(n, seed);
    } else {
        throw CannotSatisfy("unknown bench kind '" + kind + "'");
    }

    EmbeddedGraph g = build_embedded_graph(spec);
    PipelineTrace trace;
    auto start = std::chrono::steady_clock::now();
    VitalityReport report = compute_vitality(g, trace);
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    (void)report;

    BenchRecord rec;
    rec.n = g.num_vertices();
    rec.m = g.num_edges();
    rec.mf = trace.mf;
    rec.k = trace.k;
    rec.sum_slice_edges = trace.sum_slice_edges;
    rec.t_dual = trace.t_dual;
    rec.t_cut = trace.t_cut;
    rec.t_pairs = trace.t_pairs;
    rec.t_family = trace.t_family;
    rec.t_slices = trace.t_slices;
    rec.t_tests = trace.t_tests;
    rec.t_total = total;
    return rec;
}

double fitted_loglog_slope(const std::vector<BenchRecord>& records) {
    std::map<Idx, std::pair<double, int>> by_size;
    for (const auto& r : records) {
        by_size[r.n].first += r.t_total;
        by_size[r.n].second += 1;
    }
    std::vector<double> xs, ys;
    for (auto& [n, acc] : by_size) {
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(acc.first / acc.second));
    }
    if (xs.size() < 2) return 0.0;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double num = 0, den = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    return num / den;
}

}  // namespace vitality
