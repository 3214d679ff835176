#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vitality/engine.hpp"

namespace vitality {

struct BenchRecord {
    Idx n = 0, m = 0, mf = 0, k = 0;
    Idx d_edges = 0;  // |E(D)|, for the slice size ratio
    std::int64_t sum_slice_edges = 0;
    double t_dual = 0, t_cut = 0, t_pairs = 0, t_family = 0, t_slices = 0, t_tests = 0,
           t_total = 0;
};

inline const char* kBenchCsvHeader =
    "n,m,MF,k,sum_slice_edges,t_dual,t_cut,t_pairs,t_family,t_slices,t_tests,t_total";

std::string bench_csv_row(const BenchRecord& r);

// Runs compute_vitality on a generated instance of the given kind and size.
BenchRecord bench_one(const std::string& kind, Idx n, std::uint64_t seed);

// Least-squares slope of log(t_total) against log(n), one point per size
// (mean over records of that size).
double fitted_loglog_slope(const std::vector<BenchRecord>& records);

}  // namespace vitality
