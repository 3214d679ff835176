#pragma once

#include <utility>
#include <vector>

#include "vitality/cut.hpp"

namespace vitality {

// Subgraph of the doubled dual, as an edge set.
struct Region {
    std::vector<Idx> edges;
};

// Reusable machinery over regions of D: BFS, deterministic shortest-path
// extraction, the leftmost walk, and cutting a region along a path. All
// scratch arrays are epoch-stamped so repeated calls stay linear in the
// touched region, not in |D|.
class RegionOps {
public:
    explicit RegionOps(const DoubledDual& dd);

    Region whole() const;

    // BFS over region edges from src. Distances are valid until the next bfs
    // call. Tie-breaking does not matter here; paths are extracted separately.
    void bfs(const Region& r, Idx src);
    Idx dist(Idx v) const;

    // Backtracks dst -> src choosing at every step the smallest incident edge
    // id that decreases the BFS distance. Returns darts in src -> dst order.
    std::vector<Idx> extract_path(const Region& r, Idx src, Idx dst) const;

    // Cuts r along a path whose endpoints are a pi_x and a pi_y copy; the
    // wedge gaps at the endpoints block the flood, so the two sides cannot
    // leak around the path ends. Both sides include the path edges.
    // Returns (low side, high side): the high side is the one carrying the
    // rotation arc from each out spoke to the corresponding in spoke.
    std::pair<Region, Region> split(const Region& r, const std::vector<Idx>& path_darts);

    // Leftmost shortest x -> y walk within r: BFS layering from y, then a
    // greedy walk taking at every vertex the first admissible dart in rotation
    // order after the reference slot. Throws NoTightPath when unreachable.
    std::vector<Idx> leftmost_path(const Region& r, Idx x, Idx y);

private:
    bool in_region(Idx e) const { return edge_epoch_[e] == epoch_; }
    void load(const Region& r);
    Idx gap_after(Idx v) const;

    const DoubledDual* dd_;
    Idx epoch_ = 0;
    std::vector<Idx> edge_epoch_;
    std::vector<Idx> dist_;
    std::vector<Idx> dist_epoch_;
    std::vector<Idx> queue_;
};

}  // namespace vitality
