#include "vitality/generators.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

namespace vitality {

GraphSpec generate_grid(Idx rows, Idx cols) {
    if (rows < 1 || cols < 1 || static_cast<std::int64_t>(rows) * cols < 2)
        throw CannotSatisfy("grid needs at least two vertices");
    GraphSpec spec;
    spec.vertex_count = rows * cols;
    spec.s = 0;
    spec.t = rows * cols - 1;
    spec.rotations.resize(spec.vertex_count);
    auto id = [cols](Idx r, Idx c) { return r * cols + c; };
    for (Idx r = 0; r < rows; ++r) {
        for (Idx c = 0; c < cols; ++c) {
            auto& rot = spec.rotations[id(r, c)];
            // Clockwise from north, y pointing up the rows.
            if (r + 1 < rows) rot.push_back(id(r + 1, c));
            if (c + 1 < cols) rot.push_back(id(r, c + 1));
            if (r > 0) rot.push_back(id(r - 1, c));
            if (c > 0) rot.push_back(id(r, c - 1));
        }
    }
    return spec;
}

namespace {

bool connected_after(const GraphSpec& spec, Idx skip_u, Idx skip_v) {
    const Idx n = spec.vertex_count;
    std::vector<std::vector<Idx>> adj(n);
    for (Idx u = 0; u < n; ++u)
        for (Idx v : spec.rotations[u]) {
            if ((u == skip_u && v == skip_v) || (u == skip_v && v == skip_u)) continue;
            adj[u].push_back(v);
        }
    std::vector<char> seen(n, 0);
    std::queue<Idx> q;
    seen[0] = 1;
    q.push(0);
    Idx cnt = 1;
    while (!q.empty()) {
        Idx v = q.front();
        q.pop();
        for (Idx w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                q.push(w);
            }
    }
    return cnt == n;
}

void remove_edge(GraphSpec& spec, Idx u, Idx v) {
    auto& ru = spec.rotations[u];
    ru.erase(std::find(ru.begin(), ru.end(), v));
    auto& rv = spec.rotations[v];
    rv.erase(std::find(rv.begin(), rv.end(), u));
}

}  // namespace

GraphSpec generate_grid_minus(Idx rows, Idx cols, Idx deletions, std::uint64_t seed) {
    GraphSpec spec = generate_grid(rows, cols);
    std::mt19937_64 rng(seed);
    Idx removed = 0;
    Idx attempts = 0;
    const Idx max_attempts = 60 * (deletions + 1);
    while (removed < deletions) {
        if (++attempts > max_attempts)
            throw CannotSatisfy("could not delete the requested number of edges");
        std::vector<std::pair<Idx, Idx>> edges;
        for (Idx u = 0; u < spec.vertex_count; ++u)
            for (Idx v : spec.rotations[u])
                if (u < v) edges.emplace_back(u, v);
        if (edges.empty()) throw CannotSatisfy("no edges left to delete");
        auto [u, v] = edges[rng() % edges.size()];
        if (!connected_after(spec, u, v)) continue;
        remove_edge(spec, u, v);
        ++removed;
    }
    return spec;
}

namespace {

// Minimal half-edge builder for the triangulation growth.
struct HalfEdgeBuilder {
    std::vector<Idx> head, nxt;
    Idx vertices = 0;

    Idx new_dart(Idx to) {
        head.push_back(to);
        nxt.push_back(kNone);
        return static_cast<Idx>(head.size()) - 1;
    }
    // Returns the dart u -> v; twin is dart ^ 1.
    Idx new_edge(Idx u, Idx v) {
        Idx d = new_dart(v);
        new_dart(u);
        return d;
    }
};

}  // namespace

GraphSpec generate_triangulated_disk(Idx n, std::uint64_t seed) {
    if (n < 3) throw CannotSatisfy("triangulated disk needs at least 3 vertices");
    std::mt19937_64 rng(seed);
    HalfEdgeBuilder b;
    b.vertices = 3;
    Idx e01 = b.new_edge(0, 1);
    Idx e12 = b.new_edge(1, 2);
    Idx e20 = b.new_edge(2, 0);
    // Clockwise rotations 0:[1,2], 1:[2,0], 2:[0,1].
    b.nxt[e01] = twin(e20);
    b.nxt[twin(e20)] = e01;
    b.nxt[e12] = twin(e01);
    b.nxt[twin(e01)] = e12;
    b.nxt[e20] = twin(e12);
    b.nxt[twin(e12)] = e20;

    // Insertable faces as left-walk dart triples; the face (0->2, 2->1, 1->0)
    // stays as the untouched outer face.
    std::vector<std::array<Idx, 3>> faces{{e01, e12, e20}};
    for (Idx v = 3; v < n; ++v) {
        std::size_t pick = rng() % faces.size();
        auto [d1, d2, d3] = faces[pick];
        Idx a = b.head[twin(d1)], bb = b.head[d1], c = b.head[d2];
        b.vertices++;
        Idx ea = b.new_edge(a, v);
        Idx eb = b.new_edge(bb, v);
        Idx ec = b.new_edge(c, v);
        b.nxt[ea] = d1;
        b.nxt[twin(d3)] = ea;
        b.nxt[eb] = d2;
        b.nxt[twin(d1)] = eb;
        b.nxt[ec] = d3;
        b.nxt[twin(d2)] = ec;
        b.nxt[twin(ea)] = twin(ec);
        b.nxt[twin(ec)] = twin(eb);
        b.nxt[twin(eb)] = twin(ea);
        faces[pick] = {d1, eb, twin(ea)};
        faces.push_back({d2, ec, twin(eb)});
        faces.push_back({d3, ea, twin(ec)});
    }

    GraphSpec spec;
    spec.vertex_count = n;
    spec.rotations.resize(n);
    std::vector<Idx> first(n, kNone);
    for (Idx d = 0; d < static_cast<Idx>(b.head.size()); ++d) {
        Idx tail = b.head[twin(d)];
        if (first[tail] == kNone) first[tail] = d;
    }
    for (Idx v = 0; v < n; ++v) {
        Idx d = first[v];
        do {
            spec.rotations[v].push_back(b.head[d]);
            d = b.nxt[d];
        } while (d != first[v]);
    }

    // Terminals far apart: double BFS sweep.
    auto farthest = [&](Idx from) {
        std::vector<Idx> dist(n, kNone);
        std::queue<Idx> q;
        dist[from] = 0;
        q.push(from);
        Idx best = from;
        while (!q.empty()) {
            Idx v = q.front();
            q.pop();
            for (Idx w : spec.rotations[v])
                if (dist[w] == kNone) {
                    dist[w] = dist[v] + 1;
                    if (dist[w] > dist[best] || (dist[w] == dist[best] && w < best)) best = w;
                    q.push(w);
                }
        }
        return best;
    };
    spec.s = farthest(0);
    spec.t = farthest(spec.s);
    if (spec.s == spec.t) {  // n == 3 corner case with ties
        spec.s = 0;
        spec.t = 1;
    }
    return spec;
}

}  // namespace vitality
