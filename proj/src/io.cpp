#include "vitality/io.hpp"

#include <sstream>

namespace vitality {

namespace {

[[noreturn]] void fail(Idx line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

GraphSpec parse_spec(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Idx line_no = 0;
    GraphSpec spec;
    Idx declared_m = kNone;
    bool header_seen = false;
    std::vector<char> vertex_seen;

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;

        if (!header_seen) {
            if (first != "pg") fail(line_no, "expected header 'pg 1 n m s t'");
            Idx version;
            if (!(ls >> version >> spec.vertex_count >> declared_m >> spec.s >> spec.t))
                fail(line_no, "malformed header");
            if (version != 1) fail(line_no, "unsupported format version");
            if (spec.vertex_count <= 0) fail(line_no, "vertex count must be positive");
            spec.rotations.resize(spec.vertex_count);
            vertex_seen.assign(spec.vertex_count, 0);
            header_seen = true;
            continue;
        }

        if (first.back() != ':') fail(line_no, "expected '<id>:' at line start");
        Idx id;
        try {
            id = static_cast<Idx>(std::stol(first.substr(0, first.size() - 1)));
        } catch (...) {
            fail(line_no, "bad vertex id '" + first + "'");
        }
        if (id < 0 || id >= spec.vertex_count) fail(line_no, "vertex id out of range");
        if (vertex_seen[id]) fail(line_no, "duplicate vertex line");
        vertex_seen[id] = 1;
        Idx v;
        while (ls >> v) spec.rotations[id].push_back(v);
        if (!ls.eof()) fail(line_no, "bad neighbor list");
    }
    if (!header_seen) fail(line_no, "missing header");
    for (Idx v = 0; v < spec.vertex_count; ++v)
        if (!vertex_seen[v]) throw ParseError("missing rotation line for vertex " + std::to_string(v));

    Idx mention_count = 0;
    for (const auto& r : spec.rotations) mention_count += static_cast<Idx>(r.size());
    if (mention_count != 2 * declared_m)
        throw ParseError("header declares " + std::to_string(declared_m) + " edges but " +
                         std::to_string(mention_count) + " half-edges are listed");
    return spec;
}

EmbeddedGraph parse_instance(const std::string& text) {
    return build_embedded_graph(parse_spec(text));
}

std::string serialize_instance(const GraphSpec& spec) {
    std::ostringstream out;
    Idx mentions = 0;
    for (const auto& r : spec.rotations) mentions += static_cast<Idx>(r.size());
    out << "pg 1 " << spec.vertex_count << " " << mentions / 2 << " " << spec.s << " " << spec.t
        << "\n";
    for (Idx v = 0; v < spec.vertex_count; ++v) {
        out << v << ":";
        for (Idx w : spec.rotations[v]) out << " " << w;
        out << "\n";
    }
    return out.str();
}

std::string serialize_instance(const EmbeddedGraph& g) { return serialize_instance(g.to_spec()); }

}  // namespace vitality
