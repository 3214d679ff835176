#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vitality/bench.hpp"
#include "vitality/engine.hpp"
#include "vitality/generators.hpp"
#include "vitality/io.hpp"
#include "vitality/oracle.hpp"

namespace {

using namespace vitality;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* tag_name(Provenance p) {
    switch (p) {
        case Provenance::kBridgeRoute: return "bridge";
        case Provenance::kSelfLoop: return "self-loop";
        case Provenance::kUnionForest: return "union";
        case Provenance::kSliceTest: return "slice";
        case Provenance::kOracleRecompute: return "oracle";
    }
    return "?";
}

int run_compute(const std::string& input, const std::string& output, bool check_oracle,
                bool json_out) {
    EmbeddedGraph g = [&] {
        try {
            return parse_instance(read_file(input));
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            std::exit(1);
        }
    }();

    VitalityReport report;
    try {
        report = compute_vitality(g);
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }

    std::ostringstream out;
    if (json_out) {
        nlohmann::json doc;
        doc["mf"] = report.mf;
        doc["edges"] = nlohmann::json::array();
        for (Idx e = 0; e < g.num_edges(); ++e) {
            nlohmann::json je;
            je["id"] = e;
            je["u"] = g.edge_u(e);
            je["v"] = g.edge_v(e);
            je["vit"] = static_cast<int>(report.vit[e]);
            je["via"] = tag_name(report.tag[e]);
            if (report.slice_index[e] != kNone) je["slice"] = report.slice_index[e];
            doc["edges"].push_back(je);
        }
        out << doc.dump(2) << "\n";
    } else {
        out << "MF " << report.mf << "\n";
        for (Idx e = 0; e < g.num_edges(); ++e)
            out << g.edge_u(e) << " " << g.edge_v(e) << " " << static_cast<int>(report.vit[e])
                << "\n";
    }
    if (output.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(output);
        f << out.str();
    }

    if (check_oracle) {
        VitalityReport truth = vitality_oracle(g);
        if (truth.mf != report.mf) {
            std::cerr << "oracle mismatch: MF " << report.mf << " vs " << truth.mf << "\n";
            return 3;
        }
        for (Idx e = 0; e < g.num_edges(); ++e) {
            if (truth.vit[e] != report.vit[e]) {
                std::cerr << "oracle mismatch on edge " << e << " (" << g.edge_u(e) << ","
                          << g.edge_v(e) << "): " << int(report.vit[e]) << " vs "
                          << int(truth.vit[e]) << "\n";
                return 3;
            }
        }
        std::cerr << "oracle check passed on " << g.num_edges() << " edges\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"st max-flow vitality of every edge of an unweighted planar graph"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "compute per-edge vitality");
    std::string in_path, out_path;
    bool check_oracle = false, json_out = false;
    compute->add_option("-i,--input", in_path, "instance file")->required();
    compute->add_option("-o,--output", out_path, "write the report here instead of stdout");
    compute->add_flag("--check-oracle", check_oracle, "recompute with the brute-force oracle");
    compute->add_flag("--json", json_out, "emit one JSON document");

    auto* gen = app.add_subcommand("gen", "generate an instance");
    std::string kind = "grid", gen_out;
    Idx rows = 3, cols = 3, num = 50, deletions = 0;
    std::uint64_t seed = 1;
    gen->add_option("--kind", kind, "grid | grid-minus | triangulated-disk");
    gen->add_option("--rows", rows);
    gen->add_option("--cols", cols);
    gen->add_option("--n", num, "vertex count (triangulated-disk)");
    gen->add_option("--deletions", deletions, "edges to remove (grid-minus)");
    gen->add_option("--seed", seed);
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    auto* bench = app.add_subcommand("bench", "benchmark the pipeline");
    std::string bench_kind = "grid", sizes_arg = "1e4,1e5,1e6", csv_path;
    Idx reps = 1;
    bench->add_option("--kind", bench_kind);
    bench->add_option("--sizes", sizes_arg, "comma-separated vertex counts");
    bench->add_option("--reps", reps);
    bench->add_option("--csv", csv_path, "also append CSV records to this file");

    auto* validate = app.add_subcommand("validate", "parse and check an instance");
    std::string val_path;
    validate->add_option("-i,--input", val_path, "instance file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compute) return run_compute(in_path, out_path, check_oracle, json_out);

        if (*gen) {
            GraphSpec spec;
            if (kind == "grid")
                spec = generate_grid(rows, cols);
            else if (kind == "grid-minus")
                spec = generate_grid_minus(rows, cols, deletions, seed);
            else if (kind == "triangulated-disk")
                spec = generate_triangulated_disk(num, seed);
            else {
                std::cerr << "unknown kind '" << kind << "'\n";
                return 1;
            }
            build_embedded_graph(spec);  // self-check before emitting
            std::string text = serialize_instance(spec);
            if (gen_out.empty())
                std::cout << text;
            else
                std::ofstream(gen_out) << text;
            return 0;
        }

        if (*bench) {
            std::vector<Idx> sizes;
            std::stringstream ss(sizes_arg);
            std::string item;
            while (std::getline(ss, item, ','))
                sizes.push_back(static_cast<Idx>(std::stod(item)));
            std::vector<BenchRecord> records;
            std::ofstream csv;
            if (!csv_path.empty()) {
                csv.open(csv_path);
                csv << kBenchCsvHeader << "\n";
            }
            std::cout << kBenchCsvHeader << "\n";
            for (Idx n : sizes) {
                for (Idx rep = 0; rep < reps; ++rep) {
                    BenchRecord rec = bench_one(bench_kind, n, 1000 + rep);
                    records.push_back(rec);
                    std::cout << bench_csv_row(rec) << "\n" << std::flush;
                    if (csv.is_open()) csv << bench_csv_row(rec) << "\n";
                }
            }
            if (records.size() > 1)
                std::cout << "loglog_slope " << fitted_loglog_slope(records) << "\n";
            return 0;
        }

        if (*validate) {
            try {
                EmbeddedGraph g = parse_instance(read_file(val_path));
                FaceStructure faces = trace_faces(g);
                std::cout << "ok: n=" << g.num_vertices() << " m=" << g.num_edges()
                          << " faces=" << faces.num_faces() << " s=" << g.s() << " t=" << g.t()
                          << "\n";
                return 0;
            } catch (const Error& e) {
                std::cerr << "invalid: " << e.what() << "\n";
                return 1;
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
