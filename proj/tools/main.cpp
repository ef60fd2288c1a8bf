#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ecg/applications.hpp"
#include "ecg/ecg.hpp"
#include "ecg/generators.hpp"
#include "ecg/graph.hpp"
#include "ecg/io.hpp"
#include "ecg/louvain.hpp"
#include "ecg/metrics.hpp"
#include "ecg/parallel.hpp"
#include "ecg/rng.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr const char* kToolName = "ecgraph";
constexpr const char* kToolVersion = "0.1.0";

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

// ---------------------------------------------------------------------
// files

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ecg::InputError("cannot open '" + path + "'");
    return in;
}

std::string digest_file(const std::string& path) {
    std::ifstream in = open_input(path);
    std::uint64_t hash = 14695981039346656037ULL;
    char chunk[65536];
    while (in.read(chunk, sizeof(chunk)) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            hash ^= static_cast<unsigned char>(chunk[i]);
            hash *= 1099511628211ULL;
        }
        if (!in) break;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

ecg::Graph load_graph(const std::string& path, bool one_based, bool weighted) {
    std::ifstream in = open_input(path);
    auto indexing = one_based ? ecg::Indexing::one_based : ecg::Indexing::zero_based;
    return ecg::load_edge_list(in, indexing, weighted);
}

ecg::Partition load_partition_file(const std::string& path, bool one_based) {
    std::ifstream in = open_input(path);
    auto indexing = one_based ? ecg::Indexing::one_based : ecg::Indexing::zero_based;
    return ecg::load_partition(in, indexing);
}

std::vector<std::uint8_t> load_mask_file(const std::string& path, bool one_based) {
    std::ifstream in = open_input(path);
    auto indexing = one_based ? ecg::Indexing::one_based : ecg::Indexing::zero_based;
    return ecg::load_mask(in, indexing);
}

// Collects output files for one run and writes the manifest at the end.
class OutputDir {
  public:
    OutputDir(std::string dir, std::string subcommand)
        : dir_(std::move(dir)), subcommand_(std::move(subcommand)) {
        fs::create_directories(dir_);
    }

    template <typename Fn>
    void write(const std::string& name, Fn&& fn) {
        fs::path path = fs::path(dir_) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
        fn(out);
        if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
        outputs_.push_back(name);
    }

    void note_input(const std::string& path) { inputs_[path] = digest_file(path); }

    // manifest captures everything needed to replay the run; resource
    // knobs (worker count, output directory) are deliberately left out so
    // replays compare byte-equal wherever they run
    void finish(const json& params, std::optional<std::uint64_t> seed) {
        json manifest;
        manifest["schema_version"] = kSchemaVersion;
        manifest["tool"] = kToolName;
        manifest["version"] = kToolVersion;
        manifest["subcommand"] = subcommand_;
        if (seed) manifest["seed"] = *seed;
        manifest["params"] = params;
        manifest["inputs"] = inputs_;
        manifest["outputs"] = outputs_;
        write("manifest.json", [&](std::ostream& out) { out << manifest.dump(2) << '\n'; });
    }

  private:
    std::string dir_;
    std::string subcommand_;
    json inputs_ = json::object();
    std::vector<std::string> outputs_;
};

std::uint64_t fresh_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// ---------------------------------------------------------------------
// grid parsing: "A..B", "A..B:STEP" or a comma list

std::uint64_t parse_uint(const std::string& tok, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::invalid_argument(std::string("malformed ") + what + " '" + tok + "'");
    return value;
}

double parse_real(const std::string& tok, const char* what) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::invalid_argument(std::string("malformed ") + what + " '" + tok + "'");
    return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::vector<std::uint32_t> parse_uint_grid(const std::string& spec) {
    std::vector<std::uint32_t> out;
    auto range = spec.find("..");
    if (range != std::string::npos) {
        std::string rest = spec.substr(range + 2);
        auto colon = rest.find(':');
        std::uint64_t lo = parse_uint(spec.substr(0, range), "range start");
        std::uint64_t hi = parse_uint(colon == std::string::npos ? rest : rest.substr(0, colon),
                                      "range end");
        std::uint64_t step = colon == std::string::npos
                                 ? 1
                                 : parse_uint(rest.substr(colon + 1), "range step");
        if (step == 0 || hi < lo) throw std::invalid_argument("bad range '" + spec + "'");
        for (std::uint64_t v = lo; v <= hi; v += step)
            out.push_back(static_cast<std::uint32_t>(v));
        return out;
    }
    for (const std::string& tok : split(spec, ','))
        out.push_back(static_cast<std::uint32_t>(parse_uint(tok, "value")));
    return out;
}

std::vector<double> parse_real_grid(const std::string& spec) {
    std::vector<double> out;
    auto range = spec.find("..");
    if (range != std::string::npos) {
        std::string rest = spec.substr(range + 2);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("real range needs a step: '" + spec + "'");
        double lo = parse_real(spec.substr(0, range), "range start");
        double hi = parse_real(rest.substr(0, colon), "range end");
        double step = parse_real(rest.substr(colon + 1), "range step");
        if (!(step > 0.0) || hi < lo) throw std::invalid_argument("bad range '" + spec + "'");
        for (int i = 0;; ++i) {
            double v = lo + step * i;
            if (v > hi + step * 1e-9) break;
            out.push_back(v);
        }
        return out;
    }
    for (const std::string& tok : split(spec, ','))
        out.push_back(parse_real(tok, "value"));
    return out;
}

// block sizes: comma list of "N" or "KxN" (K blocks of N vertices)
std::vector<std::uint32_t> parse_sizes(const std::string& spec) {
    std::vector<std::uint32_t> out;
    for (const std::string& tok : split(spec, ',')) {
        auto x = tok.find('x');
        if (x == std::string::npos) {
            out.push_back(static_cast<std::uint32_t>(parse_uint(tok, "block size")));
        } else {
            std::uint64_t k = parse_uint(tok.substr(0, x), "block count");
            std::uint64_t n = parse_uint(tok.substr(x + 1), "block size");
            for (std::uint64_t i = 0; i < k; ++i)
                out.push_back(static_cast<std::uint32_t>(n));
        }
    }
    if (out.empty()) throw std::invalid_argument("empty size list");
    return out;
}

ecg::Algorithm parse_algo(const std::string& name) {
    if (name == "ml") return ecg::Algorithm::ml;
    if (name == "level1") return ecg::Algorithm::level1;
    if (name == "ecg") return ecg::Algorithm::ecg;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

const char* algo_name(ecg::Algorithm a) {
    switch (a) {
        case ecg::Algorithm::ml: return "ml";
        case ecg::Algorithm::level1: return "level1";
        case ecg::Algorithm::ecg: return "ecg";
    }
    return "?";
}

// ---------------------------------------------------------------------
// shared option blocks

struct CommonOpts {
    std::string out_dir;
    int workers = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool seeded) {
    cmd->add_option("--out", o.out_dir, "output directory")->required();
    cmd->add_option("--workers", o.workers, "worker threads (default: ECGRAPH_WORKERS or all cores)");
    if (seeded) {
        auto* opt = cmd->add_option("--seed", o.seed, "master seed (generated and recorded if omitted)");
        cmd->parse_complete_callback([&o, opt] {
            o.seed_given = opt->count() > 0;
            if (!o.seed_given) {
                o.seed = fresh_seed();
                std::cerr << "seed " << o.seed << " (auto-generated)\n";
            }
        });
    }
}

struct EnsembleOpts {
    std::uint32_t k = 16;
    double w_star = 0.05;
};

void add_ensemble(CLI::App* cmd, EnsembleOpts& o) {
    cmd->add_option("--ens-size", o.k, "ensemble size")->check(CLI::PositiveNumber);
    cmd->add_option("--min-weight", o.w_star, "minimum consensus weight, in (0,1)");
}

void warn_if_no_core(const ecg::Graph& g) {
    if (g.num_edges() > 0 && ecg::two_core(g).count == 0)
        std::cerr << "warning: the 2-core is empty; every consensus weight equals the minimum"
                     " and the cluster strength index is not meaningful\n";
}

json partition_stats(const ecg::Graph& g, const ecg::Partition& p) {
    json j;
    j["num_clusters"] = p.num_clusters();
    j["modularity"] = ecg::modularity(g, p);
    return j;
}

// =======================================================================
// subcommands

struct ClusterOpts {
    CommonOpts common;
    EnsembleOpts ens;
    std::string input;
    std::string algo = "ml";
    bool one_based = false;
    bool weighted = false;
};

void run_cluster(const ClusterOpts& o) {
    ecg::Graph g = load_graph(o.input, o.one_based, o.weighted);
    ecg::EcgParams params{o.ens.k, o.ens.w_star, o.common.seed};
    ecg::Partition p = ecg::run_algorithm(g, parse_algo(o.algo), params,
                                          ecg::resolve_workers(o.common.workers));

    OutputDir out(o.common.out_dir, "cluster");
    out.note_input(o.input);
    out.write("partition.txt", [&](std::ostream& s) { ecg::write_partition(p, s); });
    json summary = partition_stats(g, p);
    summary["schema_version"] = kSchemaVersion;
    summary["algo"] = o.algo;
    summary["seed"] = o.common.seed;
    out.write("summary.json", [&](std::ostream& s) { s << summary.dump(2) << '\n'; });

    json params_json{{"input", o.input},     {"algo", o.algo},
                     {"one_based", o.one_based}, {"weighted", o.weighted},
                     {"ens_size", o.ens.k},  {"min_weight", o.ens.w_star}};
    out.finish(params_json, o.common.seed);
    std::cout << "clusters " << p.num_clusters() << " modularity "
              << format_real(ecg::modularity(g, p)) << '\n';
}

struct EcgOpts {
    CommonOpts common;
    EnsembleOpts ens;
    std::string input;
    std::string combine = "replace";
    bool one_based = false;
    bool weighted = false;
};

void run_ecg(const EcgOpts& o) {
    if (o.combine != "replace" && o.combine != "multiply")
        throw std::invalid_argument("--combine must be 'replace' or 'multiply'");
    ecg::Graph g = load_graph(o.input, o.one_based, o.weighted);
    warn_if_no_core(g);
    ecg::EcgParams params{o.ens.k, o.ens.w_star, o.common.seed};
    auto mode = o.combine == "multiply" ? ecg::WeightCombine::multiply
                                        : ecg::WeightCombine::replace;
    ecg::EcgResult result = ecg::ecg_cluster(g, params, mode,
                                             ecg::resolve_workers(o.common.workers));

    OutputDir out(o.common.out_dir, "ecg");
    out.note_input(o.input);
    out.write("partition.txt",
              [&](std::ostream& s) { ecg::write_partition(result.partition, s); });
    out.write("weights.txt",
              [&](std::ostream& s) { ecg::write_weighted_edges(g, result.weights, s); });
    json summary;
    summary["schema_version"] = kSchemaVersion;
    summary["k"] = params.k;
    summary["w_star"] = params.w_star;
    summary["seed"] = params.seed;
    summary["num_clusters"] = result.partition.num_clusters();
    summary["modularity"] = ecg::modularity(g, result.partition);
    summary["csi"] = result.csi;
    out.write("summary.json", [&](std::ostream& s) { s << summary.dump(2) << '\n'; });

    json params_json{{"input", o.input},    {"combine", o.combine},
                     {"one_based", o.one_based}, {"weighted", o.weighted},
                     {"ens_size", o.ens.k}, {"min_weight", o.ens.w_star}};
    out.finish(params_json, o.common.seed);
    std::cout << "clusters " << result.partition.num_clusters() << " modularity "
              << format_real(ecg::modularity(g, result.partition)) << " csi "
              << format_real(result.csi) << '\n';
}

struct CsiOpts {
    std::string weights;
    std::string out_dir;
};

void run_csi(const CsiOpts& o) {
    ecg::Graph g = load_graph(o.weights, false, true);
    ecg::EdgeWeightMap w;
    w.values.reserve(g.num_edges());
    for (const ecg::Edge& e : g.edges()) w.values.push_back(e.w);
    double value = ecg::csi(w);

    OutputDir out(o.out_dir, "csi");
    out.note_input(o.weights);
    json summary{{"schema_version", kSchemaVersion}, {"csi", value}, {"num_edges", g.num_edges()}};
    out.write("summary.json", [&](std::ostream& s) { s << summary.dump(2) << '\n'; });
    out.finish(json{{"weights", o.weights}}, std::nullopt);
    std::cout << "csi " << format_real(value) << '\n';
}

struct CompareOpts {
    std::string truth;
    std::string found;
    std::string graph;
    std::string out_dir;
    bool one_based = false;
    bool weighted = false;
};

void run_compare(const CompareOpts& o) {
    ecg::Partition truth = load_partition_file(o.truth, o.one_based);
    ecg::Partition found = load_partition_file(o.found, o.one_based);
    if (truth.size() != found.size())
        throw ecg::InputError("partition files cover different vertex counts (" +
                              std::to_string(truth.size()) + " vs " +
                              std::to_string(found.size()) + ")");

    json summary;
    summary["schema_version"] = kSchemaVersion;
    summary["ari"] = ecg::ari(found, truth);
    summary["count_ratio"] = ecg::count_ratio(found, truth);
    summary["agri"] = nullptr;

    OutputDir out(o.out_dir, "compare");
    out.note_input(o.truth);
    out.note_input(o.found);
    std::string agri_text = "nan";
    if (!o.graph.empty()) {
        ecg::Graph g = load_graph(o.graph, o.one_based, o.weighted);
        out.note_input(o.graph);
        if (g.num_vertices() > truth.size())
            throw ecg::InputError("partitions do not cover every graph vertex");
        // ground-truth files may list vertices that never appear in the
        // edge list; they become isolated vertices here
        if (g.num_vertices() < truth.size()) {
            summary["isolated_extension"] = truth.size() - g.num_vertices();
            g = ecg::Graph(static_cast<ecg::VertexId>(truth.size()), g.edges());
        }
        double a = ecg::agri(g, found, truth);
        summary["agri"] = a;
        agri_text = format_real(a);
    }
    out.write("comparison.json", [&](std::ostream& s) { s << summary.dump(2) << '\n'; });

    json params_json{{"truth", o.truth},
                     {"found", o.found},
                     {"graph", o.graph.empty() ? json(nullptr) : json(o.graph)},
                     {"one_based", o.one_based},
                     {"weighted", o.weighted}};
    out.finish(params_json, std::nullopt);
    std::cout << "ari " << format_real(summary["ari"].get<double>()) << " agri " << agri_text
              << " count_ratio " << format_real(summary["count_ratio"].get<double>()) << '\n';
}

struct StabilityOpts {
    CommonOpts common;
    EnsembleOpts ens;
    std::string input;
    std::string algo = "ecg";
    std::uint32_t runs = 2;
    bool one_based = false;
    bool weighted = false;
};

void run_stability(const StabilityOpts& o) {
    ecg::Graph g = load_graph(o.input, o.one_based, o.weighted);
    ecg::EcgParams params{o.ens.k, o.ens.w_star, 0};
    ecg::StabilityReport report =
        ecg::stability(g, parse_algo(o.algo), o.runs, o.common.seed, params,
                       ecg::resolve_workers(o.common.workers));

    OutputDir out(o.common.out_dir, "stability");
    out.note_input(o.input);
    json pairs = json::array();
    for (const ecg::PairScore& s : report.per_pair)
        pairs.push_back(json{{"run_a", s.run_a},
                             {"run_b", s.run_b},
                             {"ari", s.ari},
                             {"agri", s.agri}});
    json summary{{"schema_version", kSchemaVersion},
                 {"algo", o.algo},
                 {"runs", o.runs},
                 {"seed", o.common.seed},
                 {"ari_mean", report.ari_mean},
                 {"agri_mean", report.agri_mean},
                 {"per_pair", pairs}};
    out.write("stability.json", [&](std::ostream& s) { s << summary.dump(2) << '\n'; });

    json params_json{{"input", o.input},    {"algo", o.algo},
                     {"runs", o.runs},      {"one_based", o.one_based},
                     {"weighted", o.weighted}, {"ens_size", o.ens.k},
                     {"min_weight", o.ens.w_star}};
    out.finish(params_json, o.common.seed);
    std::cout << "ari_mean " << format_real(report.ari_mean) << " agri_mean "
              << format_real(report.agri_mean) << '\n';
}

// ---- generate -----------------------------------------------------------

void emit_labeled(OutputDir& out, const ecg::LabeledGraph& lg, bool weighted_edges) {
    out.write("edges.txt",
              [&](std::ostream& s) { ecg::write_edge_list(lg.graph, s, weighted_edges); });
    out.write("truth.txt", [&](std::ostream& s) { ecg::write_partition(lg.truth, s); });
    if (lg.anomalies)
        out.write("anomalies.txt", [&](std::ostream& s) { ecg::write_mask(*lg.anomalies, s); });
}

struct GenRingOpts {
    CommonOpts common;
    std::uint32_t cliques = 0;
    std::uint32_t size = 0;
    std::uint32_t between = 1;
};

void run_gen_ring(const GenRingOpts& o) {
    ecg::LabeledGraph lg = ecg::ring_of_cliques(o.cliques, o.size, o.between, o.common.seed);
    OutputDir out(o.common.out_dir, "generate ring");
    emit_labeled(out, lg, false);
    json summary{{"schema_version", kSchemaVersion},
                 {"family", "ring"},
                 {"n", lg.graph.num_vertices()},
                 {"num_edges", lg.graph.num_edges()},
                 {"clusters", lg.truth.num_clusters()}};
    out.write("summary.json", [&](std::ostream& s) { s << summary.dump(2) << '\n'; });
    out.finish(json{{"cliques", o.cliques}, {"size", o.size}, {"between", o.between}},
               o.common.seed);
    std::cout << "n " << lg.graph.num_vertices() << " edges " << lg.graph.num_edges() << '\n';
}

struct GenSbmOpts {
    CommonOpts common;
    std::string sizes;
    double p_in = 0.0;
    double p_out = 0.0;
};

void run_gen_sbm(const GenSbmOpts& o) {
    ecg::LabeledGraph lg =
        ecg::planted_partition(parse_sizes(o.sizes), o.p_in, o.p_out, o.common.seed);
    OutputDir out(o.common.out_dir, "generate sbm");
    emit_labeled(out, lg, false);
    json summary{{"schema_version", kSchemaVersion},
                 {"family", "sbm"},
                 {"n", lg.graph.num_vertices()},
                 {"num_edges", lg.graph.num_edges()},
                 {"clusters", lg.truth.num_clusters()}};
    out.write("summary.json", [&](std::ostream& s) { s << summary.dump(2) << '\n'; });
    out.finish(json{{"sizes", o.sizes}, {"pin", o.p_in}, {"pout", o.p_out}}, o.common.seed);
    std::cout << "n " << lg.graph.num_vertices() << " edges " << lg.graph.num_edges() << '\n';
}

struct GenNullOpts {
    CommonOpts common;
    std::string input;
    bool one_based = false;
};

void run_gen_null(const GenNullOpts& o) {
    ecg::Graph g = load_graph(o.input, o.one_based, false);
    ecg::NullModelGraph null = ecg::degree_preserving_random(g, o.common.seed);
    OutputDir out(o.common.out_dir, "generate null");
    out.note_input(o.input);
    out.write("edges.txt", [&](std::ostream& s) { ecg::write_edge_list(null.graph, s, false); });
    json summary{{"schema_version", kSchemaVersion},
                 {"family", "null"},
                 {"n", null.graph.num_vertices()},
                 {"num_edges", null.graph.num_edges()},
                 {"dropped_edges", null.dropped_edges}};
    out.write("summary.json", [&](std::ostream& s) { s << summary.dump(2) << '\n'; });
    out.finish(json{{"input", o.input}, {"one_based", o.one_based}}, o.common.seed);
    std::cout << "n " << null.graph.num_vertices() << " edges " << null.graph.num_edges()
              << " dropped " << null.dropped_edges << '\n';
}

struct GenAnomaliesOpts {
    CommonOpts common;
    std::string input;
    std::string truth;
    std::uint32_t count = 0;
    bool one_based = false;
};

void run_gen_anomalies(const GenAnomaliesOpts& o) {
    ecg::LabeledGraph lg;
    lg.graph = load_graph(o.input, o.one_based, false);
    lg.truth = o.truth.empty() ? ecg::Partition::single_cluster(lg.graph.num_vertices())
                               : load_partition_file(o.truth, o.one_based);
    if (lg.truth.size() != lg.graph.num_vertices())
        throw ecg::InputError("truth file does not match graph vertex count");
    ecg::LabeledGraph injected = ecg::inject_anomalies(lg, o.count, o.common.seed);

    OutputDir out(o.common.out_dir, "generate anomalies");
    out.note_input(o.input);
    if (!o.truth.empty()) out.note_input(o.truth);
    emit_labeled(out, injected, false);
    json summary{{"schema_version", kSchemaVersion},
                 {"family", "anomalies"},
                 {"n", injected.graph.num_vertices()},
                 {"num_edges", injected.graph.num_edges()},
                 {"anomalies", o.count}};
    out.write("summary.json", [&](std::ostream& s) { s << summary.dump(2) << '\n'; });
    out.finish(json{{"input", o.input},
                    {"truth", o.truth.empty() ? json(nullptr) : json(o.truth)},
                    {"count", o.count},
                    {"one_based", o.one_based}},
               o.common.seed);
    std::cout << "n " << injected.graph.num_vertices() << " edges "
              << injected.graph.num_edges() << " anomalies " << o.count << '\n';
}

// ---- dimmer --------------------------------------------------------------

struct DimmerOpts {
    std::string input;
    std::string weights;
    std::string partition;
    std::string out_dir;
    std::uint64_t seed_vertex = 0;
    double theta = 0.0;
    std::uint32_t steps = 11;
    bool profile = false;
    bool one_based = false;
    bool weighted = false;
};

// the weights file is itself an edge list; its edge set must match the
// graph exactly so values can be aligned by index
ecg::EdgeWeightMap load_weight_map(const ecg::Graph& g, const std::string& path) {
    std::ifstream in = open_input(path);
    ecg::Graph wg = ecg::load_edge_list(in, ecg::Indexing::zero_based, true);
    if (wg.num_edges() != g.num_edges())
        throw ecg::InputError("weights file has " + std::to_string(wg.num_edges()) +
                              " edges, graph has " + std::to_string(g.num_edges()));
    ecg::EdgeWeightMap w;
    w.values.reserve(g.num_edges());
    for (ecg::EdgeId e = 0; e < g.num_edges(); ++e) {
        const ecg::Edge& a = g.edge(e);
        const ecg::Edge& b = wg.edge(e);
        if (a.u != b.u || a.v != b.v)
            throw ecg::InputError("weights file edge set does not match the graph");
        w.values.push_back(b.w);
    }
    return w;
}

void run_dimmer(const DimmerOpts& o) {
    ecg::Graph g = load_graph(o.input, o.one_based, o.weighted);
    ecg::EdgeWeightMap w = load_weight_map(g, o.weights);
    ecg::Partition p = load_partition_file(o.partition, o.one_based);
    if (p.size() != g.num_vertices())
        throw ecg::InputError("partition file does not match graph vertex count");
    if (o.seed_vertex >= g.num_vertices())
        throw std::invalid_argument("seed vertex out of range");
    auto seed_vertex = static_cast<ecg::VertexId>(o.seed_vertex);

    ecg::Subgraph sub = ecg::dimmer(g, w, p, seed_vertex, o.theta);
    ecg::EdgeWeightMap sub_w = ecg::subgraph_weights(g, w, sub);

    OutputDir out(o.out_dir, "dimmer");
    out.note_input(o.input);
    out.note_input(o.weights);
    out.note_input(o.partition);
    out.write("edges.txt", [&](std::ostream& s) {
        for (ecg::EdgeId e = 0; e < sub.graph.num_edges(); ++e) {
            const ecg::Edge& ed = sub.graph.edge(e);
            s << sub.orig_ids[ed.u] << ' ' << sub.orig_ids[ed.v] << ' '
              << format_real(sub_w.values[e]) << '\n';
        }
    });
    ecg::VertexId local_seed = 0;
    for (ecg::VertexId v = 0; v < sub.orig_ids.size(); ++v)
        if (sub.orig_ids[v] == seed_vertex) local_seed = v;
    out.write("subgraph.dot", [&](std::ostream& s) {
        ecg::write_dot(sub.graph, sub_w, local_seed, s, &sub.orig_ids);
    });
    json summary{{"schema_version", kSchemaVersion},
                 {"seed_vertex", o.seed_vertex},
                 {"theta", o.theta},
                 {"vertices", sub.graph.num_vertices()},
                 {"num_edges", sub.graph.num_edges()}};
    if (o.profile) {
        ecg::DimmerProfile profile = ecg::dimmer_profile(g, w, p, seed_vertex, o.steps);
        out.write("profile.tsv", [&](std::ostream& s) {
            s << "threshold\tvertices\n";
            for (std::size_t i = 0; i < profile.thresholds.size(); ++i) {
                char buf[64];
                std::snprintf(buf, sizeof(buf), "%.17g", profile.thresholds[i]);
                s << buf << '\t' << profile.sizes[i] << '\n';
            }
        });
    }
    out.write("summary.json", [&](std::ostream& s) { s << summary.dump(2) << '\n'; });
    out.finish(json{{"input", o.input},
                    {"weights", o.weights},
                    {"partition", o.partition},
                    {"seed_vertex", o.seed_vertex},
                    {"theta", o.theta},
                    {"profile", o.profile},
                    {"steps", o.steps},
                    {"one_based", o.one_based},
                    {"weighted", o.weighted}},
               std::nullopt);
    std::cout << "vertices " << sub.graph.num_vertices() << " edges " << sub.graph.num_edges()
              << '\n';
}

// ---- cada ----------------------------------------------------------------

struct CadaOpts {
    CommonOpts common;
    EnsembleOpts ens;
    std::string input;
    std::string anomalies;
    std::string algo = "ecg";
    bool one_based = false;
    bool weighted = false;
};

void run_cada(const CadaOpts& o) {
    ecg::Graph g = load_graph(o.input, o.one_based, o.weighted);
    ecg::EcgParams params{o.ens.k, o.ens.w_star, o.common.seed};
    ecg::Partition p = ecg::run_algorithm(g, parse_algo(o.algo), params,
                                          ecg::resolve_workers(o.common.workers));
    ecg::AnomalyScores scores = ecg::cada_scores(g, p);

    OutputDir out(o.common.out_dir, "cada");
    out.note_input(o.input);
    json summary{{"schema_version", kSchemaVersion},
                 {"algo", o.algo},
                 {"seed", o.common.seed},
                 {"num_vertices", g.num_vertices()}};
    std::string auc_text;
    if (!o.anomalies.empty()) {
        std::vector<std::uint8_t> mask = load_mask_file(o.anomalies, o.one_based);
        out.note_input(o.anomalies);
        if (mask.size() != g.num_vertices())
            throw ecg::InputError("anomaly mask does not match graph vertex count");
        double auc = ecg::roc_auc(scores.scores, mask);
        summary["auc"] = auc;
        auc_text = " auc " + format_real(auc);
    }
    out.write("scores.tsv", [&](std::ostream& s) {
        s << "vertex\tscore\tundefined\n";
        for (ecg::VertexId v = 0; v < g.num_vertices(); ++v)
            s << v << '\t' << format_real(scores.scores[v]) << '\t'
              << static_cast<int>(scores.undefined[v]) << '\n';
    });
    out.write("summary.json", [&](std::ostream& s) { s << summary.dump(2) << '\n'; });
    out.finish(json{{"input", o.input},
                    {"anomalies", o.anomalies.empty() ? json(nullptr) : json(o.anomalies)},
                    {"algo", o.algo},
                    {"one_based", o.one_based},
                    {"weighted", o.weighted},
                    {"ens_size", o.ens.k},
                    {"min_weight", o.ens.w_star}},
               o.common.seed);
    std::cout << "scored " << g.num_vertices() << auc_text << '\n';
}

// ---- bench ----------------------------------------------------------------

struct BenchCell {
    std::size_t param_idx = 0;
    std::uint32_t seed_idx = 0;
    ecg::Algorithm algo = ecg::Algorithm::ml;
    std::uint64_t graph_seed = 0;
    std::uint64_t algo_seed = 0;
};

struct BenchRingOpts {
    CommonOpts common;
    EnsembleOpts ens;
    std::string cliques;
    std::uint32_t size = 5;
    std::uint32_t between = 1;
    std::string algos = "ml,ecg";
    std::uint32_t seeds = 10;
};

struct BenchSbmOpts {
    CommonOpts common;
    EnsembleOpts ens;
    std::string sizes;
    double p_in = 0.2;
    std::string p_out;
    std::string algos = "ml,ecg";
    std::uint32_t seeds = 10;
};

std::vector<ecg::Algorithm> parse_algo_list(const std::string& spec) {
    std::vector<ecg::Algorithm> algos;
    for (const std::string& tok : split(spec, ',')) algos.push_back(parse_algo(tok));
    if (algos.empty()) throw std::invalid_argument("empty algorithm list");
    return algos;
}

// one row per (parameter value, seed, algorithm); cells run concurrently
// but rows are assembled in grid order, so the file never depends on
// scheduling
void run_bench(const CommonOpts& common, const EnsembleOpts& ens, const std::string& family,
               const std::vector<std::string>& param_texts,
               const std::function<ecg::LabeledGraph(std::size_t, std::uint64_t)>& make_graph,
               const std::vector<ecg::Algorithm>& algos, std::uint32_t seeds,
               const json& params_json) {
    std::vector<BenchCell> cells;
    for (std::size_t pi = 0; pi < param_texts.size(); ++pi) {
        for (std::uint32_t s = 0; s < seeds; ++s) {
            std::uint64_t graph_seed = ecg::mix_seed(common.seed, pi * seeds + s);
            for (std::size_t a = 0; a < algos.size(); ++a) {
                BenchCell cell;
                cell.param_idx = pi;
                cell.seed_idx = s;
                cell.algo = algos[a];
                cell.graph_seed = graph_seed;
                cell.algo_seed = ecg::mix_seed(graph_seed, a + 1);
                cells.push_back(cell);
            }
        }
    }

    std::vector<std::string> rows(cells.size());
    ecg::parallel_for(cells.size(), ecg::resolve_workers(common.workers), [&](std::size_t i) {
        const BenchCell& cell = cells[i];
        ecg::LabeledGraph lg = make_graph(cell.param_idx, cell.graph_seed);
        ecg::EcgParams params{ens.k, ens.w_star, cell.algo_seed};
        double csi_value = std::numeric_limits<double>::quiet_NaN();
        ecg::Partition found;
        if (cell.algo == ecg::Algorithm::ecg) {
            ecg::EcgResult r = ecg::ecg_cluster(lg.graph, params);
            found = std::move(r.partition);
            csi_value = r.csi;
        } else {
            found = ecg::run_algorithm(lg.graph, cell.algo, params);
        }
        ecg::ComparisonReport rep = ecg::compare_partitions(lg.graph, found, lg.truth);
        std::ostringstream row;
        row << family << '\t' << param_texts[cell.param_idx] << '\t' << cell.seed_idx << '\t'
            << algo_name(cell.algo) << '\t' << found.num_clusters() << '\t'
            << format_real(rep.count_ratio) << '\t' << format_real(rep.ari) << '\t'
            << format_real(rep.agri) << '\t'
            << format_real(ecg::modularity(lg.graph, found)) << '\t'
            << (std::isnan(csi_value) ? "nan" : format_real(csi_value));
        rows[i] = row.str();
    });

    OutputDir out(common.out_dir, "bench " + family);
    out.write("bench.tsv", [&](std::ostream& s) {
        s << "family\tparam\tseed_idx\talgo\tclusters\tcount_ratio\tari\tagri\tmodularity\tcsi\n";
        for (const std::string& row : rows) s << row << '\n';
    });
    out.finish(params_json, common.seed);
    std::cout << "rows " << rows.size() << '\n';
}

void run_bench_ring(const BenchRingOpts& o) {
    std::vector<std::uint32_t> grid = parse_uint_grid(o.cliques);
    std::vector<std::string> texts;
    for (std::uint32_t l : grid) texts.push_back(std::to_string(l));
    run_bench(o.common, o.ens, "ring", texts,
              [&](std::size_t pi, std::uint64_t seed) {
                  return ecg::ring_of_cliques(grid[pi], o.size, o.between, seed);
              },
              parse_algo_list(o.algos), o.seeds,
              json{{"cliques", o.cliques},
                   {"size", o.size},
                   {"between", o.between},
                   {"algos", o.algos},
                   {"seeds", o.seeds},
                   {"ens_size", o.ens.k},
                   {"min_weight", o.ens.w_star}});
}

void run_bench_sbm(const BenchSbmOpts& o) {
    std::vector<std::uint32_t> sizes = parse_sizes(o.sizes);
    std::vector<double> grid = parse_real_grid(o.p_out);
    std::vector<std::string> texts;
    for (double p : grid) texts.push_back(format_real(p));
    run_bench(o.common, o.ens, "sbm", texts,
              [&](std::size_t pi, std::uint64_t seed) {
                  return ecg::planted_partition(sizes, o.p_in, grid[pi], seed);
              },
              parse_algo_list(o.algos), o.seeds,
              json{{"sizes", o.sizes},
                   {"pin", o.p_in},
                   {"pout", o.p_out},
                   {"algos", o.algos},
                   {"seeds", o.seeds},
                   {"ens_size", o.ens.k},
                   {"min_weight", o.ens.w_star}});
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"community detection via consensus of randomized partitions"};
    app.require_subcommand(1);

    ClusterOpts cluster_opts;
    auto* cluster = app.add_subcommand("cluster", "run one clustering algorithm");
    cluster->add_option("--input", cluster_opts.input, "edge list file")->required();
    cluster->add_option("--algo", cluster_opts.algo, "ml | level1 | ecg");
    cluster->add_flag("--one-based", cluster_opts.one_based, "input ids start at 1");
    cluster->add_flag("--weighted", cluster_opts.weighted, "read the third column as weight");
    add_ensemble(cluster, cluster_opts.ens);
    add_common(cluster, cluster_opts.common, true);
    cluster->final_callback([&] { run_cluster(cluster_opts); });

    EcgOpts ecg_opts;
    auto* ecg_cmd = app.add_subcommand("ecg", "consensus clustering with edge weights and CSI");
    ecg_cmd->add_option("--input", ecg_opts.input, "edge list file")->required();
    ecg_cmd->add_option("--combine", ecg_opts.combine,
                        "integration weights: replace | multiply");
    ecg_cmd->add_flag("--one-based", ecg_opts.one_based, "input ids start at 1");
    ecg_cmd->add_flag("--weighted", ecg_opts.weighted, "read the third column as weight");
    add_ensemble(ecg_cmd, ecg_opts.ens);
    add_common(ecg_cmd, ecg_opts.common, true);
    ecg_cmd->final_callback([&] { run_ecg(ecg_opts); });

    CsiOpts csi_opts;
    auto* csi_cmd = app.add_subcommand("csi", "cluster strength index of a weighted edge list");
    csi_cmd->add_option("--weights", csi_opts.weights, "weighted edge list")->required();
    csi_cmd->add_option("--out", csi_opts.out_dir, "output directory")->required();
    csi_cmd->final_callback([&] { run_csi(csi_opts); });

    CompareOpts compare_opts;
    auto* compare = app.add_subcommand("compare", "score a partition against ground truth");
    compare->add_option("--truth", compare_opts.truth, "truth partition file")->required();
    compare->add_option("--found", compare_opts.found, "computed partition file")->required();
    compare->add_option("--graph", compare_opts.graph, "edge list for the graph-aware index");
    compare->add_option("--out", compare_opts.out_dir, "output directory")->required();
    compare->add_flag("--one-based", compare_opts.one_based, "input ids start at 1");
    compare->add_flag("--weighted", compare_opts.weighted, "read the third column as weight");
    compare->final_callback([&] { run_compare(compare_opts); });

    StabilityOpts stability_opts;
    auto* stability = app.add_subcommand("stability", "agreement between repeated runs");
    stability->add_option("--input", stability_opts.input, "edge list file")->required();
    stability->add_option("--algo", stability_opts.algo, "ml | level1 | ecg");
    stability->add_option("--runs", stability_opts.runs, "number of runs (>= 2)");
    stability->add_flag("--one-based", stability_opts.one_based, "input ids start at 1");
    stability->add_flag("--weighted", stability_opts.weighted, "read the third column as weight");
    add_ensemble(stability, stability_opts.ens);
    add_common(stability, stability_opts.common, true);
    stability->final_callback([&] { run_stability(stability_opts); });

    auto* generate = app.add_subcommand("generate", "synthetic graphs with ground truth");
    generate->require_subcommand(1);

    GenRingOpts ring_opts;
    auto* gen_ring = generate->add_subcommand("ring", "ring of cliques");
    gen_ring->add_option("--cliques", ring_opts.cliques, "number of cliques (>= 3)")->required();
    gen_ring->add_option("--size", ring_opts.size, "vertices per clique (>= 2)")->required();
    gen_ring->add_option("--between", ring_opts.between, "edges between consecutive cliques");
    add_common(gen_ring, ring_opts.common, true);
    gen_ring->final_callback([&] { run_gen_ring(ring_opts); });

    GenSbmOpts sbm_opts;
    auto* gen_sbm = generate->add_subcommand("sbm", "planted-partition graph");
    gen_sbm->add_option("--sizes", sbm_opts.sizes, "block sizes, e.g. 10x100 or 50,30,20")
        ->required();
    gen_sbm->add_option("--pin", sbm_opts.p_in, "intra-block edge probability")->required();
    gen_sbm->add_option("--pout", sbm_opts.p_out, "inter-block edge probability")->required();
    add_common(gen_sbm, sbm_opts.common, true);
    gen_sbm->final_callback([&] { run_gen_sbm(sbm_opts); });

    GenNullOpts null_opts;
    auto* gen_null = generate->add_subcommand("null", "degree-preserving random rewiring");
    gen_null->add_option("--input", null_opts.input, "edge list file")->required();
    gen_null->add_flag("--one-based", null_opts.one_based, "input ids start at 1");
    add_common(gen_null, null_opts.common, true);
    gen_null->final_callback([&] { run_gen_null(null_opts); });

    GenAnomaliesOpts anomalies_opts;
    auto* gen_anomalies = generate->add_subcommand("anomalies", "inject anomalous vertices");
    gen_anomalies->add_option("--input", anomalies_opts.input, "edge list file")->required();
    gen_anomalies->add_option("--truth", anomalies_opts.truth, "existing truth partition file");
    gen_anomalies->add_option("--count", anomalies_opts.count, "vertices to add")->required();
    gen_anomalies->add_flag("--one-based", anomalies_opts.one_based, "input ids start at 1");
    add_common(gen_anomalies, anomalies_opts.common, true);
    gen_anomalies->final_callback([&] { run_gen_anomalies(anomalies_opts); });

    DimmerOpts dimmer_opts;
    auto* dimmer = app.add_subcommand("dimmer", "seed-centred sub-graph at a weight threshold");
    dimmer->add_option("--input", dimmer_opts.input, "edge list file")->required();
    dimmer->add_option("--weights", dimmer_opts.weights, "consensus weights edge list")
        ->required();
    dimmer->add_option("--partition", dimmer_opts.partition, "partition file")->required();
    dimmer->add_option("--seed-vertex", dimmer_opts.seed_vertex, "vertex to centre on")
        ->required();
    dimmer->add_option("--theta", dimmer_opts.theta, "weight threshold");
    dimmer->add_flag("--profile", dimmer_opts.profile, "also sweep thresholds");
    dimmer->add_option("--steps", dimmer_opts.steps, "evenly spaced thresholds in the sweep");
    dimmer->add_option("--out", dimmer_opts.out_dir, "output directory")->required();
    dimmer->add_flag("--one-based", dimmer_opts.one_based, "input ids start at 1");
    dimmer->add_flag("--weighted", dimmer_opts.weighted, "read the third column as weight");
    dimmer->final_callback([&] { run_dimmer(dimmer_opts); });

    CadaOpts cada_opts;
    auto* cada = app.add_subcommand("cada", "community-aware anomaly scores");
    cada->add_option("--input", cada_opts.input, "edge list file")->required();
    cada->add_option("--anomalies", cada_opts.anomalies, "anomaly mask for AUC evaluation");
    cada->add_option("--algo", cada_opts.algo, "ml | level1 | ecg");
    cada->add_flag("--one-based", cada_opts.one_based, "input ids start at 1");
    cada->add_flag("--weighted", cada_opts.weighted, "read the third column as weight");
    add_ensemble(cada, cada_opts.ens);
    add_common(cada, cada_opts.common, true);
    cada->final_callback([&] { run_cada(cada_opts); });

    auto* bench = app.add_subcommand("bench", "parameter sweeps, one TSV row per run");
    bench->require_subcommand(1);

    BenchRingOpts bench_ring_opts;
    auto* bench_ring = bench->add_subcommand("ring", "sweep the number of cliques");
    bench_ring->add_option("--cliques", bench_ring_opts.cliques,
                           "grid: A..B, A..B:STEP or comma list")->required();
    bench_ring->add_option("--size", bench_ring_opts.size, "vertices per clique");
    bench_ring->add_option("--between", bench_ring_opts.between,
                           "edges between consecutive cliques");
    bench_ring->add_option("--algos", bench_ring_opts.algos, "comma list of algorithms");
    bench_ring->add_option("--seeds", bench_ring_opts.seeds, "runs per grid point");
    add_ensemble(bench_ring, bench_ring_opts.ens);
    add_common(bench_ring, bench_ring_opts.common, true);
    bench_ring->final_callback([&] { run_bench_ring(bench_ring_opts); });

    BenchSbmOpts bench_sbm_opts;
    auto* bench_sbm = bench->add_subcommand("sbm", "sweep the inter-block probability");
    bench_sbm->add_option("--sizes", bench_sbm_opts.sizes, "block sizes")->required();
    bench_sbm->add_option("--pin", bench_sbm_opts.p_in, "intra-block edge probability");
    bench_sbm->add_option("--pout", bench_sbm_opts.p_out,
                          "grid: A..B:STEP or comma list")->required();
    bench_sbm->add_option("--algos", bench_sbm_opts.algos, "comma list of algorithms");
    bench_sbm->add_option("--seeds", bench_sbm_opts.seeds, "runs per grid point");
    add_ensemble(bench_sbm, bench_sbm_opts.ens);
    add_common(bench_sbm, bench_sbm_opts.common, true);
    bench_sbm->final_callback([&] { run_bench_sbm(bench_sbm_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ecg::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
