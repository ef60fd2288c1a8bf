#include "ecg/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

namespace ecg {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) toks.push_back(line.substr(start, i - start));
    }
    return toks;
}

std::uint64_t parse_u64(std::string_view tok, std::size_t line_no, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw InputError("line " + std::to_string(line_no) + ": malformed " + what + " '" +
                         std::string(tok) + "'");
    return value;
}

double parse_double(std::string_view tok, std::size_t line_no, const char* what) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw InputError("line " + std::to_string(line_no) + ": malformed " + what + " '" +
                         std::string(tok) + "'");
    return value;
}

VertexId normalize_id(std::uint64_t raw, Indexing indexing, std::size_t line_no) {
    if (indexing == Indexing::one_based) {
        if (raw == 0)
            throw InputError("line " + std::to_string(line_no) +
                             ": vertex id 0 in one-based input");
        raw -= 1;
    }
    if (raw > 0xfffffffeULL)
        throw InputError("line " + std::to_string(line_no) + ": vertex id too large");
    return static_cast<VertexId>(raw);
}

bool is_comment_or_blank(std::string_view line) {
    for (char c : line) {
        if (c == ' ' || c == '\t') continue;
        return c == '#' || c == '%';
    }
    return true;
}

std::string chomp(std::string line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    return line;
}

} // namespace

Graph load_edge_list(std::istream& in, Indexing indexing, bool weighted) {
    std::vector<Edge> edges;
    VertexId max_id = 0;
    bool any_vertex = false;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = chomp(std::move(raw));
        if (is_comment_or_blank(line)) continue;
        auto toks = split_ws(line);
        if (toks.size() < 2 || toks.size() > 3)
            throw InputError("line " + std::to_string(line_no) +
                             ": expected 'u v' or 'u v w'");
        VertexId u = normalize_id(parse_u64(toks[0], line_no, "vertex id"), indexing, line_no);
        VertexId v = normalize_id(parse_u64(toks[1], line_no, "vertex id"), indexing, line_no);
        if (u == v)
            throw InputError("line " + std::to_string(line_no) + ": self-loop on vertex " +
                             std::string(toks[0]));
        double w = 1.0;
        if (weighted && toks.size() == 3) {
            w = parse_double(toks[2], line_no, "weight");
            if (!(w > 0.0))
                throw InputError("line " + std::to_string(line_no) +
                                 ": non-positive edge weight");
        }
        edges.push_back({u, v, w});
        max_id = std::max({max_id, u, v});
        any_vertex = true;
    }
    VertexId n = any_vertex ? max_id + 1 : 0;
    return Graph(n, std::move(edges));
}

Partition load_partition(std::istream& in, Indexing indexing) {
    std::vector<std::pair<VertexId, std::uint32_t>> rows;
    VertexId max_id = 0;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = chomp(std::move(raw));
        if (is_comment_or_blank(line)) continue;
        auto toks = split_ws(line);
        if (toks.size() != 2)
            throw InputError("line " + std::to_string(line_no) + ": expected 'vertex cluster'");
        VertexId v = normalize_id(parse_u64(toks[0], line_no, "vertex id"), indexing, line_no);
        std::uint64_t c = parse_u64(toks[1], line_no, "cluster label");
        if (c > 0xffffffffULL)
            throw InputError("line " + std::to_string(line_no) + ": cluster label too large");
        rows.emplace_back(v, static_cast<std::uint32_t>(c));
        max_id = std::max(max_id, v);
    }
    if (rows.empty()) return Partition();
    std::vector<std::uint32_t> labels(static_cast<std::size_t>(max_id) + 1);
    std::vector<std::uint8_t> seen(labels.size(), 0);
    for (const auto& [v, c] : rows) {
        if (seen[v]) throw InputError("vertex " + std::to_string(v) + " assigned twice");
        seen[v] = 1;
        labels[v] = c;
    }
    for (VertexId v = 0; v < labels.size(); ++v)
        if (!seen[v]) throw InputError("vertex " + std::to_string(v) + " missing from partition");
    return Partition::from_labels(labels);
}

std::vector<std::uint8_t> load_mask(std::istream& in, Indexing indexing) {
    std::vector<std::pair<VertexId, std::uint8_t>> rows;
    VertexId max_id = 0;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = chomp(std::move(raw));
        if (is_comment_or_blank(line)) continue;
        auto toks = split_ws(line);
        if (toks.size() != 2)
            throw InputError("line " + std::to_string(line_no) + ": expected 'vertex flag'");
        VertexId v = normalize_id(parse_u64(toks[0], line_no, "vertex id"), indexing, line_no);
        std::uint64_t f = parse_u64(toks[1], line_no, "flag");
        if (f > 1)
            throw InputError("line " + std::to_string(line_no) + ": flag must be 0 or 1");
        rows.emplace_back(v, static_cast<std::uint8_t>(f));
        max_id = std::max(max_id, v);
    }
    if (rows.empty()) return {};
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(max_id) + 1, 0);
    std::vector<std::uint8_t> seen(mask.size(), 0);
    for (const auto& [v, f] : rows) {
        if (seen[v]) throw InputError("vertex " + std::to_string(v) + " assigned twice");
        seen[v] = 1;
        mask[v] = f;
    }
    for (VertexId v = 0; v < mask.size(); ++v)
        if (!seen[v]) throw InputError("vertex " + std::to_string(v) + " missing from mask");
    return mask;
}

void write_partition(const Partition& p, std::ostream& out) {
    for (std::size_t v = 0; v < p.size(); ++v)
        out << v << ' ' << p.label(static_cast<VertexId>(v)) << '\n';
}

void write_mask(const std::vector<std::uint8_t>& mask, std::ostream& out) {
    for (std::size_t v = 0; v < mask.size(); ++v)
        out << v << ' ' << static_cast<int>(mask[v]) << '\n';
}

namespace {

void write_real(std::ostream& out, double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    out << buf;
}

} // namespace

void write_edge_list(const Graph& g, std::ostream& out, bool weighted) {
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v;
        if (weighted) {
            out << ' ';
            write_real(out, e.w);
        }
        out << '\n';
    }
}

void write_weighted_edges(const Graph& g, const EdgeWeightMap& w, std::ostream& out) {
    if (w.values.size() != g.num_edges())
        throw std::invalid_argument("weight map does not match edge count");
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        out << ed.u << ' ' << ed.v << ' ';
        write_real(out, w.values[e]);
        out << '\n';
    }
}

void write_dot(const Graph& g, const EdgeWeightMap& w, std::optional<VertexId> highlight,
               std::ostream& out, const std::vector<VertexId>* names) {
    if (w.values.size() != g.num_edges())
        throw std::invalid_argument("weight map does not match edge count");
    if (highlight && *highlight >= g.num_vertices())
        throw std::invalid_argument("highlight vertex out of range");
    if (names && names->size() != g.num_vertices())
        throw std::invalid_argument("name table does not match vertex count");
    auto name = [&](VertexId v) { return names ? (*names)[v] : v; };
    out << "graph ecg {\n";
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        out << "  " << name(v);
        if (highlight && *highlight == v) out << " [shape=doublecircle]";
        out << ";\n";
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        char buf[96];
        std::snprintf(buf, sizeof(buf), " [weight=%.6f, penwidth=%.3f]", w.values[e],
                      4.0 * w.values[e]);
        out << "  " << name(ed.u) << " -- " << name(ed.v) << buf << ";\n";
    }
    out << "}\n";
}

} // namespace ecg
