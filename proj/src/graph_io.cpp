#include "gpe/graph_io.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "gpe/errors.hpp"

namespace gpe {

namespace {

/// Strips comments/whitespace; returns false for lines with no content.
bool content_of(const std::string& raw, std::string& out) {
    std::string s = raw.substr(0, raw.find('#'));
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return false;
    std::size_t e = s.find_last_not_of(" \t\r");
    out = s.substr(b, e - b + 1);
    return true;
}

int parse_int(std::istringstream& in, int line, const char* what) {
    long long v = 0;
    if (!(in >> v) || v < 0 || v > 1'000'000'000)
        throw io_error(std::string("expected ") + what, line);
    return static_cast<int>(v);
}

void expect_end(std::istringstream& in, int line) {
    std::string rest;
    if (in >> rest) throw io_error("trailing tokens: " + rest, line);
}

} // namespace

Graph load_graph(std::istream& in, bool allow_disconnected) {
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen_edges;
    std::vector<BitLabel> labels;
    std::vector<char> has_label;

    std::string raw, line;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!content_of(raw, line)) continue;
        std::istringstream fields(line);
        std::string kind;
        fields >> kind;

        if (kind == "p") {
            if (n >= 0) throw io_error("duplicate header", lineno);
            n = parse_int(fields, lineno, "vertex count");
            m = parse_int(fields, lineno, "edge count");
            expect_end(fields, lineno);
            if (n < 1) throw io_error("vertex count must be >= 1", lineno);
            labels.resize(static_cast<std::size_t>(n));
            has_label.assign(static_cast<std::size_t>(n), 0);
        } else if (kind == "l") {
            if (n < 0) throw io_error("label before header", lineno);
            int v = parse_int(fields, lineno, "vertex");
            std::string bits;
            if (!(fields >> bits)) throw io_error("expected bitstring", lineno);
            expect_end(fields, lineno);
            if (v >= n) throw io_error("label vertex out of range", lineno);
            if (has_label[static_cast<std::size_t>(v)])
                throw io_error("duplicate label for vertex " + std::to_string(v), lineno);
            try {
                labels[static_cast<std::size_t>(v)] = BitLabel::from_string(bits);
            } catch (const precondition_error& e) {
                throw io_error(e.what(), lineno);
            }
            has_label[static_cast<std::size_t>(v)] = 1;
        } else if (kind == "e") {
            if (n < 0) throw io_error("edge before header", lineno);
            int u = parse_int(fields, lineno, "endpoint");
            int v = parse_int(fields, lineno, "endpoint");
            expect_end(fields, lineno);
            if (u >= n || v >= n) throw io_error("endpoint out of range", lineno);
            if (u == v) throw io_error("loop at vertex " + std::to_string(u), lineno);
            auto e = std::minmax(u, v);
            if (!seen_edges.insert(e).second)
                throw io_error("duplicate edge " + std::to_string(e.first) + " " +
                                   std::to_string(e.second),
                               lineno);
            edges.emplace_back(e.first, e.second);
        } else {
            throw io_error("unknown directive: " + kind, lineno);
        }
    }

    if (n < 0) throw io_error("missing header line `p <N> <M>`");
    if (static_cast<int>(edges.size()) != m)
        throw io_error("header announces " + std::to_string(m) + " edges, file has " +
                       std::to_string(edges.size()));

    int labeled = 0;
    for (char h : has_label) labeled += h;
    if (labeled != 0 && labeled != n)
        throw io_error("labels must cover no vertex or every vertex");
    if (labeled == 0) labels.clear();

    try {
        return Graph(n, std::move(edges), std::move(labels), allow_disconnected);
    } catch (const precondition_error& e) {
        throw io_error(e.what());
    }
}

void save_graph(const Graph& g, std::ostream& out) {
    out << "p " << g.order() << " " << g.size() << "\n";
    if (g.labeled())
        for (int v = 0; v < g.order(); ++v)
            out << "l " << v << " " << g.label(v).to_string() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

EdgeSetSpec parse_edge_set(std::istream& in) {
    EdgeSetSpec spec;
    std::string raw, line;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!content_of(raw, line)) continue;
        std::istringstream fields(line);
        std::string kind;
        fields >> kind;
        if (kind == "e") {
            int u = parse_int(fields, lineno, "endpoint");
            int v = parse_int(fields, lineno, "endpoint");
            expect_end(fields, lineno);
            spec.edges.emplace_back(u, v);
        } else if (kind == "class") {
            int i = parse_int(fields, lineno, "class index");
            expect_end(fields, lineno);
            if (i < 1) throw io_error("class index is 1-based", lineno);
            spec.class_ids.push_back(i);
        } else {
            throw io_error("unknown directive: " + kind, lineno);
        }
    }
    return spec;
}

} // namespace gpe
