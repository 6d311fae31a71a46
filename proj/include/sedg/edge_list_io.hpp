#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sedg/signed_graph.hpp"

namespace sedg {

/// Malformed edge-list input (bad header, token count, values, or a graph
/// invariant violated by file content).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge-list text format:
//   first non-comment line:  n m
//   then m lines:            u v w      (w is 1 or -1; +1 accepted on input)
// Lines starting with '#' are ignored. Vertices are 0-based. LF endings.

inline SignedGraph read_edge_list(std::istream& in) {
    auto next_data_line = [&in](std::string& line) -> bool {
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::size_t pos = line.find_first_not_of(" \t");
            if (pos == std::string::npos) continue;
            if (line[pos] == '#') continue;
            return true;
        }
        return false;
    };

    std::string line;
    if (!next_data_line(line)) throw ParseError("edge list: missing header line");

    long long n = 0, m = 0;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            throw ParseError("edge list: header must be 'n m', got: " + line);
        if (n < 0 || m < 0) throw ParseError("edge list: negative count in header");
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(line))
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        std::istringstream es(line);
        long long u = 0, v = 0;
        std::string wtok, extra;
        if (!(es >> u >> v >> wtok) || (es >> extra))
            throw ParseError("edge list: bad edge line: " + line);
        int w = 0;
        if (wtok == "1" || wtok == "+1")
            w = 1;
        else if (wtok == "-1")
            w = -1;
        else
            throw ParseError("edge list: weight must be +1 or -1, got: " + wtok);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge list: endpoint out of range on line: " + line);
        edges.push_back(Edge{static_cast<int>(u), static_cast<int>(v), w});
    }

    try {
        return SignedGraph(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(std::string("edge list: ") + ex.what());
    }
}

inline void write_edge_list(std::ostream& out, const SignedGraph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

inline std::string to_edge_list(const SignedGraph& g) {
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

inline SignedGraph parse_edge_list(const std::string& text) {
    std::istringstream is(text);
    return read_edge_list(is);
}

inline SignedGraph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return read_edge_list(in);
}

inline void save_edge_list(const std::string& path, const SignedGraph& g) {
    std::ofstream out(path, std::ios::binary);  // keep LF endings everywhere
    if (!out) throw ParseError("cannot open file for writing: " + path);
    write_edge_list(out, g);
    if (!out) throw ParseError("write failed: " + path);
}

}  // namespace sedg
