#pragma once

#include <charconv>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grif/graph.hpp"
#include "grif/sat.hpp"

namespace grif {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <class Int>
Int parse_int(std::string_view tok, std::size_t line_no, const char* what) {
    Int value{};
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" +
                         std::string(tok) + "'");
    return value;
}

} // namespace detail

// DIMACS graph: "c ..." comments, a "p edge <n> <m>" header, then
// "e <u> <v>" lines with 1-based endpoints.
inline Graph parse_dimacs_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t n = 0, declared_edges = 0, seen_edges = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tok = detail::split_ws(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (have_header) throw ParseError("line " + std::to_string(line_no) + ": second header");
            if (tok.size() != 4 || tok[1] != "edge")
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'p edge <n> <m>'");
            n = detail::parse_int<std::size_t>(tok[2], line_no, "vertex count");
            declared_edges = detail::parse_int<std::size_t>(tok[3], line_no, "edge count");
            g = Graph(n);
            have_header = true;
        } else if (tok[0] == "e") {
            if (!have_header)
                throw ParseError("line " + std::to_string(line_no) + ": edge before header");
            if (tok.size() != 3)
                throw ParseError("line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
            const auto u = detail::parse_int<std::size_t>(tok[1], line_no, "vertex");
            const auto v = detail::parse_int<std::size_t>(tok[2], line_no, "vertex");
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError("line " + std::to_string(line_no) + ": vertex out of range");
            try {
                g.add_edge(u - 1, v - 1);
            } catch (const std::invalid_argument& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
            }
            ++seen_edges;
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown record '" +
                             std::string(tok[0]) + "'");
        }
    }
    if (!have_header) throw ParseError("missing 'p edge' header");
    if (seen_edges != declared_edges)
        throw ParseError("header declares " + std::to_string(declared_edges) + " edges, found " +
                         std::to_string(seen_edges));
    return g;
}

inline std::string emit_dimacs_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

// DIMACS CNF: "c ..." comments, "p cnf <vars> <clauses>", then
// zero-terminated clause lines (a clause may span lines).
inline CnfFormula parse_dimacs_cnf(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t declared_clauses = 0;
    CnfFormula f;
    std::vector<int> pending;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tok = detail::split_ws(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (have_header) throw ParseError("line " + std::to_string(line_no) + ": second header");
            if (tok.size() != 4 || tok[1] != "cnf")
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'p cnf <vars> <clauses>'");
            f.num_vars = detail::parse_int<std::size_t>(tok[2], line_no, "variable count");
            declared_clauses = detail::parse_int<std::size_t>(tok[3], line_no, "clause count");
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError("line " + std::to_string(line_no) + ": clause before header");
        for (const auto& t : tok) {
            const int lit = detail::parse_int<int>(t, line_no, "literal");
            if (lit == 0) {
                if (pending.empty())
                    throw ParseError("line " + std::to_string(line_no) + ": empty clause");
                f.clauses.push_back(pending);
                pending.clear();
            } else {
                if (static_cast<std::size_t>(std::abs(lit)) > f.num_vars)
                    throw ParseError("line " + std::to_string(line_no) + ": literal " +
                                     std::string(t) + " out of range");
                pending.push_back(lit);
            }
        }
    }
    if (!have_header) throw ParseError("missing 'p cnf' header");
    if (!pending.empty()) throw ParseError("unterminated clause at end of input");
    if (f.clauses.size() != declared_clauses)
        throw ParseError("header declares " + std::to_string(declared_clauses) +
                         " clauses, found " + std::to_string(f.clauses.size()));
    try {
        f.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return f;
}

inline std::string emit_dimacs_cnf(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

} // namespace grif
