#pragma once

#include <cctype>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "madcolor/graph.hpp"

namespace madcolor {

/// Parse/decode failure with a machine-checkable kind.
class GraphFormatError : public std::runtime_error {
public:
    enum class Kind {
        malformed_line,
        id_out_of_range,
        self_loop,
        duplicate_edge,
        invalid_character,
        truncated,
        trailing_data,
        unsupported,
    };

    GraphFormatError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

namespace detail {

inline bool parse_int_token(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    size_t i = 0;
    bool neg = false;
    if (tok[0] == '-') {
        neg = true;
        i = 1;
        if (tok.size() == 1) return false;
    }
    long long v = 0;
    for (; i < tok.size(); ++i) {
        if (tok[i] < '0' || tok[i] > '9') return false;
        if (v > (std::numeric_limits<long long>::max() - 9) / 10) return false;
        v = v * 10 + (tok[i] - '0');
    }
    out = neg ? -v : v;
    return true;
}

}  // namespace detail

/// Edge-list text format: header "n m", then one "u v" line per edge,
/// whitespace-separated decimal, 0-based ids. Duplicate edges are an
/// error rather than silently merged.
inline Graph from_edge_list(std::istream& in) {
    using Kind = GraphFormatError::Kind;
    std::string line;
    auto next_content_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            bool blank = true;
            for (char c : line)
                if (!isspace(static_cast<unsigned char>(c))) blank = false;
            if (!blank) {
                out = line;
                return true;
            }
        }
        return false;
    };

    std::string header;
    if (!next_content_line(header))
        throw GraphFormatError(Kind::truncated, "edge list: missing header line");
    std::istringstream hs(header);
    std::string tok_n, tok_m, extra;
    if (!(hs >> tok_n >> tok_m) || (hs >> extra))
        throw GraphFormatError(Kind::malformed_line,
                               "edge list: header must be \"n m\", got \"" + header + "\"");
    long long n = 0, m = 0;
    if (!detail::parse_int_token(tok_n, n) || !detail::parse_int_token(tok_m, m) ||
        n < 0 || m < 0)
        throw GraphFormatError(Kind::malformed_line,
                               "edge list: header must be \"n m\", got \"" + header + "\"");
    if (n > 10'000'000)
        throw GraphFormatError(Kind::unsupported, "edge list: vertex count too large");

    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        std::string edge_line;
        if (!next_content_line(edge_line))
            throw GraphFormatError(Kind::truncated,
                                   "edge list: expected " + std::to_string(m) +
                                       " edges, got " + std::to_string(i));
        std::istringstream es(edge_line);
        std::string tok_u, tok_v;
        if (!(es >> tok_u >> tok_v) || (es >> extra))
            throw GraphFormatError(Kind::malformed_line,
                                   "edge list: bad edge line \"" + edge_line + "\"");
        long long u = 0, v = 0;
        if (!detail::parse_int_token(tok_u, u) || !detail::parse_int_token(tok_v, v))
            throw GraphFormatError(Kind::malformed_line,
                                   "edge list: bad edge line \"" + edge_line + "\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphFormatError(Kind::id_out_of_range,
                                   "edge list: vertex id out of range on \"" + edge_line + "\"");
        if (u == v)
            throw GraphFormatError(Kind::self_loop,
                                   "edge list: self-loop on \"" + edge_line + "\"");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw GraphFormatError(Kind::duplicate_edge,
                                   "edge list: duplicate edge on \"" + edge_line + "\"");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    std::string rest;
    if (next_content_line(rest))
        throw GraphFormatError(Kind::trailing_data,
                               "edge list: unexpected extra line \"" + rest + "\"");
    return g;
}

inline Graph from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return from_edge_list(in);
}

/// ASCII edge-list serialization, LF endings, edges sorted (u < v).
inline std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

/// graph6 decoder, standard format: short form for n < 63, the 18-bit
/// long form for 63 <= n <= 258047. Upper-triangle bits in column order
/// x(0,1), x(0,2), x(1,2), x(0,3), ... packed 6 per printable character.
inline Graph from_graph6(std::string_view text) {
    using Kind = GraphFormatError::Kind;
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (!text.empty() && text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
    if (text.empty()) throw GraphFormatError(Kind::truncated, "graph6: empty input");

    auto val = [&](size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw GraphFormatError(Kind::invalid_character,
                                   "graph6: invalid character at position " + std::to_string(i));
        return c - 63;
    };

    size_t pos = 0;
    long long n = 0;
    if (val(0) < 63) {
        n = val(0);
        pos = 1;
    } else if (text.size() >= 2 && val(1) < 63) {
        if (text.size() < 4)
            throw GraphFormatError(Kind::truncated, "graph6: truncated long-form order");
        n = (static_cast<long long>(val(1)) << 12) | (val(2) << 6) | val(3);
        pos = 4;
    } else {
        throw GraphFormatError(Kind::unsupported, "graph6: 36-bit order form not supported");
    }
    if (n > 100'000)
        throw GraphFormatError(Kind::unsupported, "graph6: vertex count too large");

    long long nbits = n * (n - 1) / 2;
    long long nchars = (nbits + 5) / 6;
    if (static_cast<long long>(text.size()) - static_cast<long long>(pos) < nchars)
        throw GraphFormatError(Kind::truncated, "graph6: truncated adjacency bit field");
    if (static_cast<long long>(text.size()) - static_cast<long long>(pos) > nchars)
        throw GraphFormatError(Kind::trailing_data, "graph6: trailing data after bit field");

    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int chunk = val(pos + bit / 6);
            if ((chunk >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

/// graph6 encoder; inverse of from_graph6 on every simple graph.
inline std::string to_graph6(const Graph& g) {
    using Kind = GraphFormatError::Kind;
    long long n = g.vertex_count();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw GraphFormatError(Kind::unsupported, "graph6: vertex count too large");
    }
    int chunk = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

}  // namespace madcolor
