#pragma once
// graph6.hpp — codec for the graph6 line format: 6-bit big-endian size
// prefix, then the upper triangle packed column by column ((0,1), (0,2),
// (1,2), (0,3), ...) into 6-bit groups, most significant bit first, each
// group offset by 63. One graph per line; zero padding to a 6-bit boundary.

#include <cstdint>
#include <string>
#include <string_view>

#include "qflower/errors.hpp"
#include "qflower/graph.hpp"

namespace qflower {

inline constexpr std::string_view graph6_header = ">>graph6<<";

inline std::string to_graph6(const Graph& g) {
    std::string out;
    int n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

namespace detail {

inline int graph6_sextet(std::string_view s, std::size_t at) {
    if (at >= s.size()) throw ParseError("graph6 line truncated", s.size());
    unsigned char c = static_cast<unsigned char>(s[at]);
    if (c < 63 || c > 126) throw ParseError("byte out of graph6 range", at);
    return c - 63;
}

}  // namespace detail

/// Decode one graph6 line. A leading ">>graph6<<" header token is tolerated
/// and skipped. Errors name the byte offset into the original line.
inline Graph from_graph6(std::string_view line) {
    std::size_t base = 0;
    if (line.substr(0, graph6_header.size()) == graph6_header) base = graph6_header.size();
    std::string_view s = line.substr(base);
    if (s.empty()) throw ParseError("empty graph6 line", base);

    std::size_t pos = 0;
    std::int64_t n = 0;
    if (static_cast<unsigned char>(s[0]) == 126) {
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126) {
            // 8-byte form (n >= 258048): always over this library's cap,
            // but decode it so the error can report the actual order.
            pos = 2;
            for (int i = 0; i < 6; ++i) n = (n << 6) | detail::graph6_sextet(s, pos++);
        } else {
            pos = 1;
            for (int i = 0; i < 3; ++i) n = (n << 6) | detail::graph6_sextet(s, pos++);
        }
    } else {
        n = detail::graph6_sextet(s, pos++);
    }
    if (n > Graph::max_order)
        throw CapacityError("graph6 order " + std::to_string(n) + " over cap " + std::to_string(Graph::max_order));

    GraphBuilder b(static_cast<int>(n));
    int acc = 0, avail = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (avail == 0) {
                acc = detail::graph6_sextet(s, pos);
                ++pos;
                avail = 6;
            }
            if (acc & (1 << (avail - 1))) b.add_edge(i, j);
            --avail;
        }
    }
    if (avail > 0 && (acc & ((1 << avail) - 1)) != 0) throw ParseError("nonzero padding bits", base + pos - 1);
    if (pos != s.size()) throw ParseError("trailing bytes after graph6 body", base + pos);
    return b.build();
}

}  // namespace qflower
