#pragma once

#include "homcount/simple_graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace homcount {

/// graph6 encoder, bit-exact per the published format: N(n) header then the
/// upper triangle read column by column, packed big-endian into 6-bit chunks
/// offset by 63.
inline std::string to_graph6(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
        out.push_back(static_cast<char>((n & 0x3f) + 63));
    } else {
        throw std::invalid_argument("to_graph6: vertex count too large");
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline SimpleGraph from_graph6(std::string_view s) {
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    if (s.empty()) throw std::invalid_argument("from_graph6: empty string");
    auto byte = [&](std::size_t i) -> int {
        if (i >= s.size()) throw std::invalid_argument("from_graph6: truncated input");
        const int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw std::invalid_argument("from_graph6: byte out of range");
        return c - 63;
    };
    std::size_t pos = 0;
    long n;
    if (byte(0) < 63) {
        n = byte(0);
        pos = 1;
    } else {
        n = (static_cast<long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    }
    const long nbits = n * (n - 1) / 2;
    const std::size_t expect = pos + static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() != expect) throw std::invalid_argument("from_graph6: length mismatch");
    SimpleGraph g(static_cast<int>(n));
    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const int group = byte(pos + bit / 6);
            if ((group >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    // padding bits must be zero
    for (long b = nbits; b < static_cast<long>(s.size() - pos) * 6; ++b)
        if ((byte(pos + b / 6) >> (5 - b % 6)) & 1)
            throw std::invalid_argument("from_graph6: nonzero padding");
    return g;
}

}  // namespace homcount
