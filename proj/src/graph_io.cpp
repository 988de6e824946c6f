#include "necgraph/graph_io.hpp"

#include <cstddef>
#include <sstream>
#include <vector>

namespace necgraph {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxShortOrder = 62;
constexpr long long kMaxExtendedOrder = 258047;  // 2^18 - 1

long long body_byte_count(long long v) {
    long long bits = v * (v - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    const long long v = g.order();
    std::string out;
    if (v <= kMaxShortOrder) {
        out.push_back(static_cast<char>(kOffset + v));
    } else {
        if (v > kMaxExtendedOrder) throw std::invalid_argument("encode_graph6: order too large");
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(kOffset + ((v >> 12) & 63)));
        out.push_back(static_cast<char>(kOffset + ((v >> 6) & 63)));
        out.push_back(static_cast<char>(kOffset + (v & 63)));
    }
    int buf = 0, nbits = 0;
    for (int j = 1; j < v; ++j) {
        for (int i = 0; i < j; ++i) {
            buf = (buf << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(kOffset + buf));
                buf = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(kOffset + (buf << (6 - nbits))));
    return out;
}

Graph decode_graph6(std::string_view text) {
    // tolerate one trailing newline from files
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty input");

    auto byte_at = [&](std::size_t i) -> int {
        if (i >= text.size()) throw ParseError("graph6: truncated input");
        int b = static_cast<unsigned char>(text[i]);
        if (b < kOffset || b > 126) throw ParseError("graph6: byte outside 63..126");
        return b;
    };

    long long v;
    std::size_t pos;
    if (byte_at(0) == 126) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
            throw ParseError("graph6: orders above 258047 are not supported");
        v = 0;
        for (std::size_t i = 1; i <= 3; ++i) v = (v << 6) | (byte_at(i) - kOffset);
        pos = 4;
        if (v <= kMaxShortOrder) throw ParseError("graph6: extended header used for a short order");
    } else {
        v = byte_at(0) - kOffset;
        pos = 1;
    }

    const long long nbytes = body_byte_count(v);
    if (static_cast<long long>(text.size()) - static_cast<long long>(pos) < nbytes)
        throw ParseError("graph6: truncated input");
    if (static_cast<long long>(text.size()) - static_cast<long long>(pos) > nbytes)
        throw ParseError("graph6: trailing data after body");

    GraphBuilder b(static_cast<int>(v));
    long long bit = 0;
    const long long total_bits = v * (v - 1) / 2;
    int i = 0, j = 1;
    for (long long byte = 0; byte < nbytes; ++byte) {
        int val = byte_at(pos + static_cast<std::size_t>(byte)) - kOffset;
        for (int k = 5; k >= 0; --k, ++bit) {
            int x = (val >> k) & 1;
            if (bit < total_bits) {
                if (x) b.add_edge(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if (x) {
                throw ParseError("graph6: nonzero padding bits");
            }
        }
    }
    return b.build();
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    const auto es = g.edges();
    out << g.order() << ' ' << es.size() << '\n';
    for (const auto& [x, y] : es) out << x << ' ' << y << '\n';
    return out.str();
}

Graph read_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long v, e;
    if (!(in >> v >> e)) throw ParseError("edge list: missing header");
    if (v < 0 || e < 0) throw ParseError("edge list: negative header field");
    GraphBuilder b(static_cast<int>(v));
    long long px = -1, py = -1;
    for (long long k = 0; k < e; ++k) {
        long long x, y;
        if (!(in >> x >> y)) throw ParseError("edge list: truncated input");
        if (x < 0 || y < 0 || x >= v || y >= v) throw ParseError("edge list: endpoint out of range");
        if (x >= y) throw ParseError("edge list: endpoints must satisfy x < y");
        if (x < px || (x == px && y <= py)) throw ParseError("edge list: edges must be sorted and distinct");
        b.add_edge(static_cast<int>(x), static_cast<int>(y));
        px = x;
        py = y;
    }
    long long extra;
    if (in >> extra) throw ParseError("edge list: trailing data");
    return b.build();
}

}  // namespace necgraph
