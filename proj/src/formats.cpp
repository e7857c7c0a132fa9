#include "cayleynut/formats.hpp"

#include <cstdint>

#include "cayleynut/errors.hpp"

namespace cayleynut {

namespace {

constexpr std::int64_t kMaxGraph6Order = 68719476735LL;  // 2^36 - 1

void append_sextets(std::string& out, std::uint64_t value, int count) {
    for (int i = count - 1; i >= 0; --i)
        out.push_back(static_cast<char>(((value >> (6 * i)) & 0x3f) + 63));
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    const std::int64_t n = g.order();
    if (n > kMaxGraph6Order) throw std::invalid_argument("graph too large for graph6");

    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        append_sextets(out, static_cast<std::uint64_t>(n), 3);
    } else {
        out.push_back(126);
        out.push_back(126);
        append_sextets(out, static_cast<std::uint64_t>(n), 6);
    }

    // Upper triangle in column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
    int bits = 0;
    int current = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            current = (current << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(current + 63));
                bits = 0;
                current = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((current << (6 - bits)) + 63));
    return out;
}

Graph decode_graph6(std::string_view s) {
    if (s.empty()) throw Graph6ParseError(0, "empty input");

    std::size_t pos = 0;
    auto next_sextet = [&]() -> int {
        if (pos >= s.size()) throw Graph6ParseError(pos, "unexpected end of input");
        const unsigned char c = static_cast<unsigned char>(s[pos]);
        if (c < 63 || c > 126)
            throw Graph6ParseError(pos, "byte outside the printable graph6 range");
        ++pos;
        return c - 63;
    };

    std::int64_t n = 0;
    int first = next_sextet();
    if (first < 63) {
        n = first;
    } else {
        // One '~' prefix: 18-bit order; two: 36-bit order.
        int second = next_sextet();
        int header_sextets = 3;
        if (second == 63) {
            header_sextets = 6;
            second = next_sextet();
        }
        n = second;
        for (int i = 1; i < header_sextets; ++i) n = (n << 6) | next_sextet();
        if (header_sextets == 3 && n < 63)
            throw Graph6ParseError(1, "non-minimal order encoding");
        if (header_sextets == 6 && n < 258048)
            throw Graph6ParseError(2, "non-minimal order encoding");
    }

    std::vector<std::pair<int, int>> edges;
    int bits = 0;
    int current = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bits == 0) {
                current = next_sextet();
                bits = 6;
            }
            if (current & 0x20) edges.emplace_back(u, v);
            current = (current << 1) & 0x3f;
            --bits;
        }
    }
    // Padding bits must be zero and nothing may follow.
    if (bits > 0 && current != 0) throw Graph6ParseError(pos - 1, "nonzero padding bits");
    if (pos != s.size()) throw Graph6ParseError(pos, "trailing bytes after graph data");

    return Graph(static_cast<int>(n), edges, "decoded-graph6");
}

std::string encode_edge_list(const Graph& g) {
    std::string out;
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return nlohmann::json{
        {"edges", std::move(edges)},
        {"n", g.order()},
        {"provenance", g.provenance()},
    };
}

}  // namespace cayleynut
