#include "domratio/graph6.hpp"

#include <cctype>

namespace domratio {

namespace {

constexpr std::string_view kHeaderToken = ">>graph6<<";
constexpr int kSizeCap = 62;

std::string_view strip_ascii_space(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Graph6Error::Graph6Error(const std::string& message, std::size_t offset)
    : std::runtime_error("graph6: " + message + " (byte offset " + std::to_string(offset) + ")"),
      offset_(offset) {}

Graph parse_graph6(std::string_view text) {
    std::string_view s = strip_ascii_space(text);
    if (s.substr(0, kHeaderToken.size()) == kHeaderToken) s.remove_prefix(kHeaderToken.size());
    if (s.empty()) throw Graph6Error("empty input", 0);

    const unsigned char size_byte = static_cast<unsigned char>(s[0]);
    if (size_byte == 126) throw Graph6Error("graphs with n > 62 are not supported", 0);
    if (size_byte < 63 || size_byte > 63 + kSizeCap)
        throw Graph6Error("invalid size byte", 0);
    const int n = size_byte - 63;

    const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t data_bytes = (bit_count + 5) / 6;
    if (s.size() < 1 + data_bytes)
        throw Graph6Error("truncated: expected " + std::to_string(data_bytes) + " data bytes",
                          s.size());
    if (s.size() > 1 + data_bytes) throw Graph6Error("trailing garbage", 1 + data_bytes);

    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (std::size_t byte = 0; byte < data_bytes; ++byte) {
        const unsigned char c = static_cast<unsigned char>(s[1 + byte]);
        if (c < 63 || c > 126) throw Graph6Error("data byte out of range", 1 + byte);
        const unsigned value = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            const bool set = (value >> b) & 1u;
            if (bit >= bit_count) {
                if (set) throw Graph6Error("nonzero padding bits", 1 + byte);
                continue;
            }
            if (set) {
                // Column-major upper triangle: bit index -> (i, j), i < j.
                std::size_t r = bit;
                int j = 1;
                while (r >= static_cast<std::size_t>(j)) r -= j++;
                edges.emplace_back(static_cast<int>(r), j);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
    const int n = g.n();
    if (n > kSizeCap)
        throw std::invalid_argument("graph6: graphs with n > 62 are not supported");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    unsigned group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

}  // namespace domratio
