#ifndef DOMRATIO_GRAPH6_HPP
#define DOMRATIO_GRAPH6_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "domratio/graph.hpp"

namespace domratio {

// Parse failure; `offset` is the byte position within the (unwrapped) input.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& message, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Decodes a one-line graph6 string (n <= 62). The standard ">>graph6<<"
// header token is accepted and stripped; surrounding ASCII whitespace is
// ignored. Strict otherwise: exact byte count, data bytes in [63,126],
// zero padding bits.
Graph parse_graph6(std::string_view text);

// Canonical graph6 bytes: size byte 63+n, then the upper-triangle bits in
// column-major order packed into 6-bit groups offset by 63. Requires n <= 62.
std::string encode_graph6(const Graph& g);

}  // namespace domratio

#endif
