#pragma once

#include "parkhull/polytope.hpp"

#include <span>
#include <string>

namespace parkhull {

namespace detail {

inline void append_tuple(std::string& out, std::span<const int> t) {
    out += '[';
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t[i]);
    }
    out += ']';
}

} // namespace detail

/// One vertex as a JSON line: {"v":[1,1,3],"layer":1}
inline std::string vertex_json_line(const Vertex& v) {
    std::string out = "{\"v\":";
    detail::append_tuple(out, std::span<const int>(v.entries));
    out += ",\"layer\":" + std::to_string(v.layer) + "}";
    return out;
}

/// One edge as a JSON line: {"e":[[1,1,3],[1,3,1]]}
inline std::string edge_json_line(std::span<const int> a, std::span<const int> b) {
    std::string out = "{\"e\":[";
    detail::append_tuple(out, a);
    out += ',';
    detail::append_tuple(out, b);
    out += "]}";
    return out;
}

} // namespace parkhull
