#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "leafspan/graph.hpp"

namespace leafspan {

/// Largest order representable with the 4-byte graph6 header form.
inline constexpr std::size_t kMaxGraph6Order = 258047;

/// Decodes one graph6 record. A trailing newline is tolerated; an optional
/// ">>graph6<<" prefix is stripped.
Graph parseGraph6(std::string_view text);

/// Encodes g as graph6 (no trailing newline).
std::string writeGraph6(const Graph& g);

/// Reads every non-empty line of a graph6 stream.
std::vector<Graph> parseGraph6Stream(std::string_view text);

}  // namespace leafspan
