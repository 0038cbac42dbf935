#include "leafspan/graph6.hpp"

#include <algorithm>

#include "leafspan/error.hpp"

namespace leafspan {
namespace {

constexpr int kBias = 63;

int decodeByte(char c, std::size_t pos) {
  const auto value = static_cast<unsigned char>(c);
  if (value < 63 || value > 126) {
    fail(ErrorCode::Parse, "graph6: byte " + std::to_string(value) + " at offset " + std::to_string(pos) +
                               " outside [63,126]");
  }
  return value - kBias;
}

}  // namespace

Graph parseGraph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) fail(ErrorCode::Parse, "graph6: empty record");

  std::size_t pos = 0;
  std::size_t n = 0;
  const int first = decodeByte(text[0], 0);
  if (first < 63) {
    n = static_cast<std::size_t>(first);
    pos = 1;
  } else {
    // '~' introduces an 18-bit order; "~~" (36-bit orders) is beyond any supported size.
    if (text.size() < 4) fail(ErrorCode::Parse, "graph6: truncated extended header");
    if (text[1] == '~') fail(ErrorCode::InvalidArgument, "graph6: order beyond supported range");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(decodeByte(text[i], i));
    pos = 4;
  }
  if (n > kMaxOrder) {
    fail(ErrorCode::InvalidArgument, "graph6: order " + std::to_string(n) + " beyond supported range");
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t payload = (bits + 5) / 6;
  if (text.size() - pos < payload) {
    fail(ErrorCode::Parse, "graph6: truncated payload (need " + std::to_string(payload) + " bytes, have " +
                               std::to_string(text.size() - pos) + ")");
  }
  if (text.size() - pos > payload) fail(ErrorCode::Parse, "graph6: trailing bytes after payload");

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const int byte = decodeByte(text[pos + bit / 6], pos + bit / 6);
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  }
  // Validate padding bytes too, so bad characters never slip through.
  for (std::size_t i = pos; i < text.size(); ++i) decodeByte(text[i], i);
  return Graph::fromEdges(n, edges);
}

std::string writeGraph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) fail(ErrorCode::InvalidArgument, "graph6: order beyond supported range");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<unsigned char> packed((bits + 5) / 6, 0);
  for (const Edge& e : g.edges()) {
    const std::size_t bit = static_cast<std::size_t>(e.v) * (e.v - 1) / 2 + e.u;
    packed[bit / 6] |= static_cast<unsigned char>(1u << (5 - bit % 6));
  }
  for (unsigned char c : packed) out.push_back(static_cast<char>(c + kBias));
  return out;
}

std::vector<Graph> parseGraph6Stream(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (!line.empty()) out.push_back(parseGraph6(line));
    start = end + 1;
  }
  return out;
}

}  // namespace leafspan
