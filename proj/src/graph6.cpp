#include "cycsub/graph6.hpp"

#include <cstdint>

#include "cycsub/errors.hpp"

namespace cycsub {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void encode_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

int sextet(char c) {
  if (c < 63 || c > 126) throw ParseError(std::string("graph6: byte out of range: ") + std::to_string(static_cast<int>(c)));
  return c - kBias;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  encode_order(out, static_cast<std::uint64_t>(n));
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError("graph6: empty input");
  if (text.front() == ':' || text.front() == '&') throw ParseError("graph6: sparse6/digraph6 input is not supported");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text[0] != 126) {
    n = static_cast<std::uint64_t>(sextet(text[0]));
    pos = 1;
  } else if (text.size() >= 2 && text[1] == 126) {
    if (text.size() < 8) throw ParseError("graph6: truncated order field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i]));
    pos = 8;
  } else {
    if (text.size() < 4) throw ParseError("graph6: truncated order field");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i]));
    pos = 4;
  }
  if (n > 100000) throw ParseError("graph6: order too large for dense representation");

  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t needed = (pairs + 5) / 6;
  if (text.size() - pos != needed) {
    throw ParseError("graph6: expected " + std::to_string(needed) + " data bytes, found " +
                     std::to_string(text.size() - pos));
  }
  Graph g(static_cast<int>(n));
  std::uint64_t bit = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = sextet(text[pos + bit / 6]);
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bit % 6 != 0) {
    const int last = sextet(text.back());
    if ((last & ((1 << (6 - bit % 6)) - 1)) != 0) throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

std::vector<Graph> read_graph6_all(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    bool blank = true;
    for (char c : line) {
      if (c != ' ' && c != '\t' && c != '\r') blank = false;
    }
    if (!blank) out.push_back(from_graph6(line));
  }
  return out;
}

}  // namespace cycsub
