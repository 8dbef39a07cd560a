#include "drgcert/graph6.hpp"

#include <cstddef>

namespace drg::graph {

namespace {

void append_n(std::string& out, uint64_t n) {
  if (n <= 62) {
    out.push_back(char(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(char(((n >> 12) & 63) + 63));
    out.push_back(char(((n >> 6) & 63) + 63));
    out.push_back(char((n & 63) + 63));
  } else if (n <= 68719476735ULL) {
    out.push_back('~');
    out.push_back('~');
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(char(((n >> shift) & 63) + 63));
  } else {
    throw MalformedGraph6("graph too large for graph6");
  }
}

uint64_t parse_n(const std::string& s, size_t& pos) {
  auto next = [&]() -> uint64_t {
    if (pos >= s.size()) throw MalformedGraph6("truncated size field");
    const unsigned char c = (unsigned char)s[pos++];
    if (c < 63 || c > 126) throw MalformedGraph6("invalid size byte");
    return c - 63;
  };
  uint64_t b = next();
  if (b < 63) return b;
  b = next();
  if (b < 63) {
    uint64_t n = b;
    n = (n << 6) | next();
    n = (n << 6) | next();
    return n;
  }
  uint64_t n = 0;
  for (int i = 0; i < 6; ++i) n = (n << 6) | next();
  return n;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const uint64_t n = g.n();
  std::string out;
  append_n(out, n);
  // Upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... packed 6 bits/char.
  uint32_t buf = 0;
  int bits = 0;
  for (uint32_t v = 1; v < n; ++v) {
    for (uint32_t u = 0; u < v; ++u) {
      buf = (buf << 1) | (g.adjacent(u, v) ? 1u : 0u);
      if (++bits == 6) {
        out.push_back(char(buf + 63));
        buf = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(char((buf << (6 - bits)) + 63));
  return out;
}

Graph graph6_decode(const std::string& input) {
  std::string s = input;
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
    s.pop_back();
  if (s.empty()) throw MalformedGraph6("empty graph6 string");

  size_t pos = 0;
  const uint64_t n64 = parse_n(s, pos);
  if (n64 > 0x7fffffff) throw MalformedGraph6("vertex count too large");
  const uint32_t n = uint32_t(n64);

  const uint64_t nbits = n64 * (n64 - 1) / 2;
  const uint64_t nbytes = (nbits + 5) / 6;
  if (s.size() - pos != nbytes)
    throw MalformedGraph6("wrong payload length: have " +
                          std::to_string(s.size() - pos) + " bytes, expected " +
                          std::to_string(nbytes));

  std::vector<std::pair<uint32_t, uint32_t>> edges;
  uint64_t bit = 0;
  for (uint32_t v = 1; v < n; ++v) {
    for (uint32_t u = 0; u < v; ++u, ++bit) {
      const unsigned char c = (unsigned char)s[pos + bit / 6];
      if (c < 63 || c > 126) throw MalformedGraph6("invalid payload byte");
      const int shift = 5 - int(bit % 6);
      if ((c - 63) >> shift & 1) edges.emplace_back(u, v);
    }
  }
  // Padding bits must be zero.
  for (uint64_t b = nbits; b < nbytes * 6; ++b) {
    const unsigned char c = (unsigned char)s[pos + b / 6];
    const int shift = 5 - int(b % 6);
    if ((c - 63) >> shift & 1) throw MalformedGraph6("nonzero padding bits");
  }
  return Graph(n, edges);
}

}  // namespace drg::graph
