#include "d2c/graph6.hpp"

#include <cstdint>
#include <stdexcept>

namespace d2c {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

std::int64_t decode_header(std::string_view text, std::size_t& pos) {
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  unsigned char c0 = text[0];
  if (c0 < kBias || c0 > kMaxByte) throw std::invalid_argument("graph6: header byte out of range");
  if (c0 < kMaxByte) {
    pos = 1;
    return c0 - kBias;
  }
  // One or two 126 markers select the 18-bit or 36-bit length form.
  int fields = 3;
  pos = 1;
  if (text.size() > 1 && static_cast<unsigned char>(text[1]) == kMaxByte) {
    fields = 6;
    pos = 2;
  }
  if (text.size() < pos + fields) throw std::invalid_argument("graph6: truncated length header");
  std::int64_t n = 0;
  for (int i = 0; i < fields; ++i) {
    unsigned char c = text[pos + i];
    if (c < kBias || c > kMaxByte) throw std::invalid_argument("graph6: header byte out of range");
    n = (n << 6) | (c - kBias);
  }
  pos += fields;
  return n;
}

}  // namespace

Graph decode_graph6(std::string_view text) {
  std::size_t pos = 0;
  std::int64_t n64 = decode_header(text, pos);
  if (n64 > 1'000'000) throw std::invalid_argument("graph6: order too large");
  int n = static_cast<int>(n64);

  std::int64_t nbits = static_cast<std::int64_t>(n) * (n - 1) / 2;
  std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() - pos != nbytes) throw std::invalid_argument("graph6: wrong data length");

  Graph g(n);
  std::int64_t bit = 0;
  int col = 1, row = 0;
  for (std::size_t i = 0; i < nbytes; ++i) {
    unsigned char c = text[pos + i];
    if (c < kBias || c > kMaxByte) throw std::invalid_argument("graph6: data byte out of range");
    unsigned group = c - kBias;
    for (int b = 5; b >= 0; --b, ++bit) {
      bool on = (group >> b) & 1u;
      if (bit >= nbits) {
        if (on) throw std::invalid_argument("graph6: nonzero padding");
        continue;
      }
      if (on) g.add_edge(row, col);
      if (++row == col) {
        ++col;
        row = 0;
      }
    }
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kMaxByte));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
    out.push_back(static_cast<char>((n & 0x3f) + kBias));
  } else {
    throw std::invalid_argument("encode_graph6: order too large");
  }

  unsigned group = 0;
  int filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.adjacent(row, col) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    group <<= (6 - filled);
    out.push_back(static_cast<char>(group + kBias));
  }
  return out;
}

}  // namespace d2c
