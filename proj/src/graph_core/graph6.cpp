#include "bindingfactor/graph6.hpp"

#include <vector>

#include "bindingfactor/errors.hpp"

namespace bindingfactor {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("unexpected end of graph6 data", pos);
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126)
    throw ParseError("byte value " + std::to_string(c) + " outside graph6 range 63..126", pos);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text, Graph6Options options) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (pos >= text.size()) throw ParseError("missing graph6 size header", pos);

  long n = 0;
  if (text[pos] == '~') {
    if (!options.long_form)
      throw ParseError("long-form graph6 header (n >= 63) is not enabled", pos);
    if (pos + 1 < text.size() && text[pos + 1] == '~')
      throw ParseError("eight-byte graph6 header is not supported", pos + 1);
    ++pos;
    for (int i = 0; i < 3; ++i) n = (n << 6) | decode_byte(text, pos++);
    if (n <= kGraph6ShortMax)
      throw ParseError("long-form header encodes a short-form size", pos - 1);
  } else {
    n = decode_byte(text, pos++);
  }

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t nbytes = (bits + 5) / 6;
  if (text.size() < pos + nbytes)
    throw ParseError("graph6 data too short for " + std::to_string(n) + " vertices",
                     text.size());
  if (text.size() > pos + nbytes) throw ParseError("trailing garbage after graph6 data", pos + nbytes);

  std::vector<Edge> edges;
  std::size_t bit = 0;
  int i = 0;
  int j = 1;
  for (std::size_t b = 0; b < nbytes; ++b) {
    const int value = decode_byte(text, pos + b);
    for (int shift = 5; shift >= 0; --shift, ++bit) {
      const bool set = (value >> shift) & 1;
      if (bit >= bits) {
        if (set) throw ParseError("nonzero padding bits", pos + b);
        continue;
      }
      if (set) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g, Graph6Options options) {
  const int n = g.order();
  std::string out;
  if (n <= kGraph6ShortMax) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (options.long_form && n <= kGraph6LongMax) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
  } else {
    throw ArgumentError("unsupported size: graph6 short form holds at most 62 vertices, got " +
                        std::to_string(n));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace bindingfactor
