#pragma once

#include <string>
#include <string_view>

#include "bindingfactor/graph.hpp"

namespace bindingfactor {

/// Largest order encodable with the one-byte graph6 size header.
inline constexpr int kGraph6ShortMax = 62;
/// Largest order of the four-byte (long form) header.
inline constexpr int kGraph6LongMax = 258047;

struct Graph6Options {
  /// Enables the 126-prefixed size header for n >= 63.
  bool long_form = false;
};

/// Decodes one graph6 line. A trailing "\n" or "\r\n" and a leading
/// ">>graph6<<" marker are accepted; anything else beyond the encoded bytes is
/// trailing garbage. Padding bits in the last byte must be zero.
Graph parse_graph6(std::string_view text, Graph6Options options = {});

/// Canonical graph6 encoding without a trailing newline.
/// Throws ArgumentError("unsupported size") when n > 62 and long form is off.
std::string write_graph6(const Graph& g, Graph6Options options = {});

}  // namespace bindingfactor
