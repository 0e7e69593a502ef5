#include "bindingfactor/rational.hpp"

#include <charconv>

#include "bindingfactor/errors.hpp"

namespace bindingfactor {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part, std::size_t base_offset) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw ParseError("malformed rational '" + std::string(text) + "'",
                       base_offset + static_cast<std::size_t>(ptr - part.data()));
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, 0));
  const auto num = parse_int(text.substr(0, slash), 0);
  const auto den = parse_int(text.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return Rational(num, den);
}

}  // namespace bindingfactor
