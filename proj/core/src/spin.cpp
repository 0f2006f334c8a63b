#include "qshuffle/spin.hpp"

#include "qshuffle/errors.hpp"

#include <charconv>

namespace qshuffle {

namespace {

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

Spin Spin::from_twice(int twice) {
  if (twice < 1) throw UsageError("spin must be at least 1/2 (got 2j = " + std::to_string(twice) + ")");
  return Spin(twice);
}

Spin Spin::parse(std::string_view text) {
  int value = 0;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    if (!parse_int(text.substr(0, slash), value) || text.substr(slash + 1) != "2")
      throw UsageError("invalid spin '" + std::string(text) + "' (expected n/2 or an integer)");
    return from_twice(value);
  }
  if (!parse_int(text, value)) throw UsageError("invalid spin '" + std::string(text) + "' (expected n/2 or an integer)");
  if (value > 1000) throw UsageError("spin too large: " + std::string(text));
  return from_twice(2 * value);
}

std::string Spin::str() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace qshuffle
