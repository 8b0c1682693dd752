#include "hafield/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace hafield {

std::string format_sci(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::scientific, 8);
  return {buf.data(), ptr};
}

double round_sig9(double v) {
  if (!std::isfinite(v)) return v;
  const std::string s = format_sci(v);
  double out = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

}  // namespace hafield
