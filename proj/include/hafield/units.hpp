#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace hafield {

/// Exponents of the SI base dimensions used in this project.
struct Dimension {
  std::int8_t m = 0;   // metre
  std::int8_t kg = 0;  // kilogram
  std::int8_t s = 0;   // second
  std::int8_t A = 0;   // ampere

  friend constexpr bool operator==(Dimension, Dimension) = default;

  constexpr Dimension operator*(Dimension o) const {
    return {static_cast<std::int8_t>(m + o.m), static_cast<std::int8_t>(kg + o.kg),
            static_cast<std::int8_t>(s + o.s), static_cast<std::int8_t>(A + o.A)};
  }
  constexpr Dimension operator/(Dimension o) const {
    return {static_cast<std::int8_t>(m - o.m), static_cast<std::int8_t>(kg - o.kg),
            static_cast<std::int8_t>(s - o.s), static_cast<std::int8_t>(A - o.A)};
  }
  constexpr Dimension pow(int k) const {
    return {static_cast<std::int8_t>(m * k), static_cast<std::int8_t>(kg * k),
            static_cast<std::int8_t>(s * k), static_cast<std::int8_t>(A * k)};
  }
};

namespace dim {
inline constexpr Dimension none{};
inline constexpr Dimension length{1, 0, 0, 0};
inline constexpr Dimension mass{0, 1, 0, 0};
inline constexpr Dimension time{0, 0, 1, 0};
inline constexpr Dimension current{0, 0, 0, 1};
inline constexpr Dimension voltage{2, 1, -3, -1};
inline constexpr Dimension tesla{0, 1, -2, -1};
inline constexpr Dimension vector_potential{1, 1, -2, -1};  // T m
inline constexpr Dimension momentum{1, 1, -1, 0};           // kg m / s
inline constexpr Dimension inverse_length{-1, 0, 0, 0};
inline constexpr Dimension coil_constant{1, 1, -2, -2};  // T m / A
}  // namespace dim

std::string to_string(Dimension d);

/// A value in SI base units carrying its dimension. Addition and
/// subtraction across different dimensions throw UnitError.
class Quantity {
 public:
  constexpr Quantity() = default;
  constexpr Quantity(double value, Dimension d) : value_(value), dim_(d) {}

  constexpr double value() const { return value_; }
  constexpr Dimension dimension() const { return dim_; }

  /// SI value, after checking the dimension is `expected`.
  double in(Dimension expected) const;

  Quantity operator+(const Quantity& o) const;
  Quantity operator-(const Quantity& o) const;
  Quantity operator*(const Quantity& o) const { return {value_ * o.value_, dim_ * o.dim_}; }
  Quantity operator/(const Quantity& o) const { return {value_ / o.value_, dim_ / o.dim_}; }
  Quantity operator*(double k) const { return {value_ * k, dim_}; }
  Quantity operator-() const { return {-value_, dim_}; }

 private:
  double value_ = 0.0;
  Dimension dim_{};
};

/// Parses "<number> [unit]" such as "30 kV", "2.55e-10 m", "2000 1/m",
/// "7.331e-24 kg*m/s". Recognised symbols: m, g, s, A, V, T, J, C, Wb with
/// SI prefixes n, u, m, c, k, M and integer exponents ("m^2"). A bare number
/// is dimensionless.
Quantity parse_quantity(std::string_view text);

/// parse_quantity followed by a dimension check against `expected`. A bare
/// number is taken as already in SI units of `expected`.
double parse_si(std::string_view text, Dimension expected);

}  // namespace hafield
