#include "hafield/units.hpp"

#include <charconv>
#include <cmath>
#include <cctype>
#include <optional>
#include <sstream>

#include "hafield/errors.hpp"

namespace hafield {

namespace {

struct UnitSymbol {
  std::string_view name;
  double scale;
  Dimension dim;
};

constexpr std::array<UnitSymbol, 9> kSymbols{{
    {"m", 1.0, dim::length},
    {"g", 1e-3, dim::mass},
    {"s", 1.0, dim::time},
    {"A", 1.0, dim::current},
    {"V", 1.0, dim::voltage},
    {"T", 1.0, dim::tesla},
    {"J", 1.0, Dimension{2, 1, -2, 0}},
    {"C", 1.0, Dimension{0, 0, 1, 1}},
    {"Wb", 1.0, Dimension{2, 1, -2, -1}},
}};

std::optional<UnitSymbol> find_symbol(std::string_view name) {
  for (const auto& sym : kSymbols) {
    if (sym.name == name) return sym;
  }
  return std::nullopt;
}

std::optional<double> prefix_scale(char c) {
  switch (c) {
    case 'n': return 1e-9;
    case 'u': return 1e-6;
    case 'm': return 1e-3;
    case 'c': return 1e-2;
    case 'k': return 1e3;
    case 'M': return 1e6;
    default: return std::nullopt;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// One factor of a unit expression: "1", "kV", "m^2".
Quantity parse_factor(std::string_view tok, std::string_view whole) {
  tok = trim(tok);
  int exponent = 1;
  if (auto caret = tok.find('^'); caret != std::string_view::npos) {
    auto exp_text = tok.substr(caret + 1);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size()) {
      throw UnitError("bad exponent in unit '" + std::string(whole) + "'");
    }
    tok = tok.substr(0, caret);
  }
  if (tok == "1") return {1.0, dim::none};

  std::optional<UnitSymbol> sym = find_symbol(tok);
  double scale = 1.0;
  if (!sym && tok.size() > 1) {
    if (auto p = prefix_scale(tok.front())) {
      sym = find_symbol(tok.substr(1));
      scale = *p;
    }
  }
  if (!sym) throw UnitError("unknown unit '" + std::string(tok) + "' in '" + std::string(whole) + "'");
  return {std::pow(scale * sym->scale, exponent), sym->dim.pow(exponent)};
}

}  // namespace

std::string to_string(Dimension d) {
  std::ostringstream os;
  os << "m^" << int(d.m) << " kg^" << int(d.kg) << " s^" << int(d.s) << " A^" << int(d.A);
  return os.str();
}

double Quantity::in(Dimension expected) const {
  if (dim_ != expected) {
    throw UnitError("unit mismatch: have [" + to_string(dim_) + "], expected [" +
                    to_string(expected) + "]");
  }
  return value_;
}

Quantity Quantity::operator+(const Quantity& o) const {
  if (dim_ != o.dim_) {
    throw UnitError("cannot add [" + to_string(dim_) + "] and [" + to_string(o.dim_) + "]");
  }
  return {value_ + o.value_, dim_};
}

Quantity Quantity::operator-(const Quantity& o) const {
  if (dim_ != o.dim_) {
    throw UnitError("cannot subtract [" + to_string(o.dim_) + "] from [" + to_string(dim_) + "]");
  }
  return {value_ - o.value_, dim_};
}

Quantity parse_quantity(std::string_view text) {
  std::string_view s = trim(text);
  double number = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), number);
  if (ec != std::errc{}) throw UnitError("no numeric value in '" + std::string(text) + "'");
  std::string_view unit = trim(std::string_view(ptr, s.data() + s.size() - ptr));

  Quantity result{number, dim::none};
  if (unit.empty()) return result;

  // Left-to-right over '*' and '/' separated factors.
  char op = '*';
  std::size_t pos = 0;
  while (pos <= unit.size()) {
    std::size_t next = unit.find_first_of("*/", pos);
    std::string_view tok = unit.substr(pos, next == std::string_view::npos ? next : next - pos);
    if (trim(tok).empty()) throw UnitError("malformed unit '" + std::string(unit) + "'");
    Quantity f = parse_factor(tok, unit);
    result = (op == '*') ? result * f : result / f;
    if (next == std::string_view::npos) break;
    op = unit[next];
    pos = next + 1;
  }
  return result;
}

double parse_si(std::string_view text, Dimension expected) {
  const std::string_view s = trim(text);
  double number = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), number);
  if (ec == std::errc{} && ptr == s.data() + s.size()) return number;
  return parse_quantity(text).in(expected);
}

}  // namespace hafield
