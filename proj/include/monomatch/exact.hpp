#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace monomatch {

// Comparisons against square roots, done by squaring: never touch floating point.

/// a <= sqrt(x), x >= 0.
constexpr bool le_sqrt(std::int64_t a, std::int64_t x) { return a <= 0 || a * a <= x; }
/// a < sqrt(x), x >= 0.
constexpr bool lt_sqrt(std::int64_t a, std::int64_t x) { return a < 0 || a * a < x; }
/// a >= sqrt(x), x >= 0.
constexpr bool ge_sqrt(std::int64_t a, std::int64_t x) { return a >= 0 && a * a >= x; }

/// floor(sqrt(x)) for x >= 0.
constexpr std::int64_t isqrt(std::int64_t x) {
  if (x <= 0) return 0;
  std::int64_t r = 0;
  std::int64_t bit = std::int64_t{1} << 62;
  while (bit > x) bit >>= 2;
  while (bit != 0) {
    if (x >= r + bit) {
      x -= r + bit;
      r = (r >> 1) + bit;
    } else {
      r >>= 1;
    }
    bit >>= 2;
  }
  return r;
}

/// Smallest integer b with b >= k * sqrt(x), k >= 0.
constexpr std::int64_t ceil_k_sqrt(std::int64_t k, std::int64_t x) {
  const std::int64_t target = k * k * x;
  std::int64_t b = isqrt(target);
  if (b * b < target) ++b;
  return b;
}

/// Exact non-negative rational p/q in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t p, std::int64_t q) {
    if (q == 0) throw std::invalid_argument("rational with zero denominator");
    if (q < 0) {
      p = -p;
      q = -q;
    }
    const std::int64_t g = std::gcd(p < 0 ? -p : p, q);
    return {p / (g == 0 ? 1 : g), q / (g == 0 ? 1 : g)};
  }

  /// Parses "p/q" or "p".
  static Rational parse(const std::string& text);

  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

inline Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  auto to_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
      throw std::invalid_argument("malformed rational \"" + text + "\"");
    return std::stoll(s);
  };
  if (slash == std::string::npos) return make(to_int(text), 1);
  return make(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
}

}  // namespace monomatch
