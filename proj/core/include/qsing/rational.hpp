#pragma once

#include <compare>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "qsing/integer.hpp"

namespace qsing {

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer v) : num_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer num, Integer den);

  // "p", "p/q", with optional sign on p.
  static Rational parse(std::string_view text);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_integer() const noexcept { return den_.is_one(); }
  int sign() const noexcept { return num_.sign(); }
  Integer floor() const { return floor_div(num_, den_); }
  // x - floor(x), in [0, 1).
  Rational frac() const;
  Rational inverse() const;
  std::string to_string() const;
  std::size_t hash() const noexcept;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  Integer num_{0};
  Integer den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace qsing

template <>
struct std::hash<qsing::Rational> {
  std::size_t operator()(const qsing::Rational& v) const noexcept { return v.hash(); }
};
