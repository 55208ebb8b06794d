#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <climits>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <memory>

namespace qsing {

// Arbitrary-precision integer. Values that fit in int64_t are held inline;
// anything larger spills to GMP. The representation is canonical: a value
// is stored as mpz_class only when it does not fit in int64_t.
class Integer {
 public:
  Integer() noexcept = default;
  template <std::integral T>
  Integer(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_unsigned_v<T> && sizeof(T) >= sizeof(std::int64_t)) {
      if (v > static_cast<T>(INT64_MAX)) {
        big_ = std::make_unique<mpz_class>(static_cast<unsigned long>(v));
        return;
      }
    }
    small_ = static_cast<std::int64_t>(v);
  }
  explicit Integer(const mpz_class& v) : big_(std::make_unique<mpz_class>(v)) { normalize(); }
  explicit Integer(mpz_class&& v) : big_(std::make_unique<mpz_class>(std::move(v))) { normalize(); }

  Integer(const Integer& o) : small_(o.small_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
  Integer(Integer&& o) noexcept = default;
  Integer& operator=(const Integer& o) {
    if (this == &o) return *this;
    small_ = o.small_;
    if (!o.big_) big_.reset();
    else if (big_) *big_ = *o.big_;
    else big_ = std::make_unique<mpz_class>(*o.big_);
    return *this;
  }
  Integer& operator=(Integer&& o) noexcept = default;

  // Accepts an optional sign followed by decimal digits.
  static Integer parse(std::string_view text);

  bool is_small() const noexcept { return !big_; }
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }
  int sign() const noexcept {
    if (!big_) return (small_ > 0) - (small_ < 0);
    return sgn(*big_);
  }
  bool fits_int64() const noexcept { return is_small(); }
  // Throws InputError when the value does not fit.
  std::int64_t to_int64() const;
  mpz_class to_mpz() const;
  std::string to_string() const;
  std::size_t hash() const noexcept;

  Integer operator-() const;
  Integer& operator+=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    return add_slow(o);
  }
  Integer& operator-=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    return sub_slow(o);
  }
  Integer& operator*=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    return mul_slow(o);
  }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  // Truncating division and remainder, matching built-in integer semantics.
  friend Integer operator/(const Integer& a, const Integer& b);
  friend Integer operator%(const Integer& a, const Integer& b);

  friend bool operator==(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    return compare_slow(a, b);
  }

 private:
  std::int64_t small() const noexcept { return small_; }
  const mpz_class& big() const noexcept { return *big_; }
  void normalize();
  void assign(mpz_class&& v);
  Integer& add_slow(const Integer& o);
  Integer& sub_slow(const Integer& o);
  Integer& mul_slow(const Integer& o);
  static std::strong_ordering compare_slow(const Integer& a, const Integer& b) noexcept;

  // Exactly one representation is live: big_ when set, small_ otherwise.
  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

Integer abs(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
// Division rounding toward negative infinity; the remainder has the sign of b.
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);
// Requires b | a.
Integer divexact(const Integer& a, const Integer& b);
// Extended gcd: returns g = gcd(a, b) >= 0 and sets s, t with s*a + t*b = g.
Integer extended_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t);

std::ostream& operator<<(std::ostream& os, const Integer& v);

}  // namespace qsing

template <>
struct std::hash<qsing::Integer> {
  std::size_t operator()(const qsing::Integer& v) const noexcept { return v.hash(); }
};
