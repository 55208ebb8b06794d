#include "qsing/rational.hpp"

#include <ostream>

#include "qsing/error.hpp"

namespace qsing {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InputError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (den_.is_one()) return;
  const Integer g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = divexact(num_, g);
    den_ = divexact(den_, g);
  }
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  const Integer den = Integer::parse(text.substr(slash + 1));
  if (den.is_zero()) throw InputError("rational '" + std::string(text) + "' has zero denominator");
  return Rational(Integer::parse(text.substr(0, slash)), den);
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::inverse() const {
  if (is_zero()) throw InputError("inverse of zero rational");
  return Rational(den_, num_);
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

std::size_t Rational::hash() const noexcept {
  const std::size_t h = num_.hash();
  return h ^ (den_.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (o.is_zero()) return *this;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (o.is_zero()) return *this;
  if (den_.is_one() && o.den_.is_one()) {
    num_ -= o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InputError("rational division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  return (a.num_ * b.den_) <=> (b.num_ * a.den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace qsing
