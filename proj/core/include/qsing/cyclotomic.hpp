#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsing/integer.hpp"
#include "qsing/rational.hpp"

namespace qsing {

int euler_phi(int m);

// Coefficients (low to high) of the m-th cyclotomic polynomial.
std::vector<Integer> cyclotomic_polynomial(int m);

// Arithmetic tables for Q(zeta_m) in the power basis 1, z, ..., z^(phi-1).
struct CyclotomicField {
  int conductor = 1;
  int degree = 1;
  std::vector<Integer> modulus;              // Phi_m, degree + 1 coefficients
  std::vector<std::vector<Integer>> powers;  // z^j mod Phi_m for j in [0, m)
};

// Process-wide cache; safe to call from any thread.
const CyclotomicField& cyclotomic_field(int m);

struct RootOfUnity {
  int order = 1;     // multiplicative order
  int exponent = 0;  // value = zeta_order^exponent, 0 <= exponent < order
};

// An element of the cyclotomic field Q(zeta_m), stored as the unique reduced
// coefficient vector modulo Phi_m. Operands of different conductor are
// promoted to the least common multiple before any operation.
//
// Values known to be (plus or minus) a power of zeta_m carry a tag, so products
// of roots of unity reduce to a table lookup. The tag never affects equality.
class Cyclotomic {
 public:
  Cyclotomic();  // zero in Q
  explicit Cyclotomic(int conductor);
  Cyclotomic(int conductor, const Rational& value);
  // Throws ShapeError unless coeffs.size() == phi(conductor).
  Cyclotomic(int conductor, std::vector<Rational> coeffs);

  static Cyclotomic root_of_unity(int conductor, long long exponent);
  static Cyclotomic one(int conductor = 1) { return Cyclotomic(conductor, Rational(1)); }

  int conductor() const noexcept { return field_->conductor; }
  int degree() const noexcept { return field_->degree; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_rational() const noexcept;
  // The constant coefficient; meaningful when is_rational().
  const Rational& rational_part() const noexcept { return coeffs_[0]; }

  // Re-express in Q(zeta_L); L must be a multiple of the conductor.
  Cyclotomic promote(int target_conductor) const;
  // Image under zeta -> zeta^j, j coprime to the conductor.
  Cyclotomic galois(long long j) const;
  Cyclotomic conj() const { return galois(-1); }
  Cyclotomic inverse() const;
  Cyclotomic pow(long long e) const;
  // Some power of zeta_order, if this element is a root of unity.
  std::optional<RootOfUnity> as_root_of_unity() const;

  std::string to_string() const;
  // Consistent with == only among elements sharing a conductor.
  std::size_t hash() const noexcept;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  // Lexicographic order on coefficient vectors (after promotion).
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(const CyclotomicField* field, std::vector<Rational> coeffs)
      : field_(field), coeffs_(std::move(coeffs)) {}
  static Cyclotomic make_tagged(const CyclotomicField* field, long long exponent, bool negative);
  void set_tag(long long exponent, bool negative);
  void clear_tag() noexcept { tag_exp_ = -1; }
  bool has_tag() const noexcept { return tag_exp_ >= 0; }
  Cyclotomic scaled(const Rational& r) const;
  Cyclotomic times_power(long long exponent, bool negative) const;

  const CyclotomicField* field_;
  std::vector<Rational> coeffs_;
  int tag_exp_ = -1;
  bool tag_neg_ = false;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& v);

}  // namespace qsing

template <>
struct std::hash<qsing::Cyclotomic> {
  std::size_t operator()(const qsing::Cyclotomic& v) const noexcept { return v.hash(); }
};
