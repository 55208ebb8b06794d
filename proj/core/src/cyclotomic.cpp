#include "qsing/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "qsing/error.hpp"

namespace qsing {

namespace {

long long mod_floor(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

// Exact quotient of integer polynomials; the divisor is monic.
std::vector<Integer> poly_divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {Integer(0)};
  std::vector<Integer> quot(num.size() - dn, Integer(0));
  for (std::size_t k = num.size(); k-- > dn;) {
    const Integer c = num[k];
    quot[k - dn] = c;
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  return quot;
}

std::unique_ptr<CyclotomicField> build_field(int m) {
  auto f = std::make_unique<CyclotomicField>();
  f->conductor = m;
  f->modulus = cyclotomic_polynomial(m);
  f->degree = static_cast<int>(f->modulus.size()) - 1;
  const int phi = f->degree;
  f->powers.reserve(static_cast<std::size_t>(m));
  std::vector<Integer> cur(static_cast<std::size_t>(phi), Integer(0));
  cur[0] = 1;
  for (int j = 0; j < m; ++j) {
    f->powers.push_back(cur);
    // cur <- z * cur mod Phi_m
    const Integer top = cur[static_cast<std::size_t>(phi - 1)];
    for (int i = phi - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    cur[0] = 0;
    if (!top.is_zero())
      for (int i = 0; i < phi; ++i) cur[static_cast<std::size_t>(i)] -= top * f->modulus[static_cast<std::size_t>(i)];
  }
  return f;
}

}  // namespace

int euler_phi(int m) {
  if (m <= 0) throw InputError("conductor must be positive");
  int result = m, n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(int m) {
  if (m <= 0) throw InputError("conductor must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<Integer>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  std::vector<Integer> num(static_cast<std::size_t>(m) + 1, Integer(0));
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) num = poly_divide_monic(std::move(num), cyclotomic_polynomial(d));
  std::lock_guard lock(mu);
  cache.emplace(m, num);
  return num;
}

const CyclotomicField& cyclotomic_field(int m) {
  if (m <= 0) throw InputError("conductor must be positive");
  thread_local std::unordered_map<int, const CyclotomicField*> local;
  if (auto it = local.find(m); it != local.end()) return *it->second;
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  const CyclotomicField* ptr = nullptr;
  {
    std::lock_guard lock(mu);
    auto it = fields.find(m);
    if (it != fields.end()) ptr = it->second.get();
  }
  if (ptr == nullptr) {
    auto built = build_field(m);
    std::lock_guard lock(mu);
    auto [it, inserted] = fields.emplace(m, std::move(built));
    ptr = it->second.get();
  }
  local.emplace(m, ptr);
  return *ptr;
}

Cyclotomic::Cyclotomic() : Cyclotomic(1) {}

Cyclotomic::Cyclotomic(int conductor)
    : field_(&cyclotomic_field(conductor)),
      coeffs_(static_cast<std::size_t>(field_->degree)) {}

Cyclotomic::Cyclotomic(int conductor, const Rational& value) : Cyclotomic(conductor) {
  coeffs_[0] = value;
  if (value.is_one()) {
    set_tag(0, false);
  } else if (value == Rational(-1)) {
    set_tag(0, true);
  }
}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs)
    : field_(&cyclotomic_field(conductor)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field_->degree)
    throw ShapeError("cyclotomic element of conductor " + std::to_string(conductor) + " needs " +
                     std::to_string(field_->degree) + " coefficients, got " +
                     std::to_string(coeffs_.size()));
}

void Cyclotomic::set_tag(long long exponent, bool negative) {
  const int m = field_->conductor;
  long long e = mod_floor(exponent, m);
  if (negative && m % 2 == 0) {
    e = mod_floor(e + m / 2, m);
    negative = false;
  }
  tag_exp_ = static_cast<int>(e);
  tag_neg_ = negative;
}

Cyclotomic Cyclotomic::make_tagged(const CyclotomicField* field, long long exponent, bool negative) {
  const long long e = mod_floor(exponent, field->conductor);
  const auto& p = field->powers[static_cast<std::size_t>(e)];
  std::vector<Rational> coeffs;
  coeffs.reserve(p.size());
  for (const Integer& c : p) coeffs.emplace_back(negative ? -c : c);
  Cyclotomic r(field, std::move(coeffs));
  r.set_tag(e, negative);
  return r;
}

Cyclotomic Cyclotomic::root_of_unity(int conductor, long long exponent) {
  return make_tagged(&cyclotomic_field(conductor), exponent, false);
}

bool Cyclotomic::is_zero() const noexcept {
  for (const Rational& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const noexcept {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

bool Cyclotomic::is_one() const noexcept { return coeffs_[0].is_one() && is_rational(); }

Cyclotomic Cyclotomic::promote(int target) const {
  const int m = field_->conductor;
  if (target == m) return *this;
  if (target <= 0 || target % m != 0)
    throw InputError("cannot promote conductor " + std::to_string(m) + " to " + std::to_string(target));
  const CyclotomicField* tf = &cyclotomic_field(target);
  const long long step = target / m;
  if (has_tag()) return make_tagged(tf, tag_exp_ * step, tag_neg_);
  Cyclotomic r(tf, std::vector<Rational>(static_cast<std::size_t>(tf->degree)));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    const auto& p = tf->powers[static_cast<std::size_t>(mod_floor(static_cast<long long>(k) * step, target))];
    for (std::size_t i = 0; i < p.size(); ++i)
      if (!p[i].is_zero()) r.coeffs_[i] += coeffs_[k] * Rational(p[i]);
  }
  if (r.is_rational() && (r.coeffs_[0].is_one() || r.coeffs_[0] == Rational(-1)))
    r.set_tag(0, !r.coeffs_[0].is_one());
  return r;
}

Cyclotomic Cyclotomic::galois(long long j) const {
  const int m = field_->conductor;
  if (std::gcd(mod_floor(j, m), static_cast<long long>(m)) != 1 && m > 1)
    throw InputError("galois exponent must be coprime to the conductor");
  if (has_tag()) return make_tagged(field_, static_cast<long long>(tag_exp_) * j, tag_neg_);
  Cyclotomic r(field_, std::vector<Rational>(coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    const auto& p = field_->powers[static_cast<std::size_t>(mod_floor(static_cast<long long>(k) * j, m))];
    for (std::size_t i = 0; i < p.size(); ++i)
      if (!p[i].is_zero()) r.coeffs_[i] += coeffs_[k] * Rational(p[i]);
  }
  return r;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw InputError("inverse of zero cyclotomic element");
  if (has_tag()) return make_tagged(field_, -static_cast<long long>(tag_exp_), tag_neg_);
  if (is_rational()) return Cyclotomic(field_->conductor, coeffs_[0].inverse());
  // a^{-1} = (prod_{j != 1} sigma_j(a)) / N(a), with N(a) rational.
  const int m = field_->conductor;
  Cyclotomic others = Cyclotomic::one(m);
  for (int j = 2; j < m; ++j)
    if (std::gcd(j, m) == 1) others *= galois(j);
  const Cyclotomic norm = *this * others;
  if (!norm.is_rational()) throw InternalError("field norm is not rational");
  return others.scaled(norm.coeffs_[0].inverse());
}

Cyclotomic Cyclotomic::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result = Cyclotomic::one(field_->conductor);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::optional<RootOfUnity> Cyclotomic::as_root_of_unity() const {
  const int m = field_->conductor;
  auto from_tag = [m](long long e, bool neg) {
    // value = zeta_{2m}^{2e + (neg ? m : 0)}
    const long long big = 2LL * m;
    const long long k = mod_floor(2 * e + (neg ? m : 0), big);
    const long long g = std::gcd(k, big);
    RootOfUnity r;
    r.order = static_cast<int>(big / g);
    r.exponent = static_cast<int>(k / g);
    if (r.order == 1) r.exponent = 0;
    return r;
  };
  if (has_tag()) return from_tag(tag_exp_, tag_neg_);
  for (int e = 0; e < m; ++e) {
    for (bool neg : {false, true}) {
      if (*this == make_tagged(field_, e, neg)) return from_tag(e, neg);
    }
  }
  return std::nullopt;
}

Cyclotomic Cyclotomic::scaled(const Rational& s) const {
  Cyclotomic r(field_, coeffs_);
  for (Rational& c : r.coeffs_) c *= s;
  if (has_tag() && (s.is_one() || s == Rational(-1))) r.set_tag(tag_exp_, tag_neg_ != !s.is_one());
  return r;
}

Cyclotomic Cyclotomic::times_power(long long exponent, bool negative) const {
  const int m = field_->conductor;
  Cyclotomic r(field_, std::vector<Rational>(coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    const auto& p = field_->powers[static_cast<std::size_t>(mod_floor(static_cast<long long>(k) + exponent, m))];
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].is_zero()) continue;
      if (p[i].is_one()) {
        r.coeffs_[i] += coeffs_[k];
      } else {
        r.coeffs_[i] += coeffs_[k] * Rational(p[i]);
      }
    }
  }
  if (negative)
    for (Rational& c : r.coeffs_) c = -c;
  if (has_tag()) r.set_tag(tag_exp_ + exponent, tag_neg_ != negative);
  return r;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r(field_, coeffs_);
  for (Rational& c : r.coeffs_) c = -c;
  if (has_tag()) r.set_tag(tag_exp_, !tag_neg_);
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    const int l = std::lcm(conductor(), o.conductor());
    *this = o.promote(l);
    return *this;
  }
  if (o.field_ != field_) {
    const int l = std::lcm(conductor(), o.conductor());
    *this = promote(l);
    return *this += o.promote(l);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  clear_tag();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    const int l = std::lcm(conductor(), o.conductor());
    *this = (-o).promote(l);
    return *this;
  }
  if (o.field_ != field_) {
    const int l = std::lcm(conductor(), o.conductor());
    *this = promote(l);
    return *this -= o.promote(l);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  clear_tag();
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  *this = *this * o;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ != b.field_) {
    const int l = std::lcm(a.conductor(), b.conductor());
    return a.promote(l) * b.promote(l);
  }
  const CyclotomicField* f = a.field_;
  if (a.has_tag() && b.has_tag())
    return Cyclotomic::make_tagged(f, static_cast<long long>(a.tag_exp_) + b.tag_exp_,
                                   a.tag_neg_ != b.tag_neg_);
  if (a.is_zero() || b.is_zero()) return Cyclotomic(f->conductor);
  if (a.has_tag()) return b.times_power(a.tag_exp_, a.tag_neg_);
  if (b.has_tag()) return a.times_power(b.tag_exp_, b.tag_neg_);
  if (a.is_rational()) return b.scaled(a.coeffs_[0]);
  if (b.is_rational()) return a.scaled(b.coeffs_[0]);
  const std::size_t phi = a.coeffs_.size();
  std::vector<Rational> prod(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < phi; ++j)
      if (!b.coeffs_[j].is_zero()) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  Cyclotomic r(f, std::vector<Rational>(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(phi)));
  const int m = f->conductor;
  for (std::size_t k = phi; k < prod.size(); ++k) {
    if (prod[k].is_zero()) continue;
    const auto& p = f->powers[static_cast<std::size_t>(static_cast<int>(k) % m)];
    for (std::size_t i = 0; i < phi; ++i)
      if (!p[i].is_zero()) r.coeffs_[i] += prod[k] * Rational(p[i]);
  }
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  const int l = std::lcm(a.conductor(), b.conductor());
  return a.promote(l).coeffs_ == b.promote(l).coeffs_;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ != b.field_) {
    const int l = std::lcm(a.conductor(), b.conductor());
    return a.promote(l) <=> b.promote(l);
  }
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const auto c = a.coeffs_[i] <=> b.coeffs_[i];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t Cyclotomic::hash() const noexcept {
  std::size_t h = 0;
  for (const Rational& c : coeffs_) h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string Cyclotomic::to_string() const {
  const int m = field_->conductor;
  if (is_rational()) return coeffs_[0].to_string();
  if (has_tag())
    return std::string(tag_neg_ ? "-" : "") + "z" + std::to_string(m) + "^" + std::to_string(tag_exp_);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    const Rational mag = c.sign() < 0 ? -c : c;
    if (k == 0) {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << "*";
      os << "z" << m << "^" << k;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& v) { return os << v.to_string(); }

}  // namespace qsing
