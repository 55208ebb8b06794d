#include "qsing/integer.hpp"

#include <cctype>
#include <climits>
#include <ostream>

#include "qsing/error.hpp"

namespace qsing {

namespace {

mpz_class as_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

}  // namespace

void Integer::normalize() {
  if (big_ && mpz_fits_slong_p(big_->get_mpz_t())) {
    small_ = static_cast<std::int64_t>(big_->get_si());
    big_.reset();
  }
}

void Integer::assign(mpz_class&& v) {
  if (big_) *big_ = std::move(v);
  else big_ = std::make_unique<mpz_class>(std::move(v));
  normalize();
}

Integer& Integer::add_slow(const Integer& o) {
  assign(mpz_class(to_mpz() + o.to_mpz()));
  return *this;
}

Integer& Integer::sub_slow(const Integer& o) {
  assign(mpz_class(to_mpz() - o.to_mpz()));
  return *this;
}

Integer& Integer::mul_slow(const Integer& o) {
  assign(mpz_class(to_mpz() * o.to_mpz()));
  return *this;
}

std::strong_ordering Integer::compare_slow(const Integer& a, const Integer& b) noexcept {
  const int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Integer Integer::parse(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t j = text.size();
  while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
  std::string body(text.substr(i, j - i));
  std::size_t k = 0;
  if (k < body.size() && (body[k] == '+' || body[k] == '-')) ++k;
  if (k == body.size()) throw InputError("invalid integer '" + std::string(text) + "'");
  for (std::size_t p = k; p < body.size(); ++p) {
    if (!std::isdigit(static_cast<unsigned char>(body[p])))
      throw InputError("invalid integer '" + std::string(text) + "'");
  }
  if (body[0] == '+') body.erase(0, 1);
  return Integer(mpz_class(body, 10));
}

std::int64_t Integer::to_int64() const {
  if (!is_small()) throw InputError("integer " + to_string() + " does not fit in 64 bits");
  return small();
}

mpz_class Integer::to_mpz() const { return is_small() ? as_mpz(small()) : big(); }

std::string Integer::to_string() const {
  return is_small() ? std::to_string(small()) : big().get_str();
}

std::size_t Integer::hash() const noexcept {
  if (is_small()) return std::hash<std::int64_t>{}(small());
  const mpz_srcptr z = big().get_mpz_t();
  std::size_t h = static_cast<std::size_t>(z->_mp_size);
  const int limbs = z->_mp_size < 0 ? -z->_mp_size : z->_mp_size;
  for (int i = 0; i < limbs; ++i)
    h ^= std::hash<mp_limb_t>{}(z->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Integer Integer::operator-() const {
  if (is_small() && small() != INT64_MIN) return Integer(-small());
  return Integer(mpz_class(-to_mpz()));
}

Integer operator/(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw InputError("integer division by zero");
  if (a.is_small() && b.is_small() && !(a.small() == INT64_MIN && b.small() == -1))
    return Integer(a.small() / b.small());
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(std::move(q));
}

Integer operator%(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw InputError("integer division by zero");
  if (a.is_small() && b.is_small()) {
    if (b.small() == -1) return Integer(0);
    return Integer(a.small() % b.small());
  }
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(std::move(r));
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer gcd(const Integer& a, const Integer& b) {
  if (a.fits_int64() && b.fits_int64()) {
    std::int64_t x = a.to_int64(), y = b.to_int64();
    if (x != INT64_MIN && y != INT64_MIN) {
      x = x < 0 ? -x : x;
      y = y < 0 ? -y : y;
      while (y != 0) {
        const std::int64_t t = x % y;
        x = y;
        y = t;
      }
      return Integer(x);
    }
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(std::move(g));
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return abs(divexact(a, gcd(a, b)) * b);
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw InputError("integer division by zero");
  if (a.fits_int64() && b.fits_int64()) {
    const std::int64_t x = a.to_int64(), y = b.to_int64();
    if (!(x == INT64_MIN && y == -1)) {
      std::int64_t q = x / y;
      if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
      return Integer(q);
    }
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(std::move(q));
}

Integer floor_mod(const Integer& a, const Integer& b) { return a - floor_div(a, b) * b; }

Integer divexact(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw InputError("integer division by zero");
  if (a.fits_int64() && b.fits_int64() && !(a.to_int64() == INT64_MIN && b.to_int64() == -1))
    return Integer(a.to_int64() / b.to_int64());
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(std::move(q));
}

Integer extended_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  Integer old_r = a, r = b;
  Integer old_s = 1, cur_s = 0;
  Integer old_t = 0, cur_t = 1;
  while (!r.is_zero()) {
    const Integer q = floor_div(old_r, r);
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
    tmp = old_t - q * cur_t;
    old_t = cur_t;
    cur_t = tmp;
  }
  if (old_r.sign() < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

}  // namespace qsing
