#include "qsing/linalg.hpp"

#include <algorithm>

#include "qsing/error.hpp"

namespace qsing {

namespace {

void require_square(std::size_t rows, std::size_t cols, const char* what) {
  if (rows != cols)
    throw ShapeError(std::string(what) + " needs a square matrix, got " + std::to_string(rows) +
                     "x" + std::to_string(cols));
}

// row a <- row a + q * row b
void add_row_multiple(IntMatrix& m, std::size_t a, std::size_t b, const Integer& q) {
  if (q.is_zero()) return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m(b, j).is_zero()) m(a, j) += q * m(b, j);
}

void add_col_multiple(IntMatrix& m, std::size_t a, std::size_t b, const Integer& q) {
  if (q.is_zero()) return;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m(i, b).is_zero()) m(i, a) += q * m(i, b);
}

void negate_row(IntMatrix& m, std::size_t a) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
}

// (row a, row b) <- (s*a + t*b, x*a + y*b)
void combine_rows(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                  const Integer& x, const Integer& y) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Integer ra = m(a, j);
    const Integer rb = m(b, j);
    m(a, j) = s * ra + t * rb;
    m(b, j) = x * ra + y * rb;
  }
}

int field_conductor(const FieldMatrix& m) { return common_conductor(m); }

}  // namespace

Integer det(const IntMatrix& m) {
  require_square(m.rows(), m.cols(), "det");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  IntMatrix a = m;
  Integer prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return Integer(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = divexact(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

Cyclotomic det(const FieldMatrix& m) {
  require_square(m.rows(), m.cols(), "det");
  FieldMatrix a = unify_conductor(m);
  const std::size_t n = a.rows();
  const int c = field_conductor(a);
  Cyclotomic result = Cyclotomic::one(c);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return Cyclotomic(c);
    if (p != k) {
      a.swap_rows(k, p);
      result = -result;
    }
    result *= a(k, k);
    const Cyclotomic inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Cyclotomic f = a(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j)
        if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
      a(i, k) = Cyclotomic(c);
    }
  }
  return result;
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = int_identity(m.rows());
  std::size_t next = m.rows();  // pivot rows fill [next, rows)
  for (std::size_t jj = m.cols(); jj-- > 0 && next > 0;) {
    const std::size_t target = next - 1;
    std::size_t first = 0;
    while (first < next && h(first, jj).is_zero()) ++first;
    if (first == next) continue;
    h.swap_rows(first, target);
    u.swap_rows(first, target);
    for (std::size_t i = 0; i < target; ++i) {
      if (h(i, jj).is_zero()) continue;
      const Integer a = h(target, jj);
      const Integer b = h(i, jj);
      Integer s, t;
      const Integer g = extended_gcd(a, b, s, t);
      const Integer x = -divexact(b, g);
      const Integer y = divexact(a, g);
      combine_rows(h, target, i, s, t, x, y);
      combine_rows(u, target, i, s, t, x, y);
    }
    if (h(target, jj).sign() < 0) {
      negate_row(h, target);
      negate_row(u, target);
    }
    const Integer pivot = h(target, jj);
    for (std::size_t k = target + 1; k < m.rows(); ++k) {
      const Integer q = floor_div(h(k, jj), pivot);
      add_row_multiple(h, k, target, -q);
      add_row_multiple(u, k, target, -q);
    }
    next = target;
  }
  return {std::move(h), std::move(u)};
}

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = int_identity(m.rows());
  IntMatrix v = int_identity(m.cols());
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      std::size_t bi = r, bj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (!d(i, j).is_zero() && (bi == r || abs(d(i, j)) < abs(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == r) return {std::move(d), std::move(u), std::move(v)};
      d.swap_rows(t, bi);
      u.swap_rows(t, bi);
      d.swap_cols(t, bj);
      v.swap_cols(t, bj);
      bool clean = true;
      const Integer p = d(t, t);
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t).is_zero()) continue;
        const Integer q = floor_div(d(i, t), p);
        add_row_multiple(d, i, t, -q);
        add_row_multiple(u, i, t, -q);
        if (!d(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j).is_zero()) continue;
        const Integer q = floor_div(d(t, j), p);
        add_col_multiple(d, j, t, -q);
        add_col_multiple(v, j, t, -q);
        if (!d(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!(d(i, j) % p).is_zero()) {
            add_row_multiple(d, t, i, Integer(1));
            add_row_multiple(u, t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t).sign() < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

IntMatrix adjugate(const IntMatrix& m) {
  require_square(m.rows(), m.cols(), "adjugate");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t a = 0, ra = 0; a < n; ++a) {
        if (a == i) continue;
        for (std::size_t b = 0, cb = 0; b < n; ++b) {
          if (b == j) continue;
          minor(ra, cb++) = m(a, b);
        }
        ++ra;
      }
      Integer cof = det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = cof;
    }
  }
  return adj;
}

EchelonForm rref(const FieldMatrix& m) {
  FieldMatrix a = unify_conductor(m);
  const int c = field_conductor(a);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t j = 0; j < a.cols() && row < a.rows(); ++j) {
    std::size_t p = row;
    while (p < a.rows() && a(p, j).is_zero()) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(row, p);
    if (!a(row, j).is_one()) {
      const Cyclotomic inv = a(row, j).inverse();
      for (std::size_t k = j; k < a.cols(); ++k)
        if (!a(row, k).is_zero()) a(row, k) = a(row, k) * inv;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, j).is_zero()) continue;
      const Cyclotomic f = a(i, j);
      for (std::size_t k = j; k < a.cols(); ++k)
        if (!a(row, k).is_zero()) a(i, k) -= f * a(row, k);
      a(i, j) = Cyclotomic(c);
    }
    pivots.push_back(j);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const FieldMatrix& m) { return rref(m).pivots.size(); }

FieldMatrix row_space(const FieldMatrix& basis) {
  EchelonForm e = rref(basis);
  return e.r.block(0, 0, e.pivots.size(), e.r.cols());
}

FieldMatrix kernel(const FieldMatrix& m) {
  const EchelonForm e = rref(m);
  const int c = field_conductor(e.r);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  FieldMatrix out(0, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Cyclotomic> v(n, Cyclotomic(c));
    v[f] = Cyclotomic::one(c);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.r(i, f);
    out.append_row(v);
  }
  return row_space(out);
}

FieldMatrix subspace_sum(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.cols())
    throw ShapeError("subspaces of different ambient dimension: " + a.shape() + " vs " + b.shape());
  FieldMatrix s = a;
  for (std::size_t i = 0; i < b.rows(); ++i) s.append_row(b.row_vector(i));
  return row_space(s);
}

FieldMatrix subspace_intersection(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.cols())
    throw ShapeError("subspaces of different ambient dimension: " + a.shape() + " vs " + b.shape());
  const FieldMatrix ra = row_space(a);
  const FieldMatrix rb = row_space(b);
  const std::size_t n = a.cols();
  if (ra.rows() == 0 || rb.rows() == 0) return FieldMatrix(0, n);
  if (ra.rows() == n) return rb;
  if (rb.rows() == n) return ra;
  FieldMatrix stacked = ra;
  for (std::size_t i = 0; i < rb.rows(); ++i) stacked.append_row(rb.row_vector(i));
  const FieldMatrix rel = kernel(stacked.transpose());
  FieldMatrix out(0, n);
  for (std::size_t k = 0; k < rel.rows(); ++k) {
    FieldMatrix alpha = rel.block(k, 0, 1, ra.rows());
    FieldMatrix v = alpha * ra;
    out.append_row(v.row_vector(0));
  }
  return row_space(out);
}

bool subspace_contains(const FieldMatrix& space, const std::vector<Cyclotomic>& v) {
  FieldMatrix s = space;
  if (s.rows() == 0 && s.cols() == 0) s = FieldMatrix(0, v.size());
  const std::size_t before = rank(s);
  s.append_row(v);
  return rank(s) == before;
}

FieldMatrix inverse(const FieldMatrix& m) {
  require_square(m.rows(), m.cols(), "inverse");
  const std::size_t n = m.rows();
  const FieldMatrix a = unify_conductor(m);
  const int c = field_conductor(a);
  FieldMatrix aug(n, 2 * n, Cyclotomic(c));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Cyclotomic::one(c);
  }
  const EchelonForm e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw InputError("matrix is singular");
  return e.r.block(0, n, n, n);
}

FieldMatrix eigenspace(const FieldMatrix& g, const Cyclotomic& lambda) {
  require_square(g.rows(), g.cols(), "eigenspace");
  FieldMatrix shifted = g;
  for (std::size_t i = 0; i < g.rows(); ++i) shifted(i, i) -= lambda;
  return kernel(shifted);
}

}  // namespace qsing
