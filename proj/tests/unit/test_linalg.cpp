#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "qsing/error.hpp"
#include "qsing/linalg.hpp"

using namespace qsing;

namespace {

// Laplace expansion along the first row.
Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    const Integer term = m(0, j) * cofactor_det(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

IntMatrix random_int_matrix(std::size_t r, std::size_t c, std::mt19937& rng, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

bool is_unimodular(const IntMatrix& u) { return abs(det(u)) == Integer(1); }

// Row-style HNF by repeated Euclid with swaps (no extended gcd), same conventions.
IntMatrix naive_hnf(IntMatrix h) {
  const std::size_t r = h.rows();
  std::size_t next = r;
  for (std::size_t j = h.cols(); j-- > 0 && next > 0;) {
    const std::size_t t = next - 1;
    for (;;) {
      std::size_t best = r;
      for (std::size_t i = 0; i <= t; ++i)
        if (!h(i, j).is_zero() && (best == r || abs(h(i, j)) < abs(h(best, j)))) best = i;
      if (best == r) break;
      h.swap_rows(best, t);
      bool done = true;
      for (std::size_t i = 0; i < t; ++i) {
        if (h(i, j).is_zero()) continue;
        const Integer q = h(i, j) / h(t, j);
        for (std::size_t k = 0; k < h.cols(); ++k) h(i, k) -= q * h(t, k);
        if (!h(i, j).is_zero()) done = false;
      }
      if (done) break;
    }
    if (h(t, j).is_zero()) continue;
    if (h(t, j).sign() < 0)
      for (std::size_t k = 0; k < h.cols(); ++k) h(t, k) = -h(t, k);
    for (std::size_t i = t + 1; i < r; ++i) {
      const Integer q = floor_div(h(i, j), h(t, j));
      for (std::size_t k = 0; k < h.cols(); ++k) h(i, k) -= q * h(t, k);
    }
    next = t;
  }
  return h;
}

// gcd of all k x k minors.
Integer minor_gcd(const IntMatrix& m, std::size_t k) {
  Integer g = 0;
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<bool> rs(r, false), cs(c, false);
  std::fill(rs.begin(), rs.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::fill(cs.begin(), cs.end(), false);
    std::fill(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      IntMatrix sub(k, k);
      for (std::size_t i = 0, a = 0; i < r; ++i) {
        if (!rs[i]) continue;
        for (std::size_t j = 0, b = 0; j < c; ++j)
          if (cs[j]) sub(a, b++) = m(i, j);
        ++a;
      }
      g = gcd(g, cofactor_det(sub));
    } while (std::prev_permutation(cs.begin(), cs.end()));
  } while (std::prev_permutation(rs.begin(), rs.end()));
  return g;
}

FieldMatrix random_field_matrix(std::size_t r, std::size_t c, int m, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-2, 2);
  FieldMatrix f(r, c, Cyclotomic(m));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      std::vector<Rational> co;
      for (int k = 0; k < euler_phi(m); ++k) co.emplace_back(dist(rng));
      f(i, j) = Cyclotomic(m, co);
    }
  return f;
}

bool is_rref(const FieldMatrix& r) {
  std::size_t last = 0;
  bool first = true;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t p = 0;
    while (p < r.cols() && r(i, p).is_zero()) ++p;
    if (p == r.cols()) return false;  // basis rows are nonzero
    if (!first && p <= last) return false;
    if (!r(i, p).is_one()) return false;
    for (std::size_t k = 0; k < r.rows(); ++k)
      if (k != i && !r(k, p).is_zero()) return false;
    last = p;
    first = false;
  }
  return true;
}

}  // namespace

TEST(Det, SmallCases) {
  EXPECT_EQ(det(int_identity(3)), Integer(1));
  EXPECT_EQ(det(IntMatrix{{2, 0}, {0, 3}}), Integer(6));
  EXPECT_THROW(det(IntMatrix(2, 3)), ShapeError);
  EXPECT_THROW(det(FieldMatrix(3, 2, Cyclotomic(1))), ShapeError);
}

TEST(Det, MatchesCofactorExpansion) {
  std::mt19937 rng(1);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 1 + it % 5;
    const IntMatrix m = random_int_matrix(n, n, rng);
    EXPECT_EQ(det(m), cofactor_det(m));
    EXPECT_EQ(det(to_field(m)), Cyclotomic(1, Rational(cofactor_det(m))));
  }
}

TEST(Det, CyclotomicDiagonalAndTriangular) {
  const int m = 7;
  FieldMatrix g = field_identity(3, m);
  g(0, 0) = Cyclotomic::root_of_unity(m, 1);
  g(1, 1) = Cyclotomic::root_of_unity(m, 2);
  g(2, 2) = Cyclotomic::root_of_unity(m, 4);
  g(0, 2) = Cyclotomic(m, Rational(5));
  EXPECT_TRUE(det(g).is_one());
  std::mt19937 rng(4);
  for (int it = 0; it < 10; ++it) {
    const FieldMatrix a = random_field_matrix(3, 3, 5, rng);
    const FieldMatrix b = random_field_matrix(3, 3, 5, rng);
    EXPECT_EQ(det(a * b), det(a) * det(b));
  }
}

TEST(Hermite, Examples) {
  const HermiteForm id = hermite_normal_form(int_identity(3));
  EXPECT_EQ(id.h, int_identity(3));
  EXPECT_EQ(id.u, int_identity(3));
  const HermiteForm sw = hermite_normal_form(IntMatrix{{0, 1}, {1, 0}});
  EXPECT_EQ(sw.h, int_identity(2));
  EXPECT_EQ(sw.u, (IntMatrix{{0, 1}, {1, 0}}));
}

TEST(Hermite, MatchesNaiveEliminationAndIsIdempotent) {
  std::mt19937 rng(2);
  for (int it = 0; it < 300; ++it) {
    const std::size_t r = 1 + it % 4, c = 1 + (it / 4) % 4;
    const IntMatrix m = random_int_matrix(r, c, rng);
    const HermiteForm f = hermite_normal_form(m);
    EXPECT_EQ(f.h, f.u * m);
    EXPECT_TRUE(is_unimodular(f.u));
    EXPECT_EQ(f.h, naive_hnf(m)) << m;
    EXPECT_EQ(hermite_normal_form(f.h).h, f.h);
  }
}

TEST(Hermite, LowerTriangularWithReducedColumns) {
  std::mt19937 rng(8);
  for (int it = 0; it < 100; ++it) {
    const IntMatrix m = random_int_matrix(3, 3, rng);
    if (det(m).is_zero()) continue;
    const IntMatrix h = hermite_normal_form(m).h;
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_GT(h(i, i).sign(), 0);
      for (std::size_t j = i + 1; j < 3; ++j) EXPECT_TRUE(h(i, j).is_zero());
      for (std::size_t k = i + 1; k < 3; ++k) {
        EXPECT_GE(h(k, i).sign(), 0);
        EXPECT_LT(h(k, i), h(i, i));
      }
    }
  }
}

TEST(Smith, Examples) {
  EXPECT_EQ(smith_normal_form(int_identity(3)).d, int_identity(3));
  EXPECT_EQ(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}).d, (IntMatrix{{2, 0}, {0, 4}}));
  EXPECT_EQ(smith_normal_form(IntMatrix(2, 3)).d, IntMatrix(2, 3));
}

TEST(Smith, MatchesMinorGcdOracle) {
  std::mt19937 rng(6);
  for (int it = 0; it < 200; ++it) {
    const std::size_t r = 1 + it % 4, c = 1 + (it / 4) % 4;
    const IntMatrix m = random_int_matrix(r, c, rng, -6, 6);
    const SmithForm s = smith_normal_form(m);
    EXPECT_EQ(s.d, s.u * m * s.v);
    EXPECT_TRUE(is_unimodular(s.u));
    EXPECT_TRUE(is_unimodular(s.v));
    Integer prefix = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      const Integer dk = s.d(k - 1, k - 1);
      EXPECT_GE(dk.sign(), 0);
      prefix *= dk;
      EXPECT_EQ(prefix, minor_gcd(m, k));
      if (k < std::min(r, c) && !dk.is_zero()) EXPECT_TRUE((s.d(k, k) % dk).is_zero());
    }
    EXPECT_EQ(smith_normal_form(s.d).d, s.d);
    if (r == c) {
      Integer prod = 1;
      for (std::size_t k = 0; k < r; ++k) prod *= s.d(k, k);
      EXPECT_EQ(prod, abs(det(m)));
    }
  }
}

TEST(Adjugate, ProductIsDeterminant) {
  std::mt19937 rng(12);
  for (int it = 0; it < 50; ++it) {
    const std::size_t n = 1 + it % 4;
    const IntMatrix m = random_int_matrix(n, n, rng);
    const IntMatrix id = int_identity(n);
    IntMatrix expect(n, n);
    for (std::size_t i = 0; i < n; ++i) expect(i, i) = det(m);
    EXPECT_EQ(adjugate(m) * m, expect);
  }
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel(field_identity(3)).rows(), 0u);
  EXPECT_EQ(kernel(FieldMatrix(2, 2, Cyclotomic(1))), field_identity(2));
  FieldMatrix g = field_identity(3, 3);
  g(0, 0) = Cyclotomic::root_of_unity(3, 1);
  g(1, 1) = Cyclotomic::root_of_unity(3, 1);
  const FieldMatrix e = eigenspace(g, Cyclotomic::root_of_unity(3, 1));
  EXPECT_EQ(e.rows(), 2u);
  for (std::size_t i = 0; i < e.rows(); ++i) {
    const auto v = e.row_vector(i);
    const auto gv = g.apply(v);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(gv[k], Cyclotomic::root_of_unity(3, 1) * v[k]);
  }
}

TEST(Kernel, VectorsAnnihilateAndBasisIsEchelon) {
  std::mt19937 rng(10);
  for (int it = 0; it < 40; ++it) {
    const std::size_t r = 1 + it % 4, c = 2 + it % 3;
    FieldMatrix m = random_field_matrix(r, c, it % 2 ? 4 : 3, rng);
    if (it % 3 == 0 && r > 1) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Cyclotomic::root_of_unity(3, 1);
    }
    const FieldMatrix k = kernel(m);
    EXPECT_EQ(k.rows() + rank(m), c);
    EXPECT_TRUE(is_rref(k));
    for (std::size_t i = 0; i < k.rows(); ++i)
      for (const auto& x : m.apply(k.row_vector(i))) EXPECT_TRUE(x.is_zero());
  }
}

TEST(Subspace, IntersectionExamples) {
  const FieldMatrix full = field_identity(3);
  FieldMatrix b(1, 3, Cyclotomic(1));
  b(0, 1) = Cyclotomic(1, Rational(2));
  b(0, 2) = Cyclotomic(1, Rational(1));
  EXPECT_EQ(subspace_intersection(full, b), row_space(b));
  const FieldMatrix x = field_identity(2).block(0, 0, 1, 2);
  const FieldMatrix y = field_identity(2).block(1, 0, 1, 2);
  EXPECT_EQ(subspace_intersection(x, y).rows(), 0u);
  EXPECT_THROW(subspace_intersection(x, full), ShapeError);
}

TEST(Subspace, IntersectionDimensionMatchesRankOracle) {
  std::mt19937 rng(13);
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = 4;
    FieldMatrix a = random_field_matrix(1 + it % 3, n, 3, rng);
    FieldMatrix b = random_field_matrix(1 + (it / 3) % 3, n, 3, rng);
    if (it % 2 == 0) b.append_row(a.row_vector(0));
    const FieldMatrix meet = subspace_intersection(a, b);
    FieldMatrix stacked = a;
    for (std::size_t i = 0; i < b.rows(); ++i) stacked.append_row(b.row_vector(i));
    EXPECT_EQ(meet.rows(), rank(a) + rank(b) - rank(stacked));
    for (std::size_t i = 0; i < meet.rows(); ++i) {
      EXPECT_TRUE(subspace_contains(a, meet.row_vector(i)));
      EXPECT_TRUE(subspace_contains(b, meet.row_vector(i)));
    }
  }
}

TEST(Inverse, RoundTrip) {
  std::mt19937 rng(14);
  for (int it = 0; it < 10; ++it) {
    const FieldMatrix a = random_field_matrix(3, 3, 12, rng);
    if (det(a).is_zero()) continue;
    EXPECT_EQ(a * inverse(a), field_identity(3, 12));
  }
  EXPECT_THROW(inverse(FieldMatrix(2, 2, Cyclotomic(1))), InputError);
}
