#pragma once

#include <vector>

#include "qsing/group.hpp"
#include "qsing/matrix.hpp"

namespace fixtures {

inline qsing::Cyclotomic z(int m, long long k) { return qsing::Cyclotomic::root_of_unity(m, k); }

inline qsing::FieldMatrix diag(int m, const std::vector<long long>& e) {
  qsing::FieldMatrix d(e.size(), e.size(), qsing::Cyclotomic(m));
  for (std::size_t i = 0; i < e.size(); ++i) d(i, i) = z(m, e[i]);
  return d;
}

// Pads a square block with an identity block.
inline qsing::FieldMatrix pad(const qsing::FieldMatrix& b, std::size_t extra) {
  const std::size_t n = b.rows() + extra;
  qsing::FieldMatrix m(n, n, qsing::Cyclotomic(qsing::common_conductor(b)));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) = b(i, j);
  for (std::size_t i = b.rows(); i < n; ++i) m(i, i) = qsing::Cyclotomic::one(qsing::common_conductor(b));
  return m;
}

inline std::vector<qsing::FieldMatrix> q8_generators() {
  qsing::FieldMatrix a = diag(4, {1, 3});
  qsing::FieldMatrix b(2, 2, qsing::Cyclotomic(4));
  b(0, 1) = qsing::Cyclotomic::one(4);
  b(1, 0) = qsing::Cyclotomic(4, qsing::Rational(-1));
  return {a, b};
}

inline std::vector<qsing::FieldMatrix> f21_generators() { return {diag(7, {1, 2, 4}), qsing::matrix_T(7)}; }

// <F21 + 1, omega_4 I> in SL(4).
inline std::vector<qsing::FieldMatrix> f21_z4_generators() {
  std::vector<qsing::FieldMatrix> g;
  for (const auto& m : f21_generators()) g.push_back(pad(m, 1));
  g.push_back(qsing::scalar_matrix(4, z(4, 1)));
  return g;
}

inline std::vector<qsing::Cyclotomic> axis(std::size_t n, std::size_t k) {
  std::vector<qsing::Cyclotomic> v(n, qsing::Cyclotomic(1));
  v[k] = qsing::Cyclotomic::one(1);
  return v;
}

}  // namespace fixtures
