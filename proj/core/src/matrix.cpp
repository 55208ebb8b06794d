#include "qsing/matrix.hpp"

#include <numeric>
#include <ostream>

namespace qsing {

IntMatrix int_identity(std::size_t n) { return IntMatrix::identity(n, Integer(1), Integer(0)); }

FieldMatrix field_identity(std::size_t n, int conductor) {
  return FieldMatrix::identity(n, Cyclotomic::one(conductor), Cyclotomic(conductor));
}

FieldMatrix to_field(const IntMatrix& m, int conductor) {
  FieldMatrix f(m.rows(), m.cols(), Cyclotomic(conductor));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) f(i, j) = Cyclotomic(conductor, Rational(m(i, j)));
  return f;
}

int common_conductor(const FieldMatrix& m) {
  int l = 1;
  for (const Cyclotomic& x : m.data()) l = std::lcm(l, x.conductor());
  return l;
}

FieldMatrix promote(const FieldMatrix& m, int conductor) {
  FieldMatrix out(m.rows(), m.cols(), Cyclotomic(conductor));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).promote(conductor);
  return out;
}

FieldMatrix unify_conductor(const FieldMatrix& m) {
  const int l = common_conductor(m);
  for (const Cyclotomic& x : m.data())
    if (x.conductor() != l) return promote(m, l);
  return m;
}

Cyclotomic trace(const FieldMatrix& m) {
  if (!m.square()) throw ShapeError("trace of non-square matrix " + m.shape());
  Cyclotomic t(m.rows() == 0 ? 1 : m(0, 0).conductor());
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

bool is_diagonal(const FieldMatrix& m) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

namespace {

template <class T>
std::ostream& print_matrix(std::ostream& os, const Matrix<T>& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
    os << "]";
  }
  return os << "]";
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return print_matrix(os, m); }
std::ostream& operator<<(std::ostream& os, const FieldMatrix& m) { return print_matrix(os, m); }

}  // namespace qsing
