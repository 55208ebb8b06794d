#pragma once

#include <cstddef>
#include <vector>

#include "qsing/cyclotomic.hpp"
#include "qsing/integer.hpp"
#include "qsing/matrix.hpp"

namespace qsing {

// Exact determinants. Non-square input throws ShapeError.
Integer det(const IntMatrix& m);
Cyclotomic det(const FieldMatrix& m);

struct HermiteForm {
  IntMatrix h;  // lower-triangular echelon form, zero rows on top
  IntMatrix u;  // unimodular, h == u * m
};

// Row-style Hermite normal form. Columns are processed right to left; each
// pivot is positive and the entries below it are reduced into [0, pivot).
HermiteForm hermite_normal_form(const IntMatrix& m);

struct SmithForm {
  IntMatrix d;  // diagonal, d(i,i) | d(i+1,i+1), non-negative
  IntMatrix u;
  IntMatrix v;  // d == u * m * v, u and v unimodular
};

SmithForm smith_normal_form(const IntMatrix& m);

// Inverse over Q of a square integer matrix, scaled to integers:
// returns adj with adj * m == det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

struct EchelonForm {
  FieldMatrix r;                     // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

// Deterministic pivoting: leftmost nonzero column, first nonzero row.
EchelonForm rref(const FieldMatrix& m);
std::size_t rank(const FieldMatrix& m);

// Null space {v : m v = 0} as the rows of a matrix in reduced echelon form.
// The result has m.cols() columns and zero rows when the kernel is trivial.
FieldMatrix kernel(const FieldMatrix& m);

// Subspaces below are given by (not necessarily independent) basis rows and
// returned as reduced echelon bases.
FieldMatrix row_space(const FieldMatrix& basis);
FieldMatrix subspace_sum(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix subspace_intersection(const FieldMatrix& a, const FieldMatrix& b);
bool subspace_contains(const FieldMatrix& space, const std::vector<Cyclotomic>& v);

// Throws InputError when m is singular.
FieldMatrix inverse(const FieldMatrix& m);

// Eigenspace {v : g v = lambda v}.
FieldMatrix eigenspace(const FieldMatrix& g, const Cyclotomic& lambda);

}  // namespace qsing
