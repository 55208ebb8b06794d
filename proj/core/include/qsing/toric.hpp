#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qsing/group.hpp"
#include "qsing/integer.hpp"
#include "qsing/matrix.hpp"
#include "qsing/rational.hpp"

namespace qsing {

using LatticePoint = std::vector<Integer>;

// A lattice N with Z^n <= N <= Q^n, stored as (1/scale) * rowspan(basis) with
// basis in Hermite normal form and scale as small as possible.
struct Lattice {
  std::size_t dim = 0;
  Integer scale{1};
  IntMatrix basis;

  static Lattice standard(std::size_t n);
  // Z^n + sum_k Z * t_k.
  static Lattice from_torsion(std::size_t n, const std::vector<std::vector<Rational>>& torsion);
  // Ambient coordinates of a point given in the N-basis.
  std::vector<Rational> to_ambient(const LatticePoint& x) const;
  friend bool operator==(const Lattice&, const Lattice&) = default;
};

// A simplicial cone given by primitive ray generators (rows, N-coordinates).
// `gorenstein` is the functional m with <m, ray_i> = 1 for every ray.
struct SimplicialCone {
  IntMatrix rays;
  std::vector<Rational> gorenstein;

  // Throws InputError if the rays are not linearly independent.
  static SimplicialCone from_rays(IntMatrix rays);
  std::size_t dimension() const noexcept { return rays.cols(); }
  bool is_gorenstein() const;
  Rational height(const LatticePoint& x) const;
};

struct QuotientCone {
  Lattice lattice;
  SimplicialCone cone;
  std::vector<std::string> notes;

  std::size_t dimension() const noexcept { return lattice.dim; }
  bool is_gorenstein() const { return cone.is_gorenstein(); }
};

struct BoxPoint {
  LatticePoint coords;                // N-coordinates
  std::vector<Rational> barycentric;  // in [0, 1), one per ray
  std::vector<Rational> ambient;      // standard coordinates
  Rational height;                    // sum of barycentric coordinates
};

// N = Z^n + Z (a_1/d, ..., a_n/d). A non-faithful spec is first reduced by
// gcd(d, a_1, ..., a_n), with a note.
QuotientCone quotient_lattice(const DiagonalSpec& spec);
QuotientCone quotient_lattice(std::string_view diag);
QuotientCone quotient_lattice(const std::vector<std::vector<Rational>>& torsion, std::size_t n);

// Simultaneously diagonalises an abelian group and builds its cone.
// Throws InputError for non-abelian groups.
QuotientCone abelianize(const MatrixGroup& g);

Integer cone_multiplicity(const SimplicialCone& c);
Integer cone_multiplicity(const QuotientCone& c);

// Points of N in the half-open parallelepiped spanned by the rays, enumerated
// through the Smith form of the ray matrix, sorted by ambient coordinates.
std::vector<BoxPoint> box_points(const SimplicialCone& c, const Lattice& lattice);
std::vector<BoxPoint> box_points(const QuotientCone& c);

// Box points of height exactly 1, in lexicographic order of their ambient coordinates.
std::vector<BoxPoint> junior_points(const QuotientCone& c);

// Throws NotGorenstein for non-Gorenstein cones.
Classification classify_cone(const SimplicialCone& c);
Classification classify_cone(const QuotientCone& c);

struct Fan {
  std::size_t dim = 0;
  Lattice lattice;
  std::vector<LatticePoint> rays;
  std::vector<std::vector<std::size_t>> cones;  // ray indices, ascending

  static Fan from_cone(const QuotientCone& c);
  // Sorts rays lexicographically, remaps and sorts the cones.
  void canonicalize();
  SimplicialCone cone(std::size_t i) const;
  friend bool operator==(const Fan&, const Fan&) = default;
};

// Sum of the multiplicities of the maximal cones. Throws InputError if a cone
// is not simplicial.
Integer fan_orbifold_euler(const Fan& f);

// Text format:
//   # format_version 1
//   lattice n=<n>
//   ray <i>: v1 ... vn
//   cone: i1 ... ik
std::string write_fan(const Fan& f);
// Rays are read in the N-basis; the lattice is set to the standard one.
Fan parse_fan(std::string_view text);

}  // namespace qsing
