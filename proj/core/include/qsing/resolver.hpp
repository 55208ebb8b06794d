#pragma once

#include <vector>

#include "qsing/integer.hpp"
#include "qsing/toric.hpp"

namespace qsing {

struct Terminalization {
  QuotientCone input;
  Fan output;
  std::vector<LatticePoint> inserted;  // insertion order
  std::vector<Integer> multiplicities; // aligned with output.cones
  bool crepant = false;
  bool terminal = false;
  bool smooth = false;
  bool volume_conserved = false;
};

// Replaces every cone containing p by the cones obtained from swapping p in
// for each ray with a positive barycentric coordinate. Unchanged if p is
// already a ray. Throws InputError if p is not primitive or lies outside the
// support.
Fan stellar_subdivide(const Fan& f, const LatticePoint& p);

// Crepant terminal model: stellar subdivision at every junior point in
// lexicographic order. Throws NotGorenstein or NotCanonical.
Terminalization terminalize(const QuotientCone& c);

// Stellar subdivision at the given points only, with the verifier flags filled in.
Terminalization subdivide_with(const QuotientCone& c, const std::vector<LatticePoint>& points);

bool verify_crepant(const Terminalization& t);
bool verify_terminal(const Terminalization& t);
bool verify_volume_conservation(const Terminalization& t);
bool smoothness_check(const Terminalization& t);

// Certificate that the fan triangulates the cone: every cone lies in it,
// interior facets are shared by exactly two cones on opposite sides, boundary
// facets by one, and the multiplicities add up.
bool is_triangulation_of(const Fan& f, const SimplicialCone& c);

}  // namespace qsing
