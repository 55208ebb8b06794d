#include "qsing/resolver.hpp"

#include <algorithm>
#include <map>

#include "qsing/error.hpp"
#include "qsing/linalg.hpp"

namespace qsing {

namespace {

Integer content(const LatticePoint& v) {
  Integer g = 0;
  for (const Integer& x : v) g = gcd(g, x);
  return g;
}

// Simplicial cells over a shared point list, each with its adjugate cached for
// exact point location: p = lambda * rays with lambda = p * adj / det.
class Triangulation {
 public:
  Triangulation(const Fan& f) : dim_(f.dim), points_(f.rays) {
    for (const auto& c : f.cones) add_cell(c);
  }

  // Returns false when p is already a vertex.
  bool insert(const LatticePoint& p) {
    if (p.size() != dim_) throw ShapeError("point has the wrong dimension");
    if (content(p) != Integer(1)) throw InputError("subdivision point is not primitive");
    if (std::find(points_.begin(), points_.end(), p) != points_.end()) return false;
    const std::size_t pi = points_.size();
    std::vector<Cell> kept;
    std::vector<std::vector<std::size_t>> added;
    for (Cell& c : cells_) {
      const LatticePoint mu = barycentric(c, p);
      bool inside = true;
      for (const Integer& m : mu)
        if (m.sign() < 0) inside = false;
      if (!inside) {
        kept.push_back(std::move(c));
        continue;
      }
      for (std::size_t j = 0; j < dim_; ++j) {
        if (mu[j].is_zero()) continue;
        std::vector<std::size_t> v = c.verts;
        v[j] = pi;
        added.push_back(std::move(v));
      }
    }
    if (added.empty()) throw InputError("subdivision point lies outside the support of the fan");
    points_.push_back(p);
    cells_ = std::move(kept);
    for (const auto& v : added) add_cell(v);
    return true;
  }

  Fan to_fan(const Lattice& lattice) const {
    Fan f;
    f.dim = dim_;
    f.lattice = lattice;
    f.rays = points_;
    for (const Cell& c : cells_) f.cones.push_back(c.verts);
    f.canonicalize();
    return f;
  }

 private:
  struct Cell {
    std::vector<std::size_t> verts;
    IntMatrix adj;  // adjugate scaled so that det > 0
  };

  void add_cell(const std::vector<std::size_t>& verts) {
    if (verts.size() != dim_) throw InputError("fan cone is not full-dimensional simplicial");
    IntMatrix m(0, dim_);
    for (std::size_t v : verts) m.append_row(points_.at(v));
    const Integer d = det(m);
    if (d.is_zero()) throw InputError("fan cone is degenerate");
    IntMatrix adj = adjugate(m);
    if (d.sign() < 0)
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) adj(i, j) = -adj(i, j);
    cells_.push_back(Cell{verts, std::move(adj)});
  }

  LatticePoint barycentric(const Cell& c, const LatticePoint& p) const {
    LatticePoint mu(dim_, Integer(0));
    for (std::size_t i = 0; i < dim_; ++i) {
      if (p[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) mu[j] += p[i] * c.adj(i, j);
    }
    return mu;
  }

  std::size_t dim_;
  std::vector<LatticePoint> points_;
  std::vector<Cell> cells_;
};

// Same verdicts as the public verifiers, sharing one multiplicity per cone.
void fill_flags(Terminalization& t) {
  t.multiplicities.clear();
  Integer total = 0;
  t.smooth = true;
  t.terminal = true;
  for (std::size_t i = 0; i < t.output.cones.size(); ++i) {
    IntMatrix m(0, t.output.dim);
    for (std::size_t r : t.output.cones[i]) m.append_row(t.output.rays[r]);
    const Integer mult = abs(det(m));
    t.multiplicities.push_back(mult);
    total += mult;
    if (mult.is_one()) continue;
    t.smooth = false;
    const SimplicialCone c = SimplicialCone::from_rays(std::move(m));
    if (!c.is_gorenstein()) {
      t.terminal = false;
      continue;
    }
    const Classification k = classify_cone(c);
    if (k != Classification::smooth && k != Classification::terminal) t.terminal = false;
  }
  t.crepant = verify_crepant(t);
  t.volume_conserved = total == cone_multiplicity(t.input);
}

// Linear functional vanishing on the facet rays, by cofactor expansion.
LatticePoint facet_normal(const std::vector<LatticePoint>& facet, std::size_t n) {
  LatticePoint nu(n);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = facet[i][j];
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = j == k ? 1 : 0;
    nu[k] = det(m);
  }
  return nu;
}

Integer dot(const LatticePoint& a, const LatticePoint& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

Fan stellar_subdivide(const Fan& f, const LatticePoint& p) {
  Triangulation t(f);
  if (!t.insert(p)) return f;
  return t.to_fan(f.lattice);
}

Terminalization subdivide_with(const QuotientCone& c, const std::vector<LatticePoint>& points) {
  Terminalization t;
  t.input = c;
  const Fan start = Fan::from_cone(c);
  Triangulation tri(start);
  for (const LatticePoint& p : points)
    if (tri.insert(p)) t.inserted.push_back(p);
  t.output = tri.to_fan(c.lattice);
  fill_flags(t);
  return t;
}

Terminalization terminalize(const QuotientCone& c) {
  if (!c.is_gorenstein()) throw NotGorenstein("terminalization needs a Gorenstein cone");
  std::vector<LatticePoint> junior;
  for (const BoxPoint& b : box_points(c)) {
    if (b.height.is_zero()) continue;
    if (b.height < Rational(1))
      throw NotCanonical("cone is not canonical: box point of height " + b.height.to_string());
    if (b.height == Rational(1)) junior.push_back(b.coords);
  }
  Terminalization t = subdivide_with(c, junior);
  std::vector<LatticePoint> expect;
  for (std::size_t i = 0; i < c.cone.rays.rows(); ++i) expect.push_back(c.cone.rays.row_vector(i));
  expect.insert(expect.end(), junior.begin(), junior.end());
  std::sort(expect.begin(), expect.end());
  if (expect != t.output.rays) throw InternalError("terminalization vertex set differs from rays plus junior points");
  return t;
}

bool verify_crepant(const Terminalization& t) {
  return std::all_of(t.output.rays.begin(), t.output.rays.end(),
                     [&](const LatticePoint& r) { return t.input.cone.height(r) == Rational(1); });
}

bool verify_terminal(const Terminalization& t) {
  for (std::size_t i = 0; i < t.output.cones.size(); ++i) {
    const SimplicialCone c = t.output.cone(i);
    if (!c.is_gorenstein()) return false;
    const Classification k = classify_cone(c);
    if (k != Classification::smooth && k != Classification::terminal) return false;
  }
  return true;
}

bool verify_volume_conservation(const Terminalization& t) {
  return fan_orbifold_euler(t.output) == cone_multiplicity(t.input);
}

bool smoothness_check(const Terminalization& t) {
  for (std::size_t i = 0; i < t.output.cones.size(); ++i)
    if (!cone_multiplicity(t.output.cone(i)).is_one()) return false;
  return true;
}

bool is_triangulation_of(const Fan& f, const SimplicialCone& c) {
  const std::size_t n = f.dim;
  if (c.dimension() != n) return false;
  const IntMatrix adj = adjugate(c.rays);
  const Integer dc = det(c.rays);
  // Barycentric numerators of every ray w.r.t. the support cone, sign-normalised.
  std::vector<LatticePoint> lam;
  for (const LatticePoint& r : f.rays) {
    LatticePoint mu(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mu[j] += r[i] * adj(i, j);
    for (Integer& m : mu) {
      if (dc.sign() < 0) m = -m;
      if (m.sign() < 0) return false;
    }
    lam.push_back(std::move(mu));
  }
  Integer volume = 0;
  std::map<std::vector<std::size_t>, std::vector<int>> facets;  // facet -> side signs
  for (std::size_t k = 0; k < f.cones.size(); ++k) {
    const auto& cone = f.cones[k];
    if (cone.size() != n) return false;
    const SimplicialCone sc = f.cone(k);
    volume += cone_multiplicity(sc);
    for (std::size_t drop = 0; drop < n; ++drop) {
      std::vector<std::size_t> facet;
      std::vector<LatticePoint> rays;
      for (std::size_t i = 0; i < n; ++i)
        if (i != drop) {
          facet.push_back(cone[i]);
          rays.push_back(f.rays[cone[i]]);
        }
      std::vector<std::size_t> key = facet;
      std::sort(key.begin(), key.end());
      // Orient the normal canonically by the sorted facet.
      std::vector<LatticePoint> sorted_rays;
      for (std::size_t r : key) sorted_rays.push_back(f.rays[r]);
      const LatticePoint nu = facet_normal(sorted_rays, n);
      facets[key].push_back(dot(nu, f.rays[cone[drop]]).sign());
    }
  }
  if (volume != abs(dc)) return false;
  for (const auto& [key, sides] : facets) {
    bool boundary = false;
    for (std::size_t j = 0; j < n && !boundary; ++j) {
      bool all_zero = true;
      for (std::size_t r : key) all_zero = all_zero && lam[r][j].is_zero();
      boundary = all_zero;
    }
    if (boundary) {
      if (sides.size() != 1) return false;
    } else if (sides.size() != 2 || sides[0] * sides[1] != -1) {
      return false;
    }
  }
  return true;
}

}  // namespace qsing
