#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "qsing/error.hpp"
#include "qsing/linalg.hpp"
#include "qsing/resolver.hpp"

using namespace qsing;

namespace {

// Rational barycentric coordinates of p in cone k, by an independent field solve.
std::vector<Rational> locate(const Fan& f, std::size_t k, const LatticePoint& p) {
  const auto& cone = f.cones[k];
  const std::size_t n = f.dim;
  FieldMatrix m(n, n, Cyclotomic(1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Cyclotomic(1, Rational(f.rays[cone[i]][j]));
  const FieldMatrix inv = inverse(m);
  std::vector<Rational> mu(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) mu[j] += Rational(p[i]) * inv(i, j).rational_part();
  return mu;
}

// Random points of the support lie in some closed cone and in at most one open cone.
void expect_covering(const Fan& f, const SimplicialCone& support, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(0, 40);
  for (int trial = 0; trial < 60; ++trial) {
    LatticePoint p(f.dim, Integer(0));
    for (std::size_t i = 0; i < f.dim; ++i) {
      const int c = coef(rng);
      for (std::size_t j = 0; j < f.dim; ++j) p[j] += Integer(c) * support.rays(i, j);
    }
    int closed = 0, open = 0;
    for (std::size_t k = 0; k < f.cones.size(); ++k) {
      const auto mu = locate(f, k, p);
      bool nonneg = true, pos = true;
      for (const auto& x : mu) {
        nonneg = nonneg && x >= Rational(0);
        pos = pos && x > Rational(0);
      }
      closed += nonneg;
      open += pos;
    }
    EXPECT_GE(closed, 1);
    EXPECT_LE(open, 1);
  }
}

// Empty unimodular simplices on the vertex set, found by brute force.
bool is_empty_simplex(const std::vector<LatticePoint>& vertices, const std::vector<std::size_t>& s) {
  IntMatrix m(0, vertices[0].size());
  for (std::size_t i : s) m.append_row(vertices[i]);
  if (abs(det(m)) != Integer(1)) return false;
  return true;
}

std::size_t weight_one_count(const DiagonalSpec& s) {
  const auto g = MatrixGroup::closure(GroupSpec::from_diag(s.to_string()));
  return weight_one_class_count(g);
}

}  // namespace

TEST(Resolver, StellarSplitOfSmoothPlaneCone) {
  const Fan f = Fan::from_cone(quotient_lattice("1/1(0,0)"));
  const Fan g = stellar_subdivide(f, {Integer(1), Integer(1)});
  ASSERT_EQ(g.cones.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(cone_multiplicity(g.cone(i)), Integer(1));
}

TEST(Resolver, StellarAtBarycenter) {
  const auto c = quotient_lattice("1/3(1,1,1)");
  const Fan f = Fan::from_cone(c);
  const auto j = junior_points(c);
  ASSERT_EQ(j.size(), 1u);
  const Fan g = stellar_subdivide(f, j[0].coords);
  EXPECT_EQ(g.cones.size(), 3u);
  EXPECT_EQ(stellar_subdivide(f, f.rays[0]), f);
}

TEST(Resolver, StellarRejectsBadPoints) {
  const Fan f = Fan::from_cone(quotient_lattice("1/1(0,0)"));
  EXPECT_THROW(stellar_subdivide(f, {Integer(-1), Integer(1)}), InputError);
  EXPECT_THROW(stellar_subdivide(f, {Integer(2), Integer(2)}), InputError);
}

TEST(Resolver, AlreadyTerminalIsUnchanged) {
  const auto c = quotient_lattice("1/2(1,1,1,1)");
  const auto t = terminalize(c);
  EXPECT_TRUE(t.inserted.empty());
  EXPECT_EQ(t.output, Fan::from_cone(c));
  EXPECT_TRUE(t.crepant && t.terminal && t.volume_conserved);
  EXPECT_FALSE(t.smooth);
  EXPECT_EQ(t.multiplicities, std::vector<Integer>{Integer(2)});
}

TEST(Resolver, OneThird) {
  const auto t = terminalize(quotient_lattice("1/3(1,1,1)"));
  EXPECT_EQ(t.inserted.size(), 1u);
  EXPECT_EQ(t.multiplicities, std::vector<Integer>(3, Integer(1)));
  EXPECT_TRUE(t.crepant && t.terminal && t.smooth && t.volume_conserved);
}

TEST(Resolver, OneSixthAgainstBruteForce) {
  const auto c = quotient_lattice("1/6(1,2,3)");
  const auto t = terminalize(c);
  EXPECT_EQ(t.inserted.size(), 4u);
  EXPECT_EQ(t.output.rays.size(), 7u);
  EXPECT_EQ(t.output.cones.size(), 6u);
  for (const auto& cone : t.output.cones) EXPECT_TRUE(is_empty_simplex(t.output.rays, cone));
  EXPECT_TRUE(t.crepant && t.terminal && t.smooth && t.volume_conserved);
  EXPECT_TRUE(is_triangulation_of(t.output, c.cone));
  expect_covering(t.output, c.cone, 6);
}

TEST(Resolver, PartialSubdivisionIsNotTerminal) {
  const auto c = quotient_lattice("1/6(1,2,3)");
  const auto j = junior_points(c);
  const auto t = subdivide_with(c, {j[0].coords, j[1].coords});
  EXPECT_FALSE(t.terminal);
  EXPECT_TRUE(t.crepant);
  EXPECT_TRUE(t.volume_conserved);
}

TEST(Resolver, HeightTwoRayIsNotCrepant) {
  auto t = terminalize(quotient_lattice("1/3(1,1,1)"));
  t.output.rays.push_back(t.output.rays[0]);
  for (auto& x : t.output.rays.back()) x *= 2;
  EXPECT_FALSE(verify_crepant(t));
}

TEST(Resolver, Errors) {
  EXPECT_THROW(terminalize(quotient_lattice("1/5(1,1,1)")), NotGorenstein);
  EXPECT_NO_THROW(terminalize(quotient_lattice("1/5(1,1,1,2)")));
}

TEST(Resolver, Idempotent) {
  const auto t = terminalize(quotient_lattice("1/2(1,1,1,1)"));
  const QuotientCone again{t.input.lattice, t.output.cone(0), {}};
  EXPECT_TRUE(terminalize(again).inserted.empty());
}

TEST(Resolver, SL3CyclicPropertySweep) {
  for (int d = 2; d <= 25; ++d)
    for (int a = 1; a < d; ++a)
      for (int b = a; b < d; ++b) {
        const int c3 = ((-a - b) % d + d) % d;
        if (c3 < b) continue;
        if (std::gcd(std::gcd(d, a), std::gcd(b, c3)) != 1) continue;
        const auto s = DiagonalSpec::make(d, {a, b, c3});
        const auto cone = quotient_lattice(s);
        const auto t = terminalize(cone);
        EXPECT_TRUE(t.crepant && t.terminal && t.smooth && t.volume_conserved) << s.to_string();
        EXPECT_EQ(t.output.cones.size(), static_cast<std::size_t>(d)) << s.to_string();
        EXPECT_EQ(t.inserted.size(), junior_points(cone).size());
        if (d <= 12) {
          EXPECT_EQ(t.inserted.size(), weight_one_count(s)) << s.to_string();
          EXPECT_TRUE(is_triangulation_of(t.output, cone.cone)) << s.to_string();
        }
      }
}

TEST(Resolver, SL4RandomProperties) {
  std::mt19937 rng(4);
  int checked = 0;
  while (checked < 40) {
    const int d = std::uniform_int_distribution<int>(2, 14)(rng);
    std::uniform_int_distribution<int> e(0, d - 1);
    const int a = e(rng), b = e(rng), c = e(rng);
    const int last = ((-a - b - c) % d + d) % d;
    const auto s = DiagonalSpec::make(d, {a, b, c, last});
    const auto cone = quotient_lattice(s);
    if (classify_cone(cone) == Classification::not_canonical) continue;
    const auto t = terminalize(cone);
    EXPECT_TRUE(t.crepant && t.terminal && t.volume_conserved) << s.to_string();
    EXPECT_TRUE(is_triangulation_of(t.output, cone.cone)) << s.to_string();
    if (checked < 8) expect_covering(t.output, cone.cone, static_cast<std::uint32_t>(checked));
    ++checked;
  }
}

TEST(Resolver, PseudoReflectionGivesSmoothCone) {
  const auto c = quotient_lattice("1/2(1,0,0)");
  EXPECT_EQ(cone_multiplicity(c), Integer(1));
  EXPECT_FALSE(c.notes.empty());
}
