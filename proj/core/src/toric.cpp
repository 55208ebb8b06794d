#include "qsing/toric.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "qsing/error.hpp"
#include "qsing/linalg.hpp"

namespace qsing {

namespace {

LatticePoint row_times(const LatticePoint& x, const IntMatrix& m) {
  LatticePoint out(m.cols(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out[j] += x[i] * m(i, j);
  }
  return out;
}

Integer content(const LatticePoint& v) {
  Integer g = 0;
  for (const Integer& x : v) g = gcd(g, x);
  return g;
}

// Visits every point of the half-open parallelepiped of the rays. The callback
// receives the N-coordinates and the barycentric numerators over `den` > 0.
template <class F>
void for_each_box_point(const SimplicialCone& c, F&& visit) {
  const IntMatrix& r = c.rays;
  const std::size_t n = r.rows();
  const SmithForm s = smith_normal_form(r);
  const Integer dv = det(s.v);
  IntMatrix v_inv = adjugate(s.v);
  if (dv.sign() < 0)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v_inv(i, j) = -v_inv(i, j);
  Integer den = det(r);
  IntMatrix adj = adjugate(r);
  if (den.sign() < 0) {
    den = -den;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) adj(i, j) = -adj(i, j);
  }
  std::vector<long long> bound(n);
  for (std::size_t i = 0; i < n; ++i) bound[i] = s.d(i, i).to_int64();
  std::vector<long long> y(n, 0);
  for (;;) {
    LatticePoint yy(n);
    for (std::size_t i = 0; i < n; ++i) yy[i] = y[i];
    const LatticePoint x = row_times(yy, v_inv);
    LatticePoint mu = row_times(x, adj);
    for (Integer& m : mu) m = floor_mod(m, den);
    LatticePoint coords = row_times(mu, r);
    for (Integer& q : coords) q = divexact(q, den);
    visit(coords, mu, den);
    std::size_t k = 0;
    while (k < n && ++y[k] == bound[k]) y[k++] = 0;
    if (k == n) break;
  }
}

bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

// ---------------------------------------------------------------------------
// Lattices and cones

Lattice Lattice::standard(std::size_t n) { return Lattice{n, Integer(1), int_identity(n)}; }

Lattice Lattice::from_torsion(std::size_t n, const std::vector<std::vector<Rational>>& torsion) {
  Integer s = 1;
  for (const auto& t : torsion) {
    if (t.size() != n) throw ShapeError("torsion vector has the wrong length");
    for (const Rational& q : t) s = lcm(s, q.den());
  }
  IntMatrix gens(0, n);
  for (std::size_t i = 0; i < n; ++i) {
    LatticePoint row(n, Integer(0));
    row[i] = s;
    gens.append_row(row);
  }
  for (const auto& t : torsion) {
    LatticePoint row;
    for (const Rational& q : t) row.push_back(q.num() * divexact(s, q.den()));
    gens.append_row(row);
  }
  const IntMatrix h = hermite_normal_form(gens).h;
  IntMatrix basis = h.block(h.rows() - n, 0, n, n);
  Integer g = s;
  for (const Integer& x : basis.data()) g = gcd(g, x);
  if (!g.is_one()) {
    s = divexact(s, g);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) basis(i, j) = divexact(basis(i, j), g);
  }
  return Lattice{n, s, std::move(basis)};
}

std::vector<Rational> Lattice::to_ambient(const LatticePoint& x) const {
  const LatticePoint y = row_times(x, basis);
  std::vector<Rational> out;
  out.reserve(y.size());
  for (const Integer& v : y) out.emplace_back(v, scale);
  return out;
}

SimplicialCone SimplicialCone::from_rays(IntMatrix rays) {
  if (!rays.square() || rays.rows() == 0)
    throw InputError("a simplicial cone needs n linearly independent rays in dimension n, got " + rays.shape());
  const Integer d = det(rays);
  if (d.is_zero()) throw InputError("cone rays are not linearly independent");
  const IntMatrix adj = adjugate(rays);
  SimplicialCone c;
  for (std::size_t i = 0; i < rays.rows(); ++i) {
    Integer sum = 0;
    for (std::size_t j = 0; j < rays.cols(); ++j) sum += adj(i, j);
    c.gorenstein.emplace_back(sum, d);
  }
  c.rays = std::move(rays);
  return c;
}

bool SimplicialCone::is_gorenstein() const {
  return std::all_of(gorenstein.begin(), gorenstein.end(), [](const Rational& q) { return q.is_integer(); });
}

Rational SimplicialCone::height(const LatticePoint& x) const {
  Rational h = 0;
  for (std::size_t i = 0; i < x.size(); ++i) h += gorenstein[i] * Rational(x[i]);
  return h;
}

QuotientCone quotient_lattice(const std::vector<std::vector<Rational>>& torsion, std::size_t n) {
  QuotientCone q;
  q.lattice = Lattice::from_torsion(n, torsion);
  const Lattice& lat = q.lattice;
  const Integer db = det(lat.basis);
  const IntMatrix adj = adjugate(lat.basis);
  IntMatrix rays(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    LatticePoint r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = divexact(lat.scale * adj(i, j), db);
    const Integer g = content(r);
    if (!g.is_one()) {
      q.notes.push_back("e_" + std::to_string(i + 1) + " is not primitive in N; using e_" + std::to_string(i + 1) +
                        "/" + g.to_string() + " (pseudo-reflection)");
      for (Integer& x : r) x = divexact(x, g);
    }
    for (std::size_t j = 0; j < n; ++j) rays(i, j) = r[j];
  }
  q.cone = SimplicialCone::from_rays(std::move(rays));
  return q;
}

QuotientCone quotient_lattice(const DiagonalSpec& spec) {
  Integer g = spec.d;
  for (int a : spec.a) g = gcd(g, Integer(a));
  const long long gg = g.to_int64();
  std::vector<Rational> t;
  for (int a : spec.a) t.emplace_back(Integer(a / gg), Integer(spec.d / gg));
  QuotientCone q = quotient_lattice(std::vector<std::vector<Rational>>{t}, spec.dimension());
  if (gg > 1) {
    DiagonalSpec reduced = spec;
    reduced.d = static_cast<int>(spec.d / gg);
    for (int& a : reduced.a) a = static_cast<int>(a / gg);
    q.notes.insert(q.notes.begin(), spec.to_string() + " has a kernel of order " + std::to_string(gg) +
                                        "; using the faithful action " + reduced.to_string());
  }
  return q;
}

QuotientCone quotient_lattice(std::string_view diag) { return quotient_lattice(DiagonalSpec::parse(diag)); }

QuotientCone abelianize(const MatrixGroup& g) {
  if (!g.is_abelian()) throw InputError("abelianize requires an abelian group");
  const std::size_t n = g.dimension();
  const auto& gens = g.generators();
  const bool diagonal = std::all_of(gens.begin(), gens.end(), [](const FieldMatrix& m) { return is_diagonal(m); });
  FieldMatrix s = field_identity(n, g.conductor());
  if (!diagonal) {
    std::vector<FieldMatrix> parts{field_identity(n, g.conductor())};
    for (const FieldMatrix& h : gens) {
      const AgeProfile prof = element_age(h);
      std::vector<int> ex = prof.exponents;
      ex.erase(std::unique(ex.begin(), ex.end()), ex.end());
      std::vector<FieldMatrix> next;
      for (const FieldMatrix& w : parts)
        for (int a : ex) {
          FieldMatrix meet = subspace_intersection(w, eigenspace(h, Cyclotomic::root_of_unity(prof.order, a)));
          if (meet.rows() > 0) next.push_back(std::move(meet));
        }
      parts = std::move(next);
    }
    FieldMatrix cols(0, n);
    for (const FieldMatrix& w : parts)
      for (std::size_t i = 0; i < w.rows(); ++i) cols.append_row(w.row_vector(i));
    if (cols.rows() != n) throw InternalError("joint eigenspaces do not span the space");
    s = cols.transpose();
  }
  const FieldMatrix s_inv = diagonal ? s : inverse(s);
  std::vector<std::vector<Rational>> torsion;
  for (const FieldMatrix& h : gens) {
    const FieldMatrix d = diagonal ? h : s_inv * h * s;
    if (!is_diagonal(d)) throw InternalError("eigenbasis does not diagonalise a generator");
    std::vector<Rational> t;
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = d(i, i).as_root_of_unity();
      if (!r) throw InputError("generator eigenvalue is not a root of unity");
      t.emplace_back(Integer(r->exponent), Integer(r->order));
    }
    torsion.push_back(std::move(t));
  }
  QuotientCone q = quotient_lattice(torsion, n);
  if (!diagonal) q.notes.push_back("group diagonalised in a joint eigenbasis");
  return q;
}

Integer cone_multiplicity(const SimplicialCone& c) { return abs(det(c.rays)); }
Integer cone_multiplicity(const QuotientCone& c) { return cone_multiplicity(c.cone); }

std::vector<BoxPoint> box_points(const SimplicialCone& c, const Lattice& lattice) {
  std::vector<BoxPoint> out;
  for_each_box_point(c, [&](const LatticePoint& coords, const LatticePoint& mu, const Integer& den) {
    BoxPoint b;
    b.coords = coords;
    b.height = 0;
    for (const Integer& m : mu) {
      b.barycentric.emplace_back(m, den);
      b.height += b.barycentric.back();
    }
    b.ambient = lattice.to_ambient(coords);
    out.push_back(std::move(b));
  });
  std::sort(out.begin(), out.end(), [](const BoxPoint& a, const BoxPoint& b) { return lex_less(a.ambient, b.ambient); });
  return out;
}

std::vector<BoxPoint> box_points(const QuotientCone& c) { return box_points(c.cone, c.lattice); }

std::vector<BoxPoint> junior_points(const QuotientCone& c) {
  if (!c.is_gorenstein()) throw NotGorenstein("junior points need a Gorenstein cone");
  std::vector<BoxPoint> out;
  for (BoxPoint& b : box_points(c))
    if (b.height == Rational(1)) out.push_back(std::move(b));
  return out;
}

Classification classify_cone(const SimplicialCone& c) {
  if (!c.is_gorenstein()) throw NotGorenstein("cone is not Gorenstein");
  if (cone_multiplicity(c).is_one()) return Classification::smooth;
  bool terminal = true;
  bool canonical = true;
  for_each_box_point(c, [&](const LatticePoint&, const LatticePoint& mu, const Integer& den) {
    Integer sum = 0;
    for (const Integer& m : mu) sum += m;
    if (sum.is_zero()) return;
    if (sum <= den) terminal = false;
    if (sum < den) canonical = false;
  });
  if (terminal) return Classification::terminal;
  return canonical ? Classification::canonical_not_terminal : Classification::not_canonical;
}

Classification classify_cone(const QuotientCone& c) { return classify_cone(c.cone); }

// ---------------------------------------------------------------------------
// Fans

Fan Fan::from_cone(const QuotientCone& c) {
  Fan f;
  f.dim = c.dimension();
  f.lattice = c.lattice;
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < c.cone.rays.rows(); ++i) {
    f.rays.push_back(c.cone.rays.row_vector(i));
    all.push_back(i);
  }
  f.cones.push_back(all);
  f.canonicalize();
  return f;
}

void Fan::canonicalize() {
  std::vector<std::size_t> order(rays.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rays[a] < rays[b]; });
  std::vector<std::size_t> where(rays.size());
  std::vector<LatticePoint> sorted;
  sorted.reserve(rays.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    where[order[k]] = k;
    sorted.push_back(std::move(rays[order[k]]));
  }
  rays = std::move(sorted);
  for (auto& c : cones) {
    for (std::size_t& i : c) i = where.at(i);
    std::sort(c.begin(), c.end());
  }
  std::sort(cones.begin(), cones.end());
}

SimplicialCone Fan::cone(std::size_t i) const {
  IntMatrix m(0, dim);
  for (std::size_t r : cones.at(i)) m.append_row(rays.at(r));
  return SimplicialCone::from_rays(std::move(m));
}

Integer fan_orbifold_euler(const Fan& f) {
  Integer total = 0;
  for (std::size_t i = 0; i < f.cones.size(); ++i) {
    if (f.cones[i].size() != f.dim)
      throw InputError("cone " + std::to_string(i) + " is not a full-dimensional simplicial cone");
    total += cone_multiplicity(f.cone(i));
  }
  return total;
}

std::string write_fan(const Fan& f) {
  std::ostringstream os;
  os << "# format_version 1\n";
  os << "lattice n=" << f.dim << "\n";
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    os << "ray " << i << ":";
    for (const Integer& x : f.rays[i]) os << " " << x;
    os << "\n";
  }
  for (const auto& c : f.cones) {
    os << "cone:";
    for (std::size_t r : c) os << " " << r;
    os << "\n";
  }
  return os.str();
}

Fan parse_fan(std::string_view text) {
  Fan f;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) {
    throw InputError("fan line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line.substr(first));
    std::string word;
    ls >> word;
    if (!have_header) {
      std::string rest;
      ls >> rest;
      if (word != "lattice" || rest.rfind("n=", 0) != 0) fail("expected 'lattice n=<n>'");
      const std::string num = rest.substr(2);
      std::size_t n = 0;
      auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
      if (ec != std::errc() || p != num.data() + num.size() || n == 0) fail("invalid dimension");
      f.dim = n;
      f.lattice = Lattice::standard(n);
      have_header = true;
      continue;
    }
    if (word == "ray") {
      std::string idx;
      ls >> idx;
      if (idx.empty() || idx.back() != ':') fail("expected 'ray <i>:'");
      if (idx.substr(0, idx.size() - 1) != std::to_string(f.rays.size())) fail("ray indices must be consecutive from 0");
      LatticePoint v;
      std::string tok;
      while (ls >> tok) {
        try {
          v.push_back(Integer::parse(tok));
        } catch (const InputError& e) {
          fail(e.what());
        }
      }
      if (v.size() != f.dim) fail("ray has " + std::to_string(v.size()) + " coordinates, expected " + std::to_string(f.dim));
      f.rays.push_back(std::move(v));
    } else if (word == "cone:") {
      std::vector<std::size_t> c;
      std::string tok;
      while (ls >> tok) {
        std::size_t i = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), i);
        if (ec != std::errc() || p != tok.data() + tok.size() || i >= f.rays.size()) fail("invalid ray index '" + tok + "'");
        c.push_back(i);
      }
      if (c.empty()) fail("empty cone");
      std::sort(c.begin(), c.end());
      f.cones.push_back(std::move(c));
    } else {
      fail("unknown record '" + word + "'");
    }
  }
  if (!have_header) throw InputError("fan text has no 'lattice' header");
  return f;
}

}  // namespace qsing
