#include "qsing/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "qsing/error.hpp"
#include "qsing/linalg.hpp"

namespace qsing {

namespace {

long long mod_floor(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

class DiagParser {
 public:
  explicit DiagParser(std::string_view text) : s_(text) {}

  DiagonalSpec run() {
    skip();
    expect_number_literal(1);
    skip();
    expect('/');
    skip();
    const long long d = integer();
    if (d <= 0) fail("denominator must be positive");
    skip();
    expect('(');
    std::vector<long long> a;
    for (;;) {
      skip();
      a.push_back(integer());
      skip();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      break;
    }
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing characters");
    return DiagonalSpec::make(static_cast<int>(d), std::move(a));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("diag \"" + std::string(s_) + "\": " + what + " at position " +
                     std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  long long integer() {
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    long long v = 0;
    const char* p = begin;
    if (p < end && *p == '+') ++p;
    auto [ptr, ec] = std::from_chars(p, end, v);
    if (ec == std::errc::result_out_of_range || (ec == std::errc() && (v > 1000000000LL || v < -1000000000LL)))
      fail("integer out of range");
    if (ec != std::errc() || ptr == p) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }
  void expect_number_literal(long long want) {
    const std::size_t at = pos_;
    if (integer() != want) {
      pos_ = at;
      fail("expected numerator 1");
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool is_scalar(const FieldMatrix& m) {
  if (!is_diagonal(m)) return false;
  for (std::size_t i = 1; i < m.rows(); ++i)
    if (m(i, i) != m(0, 0)) return false;
  return true;
}

// Span of the orbit of `space` under the given matrices.
FieldMatrix invariant_span(const FieldMatrix& space, const std::vector<FieldMatrix>& gens) {
  FieldMatrix basis = row_space(space);
  for (bool grew = true; grew;) {
    grew = false;
    for (const FieldMatrix& g : gens) {
      for (std::size_t i = 0; i < basis.rows(); ++i) {
        const auto w = g.apply(basis.row_vector(i));
        if (!subspace_contains(basis, w)) {
          FieldMatrix next = basis;
          next.append_row(w);
          basis = row_space(next);
          grew = true;
        }
      }
    }
  }
  return basis;
}

// Columns of the returned matrix are the rows of a followed by the rows of b.
FieldMatrix columns_from_rows(const FieldMatrix& a, const FieldMatrix& b) {
  FieldMatrix stacked = a;
  for (std::size_t i = 0; i < b.rows(); ++i) stacked.append_row(b.row_vector(i));
  return stacked.transpose();
}

// Projection onto `sub` along the span of the coordinate vectors that are not
// pivots of its echelon basis, averaged over the group so it commutes with it.
FieldMatrix averaged_projector(const FieldMatrix& sub, const std::vector<FieldMatrix>& rep,
                               const std::vector<FieldMatrix>& rep_inv) {
  const std::size_t d = sub.cols();
  const EchelonForm e = rref(sub);
  const int c = common_conductor(e.r);
  std::vector<bool> pivot(d, false);
  for (std::size_t p : e.pivots) pivot[p] = true;
  FieldMatrix others(0, d);
  for (std::size_t j = 0; j < d; ++j) {
    if (pivot[j]) continue;
    std::vector<Cyclotomic> v(d, Cyclotomic(c));
    v[j] = Cyclotomic::one(c);
    others.append_row(v);
  }
  const FieldMatrix base = columns_from_rows(e.r.block(0, 0, e.pivots.size(), d), others);
  FieldMatrix keep(d, d, Cyclotomic(c));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) keep(i, i) = Cyclotomic::one(c);
  const FieldMatrix p = base * keep * inverse(base);
  FieldMatrix sum(d, d, Cyclotomic(c));
  for (std::size_t g = 0; g < rep.size(); ++g) sum += rep[g] * p * rep_inv[g];
  return sum.scaled(Cyclotomic(1, Rational(Integer(1), Integer(static_cast<long long>(rep.size())))));
}

std::vector<int> distinct_exponents(const FieldMatrix& g) {
  std::vector<int> ex = element_age(g).exponents;
  ex.erase(std::unique(ex.begin(), ex.end()), ex.end());
  return ex;
}

// Recursive splitting of a representation given by one matrix per group element.
std::optional<std::vector<int>> decompose(const MatrixGroup& grp, const std::vector<FieldMatrix>& rep) {
  const std::size_t d = rep.front().rows();
  if (d == 1) return std::vector<int>{1};
  Cyclotomic norm(1);
  for (const auto& cls : grp.classes()) {
    const Cyclotomic chi = trace(rep[cls.front()]);
    norm += chi * chi.conj() * Cyclotomic(1, Rational(static_cast<long long>(cls.size())));
  }
  norm = norm * Cyclotomic(1, Rational(Integer(1), Integer(static_cast<long long>(grp.order()))));
  if (norm.is_one()) return std::vector<int>{static_cast<int>(d)};

  std::vector<FieldMatrix> gens;
  for (std::size_t i : grp.generator_indices()) gens.push_back(rep[i]);

  auto proper = [&](const FieldMatrix& space) -> std::optional<FieldMatrix> {
    if (space.rows() == 0) return std::nullopt;
    FieldMatrix w = invariant_span(space, gens);
    if (w.rows() < d) return w;
    return std::nullopt;
  };

  std::optional<FieldMatrix> found;
  const FieldMatrix id = field_identity(d);
  for (std::size_t i = 0; i < d && !found; ++i) found = proper(id.block(i, 0, 1, d));
  std::vector<FieldMatrix> eigenspaces;
  for (std::size_t x = 0; x < grp.order() && !found; ++x) {
    if (is_scalar(rep[x])) continue;
    const int r = grp.element_order(x);
    for (int a : distinct_exponents(rep[x])) {
      const FieldMatrix e = eigenspace(rep[x], Cyclotomic::root_of_unity(r, a));
      eigenspaces.push_back(e);
      if ((found = proper(e))) break;
      for (std::size_t i = 0; i < e.rows() && !found; ++i) found = proper(e.block(i, 0, 1, d));
      if (found) break;
    }
  }
  for (std::size_t i = 0; i < eigenspaces.size() && !found; ++i) {
    for (std::size_t j = i + 1; j < eigenspaces.size() && !found; ++j) {
      const FieldMatrix meet = subspace_intersection(eigenspaces[i], eigenspaces[j]);
      if ((found = proper(meet))) break;
      for (std::size_t k = 0; k < meet.rows() && !found; ++k) found = proper(meet.block(k, 0, 1, d));
    }
  }
  if (!found) return std::nullopt;

  std::vector<FieldMatrix> rep_inv;
  rep_inv.reserve(rep.size());
  for (std::size_t g = 0; g < rep.size(); ++g) rep_inv.push_back(rep[grp.inverse_index(g)]);
  const FieldMatrix w = *found;
  const FieldMatrix comp = kernel(averaged_projector(w, rep, rep_inv));
  if (w.rows() + comp.rows() != d) throw InternalError("invariant complement has the wrong dimension");
  const FieldMatrix s = columns_from_rows(w, comp);
  const FieldMatrix s_inv = inverse(s);
  const std::size_t k = w.rows();
  std::vector<FieldMatrix> top, bottom;
  for (const FieldMatrix& g : rep) {
    const FieldMatrix c = s_inv * g * s;
    top.push_back(c.block(0, 0, k, k));
    bottom.push_back(c.block(k, k, d - k, d - k));
  }
  auto a = decompose(grp, top);
  auto b = decompose(grp, bottom);
  if (!a || !b) return std::nullopt;
  a->insert(a->end(), b->begin(), b->end());
  std::sort(a->begin(), a->end(), std::greater<>());
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// Specs

DiagonalSpec DiagonalSpec::parse(std::string_view text) { return DiagParser(text).run(); }

DiagonalSpec DiagonalSpec::make(int d, std::vector<long long> exponents) {
  if (d <= 0) throw InputError("diag denominator must be positive, got " + std::to_string(d));
  if (exponents.empty()) throw InputError("diag needs at least one exponent");
  DiagonalSpec s;
  s.d = d;
  for (long long e : exponents) s.a.push_back(static_cast<int>(mod_floor(e, d)));
  return s;
}

bool DiagonalSpec::is_special() const {
  long long sum = 0;
  for (int x : a) sum += x;
  return sum % d == 0;
}

FieldMatrix DiagonalSpec::matrix() const {
  FieldMatrix m(a.size(), a.size(), Cyclotomic(d));
  for (std::size_t i = 0; i < a.size(); ++i) m(i, i) = Cyclotomic::root_of_unity(d, a[i]);
  return m;
}

std::string DiagonalSpec::to_string() const {
  std::string s = "1/" + std::to_string(d) + "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

GroupSpec GroupSpec::from_diag(std::string_view text) {
  GroupSpec g;
  g.diag = DiagonalSpec::parse(text);
  g.name = g.diag->to_string();
  g.conductor = g.diag->d;
  return g;
}

std::vector<FieldMatrix> GroupSpec::all_generators() const {
  std::vector<FieldMatrix> out = generators;
  if (diag) out.push_back(diag->matrix());
  return out;
}

std::size_t GroupSpec::dimension() const {
  if (!generators.empty()) return generators.front().rows();
  if (diag) return diag->dimension();
  return 0;
}

// ---------------------------------------------------------------------------
// Closure

MatrixGroup MatrixGroup::closure(const GroupSpec& spec, std::size_t max_order) {
  return closure(spec.all_generators(), max_order);
}

MatrixGroup MatrixGroup::closure(const std::vector<FieldMatrix>& generators, std::size_t max_order) {
  if (generators.empty()) throw InputError("a group needs at least one generator");
  const std::size_t n = generators.front().rows();
  if (n == 0) throw ShapeError("generators must be at least 1x1");
  int conductor = 1;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const FieldMatrix& g = generators[k];
    if (!g.square() || g.rows() != n)
      throw ShapeError("generator " + std::to_string(k) + " has shape " + g.shape() + ", expected " +
                       std::to_string(n) + "x" + std::to_string(n));
    conductor = std::lcm(conductor, common_conductor(g));
  }
  MatrixGroup grp;
  grp.dim_ = n;
  grp.conductor_ = conductor;
  std::vector<Cyclotomic> gen_det;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    FieldMatrix g = promote(generators[k], conductor);
    Cyclotomic dg = det(g);
    if (dg.is_zero()) throw InputError("generator " + std::to_string(k) + " is not invertible");
    if (auto r = dg.as_root_of_unity()) dg = Cyclotomic::root_of_unity(r->order, r->exponent);
    grp.generators_.push_back(std::move(g));
    gen_det.push_back(std::move(dg));
  }

  std::vector<FieldMatrix> elems;
  std::vector<Cyclotomic> dets;
  std::unordered_map<FieldMatrix, std::size_t> seen;
  elems.push_back(field_identity(n, conductor));
  dets.push_back(Cyclotomic::one(1));
  seen.emplace(elems.back(), 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t k = 0; k < grp.generators_.size(); ++k) {
      FieldMatrix y = elems[head] * grp.generators_[k];
      if (seen.count(y)) continue;
      if (elems.size() >= max_order) throw GroupTooLarge(elems.size() + 1, max_order);
      seen.emplace(y, elems.size());
      Cyclotomic dy = dets[head] * gen_det[k];
      elems.push_back(std::move(y));
      dets.push_back(std::move(dy));
    }
  }

  std::vector<std::size_t> perm(elems.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return elems[a] < elems[b]; });
  grp.elements_.reserve(elems.size());
  grp.det_.reserve(elems.size());
  for (std::size_t i : perm) {
    grp.elements_.push_back(std::move(elems[i]));
    grp.det_.push_back(std::move(dets[i]));
  }
  grp.finish();
  return grp;
}

void MatrixGroup::finish() {
  const std::size_t n = elements_.size();
  index_.clear();
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i], i);
  identity_ = index_.at(field_identity(dim_, conductor_));
  for (const FieldMatrix& g : generators_) generator_indices_.push_back(index_.at(g));

  abelian_ = true;
  for (std::size_t a = 0; a < generators_.size() && abelian_; ++a)
    for (std::size_t b = a + 1; b < generators_.size() && abelian_; ++b)
      if (generators_[a] * generators_[b] != generators_[b] * generators_[a]) abelian_ = false;

  inverse_.assign(n, n);
  order_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (order_[i] != 0) continue;
    std::vector<std::size_t> pw{i};
    while (pw.back() != identity_) pw.push_back(multiply(pw.back(), i));
    const int r = static_cast<int>(pw.size());
    for (int k = 1; k <= r; ++k) {
      const std::size_t x = pw[static_cast<std::size_t>(k - 1)];
      order_[x] = r / std::gcd(k, r);
      inverse_[x] = k == r ? identity_ : pw[static_cast<std::size_t>(r - k - 1)];
    }
  }

  class_of_.assign(n, n);
  classes_.clear();
  std::vector<std::size_t> gen_inv;
  for (std::size_t g : generator_indices_) gen_inv.push_back(inverse_[g]);
  for (std::size_t i = 0; i < n; ++i) {
    if (class_of_[i] != n) continue;
    const std::size_t id = classes_.size();
    std::vector<std::size_t> cls{i};
    class_of_[i] = id;
    if (!abelian_) {
      for (std::size_t head = 0; head < cls.size(); ++head) {
        for (std::size_t k = 0; k < generator_indices_.size(); ++k) {
          const std::size_t y = multiply(multiply(gen_inv[k], cls[head]), generator_indices_[k]);
          if (class_of_[y] == n) {
            class_of_[y] = id;
            cls.push_back(y);
          }
        }
      }
      std::sort(cls.begin(), cls.end());
    }
    classes_.push_back(std::move(cls));
  }
}

std::optional<std::size_t> MatrixGroup::index_of(const FieldMatrix& m) const {
  if (m.rows() != dim_ || m.cols() != dim_) return std::nullopt;
  const int c = common_conductor(m);
  if (conductor_ % c == 0) {
    auto it = index_.find(promote(m, conductor_));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    bool eq = true;
    for (std::size_t k = 0; k < m.data().size() && eq; ++k) eq = m.data()[k] == elements_[i].data()[k];
    if (eq) return i;
  }
  return std::nullopt;
}

std::size_t MatrixGroup::multiply(std::size_t i, std::size_t j) const {
  auto it = index_.find(elements_.at(i) * elements_.at(j));
  if (it == index_.end()) throw InternalError("group is not closed under multiplication");
  return it->second;
}

std::size_t MatrixGroup::power(std::size_t i, long long k) const {
  const long long r = order_.at(i);
  k = mod_floor(k, r);
  std::size_t result = identity_;
  std::size_t base = i;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

bool MatrixGroup::is_special() const {
  return std::all_of(det_.begin(), det_.end(), [](const Cyclotomic& d) { return d.is_one(); });
}

std::vector<std::size_t> MatrixGroup::centralizer(std::size_t g) const {
  if (g >= order()) throw InputError("element index out of range");
  std::vector<std::size_t> out;
  if (abelian_) {
    out.resize(order());
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
  }
  const FieldMatrix& x = elements_[g];
  for (std::size_t h = 0; h < order(); ++h)
    if (x * elements_[h] == elements_[h] * x) out.push_back(h);
  return out;
}

std::vector<std::size_t> MatrixGroup::centralizer(const FieldMatrix& g) const {
  auto i = index_of(g);
  if (!i) throw InputError("matrix is not an element of the group");
  return centralizer(*i);
}

void MatrixGroup::require_subgroup(const std::vector<std::size_t>& sub) const {
  if (sub.empty()) throw InputError("subgroup is empty");
  std::vector<bool> in(order(), false);
  for (std::size_t i : sub) {
    if (i >= order()) throw InputError("subgroup index out of range");
    in[i] = true;
  }
  if (!in[identity_]) throw InputError("subgroup does not contain the identity");
  for (std::size_t a : sub)
    for (std::size_t b : sub)
      if (!in[multiply(a, b)]) throw InputError("subset is not closed under multiplication");
}

bool MatrixGroup::is_normal(const std::vector<std::size_t>& sub) const {
  std::vector<bool> in(order(), false);
  for (std::size_t i : sub) in.at(i) = true;
  for (std::size_t g : generator_indices_)
    for (std::size_t s : sub)
      if (!in[multiply(multiply(inverse_[g], s), g)]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Ages and classification

std::size_t AgeProfile::fixed_dimension() const {
  return static_cast<std::size_t>(std::count(exponents.begin(), exponents.end(), 0));
}

AgeProfile element_age_by_characters(const FieldMatrix& g) {
  if (!g.square()) throw ShapeError("element_age needs a square matrix");
  const std::size_t n = g.rows();
  const int cond = common_conductor(g);
  const FieldMatrix id = field_identity(n, cond);
  std::vector<Cyclotomic> traces{trace(id)};
  FieldMatrix p = promote(g, cond);
  constexpr int kMaxOrder = 100000;
  while (p != id) {
    traces.push_back(trace(p));
    if (static_cast<int>(traces.size()) > kMaxOrder) throw InputError("element does not have finite order");
    p = p * g;
  }
  const int r = static_cast<int>(traces.size());
  const int big = std::lcm(cond, r);
  for (Cyclotomic& t : traces) t = t.promote(big);
  AgeProfile prof;
  prof.order = r;
  const Rational inv_r(Integer(1), Integer(r));
  for (int j = 0; j < r; ++j) {
    Cyclotomic s(big);
    for (int k = 0; k < r; ++k) {
      const long long e = mod_floor(-static_cast<long long>(j) * k, r) * (big / r);
      s += traces[static_cast<std::size_t>(k)] * Cyclotomic::root_of_unity(big, e);
    }
    if (!s.is_rational() || !s.rational_part().is_integer() || s.rational_part().sign() < 0 ||
        !(s.rational_part().num() % Integer(r)).is_zero())
      throw InternalError("eigenvalue multiplicity is not a non-negative integer");
    const long long mult = divexact(s.rational_part().num(), Integer(r)).to_int64();
    for (long long c = 0; c < mult; ++c) prof.exponents.push_back(j);
  }
  if (prof.exponents.size() != n) throw InternalError("eigenvalue multiplicities do not sum to n");
  Integer sum = 0;
  for (int a : prof.exponents) sum += a;
  prof.age = Rational(sum, Integer(r));
  return prof;
}

AgeProfile element_age(const FieldMatrix& g) {
  if (!g.square()) throw ShapeError("element_age needs a square matrix");
  if (is_diagonal(g)) {
    std::vector<RootOfUnity> roots;
    bool ok = true;
    for (std::size_t i = 0; i < g.rows() && ok; ++i) {
      auto r = g(i, i).as_root_of_unity();
      if (!r) ok = false;
      else roots.push_back(*r);
    }
    if (ok) {
      AgeProfile prof;
      for (const RootOfUnity& r : roots) prof.order = std::lcm(prof.order, r.order);
      Integer sum = 0;
      for (const RootOfUnity& r : roots) {
        prof.exponents.push_back(r.exponent * (prof.order / r.order));
        sum += prof.exponents.back();
      }
      std::sort(prof.exponents.begin(), prof.exponents.end());
      prof.age = Rational(sum, Integer(prof.order));
      return prof;
    }
  }
  return element_age_by_characters(g);
}

std::vector<AgeProfile> class_ages(const MatrixGroup& g) {
  std::vector<AgeProfile> out;
  out.reserve(g.class_count());
  for (const auto& cls : g.classes()) out.push_back(element_age(g.element(cls.front())));
  return out;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::smooth: return "smooth";
    case Classification::terminal: return "terminal";
    case Classification::canonical_not_terminal: return "canonical_not_terminal";
    case Classification::not_canonical: return "not_canonical";
    case Classification::not_gorenstein: return "not_gorenstein";
  }
  return "unknown";
}

ReidTaiResult reid_tai_classify(const MatrixGroup& g) {
  ReidTaiResult res;
  const auto ages = class_ages(g);
  const std::size_t n = g.dimension();
  std::size_t reflections = 0;
  bool all_above_one = true;
  bool all_at_least_one = true;
  for (std::size_t c = 0; c < ages.size(); ++c) {
    if (g.class_representative(c) == g.identity_index()) continue;
    if (ages[c].fixed_dimension() + 1 == n) reflections += g.classes()[c].size();
    if (ages[c].age <= Rational(1)) all_above_one = false;
    if (ages[c].age < Rational(1)) all_at_least_one = false;
  }
  if (reflections > 0)
    res.warnings.push_back("SmallnessViolation: group contains " + std::to_string(reflections) +
                           " pseudo-reflection(s)");
  if (!g.is_special()) {
    res.kind = Classification::not_gorenstein;
  } else if (all_above_one) {
    res.kind = Classification::terminal;
  } else if (all_at_least_one) {
    res.kind = Classification::canonical_not_terminal;
  } else {
    throw InternalError("element of SL(n) with age below 1");
  }
  return res;
}

std::size_t weight_one_class_count(const MatrixGroup& g) {
  if (!g.is_special()) throw PreconditionViolation("weight-one classes are defined for SL(n) groups only");
  std::size_t count = 0;
  for (const AgeProfile& a : class_ages(g))
    if (a.age == Rational(1)) ++count;
  return count;
}

bool contains_center(const MatrixGroup& g, std::size_t n) {
  const Cyclotomic w = Cyclotomic::root_of_unity(static_cast<int>(n), 1);
  return g.index_of(scalar_matrix(g.dimension(), w)).has_value();
}

bool contains_center(const MatrixGroup& g) { return contains_center(g, g.dimension()); }

DhvwEuler dhvw_euler_linear(const MatrixGroup& g) {
  DhvwEuler out;
  out.euler = Integer(static_cast<long long>(g.class_count()));
  out.commuting_pairs = 0;
  for (const auto& cls : g.classes()) {
    const FieldMatrix& x = g.element(cls.front());
    if (is_diagonal(x)) {
      std::size_t ones = 0;
      for (std::size_t i = 0; i < x.rows(); ++i) ones += x(i, i).is_one();
      out.fixed_dims.push_back(ones);
    } else {
      out.fixed_dims.push_back(eigenspace(x, Cyclotomic::one(g.conductor())).rows());
    }
    const auto cent = g.centralizer(cls.front());
    out.commuting_pairs += Integer(static_cast<long long>(cls.size() * cent.size()));
  }
  out.burnside_ok = out.commuting_pairs == Integer(static_cast<long long>(g.order() * g.class_count()));
  return out;
}

// ---------------------------------------------------------------------------
// Module type

std::optional<std::vector<int>> module_type(const MatrixGroup& g) {
  const std::size_t n = g.dimension();
  if (g.is_abelian()) return std::vector<int>(n, 1);
  return decompose(g, g.elements());
}

std::string module_type_string(const std::optional<std::vector<int>>& t) {
  if (!t) return "Undetermined";
  std::string s = "(";
  for (std::size_t i = 0; i < t->size(); ++i) {
    if (i) s += ",";
    s += std::to_string((*t)[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Invariant lines and quotients

LineStabilizer generic_line_stabilizer(const MatrixGroup& g, const std::vector<Cyclotomic>& line) {
  if (line.size() != g.dimension()) throw ShapeError("line vector has the wrong length");
  std::size_t p = 0;
  while (p < line.size() && line[p].is_zero()) ++p;
  if (p == line.size()) throw InputError("line vector is zero");
  LineStabilizer out;
  const Cyclotomic inv = line[p].inverse();
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto w = g.element(i).apply(line);
    Cyclotomic c = w[p] * inv;
    for (std::size_t k = 0; k < line.size(); ++k)
      if (w[k] != c * line[k]) throw InputError("line is not invariant under the group");
    if (auto r = c.as_root_of_unity()) c = Cyclotomic::root_of_unity(r->order, r->exponent);
    if (c.is_one()) out.stabilizer.push_back(i);
    out.character.push_back(std::move(c));
  }
  out.quotient_order = g.order() / out.stabilizer.size();
  // The image is generated by zeta_q, q = |C|; h is the least element acting by it.
  out.quotient_cyclic = false;
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto r = out.character[i].as_root_of_unity();
    if (r && static_cast<std::size_t>(r->order) == out.quotient_order && r->exponent <= 1) {
      out.generator = i;
      out.quotient_cyclic = true;
      break;
    }
  }
  if (!out.quotient_cyclic) throw InternalError("image of the line character is not cyclic");
  return out;
}

ClassMap induced_class_map(const MatrixGroup& g, const std::vector<std::size_t>& normal_in) {
  const std::vector<std::size_t> normal = sorted_unique(normal_in);
  g.require_subgroup(normal);
  if (!g.is_normal(normal)) throw InputError("subgroup is not normal");
  const std::size_t none = g.order();
  std::vector<std::size_t> coset(g.order(), none);
  ClassMap out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coset[x] != none) continue;
    const std::size_t id = out.coset_representatives.size();
    out.coset_representatives.push_back(x);
    for (std::size_t s : normal) coset[g.multiply(x, s)] = id;
  }
  out.quotient_order = out.coset_representatives.size();
  bool cyclic = false;
  for (std::size_t x = 0; x < g.order() && !cyclic; ++x) {
    std::size_t k = 1;
    std::size_t y = x;
    while (coset[y] != coset[g.identity_index()]) {
      y = g.multiply(y, x);
      ++k;
    }
    cyclic = k == out.quotient_order;
  }
  if (!cyclic) throw InputError("quotient by the subgroup is not cyclic");
  out.fibers.assign(out.quotient_order, 0);
  for (const auto& cls : g.classes()) {
    const std::size_t c = coset[cls.front()];
    for (std::size_t x : cls)
      if (coset[x] != c) throw InternalError("conjugacy class meets two cosets of a cyclic quotient");
    ++out.fibers[c];
  }
  out.class_count = g.class_count();
  std::size_t sum = 0;
  for (std::size_t f : out.fibers) sum += f;
  if (sum != out.class_count) throw InternalError("class fibers do not sum to the class count");
  return out;
}

FieldMatrix conjugate_by(const FieldMatrix& g, const FieldMatrix& s, const FieldMatrix& s_inv) {
  return s_inv * g * s;
}

PrimedGroup primed_group(const MatrixGroup& g, const std::vector<Cyclotomic>& line, std::size_t max_order) {
  const std::size_t n = g.dimension();
  if (n < 2) throw InputError("primed group needs dimension at least 2");
  const LineStabilizer stab = generic_line_stabilizer(g, line);
  if (!stab.quotient_cyclic) throw InputError("quotient by the line stabilizer is not cyclic");

  std::vector<FieldMatrix> rep_inv;
  for (std::size_t i = 0; i < g.order(); ++i) rep_inv.push_back(g.element(g.inverse_index(i)));
  FieldMatrix line_row(0, n);
  line_row.append_row(line);
  const FieldMatrix comp = kernel(averaged_projector(line_row, g.elements(), rep_inv));
  if (comp.rows() != n - 1) throw InternalError("invariant complement of the line has the wrong dimension");

  const FieldMatrix basis = columns_from_rows(comp, line_row);
  const FieldMatrix s_inv = inverse(basis);
  auto block_of = [&](std::size_t i) {
    const FieldMatrix c = conjugate_by(g.element(i), basis, s_inv);
    for (std::size_t k = 0; k + 1 < n; ++k)
      if (!c(k, n - 1).is_zero() || !c(n - 1, k).is_zero())
        throw InputError("group does not preserve a complement of the line");
    return c.block(0, 0, n - 1, n - 1);
  };

  const FieldMatrix h1 = block_of(stab.generator);
  const auto root = det(h1).as_root_of_unity();
  if (!root) throw InternalError("determinant of a finite-order block is not a root of unity");
  const int big_m = root->order;
  const long long k_inv = mod_floor(-static_cast<long long>(root->exponent), big_m);
  // lambda^(n-1) = det(h1)^-1; the candidates are zeta_{(n-1)M}^(k + M t), least exponent at t = 0.
  const int lam_order = static_cast<int>(n - 1) * big_m;
  Cyclotomic lambda = Cyclotomic::root_of_unity(lam_order, k_inv);
  if (auto r = lambda.as_root_of_unity()) lambda = Cyclotomic::root_of_unity(r->order, r->exponent);
  FieldMatrix h_prime = h1.scaled(lambda);

  std::vector<FieldMatrix> gens;
  std::vector<FieldMatrix> stab_blocks;
  for (std::size_t i : stab.stabilizer) stab_blocks.push_back(block_of(i));
  for (std::size_t i = 0; i < stab_blocks.size(); ++i)
    if (stab.stabilizer[i] != g.identity_index()) gens.push_back(stab_blocks[i]);
  gens.push_back(h_prime);
  MatrixGroup prime = MatrixGroup::closure(gens, max_order);
  std::vector<std::size_t> inside;
  for (const FieldMatrix& b : stab_blocks) {
    auto idx = prime.index_of(b);
    if (!idx) throw InternalError("stabilizer block missing from the primed group");
    inside.push_back(*idx);
  }
  inside = sorted_unique(std::move(inside));
  const std::size_t quotient = prime.order() / inside.size();
  return PrimedGroup{
      std::move(prime),
      basis,
      std::move(h_prime),
      std::move(lambda),
      stab.stabilizer.size(),
      quotient,
      std::move(inside),
      "G' is defined up to the choice of the root lambda_h; the root zeta_" + std::to_string(lam_order) +
          "^" + std::to_string(k_inv) + " of least exponent was used"};
}

// ---------------------------------------------------------------------------
// Monomial structure, projective fixed loci

std::optional<std::vector<int>> monomial_permutation_part(const FieldMatrix& g) {
  if (!g.square()) return std::nullopt;
  const std::size_t n = g.rows();
  std::vector<int> sigma(n, -1);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g(i, j).is_zero()) continue;
      if (sigma[i] != -1 || used[j]) return std::nullopt;
      sigma[i] = static_cast<int>(j);
      used[j] = true;
    }
    if (sigma[i] == -1) return std::nullopt;
  }
  return sigma;
}

std::string cycle_notation(const std::vector<int>& perm) {
  std::string s;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      if (j != i) s += " ";
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

ProjectiveFixedLocus projective_fixed_euler(const std::vector<FieldMatrix>& h) {
  if (h.empty()) throw InputError("projective_fixed_euler needs at least one matrix");
  const std::size_t n = h.front().rows();
  for (const FieldMatrix& m : h)
    if (!m.square() || m.rows() != n) throw ShapeError("matrices must all be square of the same size");
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = a + 1; b < h.size(); ++b)
      if (h[a] * h[b] != h[b] * h[a])
        throw InputError("fixed-locus formula needs commuting (abelian) input");
  std::vector<FieldMatrix> parts{field_identity(n)};
  for (const FieldMatrix& g : h) {
    const AgeProfile prof = element_age(g);
    std::vector<int> ex = prof.exponents;
    ex.erase(std::unique(ex.begin(), ex.end()), ex.end());
    std::vector<FieldMatrix> next;
    for (int a : ex) {
      const FieldMatrix e = eigenspace(g, Cyclotomic::root_of_unity(prof.order, a));
      for (const FieldMatrix& w : parts) {
        FieldMatrix meet = subspace_intersection(w, e);
        if (meet.rows() > 0) next.push_back(std::move(meet));
      }
    }
    parts = std::move(next);
  }
  ProjectiveFixedLocus out;
  out.euler = 0;
  for (const FieldMatrix& w : parts) {
    out.component_dims.push_back(w.rows());
    out.euler += Integer(static_cast<long long>(w.rows()));
  }
  std::sort(out.component_dims.begin(), out.component_dims.end(), std::greater<>());
  return out;
}

FieldMatrix matrix_T(int conductor) {
  FieldMatrix t(3, 3, Cyclotomic(conductor));
  t(0, 1) = t(1, 2) = t(2, 0) = Cyclotomic::one(conductor);
  return t;
}

FieldMatrix matrix_R(int conductor) {
  FieldMatrix r(3, 3, Cyclotomic(conductor));
  r(0, 0) = r(1, 2) = r(2, 1) = Cyclotomic(conductor, Rational(-1));
  return r;
}

FieldMatrix scalar_matrix(std::size_t n, const Cyclotomic& c) {
  FieldMatrix m(n, n, Cyclotomic(c.conductor()));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

}  // namespace qsing
