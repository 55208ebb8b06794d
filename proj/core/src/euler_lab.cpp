#include "qsing/euler_lab.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "qsing/error.hpp"
#include "qsing/linalg.hpp"
#include "qsing/resolver.hpp"
#include "qsing/spec_io.hpp"

namespace qsing {

using nlohmann::ordered_json;

namespace {

Integer as_int(std::size_t v) { return Integer(static_cast<long long>(v)); }

CheckResult make_result(std::string name, std::string input, std::vector<Integer> lhs,
                        std::vector<Integer> rhs, ordered_json cert) {
  CheckResult r{std::move(name), std::move(input), std::move(lhs), std::move(rhs), false, std::move(cert)};
  r.pass = r.lhs == r.rhs;
  return r;
}

ordered_json integers_to_json(const std::vector<Integer>& v) {
  ordered_json out = ordered_json::array();
  for (const Integer& x : v) {
    if (x.fits_int64())
      out.push_back(x.to_int64());
    else
      out.push_back(x.to_string());
  }
  return out;
}

std::optional<DiagonalSpec> diagonal_spec_of(const FieldMatrix& g) {
  if (!is_diagonal(g)) return std::nullopt;
  std::vector<RootOfUnity> roots;
  int d = 1;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    auto r = g(i, i).as_root_of_unity();
    if (!r) return std::nullopt;
    roots.push_back(*r);
    d = std::lcm(d, r->order);
  }
  std::vector<long long> a;
  for (const RootOfUnity& r : roots) a.push_back(static_cast<long long>(r.exponent) * (d / r.order));
  return DiagonalSpec::make(d, std::move(a));
}

// Eigenspaces of one element. Diagonal elements keep coordinate masks so
// intersections reduce to popcounts.
struct EigenData {
  bool diagonal = false;
  std::vector<std::uint64_t> masks;
  std::vector<FieldMatrix> spaces;
};

EigenData eigen_data(const FieldMatrix& g) {
  EigenData e;
  const std::size_t n = g.rows();
  if (is_diagonal(g) && n <= 64) {
    e.diagonal = true;
    std::vector<bool> done(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      std::uint64_t m = 0;
      for (std::size_t j = i; j < n; ++j)
        if (!done[j] && g(j, j) == g(i, i)) {
          m |= std::uint64_t{1} << j;
          done[j] = true;
        }
      e.masks.push_back(m);
    }
    return e;
  }
  const AgeProfile prof = element_age(g);
  std::set<int> exps(prof.exponents.begin(), prof.exponents.end());
  for (int a : exps) e.spaces.push_back(eigenspace(g, Cyclotomic::root_of_unity(prof.order, a)));
  return e;
}

FieldMatrix coordinate_space(std::uint64_t mask, std::size_t n, int conductor) {
  FieldMatrix m(0, n);
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1) {
      std::vector<Cyclotomic> row(n, Cyclotomic(conductor));
      row[i] = Cyclotomic::one(conductor);
      m.append_row(row);
    }
  return m;
}

std::vector<FieldMatrix> as_spaces(const EigenData& e, std::size_t n, int conductor) {
  if (!e.diagonal) return e.spaces;
  std::vector<FieldMatrix> out;
  for (std::uint64_t m : e.masks) out.push_back(coordinate_space(m, n, conductor));
  return out;
}

// Euler number of the joint fixed locus in P(V): sum of dimensions of the
// pairwise eigenspace intersections.
std::size_t joint_fixed_euler(const EigenData& a, const EigenData& b, std::size_t n, int conductor) {
  std::size_t s = 0;
  if (a.diagonal && b.diagonal) {
    for (std::uint64_t x : a.masks)
      for (std::uint64_t y : b.masks) s += static_cast<std::size_t>(std::popcount(x & y));
    return s;
  }
  for (const FieldMatrix& x : as_spaces(a, n, conductor))
    for (const FieldMatrix& y : as_spaces(b, n, conductor)) s += subspace_intersection(x, y).rows();
  return s;
}

std::size_t fixed_euler(const EigenData& a, std::size_t n) {
  if (a.diagonal) return n;
  std::size_t s = 0;
  for (const FieldMatrix& x : a.spaces) s += x.rows();
  return s;
}

// Reid-Tai has no separate verdict for the trivial group: a smooth cone counts as terminal.
Classification as_group_kind(Classification k) {
  return k == Classification::smooth ? Classification::terminal : k;
}

bool same_elements(const MatrixGroup& a, const MatrixGroup& b) {
  if (a.order() != b.order()) return false;
  return std::all_of(b.elements().begin(), b.elements().end(),
                     [&](const FieldMatrix& m) { return a.index_of(m).has_value(); });
}

std::vector<std::size_t> indices_in(const MatrixGroup& big, const MatrixGroup& sub) {
  std::vector<std::size_t> out;
  for (const FieldMatrix& m : sub.elements()) {
    auto i = big.index_of(m);
    if (!i) throw InputError("stabilizer is not contained in the extension");
    out.push_back(*i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string monomial_kind(const MatrixGroup& g) {
  if (g.dimension() == 3) {
    std::set<std::vector<int>> perms;
    bool monomial = true;
    for (const FieldMatrix& m : g.elements()) {
      auto p = monomial_permutation_part(m);
      if (!p) {
        monomial = false;
        break;
      }
      perms.insert(*p);
    }
    if (!g.is_abelian() && module_type(g) == std::vector<int>{2, 1}) return "B";
    if (monomial) {
      if (perms.size() == 1) return "A";
      if (perms.size() == 3) return "C";
      if (perms.size() == 6) return "D";
    }
    if (g.is_abelian()) return "A";
    return "other";
  }
  return "other";
}

std::vector<FieldMatrix> with_extra(const MatrixGroup& g, const FieldMatrix& x) {
  std::vector<FieldMatrix> gens = g.generators();
  gens.push_back(x);
  return gens;
}

}  // namespace

ordered_json CheckResult::to_json() const {
  ordered_json j;
  j["name"] = name;
  j["input"] = input;
  j["lhs"] = integers_to_json(lhs);
  j["rhs"] = integers_to_json(rhs);
  j["verdict"] = pass ? "pass" : "fail";
  j["certificate"] = certificate;
  return j;
}

// ---------------------------------------------------------------------------

CheckResult crosscheck_abelian(const MatrixGroup& g, const QuotientCone& cone, const std::string& input) {
  if (!g.is_abelian()) throw InputError("crosscheck_abelian needs an abelian group");
  if (!g.is_special()) throw InputError("crosscheck_abelian needs an SL(n) group");
  const std::size_t n = g.dimension();
  const Integer order = as_int(g.order());
  const DhvwEuler dhvw = dhvw_euler_linear(g);
  const std::size_t w1 = weight_one_class_count(g);
  const std::size_t junior = junior_points(cone).size();
  const Terminalization t = terminalize(cone);
  const Classification kc = classify_cone(cone);
  const Classification kg = reid_tai_classify(g).kind;
  std::vector<Integer> lhs = {cone_multiplicity(cone),
                              as_int(g.class_count()),
                              dhvw.euler,
                              as_int(junior),
                              fan_orbifold_euler(t.output),
                              as_int(t.output.rays.size()),
                              Integer(t.crepant ? 1 : 0),
                              Integer(t.terminal ? 1 : 0),
                              Integer(t.volume_conserved ? 1 : 0),
                              Integer(static_cast<int>(as_group_kind(kc)))};
  std::vector<Integer> rhs = {order, order, order, as_int(w1), order, as_int(n + w1),
                              Integer(1), Integer(1), Integer(1), Integer(static_cast<int>(kg))};
  ordered_json cert;
  cert["order"] = g.order();
  cert["junior_count"] = junior;
  cert["weight_one_classes"] = w1;
  cert["classification"] = to_string(kc);
  cert["reid_tai"] = to_string(kg);
  cert["cone_count"] = t.output.cones.size();
  cert["smooth"] = t.smooth;
  return make_result("crosscheck_abelian", input, std::move(lhs), std::move(rhs), std::move(cert));
}

CheckResult crosscheck_abelian(const DiagonalSpec& spec) {
  const auto g = MatrixGroup::closure(std::vector<FieldMatrix>{spec.matrix()});
  return crosscheck_abelian(g, quotient_lattice(spec), spec.to_string());
}

// ---------------------------------------------------------------------------

CheckResult blowup_euler_check(const MatrixGroup& g, const std::string& input) {
  const std::size_t n = g.dimension();
  const auto zi = g.index_of(scalar_matrix(n, Cyclotomic::root_of_unity(static_cast<int>(n), 1)));
  if (!zi) throw InputError("blowup check needs the scalars of order n in the group");
  const int m = g.conductor();

  // Canonical coset representative of g Z_n: least index in the coset.
  std::vector<std::size_t> zpow = {g.identity_index()};
  for (std::size_t k = 1; k < n; ++k) zpow.push_back(g.multiply(zpow.back(), *zi));
  std::vector<std::size_t> rep(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    std::size_t best = i;
    for (std::size_t z : zpow) best = std::min(best, g.multiply(i, z));
    rep[i] = best;
  }
  std::vector<std::size_t> bar;  // elements of G/Z_n by representative
  for (std::size_t i = 0; i < g.order(); ++i)
    if (rep[i] == i) bar.push_back(i);

  // Classes of G/Z_n under conjugation by the generators.
  std::map<std::size_t, std::size_t> class_of;
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t r : bar) {
    if (class_of.count(r)) continue;
    std::vector<std::size_t> orbit = {r};
    class_of[r] = classes.size();
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (std::size_t s : g.generator_indices()) {
        const std::size_t c = rep[g.multiply(g.multiply(s, orbit[k]), g.inverse_index(s))];
        if (class_of.emplace(c, classes.size()).second) orbit.push_back(c);
      }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  const std::size_t idr = rep[g.identity_index()];
  std::stable_partition(classes.begin(), classes.end(),
                        [&](const std::vector<std::size_t>& c) { return c.front() == idr; });

  std::map<std::size_t, EigenData> eig;
  for (std::size_t r : bar) eig.emplace(r, eigen_data(g.element(r)));

  Rational total(0);
  ordered_json terms = ordered_json::array();
  for (const auto& cls : classes) {
    const std::size_t x = cls.front();
    std::size_t cent = 0, sum = 0;
    for (std::size_t h : bar) {
      if (rep[g.multiply(g.multiply(h, x), g.inverse_index(h))] != x) continue;
      ++cent;
      sum += joint_fixed_euler(eig.at(x), eig.at(h), n, m);
    }
    const Rational term(as_int(sum), as_int(cent));
    total += term;
    ordered_json t;
    t["class_size"] = cls.size();
    t["fixed_euler"] = fixed_euler(eig.at(x), n);
    t["centralizer_order"] = cent;
    t["term"] = term.is_integer() ? ordered_json(term.num().to_int64()) : ordered_json(term.to_string());
    terms.push_back(std::move(t));
  }
  std::vector<Integer> lhs = {total.num()};
  if (!total.is_integer()) lhs.push_back(total.den());
  ordered_json cert;
  cert["order"] = g.order();
  cert["quotient_order"] = bar.size();
  cert["quotient_classes"] = classes.size();
  cert["terms"] = std::move(terms);
  return make_result("blowup_euler", input, std::move(lhs), {as_int(g.class_count())}, std::move(cert));
}

// ---------------------------------------------------------------------------

DiagonalSpec chart_weights(const DiagonalSpec& g) {
  const std::size_t n = g.dimension();
  if (n == 0) throw InputError("chart weights need a nonempty action");
  // Rows: exponent vectors of the chart coordinates x1, x_i / x1.
  IntMatrix e(n, n);
  e(0, 0) = 1;
  for (std::size_t i = 1; i < n; ++i) {
    e(i, 0) = -1;
    e(i, i) = 1;
  }
  std::vector<long long> w(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < n; ++j) s += e(i, j) * Integer(g.a[j]);
    w[i] = floor_mod(s, Integer(g.d)).to_int64();
  }
  return DiagonalSpec::make(g.d, std::move(w));
}

CheckResult pseudo_reflection_certificate(const MatrixGroup& g, const std::string& input) {
  const std::size_t n = g.dimension();
  if (!contains_center(g, n)) throw InputError("pseudo-reflection certificate needs the scalars of order n");
  const DiagonalSpec scalar = DiagonalSpec::make(static_cast<int>(n), std::vector<long long>(n, 1));
  const DiagonalSpec w = chart_weights(scalar);
  std::vector<Integer> lhs, rhs;
  for (int a : w.a) lhs.emplace_back(a);
  rhs.assign(n, Integer(0));
  rhs[0] = 1;
  ordered_json cert;
  cert["scalar"] = scalar.to_string();
  cert["chart_weights"] = w.to_string();
  ordered_json gens = ordered_json::array();
  for (const FieldMatrix& x : g.generators())
    if (auto s = diagonal_spec_of(x)) gens.push_back({{"generator", s->to_string()}, {"chart_weights", chart_weights(*s).to_string()}});
  cert["generators"] = std::move(gens);
  return make_result("pseudo_reflection", input, std::move(lhs), std::move(rhs), std::move(cert));
}

// ---------------------------------------------------------------------------

CheckResult class_fiber_sum_check(const MatrixGroup& g, const std::vector<Cyclotomic>& line,
                                  const std::string& input) {
  const LineStabilizer ls = generic_line_stabilizer(g, line);
  if (!ls.quotient_cyclic) throw InputError("the quotient by the line stabilizer is not cyclic");
  const ClassMap cm = induced_class_map(g, ls.stabilizer);
  std::size_t sum = 0;
  for (std::size_t f : cm.fibers) sum += f;
  ordered_json cert;
  cert["order"] = g.order();
  cert["stabilizer_order"] = ls.stabilizer.size();
  cert["quotient_order"] = cm.quotient_order;
  cert["fibers"] = cm.fibers;
  cert["class_count"] = cm.class_count;
  return make_result("class_fiber_sum", input, {as_int(sum)}, {as_int(g.class_count())}, std::move(cert));
}

// ---------------------------------------------------------------------------

CheckResult type22_terminal_check(const MatrixGroup& g, const std::string& input) {
  if (g.dimension() != 4) throw InputError("type (2,2) check needs a group in dimension 4");
  std::size_t s1 = 0, s2 = 0;
  for (const FieldMatrix& x : g.elements()) {
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 2; j < 4; ++j)
        if (!x(i, j).is_zero() || !x(j, i).is_zero()) throw InputError("group is not block diagonal 2+2");
    const bool id1 = x(0, 0).is_one() && x(1, 1).is_one() && x(0, 1).is_zero() && x(1, 0).is_zero();
    const bool id2 = x(2, 2).is_one() && x(3, 3).is_one() && x(2, 3).is_zero() && x(3, 2).is_zero();
    s1 += id1;
    s2 += id2;
  }
  const Classification k = reid_tai_classify(g).kind;
  ordered_json cert;
  cert["order"] = g.order();
  cert["stabilizer_orders"] = {s1, s2};
  cert["classification"] = to_string(k);
  if (s1 == 1 && s2 == 1) {
    cert["mode"] = "implication";
    return make_result("type22_terminal", input, {Integer(k == Classification::terminal ? 1 : 0)}, {Integer(1)},
                       std::move(cert));
  }
  cert["mode"] = "witness";
  cert["witness_summand"] = s1 > 1 ? 1 : 2;
  return make_result("type22_terminal", input, {Integer(1)}, {Integer(1)}, std::move(cert));
}

// ---------------------------------------------------------------------------

CheckResult trichotomy_scan(const MatrixGroup& stab, const MatrixGroup& prime, const std::string& input) {
  if (stab.dimension() != 3 || prime.dimension() != 3) throw InputError("trichotomy scan needs groups in SL(3)");
  ordered_json cert;
  const FieldMatrix w3 = scalar_matrix(3, Cyclotomic::root_of_unity(3, 1));
  if (stab.index_of(w3)) {
    cert["precondition"] = "stabilizer contains omega_3";
    return make_result("trichotomy", input, {Integer(1)}, {Integer(0)}, std::move(cert));
  }
  const auto sub = indices_in(prime, stab);
  const ClassMap cm = induced_class_map(prime, sub);  // checks normality and a cyclic quotient
  const std::string ks = monomial_kind(stab);
  const std::string kp = monomial_kind(prime);
  const bool alt1 = ks == "B" && kp == "B";
  bool alt2 = false;
  if (ks == "C" || ks == "D") alt2 = same_elements(prime, MatrixGroup::closure(with_extra(stab, w3)));
  bool alt3a = false, alt3b = false;
  if (ks == "C" && kp == "D") {
    const FieldMatrix r = matrix_R(3);
    alt3a = same_elements(prime, MatrixGroup::closure(with_extra(stab, r)));
    alt3b = same_elements(prime, MatrixGroup::closure(with_extra(stab, w3 * r)));
  }
  const bool alt3 = alt3a || alt3b;
  cert["stabilizer_order"] = stab.order();
  cert["extension_order"] = prime.order();
  cert["quotient_order"] = cm.quotient_order;
  cert["stabilizer_type"] = ks;
  cert["extension_type"] = kp;
  cert["alternatives"] = {alt1, alt2, alt3};
  if (alt3) cert["branch"] = alt3a ? "R" : "omega_3 R";
  const int holds = int(alt1) + int(alt2) + int(alt3);
  return make_result("trichotomy", input, {Integer(holds)}, {Integer(1)}, std::move(cert));
}

// ---------------------------------------------------------------------------

CheckResult commutator_identity_check() {
  const FieldMatrix t = matrix_T(3);
  const FieldMatrix ti = t.transpose();
  const FieldMatrix w3 = scalar_matrix(3, Cyclotomic::root_of_unity(3, 1));
  int ok = 0;
  ordered_json cases = ordered_json::array();
  for (int i = 0; i < 3; ++i) {
    const DiagonalSpec x = DiagonalSpec::make(3, {i, i + 1, i + 2});
    const DiagonalSpec xi = DiagonalSpec::make(3, {-i, -i - 1, -i - 2});
    const bool holds = t * x.matrix() * ti * xi.matrix() == w3;
    ok += holds;
    cases.push_back({{"x", x.to_string()}, {"holds", holds}});
  }
  return make_result("commutator_omega3", "1/3(i,i+1,i+2)", {Integer(ok)}, {Integer(3)},
                     ordered_json{{"cases", std::move(cases)}});
}

CheckResult phi_cube_check(int d) {
  if (d < 1) throw InputError("phi_cube_check needs d >= 1");
  const FieldMatrix t = matrix_T(d);
  const FieldMatrix ti = t.transpose();
  long long ok = 0;
  ordered_json failures = ordered_json::array();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const FieldMatrix phi = DiagonalSpec::make(d, {a, b, -a - b}).matrix();
      const FieldMatrix phi_inv = DiagonalSpec::make(d, {-a, -b, a + b}).matrix();
      const FieldMatrix f = phi_inv * t * phi * ti;
      const FieldMatrix lhs = ti * f * t * inverse(f);
      const FieldMatrix cube = DiagonalSpec::make(d, {3 * a, 3 * b, -3 * (a + b)}).matrix();
      if (lhs == cube)
        ++ok;
      else
        failures.push_back(DiagonalSpec::make(d, {a, b, -a - b}).to_string());
    }
  return make_result("phi_cube", "d=" + std::to_string(d), {Integer(ok)}, {Integer(static_cast<long long>(d) * d)},
                     ordered_json{{"cases", static_cast<long long>(d) * d}, {"failures", std::move(failures)}});
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> run_parallel(const std::vector<std::function<CheckResult()>>& tasks, std::size_t workers) {
  std::vector<CheckResult> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  workers = std::max<std::size_t>(1, std::min(workers, tasks.size()));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<std::vector<FieldMatrix>> blowup_family(std::size_t n, std::size_t max_order) {
  // Subgroups of the diagonal torus of exponent L, generated by omega_n and
  // one SL vector; deduplicated by element set.
  std::vector<std::vector<FieldMatrix>> out;
  if (n < 2) return out;
  const int max_l = n == 2 ? static_cast<int>(max_order) : (n == 3 ? 24 : 16);
  using Vec = std::vector<int>;
  std::set<std::pair<int, std::set<Vec>>> seen;
  auto gen_matrix = [&](int l, const Vec& v) {
    return DiagonalSpec::make(l, std::vector<long long>(v.begin(), v.end())).matrix();
  };
  for (int l = static_cast<int>(n); l <= max_l; l += static_cast<int>(n)) {
    const Vec omega(n, l / static_cast<int>(n));
    std::vector<Vec> extras;
    if (n == 2) {
      extras.push_back({1, l - 1});
    } else {
      Vec v(n, 0);
      std::function<void(std::size_t, int)> rec = [&](std::size_t i, int sum) {
        if (i + 1 == n) {
          v[i] = ((-sum) % l + l) % l;
          extras.push_back(v);
          return;
        }
        for (int a = 0; a < l; ++a) {
          v[i] = a;
          rec(i + 1, sum + a);
        }
      };
      rec(0, 0);
    }
    for (const Vec& x : extras) {
      std::set<Vec> elems;
      std::vector<Vec> queue = {Vec(n, 0)};
      elems.insert(queue[0]);
      bool too_big = false;
      for (std::size_t k = 0; k < queue.size() && !too_big; ++k)
        for (const Vec* s : {&omega, &x}) {
          Vec y(n);
          for (std::size_t i = 0; i < n; ++i) y[i] = (queue[k][i] + (*s)[i]) % l;
          if (elems.insert(y).second) queue.push_back(y);
          if (elems.size() > max_order) {
            too_big = true;
            break;
          }
        }
      if (too_big) continue;
      // Exponent of the group, to store it at its own level.
      int e = 1;
      for (const Vec& y : elems) {
        int o = 1;
        for (int c : y) o = std::lcm(o, l / std::gcd(l, c));
        e = std::lcm(e, o);
      }
      std::set<Vec> key;
      for (const Vec& y : elems) {
        Vec z(n);
        for (std::size_t i = 0; i < n; ++i) z[i] = y[i] / (l / e);
        key.insert(z);
      }
      if (!seen.emplace(e, key).second) continue;
      out.push_back({gen_matrix(l, omega), gen_matrix(l, x)});
    }
  }
  return out;
}

namespace {

std::vector<std::filesystem::path> corpus_files(const std::string& dir, const std::string& sub) {
  std::vector<std::filesystem::path> out;
  const std::filesystem::path p = std::filesystem::path(dir) / sub;
  if (dir.empty() || !std::filesystem::is_directory(p)) throw InputError("corpus directory not found: " + p.string());
  for (const auto& e : std::filesystem::directory_iterator(p))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::string group_label(const std::vector<FieldMatrix>& gens) {
  std::string s = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    auto d = diagonal_spec_of(gens[i]);
    s += d ? d->to_string() : "matrix";
  }
  return s + ">";
}

CheckResult projective_euler_case(int index, std::mt19937_64& rng) {
  const std::size_t n = 1 + rng() % 6;
  const std::size_t k = 1 + rng() % 3;
  std::vector<FieldMatrix> gens;
  std::vector<std::string> labels;
  std::size_t oracle = 0;
  std::vector<std::vector<long long>> weights;
  const int d = 2 + static_cast<int>(rng() % 11);
  for (std::size_t g = 0; g < k; ++g) {
    std::vector<long long> a(n + 1);
    for (auto& x : a) x = static_cast<long long>(rng() % d);
    const DiagonalSpec s = DiagonalSpec::make(d, a);
    gens.push_back(s.matrix());
    labels.push_back(s.to_string());
    weights.push_back(a);
  }
  // Coordinates with equal weight vectors span one joint eigenspace.
  std::set<std::vector<long long>> chars;
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<long long> c;
    for (const auto& w : weights) c.push_back(w[i]);
    chars.insert(c);
  }
  oracle = chars.size();
  const ProjectiveFixedLocus fl = projective_fixed_euler(gens);
  ordered_json cert;
  cert["n"] = n;
  cert["generators"] = labels;
  cert["component_dims"] = fl.component_dims;
  cert["components"] = oracle;
  char buf[32];
  std::snprintf(buf, sizeof buf, "case-%03d", index);
  return make_result("projective_fixed_euler", buf, {fl.euler}, {as_int(n + 1)}, std::move(cert));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"abelian", "blowup", "euler-proj", "cclass-sum",
                                                 "type22", "trichotomy", "claims"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opt) {
  std::vector<std::function<CheckResult()>> tasks;
  const std::size_t max_order = opt.max_order;
  if (suite == "abelian") {
    for (int d = 1; d <= opt.max_d3; ++d)
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          tasks.push_back([=] { return crosscheck_abelian(DiagonalSpec::make(d, {a, b, -a - b})); });
    for (int d = 1; d <= opt.max_d4; ++d)
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          for (int c = 0; c < d; ++c)
            tasks.push_back([=] { return crosscheck_abelian(DiagonalSpec::make(d, {a, b, c, -a - b - c})); });
  } else if (suite == "blowup") {
    for (std::size_t n : {2, 3, 4})
      for (auto& gens : blowup_family(n, 200)) {
        tasks.push_back([gens, max_order] {
          return blowup_euler_check(MatrixGroup::closure(gens, max_order), group_label(gens));
        });
      }
    for (const auto& path : corpus_files(opt.corpus_dir, "groups")) {
      const GroupSpec spec = read_group_spec_file(path);
      const auto g = MatrixGroup::closure(spec, max_order);
      if (!contains_center(g)) continue;
      const std::string label = path.filename().string();
      tasks.push_back([g, label] { return blowup_euler_check(g, label); });
      tasks.push_back([g, label] { return pseudo_reflection_certificate(g, label); });
    }
  } else if (suite == "euler-proj") {
    std::mt19937_64 rng(20240101);
    for (int i = 0; i < 200; ++i) {
      // Cases are drawn sequentially so they do not depend on the worker count.
      CheckResult r = projective_euler_case(i, rng);
      tasks.push_back([r] { return r; });
    }
  } else if (suite == "cclass-sum") {
    for (const auto& path : corpus_files(opt.corpus_dir, "cclass-sum")) {
      const auto j = read_json_file(path);
      if (!j.contains("group") || !j.contains("line")) throw InputError(path.filename().string() + ": needs \"group\" and \"line\"");
      const GroupSpec spec = group_spec_from_json(j["group"]);
      const std::string label = path.filename().string();
      tasks.push_back([spec, j, label, max_order] {
        const auto g = MatrixGroup::closure(spec, max_order);
        const auto line = cyclotomic_vector_from_json(j["line"], spec.conductor, "line");
        return class_fiber_sum_check(g, line, label);
      });
    }
    for (int d = 2; d <= 6; ++d)
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          for (int c = 0; c < d; ++c)
            tasks.push_back([=] {
              const DiagonalSpec s = DiagonalSpec::make(d, {a, b, c, -a - b - c});
              const auto g = MatrixGroup::closure(std::vector<FieldMatrix>{s.matrix()});
              std::vector<Cyclotomic> axis(4, Cyclotomic(d));
              axis[3] = Cyclotomic::one(d);
              return class_fiber_sum_check(g, axis, s.to_string() + " axis 4");
            });
  } else if (suite == "type22") {
    for (int d = 1; d <= 20; ++d) {
      for (int a = 1; a < d; ++a) {
        if (std::gcd(a, d) != 1) continue;
        tasks.push_back([=] {
          const DiagonalSpec s = DiagonalSpec::make(d, {1, -1, a, -a});
          return type22_terminal_check(MatrixGroup::closure(std::vector<FieldMatrix>{s.matrix()}), s.to_string());
        });
      }
      tasks.push_back([=] {
        const DiagonalSpec s = DiagonalSpec::make(d, {1, -1, 0, 0});
        return type22_terminal_check(MatrixGroup::closure(std::vector<FieldMatrix>{s.matrix()}), s.to_string());
      });
    }
    for (const auto& path : corpus_files(opt.corpus_dir, "type22")) {
      const GroupSpec spec = read_group_spec_file(path);
      const std::string label = path.filename().string();
      tasks.push_back([spec, label, max_order] {
        return type22_terminal_check(MatrixGroup::closure(spec, max_order), label);
      });
    }
  } else if (suite == "trichotomy") {
    for (const auto& path : corpus_files(opt.corpus_dir, "trichotomy")) {
      const auto j = read_json_file(path);
      if (!j.contains("stabilizer") || !j.contains("extension"))
        throw InputError(path.filename().string() + ": needs \"stabilizer\" and \"extension\"");
      const GroupSpec s = group_spec_from_json(j["stabilizer"]);
      const GroupSpec p = group_spec_from_json(j["extension"]);
      const std::string label = path.filename().string();
      tasks.push_back([s, p, label, max_order] {
        return trichotomy_scan(MatrixGroup::closure(s, max_order), MatrixGroup::closure(p, max_order), label);
      });
    }
  } else if (suite == "claims") {
    tasks.push_back([] { return commutator_identity_check(); });
    for (int d = 1; d <= opt.max_d_claims; ++d) tasks.push_back([d] { return phi_cube_check(d); });
  } else {
    std::string valid;
    for (const auto& s : suite_names()) valid += (valid.empty() ? "" : ", ") + s;
    throw InputError("unknown suite '" + suite + "'; valid suites: " + valid);
  }
  auto results = run_parallel(tasks, opt.workers);
  std::stable_sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::tie(a.name, a.input) < std::tie(b.name, b.input);
  });
  return results;
}

}  // namespace qsing
