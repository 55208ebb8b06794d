#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsing/group.hpp"
#include "qsing/integer.hpp"
#include "qsing/toric.hpp"

namespace qsing {

// Outcome of one exact identity check; pass iff lhs == rhs.
struct CheckResult {
  std::string name;
  std::string input;
  std::vector<Integer> lhs;
  std::vector<Integer> rhs;
  bool pass = false;
  nlohmann::ordered_json certificate;

  nlohmann::ordered_json to_json() const;
};

// Cyclic or abelian SL(n) group against its cone: multiplicity, |G|, |Cl(G)|
// and the DHVW number agree, junior points match weight-one classes, the
// terminalization verifies and the two classifications coincide.
// Throws InputError for non-abelian groups.
CheckResult crosscheck_abelian(const MatrixGroup& g, const QuotientCone& cone, const std::string& input);
CheckResult crosscheck_abelian(const DiagonalSpec& spec);

// Class sum over G/Z_n of the Euler numbers chi(P(V)^g / N(g)) against |Cl(G)|.
// Throws InputError unless G contains the scalars of order n.
CheckResult blowup_euler_check(const MatrixGroup& g, const std::string& input);

// Weights of a diagonal action in the chart (x1, x2/x1, ..., xn/x1),
// computed by applying the chart's exponent matrix.
DiagonalSpec chart_weights(const DiagonalSpec& g);
// omega_n I acts in the chart as a pseudo-reflection (omega_n, 1, ..., 1).
// Throws InputError unless G contains the scalars of order n.
CheckResult pseudo_reflection_certificate(const MatrixGroup& g, const std::string& input);

// Sum of the fibers of Cl(G) -> Cl(G / G_eta) against |Cl(G)|, for an
// invariant line eta.
CheckResult class_fiber_sum_check(const MatrixGroup& g, const std::vector<Cyclotomic>& line,
                                  const std::string& input);

// G in SL(2) x SL(2), block diagonal: trivial stabilizers of both summands
// force a terminal quotient; otherwise the nontrivial stabilizer is reported.
// Throws InputError if G is not block diagonal 2+2.
CheckResult type22_terminal_check(const MatrixGroup& g, const std::string& input);

// Tests the three alternatives for a monomial stabilizer G_eta normal in G'
// with cyclic quotient; passes iff exactly one holds. When G_eta contains
// omega_3 the result fails with a precondition note. Throws InputError if
// G_eta is not a normal subgroup of G' with cyclic quotient.
CheckResult trichotomy_scan(const MatrixGroup& stabilizer, const MatrixGroup& prime, const std::string& input);

// Commutator identity T x T^-1 x^-1 = omega_3 for x = 1/3(i, i+1, i+2).
CheckResult commutator_identity_check();
// T^-1 f T f^-1 = phi^3 with f = phi^-1 T phi T^-1 over all phi = 1/d(a, b, -a-b).
CheckResult phi_cube_check(int d);

struct SuiteOptions {
  int max_d3 = 25;
  int max_d4 = 16;
  int max_d_claims = 30;
  std::string corpus_dir;
  std::size_t workers = 1;
  std::size_t max_order = kDefaultMaxOrder;
};

const std::vector<std::string>& suite_names();
// Results sorted by (name, input), independent of the worker count.
// Throws InputError for unknown suites.
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opt);

// Runs tasks on `workers` threads; results keep the task order.
std::vector<CheckResult> run_parallel(const std::vector<std::function<CheckResult()>>& tasks,
                                      std::size_t workers);

// Diagonal abelian groups containing the scalars used by the blowup suite.
std::vector<std::vector<FieldMatrix>> blowup_family(std::size_t n, std::size_t max_order);

}  // namespace qsing
