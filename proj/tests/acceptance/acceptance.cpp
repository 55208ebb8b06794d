// Prints one pass/fail line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qsing/cli.hpp"
#include "qsing/error.hpp"
#include "qsing/euler_lab.hpp"
#include "qsing/resolver.hpp"
#include "qsing/spec_io.hpp"
#include "qsing/toric.hpp"

#ifndef QSING_CORPUS_DIR
#define QSING_CORPUS_DIR ""
#endif

namespace {

using namespace qsing;
using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string corpus(const std::string& rel) { return std::string(QSING_CORPUS_DIR) + "/" + rel; }

ordered_json run_cli_json(const std::vector<std::string>& args, int& rc) {
  std::ostringstream out, err;
  rc = cli::run(args, out, err);
  const std::string text = out.str();
  const auto brace = text.find("\n{");
  if (brace == std::string::npos) return ordered_json();
  return ordered_json::parse(text.substr(brace + 1));
}

bool all_pass(const std::vector<CheckResult>& rs, Outcome& o) {
  for (const auto& r : rs)
    if (!r.pass) {
      o.fail(r.name + " " + r.input);
      return false;
    }
  return true;
}

SuiteOptions suite_options() {
  SuiteOptions opt;
  opt.corpus_dir = QSING_CORPUS_DIR;
  return opt;
}

// Specs 1/d(a,b,-a-b[-c]) with gcd(d, a, b, ...) = 1; the others repeat a smaller d.
std::vector<DiagonalSpec> faithful_sl_specs(int n, int max_d) {
  std::vector<DiagonalSpec> out;
  for (int d = 1; d <= max_d; ++d) {
    std::vector<long long> e(n, 0);
    const int free = n - 1;
    int total = 1;
    for (int i = 0; i < free; ++i) total *= d;
    for (int code = 0; code < total; ++code) {
      int c = code, g = d;
      long long sum = 0;
      for (int i = 0; i < free; ++i) {
        e[i] = c % d;
        c /= d;
        sum += e[i];
        g = std::gcd(g, static_cast<int>(e[i]));
      }
      e[free] = ((-sum) % d + d) % d;
      g = std::gcd(g, static_cast<int>(e[free]));
      if (g == 1) out.push_back(DiagonalSpec::make(d, e));
    }
  }
  return out;
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::string spec = "1/2(1,1,1,1)";
  int rc = 0;
  const auto a = run_cli_json({"analyze", "--group", spec, "--json", "-"}, rc);
  if (rc != 0 || a.is_null()) o.fail("analyze exit " + std::to_string(rc));
  else {
    if (a["group"]["classification"] != "terminal") o.fail("analyze classification");
    if (a["group"]["weight_one_classes"] != 0) o.fail("weight-one classes");
  }
  const auto r = run_cli_json({"resolve", "--group", spec, "--json", "-"}, rc);
  if (rc != 0 || r.is_null()) o.fail("resolve exit " + std::to_string(rc));
  else {
    const auto& z = r["toric"]["terminalization"];
    const std::string unchanged = write_fan(Fan::from_cone(quotient_lattice(spec)));
    if (r["toric"]["fan"] != unchanged || z["fan"] != unchanged) o.fail("resolve changed the cone");
    if (z["terminal"] != true) o.fail("resolve terminal flag");
    if (!z["inserted"].empty()) o.fail("resolve inserted rays");
  }
  const double s = seconds_since(t0);
  if (s >= 1.0) o.fail("runtime " + std::to_string(s) + " s");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const auto& s : faithful_sl_specs(3, 25)) {
    const QuotientCone c = quotient_lattice(s);
    const std::size_t junior = junior_points(c).size();
    const Classification before = classify_cone(c);
    const Terminalization t = terminalize(c);
    Integer sum = 0;
    for (const auto& m : t.multiplicities) sum += m;
    const std::string id = s.to_string();
    if (!t.smooth) o.fail(id + " not smooth");
    if (t.output.rays.size() != 3 + junior) o.fail(id + " ray count");
    if (sum != Integer(s.d)) o.fail(id + " multiplicity sum");
    if ((before == Classification::terminal || before == Classification::smooth) != (s.d == 1))
      o.fail(id + " terminal before resolution");
  }
  const double sec = seconds_since(t0);
  if (sec >= 10.0) o.fail("runtime " + std::to_string(sec) + " s");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const auto& s : faithful_sl_specs(4, 16)) {
    const Terminalization t = terminalize(quotient_lattice(s));
    Integer sum = 0;
    for (const auto& m : t.multiplicities) sum += m;
    const std::string id = s.to_string();
    if (!t.crepant) o.fail(id + " not crepant");
    if (!t.terminal) o.fail(id + " not terminal");
    if (sum != Integer(s.d)) o.fail(id + " multiplicity sum");
  }
  const double sec = seconds_since(t0);
  if (sec >= 60.0) o.fail("runtime " + std::to_string(sec) + " s");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto rs = run_suite("euler-proj", suite_options());
  if (rs.size() != 200) o.fail(std::to_string(rs.size()) + " cases");
  all_pass(rs, o);
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto rs = run_suite("blowup", suite_options());
  std::size_t family = 0;
  for (const auto& r : rs) {
    if (r.name != "blowup_euler") continue;
    if (!r.pass) o.fail(r.input);
    if (r.input.find(".json") != std::string::npos) continue;
    ++family;
    const Integer order(static_cast<long long>(r.certificate["order"].get<std::size_t>()));
    if (r.lhs.empty() || r.lhs[0] != order || r.rhs[0] != order) o.fail(r.input + " sides differ from |G|");
  }
  if (family == 0) o.fail("empty family");
  all_pass(rs, o);
  const auto q8 = MatrixGroup::closure(read_group_spec_file(corpus("groups/q8.json")));
  const CheckResult r = blowup_euler_check(q8, "q8");
  std::vector<long long> terms;
  for (const auto& t : r.certificate["terms"]) terms.push_back(t["term"].get<long long>());
  if (!r.pass || terms != std::vector<long long>{2, 1, 1, 1} || r.lhs[0] != Integer(5)) o.fail("Q8 terms");
  return o;
}

Outcome criterion6() {
  Outcome o;
  all_pass(run_suite("cclass-sum", suite_options()), o);
  const auto j = read_json_file(corpus("cclass-sum/f21_z4_axis4.json"));
  const GroupSpec spec = group_spec_from_json(j["group"]);
  const auto g = MatrixGroup::closure(spec);
  const CheckResult r =
      class_fiber_sum_check(g, cyclotomic_vector_from_json(j["line"], spec.conductor, "line"), "f21_z4");
  if (!r.pass) o.fail("f21_z4 check");
  if (r.certificate["fibers"] != ordered_json({5, 5, 5, 5})) o.fail("f21_z4 fibers");
  if (r.certificate["class_count"] != 20) o.fail("f21_z4 class count");
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto opt = suite_options();
  opt.max_d_claims = 30;
  const auto rs = run_suite("claims", opt);
  if (rs.size() != 31) o.fail(std::to_string(rs.size()) + " checks");
  all_pass(rs, o);
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t implications = 0, witnesses = 0;
  for (const auto& r : run_suite("type22", suite_options())) {
    if (!r.pass) o.fail(r.input);
    if (r.input.find(".json") != std::string::npos) continue;
    const bool trivial_twist = r.input.find(",0,0)") != std::string::npos && r.input.rfind("1/1(", 0) != 0;
    if (trivial_twist) {
      if (r.certificate["mode"] != "witness") o.fail(r.input + " no witness");
      ++witnesses;
    } else {
      if (r.certificate["mode"] != "implication" || r.certificate["stabilizer_orders"] != ordered_json({1, 1}) ||
          r.certificate["classification"] != "terminal")
        o.fail(r.input + " not terminal");
      ++implications;
    }
  }
  if (implications == 0 || witnesses == 0) o.fail("empty family");
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto rs = run_suite("trichotomy", suite_options());
  for (const char* need : {"g147_omega3.json", "g147_R.json", "g147_omega3R.json"}) {
    bool found = false;
    for (const auto& r : rs) found |= r.input == need;
    if (!found) o.fail(std::string("missing ") + need);
  }
  all_pass(rs, o);
  return o;
}

Outcome criterion10() {
  Outcome o;
  const auto rs = run_suite("abelian", suite_options());
  for (const auto& r : rs) {
    // lhs/rhs[3] compare junior points with weight-one classes, [9] the two classifications.
    if (r.lhs.size() != 10 || r.lhs[3] != r.rhs[3] || r.lhs[9] != r.rhs[9]) {
      o.fail(r.input);
      break;
    }
  }
  return o;
}

Outcome criterion11() {
  Outcome o;
  auto run_with = [](const char* workers, int& rc) {
    setenv("WORKERS", workers, 1);
    std::ostringstream out, err;
    rc = cli::run({"verify", "abelian", "--max-d", "12", "--json", "-"}, out, err);
    unsetenv("WORKERS");
    return out.str();
  };
  int rc1 = 0, rc8 = 0;
  const std::string a = run_with("1", rc1);
  const std::string b = run_with("8", rc8);
  if (rc1 != 0 || rc8 != 0) o.fail("verify exit codes");
  if (a != b) o.fail("outputs differ");
  if (a.find("\"checks\"") == std::string::npos) o.fail("no JSON");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 C^4/<-1> already terminal", criterion1},
      {"2 SL(3) cyclic terminalizations smooth, d <= 25", criterion2},
      {"3 SL(4) cyclic terminalizations crepant and terminal, d <= 16", criterion3},
      {"4 projective fixed-locus Euler numbers", criterion4},
      {"5 blow-up Euler bookkeeping", criterion5},
      {"6 class fiber sums", criterion6},
      {"7 commutator and phi-cube identities, d <= 30", criterion7},
      {"8 type (2,2) stabilizers and terminality, d <= 20", criterion8},
      {"9 monomial trichotomy", criterion9},
      {"10 toric and Reid-Tai oracles agree", criterion10},
      {"11 verify output independent of WORKERS", criterion11},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", seconds_since(t0));
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << buf << ")";
    if (!o.pass) std::cout << ": " << o.detail;
    std::cout << "\n" << std::flush;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
