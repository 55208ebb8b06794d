#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

#include "qsing/error.hpp"
#include "qsing/euler_lab.hpp"
#include "qsing/spec_io.hpp"
#include "fixtures.hpp"

using namespace qsing;

namespace {

const std::string kCorpus = QSING_CORPUS_DIR;

MatrixGroup corpus_group(const std::string& file) {
  return MatrixGroup::closure(read_group_spec_file(kCorpus + "/groups/" + file));
}

MatrixGroup cyclic(const std::string& diag) {
  return MatrixGroup::closure(std::vector<FieldMatrix>{DiagonalSpec::parse(diag).matrix()});
}

std::vector<long long> terms(const CheckResult& r) {
  std::vector<long long> out;
  for (const auto& t : r.certificate["terms"]) out.push_back(t["term"].get<long long>());
  return out;
}

std::vector<Cyclotomic> axis(std::size_t n, std::size_t i, int m) {
  std::vector<Cyclotomic> v(n, Cyclotomic(m));
  v[i] = Cyclotomic::one(m);
  return v;
}

}  // namespace

TEST(CrosscheckAbelian, SpecExamples) {
  const auto a = crosscheck_abelian(DiagonalSpec::parse("1/2(1,1,1,1)"));
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.certificate["junior_count"], 0);
  EXPECT_EQ(a.certificate["classification"], "terminal");
  const auto b = crosscheck_abelian(DiagonalSpec::parse("1/3(1,1,1)"));
  EXPECT_TRUE(b.pass);
  EXPECT_EQ(b.certificate["junior_count"], 1);
  EXPECT_EQ(b.lhs[0], Integer(3));
  const auto c = crosscheck_abelian(DiagonalSpec::parse("1/6(1,2,3)"));
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.certificate["junior_count"], 4);
  EXPECT_EQ(c.lhs[4], Integer(6));
}

TEST(CrosscheckAbelian, RejectsNonAbelian) {
  const auto g = corpus_group("q8.json");
  EXPECT_THROW(crosscheck_abelian(g, QuotientCone{}, "q8"), InputError);
}

TEST(CrosscheckAbelian, NonCyclicAbelian) {
  const auto g = MatrixGroup::closure(std::vector<FieldMatrix>{fixtures::diag(4, {1, 3, 0}), fixtures::diag(4, {0, 1, 3})});
  const auto r = crosscheck_abelian(g, abelianize(g), "Z4xZ4");
  EXPECT_TRUE(r.pass) << r.to_json().dump();
  EXPECT_EQ(r.lhs[0], Integer(16));
}

TEST(BlowupEuler, ScalarGroup) {
  const auto r = blowup_euler_check(corpus_group("omega4.json"), "omega4");
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.lhs, std::vector<Integer>{Integer(4)});
  EXPECT_EQ(terms(r), std::vector<long long>{4});
}

TEST(BlowupEuler, QuaternionTerms) {
  const auto r = blowup_euler_check(corpus_group("q8.json"), "q8");
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(terms(r), (std::vector<long long>{2, 1, 1, 1}));
  EXPECT_EQ(r.rhs, std::vector<Integer>{Integer(5)});
}

TEST(BlowupEuler, RequiresCenter) {
  EXPECT_THROW(blowup_euler_check(corpus_group("minus_identity_4.json"), "-I"), InputError);
}

TEST(BlowupEuler, AbelianFamilyMatchesOrder) {
  for (std::size_t n : {2u, 3u}) {
    const auto fam = blowup_family(n, 60);
    ASSERT_FALSE(fam.empty());
    for (const auto& gens : fam) {
      const auto g = MatrixGroup::closure(gens);
      const auto r = blowup_euler_check(g, "family");
      EXPECT_TRUE(r.pass);
      EXPECT_EQ(r.lhs, std::vector<Integer>{Integer(static_cast<long long>(g.order()))});
      EXPECT_TRUE(contains_center(g));
    }
  }
}

TEST(BlowupEuler, DiagonalOracle) {
  // <omega_3, 1/6(1,2,3)> in exponent space mod 6. For a diagonal group every
  // coordinate lies in exactly one joint eigenspace, so each term is n and the
  // sum is n |G/Z_n| = |G|.
  std::set<std::vector<int>> elems;
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 6; ++j) elems.insert({(2 * k + j) % 6, (2 * k + 2 * j) % 6, (2 * k + 3 * j) % 6});
  const auto g = MatrixGroup::closure(std::vector<FieldMatrix>{fixtures::diag(3, {1, 1, 1}), fixtures::diag(6, {1, 2, 3})});
  const auto r = blowup_euler_check(g, "oracle");
  EXPECT_EQ(r.lhs, std::vector<Integer>{Integer(static_cast<long long>(elems.size()))});
  EXPECT_EQ(g.order(), elems.size());
}

TEST(PseudoReflection, ScalarCharts) {
  const auto r4 = pseudo_reflection_certificate(corpus_group("omega4.json"), "omega4");
  EXPECT_TRUE(r4.pass);
  EXPECT_EQ(r4.certificate["chart_weights"], "1/4(1,0,0,0)");
  const auto r2 = pseudo_reflection_certificate(corpus_group("q8.json"), "q8");
  EXPECT_TRUE(r2.pass);
  EXPECT_EQ(r2.certificate["chart_weights"], "1/2(1,0)");
}

TEST(PseudoReflection, ChartWeightsBySubstitution) {
  for (int d = 2; d <= 9; ++d)
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const DiagonalSpec g = DiagonalSpec::make(d, {a, b, 2 * a + 1});
        const DiagonalSpec w = chart_weights(g);
        // g acts on x_i / x_1 by zeta^{a_i} / zeta^{a_1}.
        const Cyclotomic x1 = Cyclotomic::root_of_unity(d, g.a[0]);
        EXPECT_EQ(Cyclotomic::root_of_unity(d, w.a[0]), x1);
        for (std::size_t i = 1; i < 3; ++i)
          EXPECT_EQ(Cyclotomic::root_of_unity(d, w.a[i]), Cyclotomic::root_of_unity(d, g.a[i]) / x1);
      }
}

TEST(ClassFiberSum, F21WithScalars) {
  const auto g = corpus_group("f21_z4.json");
  const auto r = class_fiber_sum_check(g, axis(4, 3, g.conductor()), "f21_z4");
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.certificate["fibers"], (std::vector<int>{5, 5, 5, 5}));
  EXPECT_EQ(r.rhs, std::vector<Integer>{Integer(20)});
}

TEST(ClassFiberSum, MinusIdentity) {
  const auto g = corpus_group("minus_identity_4.json");
  const auto r = class_fiber_sum_check(g, axis(4, 0, g.conductor()), "-I");
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.certificate["fibers"], (std::vector<int>{1, 1}));
}

TEST(ClassFiberSum, AbelianAxis) {
  const auto g = cyclic("1/6(1,2,3,0)");
  const auto r = class_fiber_sum_check(g, axis(4, 3, g.conductor()), "axis");
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.certificate["fibers"], std::vector<int>{6});
}

TEST(ClassFiberSum, RejectsNonInvariantLine) {
  const auto g = corpus_group("f21_z4.json");
  EXPECT_THROW(class_fiber_sum_check(g, axis(4, 0, g.conductor()), "bad"), InputError);
}

TEST(Type22, TrivialStabilizersAreTerminal) {
  for (int d = 2; d <= 20; ++d)
    for (int a = 1; a < d; ++a) {
      if (std::gcd(a, d) != 1) continue;
      const DiagonalSpec s = DiagonalSpec::make(d, {1, -1, a, -a});
      const auto r = type22_terminal_check(cyclic(s.to_string()), s.to_string());
      EXPECT_TRUE(r.pass);
      EXPECT_EQ(r.certificate["mode"], "implication");
      // Every nontrivial power has age frac(k/d) + frac(-k/d) + frac(ka/d) + frac(-ka/d) = 2.
      for (int k = 1; k < d; ++k) {
        const int ages = (k % d ? d : 0) + ((k * a) % d ? d : 0);
        EXPECT_EQ(ages, 2 * d);
      }
    }
}

TEST(Type22, WitnessForDegenerateFamily) {
  const auto r = type22_terminal_check(cyclic("1/5(1,4,0,0)"), "w");
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.certificate["mode"], "witness");
  EXPECT_EQ(r.certificate["witness_summand"], 2);
  EXPECT_EQ(r.certificate["stabilizer_orders"], (std::vector<int>{1, 5}));
  EXPECT_EQ(r.certificate["classification"], "canonical_not_terminal");
}

TEST(Type22, TrivialGroupAndErrors) {
  const auto r = type22_terminal_check(cyclic("1/1(0,0,0,0)"), "trivial");
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.certificate["classification"], "terminal");
  const auto g = MatrixGroup::closure(fixtures::f21_z4_generators());
  EXPECT_THROW(type22_terminal_check(g, "f21"), InputError);
}

TEST(Trichotomy, CorpusCases) {
  const std::map<std::string, std::vector<bool>> expect = {
      {"f21_omega3", {false, true, false}},
      {"g147_omega3", {false, true, false}},
      {"g147_R", {false, false, true}},
      {"g147_omega3R", {false, false, true}},
      {"q8_plus_1_type_b", {true, false, false}},
  };
  for (const auto& [name, alts] : expect) {
    const auto j = read_json_file(kCorpus + "/trichotomy/" + name + ".json");
    const auto s = MatrixGroup::closure(group_spec_from_json(j["stabilizer"]));
    const auto p = MatrixGroup::closure(group_spec_from_json(j["extension"]));
    const auto r = trichotomy_scan(s, p, name);
    EXPECT_TRUE(r.pass) << name;
    EXPECT_EQ(r.certificate["alternatives"].get<std::vector<bool>>(), alts) << name;
  }
}

TEST(Trichotomy, NonNormalStabilizerIsRejected) {
  const auto f21 = MatrixGroup::closure(fixtures::f21_generators());
  auto gens = fixtures::f21_generators();
  gens.push_back(matrix_R(1));
  const auto ext = MatrixGroup::closure(gens);
  EXPECT_THROW(trichotomy_scan(f21, ext, "f21_R"), InputError);
}

TEST(Trichotomy, StabilizerWithOmega3FailsPrecondition) {
  auto gens = fixtures::f21_generators();
  gens.push_back(scalar_matrix(3, Cyclotomic::root_of_unity(3, 1)));
  const auto g = MatrixGroup::closure(gens);
  const auto r = trichotomy_scan(g, g, "z3");
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(r.certificate.contains("precondition"));
}

TEST(Claims, Identities) {
  EXPECT_TRUE(commutator_identity_check().pass);
  for (int d = 1; d <= 12; ++d) {
    const auto r = phi_cube_check(d);
    EXPECT_TRUE(r.pass) << d;
    EXPECT_EQ(r.rhs, std::vector<Integer>{Integer(d * d)});
  }
}

TEST(Suites, DeterministicAcrossWorkers) {
  SuiteOptions one;
  one.corpus_dir = kCorpus;
  SuiteOptions many = one;
  many.workers = 4;
  for (const std::string s : {"type22", "trichotomy", "euler-proj"}) {
    const auto a = run_suite(s, one);
    const auto b = run_suite(s, many);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].to_json().dump(), b[i].to_json().dump());
  }
}

TEST(Suites, ProjectiveEulerMatchesComponentCount) {
  SuiteOptions o;
  const auto r = run_suite("euler-proj", o);
  ASSERT_EQ(r.size(), 200u);
  for (const auto& c : r) {
    EXPECT_TRUE(c.pass);
    std::size_t sum = 0;
    for (auto d : c.certificate["component_dims"]) sum += d.get<std::size_t>();
    EXPECT_EQ(Integer(static_cast<long long>(sum)), c.rhs[0]);
  }
}

TEST(Suites, UnknownSuite) {
  try {
    run_suite("nope", SuiteOptions{});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("abelian"), std::string::npos);
  }
}

TEST(SpecIo, RoundTrip) {
  const GroupSpec s = read_group_spec_file(kCorpus + "/groups/f21_z4.json");
  const GroupSpec t = group_spec_from_json(nlohmann::json::parse(group_spec_to_json(s).dump()));
  ASSERT_EQ(s.generators.size(), t.generators.size());
  for (std::size_t i = 0; i < s.generators.size(); ++i) EXPECT_EQ(s.generators[i], t.generators[i]);
  EXPECT_EQ(MatrixGroup::closure(t).order(), 84u);
}

TEST(SpecIo, ErrorsNameTheKey) {
  auto expect_error = [](const std::string& text, const std::string& key) {
    try {
      group_spec_from_json(nlohmann::json::parse(text));
      FAIL() << text;
    } catch (const InputError& e) {
      EXPECT_NE(std::string(e.what()).find(key), std::string::npos) << e.what();
    }
  };
  expect_error(R"j({"conductor": 4, "generators": [[[["1","0"],["0"]],[["0","0"],["1","0"]]]]})j", "generators[0][0][1]");
  expect_error(R"j({"conductor": 1, "generators": [[[["x"]]]]})j", "generators[0][0][0][0]");
  expect_error(R"j({"diag": "1/3(1,1"})j", "diag");
  expect_error(R"j({"name": "x"})j", "generators");
  expect_error(R"j({"diag": "1/2(1,1)", "colour": 1})j", "colour");
}
