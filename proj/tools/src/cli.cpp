#include "qsing/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "qsing/error.hpp"
#include "qsing/euler_lab.hpp"
#include "qsing/resolver.hpp"
#include "qsing/spec_io.hpp"
#include "qsing/toric.hpp"

#ifndef QSING_CORPUS_DIR
#define QSING_CORPUS_DIR ""
#endif

namespace qsing::cli {

using nlohmann::ordered_json;

namespace {

struct GroupArgs {
  std::string diag;
  std::string file;
  std::size_t max_order = kDefaultMaxOrder;
  std::string json_out;
};

void add_group_options(CLI::App* cmd, GroupArgs& a) {
  cmd->add_option("--group", a.diag, "diagonal group 1/d(a1,...,an)");
  cmd->add_option("--group-file", a.file, "GroupSpecFile JSON");
  cmd->add_option("--max-order", a.max_order, "closure bound")->check(CLI::PositiveNumber);
  cmd->add_option("--json", a.json_out, "write the JSON report to this path ('-' for stdout)");
}

struct Loaded {
  std::string name;
  GroupSpec spec;
  MatrixGroup group;
};

Loaded load_group(const GroupArgs& a) {
  if (a.diag.empty() == a.file.empty()) throw InputError("give exactly one of --group or --group-file");
  GroupSpec spec = a.diag.empty() ? read_group_spec_file(a.file) : GroupSpec::from_diag(a.diag);
  MatrixGroup g = MatrixGroup::closure(spec, a.max_order);
  return Loaded{spec.name, std::move(spec), std::move(g)};
}

ordered_json integer_json(const Integer& x) {
  if (x.fits_int64()) return x.to_int64();
  return x.to_string();
}

void emit_json(const ordered_json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) return;
  const std::string text = j.dump(2) + "\n";
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

QuotientCone cone_of(const Loaded& l) {
  if (l.spec.diag && l.spec.generators.empty()) return quotient_lattice(*l.spec.diag);
  return abelianize(l.group);
}

ordered_json terminalization_json(const Terminalization& t, const std::string& fan) {
  Integer sum = 0;
  for (const Integer& m : t.multiplicities) sum += m;
  ordered_json j;
  j["ray_count"] = t.output.rays.size();
  j["cone_count"] = t.output.cones.size();
  j["multiplicity_sum"] = integer_json(sum);
  j["smooth"] = t.smooth;
  j["crepant"] = t.crepant;
  j["terminal"] = t.terminal;
  j["volume_conserved"] = t.volume_conserved;
  j["fan"] = fan;
  j["inserted"] = ordered_json::array();
  for (const LatticePoint& p : t.inserted) {
    ordered_json v = ordered_json::array();
    for (const Integer& x : p) v.push_back(integer_json(x));
    j["inserted"].push_back(std::move(v));
  }
  return j;
}

ordered_json toric_json(const QuotientCone& c, std::optional<Terminalization>* keep = nullptr) {
  ordered_json j;
  j["multiplicity"] = integer_json(cone_multiplicity(c));
  if (!c.is_gorenstein()) {
    j["junior_count"] = nullptr;
    j["fan"] = write_fan(Fan::from_cone(c));
    j["terminalization"] = nullptr;
    j["notes"] = c.notes;
    return j;
  }
  j["junior_count"] = junior_points(c).size();
  j["fan"] = write_fan(Fan::from_cone(c));
  Terminalization t = terminalize(c);
  j["terminalization"] = terminalization_json(t, write_fan(t.output));
  j["notes"] = c.notes;
  if (keep) *keep = std::move(t);
  return j;
}

ordered_json checks_json(std::vector<CheckResult> checks) {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::tie(a.name, a.input) < std::tie(b.name, b.input);
  });
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) arr.push_back(c.to_json());
  return arr;
}

std::size_t workers_from_env() {
  const char* w = std::getenv("WORKERS");
  if (!w || !*w) return 1;
  char* end = nullptr;
  const long v = std::strtol(w, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024) throw InputError(std::string("WORKERS must be an integer >= 1, got '") + w + "'");
  return static_cast<std::size_t>(v);
}

void print_summary(const ordered_json& r, std::ostream& out) {
  const auto& g = r["group"];
  out << "group: " << g["name"].get<std::string>() << "\n";
  out << "order: " << g["order"] << "\n";
  out << "class_count: " << g["class_count"] << "\n";
  out << "contains_center: " << g["contains_center"] << "\n";
  out << "module_type: " << g["module_type"].get<std::string>() << "\n";
  out << "classification: " << g["classification"].get<std::string>() << "\n";
  out << "weight_one_classes: " << g["weight_one_classes"] << "\n";
  for (const auto& w : g["warnings"]) out << "warning: " << w.get<std::string>() << "\n";
  if (r.contains("toric")) {
    const auto& t = r["toric"];
    out << "multiplicity: " << t["multiplicity"] << "\n";
    out << "junior_count: " << t["junior_count"] << "\n";
    for (const auto& n : t["notes"]) out << "note: " << n.get<std::string>() << "\n";
    if (!t["terminalization"].is_null()) {
      const auto& z = t["terminalization"];
      out << "terminalization: " << z["ray_count"] << " rays, " << z["cone_count"] << " cones, multiplicity_sum "
          << z["multiplicity_sum"] << ", smooth " << z["smooth"] << ", crepant " << z["crepant"] << ", terminal "
          << z["terminal"] << "\n";
    }
  }
  std::size_t pass = 0, fail = 0;
  for (const auto& c : r["checks"]) (c["verdict"] == "pass" ? pass : fail)++;
  out << "checks: " << pass << " passed, " << fail << " failed\n";
}

int cmd_analyze(const GroupArgs& a, std::ostream& out) {
  const Loaded l = load_group(a);
  const ordered_json report = analysis_report(l.group, l.name);
  print_summary(report, out);
  emit_json(report, a.json_out, out);
  for (const auto& c : report["checks"])
    if (c["verdict"] != "pass") return kCheckFailure;
  return kOk;
}

int cmd_resolve(const GroupArgs& a, const std::string& fan_out, std::ostream& out) {
  const Loaded l = load_group(a);
  if (!l.group.is_abelian()) throw InputError("resolve requires an abelian group");
  const QuotientCone c = cone_of(l);
  if (!c.is_gorenstein()) throw NotGorenstein("resolve requires a Gorenstein cone (group in SL(n))");
  std::optional<Terminalization> t;
  ordered_json report;
  report["format_version"] = 1;
  report["group"] = analysis_report(l.group, l.name)["group"];
  report["toric"] = toric_json(c, &t);
  report["checks"] = ordered_json::array();
  const auto& z = report["toric"]["terminalization"];
  out << "group: " << l.name << "\n";
  for (const auto& n : c.notes) out << "note: " << n << "\n";
  out << "rays: " << z["ray_count"] << "\n";
  out << "cones: " << z["cone_count"] << "\n";
  out << "multiplicity_sum: " << z["multiplicity_sum"] << "\n";
  out << "smooth: " << z["smooth"] << "\n";
  out << "crepant: " << z["crepant"] << "\n";
  out << "terminal: " << z["terminal"] << "\n";
  out << "volume_conserved: " << z["volume_conserved"] << "\n";
  const std::string fan = write_fan(t->output);
  if (fan_out.empty()) {
    out << fan;
  } else {
    std::ofstream f(fan_out, std::ios::binary);
    if (!f) throw InputError("cannot write " + fan_out);
    f << fan;
  }
  emit_json(report, a.json_out, out);
  return t->crepant && t->terminal && t->volume_conserved ? kOk : kCheckFailure;
}

int cmd_verify(const std::string& suite, std::optional<int> max_d, const std::string& corpus, const std::string& json_out,
               std::size_t max_order, std::ostream& out) {
  SuiteOptions opt;
  opt.corpus_dir = corpus.empty() ? QSING_CORPUS_DIR : corpus;
  opt.workers = workers_from_env();
  opt.max_order = max_order;
  if (max_d) {
    if (*max_d < 1) throw InputError("--max-d must be >= 1");
    opt.max_d3 = opt.max_d4 = opt.max_d_claims = *max_d;
  }
  const auto results = run_suite(suite, opt);
  std::size_t pass = 0;
  for (const auto& r : results) {
    if (r.pass) {
      ++pass;
      continue;
    }
    out << "FAIL " << r.name << " " << r.input << "\n";
  }
  out << suite << ": " << pass << "/" << results.size() << " passed\n";
  ordered_json report;
  report["format_version"] = 1;
  report["suite"] = suite;
  report["options"] = {{"max_d3", opt.max_d3}, {"max_d4", opt.max_d4}, {"max_d_claims", opt.max_d_claims}};
  report["summary"] = {{"total", results.size()}, {"passed", pass}, {"failed", results.size() - pass}};
  ordered_json arr = ordered_json::array();
  for (const auto& r : results) arr.push_back(r.to_json());
  report["checks"] = std::move(arr);
  emit_json(report, json_out, out);
  return pass == results.size() ? kOk : kCheckFailure;
}

}  // namespace

ordered_json analysis_report(const MatrixGroup& g, const std::string& name) {
  ordered_json report;
  report["format_version"] = 1;
  const ReidTaiResult rt = reid_tai_classify(g);
  ordered_json grp;
  grp["name"] = name;
  grp["order"] = g.order();
  grp["class_count"] = g.class_count();
  grp["contains_center"] = contains_center(g);
  grp["module_type"] = module_type_string(module_type(g));
  grp["classification"] = to_string(rt.kind);
  if (g.is_special())
    grp["weight_one_classes"] = weight_one_class_count(g);
  else
    grp["weight_one_classes"] = nullptr;
  grp["warnings"] = rt.warnings;
  report["group"] = std::move(grp);
  std::vector<CheckResult> checks;
  if (g.is_abelian()) {
    const QuotientCone c = abelianize(g);
    report["toric"] = toric_json(c);
    if (g.is_special()) checks.push_back(crosscheck_abelian(g, c, name));
  }
  if (contains_center(g)) {
    checks.push_back(blowup_euler_check(g, name));
    checks.push_back(pseudo_reflection_certificate(g, name));
  }
  report["checks"] = checks_json(std::move(checks));
  return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qsing: quotient singularities, crepant terminalizations and Euler-number checks"};
  app.require_subcommand(1);
  GroupArgs analyze_args, resolve_args;
  auto* analyze = app.add_subcommand("analyze", "classify a finite group and its quotient");
  add_group_options(analyze, analyze_args);
  auto* resolve = app.add_subcommand("resolve", "crepant terminalization of an abelian quotient");
  add_group_options(resolve, resolve_args);
  std::string fan_out;
  resolve->add_option("--out-fan", fan_out, "write the fan text to this path");
  auto* verify = app.add_subcommand("verify", "run a check suite");
  std::string suite, corpus, verify_json;
  std::optional<int> max_d;
  std::size_t verify_max_order = kDefaultMaxOrder;
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--max-d", max_d, "largest denominator for generated families");
  verify->add_option("--corpus", corpus, "corpus directory");
  verify->add_option("--json", verify_json, "write the JSON report to this path ('-' for stdout)");
  verify->add_option("--max-order", verify_max_order, "closure bound")->check(CLI::PositiveNumber);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  try {
    if (*analyze) return cmd_analyze(analyze_args, out);
    if (*resolve) return cmd_resolve(resolve_args, fan_out, out);
    if (*verify) {
      const auto& names = suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::string valid;
        for (const auto& s : names) valid += (valid.empty() ? "" : ", ") + s;
        throw InputError("unknown suite '" + suite + "'; valid suites: " + valid);
      }
      return cmd_verify(suite, max_d, corpus, verify_json, verify_max_order, out);
    }
  } catch (const GroupTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const PreconditionViolation& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kInputError;
}

}  // namespace qsing::cli
