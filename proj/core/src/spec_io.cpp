#include "qsing/spec_io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "qsing/error.hpp"

namespace qsing {

namespace {

int totient(int m) {
  int r = m, k = m;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    while (k % p == 0) k /= p;
    r -= r / p;
  }
  if (k > 1) r -= r / k;
  return r;
}

Rational parse_coefficient(const nlohmann::json& j, const std::string& key) {
  if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
  if (!j.is_string()) throw InputError(key + ": expected a rational string \"p/q\" or \"p\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(key + ": " + e.what());
  }
}

Cyclotomic parse_entry(const nlohmann::json& j, int conductor, int degree, const std::string& key) {
  if (!j.is_array()) throw InputError(key + ": expected an array of " + std::to_string(degree) + " coefficients");
  if (j.size() != static_cast<std::size_t>(degree))
    throw InputError(key + ": expected " + std::to_string(degree) + " coefficients, got " + std::to_string(j.size()));
  std::vector<Rational> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(parse_coefficient(j[i], key + "[" + std::to_string(i) + "]"));
  return Cyclotomic(conductor, std::move(c));
}

}  // namespace

std::vector<Cyclotomic> cyclotomic_vector_from_json(const nlohmann::json& j, int conductor, const std::string& key) {
  if (!j.is_array() || j.empty()) throw InputError(key + ": expected a non-empty array");
  const int degree = totient(conductor);
  std::vector<Cyclotomic> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_entry(j[i], conductor, degree, key + "[" + std::to_string(i) + "]"));
  return out;
}

GroupSpec group_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("group spec: expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (k != "name" && k != "conductor" && k != "generators" && k != "diag" && k != "format_version")
      throw InputError("group spec: unknown key '" + k + "'");
  }
  if (j.contains("format_version") && j["format_version"] != 1) throw InputError("format_version: expected 1");
  GroupSpec s;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("name: expected a string");
    s.name = j["name"].get<std::string>();
  }
  if (j.contains("conductor")) {
    if (!j["conductor"].is_number_integer() || j["conductor"].get<long long>() < 1 ||
        j["conductor"].get<long long>() > 100000)
      throw InputError("conductor: expected a positive integer");
    s.conductor = j["conductor"].get<int>();
  }
  if (j.contains("generators")) {
    const auto& gens = j["generators"];
    if (!gens.is_array()) throw InputError("generators: expected an array of matrices");
    const int degree = totient(s.conductor);
    std::size_t n = 0;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::string gk = "generators[" + std::to_string(g) + "]";
      const auto& m = gens[g];
      if (!m.is_array() || m.empty()) throw InputError(gk + ": expected a non-empty square array");
      if (g == 0) n = m.size();
      if (m.size() != n) throw InputError(gk + ": expected " + std::to_string(n) + " rows");
      FieldMatrix mat(n, n, Cyclotomic(s.conductor));
      for (std::size_t r = 0; r < n; ++r) {
        const std::string rk = gk + "[" + std::to_string(r) + "]";
        if (!m[r].is_array() || m[r].size() != n) throw InputError(rk + ": expected " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c)
          mat(r, c) = parse_entry(m[r][c], s.conductor, degree, rk + "[" + std::to_string(c) + "]");
      }
      s.generators.push_back(std::move(mat));
    }
  }
  if (j.contains("diag")) {
    if (!j["diag"].is_string()) throw InputError("diag: expected a string 1/d(a1,...,an)");
    try {
      s.diag = DiagonalSpec::parse(j["diag"].get<std::string>());
    } catch (const InputError& e) {
      throw InputError(std::string("diag: ") + e.what());
    }
  }
  if (s.generators.empty() && !s.diag) throw InputError("group spec: needs \"generators\" or \"diag\"");
  if (s.diag && !s.generators.empty() && s.diag->dimension() != s.generators.front().rows())
    throw InputError("diag: dimension differs from the generators");
  if (s.name.empty()) s.name = s.diag ? s.diag->to_string() : "group";
  return s;
}

nlohmann::ordered_json cyclotomic_to_json(const Cyclotomic& c, int conductor) {
  const Cyclotomic p = c.conductor() == conductor ? c : c.promote(conductor);
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const Rational& r : p.coeffs()) out.push_back(r.to_string());
  return out;
}

nlohmann::ordered_json group_spec_to_json(const GroupSpec& spec) {
  nlohmann::ordered_json j;
  j["format_version"] = 1;
  j["name"] = spec.name;
  int m = spec.conductor;
  for (const auto& g : spec.generators) m = std::lcm(m, common_conductor(g));
  j["conductor"] = m;
  if (!spec.generators.empty()) {
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (const auto& g : spec.generators) {
      nlohmann::ordered_json mat = nlohmann::ordered_json::array();
      for (std::size_t r = 0; r < g.rows(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(cyclotomic_to_json(g(r, c), m));
        mat.push_back(std::move(row));
      }
      gens.push_back(std::move(mat));
    }
    j["generators"] = std::move(gens);
  }
  if (spec.diag) j["diag"] = spec.diag->to_string();
  return j;
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

GroupSpec read_group_spec_file(const std::filesystem::path& path) {
  const auto j = read_json_file(path);
  try {
    return group_spec_from_json(j);
  } catch (const InputError& e) {
    throw InputError(path.filename().string() + ": " + e.what());
  }
}

}  // namespace qsing
