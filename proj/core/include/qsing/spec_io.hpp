#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsing/group.hpp"

namespace qsing {

// GroupSpecFile: {"name", "conductor", "generators", "diag"}. Each matrix
// entry is an array of phi(conductor) power-basis coefficients written as
// "p/q" or "p". Errors name the offending key, e.g. generators[0][1][2].
GroupSpec group_spec_from_json(const nlohmann::json& j);
nlohmann::ordered_json group_spec_to_json(const GroupSpec& spec);
GroupSpec read_group_spec_file(const std::filesystem::path& path);

// A vector of field elements in the same coefficient format.
std::vector<Cyclotomic> cyclotomic_vector_from_json(const nlohmann::json& j, int conductor,
                                                    const std::string& key);
nlohmann::ordered_json cyclotomic_to_json(const Cyclotomic& c, int conductor);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace qsing
