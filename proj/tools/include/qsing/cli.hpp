#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsing/group.hpp"

namespace qsing::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kResourceLimit = 3,
  kPrecondition = 4,
  kCheckFailure = 5,
};

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// AnalysisReport for a closed group; `checks` are run for abelian SL groups
// and groups containing the scalars.
nlohmann::ordered_json analysis_report(const MatrixGroup& g, const std::string& name);

}  // namespace qsing::cli
