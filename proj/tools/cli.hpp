#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "symtensor/center.hpp"
#include "symtensor/eigensolve.hpp"
#include "symtensor/resultant.hpp"

namespace symtensor::cli {

enum ExitCode : int {
    kSuccess = 0,
    kCheckFailed = 1,
    kInputError = 2,
    kUnsupported = 3,
};

/// Runs the command line; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json report_to_json(const EigenvalueReport& report);
nlohmann::json center_to_json(const CenterAlgebra& z);

/// "{1:4, 1/2:3}" with values in descending order.
std::string squares_summary(const EigenvalueReport& report);

}  // namespace symtensor::cli
