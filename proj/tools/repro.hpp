#pragma once

// Scripted batteries that regenerate the reference tables.  Each suite
// prints a table and returns the number of failing rows; a failure is
// reported and the suite carries on.

#include <ostream>
#include <string>
#include <vector>

namespace patgrid::repro {

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
int run_suite(const std::string& suite, std::ostream& out);

}  // namespace patgrid::repro
