#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace displab::cli {

// Exit codes: 0 success, 1 computation error (size caps, domain, fixture
// mismatch), 2 parse error (arguments, digraph files, family strings).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// DISPLAB_MAX_ORDER if set and valid, otherwise 32.
int default_max_order();

}  // namespace displab::cli
