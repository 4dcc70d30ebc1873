#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tiltwall::app {

// Exit codes: 0 success, 1 usage or input error, 2 failed expectation
// (refute --expect, certify with a mismatching fixture).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tiltwall::app
