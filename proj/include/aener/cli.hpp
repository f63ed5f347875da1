#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aener::cli {

enum ExitStatus : int {
  kOk = 0,
  kUsage = 1,
  kData = 2,
  kBackend = 3,
};

// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);
int run(int argc, char** argv);

}  // namespace aener::cli
