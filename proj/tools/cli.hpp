#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rholat::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kDomainError = 2,
    kConsistencyError = 3,
    kIoError = 4,
};

/// Entry point shared by main() and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rholat::cli
