#ifndef QSPECTRA_CLI_HPP
#define QSPECTRA_CLI_HPP

#include <string>
#include <vector>

namespace qspectra::cli {

/// Exit codes: 0 success, 1 usage error, 2 empty result, 3 verification failure.
int run(const std::vector<std::string>& args);

int run(int argc, const char* const* argv);

} // namespace qspectra::cli

#endif
