#ifndef FIFWAVE_CLI_HPP
#define FIFWAVE_CLI_HPP

#include <string>
#include <vector>

namespace fif {

// Exit codes: 0 success, 2 validation/config failure, 3 guard/accuracy
// failure. Output files appear only on success (temp-then-rename).
int run_cli(const std::vector<std::string>& args);

int run_cli(int argc, char** argv);

}  // namespace fif

#endif
