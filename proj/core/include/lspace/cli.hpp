#ifndef LSPACE_CLI_HPP
#define LSPACE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lspace::cli {

/// Command dispatch for the lspace tool. Commands: interval, classify,
/// filling, foliation, glue, cable, gst. Returns 0 on success and 2 on any
/// input error (bad document, unknown slope, missing file, bad arguments).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lspace::cli

#endif
