#ifndef PATHCONG_CLI_HPP_
#define PATHCONG_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace pathcong {

  enum ExitCode : int {
    exit_ok        = 0,
    exit_domain    = 1,
    exit_usage     = 2,
    exit_violation = 3,
  };

  //! Runs one command line (without the program name), writing results to
  //! \p out and diagnostics to \p err.  Returns an ExitCode.
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace pathcong

#endif  // PATHCONG_CLI_HPP_
