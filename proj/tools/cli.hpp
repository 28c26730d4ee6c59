#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace artin::cli {

  //! Exit codes of dispatch().
  enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

  //! Everything a run depends on. Defaults are the values below.
  struct RunConfig {
    std::string command;          // e.g. "rigidity", "brace verify"
    std::string type;             // "A 3"; empty when a matrix file is used
    std::string matrix_path;
    std::string argument;         // word, spec text or table file
    std::size_t height = 4;
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    std::string dot_path;
    bool json = false;
    bool force = false;
    std::size_t bound = 1'000'000;
    std::size_t n = 4;
    std::size_t kmax = 6;

    //! "key: value" lines for every field, in declaration order.
    std::string render() const;
    friend bool operator==(RunConfig const&, RunConfig const&) = default;
  };

  //! Inverse of RunConfig::render; unknown keys or bad values throw ParseError.
  RunConfig parse_run_config(std::string const& text);

  //! Parses argv (without the program name), runs the command and writes the
  //! report to out and diagnostics to err.
  int dispatch(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace artin::cli
