#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "eulerzeros/families.hpp"

namespace eulerzeros::cli {

// Stable process exit statuses.
enum ExitStatus : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kCertificationError = 3,
};

enum class Command { Table, Zeros, Rates, Verify, Dist, LeftEdge };
enum class Format { Csv, Json, Pretty };

struct RunConfig {
  Command command = Command::Table;
  std::vector<FamilyKind> families{FamilyKind::XiTilde,
                                   FamilyKind::LambdaTilde};
  std::string family_label = "both";
  std::vector<unsigned> n_values;
  Rational rel_width;
  Format format = Format::Csv;
  std::string out_path;  // empty = standard output
  unsigned jobs = 1;
  unsigned k = 1;             // leftedge only
  bool inject_fault = false;  // verify only
};

// Invalid command line or option values.
class UsageError : public Error {
 public:
  using Error::Error;
};

// --help was given; what() is the help text.
class HelpRequested : public Error {
 public:
  using Error::Error;
};

// Parses the arguments after the program name.
RunConfig parse_args(const std::vector<std::string>& args);

// Executes a parsed config, writing the report to `out` (or to
// config.out_path) and diagnostics to `err`. Returns an ExitStatus.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_args + execute, mapping usage errors to kUsageError.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace eulerzeros::cli
