#pragma once

#include "morse/precision.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace morse::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kNumeric = 3, kInsufficientData = 4 };

enum class OutputFormat { csv, json };

struct RunConfig {
  double k = 0;
  double u0 = 0;
  double alpha = 0;
  double T = 0;
  PrecisionConfig precision{};
  OutputFormat output_format = OutputFormat::csv;
  std::string output_path;  // empty = stdout
  unsigned long long seed = 42;
};

/// Positive zeta ordinates, strictly increasing.
struct ZetaZeroFile {
  std::string path;
  std::vector<double> gammas;
};

/// Parses one gamma per line; '#' comments and blank lines are ignored.
/// Throws std::runtime_error on malformed, non-positive, unsorted or empty input.
ZetaZeroFile read_zeta_zero_file(const std::string& path);

/// (1/pi) T log T + (1/pi)(-log 2 pi - 1) T.
double zeta_main_term(double T);

/// Full command line: [global flags] <command> [flags].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_eval(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cmd_zeros(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cmd_count(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cmd_weyl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cmd_mfunc(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cmd_debranges(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cmd_compare_zeta(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace morse::cli
