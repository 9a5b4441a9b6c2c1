#pragma once

#include "charp/serialize.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace charp::cli {

enum class Command { Root, Tau, Fpt, Jumps, Hsl, Lucas, Scan };
enum class Format { Text, Json, Csv };

const char* to_string(Command c);

struct JobSpec {
  Command command = Command::Hsl;
  std::string prime;  // decimal; validated when the ring is built
  std::vector<std::string> vars;
  std::string poly;
  std::string order = "grevlex";
  std::optional<std::string> lambda;
  std::optional<std::string> m;
  std::optional<std::string> k;           // lucas only
  std::vector<std::string> parts;         // lucas multinomial parts
  std::optional<unsigned> e;
  unsigned resolution_e = 3;
  unsigned s_max = 4;
  unsigned depth = 64;
  std::string primes;  // "lo..hi"
  std::vector<std::string> report = {"fpt"};
  Format format = Format::Text;
  std::optional<std::string> cache_dir;
  double timeout_secs = 300;
  unsigned threads = 0;  // 0: hardware concurrency
  bool timing = true;
};

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitResource = 2;
inline constexpr int kExitInternal = 3;

int exit_code_for(ErrorCode code);

/// Parses a command line (argv[0] is the program name). Throws
/// Error(InvalidArgument) on bad usage. Returns nullopt after printing help.
std::optional<JobSpec> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Checks cross-field constraints that the parser cannot express.
void validate(const JobSpec& job);

/// Executes one job, writing the report to out and diagnostics to err.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// parse_args followed by run, with usage errors reported per format.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// The JSON report of a single-prime command (everything but scan and
/// lucas), going through the cache when one is configured.
Json compute(const JobSpec& job);

}  // namespace charp::cli
