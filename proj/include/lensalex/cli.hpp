#ifndef LENSALEX_CLI_HPP_
#define LENSALEX_CLI_HPP_

#include <istream>
#include <optional>
#include <string>

namespace lensalex::cli {

enum class Mode { Lens, SolidTorus, Classical, Multivariable };
enum class Format { Plain, Latex, Json };

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 1;
inline constexpr int kNotDivisible = 2;
inline constexpr int kOracleDisagreement = 3;

struct JobSpec {
  std::string word;
  int n = 1;  // moving strands (mixed modes) or total strands (classical modes)
  std::optional<long> p;
  std::optional<long> q;
  Mode mode = Mode::Lens;
  bool oracle = false;
  Format format = Format::Plain;
};

struct Outcome {
  int exit_code = kOk;
  std::string out;  // stdout
  std::string err;  // stderr
};

std::optional<Mode> parse_mode(const std::string& s);
std::optional<Format> parse_format(const std::string& s);

Outcome run_single(const JobSpec& spec);

// One JSON record per non-blank input line, in input order. A line is either
// a bare word or `word ; n ; p ; q` where empty fields fall back to `shared`.
// `threads` = 0 means hardware concurrency.
Outcome run_batch(std::istream& input, const JobSpec& shared, unsigned threads = 0);

// Reads LENS_ALEX_THREADS; 0 when unset or invalid.
unsigned thread_cap_from_env();

}  // namespace lensalex::cli

#endif  // LENSALEX_CLI_HPP_
