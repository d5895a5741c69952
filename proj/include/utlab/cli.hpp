#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "utlab/classes.hpp"
#include "utlab/coeffs.hpp"
#include "utlab/functionals.hpp"

namespace utlab::cli {

enum class Command { VerifyExtremal, Search, Lemma, Invert, Compare };
enum class Format { Text, Json, Csv };

namespace exit_code {
inline constexpr int kSuccess = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kUsage = 2;
inline constexpr int kNonConverged = 3;
}  // namespace exit_code

/// Tolerance used by verify-extremal when comparing attained values with the
/// exact rationals.
inline constexpr double kExtremalTolerance = 1e-12;
/// Slack allowed by the lemma command above |nu|.
inline constexpr double kLemmaTolerance = 1e-10;

struct RunConfig {
  Command command = Command::VerifyExtremal;
  std::optional<ClassId> cls;
  std::optional<FunctionalId> functional;
  int starts = 64;
  int iters = 2000;
  std::int64_t samples = 100000;
  std::uint64_t seed = 0;
  /// Relative tolerance on the search gap.
  double tol = 1e-4;
  Format format = Format::Text;
  std::optional<std::string> output_path;
  /// invert: comma-separated a2, a3, ...
  std::string coeffs;
  /// lemma: a custom (mu, nu) pair instead of the four built-in ones.
  std::optional<double> mu;
  std::optional<double> nu;
  unsigned threads = 1;
};

/// Thrown for malformed user input; mapped to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "3", "-2.5", "2i", "-i", "1+2i", "1.5e-3-4i".
Complex parse_complex(std::string_view text);
std::vector<Complex> parse_complex_list(std::string_view text);
/// "a+bi" text with shortest round-trip decimals; parse_complex reads it back.
/// Zero parts are dropped ("-2", "2.5i") and unit imaginaries print as "i".
std::string format_complex(Complex z);
std::string format_double(double x);

/// Worker cap from UTLAB_THREADS (default: hardware concurrency).
unsigned threads_from_env();

int cmd_verify_extremal(const RunConfig& cfg, std::ostream& out,
                        const std::vector<ExtremalEntry>& catalog = extremal_catalog());
int cmd_search(const RunConfig& cfg, std::ostream& out);
int cmd_lemma(const RunConfig& cfg, std::ostream& out);
int cmd_invert(const RunConfig& cfg, std::ostream& out);
int cmd_compare(const RunConfig& cfg, std::ostream& out);

/// Dispatches cfg.command, writing to cfg.output_path when set. UsageError
/// and validation failures are reported on err with exit code 2.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command-line entry point (argument parsing included).
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace utlab::cli
