#ifndef LINTUR_CLI_HPP
#define LINTUR_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lintur/search.hpp"

namespace lintur {

inline constexpr int kExitPass = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;

struct Finding {
  std::string claim;
  bool pass = false;
  std::string detail;
  std::string witness_path;
};

struct RunReport {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Finding> findings;

  void add(std::string claim, bool pass, std::string detail = {}, std::string witness = {});
  int exit_code() const;
  std::string format_text() const;
  std::string format_kv() const;
};

/// Inclusive integer range written `a` or `a..b`.
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};
IntRange parse_range(const std::string& text);

struct ReportOptions {
  std::optional<IntRange> n, k, m;  // unset: per-report default
  std::uint64_t seed = 0;
  Budget budget;
  int jobs = 1;
};

/// Runs the checks tied to one result id: prop1, prop2, prop3, th11, th12,
/// th13, th14, lem41, lem42. Throws InputError for an unknown id.
RunReport run_report(const std::string& id, const ReportOptions& options);

/// Entry point behind the `lintur` binary. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lintur

#endif  // LINTUR_CLI_HPP
