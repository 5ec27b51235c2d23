#pragma once

/// \file
/// \brief Seeded randomized verification suites, one per theorem.
///
/// Every trial draws from its own stream keyed by (seed, suite, trial), so
/// reports depend only on (suite, seed, trials).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace miquel {

inline constexpr std::uint64_t kDefaultSeed = 7;

struct Claim {
  std::string name;
  /// Informational claims are reported but never fail a suite.
  bool asserted{true};
  /// A check passes when its residual is strictly below the threshold.
  double threshold{0.0};
  double max_residual{0.0};
  int checked{0};
  int failures{0};
  /// Reproduction recipe for the worst instance.
  std::string witness;
  std::string note;

  bool passed() const { return !asserted || (checked > 0 && failures == 0); }
  /// Records one check; `witness` is only invoked for a new worst case.
  void record(double residual, const std::function<std::string()>& witness_fn);
};

struct VerifyReport {
  std::string suite;
  int trials{0};
  std::uint64_t seed{kDefaultSeed};
  std::vector<Claim> claims;
  /// Wall clock; excluded from formatted output unless asked for.
  double duration_seconds{0.0};

  bool passed() const;
};

/// Suite names in registry order (without "all").
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
int default_trials(const std::string& suite);

/// Throws std::invalid_argument for unknown suites or non-positive trials.
VerifyReport run_suite(const std::string& suite, std::uint64_t seed,
                       std::optional<int> trials = std::nullopt);

/// `suite` may be "all".
std::vector<VerifyReport> run_verify(const std::string& suite, std::uint64_t seed,
                                     std::optional<int> trials = std::nullopt);

std::string format_text(const std::vector<VerifyReport>& reports);
std::string format_json(const std::vector<VerifyReport>& reports);

}  // namespace miquel
