#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace collatz {

struct VerifyReport {
  std::string check_name;
  std::string range;
  std::uint64_t pass_count = 0;
  /// Counterexamples, sorted. Empty iff the check passed.
  std::vector<std::string> failures;
  std::chrono::milliseconds elapsed{0};

  bool passed() const noexcept { return failures.empty(); }
};

struct VerifyOptions {
  /// Overrides the suite's default range bound.
  std::optional<std::uint64_t> max;
  unsigned workers = 1;
  /// Iteration cap for trajectory-following checks.
  std::uint64_t cap = 10'000;
};

struct SuiteInfo {
  std::string name;
  std::string description;
  std::uint64_t default_max;
};

/// Registered suites in a fixed order.
const std::vector<SuiteInfo>& verify_suites();

/// Runs one named suite. Throws InvalidArgument for an unknown name.
VerifyReport run_suite(std::string_view name, const VerifyOptions& options);

/// Outcome of one sweep shard element: nullopt on success, otherwise the
/// counterexample description.
using CheckFn = std::function<std::optional<std::string>(std::uint64_t)>;

struct SweepTally {
  std::uint64_t pass_count = 0;
  std::vector<std::string> failures;
};

/// Applies check to lo, lo+stride, ... <= hi across workers threads. The
/// tally does not depend on the worker count: failures are ordered by input.
SweepTally sharded_sweep(std::uint64_t lo, std::uint64_t hi, std::uint64_t stride,
                         unsigned workers, const CheckFn& check);

/// Rows (n, a1, a2) of the published table of the first 22 odd numbers of
/// sequence length 2, transcribed verbatim.
struct PublishedLength2Row {
  std::uint64_t n;
  std::uint64_t a1;
  std::uint64_t a2;
};
const std::vector<PublishedLength2Row>& published_length2_table();

}  // namespace collatz
