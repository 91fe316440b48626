#pragma once

// Seeded verification suites.  Each check is a pure function of the seed and
// the limits; every randomized check draws from its own SplitMix64 stream
// derived from the seed and the check's name, so results do not depend on
// which other checks ran.

#include <cstdint>
#include <string>
#include <vector>

#include "skein/json_io.hpp"

namespace skein {

struct SuiteLimits {
  int relation_box = 4;       // coordinates in [-n, n] for the relation sweep
  int assoc_samples = 200;    // random triples for associativity
  int assoc_box = 3;
  int assoc_word_len = 3;
  int strategy_samples = 200; // random words for strategy independence
  int jacobi_box = 2;
  int max_det = 20;           // certificate sweep bound on |det|
  int cert_box = 5;           // extra coordinate-box certificate sweep
  int collapse_samples = 100;
  int collapse_box = 4;
  int gl2_samples = 50;
  int field_samples = 50;
  int ring_n = 8;
  int n_max = 8;              // annulus sweeps
  int hook_max = 10;          // hooks of size <= hook_max
  int phi_samples = 100;
  int bracket_box = 3;
  int bracket_assoc_samples = 200;
  int cheb_n = 10;
  int log_n = 12;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  /// One line per check; timings only when asked for, so that the default
  /// report is byte-identical for a given seed.
  std::string to_text(bool timings = false) const;
  Json to_json(bool timings = false) const;
};

std::vector<std::string> suite_names();
/// Fully qualified names "suite.check" in execution order.
std::vector<std::string> check_names(const std::string& suite = "all");

/// Runs one check by qualified name; throws DomainError for unknown names.
CheckResult run_check(const std::string& name, std::uint64_t seed, const SuiteLimits& limits = {});

/// Runs a suite (or "all"); throws DomainError for unknown suites.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed, const SuiteLimits& limits = {});

}  // namespace skein
