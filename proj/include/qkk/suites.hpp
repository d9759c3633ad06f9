#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qkk/halfint.hpp"
#include "qkk/report.hpp"

namespace qkk {

/// Bad configuration (unknown suite, q outside a suite's range, ...), as opposed to a failed check.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
  std::string suite;
  double q = -0.5;
  HalfInt lmax = 20;
  double tol_identity = 1e-10;
  double tol_decay = 1e-8;
  int t_grid = 11;
  int n = 3;
  int D = 10;
  std::optional<int> L0;                   // tail cut for fredholm/rotation; default min(15, lmax − 2)
  std::optional<std::string> precision;    // "standard" | "extended"; lemma2 default picks by |q|
  std::uint64_t seed = 20240611;

  /// Echo for the report "parameters" block; lmax as "n" or "n/2".
  Json to_json() const;
};

struct SuiteInfo {
  std::string name;
  std::vector<std::string> required;
  std::vector<std::string> anchors;
  std::string summary;
};

const std::vector<SuiteInfo>& suite_catalog();
Json catalog_json();

/// Throws UsageError for invalid configurations.
VerificationReport run_suite(const SuiteConfig& config);

}  // namespace qkk
