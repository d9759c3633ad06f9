#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qkk {

using Json = nlohmann::ordered_json;

enum class Comparison { below, above, equal, holds };

std::string to_string(Comparison c);

struct Check {
  std::string name;
  std::string anchor;
  double value = 0.0;      // residual, measured quantity, or 1/0 for predicates
  double threshold = 0.0;  // bound or expected value
  Comparison comparison = Comparison::below;
  bool pass = false;
};

/// One row of a tabulated quantity (decay tables, tails).
struct TableRow {
  double l;
  std::string family;
  double value;
};

class VerificationReport {
public:
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }

  Json& parameters() { return parameters_; }
  const Json& parameters() const { return parameters_; }
  Json& results() { return results_; }
  const Json& results() const { return results_; }

  /// pass iff value < threshold (NaN never passes).
  Check& below(std::string name, std::string anchor, double value, double threshold);
  /// pass iff value > threshold.
  Check& above(std::string name, std::string anchor, double value, double threshold);
  /// pass iff value == expected (exact; intended for integers).
  Check& equal(std::string name, std::string anchor, double value, double expected);
  /// Boolean predicate.
  Check& holds(std::string name, std::string anchor, bool ok);

  void assume(std::string fact) { assumptions_.push_back(std::move(fact)); }
  void add_row(double l, std::string family, double value) { table_.push_back({l, std::move(family), value}); }

  /// Merges checks, assumptions and table rows of another report, prefixing check names.
  void absorb(const VerificationReport& other, const std::string& prefix);

  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::string>& assumptions() const { return assumptions_; }
  const std::vector<TableRow>& table() const { return table_; }

  bool overall() const;

  void set_seed(std::uint64_t seed) { seed_ = seed; }
  std::optional<std::uint64_t> seed() const { return seed_; }
  void set_wall_time_ms(double ms) { wall_time_ms_ = ms; }

  /// Throws std::logic_error for a report with no checks.
  Json to_json() const;

private:
  std::string suite_;
  Json parameters_ = Json::object();
  Json results_ = Json::object();
  std::vector<Check> checks_;
  std::vector<std::string> assumptions_;
  std::vector<TableRow> table_;
  std::optional<std::uint64_t> seed_;
  double wall_time_ms_ = 0.0;
};

inline constexpr const char* report_schema_version = "1.0.0";

void write_json(const VerificationReport& report, const std::filesystem::path& path);
/// Long-format CSV: l,family,sup_residual. Returns false when the report has no table.
bool write_csv(const VerificationReport& report, const std::filesystem::path& path);

}  // namespace qkk
