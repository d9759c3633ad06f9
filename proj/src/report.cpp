#include "qkk/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace qkk {

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::below: return "<";
    case Comparison::above: return ">";
    case Comparison::equal: return "==";
    case Comparison::holds: return "holds";
  }
  return "?";
}

namespace {

Check& push(std::vector<Check>& checks, Check c) {
  checks.push_back(std::move(c));
  return checks.back();
}

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Check& VerificationReport::below(std::string name, std::string anchor, double value, double threshold) {
  return push(checks_, {std::move(name), std::move(anchor), value, threshold, Comparison::below, value < threshold});
}

Check& VerificationReport::above(std::string name, std::string anchor, double value, double threshold) {
  return push(checks_, {std::move(name), std::move(anchor), value, threshold, Comparison::above, value > threshold});
}

Check& VerificationReport::equal(std::string name, std::string anchor, double value, double expected) {
  return push(checks_, {std::move(name), std::move(anchor), value, expected, Comparison::equal, value == expected});
}

Check& VerificationReport::holds(std::string name, std::string anchor, bool ok) {
  return push(checks_, {std::move(name), std::move(anchor), ok ? 1.0 : 0.0, 1.0, Comparison::holds, ok});
}

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
  for (const auto& a : other.assumptions_)
    if (std::find(assumptions_.begin(), assumptions_.end(), a) == assumptions_.end()) assumptions_.push_back(a);
  for (auto row : other.table_) {
    row.family = prefix + row.family;
    table_.push_back(std::move(row));
  }
  if (!other.results_.empty()) results_[other.suite_] = other.results_;
}

bool VerificationReport::overall() const {
  return !checks_.empty() && std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

Json VerificationReport::to_json() const {
  if (checks_.empty()) throw std::logic_error("report for suite '" + suite_ + "' registers no checks");
  Json j;
  j["schema_version"] = report_schema_version;
  j["suite"] = suite_;
  j["parameters"] = parameters_;
  Json checks = Json::array();
  for (const auto& c : checks_) {
    Json e;
    e["name"] = c.name;
    e["anchor"] = c.anchor;
    e["value"] = number(c.value);
    e["threshold"] = number(c.threshold);
    e["comparison"] = to_string(c.comparison);
    e["pass"] = c.pass;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["assumptions"] = assumptions_;
  j["results"] = results_;
  j["overall"] = overall() ? "pass" : "fail";
  j["seed"] = seed_ ? Json(*seed_) : Json(nullptr);
  j["wall_time_ms"] = wall_time_ms_;
  return j;
}

void write_json(const VerificationReport& report, const std::filesystem::path& path) {
  const auto text = report.to_json().dump(2);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

bool write_csv(const VerificationReport& report, const std::filesystem::path& path) {
  if (report.table().empty()) return false;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << "l,family,sup_residual\n";
  out << std::setprecision(17);
  for (const auto& r : report.table()) out << r.l << ',' << r.family << ',' << r.value << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
  return true;
}

}  // namespace qkk
