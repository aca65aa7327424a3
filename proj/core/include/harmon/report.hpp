#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace harmon {

/** One named measurement compared against its tolerance. */
struct CheckResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

using ParamValue = std::variant<std::string, double, long long, bool>;

/** Outcome of one command run: the checks performed, the parameters they ran
    with, and the wall time.  Serializes to a stable JSON shape. */
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, ParamValue>> params;
  std::vector<CheckResult> checks;
  double wall_seconds = 0.0;

  void set_param(std::string name, std::string value);
  void set_param(std::string name, const char* value);
  void set_param(std::string name, double value);
  void set_param(std::string name, long long value);
  void set_param(std::string name, int value);
  void set_param(std::string name, unsigned value);
  void set_param(std::string name, bool value);

  /** Records a deviation that must stay at or below tolerance. */
  CheckResult& require_below(std::string name, double measured, double tolerance);
  /** Records a quantity that must stay at or above floor.  The deviation
      column holds floor - measured (negative = margin) against tolerance 0. */
  CheckResult& require_at_least(std::string name, double measured, double floor);

  /** Appends another report's checks. */
  void merge(const RunReport& other);

  bool all_pass() const;

  /** {"schema": 1, "command", "params", "checks": [{"check",
      "max_deviation", "tolerance", "pass"}], "wall_seconds"}. */
  std::string to_json() const;
  /** One aligned "[PASS]/[FAIL] name ..." line per check. */
  std::string to_text() const;
};

/** Wall-clock stopwatch started at construction. */
class WallTimer {
 public:
  WallTimer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace harmon
