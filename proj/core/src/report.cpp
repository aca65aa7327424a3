#include "harmon/report.hpp"

#include <json.hpp>

#include <cstdio>

namespace harmon {

void RunReport::set_param(std::string name, std::string value) {
  params.emplace_back(std::move(name), ParamValue(std::move(value)));
}
void RunReport::set_param(std::string name, const char* value) {
  set_param(std::move(name), std::string(value));
}
void RunReport::set_param(std::string name, double value) {
  params.emplace_back(std::move(name), ParamValue(value));
}
void RunReport::set_param(std::string name, long long value) {
  params.emplace_back(std::move(name), ParamValue(value));
}
void RunReport::set_param(std::string name, int value) {
  set_param(std::move(name), static_cast<long long>(value));
}
void RunReport::set_param(std::string name, unsigned value) {
  set_param(std::move(name), static_cast<long long>(value));
}
void RunReport::set_param(std::string name, bool value) {
  params.emplace_back(std::move(name), ParamValue(value));
}

CheckResult& RunReport::require_below(std::string name, double measured, double tolerance) {
  checks.push_back({std::move(name), measured, tolerance, measured <= tolerance});
  return checks.back();
}

CheckResult& RunReport::require_at_least(std::string name, double measured, double floor) {
  checks.push_back({std::move(name), floor - measured, 0.0, measured >= floor});
  return checks.back();
}

void RunReport::merge(const RunReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool RunReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string RunReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["command"] = command;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [key, value] : params)
    std::visit([&, k = key](const auto& v) { p[k] = v; }, value);
  doc["params"] = std::move(p);
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    list.push_back({{"check", c.name},
                    {"max_deviation", c.max_deviation},
                    {"tolerance", c.tolerance},
                    {"pass", c.pass}});
  doc["checks"] = std::move(list);
  doc["wall_seconds"] = wall_seconds;
  return doc.dump(2);
}

std::string RunReport::to_text() const {
  std::string out;
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  char line[192];
  for (const auto& c : checks) {
    std::snprintf(line, sizeof(line), "[%s] %-*s  deviation %.3e  tolerance %.3e\n",
                  c.pass ? "PASS" : "FAIL", static_cast<int>(width), c.name.c_str(),
                  c.max_deviation, c.tolerance);
    out += line;
  }
  return out;
}

}  // namespace harmon
