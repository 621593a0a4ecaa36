#include "starideal/checker/report.hpp"

#include <map>

namespace starideal::check {

std::optional<bool> EquivalenceReport::group_value(const std::string& group) const {
  std::optional<bool> value;
  for (const auto& c : conditions) {
    if (c.group != group) continue;
    if (value && *value != c.holds) return std::nullopt;
    value = c.holds;
  }
  return value;
}

const ConditionResult* EquivalenceReport::find(const std::string& label) const {
  for (const auto& c : conditions)
    if (c.label == label) return &c;
  return nullptr;
}

void assess(EquivalenceReport& report) {
  report.violations.clear();
  for (const auto& g : report.groups) {
    auto value = report.group_value(g.name);
    if (g.mode == GroupMode::informational) continue;
    if (!value) {
      report.violations.push_back("conditions of '" + g.name + "' disagree");
    } else if (g.mode == GroupMode::must_hold && !*value) {
      report.violations.push_back("'" + g.name + "' must hold but fails");
    }
  }
  for (const auto& r : report.relations) {
    auto a = report.group_value(r.from), b = report.group_value(r.to);
    if (!a || !b) continue;  // already reported as a disagreement
    if (*a && !*b) report.violations.push_back("'" + r.from + "' holds but '" + r.to + "' fails");
    if (r.both_ways && *b && !*a) report.violations.push_back("'" + r.to + "' holds but '" + r.from + "' fails");
  }
  report.consistent = report.violations.empty();
}

nlohmann::ordered_json to_json(const EquivalenceReport& report) {
  nlohmann::ordered_json j;
  j["structure"] = report.structure;
  j["star"] = report.star;
  j["suite"] = report.suite;
  j["scope"] = report.scope;
  auto conds = nlohmann::ordered_json::array();
  for (const auto& c : report.conditions) {
    nlohmann::ordered_json e;
    e["label"] = c.label;
    e["group"] = c.group;
    e["holds"] = c.holds;
    if (c.witness) {
      nlohmann::ordered_json w;
      for (const auto& [role, text] : c.witness->roles) w[role] = text;
      e["witness"] = w;
      if (c.witness->targeted) e["targeted"] = true;
    }
    if (!c.note.empty()) e["note"] = c.note;
    conds.push_back(std::move(e));
  }
  j["conditions"] = std::move(conds);
  j["consistent"] = report.consistent;
  if (!report.violations.empty()) j["violations"] = report.violations;
  return j;
}

}  // namespace starideal::check
