#include "starideal/checker/classify.hpp"

namespace starideal::check {

namespace {

bool lookup(const std::vector<Flag>& flags, const std::string& name) {
  for (const auto& f : flags)
    if (f.name == name) return f.value;
  throw UsageError("unknown flag '" + name + "'");
}

nlohmann::ordered_json witness_json(const Witness& w) {
  nlohmann::ordered_json j;
  for (const auto& [role, text] : w.roles) j[role] = text;
  return j;
}

nlohmann::ordered_json flags_json(const std::vector<Flag>& flags) {
  nlohmann::ordered_json values, witnesses = nlohmann::ordered_json::object();
  for (const auto& f : flags) {
    values[f.name] = f.value;
    if (!f.value && f.witness) witnesses[f.name] = witness_json(*f.witness);
  }
  return {{"flags", values}, {"witnesses", witnesses}};
}

}  // namespace

bool StarProfile::flag(const std::string& name) const { return lookup(flags, name); }
bool ClassificationReport::flag(const std::string& name) const { return lookup(derived, name); }

namespace detail {

Flag flag_from(const std::string& name, const EquivalenceReport& report, const std::string& group,
               std::vector<std::string>& violations) {
  auto value = report.group_value(group);
  if (!value) {
    violations.push_back(report.suite + ": group '" + group + "' has no single value");
    value = false;
  }
  Flag f{name, *value, std::nullopt};
  if (!f.value)
    for (const auto& c : report.conditions)
      if (c.group == group && c.witness) {
        f.witness = c.witness;
        break;
      }
  return f;
}

}  // namespace detail

nlohmann::ordered_json to_json(const ClassificationReport& report, bool full) {
  nlohmann::ordered_json j;
  j["structure"] = report.structure;
  j["scope"] = report.scope;
  auto stars = nlohmann::ordered_json::array();
  for (const auto& p : report.stars) {
    nlohmann::ordered_json s;
    s["star"] = p.star;
    auto f = flags_json(p.flags);
    s["flags"] = f["flags"];
    s["witnesses"] = f["witnesses"];
    nlohmann::ordered_json suites;
    for (const auto& r : p.reports) suites[r.suite] = r.consistent;
    s["suites_consistent"] = suites;
    if (full) {
      auto reports = nlohmann::ordered_json::array();
      for (const auto& r : p.reports) reports.push_back(to_json(r));
      s["reports"] = reports;
    }
    stars.push_back(std::move(s));
  }
  j["star_count"] = report.stars.size();
  j["stars"] = std::move(stars);
  auto d = flags_json(report.derived);
  j["derived"] = d["flags"];
  j["derived_witnesses"] = d["witnesses"];
  j["consistent"] = report.consistent;
  if (!report.violations.empty()) j["violations"] = report.violations;
  return j;
}

}  // namespace starideal::check
