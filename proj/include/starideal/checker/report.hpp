#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace starideal::check {

/// A failing instance, each role printed in the backend's literal syntax.
struct Witness {
  std::vector<std::pair<std::string, std::string>> roles;
  /// Set when the instance came from a targeted probe rather than the scan.
  bool targeted = false;
};

struct ConditionResult {
  std::string label;
  std::string group;
  bool holds = true;
  std::optional<Witness> witness;
  std::string note;
};

/// How the conditions of one group relate to the rest of the report.
enum class GroupMode {
  equivalent,     // every condition in the group shares one truth value
  must_hold,      // a consequence of the axioms or of earlier checks; must be true
  informational,  // evaluated and reported, nothing asserted
};

struct GroupInfo {
  std::string name;
  GroupMode mode = GroupMode::equivalent;
};

/// "from ⟹ to" between group truth values, or ⟺ when `both_ways`.
struct Relation {
  std::string from;
  std::string to;
  bool both_ways = false;
};

struct EquivalenceReport {
  std::string structure;
  std::string star;
  std::string suite;
  std::string scope;
  bool exhaustive = false;
  std::vector<GroupInfo> groups;
  std::vector<ConditionResult> conditions;
  std::vector<Relation> relations;
  bool consistent = true;
  std::vector<std::string> violations;

  /// Truth of a group; nullopt when its members disagree or it is absent.
  std::optional<bool> group_value(const std::string& group) const;
  const ConditionResult* find(const std::string& label) const;
};

/// Recomputes `consistent` and `violations` from groups and relations.
void assess(EquivalenceReport& report);

nlohmann::ordered_json to_json(const EquivalenceReport& report);

}  // namespace starideal::check
