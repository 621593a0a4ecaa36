#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starideal/checker/report.hpp"
#include "starideal/checker/scope.hpp"
#include "starideal/core/star.hpp"
#include "starideal/error.hpp"

namespace starideal::check {

/// Which scope instances a condition part quantifies over; see Scope.
enum class Arity { single, bilinear, positioned, triple, two_generated, element_pair };

template <IdealSystem Sys>
using Tuple = std::vector<IdealOf<Sys>>;

/// One universally quantified statement.  `test` gets the ideals in role order.
template <IdealSystem Sys>
struct Part {
  Arity arity = Arity::single;
  std::vector<std::string> roles;
  std::function<bool(const Tuple<Sys>&)> test;
};

/// A concrete tuple plus the part it instantiates.
template <IdealSystem Sys>
struct Instance {
  std::size_t part = 0;
  Tuple<Sys> ideals;
};

/// What targeted probes may draw on: ideals failing the group's base
/// predicate and tuples that failed elsewhere in the suite.
template <IdealSystem Sys>
struct ProbeInput {
  std::vector<IdealOf<Sys>> keys;
  std::vector<Tuple<Sys>> failures;
};

/// A labelled condition: the conjunction of its parts.  Probes build the
/// instances a proof of "condition ⟹ base" would look at, so a sampled scope
/// still finds a witness whenever some other member of the group fails.
template <IdealSystem Sys>
struct Condition {
  std::string label;
  std::string group;
  std::vector<Part<Sys>> parts;
  std::function<std::vector<Instance<Sys>>(const ProbeInput<Sys>&)> probe;
  std::string same_as;  // copy the result of this earlier label
  std::string note;
};

template <IdealSystem Sys>
struct Group {
  GroupInfo info;
  /// Per-ideal statement whose failure makes an ideal a probe key.
  std::function<bool(const IdealOf<Sys>&)> base;
};

template <IdealSystem Sys>
struct Suite {
  std::string id;
  std::vector<Group<Sys>> groups;
  std::vector<Condition<Sys>> conditions;
  std::vector<Relation> relations;

  const Condition<Sys>& condition(const std::string& label) const {
    for (const auto& c : conditions)
      if (c.label == label) return c;
    throw UsageError("suite '" + id + "' has no condition '" + label + "'");
  }
};

namespace detail {

/// Calls visit(tuple) over the part's instances until it returns false.
template <IdealSystem Sys, class Visit>
void for_each_instance(const Sys& sys, const Scope<Sys>& scope, Arity arity, Visit&& visit) {
  const auto& I = scope.ideals;
  switch (arity) {
    case Arity::single:
      for (const auto& a : I)
        if (!visit(Tuple<Sys>{a})) return;
      return;
    case Arity::bilinear:
      for (const auto& a : I)
        for (const auto& b : I)
          if (!visit(Tuple<Sys>{a, b})) return;
      return;
    case Arity::positioned:
      for (const auto& [i, p] : scope.pairs)
        if (!visit(Tuple<Sys>{I[i], scope.partners[p]})) return;
      return;
    case Arity::triple:
      // Heads vary fastest: the unit head satisfies most identities, so
      // scanning it first would delay every witness by a full pass.
      for (const auto& [i, p] : scope.pairs)
        for (std::size_t h : scope.heads)
          if (!visit(Tuple<Sys>{I[h], I[i], scope.partners[p]})) return;
      return;
    case Arity::two_generated:
      for (const auto& [a, b] : scope.element_pairs)
        if (!visit(Tuple<Sys>{sys.sum(a, b)})) return;
      return;
    case Arity::element_pair:
      for (const auto& [a, b] : scope.element_pairs)
        if (!visit(Tuple<Sys>{a, b})) return;
      return;
  }
}

template <IdealSystem Sys>
Witness make_witness(const Sys& sys, const Part<Sys>& part, const Tuple<Sys>& t, bool targeted) {
  Witness w;
  w.targeted = targeted;
  for (std::size_t r = 0; r < part.roles.size(); ++r) w.roles.emplace_back(part.roles[r], sys.format(t[r]));
  return w;
}

template <IdealSystem Sys>
void push_unique(std::vector<IdealOf<Sys>>& out, const IdealOf<Sys>& a) {
  if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
}

}  // namespace detail

/// Runs every condition over the scope, then the targeted probes, and
/// assesses consistency.
template <IdealSystem Sys>
EquivalenceReport evaluate(const Sys& sys, const StarOperation<Sys>& star, const Scope<Sys>& scope,
                           const Suite<Sys>& suite) {
  using Ideal = IdealOf<Sys>;
  EquivalenceReport report;
  report.structure = sys.describe();
  report.star = star.name();
  report.suite = suite.id;
  report.scope = scope.description;
  report.exhaustive = scope.exhaustive();
  report.relations = suite.relations;
  for (const auto& g : suite.groups) report.groups.push_back(g.info);

  std::vector<Tuple<Sys>> failures;
  for (const auto& c : suite.conditions) {
    ConditionResult r{c.label, c.group, true, std::nullopt, c.note};
    if (!c.same_as.empty()) {
      const auto* prior = report.find(c.same_as);
      if (!prior) throw ConsistencyError("condition '" + c.label + "' refers to a later label");
      r.holds = prior->holds;
      r.witness = prior->witness;
      report.conditions.push_back(std::move(r));
      continue;
    }
    for (const auto& part : c.parts) {
      detail::for_each_instance(sys, scope, part.arity, [&](const Tuple<Sys>& t) {
        if (part.test(t)) return true;
        r.holds = false;
        r.witness = detail::make_witness(sys, part, t, false);
        failures.push_back(t);
        return false;
      });
      if (!r.holds) break;
    }
    report.conditions.push_back(std::move(r));
  }

  // Probe rounds: a targeted failure can expose keys for another group.
  for (int round = 0; round < 3; ++round) {
    std::vector<Ideal> candidates;
    for (const auto& t : failures)
      for (std::size_t i = 0; i < t.size(); ++i) {
        detail::push_unique<Sys>(candidates, t[i]);
        detail::push_unique<Sys>(candidates, inverse(sys, t[i]));
        for (std::size_t j = i + 1; j < t.size(); ++j) {
          detail::push_unique<Sys>(candidates, sys.sum(t[i], t[j]));
          detail::push_unique<Sys>(candidates, sys.intersect(t[i], t[j]));
          detail::push_unique<Sys>(candidates, sys.product(t[i], t[j]));
        }
      }
    bool changed = false;
    for (std::size_t ci = 0; ci < suite.conditions.size(); ++ci) {
      const auto& c = suite.conditions[ci];
      auto& r = report.conditions[ci];
      if (!r.holds || !c.probe || !c.same_as.empty()) continue;
      ProbeInput<Sys> input;
      input.failures = failures;
      for (const auto& g : suite.groups) {
        if (g.info.name != c.group || !g.base) continue;
        for (const auto& a : scope.ideals)
          if (!g.base(a)) {
            input.keys.push_back(a);
            break;
          }
        for (const auto& a : candidates) {
          if (input.keys.size() >= 8) break;
          if (!g.base(a)) detail::push_unique<Sys>(input.keys, a);
        }
      }
      for (const auto& inst : c.probe(input)) {
        const auto& part = c.parts.at(inst.part);
        if (part.test(inst.ideals)) continue;
        r.holds = false;
        r.witness = detail::make_witness(sys, part, inst.ideals, true);
        failures.push_back(inst.ideals);
        changed = true;
        break;
      }
    }
    for (std::size_t ci = 0; ci < suite.conditions.size(); ++ci) {
      const auto& c = suite.conditions[ci];
      if (c.same_as.empty()) continue;
      const auto* prior = report.find(c.same_as);
      report.conditions[ci].holds = prior->holds;
      report.conditions[ci].witness = prior->witness;
    }
    if (!changed) break;
  }
  assess(report);
  return report;
}

/// Re-evaluates one witness.  Returns the condition's truth on that tuple, so
/// a genuine witness replays to false.
template <IdealSystem Sys>
bool replay(const Sys& sys, const Suite<Sys>& suite, const std::string& label, const Witness& witness) {
  const auto* c = &suite.condition(label);
  if (!c->same_as.empty()) c = &suite.condition(c->same_as);
  for (const auto& part : c->parts) {
    if (part.roles.size() != witness.roles.size()) continue;
    bool match = true;
    for (std::size_t r = 0; r < part.roles.size(); ++r) match = match && part.roles[r] == witness.roles[r].first;
    if (!match) continue;
    Tuple<Sys> t;
    for (const auto& [role, text] : witness.roles) t.push_back(sys.parse_ideal(text));
    return part.test(t);
  }
  throw UsageError("witness roles do not match condition '" + label + "'");
}

}  // namespace starideal::check
