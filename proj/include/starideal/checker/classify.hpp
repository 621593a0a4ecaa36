#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "starideal/checker/suites.hpp"
#include "starideal/core/parallel.hpp"

namespace starideal::check {

/// One flag with the witness that refutes it when false.
struct Flag {
  std::string name;
  bool value = true;
  std::optional<Witness> witness;
};

struct StarProfile {
  std::string star;
  std::vector<Flag> flags;  // fixed order, see star_flag_names()
  std::vector<EquivalenceReport> reports;

  bool flag(const std::string& name) const;
};

struct ClassificationReport {
  std::string structure;
  std::string scope;
  std::vector<StarProfile> stars;
  std::vector<Flag> derived;  // fixed order, see derived_flag_names()
  std::vector<std::string> violations;
  bool consistent = true;

  bool flag(const std::string& name) const;
};

inline const std::vector<std::string>& star_flag_names() {
  static const std::vector<std::string> names{"prufer", "v-prufer", "cicd",   "v-cicd",           "dedekind",
                                              "v-dedekind", "stable", "ab", "finite-character", "noetherian"};
  return names;
}

inline const std::vector<std::string>& derived_flag_names() {
  static const std::vector<std::string> names{"v-domain",        "cicd",           "krull-like", "pseudo-principal",
                                              "pseudo-dedekind", "ggcd",           "product-dual"};
  return names;
}

/// `full` adds every suite report under each star.
nlohmann::ordered_json to_json(const ClassificationReport& report, bool full = false);

namespace detail {

/// Group value of `group` in `report` as a flag, with the first witness of a
/// failing condition in that group.
Flag flag_from(const std::string& name, const EquivalenceReport& report, const std::string& group,
               std::vector<std::string>& violations);

template <IdealSystem Sys>
bool is_principal(const Sys& sys, const typename Sys::ideal_type& a) {
  if constexpr (requires { sys.is_principal(a); }) {
    return sys.is_principal(a);
  } else {
    const auto gens = sys.minimal_generators(a);
    return gens.size() == 1 && sys.principal(gens.front()) == a;
  }
}

}  // namespace detail

/// Runs every suite for every listed star, derives the structure flags and
/// checks the implication lattice.  `stars` must include operations acting as
/// d and v on the scope.  Stars are profiled on up to `threads` workers.
template <IdealSystem Sys>
ClassificationReport classify(const Sys& sys, const std::vector<StarOperation<Sys>>& stars, const Scope<Sys>& scope,
                              unsigned threads = 1) {
  ClassificationReport out;
  out.structure = sys.describe();
  out.scope = scope.description;
  auto& bad = out.violations;

  auto find_star = [&](const std::string& name) -> const StarOperation<Sys>* {
    for (const auto& s : stars)
      if (s.name() == name) return &s;
    return nullptr;
  };
  // The listed operation acting as `builtin` on the scope (d = v collapses names).
  auto acting_as = [&](const StarOperation<Sys>& builtin) -> std::string {
    if (find_star(builtin.name())) return builtin.name();
    for (const auto& s : stars)
      if (star_leq_on(sys, s, builtin, scope.ideals) && star_leq_on(sys, builtin, s, scope.ideals)) return s.name();
    throw UsageError("classification needs an operation acting as " + builtin.name());
  };
  const std::string d_name = acting_as(identity_star(sys)), v_name = acting_as(divisorial_star(sys));

  out.stars.resize(stars.size());
  std::vector<std::vector<std::string>> star_violations(stars.size());
  parallel_for(stars.size(), threads, [&](std::size_t si) {
    const auto& star = stars[si];
    auto& bad = star_violations[si];
    StarProfile p{star.name(), {}, {}};
    for (const auto& name : suite_names()) {
      p.reports.push_back(run_suite(name, sys, star, scope));
      for (const auto& v : p.reports.back().violations)
        bad.push_back(star.name() + "/" + name + ": " + v);
    }
    auto report = [&](const std::string& suite) -> const EquivalenceReport& {
      for (const auto& r : p.reports)
        if (r.suite == suite) return r;
      throw ConsistencyError("missing suite " + suite);
    };
    p.flags.push_back(detail::flag_from("prufer", report("prufer"), "star-prufer", bad));
    p.flags.push_back(detail::flag_from("v-prufer", report("prufer-quotient"), "star-v-prufer", bad));
    p.flags.push_back(detail::flag_from("cicd", report("cicd"), "star-cicd", bad));
    p.flags.push_back(detail::flag_from("v-cicd", report("v-cicd"), "star-v-cicd", bad));
    p.flags.push_back(detail::flag_from("dedekind", report("dedekind"), "star-dedekind", bad));
    p.flags.push_back(detail::flag_from("v-dedekind", report("dedekind"), "star-v-dedekind", bad));
    p.flags.push_back(detail::flag_from("stable", report("stability"), "stable", bad));
    p.flags.push_back(detail::flag_from("ab", report("necessary"), "ab", bad));
    Flag fc{"finite-character", true, std::nullopt};
    const auto star_f = finite_character(star);
    for (const auto& a : scope.ideals)
      if (!(star_f(a) == star(a))) {
        fc = {"finite-character", false, Witness{{{"A", sys.format(a)}}, false}};
        break;
      }
    p.flags.push_back(fc);
    p.flags.push_back(detail::flag_from("noetherian", report("dedekind"), "star-noetherian", bad));
    out.stars[si] = std::move(p);
  });
  for (auto& v : star_violations) bad.insert(bad.end(), v.begin(), v.end());

  auto profile = [&](const std::string& name) -> const StarProfile& {
    for (const auto& p : out.stars)
      if (p.star == name) return p;
    throw ConsistencyError("missing star " + name);
  };
  auto flag_of = [&](const std::string& star, const std::string& flag) -> Flag {
    for (const auto& f : profile(star).flags)
      if (f.name == flag) return f;
    throw ConsistencyError("missing flag " + flag);
  };
  auto renamed = [](Flag f, std::string name) {
    f.name = std::move(name);
    return f;
  };

  // Derived flags.
  const Ops<Sys> o(sys, *find_star(v_name));
  const auto descriptor = sys.complete_integral_closure();
  out.derived.push_back(renamed(flag_of(v_name, "prufer"), "v-domain"));
  Flag cicd = renamed(flag_of(v_name, "cicd"), "cicd");
  if (cicd.value != descriptor.equals_domain) {
    const std::string msg = "CICD on the scope is " + std::string(cicd.value ? "true" : "false") +
                            " but the complete integral closure " + descriptor.description +
                            (descriptor.equals_domain ? " equals" : " differs from") + " the domain";
    if (scope.exhaustive() || !cicd.value) bad.push_back(msg);
    cicd.value = descriptor.equals_domain;
  }
  out.derived.push_back(cicd);
  if (find_star("t")) {
    out.derived.push_back(renamed(flag_of("t", "dedekind"), "krull-like"));
  } else {
    // Every ideal is finitely generated here, so t coincides with v.
    const auto t = t_star(sys);
    auto r = run_suite("dedekind", sys, t, scope);
    out.derived.push_back(detail::flag_from("krull-like", r, "star-dedekind", bad));
  }
  Flag pp{"pseudo-principal", true, std::nullopt};
  for (const auto& a : scope.ideals)
    if (!detail::is_principal(sys, o.v(a))) {
      pp = {"pseudo-principal", false, Witness{{{"A", sys.format(a)}, {"A^v", sys.format(o.v(a))}}, false}};
      break;
    }
  out.derived.push_back(pp);
  out.derived.push_back(renamed(flag_of(d_name, "v-cicd"), "pseudo-dedekind"));
  out.derived.push_back(renamed(flag_of(d_name, "v-prufer"), "ggcd"));
  Flag pd{"product-dual", true, std::nullopt};
  for (const auto& a : scope.ideals) {
    for (const auto& b : scope.ideals)
      if (!(o.inv(o.mul(a, b)) == o.mul(o.inv(a), o.inv(b)))) {
        pd = {"product-dual", false, Witness{{{"F", sys.format(a)}, {"G", sys.format(b)}}, false}};
        break;
      }
    if (!pd.value) break;
  }
  out.derived.push_back(pd);

  // Implication lattice.
  const bool cicd_domain = out.flag("cicd"), v_domain = out.flag("v-domain");
  for (const auto& p : out.stars) {
    auto f = [&](const std::string& n) { return p.flag(n); };
    auto require = [&](bool premise, bool conclusion, const std::string& what) {
      if (premise && !conclusion) bad.push_back(p.star + ": " + what);
    };
    require(f("cicd"), f("v-cicd"), "star-CICD without (star,v)-CICD");
    require(f("v-cicd"), cicd_domain, "(star,v)-CICD on a domain that is not CICD");
    require(f("prufer"), f("v-prufer"), "star-Prufer without (star,v)-Prufer");
    require(f("v-prufer"), v_domain, "(star,v)-Prufer on a domain that is not a v-domain");
    require(f("cicd"), f("prufer"), "star-CICD without star-Prufer");
  }
  // Monotonicity: only pairs where a flag drops need the pointwise order.
  const std::vector<std::string> monotone{"prufer", "v-prufer", "cicd", "v-cicd"};
  std::vector<unsigned> mask(stars.size(), 0);
  for (std::size_t i = 0; i < stars.size(); ++i)
    for (std::size_t k = 0; k < monotone.size(); ++k)
      if (out.stars[i].flag(monotone[k])) mask[i] |= 1u << k;
  std::vector<std::vector<IdealOf<Sys>>> closed(stars.size());
  auto closures = [&](std::size_t i) -> const std::vector<IdealOf<Sys>>& {
    if (closed[i].empty())
      for (const auto& a : scope.ideals) closed[i].push_back(stars[i](a));
    return closed[i];
  };
  for (std::size_t i = 0; i < stars.size(); ++i)
    for (std::size_t j = 0; j < stars.size(); ++j) {
      const unsigned drop = mask[i] & ~mask[j];
      if (i == j || drop == 0) continue;
      const auto& lo = closures(i);
      const auto& hi = closures(j);
      bool leq = true;
      for (std::size_t k = 0; k < lo.size() && leq; ++k) leq = sys.subset(lo[k], hi[k]);
      if (!leq) continue;
      for (std::size_t k = 0; k < monotone.size(); ++k)
        if (drop & (1u << k))
          bad.push_back(monotone[k] + " holds for " + stars[i].name() + " but not for the larger " + stars[j].name());
    }

  // Pointwise facts: invertible ideals are v-ideals, w- and t-invertibility agree.
  const auto w = w_star(sys), t = t_star(sys);
  const Ops<Sys> ow(sys, w), ot(sys, t);
  for (const auto& a : scope.ideals) {
    if (ow.invertible(a) != ot.invertible(a)) bad.push_back("w- and t-invertibility differ at " + sys.format(a));
    for (const auto& star : stars) {
      const Ops<Sys> os(sys, star);
      if (os.invertible(a) && !(os.st(a) == os.v(a)))
        bad.push_back(star.name() + "-invertible " + sys.format(a) + " has A* != A^v");
    }
  }
  out.consistent = bad.empty();
  return out;
}

}  // namespace starideal::check
