#include "starideal/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "starideal/checker/classify.hpp"
#include "starideal/core/parallel.hpp"
#include "starideal/numsg/stars.hpp"
#include "starideal/text.hpp"

namespace starideal::cli {

namespace {

struct Options {
  std::string structure;
  std::string suite;
  std::string star = "all";
  bool json = false;
  bool full = false;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  long bound = 5;
  int max_generators = 5;
  long radius = -1;
  std::size_t max_stars = 5'000'000;
  long N = 0;
  long f = 1;
  int k = 2;
  std::string replay;
};

template <IdealSystem Sys>
std::vector<StarOperation<Sys>> select_stars(const std::vector<StarOperation<Sys>>& all, const std::string& which) {
  if (which == "all" || which == "enumerated") return all;
  std::vector<StarOperation<Sys>> out;
  for (const auto& name : text::split_list(which)) {
    auto it = std::find_if(all.begin(), all.end(), [&](const auto& s) { return s.name() == name; });
    if (it == all.end()) throw UsageError("unknown star operation '" + name + "'");
    out.push_back(*it);
  }
  return out;
}

void check_suite(const std::string& suite) {
  const auto& names = check::suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw UsageError("unknown suite '" + suite + "'");
}

std::string truth(bool b) { return b ? "true" : "false"; }

// Column padding leaves trailing blanks on the last cell.
void emit(std::ostream& out, const std::ostringstream& line) {
  auto text = line.str();
  text.erase(text.find_last_not_of(' ') + 1);
  out << text << "\n";
}

void print_report(std::ostream& out, const check::EquivalenceReport& r) {
  out << r.structure << "  star " << r.star << "  suite " << r.suite << "\n  scope: " << r.scope << "\n";
  std::size_t width = 5;
  for (const auto& c : r.conditions) width = std::max(width, c.label.size());
  for (const auto& c : r.conditions) {
    std::ostringstream line;
    line << "  " << std::left << std::setw(static_cast<int>(width)) << c.label << "  " << std::setw(5) << truth(c.holds);
    if (c.witness) {
      line << " ";
      for (const auto& [role, text] : c.witness->roles) line << " " << role << "=" << text;
      if (c.witness->targeted) line << "  (probe)";
    }
    emit(out, line);
  }
  out << "  consistent: " << (r.consistent ? "yes" : "NO") << "\n";
  for (const auto& v : r.violations) out << "  violation: " << v << "\n";
}

void print_classification(std::ostream& out, const check::ClassificationReport& r) {
  out << r.structure << "  (" << r.stars.size() << " star operation" << (r.stars.size() == 1 ? "" : "s") << ")\n";
  out << "  scope: " << r.scope << "\n";
  std::size_t width = 4;
  for (const auto& p : r.stars) width = std::max(width, p.star.size());
  out << "  " << std::left << std::setw(static_cast<int>(width)) << "star";
  for (const auto& n : check::star_flag_names()) out << "  " << n;
  out << "\n";
  for (const auto& p : r.stars) {
    std::ostringstream line;
    line << "  " << std::left << std::setw(static_cast<int>(width)) << p.star;
    for (const auto& fl : p.flags) line << "  " << std::setw(static_cast<int>(fl.name.size())) << (fl.value ? "y" : "-");
    emit(out, line);
  }
  for (const auto& fl : r.derived) {
    out << "  " << std::left << std::setw(17) << fl.name << truth(fl.value);
    if (!fl.value && fl.witness)
      for (const auto& [role, text] : fl.witness->roles) out << "  " << role << "=" << text;
    out << "\n";
  }
  out << "  consistent: " << (r.consistent ? "yes" : "NO") << "\n";
  for (const auto& v : r.violations) out << "  violation: " << v << "\n";
}

// Witnesses from a saved report stream, re-evaluated against this structure.
template <IdealSystem Sys>
int replay(const Sys& sys, const std::vector<StarOperation<Sys>>& stars, const std::string& path,
           std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open replay file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("replay file '" + path + "' is not JSON: " + e.what());
  }
  if (!doc.is_array()) doc = nlohmann::json::array({doc});
  std::size_t checked = 0, failed = 0;
  for (const auto& rep : doc) {
    if (!rep.contains("suite") || !rep.contains("star") || !rep.contains("conditions"))
      throw UsageError("replay entry lacks suite, star or conditions");
    const std::string star_name = rep["star"], suite_name = rep["suite"];
    check_suite(suite_name);
    const auto chosen = select_stars(stars, star_name);
    const auto suite = check::make_suite(suite_name, sys, chosen.front());
    for (const auto& c : rep["conditions"]) {
      if (!c.contains("witness")) continue;
      check::Witness w;
      for (const auto& item : c["witness"].items()) w.roles.emplace_back(item.key(), item.value().template get<std::string>());
      const std::string label = c["label"];
      const bool holds = check::replay(sys, suite, label, w);
      ++checked;
      if (holds) ++failed;
      out << star_name << " " << suite_name << " " << label << ": " << (holds ? "NOT reproduced" : "reproduced")
          << "\n";
    }
  }
  out << checked << " witnesses replayed, " << (checked - failed) << " reproduced\n";
  if (failed) {
    err << "error: " << failed << " witness(es) did not reproduce\n";
    return ExitCode::usage;
  }
  return ExitCode::ok;
}

template <IdealSystem Sys>
int verify(const Sys& sys, const std::vector<StarOperation<Sys>>& all, const check::Scope<Sys>& scope,
           const Options& opt, std::ostream& out, std::ostream& err) {
  const auto stars = select_stars(all, opt.star);
  if (!opt.replay.empty()) return replay(sys, stars, opt.replay, out, err);
  if (opt.suite.empty()) throw UsageError("--suite is required");
  std::vector<std::string> suites = opt.suite == "all" ? check::suite_names() : text::split_list(opt.suite);
  for (const auto& s : suites) check_suite(s);
  std::vector<check::EquivalenceReport> reports(stars.size() * suites.size());
  parallel_for(reports.size(), thread_budget(), [&](std::size_t i) {
    reports[i] = check::run_suite(suites[i % suites.size()], sys, stars[i / suites.size()], scope);
  });
  bool consistent = true;
  for (const auto& r : reports) consistent = consistent && r.consistent;
  if (opt.json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(check::to_json(r));
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report(out, r);
  }
  if (!consistent) {
    err << "error: theorem violation: a suite is internally inconsistent\n";
    return ExitCode::theorem_violation;
  }
  return ExitCode::ok;
}

template <IdealSystem Sys>
int classify(const Sys& sys, const std::vector<StarOperation<Sys>>& stars, const check::Scope<Sys>& scope,
             const Options& opt, std::ostream& out, std::ostream& err) {
  const auto report = check::classify(sys, stars, scope, thread_budget());
  if (opt.json)
    out << check::to_json(report, opt.full).dump(2) << "\n";
  else
    print_classification(out, report);
  if (!report.consistent) {
    err << "error: theorem violation: classification is inconsistent\n";
    return ExitCode::theorem_violation;
  }
  return ExitCode::ok;
}

int stars_listing(const numsg::NumericalSemigroup& sys, const Options& opt, std::ostream& out, std::ostream& err) {
  numsg::EnumerationLimits limits;
  limits.max_stars = opt.max_stars;
  std::vector<numsg::SgStar> stars;
  try {
    stars = numsg::enumerate_star_operations(sys, limits);
  } catch (const EnumerationTooLarge& e) {
    err << "error: " << e.what() << " (" << e.partial_count() << " found before stopping)\n";
    return ExitCode::usage;
  }
  const auto scope = check::exhaustive_scope(sys, opt.radius);
  auto catalog = std::make_shared<const numsg::IdealCatalog>(sys);
  auto json = nlohmann::ordered_json::array();
  if (!opt.json) out << sys.describe() << ": " << stars.size() << " star operation" << (stars.size() == 1 ? "" : "s") << "\n";
  bool consistent = true;
  for (const auto& star : stars) {
    const auto stab = check::suite_stability(sys, star, scope);
    const auto nec = check::check_necessary(sys, star, scope);
    consistent = consistent && stab.consistent && nec.consistent;
    const bool stable = stab.group_value("stable").value_or(false);
    const bool ab = nec.group_value("ab").value_or(false);
    const auto fin = finite_character(star);
    bool finite = true;
    for (const auto& a : scope.ideals) finite = finite && fin(a) == star(a);
    const auto lines = numsg::describe_table(*catalog, numsg::tabulate(*catalog, star));
    if (opt.json) {
      json.push_back({{"star", star.name()}, {"stable", stable}, {"ab", ab}, {"finite_character", finite},
                      {"table", lines}});
    } else {
      out << star.name() << ":" << (stable ? " stable" : " not-stable") << (ab ? " ab" : " not-ab")
          << (finite ? " finite-character" : " not-finite-character") << "\n";
      for (const auto& l : lines) out << "  " << l << "\n";
    }
  }
  if (opt.json) {
    nlohmann::ordered_json doc{{"structure", sys.describe()}, {"count", stars.size()}, {"stars", json}};
    out << doc.dump(2) << "\n";
  }
  if (!consistent) {
    err << "error: theorem violation in stability or necessary-condition suite\n";
    return ExitCode::theorem_violation;
  }
  return ExitCode::ok;
}

check::SampleSpec sample_spec(const Options& opt) {
  check::SampleSpec spec;
  spec.count = opt.samples;
  spec.seed = opt.seed;
  spec.bound = opt.bound;
  spec.max_generators = opt.max_generators;
  return spec;
}

void add_sampling(CLI::App* cmd, Options& opt) {
  cmd->add_option("--samples", opt.samples, "number of sampled ideals")->capture_default_str();
  cmd->add_option("--seed", opt.seed, "sampling seed")->capture_default_str();
  cmd->add_option("--bound", opt.bound, "coordinate bound for sampled generators")->capture_default_str();
}

void add_output(CLI::App* cmd, Options& opt) {
  cmd->add_flag("--json", opt.json, "machine-readable output");
}

void add_verify(CLI::App* cmd, Options& opt) {
  cmd->add_option("--suite", opt.suite, "suite name, comma list or 'all'");
  cmd->add_option("--star", opt.star, "star name, comma list, or 'all'")->capture_default_str();
  cmd->add_option("--replay", opt.replay, "re-evaluate the witnesses in a saved JSON report");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Star operations and Prufer-type characterizations on computable ideal systems", "staride"};
  app.require_subcommand(1);
  auto* ns = app.add_subcommand("ns", "numerical semigroups (exhaustive scopes)");
  ns->require_subcommand(1);
  auto* ns_classify = ns->add_subcommand("classify", "classify every star operation");
  auto* ns_stars = ns->add_subcommand("stars", "list every star operation");
  auto* ns_verify = ns->add_subcommand("verify", "run theorem suites");
  for (auto* c : {ns_classify, ns_stars, ns_verify}) {
    c->add_option("semigroup", opt.structure, "generators, e.g. 3,4,5")->required();
    c->add_option("--radius", opt.radius, "translate radius for pair partners (default: conductor)");
    add_output(c, opt);
  }
  ns_classify->add_flag("--full", opt.full, "include every suite report in JSON");
  ns_stars->add_option("--max-stars", opt.max_stars, "enumeration budget")->capture_default_str();
  add_verify(ns_verify, opt);

  auto* qo = app.add_subcommand("qo", "quadratic orders Z + f*w*Z (sampled scopes)");
  qo->require_subcommand(1);
  auto* qo_classify = qo->add_subcommand("classify", "classify d, w, t, v");
  auto* qo_verify = qo->add_subcommand("verify", "run theorem suites");
  for (auto* c : {qo_classify, qo_verify}) {
    c->add_option("--N", opt.N, "squarefree N of Q(sqrt(N))")->required()->allow_extra_args(false);
    c->add_option("--f", opt.f, "conductor f")->capture_default_str();
    add_sampling(c, opt);
    add_output(c, opt);
  }
  qo_classify->add_flag("--full", opt.full, "include every suite report in JSON");
  add_verify(qo_verify, opt);

  auto* mon = app.add_subcommand("mon", "monomial monoids N^k (sampled scopes)");
  mon->require_subcommand(1);
  auto* mon_classify = mon->add_subcommand("classify", "classify d, w, t, v");
  auto* mon_verify = mon->add_subcommand("verify", "run theorem suites");
  for (auto* c : {mon_classify, mon_verify}) {
    c->add_option("--k", opt.k, "dimension (1..4)")->capture_default_str();
    c->add_option("--max-gens", opt.max_generators, "generators per sampled ideal")->capture_default_str();
    add_sampling(c, opt);
    add_output(c, opt);
  }
  mon_classify->add_flag("--full", opt.full, "include every suite report in JSON");
  add_verify(mon_verify, opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::usage;
  }

  try {
    if (ns->parsed()) {
      const auto sys = numsg::NumericalSemigroup::parse(opt.structure);
      if (ns_stars->parsed()) return stars_listing(sys, opt, out, err);
      const auto scope = check::exhaustive_scope(sys, opt.radius);
      const auto stars = numsg::enumerate_star_operations(sys);
      if (ns_classify->parsed()) return classify(sys, stars, scope, opt, out, err);
      return verify(sys, stars, scope, opt, out, err);
    }
    if (qo->parsed()) {
      const quad::QuadraticOrder sys(opt.N, opt.f);
      const auto scope = check::sampled_scope(sys, sample_spec(opt));
      const auto stars = builtin_stars(sys);
      if (qo_classify->parsed()) return classify(sys, stars, scope, opt, out, err);
      return verify(sys, stars, scope, opt, out, err);
    }
    const mono::MonomialMonoid sys(opt.k);
    const auto scope = check::sampled_scope(sys, sample_spec(opt));
    const auto stars = builtin_stars(sys);
    if (mon_classify->parsed()) return classify(sys, stars, scope, opt, out, err);
    return verify(sys, stars, scope, opt, out, err);
  } catch (const ConsistencyError& e) {
    err << "error: internal consistency check failed: " << e.what() << "\n";
    return ExitCode::theorem_violation;
  } catch (const EnumerationTooLarge& e) {
    err << "error: " << e.what() << " (" << e.partial_count() << " found before stopping)\n";
    return ExitCode::usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::usage;
  }
}

}  // namespace starideal::cli
