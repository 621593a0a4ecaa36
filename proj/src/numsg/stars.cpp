#include "starideal/numsg/stars.hpp"

#include <algorithm>

#include "starideal/error.hpp"

namespace starideal::numsg {

IdealCatalog::IdealCatalog(NumericalSemigroup sys) : sys_(std::move(sys)), ideals_(sys_.normalized_ideals()) {
  const std::size_t n = ideals_.size();
  for (std::size_t i = 0; i < n; ++i) index_.emplace(ideals_[i].window(), i);
  vclosure_.reserve(n);
  for (const auto& e : ideals_) vclosure_.push_back(index_of(v_closure(sys_, e)));
  colons_.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) colons_.push_back(sys_.colon(ideals_[j], ideals_[i]));
}

std::size_t IdealCatalog::index_of(const SgIdeal& a) const {
  auto it = index_.find(a.window());
  if (!sys_.owns(a) || it == index_.end())
    throw ConsistencyError("ideal " + sys_.format(a) + " has no normalized catalog entry");
  return it->second;
}

namespace {

class TableSearch {
 public:
  TableSearch(const IdealCatalog& catalog, const std::function<void(std::span<const std::uint16_t>)>& visit,
              const EnumerationLimits& limits)
      : cat_(catalog), sys_(catalog.system()), visit_(visit), limits_(limits), closure_(catalog.size()) {
    const std::size_t n = catalog.size();
    candidates_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& top = catalog[catalog.divisorial_of(i)];
      candidates_[i].push_back(static_cast<std::uint16_t>(i));
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && sys_.subset(catalog[i], catalog[k]) && sys_.subset(catalog[k], top))
          candidates_[i].push_back(static_cast<std::uint16_t>(k));
    }
  }

  std::size_t run() {
    descend(cat_.size());
    return count_;
  }

 private:
  // Ideals are decided from the largest index down, so every proper
  // enlargement of E_i is already decided when E_i is.
  void descend(std::size_t remaining) {
    if (remaining == 0) {
      if (count_ >= limits_.max_stars)
        throw EnumerationTooLarge("more than " + std::to_string(limits_.max_stars) + " star operations",
                                  count_);
      ++count_;
      visit_(std::span<const std::uint16_t>(closure_));
      return;
    }
    const std::size_t i = remaining - 1;
    for (std::uint16_t k : candidates_[i]) {
      if (k != i && closure_[k] != k) continue;
      closure_[i] = k;
      if (consistent(i)) descend(i);
    }
  }

  // (E_j : E_i) ⊆ (c(E_j) : c(E_i)) in both directions against every decided j.
  bool consistent(std::size_t i) const {
    const std::size_t n = cat_.size();
    const std::size_t ci = closure_[i];
    for (std::size_t j = i; j < n; ++j) {
      const std::size_t cj = closure_[j];
      if (!sys_.subset(cat_.colon(j, i), cat_.colon(cj, ci))) return false;
      if (j != i && !sys_.subset(cat_.colon(i, j), cat_.colon(ci, cj))) return false;
    }
    return true;
  }

  const IdealCatalog& cat_;
  const NumericalSemigroup& sys_;
  const std::function<void(std::span<const std::uint16_t>)>& visit_;
  EnumerationLimits limits_;
  ClosureTable closure_;
  std::vector<std::vector<std::uint16_t>> candidates_;
  std::size_t count_ = 0;
};

}  // namespace

std::size_t for_each_star_table(const IdealCatalog& catalog,
                                const std::function<void(std::span<const std::uint16_t>)>& visit,
                                const EnumerationLimits& limits) {
  if (catalog.size() > limits.max_ideals)
    throw EnumerationTooLarge(std::to_string(catalog.size()) + " normalized ideals exceed the limit of " +
                                  std::to_string(limits.max_ideals),
                              0);
  return TableSearch(catalog, visit, limits).run();
}

std::size_t count_star_operations(const IdealCatalog& catalog, const EnumerationLimits& limits) {
  return for_each_star_table(catalog, [](std::span<const std::uint16_t>) {}, limits);
}

SgStar table_star(std::shared_ptr<const IdealCatalog> catalog, ClosureTable closure, std::string name) {
  const NumericalSemigroup& sys = catalog->system();
  return SgStar(std::move(name), StarKind::table, sys,
                [catalog = std::move(catalog), closure = std::move(closure)](const SgIdeal& a) {
                  const auto& sys = catalog->system();
                  return sys.scale((*catalog)[closure[catalog->index_of(a)]], a.offset());
                });
}

std::vector<SgStar> enumerate_star_operations(const NumericalSemigroup& sys, const EnumerationLimits& limits) {
  auto catalog = std::make_shared<const IdealCatalog>(sys);
  const std::size_t n = catalog->size();
  std::vector<ClosureTable> tables;
  for_each_star_table(
      *catalog, [&](std::span<const std::uint16_t> c) { tables.emplace_back(c.begin(), c.end()); }, limits);
  std::vector<SgStar> out;
  out.reserve(tables.size());
  std::size_t unnamed = 0;
  for (auto& table : tables) {
    bool identity = true, divisorial = true;
    for (std::size_t i = 0; i < n; ++i) {
      identity = identity && table[i] == i;
      divisorial = divisorial && table[i] == catalog->divisorial_of(i);
    }
    std::string name = identity ? "d" : divisorial ? "v" : "s" + std::to_string(++unnamed);
    out.push_back(table_star(catalog, std::move(table), std::move(name)));
  }
  return out;
}

ClosureTable tabulate(const IdealCatalog& catalog, const SgStar& star) {
  ClosureTable out;
  out.reserve(catalog.size());
  for (const auto& e : catalog.ideals()) out.push_back(static_cast<std::uint16_t>(catalog.index_of(star(e))));
  return out;
}

std::vector<std::string> describe_table(const IdealCatalog& catalog, std::span<const std::uint16_t> closure) {
  const auto& sys = catalog.system();
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < catalog.size(); ++i)
    lines.push_back(sys.format(catalog[i]) + " -> " + sys.format(catalog[closure[i]]));
  return lines;
}

}  // namespace starideal::numsg
