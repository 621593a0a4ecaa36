#include "starideal/mono/monoid.hpp"

#include <algorithm>
#include <optional>

#include "starideal/core/random.hpp"
#include "starideal/error.hpp"
#include "starideal/text.hpp"

namespace starideal::mono {

namespace {

bool dominates(const Exponent& hi, const Exponent& lo) {
  for (std::size_t i = 0; i < hi.size(); ++i)
    if (hi[i] < lo[i]) return false;
  return true;
}

// Sorted antichain of the minimal elements.
std::vector<Exponent> minimalize(std::vector<Exponent> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponent> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : gens)
      if (h != g && dominates(g, h)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

}  // namespace

MonomialMonoid::MonomialMonoid(int k) : k_(k) {
  if (k < 1 || k > kMaxDimension)
    throw UsageError("dimension k = " + std::to_string(k) + " outside 1.." + std::to_string(kMaxDimension));
}

const MonIdeal& MonomialMonoid::check(const MonIdeal& a) const {
  if (a.dimension() != k_) throw OwnerMismatch("ideal of dimension " + std::to_string(a.dimension()) +
                                               " used in N^" + std::to_string(k_));
  return a;
}

const Exponent& MonomialMonoid::check(const Exponent& x) const {
  if (static_cast<int>(x.size()) != k_)
    throw OwnerMismatch("exponent of length " + std::to_string(x.size()) + " used in N^" + std::to_string(k_));
  return x;
}

Exponent MonomialMonoid::unit_vector(int i) const {
  Exponent e(k_, 0);
  e.at(i) = 1;
  return e;
}

bool MonomialMonoid::contains(const MonIdeal& a, const Exponent& x) const {
  check(a), check(x);
  return std::any_of(a.gens_.begin(), a.gens_.end(), [&](const Exponent& g) { return dominates(x, g); });
}

MonIdeal MonomialMonoid::unit() const { return MonIdeal(k_, {Exponent(k_, 0)}); }

MonIdeal MonomialMonoid::sum(const MonIdeal& a, const MonIdeal& b) const {
  check(a), check(b);
  auto gens = a.gens_;
  gens.insert(gens.end(), b.gens_.begin(), b.gens_.end());
  return MonIdeal(k_, minimalize(std::move(gens)));
}

MonIdeal MonomialMonoid::product(const MonIdeal& a, const MonIdeal& b) const {
  check(a), check(b);
  std::vector<Exponent> gens;
  for (const auto& u : a.gens_)
    for (const auto& v : b.gens_) {
      Exponent w(k_);
      for (int i = 0; i < k_; ++i) w[i] = u[i] + v[i];
      gens.push_back(std::move(w));
    }
  return MonIdeal(k_, minimalize(std::move(gens)));
}

MonIdeal MonomialMonoid::intersect(const MonIdeal& a, const MonIdeal& b) const {
  check(a), check(b);
  std::vector<Exponent> gens;
  for (const auto& u : a.gens_)
    for (const auto& v : b.gens_) {
      Exponent w(k_);
      for (int i = 0; i < k_; ++i) w[i] = std::max(u[i], v[i]);
      gens.push_back(std::move(w));
    }
  return MonIdeal(k_, minimalize(std::move(gens)));
}

MonIdeal MonomialMonoid::colon(const MonIdeal& a, const MonIdeal& b) const {
  check(a), check(b);
  std::optional<MonIdeal> acc;
  for (const auto& g : b.gens_) {
    MonIdeal part = scale(a, inverse_element(g));
    acc = acc ? intersect(*acc, part) : part;
  }
  return *acc;
}

bool MonomialMonoid::subset(const MonIdeal& a, const MonIdeal& b) const {
  check(a), check(b);
  return std::all_of(a.gens_.begin(), a.gens_.end(), [&](const Exponent& g) { return contains(b, g); });
}

MonIdeal MonomialMonoid::principal(const Exponent& x) const { return MonIdeal(k_, {check(x)}); }

MonIdeal MonomialMonoid::scale(const MonIdeal& a, const Exponent& x) const {
  check(a), check(x);
  auto gens = a.gens_;
  for (auto& g : gens)
    for (int i = 0; i < k_; ++i) g[i] += x[i];
  return MonIdeal(k_, std::move(gens));
}

MonIdeal MonomialMonoid::generate(const std::vector<Exponent>& elements) const {
  if (elements.empty()) throw InvalidIdeal("an ideal needs at least one generator");
  for (const auto& x : elements) check(x);
  return MonIdeal(k_, minimalize(elements));
}

std::vector<Exponent> MonomialMonoid::minimal_generators(const MonIdeal& a) const { return check(a).gens_; }

Exponent MonomialMonoid::inverse_element(const Exponent& x) const {
  Exponent out = check(x);
  for (auto& c : out) c = -c;
  return out;
}

MonIdeal MonomialMonoid::w_closure(const MonIdeal& a) const {
  Exponent low = check(a).gens_.front();
  for (const auto& g : a.gens_)
    for (int i = 0; i < k_; ++i) low[i] = std::min(low[i], g[i]);
  return principal(low);
}

IntegralClosureDescriptor MonomialMonoid::complete_integral_closure() const { return {describe(), true}; }

std::string MonomialMonoid::format_element(const Exponent& x) const {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + std::to_string(x[i]);
  return out + ")";
}

std::string MonomialMonoid::format(const MonIdeal& a) const {
  std::string out;
  for (std::size_t i = 0; i < check(a).gens_.size(); ++i) out += (i ? "|" : "") + format_element(a.gens_[i]);
  return out;
}

Exponent MonomialMonoid::parse_element(std::string_view text) const {
  auto body = text::trim(text);
  if (body.size() < 2 || body.front() != '(' || body.back() != ')')
    throw UsageError("exponent '" + std::string(body) + "' must look like (1,0)");
  Exponent x;
  for (const auto& piece : text::split_list(body.substr(1, body.size() - 2))) x.push_back(text::parse_long(piece));
  if (static_cast<int>(x.size()) != k_)
    throw UsageError("exponent '" + std::string(body) + "' needs " + std::to_string(k_) + " entries");
  return x;
}

MonIdeal MonomialMonoid::parse_ideal(std::string_view text) const {
  std::vector<Exponent> gens;
  for (const auto& piece : text::split_list(text, '|')) gens.push_back(parse_element(piece));
  if (gens.empty()) throw UsageError("empty ideal literal");
  return generate(gens);
}

std::string MonomialMonoid::describe() const { return "N^" + std::to_string(k_); }

std::size_t MonIdeal::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(k_);
  for (const auto& g : gens_)
    for (long c : g) h = h * 1000003u ^ std::hash<long>{}(c);
  return h;
}

MonIdeal MonomialMonoid::random_ideal(std::uint64_t seed, long box, int max_generators) const {
  if (box < 1 || max_generators < 1) throw UsageError("box and generator bound must be positive");
  Rng rng(seed);
  const long count = rng.uniform(1, max_generators);
  std::vector<Exponent> gens;
  for (long n = 0; n < count; ++n) {
    Exponent x(k_);
    for (auto& c : x) c = rng.uniform(-box, box);
    gens.push_back(std::move(x));
  }
  return generate(gens);
}

}  // namespace starideal::mono
