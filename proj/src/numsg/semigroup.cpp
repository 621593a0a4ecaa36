#include "starideal/numsg/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "starideal/error.hpp"
#include "starideal/text.hpp"

namespace starideal::numsg {

namespace detail {
struct SemigroupData {
  std::vector<long> generators;
  std::vector<long> gaps;
  long frobenius = -1;
  int conductor = 0;
  long multiplicity = 1;
  Window members;  // bit n set iff n ∈ S, for n < conductor
};
}  // namespace detail

namespace {

Window to_window(const Span& bits, std::size_t from, int len) {
  Window w;
  for (int i = 0; i < len; ++i) w[i] = bits[from + i];
  return w;
}

Span to_span(const Window& w, int len) {
  Span s;
  s.set();
  for (int i = 0; i < len; ++i) s[i] = w[i];
  return s;
}

}  // namespace

bool SgIdeal::contains(long z) const noexcept {
  if (z < offset_) return false;
  long rel = z - offset_;
  if (rel >= owner_->conductor) return true;
  return window_[static_cast<std::size_t>(rel)];
}

std::size_t SgIdeal::hash() const noexcept {
  std::size_t h = std::hash<Window>{}(window_);
  return h ^ (std::hash<int>{}(offset_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

NumericalSemigroup::NumericalSemigroup(const std::vector<long>& generators) {
  if (generators.empty()) throw UsageError("numerical semigroup needs at least one generator");
  long g = 0;
  for (long n : generators) {
    if (n <= 0) throw UsageError("generator " + std::to_string(n) + " is not positive");
    g = std::gcd(g, n);
  }
  if (g != 1)
    throw NotANumericalSemigroup("generators have common divisor " + std::to_string(g));

  auto data = std::make_shared<detail::SemigroupData>();
  const long smallest = *std::min_element(generators.begin(), generators.end());

  // Sieve until `smallest` consecutive members appear; from there on every
  // integer is reachable by adding `smallest`.
  std::vector<char> in{1};
  long run = 1;
  long n = 0;
  while (run < smallest) {
    ++n;
    if (n > 4 * kMaxConductor) break;
    bool member = false;
    for (long gen : generators)
      if (gen <= n && in[static_cast<std::size_t>(n - gen)]) {
        member = true;
        break;
      }
    in.push_back(member ? 1 : 0);
    run = member ? run + 1 : 0;
    if (!member) data->gaps.push_back(n);
  }
  data->frobenius = data->gaps.empty() ? -1 : data->gaps.back();
  if (data->frobenius + 1 > kMaxConductor)
    throw UsageError("conductor " + std::to_string(data->frobenius + 1) + " exceeds the supported " +
                     std::to_string(kMaxConductor));
  data->conductor = static_cast<int>(data->frobenius + 1);
  for (int i = 0; i < data->conductor; ++i) data->members[i] = in[static_cast<std::size_t>(i)] != 0;
  auto member = [&](long x) { return x >= data->conductor || (x >= 0 && in[static_cast<std::size_t>(x)]); };

  data->multiplicity = 1;
  while (!member(data->multiplicity)) ++data->multiplicity;

  // n is a minimal generator iff it is not a sum of two nonzero members.
  std::vector<long> sorted(generators);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (long cand : sorted) {
    bool decomposable = false;
    for (long a = 1; a <= cand / 2 && !decomposable; ++a)
      decomposable = member(a) && member(cand - a);
    if (!decomposable) data->generators.push_back(cand);
  }
  data_ = std::move(data);
}

NumericalSemigroup NumericalSemigroup::parse(std::string_view text) {
  auto tokens = text::split_list(text);
  std::vector<long> gens;
  for (const auto& tok : tokens) gens.push_back(text::parse_long(tok));
  return NumericalSemigroup(gens);
}

const std::vector<long>& NumericalSemigroup::generators() const noexcept { return data_->generators; }
const std::vector<long>& NumericalSemigroup::gaps() const noexcept { return data_->gaps; }
long NumericalSemigroup::frobenius() const noexcept { return data_->frobenius; }
int NumericalSemigroup::conductor() const noexcept { return data_->conductor; }
long NumericalSemigroup::multiplicity() const noexcept { return data_->multiplicity; }

bool NumericalSemigroup::contains(long n) const noexcept {
  if (n < 0) return false;
  if (n >= data_->conductor) return true;
  return data_->members[static_cast<std::size_t>(n)];
}

const SgIdeal& NumericalSemigroup::check(const SgIdeal& a) const {
  if (a.owner() != data_.get()) throw OwnerMismatch("ideal belongs to a different semigroup");
  return a;
}

Span NumericalSemigroup::span(const SgIdeal& e, long base) const {
  const int c = data_->conductor;
  Span ext = to_span(e.window(), c);
  long shift = e.offset() - base;
  const long width = static_cast<long>(Span().size());
  if (shift >= 0) {
    if (shift >= width) return Span();
    return ext << static_cast<std::size_t>(shift);
  }
  long s = -shift;
  if (s >= width) return Span().set();
  Span ones;
  ones.set();
  return (ext >> static_cast<std::size_t>(s)) | ~(ones >> static_cast<std::size_t>(s));
}

SgIdeal NumericalSemigroup::from_span(const Span& bits, long base) const {
  const int c = data_->conductor;
  std::size_t p = 0;
  while (p < bits.size() && !bits[p]) ++p;
  if (p + static_cast<std::size_t>(c) > bits.size())
    throw ConsistencyError("ideal minimum lies outside the working span");
  return SgIdeal(data_.get(), static_cast<int>(base + static_cast<long>(p)), to_window(bits, p, c));
}

SgIdeal NumericalSemigroup::from_window(int offset, const Window& window) const {
  Span bits = to_span(window, data_->conductor);
  return from_span(bits, offset);
}

SgIdeal NumericalSemigroup::unit() const { return principal(0); }

SgIdeal NumericalSemigroup::principal(long z) const {
  return SgIdeal(data_.get(), static_cast<int>(z), data_->members);
}

SgIdeal NumericalSemigroup::scale(const SgIdeal& a, long z) const {
  check(a);
  return SgIdeal(data_.get(), static_cast<int>(a.offset() + z), a.window());
}

SgIdeal NumericalSemigroup::sum(const SgIdeal& a, const SgIdeal& b) const {
  check(a), check(b);
  long base = std::min(a.offset(), b.offset());
  return from_span(span(a, base) | span(b, base), base);
}

SgIdeal NumericalSemigroup::intersect(const SgIdeal& a, const SgIdeal& b) const {
  check(a), check(b);
  long base = std::max(a.offset(), b.offset());
  return from_span(span(a, base) & span(b, base), base);
}

SgIdeal NumericalSemigroup::product(const SgIdeal& a, const SgIdeal& b) const {
  check(a), check(b);
  long base = static_cast<long>(a.offset()) + b.offset();
  Span bits;
  for (long x : minimal_generators(a)) bits |= span(b, base - x);
  return from_span(bits, base);
}

SgIdeal NumericalSemigroup::colon(const SgIdeal& a, const SgIdeal& b) const {
  check(a), check(b);
  auto gens = minimal_generators(b);
  long base = a.offset() - gens.front();
  for (long y : gens) base = std::max(base, a.offset() - y);
  Span bits;
  bits.set();
  for (long y : gens) bits &= span(a, base + y);
  return from_span(bits, base);
}

bool NumericalSemigroup::subset(const SgIdeal& a, const SgIdeal& b) const {
  check(a), check(b);
  if (a.offset() < b.offset()) return false;
  return (span(a, a.offset()) & ~span(b, a.offset())).none();
}

SgIdeal NumericalSemigroup::generate(const std::vector<long>& elements) const {
  if (elements.empty()) throw InvalidIdeal("an ideal needs at least one generator");
  long base = *std::min_element(elements.begin(), elements.end());
  SgIdeal s = unit();
  Span bits;
  for (long x : elements) bits |= span(s, base - x);
  return from_span(bits, base);
}

std::vector<long> NumericalSemigroup::minimal_generators(const SgIdeal& a) const {
  check(a);
  const long m = a.offset();
  Span covered;
  for (long n : data_->generators) covered |= span(a, m - n);
  Span gens = span(a, m) & ~covered;
  std::vector<long> out;
  const long limit = data_->conductor + data_->multiplicity;
  for (long j = 0; j < limit; ++j)
    if (gens[static_cast<std::size_t>(j)]) out.push_back(m + j);
  return out;
}

SgIdeal NumericalSemigroup::maximal_ideal() const { return generate(data_->generators); }

std::vector<SgIdeal> NumericalSemigroup::normalized_ideals() const {
  const auto& gaps = data_->gaps;
  const auto& gens = data_->generators;
  std::vector<Window> found;
  Window current = data_->members;
  auto in_current = [&](long x) { return x >= data_->conductor || current[static_cast<std::size_t>(x)]; };
  // Decide gaps from the largest down: every g + n above g is already fixed.
  std::function<void(std::size_t)> descend = [&](std::size_t k) {
    if (k == 0) {
      found.push_back(current);
      return;
    }
    long g = gaps[k - 1];
    descend(k - 1);
    bool closed = std::all_of(gens.begin(), gens.end(), [&](long n) { return in_current(g + n); });
    if (closed) {
      current[static_cast<std::size_t>(g)] = true;
      descend(k - 1);
      current[static_cast<std::size_t>(g)] = false;
    }
  };
  descend(gaps.size());
  auto key = [&](const Window& w) { return (w & ~data_->members).count(); };
  std::stable_sort(found.begin(), found.end(), [&](const Window& x, const Window& y) {
    auto kx = key(x), ky = key(y);
    if (kx != ky) return kx < ky;
    for (int i = 0; i < data_->conductor; ++i)
      if (x[i] != y[i]) return bool(y[i]);
    return false;
  });
  std::vector<SgIdeal> out;
  out.reserve(found.size());
  for (const auto& w : found) out.push_back(SgIdeal(data_.get(), 0, w));
  return out;
}

IntegralClosureDescriptor NumericalSemigroup::complete_integral_closure() const {
  return {"N", data_->conductor == 0};
}

std::string NumericalSemigroup::format(const SgIdeal& a) const {
  auto gens = minimal_generators(a);
  std::string out = "{";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(gens[i]);
  }
  return out + "}";
}

std::string NumericalSemigroup::format_element(long z) const { return std::to_string(z); }

SgIdeal NumericalSemigroup::parse_ideal(std::string_view text) const {
  std::string_view body = text::trim(text);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw UsageError("unterminated ideal literal '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<long> elements;
  for (const auto& tok : text::split_list(body)) elements.push_back(text::parse_long(tok));
  if (elements.empty()) throw InvalidIdeal("empty ideal literal '" + std::string(text) + "'");
  return generate(elements);
}

std::string NumericalSemigroup::describe() const {
  std::string out = "<";
  for (std::size_t i = 0; i < data_->generators.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(data_->generators[i]);
  }
  return out + ">";
}

}  // namespace starideal::numsg
