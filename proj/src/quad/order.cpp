#include "starideal/quad/order.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <optional>

#include "starideal/core/random.hpp"
#include "starideal/error.hpp"
#include "starideal/text.hpp"

namespace starideal::quad {

namespace detail {
struct OrderData {
  long N = 0;
  long f = 1;
  mpz_class trace;     // θ² = trace·θ + constant, θ = fω
  mpz_class constant;
};
}  // namespace detail

namespace {

bool squarefree(long n) {
  unsigned long m = static_cast<unsigned long>(n < 0 ? -n : n);
  for (unsigned long p = 2; p * p <= m; ++p)
    if (m % (p * p) == 0) return false;
  return true;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

mpz_class floor_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpq_class ratio(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

struct IntVec {
  mpz_class x, y;
};

// x ≡ r1 (mod m1), x ≡ r2 (mod m2); the caller guarantees solvability.
mpz_class crt(const mpz_class& r1, const mpz_class& m1, const mpz_class& r2, const mpz_class& m2) {
  const mpz_class q = gcd(m1, m2);
  const mpz_class n2 = m2 / q;
  mpz_class t = 0;
  if (n2 != 1) {
    mpz_class inv;
    mpz_class base = floor_mod(m1 / q, n2);
    mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), n2.get_mpz_t());
    t = floor_mod(mpz_class((r2 - r1) / q) * inv, n2);
  }
  return floor_mod(r1 + m1 * t, lcm(m1, m2));
}

}  // namespace

namespace {

// Least solution p + q√D > 1 of p² − Dq² = ±1, from the continued fraction of √D.
std::pair<mpz_class, mpz_class> pell_unit(const mpz_class& D) {
  const mpz_class a0 = sqrt(D);
  mpz_class m = 0, d = 1, a = a0;
  mpz_class p_prev = 1, p = a0, q_prev = 0, q = 1;
  while (true) {
    const mpz_class n = p * p - D * q * q;
    if (n == 1 || n == -1) return {p, q};
    m = d * a - m;
    d = (D - m * m) / d;
    a = (a0 + m) / d;
    mpz_class pn = a * p + p_prev, qn = a * q + q_prev;
    p_prev = p, q_prev = q, p = pn, q = qn;
  }
}

long double approx(const mpz_class& z) { return static_cast<long double>(z.get_d()); }

}  // namespace

mpq_class QoIdeal::norm() const { return ratio(a_ * g_, den_ * den_); }

QuadraticOrder::QuadraticOrder(long N, long f) {
  if (N == 0 || N == 1) throw UsageError("N must differ from 0 and 1");
  if (!squarefree(N)) throw UsageError("N = " + std::to_string(N) + " is not squarefree");
  if (f < 1) throw UsageError("conductor f must be at least 1");
  auto data = std::make_shared<detail::OrderData>();
  data->N = N;
  data->f = f;
  // ω² = ω + (N−1)/4 when N ≡ 1 (mod 4), ω² = N otherwise; θ = fω.
  const bool one_mod_four = ((N % 4) + 4) % 4 == 1;
  const mpz_class fz = f;
  data->trace = one_mod_four ? fz : mpz_class(0);
  data->constant = one_mod_four ? mpz_class(fz * fz * ((N - 1) / 4)) : mpz_class(fz * fz * N);
  data_ = std::move(data);
}

long QuadraticOrder::N() const noexcept { return data_->N; }
long QuadraticOrder::f() const noexcept { return data_->f; }
const mpz_class& QuadraticOrder::theta_trace() const noexcept { return data_->trace; }
const mpz_class& QuadraticOrder::theta_constant() const noexcept { return data_->constant; }

QuadElement QuadraticOrder::multiply(const QuadElement& p, const QuadElement& q) const {
  const mpq_class yy = p.y * q.y;
  return {p.x * q.x + mpq_class(data_->constant) * yy, p.x * q.y + p.y * q.x + mpq_class(data_->trace) * yy};
}

QuadElement QuadraticOrder::conjugate(const QuadElement& p) const {
  return {p.x + p.y * mpq_class(data_->trace), -p.y};
}

mpq_class QuadraticOrder::norm(const QuadElement& p) const {
  return p.x * p.x + mpq_class(data_->trace) * p.x * p.y - mpq_class(data_->constant) * p.y * p.y;
}

QuadElement QuadraticOrder::inverse_element(const QuadElement& x) const {
  const mpq_class n = norm(x);
  if (n == 0) throw InvalidIdeal("zero has no inverse");
  QuadElement c = conjugate(x);
  return {c.x / n, c.y / n};
}

const QoIdeal& QuadraticOrder::check(const QoIdeal& a) const {
  const auto* o = a.owner();
  if (o != data_.get() && (o == nullptr || o->N != data_->N || o->f != data_->f))
    throw OwnerMismatch("ideal belongs to a different quadratic order");
  return a;
}

QoIdeal QuadraticOrder::canonical(const std::vector<QuadElement>& vectors) const {
  mpz_class den = 1;
  for (const auto& v : vectors) den = lcm(lcm(den, v.x.get_den()), v.y.get_den());

  // Extended gcd on the θ-coordinates.  Each step replaces the pivot and the
  // incoming vector by a unimodular combination, so the span is unchanged.
  IntVec pivot{0, 0};
  mpz_class a = 0;
  for (const auto& v : vectors) {
    IntVec u{v.x.get_num() * (den / v.x.get_den()), v.y.get_num() * (den / v.y.get_den())};
    if (u.y == 0) {
      a = gcd(a, u.x);
    } else if (pivot.y == 0) {
      a = gcd(a, pivot.x);
      pivot = u;
    } else {
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), pivot.y.get_mpz_t(), u.y.get_mpz_t());
      const mpz_class cu = u.y / g, cp = pivot.y / g;
      a = gcd(a, mpz_class(cu * pivot.x - cp * u.x));
      pivot = IntVec{s * pivot.x + t * u.x, g};
    }
  }
  if (pivot.y == 0 || a == 0) throw DegenerateLattice("generators do not span a rank-2 lattice");
  if (pivot.y < 0) pivot = IntVec{-pivot.x, -pivot.y};
  mpz_class b = floor_mod(pivot.x, a);
  mpz_class g = pivot.y;

  const mpz_class e = gcd(den, gcd(gcd(a, b), g));
  return QoIdeal(data_.get(), den / e, a / e, b / e, g / e);
}

QoIdeal QuadraticOrder::lattice(const std::vector<QuadElement>& vectors) const { return canonical(vectors); }

std::vector<QuadElement> QuadraticOrder::basis(const QoIdeal& a) const {
  check(a);
  return {{ratio(a.a(), a.den()), 0}, {ratio(a.b(), a.den()), ratio(a.g(), a.den())}};
}

bool QuadraticOrder::is_module(const QoIdeal& a) const {
  const QuadElement theta{0, 1};
  for (const auto& v : basis(a))
    if (!contains(a, multiply(v, theta))) return false;
  return true;
}

QoIdeal QuadraticOrder::conductor_ideal() const { return canonical({{data_->f, 0}, {0, 1}}); }

QoIdeal QuadraticOrder::unit() const { return canonical({{1, 0}, {0, 1}}); }

QoIdeal QuadraticOrder::sum(const QoIdeal& a, const QoIdeal& b) const {
  auto vs = basis(a);
  for (auto& v : basis(b)) vs.push_back(std::move(v));
  return canonical(vs);
}

QoIdeal QuadraticOrder::product(const QoIdeal& a, const QoIdeal& b) const {
  std::vector<QuadElement> vs;
  const auto bb = basis(b);
  for (const auto& u : basis(a))
    for (const auto& v : bb) vs.push_back(multiply(u, v));
  return canonical(vs);
}

// Both lattices are brought to a common denominator; the intersection of the
// integer lattices [[a1,b1],[0,g1]] and [[a2,b2],[0,g2]] then has θ-step
// lcm(g1,g2)·k0, where k0 is the least multiplier making the two congruences
// on the 1-coordinate compatible, and 1-step lcm(a1,a2).
QoIdeal QuadraticOrder::intersect(const QoIdeal& p, const QoIdeal& q) const {
  check(p), check(q);
  const mpz_class den = lcm(p.den(), q.den());
  const mpz_class s1 = den / p.den(), s2 = den / q.den();
  const mpz_class a1 = p.a() * s1, b1 = p.b() * s1, g1 = p.g() * s1;
  const mpz_class a2 = q.a() * s2, b2 = q.b() * s2, g2 = q.g() * s2;

  const mpz_class G = lcm(g1, g2);
  const mpz_class r1 = b1 * (G / g1), r2 = b2 * (G / g2);
  const mpz_class common = gcd(a1, a2);
  const mpz_class k0 = common / gcd(common, mpz_class(r1 - r2));
  const mpz_class x0 = crt(floor_mod(k0 * r1, a1), a1, floor_mod(k0 * r2, a2), a2);

  return canonical({{ratio(lcm(a1, a2), den), 0}, {ratio(x0, den), ratio(mpz_class(G * k0), den)}});
}

QoIdeal QuadraticOrder::colon(const QoIdeal& a, const QoIdeal& b) const {
  check(a);
  std::optional<QoIdeal> acc;
  for (const auto& v : basis(b)) {
    QoIdeal part = scale(a, inverse_element(v));
    acc = acc ? intersect(*acc, part) : part;
  }
  return *acc;
}

bool QuadraticOrder::contains(const QoIdeal& a, const QuadElement& v) const {
  check(a);
  const mpq_class X = v.x * mpq_class(a.den()), Y = v.y * mpq_class(a.den());
  if (X.get_den() != 1 || Y.get_den() != 1) return false;
  const mpz_class& y = Y.get_num();
  if (!mpz_divisible_p(y.get_mpz_t(), a.g().get_mpz_t())) return false;
  const mpz_class rest = X.get_num() - a.b() * (y / a.g());
  return mpz_divisible_p(rest.get_mpz_t(), a.a().get_mpz_t()) != 0;
}

bool QuadraticOrder::subset(const QoIdeal& a, const QoIdeal& b) const {
  check(b);
  for (const auto& v : basis(a))
    if (!contains(b, v)) return false;
  return true;
}

QoIdeal QuadraticOrder::principal(const QuadElement& x) const { return generate({x}); }

QoIdeal QuadraticOrder::scale(const QoIdeal& a, const QuadElement& x) const {
  if (x.x == 0 && x.y == 0) throw InvalidIdeal("scaling by zero");
  std::vector<QuadElement> vs;
  for (const auto& v : basis(a)) vs.push_back(multiply(v, x));
  return canonical(vs);
}

QoIdeal QuadraticOrder::generate(const std::vector<QuadElement>& elements) const {
  std::vector<QuadElement> vs;
  const QuadElement theta{0, 1};
  for (const auto& e : elements) {
    if (e.x == 0 && e.y == 0) continue;
    vs.push_back(e);
    vs.push_back(multiply(e, theta));
  }
  if (vs.empty()) throw InvalidIdeal("the zero ideal is not a fractional ideal");
  return canonical(vs);
}

std::vector<QuadElement> QuadraticOrder::minimal_generators(const QoIdeal& a) const { return basis(a); }

std::optional<QuadElement> QuadraticOrder::principal_generator(const QoIdeal& a) const {
  check(a);
  // Principal ideals are invertible; for invertible a, any α ∈ a with
  // |N(α)| = [O : a] generates it.
  if (!(product(a, colon(unit(), a)) == unit())) return std::nullopt;
  // Integral copy den·a with basis (A, 0), (B, G); target norm n = A·G.
  const mpz_class& A = a.a();
  const mpz_class& B = a.b();
  const mpz_class& G = a.g();
  const mpz_class n = A * G;
  const mpz_class& tr = data_->trace;
  const mpz_class& c = data_->constant;
  const mpz_class disc = tr * tr + 4 * c;  // of θ² − tr·θ − c
  auto try_point = [&](const mpz_class& u, const mpz_class& v) -> std::optional<QuadElement> {
    const mpz_class x = u * A + v * B, y = v * G;
    const mpz_class nm = x * x + tr * x * y - c * y * y;
    if (abs(nm) != n) return std::nullopt;
    return QuadElement{mpq_class(x, a.den()), mpq_class(y, a.den())};
  };
  const long double nl = approx(n), trl = approx(tr), Al = approx(A), Bl = approx(B), Gl = approx(G);
  // For each y = vG with |y| ≤ ymax, the x window [lo(y), hi(y)] is swept.
  auto sweep = [&](long double ymin, long double ymax, auto window) -> std::optional<QuadElement> {
    const auto vlo = static_cast<long long>(std::floor(ymin / Gl)) - 1;
    const auto vhi = static_cast<long long>(std::ceil(ymax / Gl)) + 1;
    for (long long v = vlo; v <= vhi; ++v) {
      const long double y = static_cast<long double>(v) * Gl;
      const auto [xlo, xhi] = window(y);
      if (xlo > xhi) continue;
      const long double shift = static_cast<long double>(v) * Bl;
      const auto ulo = static_cast<long long>(std::floor((xlo - shift) / Al)) - 1;
      const auto uhi = static_cast<long long>(std::ceil((xhi - shift) / Al)) + 1;
      for (long long u = ulo; u <= uhi; ++u)
        if (auto g = try_point(mpz_class(static_cast<long>(u)), mpz_class(static_cast<long>(v)))) return g;
    }
    return std::nullopt;
  };
  if (disc < 0) {
    // N(x + yθ) = (x + tr·y/2)² + (−disc/4)·y² is definite.
    const long double k = -approx(disc) / 4;
    const long double ymax = std::sqrt(nl / k);
    return sweep(-ymax, ymax, [&](long double y) {
      const long double r = nl - k * y * y;
      const long double h = r > 0 ? std::sqrt(r) : 0;
      return std::pair{-trl * y / 2 - h, -trl * y / 2 + h};
    });
  }
  // Real case: embeddings α₁ = x + yθ₁, α₂ = x + yθ₂ with θ₁ − θ₂ = √disc ∈ O.
  // A Pell unit η = p + q√disc lies in O, so some generator has
  // |α₁| ∈ [√n, √n·η).  Each dyadic shell |α₁| ≤ 2R, |α₂| ≤ n/R is a box of
  // area 8n; rescaled to the unit square it holds O(1) lattice points, which
  // a Gauss-reduced basis enumerates directly.
  const auto [pu, qu] = pell_unit(disc);
  const long double root = std::sqrt(approx(disc));
  const long double eta = approx(pu) + approx(qu) * root;
  if (eta > 1e15L) throw NotApplicable("unit of " + describe() + " too large for a principality search");
  const long double th1 = (trl + root) / 2, th2 = (trl - root) / 2;
  struct Vec {
    long double p, q;  // rescaled embeddings
    long long u, v;    // coefficients on (A, 0), (B, G)
  };
  const long double top = std::sqrt(nl) * eta;
  for (long double R = std::sqrt(nl) / 2; R <= top; R *= 2) {
    const long double s = nl / R;
    Vec b1{Al / (2 * R), Al / s, 1, 0};
    Vec b2{(Bl + Gl * th1) / (2 * R), (Bl + Gl * th2) / s, 0, 1};
    auto dot = [](const Vec& x, const Vec& y) { return x.p * y.p + x.q * y.q; };
    while (true) {
      if (dot(b1, b1) > dot(b2, b2)) std::swap(b1, b2);
      const auto mu = static_cast<long long>(std::llround(dot(b1, b2) / dot(b1, b1)));
      if (mu == 0) break;
      b2 = {b2.p - mu * b1.p, b2.q - mu * b1.q, b2.u - mu * b1.u, b2.v - mu * b1.v};
    }
    const long double det = std::fabs(b1.p * b2.q - b1.q * b2.p);
    const auto k1 = static_cast<long long>(std::ceil(std::sqrt(2 * dot(b2, b2)) / det)) + 1;
    const auto k2 = static_cast<long long>(std::ceil(std::sqrt(2 * dot(b1, b1)) / det)) + 1;
    for (long long i = -k1; i <= k1; ++i)
      for (long long j = -k2; j <= k2; ++j) {
        if (i == 0 && j == 0) continue;
        const mpz_class u = mpz_class(static_cast<long>(i)) * static_cast<long>(b1.u) +
                            mpz_class(static_cast<long>(j)) * static_cast<long>(b2.u);
        const mpz_class v = mpz_class(static_cast<long>(i)) * static_cast<long>(b1.v) +
                            mpz_class(static_cast<long>(j)) * static_cast<long>(b2.v);
        if (auto g = try_point(u, v)) return g;
      }
  }
  return std::nullopt;
}

IntegralClosureDescriptor QuadraticOrder::complete_integral_closure() const {
  const bool one_mod_four = ((data_->N % 4) + 4) % 4 == 1;
  const std::string root = "sqrt(" + std::to_string(data_->N) + ")";
  return {one_mod_four ? "Z[(1+" + root + ")/2]" : "Z[" + root + "]", data_->f == 1};
}

std::string QuadraticOrder::format_element(const QuadElement& v) const {
  // x + yθ = x + (y·f)w
  const mpq_class c = v.y * mpq_class(data_->f);
  std::string out;
  if (v.x != 0) out = v.x.get_str();
  if (c != 0) {
    std::string coef = c == 1 ? "" : c == -1 ? "-" : c.get_str();
    if (!out.empty() && c > 0) out += "+";
    out += coef + "w";
  }
  return out.empty() ? "0" : out;
}

std::string QuadraticOrder::format(const QoIdeal& a) const {
  const auto b = basis(a);
  return "(" + format_element(b[0]) + ", " + format_element(b[1]) + ")";
}

QuadElement QuadraticOrder::parse_element(std::string_view text) const {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*') s.push_back(ch);
  if (s.empty()) throw UsageError("empty element literal");

  mpq_class rational = 0, omega = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = pos + 1;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;

    bool negative = false;
    std::string body = term;
    if (body[0] == '+' || body[0] == '-') {
      negative = body[0] == '-';
      body.erase(0, 1);
    }
    const bool is_omega = !body.empty() && body.back() == 'w';
    if (is_omega) body.pop_back();
    mpq_class value = 1;
    if (!body.empty()) {
      auto slash = body.find('/');
      try {
        if (slash == std::string::npos) {
          value = mpq_class(text::parse_long(body));
        } else {
          long num = text::parse_long(body.substr(0, slash));
          long den = text::parse_long(body.substr(slash + 1));
          if (den == 0) throw UsageError("zero denominator");
          value = ratio(num, den);
        }
      } catch (const UsageError&) {
        throw UsageError("bad element term '" + term + "'");
      }
    } else if (!is_omega) {
      throw UsageError("bad element term '" + term + "'");
    }
    if (negative) value = -value;
    (is_omega ? omega : rational) += value;
  }
  // ω = θ/f
  return {rational, omega / mpq_class(data_->f)};
}

QoIdeal QuadraticOrder::parse_ideal(std::string_view text) const {
  auto body = text::trim(text);
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  std::vector<QuadElement> gens;
  for (const auto& piece : text::split_list(body)) gens.push_back(parse_element(piece));
  if (gens.empty()) throw UsageError("empty ideal literal");
  return generate(gens);
}

std::string QuadraticOrder::describe() const {
  const std::string field = complete_integral_closure().description;
  return data_->f == 1 ? field : field.substr(0, 2) + std::to_string(data_->f) + "*" + field.substr(2);
}

std::size_t QoIdeal::hash() const noexcept {
  std::size_t h = 0;
  for (const mpz_class* z : {&den_, &a_, &b_, &g_}) h = h * 1000003u ^ mpz_get_ui(z->get_mpz_t()) ^ mpz_size(z->get_mpz_t());
  return h;
}

QoIdeal QuadraticOrder::random_ideal(std::uint64_t seed, long height) const {
  if (height < 1) throw UsageError("height bound must be at least 1");
  Rng rng(seed);
  const int count = rng.coin() ? 2 : 1;
  std::vector<QuadElement> gens;
  while (static_cast<int>(gens.size()) < count) {
    long x = rng.uniform(-height, height), y = rng.uniform(-height, height);
    if (x == 0 && y == 0) continue;
    gens.push_back({x, y});
  }
  const long k = rng.uniform(1, height);
  for (auto& g : gens) g = {g.x / k, g.y / k};
  return generate(gens);
}

}  // namespace starideal::quad
