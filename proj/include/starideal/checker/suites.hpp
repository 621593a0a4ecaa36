#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "starideal/checker/engine.hpp"
#include "starideal/checker/ops.hpp"

namespace starideal::check {

/// Suite names accepted by make_suite, in report order.
inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cicd",      "v-cicd",    "prod-dual", "prufer",
                                              "prufer-quotient", "stability", "necessary", "inverse-product",
                                              "dedekind",  "inv-group", "gcd",       "colon"};
  return names;
}

namespace suites {

template <IdealSystem Sys>
using I = IdealOf<Sys>;
template <IdealSystem Sys>
using T = Tuple<Sys>;
template <IdealSystem Sys>
using Probe = std::function<std::vector<Instance<Sys>>(const ProbeInput<Sys>&)>;

template <IdealSystem Sys>
Part<Sys> part(Arity arity, std::vector<std::string> roles, std::function<bool(const T<Sys>&)> test) {
  return {arity, std::move(roles), std::move(test)};
}

/// Probe that maps each key to tuples for part 0.
template <IdealSystem Sys, class F>
Probe<Sys> per_key(F f) {
  return [f](const ProbeInput<Sys>& in) {
    std::vector<Instance<Sys>> out;
    for (const auto& h : in.keys)
      for (auto& t : f(h)) out.push_back({0, std::move(t)});
    return out;
  };
}

/// Probe through the two-generated reduction of each key: f(x, y, (x, y)).
template <IdealSystem Sys, class F>
Probe<Sys> per_pair(OpsPtr<Sys> o, F f) {
  return [o, f](const ProbeInput<Sys>& in) {
    std::vector<Instance<Sys>> out;
    for (const auto& h : in.keys) {
      auto xy = o->two_generated(h, [&](const I<Sys>& a) { return !o->invertible(a); });
      if (!xy) continue;
      for (auto& t : f(xy->first, xy->second, o->add(xy->first, xy->second))) out.push_back({0, std::move(t)});
    }
    return out;
  };
}

template <IdealSystem Sys>
Group<Sys> invertibility_group(OpsPtr<Sys> o, std::string name, GroupMode mode = GroupMode::equivalent) {
  return {{std::move(name), mode}, [o](const I<Sys>& a) { return o->invertible(a); }};
}

template <IdealSystem Sys>
Group<Sys> v_invertibility_group(OpsPtr<Sys> o, std::string name) {
  return {{std::move(name), GroupMode::equivalent}, [o](const I<Sys>& a) { return o->v_invertible(a); }};
}

template <IdealSystem Sys>
Condition<Sys> every_invertible(OpsPtr<Sys> o, std::string label, std::string group) {
  return {std::move(label), std::move(group),
          {part<Sys>(Arity::single, {"F"}, [o](const T<Sys>& t) { return o->invertible(t[0]); })},
          per_key<Sys>([](const I<Sys>& h) { return std::vector<T<Sys>>{{h}}; })};
}

template <IdealSystem Sys>
Condition<Sys> every_v_invertible(OpsPtr<Sys> o, std::string label, std::string group) {
  return {std::move(label), std::move(group),
          {part<Sys>(Arity::single, {"F"}, [o](const T<Sys>& t) { return o->v_invertible(t[0]); })},
          per_key<Sys>([](const I<Sys>& h) { return std::vector<T<Sys>>{{h}}; })};
}

// (A:B)-type identities shared by the CICD and Dedekind suites.
template <IdealSystem Sys>
void add_cicd_conditions(Suite<Sys>& s, OpsPtr<Sys> o, const std::string& group) {
  auto self = per_key<Sys>([](const I<Sys>& h) { return std::vector<T<Sys>>{{h, h}}; });
  auto dual = [o] {
    return per_key<Sys>([o](const I<Sys>& h) { return std::vector<T<Sys>>{{o->inv(h), h}}; });
  };
  s.conditions.push_back({"i", group,
                          {part<Sys>(Arity::bilinear, {"A", "B"},
                                     [o](const T<Sys>& t) {
                                       return o->st(o->col(t[0], t[1])) == o->st(o->mul(t[0], o->inv(t[1])));
                                     })},
                          self});
  s.conditions.push_back({"ii", group,
                          {part<Sys>(Arity::bilinear, {"A", "B"},
                                     [o](const T<Sys>& t) {
                                       return o->st(o->col(t[0], o->inv(t[1]))) == o->st(o->mul(t[0], t[1]));
                                     })},
                          dual()});
  s.conditions.push_back({"iii", group,
                          {part<Sys>(Arity::bilinear, {"A", "B"},
                                     [o](const T<Sys>& t) {
                                       return o->col(o->st(t[0]), t[1]) == o->st(o->mul(t[0], o->inv(t[1])));
                                     })},
                          self});
  s.conditions.push_back({"iv", group,
                          {part<Sys>(Arity::bilinear, {"A", "B"},
                                     [o](const T<Sys>& t) {
                                       return o->col(o->st(t[0]), o->inv(t[1])) == o->st(o->mul(t[0], t[1]));
                                     })},
                          dual()});
  s.conditions.push_back(every_invertible<Sys>(o, "v", group));
  s.conditions.back().parts[0].roles = {"A"};
  s.conditions.push_back({"vii", group,
                          {part<Sys>(Arity::bilinear, {"A", "B"},
                                     [o](const T<Sys>& t) {
                                       const auto av = o->v(t[0]);
                                       return o->col(av, o->inv(t[1])) == o->st(o->mul(av, t[1]));
                                     })},
                          dual()});
}

/// Proposition-style ⋆-CICD characterizations plus the ⋆-multiplication
/// form, decided with the largest admissible factor C = (A^⋆ : B).
template <IdealSystem Sys>
Suite<Sys> star_cicd(OpsPtr<Sys> o) {
  Suite<Sys> s{"cicd", {invertibility_group(o, "star-cicd")}, {}, {}};
  add_cicd_conditions(s, o, "star-cicd");
  s.conditions.push_back({"vi", "star-cicd",
                          {part<Sys>(Arity::single, {"A"},
                                     [o](const T<Sys>& t) {
                                       const auto& a = t[0];
                                       return o->v(o->mul(a, o->inv(a))) == o->D && o->st(a) == o->v(a);
                                     })},
                          per_key<Sys>([](const I<Sys>& h) { return std::vector<T<Sys>>{{h}}; })});
  s.conditions.push_back(
      {"multiplication", "star-cicd",
       {part<Sys>(Arity::positioned, {"A", "B"},
                  [o](const T<Sys>& t) {
                    const auto as = o->st(t[0]);
                    if (!o->sub(as, o->st(t[1]))) return true;
                    return o->st(o->mul(t[1], o->col(as, t[1]))) == as;
                  })},
       per_key<Sys>([o](const I<Sys>& h) { return std::vector<T<Sys>>{{o->first_principal(h), h}}; }),
       "",
       "factor decided at the largest candidate (A*:B)"});
  return s;
}

template <IdealSystem Sys>
Suite<Sys> star_v_cicd(OpsPtr<Sys> o) {
  const std::string g = "star-v-cicd";
  Suite<Sys> s{"v-cicd", {v_invertibility_group(o, g)}, {}, {}};
  auto self = per_key<Sys>([](const I<Sys>& h) { return std::vector<T<Sys>>{{h, h}}; });
  auto dual = per_key<Sys>([o](const I<Sys>& h) { return std::vector<T<Sys>>{{o->inv(h), h}}; });
  auto bil = [](auto f) { return std::vector<Part<Sys>>{part<Sys>(Arity::bilinear, {"A", "B"}, f)}; };
  s.conditions.push_back(every_v_invertible<Sys>(o, "i", g));
  s.conditions.back().parts[0].roles = {"A"};
  s.conditions.push_back({"ii", g, bil([o](const T<Sys>& t) {
                            const auto av = o->v(t[0]);
                            return o->col(av, t[1]) == o->st(o->mul(av, o->inv(t[1])));
                          }),
                          self});
  s.conditions.push_back({"ii'", g, bil([o](const T<Sys>& t) {
                            const auto av = o->v(t[0]);
                            return o->col(av, o->v(t[1])) == o->st(o->mul(av, o->inv(t[1])));
                          }),
                          self});
  s.conditions.push_back({"iii", g, bil([o](const T<Sys>& t) {
                            const auto av = o->v(t[0]);
                            return o->col(av, o->inv(t[1])) == o->st(o->mul(av, o->v(t[1])));
                          }),
                          per_key<Sys>([o](const I<Sys>& h) { return std::vector<T<Sys>>{{h, o->inv(h)}}; })});
  s.conditions.push_back({"iv", g, bil([o](const T<Sys>& t) {
                            return o->v(o->col(t[0], t[1])) == o->st(o->mul(o->v(t[0]), o->inv(t[1])));
                          }),
                          self});
  s.conditions.push_back({"v", g, bil([o](const T<Sys>& t) {
                            return o->st(o->col(t[0], o->inv(t[1]))) == o->st(o->mul(t[0], o->v(t[1])));
                          }),
                          dual});
  s.conditions.push_back({"vi", g, bil([o](const T<Sys>& t) {
                            return o->col(o->st(t[0]), o->inv(t[1])) == o->st(o->mul(t[0], o->v(t[1])));
                          }),
                          dual});
  return s;
}

template <IdealSystem Sys>
Suite<Sys> prod_dual(OpsPtr<Sys> o) {
  const std::string g = "star-v-cicd";
  Suite<Sys> s{"prod-dual", {v_invertibility_group(o, g)}, {}, {}};
  s.conditions.push_back(every_v_invertible<Sys>(o, "v-cicd", g));
  s.conditions.back().parts[0].roles = {"A"};
  s.conditions.push_back(
      {"dual-product", g,
       {part<Sys>(Arity::bilinear, {"A", "B"},
                  [o](const T<Sys>& t) {
                    return o->inv(o->mul(t[0], t[1])) == o->st(o->mul(o->inv(t[0]), o->inv(t[1])));
                  })},
       per_key<Sys>([o](const I<Sys>& h) { return std::vector<T<Sys>>{{o->inv(h), h}}; })});
  s.conditions.push_back(
      {"v-multiplication", g,
       {part<Sys>(Arity::positioned, {"A", "B"},
                  [o](const T<Sys>& t) {
                    const auto as = o->st(t[0]);
                    const auto bv = o->v(t[1]);
                    if (!o->sub(as, bv)) return true;
                    return o->st(o->mul(bv, o->col(as, bv))) == as;
                  })},
       per_key<Sys>([o](const I<Sys>& h) { return std::vector<T<Sys>>{{o->first_principal(h), h}}; }),
       "",
       "factor decided at the largest candidate (A*:B^v)"});
  return s;
}

template <IdealSystem Sys>
Suite<Sys> star_prufer(OpsPtr<Sys> o) {
  const std::string g = "star-prufer";
  Suite<Sys> s{"prufer", {invertibility_group(o, g)}, {}, {}};
  auto pair_probe = per_pair<Sys>(o, [](const I<Sys>& x, const I<Sys>& y, const I<Sys>&) {
    return std::vector<T<Sys>>{{x, y}};
  });
  auto meet_sum = [o](const T<Sys>& t) {
    return o->st(o->mul(o->cap(t[0], t[1]), o->add(t[0], t[1]))) == o->st(o->mul(t[0], t[1]));
  };
  auto distributes = [o](const T<Sys>& t) {
    const auto& f = t[0];
    return o->st(o->mul(f, o->cap(o->st(t[1]), o->st(t[2])))) ==
           o->cap(o->st(o->mul(f, t[1])), o->st(o->mul(f, t[2])));
  };
  const std::string shared = "every ideal is finitely generated: same instances as the f-form";
  s.conditions.push_back(every_invertible<Sys>(o, "i", g));
  s.conditions.push_back({"ii", g,
                          {part<Sys>(Arity::two_generated, {"F"}, [o](const T<Sys>& t) { return o->invertible(t[0]); })},
                          per_pair<Sys>(o, [](const I<Sys>&, const I<Sys>&, const I<Sys>& f) {
                            return std::vector<T<Sys>>{{f}};
                          })});
  s.conditions.push_back({"iii_f", g, {part<Sys>(Arity::positioned, {"F", "G"}, meet_sum)}, pair_probe});
  s.conditions.push_back({"iii_F", g, {}, {}, "iii_f", shared});
  s.conditions.push_back({"iv_f", g,
                          {part<Sys>(Arity::triple, {"F", "G", "H"}, distributes)},
                          per_pair<Sys>(o, [o](const I<Sys>& x, const I<Sys>& y, const I<Sys>& f) {
                            return std::vector<T<Sys>>{{f, o->inv(x), o->inv(y)}};
                          })});
  s.conditions.push_back({"iv_fF", g, {}, {}, "iv_f", shared});
  s.conditions.push_back({"v", g,
                          {part<Sys>(Arity::positioned, {"A", "B"},
                                     [o](const T<Sys>& t) {
                                       if (!o->invertible(t[0]) || !o->invertible(t[1])) return true;
                                       return o->invertible(o->cap(t[0], t[1])) &&
                                              o->invertible(o->add(t[0], t[1]));
                                     })},
                          pair_probe});
  s.conditions.push_back({"vi", g,
                          {part<Sys>(Arity::positioned, {"A", "B"},
                                     [o](const T<Sys>& t) {
                                       if (!o->invertible(t[0]) || !o->invertible(t[1])) return true;
                                       return o->invertible(o->add(t[0], t[1]));
                                     })},
                          pair_probe});
  return s;
}

template <IdealSystem Sys>
Suite<Sys> star_prufer_quotient(OpsPtr<Sys> o) {
  const std::string g = "star-prufer", gv = "star-v-prufer", printed = "v-multiplication-printed";
  Suite<Sys> s{"prufer-quotient",
               {invertibility_group(o, g), v_invertibility_group(o, gv), invertibility_group(o, printed)},
               {},
               {{g, gv, false}, {printed, gv, false}}};
  auto self = per_key<Sys>([](const I<Sys>& h) { return std::vector<T<Sys>>{{h, h}}; });
  auto dual = per_key<Sys>([o](const I<Sys>& h) { return std::vector<T<Sys>>{{o->inv(h), h}}; });
  auto element_in = per_key<Sys>([o](const I<Sys>& h) { return std::vector<T<Sys>>{{o->first_principal(h), h}}; });
  auto bil = [](auto f) { return std::vector<Part<Sys>>{part<Sys>(Arity::bilinear, {"A", "F"}, f)}; };

  s.conditions.push_back(every_invertible<Sys>(o, "i", g));
  s.conditions.push_back({"ii", g,
                          {part<Sys>(Arity::positioned, {"A", "F"},
                                     [o](const T<Sys>& t) {
                                       const auto& f = t[1];
                                       if (!o->sub(t[0], o->st(f))) return true;
                                       const auto as = o->st(t[0]);
                                       return o->st(o->mul(f, o->col(as, f))) == as;
                                     })},
                          element_in, "", "factor decided at the largest candidate (A*:F)"});

  // (iii)-(vi) with their primed halves: X = Y = Z, X = Z and Y = Z.
  struct Triple3 {
    std::string label;
    std::function<I<Sys>(const Ops<Sys>&, const I<Sys>&, const I<Sys>&)> x, y, z;
    Probe<Sys> probe;
  };
  std::vector<Triple3> families{
      {"iii", [](const Ops<Sys>& k, const I<Sys>& a, const I<Sys>& f) { return k.st(k.col(a, f)); },
       [](const Ops<Sys>& k, const I<Sys>& a, const I<Sys>& f) { return k.col(k.st(a), f); },
       [](const Ops<Sys>& k, const I<Sys>& a, const I<Sys>& f) { return k.st(k.mul(a, k.inv(f))); }, self},
      {"iv", [](const Ops<Sys>& k, const I<Sys>& a, const I<Sys>& f) { return k.st(k.col(a, k.inv(f))); },
       [](const Ops<Sys>& k, const I<Sys>& a, const I<Sys>& f) { return k.col(k.st(a), k.inv(f)); },
       [](const Ops<Sys>& k, const I<Sys>& a, const I<Sys>& f) { return k.st(k.mul(a, f)); }, dual},
      {"v", [](const Ops<Sys>& k, const I<Sys>& a, const I<Sys>& f) { return k.st(k.col(f, a)); },
       [](const Ops<Sys>& k, const I<Sys>& a, const I<Sys>& f) { return k.col(k.st(f), a); },
       [](const Ops<Sys>& k, const I<Sys>& a, const I<Sys>& f) { return k.st(k.mul(f, k.inv(a))); }, self},
      {"vi", [](const Ops<Sys>& k, const I<Sys>& a, const I<Sys>& f) { return k.v(k.col(f, a)); },
       [](const Ops<Sys>& k, const I<Sys>& a, const I<Sys>& f) { return k.col(k.v(f), a); },
       [](const Ops<Sys>& k, const I<Sys>& a, const I<Sys>& f) { return k.st(k.mul(f, k.inv(a))); }, self},
  };
  for (const auto& fam : families) {
    auto x = fam.x, y = fam.y, z = fam.z;
    s.conditions.push_back({fam.label, g, bil([o, x, y, z](const T<Sys>& t) {
                              const auto zz = z(*o, t[0], t[1]);
                              return x(*o, t[0], t[1]) == zz && y(*o, t[0], t[1]) == zz;
                            }),
                            fam.probe});
    s.conditions.push_back({fam.label + "'", g, bil([o, x, z](const T<Sys>& t) {
                              return x(*o, t[0], t[1]) == z(*o, t[0], t[1]);
                            }),
                            fam.probe});
    s.conditions.push_back({fam.label + "''", g, bil([o, y, z](const T<Sys>& t) {
                              return y(*o, t[0], t[1]) == z(*o, t[0], t[1]);
                            }),
                            fam.probe});
  }
  s.conditions.push_back({"vii", g, bil([o](const T<Sys>& t) {
                            return o->col(o->v(t[1]), o->inv(t[0])) == o->st(o->mul(t[1], o->v(t[0])));
                          }),
                          per_key<Sys>([o](const I<Sys>& h) { return std::vector<T<Sys>>{{o->inv(h), h}}; })});
  s.conditions.push_back({"viii", g,
                          {part<Sys>(Arity::triple, {"F", "A", "B"},
                                     [o](const T<Sys>& t) {
                                       const auto& f = t[0];
                                       return o->st(o->col(o->add(t[1], t[2]), f)) ==
                                              o->st(o->add(o->col(t[1], f), o->col(t[2], f)));
                                     })},
                          per_pair<Sys>(o, [](const I<Sys>& x, const I<Sys>& y, const I<Sys>& f) {
                            return std::vector<T<Sys>>{{f, x, y}};
                          })});
  s.conditions.push_back({"ix", g,
                          {part<Sys>(Arity::triple, {"A", "F", "G"},
                                     [o](const T<Sys>& t) {
                                       const auto &a = t[0], &f = t[1], &h = t[2];
                                       if (!(o->st(f) == f) || !(o->st(h) == h)) return true;
                                       return o->st(o->col(a, o->cap(f, h))) ==
                                              o->st(o->add(o->col(a, f), o->col(a, h)));
                                     })},
                          per_pair<Sys>(o, [o](const I<Sys>& x, const I<Sys>& y, const I<Sys>&) {
                            return std::vector<T<Sys>>{{o->cap(x, y), x, y}};
                          })});
  s.conditions.push_back({"x", g,
                          {part<Sys>(Arity::element_pair, {"(a)", "(b)"},
                                     [o](const T<Sys>& t) {
                                       const auto ab = colon_in_domain(o->sys, t[0], t[1]);
                                       const auto ba = colon_in_domain(o->sys, t[1], t[0]);
                                       return o->st(o->add(ab, ba)) == o->D;
                                     })},
                          per_pair<Sys>(o, [o](const I<Sys>& x, const I<Sys>& y, const I<Sys>&) {
                            auto [a, b] = o->make_integral(x, y);
                            return std::vector<T<Sys>>{{a, b}};
                          })});
  s.conditions.push_back({"multiplication-f", g,
                          {part<Sys>(Arity::positioned, {"F", "G"},
                                     [o](const T<Sys>& t) {
                                       const auto fs = o->st(t[0]);
                                       if (!o->sub(fs, o->st(t[1]))) return true;
                                       return o->st(o->mul(t[1], o->col(fs, t[1]))) == fs;
                                     })},
                          element_in, "", "factor decided at the largest candidate (F*:G)"});

  s.conditions.push_back(every_v_invertible<Sys>(o, "v-prufer", gv));
  s.conditions.push_back({"v-multiplication-f", gv,
                          {part<Sys>(Arity::positioned, {"F", "G"},
                                     [o](const T<Sys>& t) {
                                       const auto fs = o->st(t[0]);
                                       const auto gv = o->v(t[1]);
                                       if (!o->sub(fs, gv)) return true;
                                       return o->st(o->mul(gv, o->col(fs, gv))) == fs;
                                     })},
                          element_in, "", "factor multiplies G^v; decided at (F*:G^v)"});
  s.conditions.push_back({"v-multiplication-f-printed", printed,
                          {part<Sys>(Arity::positioned, {"F", "G"},
                                     [o](const T<Sys>& t) {
                                       const auto fs = o->st(t[0]);
                                       if (!o->sub(fs, o->v(t[1]))) return true;
                                       return o->st(o->mul(t[1], o->col(fs, t[1]))) == fs;
                                     })},
                          element_in, "",
                          "hypothesis F* ⊆ G^v with factor multiplying G; equivalent to star-prufer, "
                          "so only the implication to star-v-prufer is asserted"});
  return s;
}

template <IdealSystem Sys>
Suite<Sys> stability(OpsPtr<Sys> o) {
  const std::string g = "stable-prufer";
  Suite<Sys> s{"stability",
               {invertibility_group(o, g), {{"stable", GroupMode::equivalent}, nullptr}},
               {},
               {{g, "stable", false}}};
  auto stable = [o](const T<Sys>& t) { return o->st(o->cap(t[0], t[1])) == o->cap(o->st(t[0]), o->st(t[1])); };
  s.conditions.push_back(
      {"i_bar", g,
       {part<Sys>(Arity::single, {"F"}, [o](const T<Sys>& t) { return o->invertible(t[0]); }),
        part<Sys>(Arity::positioned, {"A", "B"}, stable)},
       [o](const ProbeInput<Sys>& in) {
         std::vector<Instance<Sys>> out;
         for (const auto& h : in.keys) out.push_back({0, {h}});
         for (const auto& t : in.failures)
           if (t.size() == 3) {
             out.push_back({1, {t[1], t[2]}});
             for (const auto& a : t) out.push_back({0, {a}});
             out.push_back({0, {o->add(t[1], t[2])}});
           }
         return out;
       }});
  s.conditions.push_back(
      {"iv_bar", g,
       {part<Sys>(Arity::triple, {"C", "A", "B"},
                  [o](const T<Sys>& t) {
                    const auto &c = t[0], &a = t[1], &b = t[2];
                    const auto lhs = o->st(o->mul(c, o->cap(a, b)));
                    return lhs == o->st(o->mul(c, o->cap(o->st(a), o->st(b)))) &&
                           lhs == o->cap(o->st(o->mul(c, a)), o->st(o->mul(c, b)));
                  })},
       [o](const ProbeInput<Sys>& in) {
         std::vector<Instance<Sys>> out;
         for (const auto& h : in.keys) {
           auto xy = o->two_generated(h, [&](const I<Sys>& a) { return !o->invertible(a); });
           if (xy) out.push_back({0, {o->add(xy->first, xy->second), o->inv(xy->first), o->inv(xy->second)}});
         }
         for (const auto& t : in.failures)
           if (t.size() == 2) out.push_back({0, {o->D, t[0], t[1]}});
         return out;
       }});
  s.conditions.push_back({"stable", "stable", {part<Sys>(Arity::positioned, {"A", "B"}, stable)}, nullptr});
  return s;
}

template <IdealSystem Sys>
Suite<Sys> necessary(OpsPtr<Sys> o) {
  const std::string g = "star-prufer";
  Suite<Sys> s{"necessary",
               {invertibility_group(o, g),
                {{"dual-product", GroupMode::equivalent}, nullptr},
                {{"meet-invertible", GroupMode::equivalent}, nullptr},
                {{"ab", GroupMode::equivalent}, nullptr}},
               {},
               {{g, "dual-product", false}, {g, "meet-invertible", false}, {g, "ab", false}}};
  s.conditions.push_back(every_invertible<Sys>(o, "star-prufer", g));
  s.conditions.push_back(
      {"dual-product", "dual-product",
       {part<Sys>(Arity::bilinear, {"F", "G"},
                  [o](const T<Sys>& t) {
                    return o->inv(o->mul(t[0], t[1])) == o->st(o->mul(o->inv(t[0]), o->inv(t[1])));
                  })},
       nullptr});
  s.conditions.push_back({"meet-invertible", "meet-invertible",
                          {part<Sys>(Arity::positioned, {"A", "B"},
                                     [o](const T<Sys>& t) {
                                       if (!o->invertible(t[0]) || !o->invertible(t[1])) return true;
                                       return o->invertible(o->cap(t[0], t[1]));
                                     })},
                          nullptr});
  s.conditions.push_back({"ab", "ab",
                          {part<Sys>(Arity::triple, {"F", "A", "B"},
                                     [o](const T<Sys>& t) {
                                       if (!o->sub(o->st(o->mul(t[0], t[1])), o->st(o->mul(t[0], t[2]))))
                                         return true;
                                       return o->sub(o->st(t[1]), o->st(t[2]));
                                     })},
                          nullptr});
  return s;
}

/// ⋆-Prüfer ⟹ (AF)^{-1} = (A^{-1}F^{-1})^⋆ ⟺ (⋆,v)-Prüfer.
template <IdealSystem Sys>
Suite<Sys> inverse_product(OpsPtr<Sys> o) {
  const std::string g = "star-prufer", gv = "star-v-prufer";
  Suite<Sys> s{"inverse-product", {invertibility_group(o, g), v_invertibility_group(o, gv)}, {}, {{g, gv, false}}};
  s.conditions.push_back(every_invertible<Sys>(o, "a", g));
  s.conditions.push_back(
      {"b", gv,
       {part<Sys>(Arity::bilinear, {"A", "F"},
                  [o](const T<Sys>& t) {
                    return o->inv(o->mul(t[0], t[1])) == o->st(o->mul(o->inv(t[0]), o->inv(t[1])));
                  })},
       per_key<Sys>([o](const I<Sys>& h) { return std::vector<T<Sys>>{{o->inv(h), h}}; })});
  s.conditions.push_back(every_v_invertible<Sys>(o, "c", gv));
  return s;
}

/// ⋆_f-CICD and (⋆_f,v)-CICD characterizations.  `f` is bound to ⋆_f.
template <IdealSystem Sys>
Suite<Sys> dedekind(OpsPtr<Sys> f) {
  const std::string g = "star-dedekind", gv = "star-v-dedekind", noeth = "star-noetherian";
  Suite<Sys> s{"dedekind",
               {invertibility_group(f, g), v_invertibility_group(f, gv), {{noeth, GroupMode::must_hold}, nullptr}},
               {},
               {{g, gv, false}}};
  add_cicd_conditions(s, f, g);
  s.conditions.push_back({"vi", g,
                          {part<Sys>(Arity::single, {"A"},
                                     [f](const T<Sys>& t) {
                                       const auto& a = t[0];
                                       return f->v(f->mul(a, f->inv(a))) == f->D &&
                                              f->st(a) == t_closure(f->sys, a);
                                     })},
                          per_key<Sys>([](const I<Sys>& h) { return std::vector<T<Sys>>{{h}}; })});
  s.conditions.push_back(every_invertible<Sys>(f, "noetherian-pmd", g));
  s.conditions.back().note = "star-noetherian holds on every backend; remaining half is every F star_f-invertible";

  s.conditions.push_back(
      {"v-i", gv,
       {part<Sys>(Arity::bilinear, {"A", "B"},
                  [f](const T<Sys>& t) {
                    return f->inv(f->mul(t[0], t[1])) == f->st(f->mul(f->inv(t[0]), f->inv(t[1])));
                  })},
       per_key<Sys>([f](const I<Sys>& h) { return std::vector<T<Sys>>{{f->inv(h), h}}; })});
  s.conditions.push_back({"v-ii", gv,
                          {part<Sys>(Arity::single, {"A"},
                                     [f](const T<Sys>& t) { return f->invertible(f->inv(t[0])); })},
                          per_key<Sys>([](const I<Sys>& h) { return std::vector<T<Sys>>{{h}}; })});
  s.conditions.push_back(every_v_invertible<Sys>(f, "v-iii", gv));
  s.conditions.back().parts[0].roles = {"A"};
  s.conditions.push_back(
      {"v-iv", gv,
       {part<Sys>(Arity::single, {"A"}, [f](const T<Sys>& t) { return f->v(f->mul(t[0], f->inv(t[0]))) == f->D; }),
        part<Sys>(Arity::bilinear, {"A", "B"},
                  [f](const T<Sys>& t) {
                    return f->v(f->mul(t[0], t[1])) == f->st(f->mul(f->v(t[0]), f->v(t[1])));
                  })},
       [f](const ProbeInput<Sys>& in) {
         std::vector<Instance<Sys>> out;
         for (const auto& h : in.keys) {
           out.push_back({0, {h}});
           out.push_back({1, {h, f->inv(h)}});
         }
         return out;
       }});
  s.conditions.push_back({"strictly-finite", noeth,
                          {part<Sys>(Arity::single, {"A"},
                                     [f](const T<Sys>& t) {
                                       const auto as = f->star(t[0]);
                                       return f->st(f->sys.generate(f->sys.minimal_generators(as))) == as;
                                     })},
                          nullptr, "", "every ideal is finitely generated, so ACC on star-ideals of finite type is exact"});
  return s;
}

template <IdealSystem Sys>
Suite<Sys> inv_group(OpsPtr<Sys> o) {
  const std::string laws = "group-laws", g = "star-prufer", lv = "lattice-v", gv = "star-v-prufer";
  const std::string& star_name = o->star.name();
  std::vector<Relation> relations{{g, lv, false}, {lv, gv, false}};
  if (star_name == "d") relations.push_back({lv, gv, true});
  if (star_name == "v" || star_name == "t") relations.push_back({lv, g, true});
  Suite<Sys> s{"inv-group",
               {{{laws, GroupMode::must_hold}, nullptr}, invertibility_group(o, g), {{lv, GroupMode::equivalent}, nullptr},
                v_invertibility_group(o, gv)},
               {},
               std::move(relations)};
  auto inv2 = [o](const T<Sys>& t) { return o->in_inv(t[0]) && o->in_inv(t[1]); };
  s.conditions.push_back({"divisorial", laws,
                          {part<Sys>(Arity::single, {"A"},
                                     [o](const T<Sys>& t) { return !o->in_inv(t[0]) || o->v(t[0]) == t[0]; })},
                          nullptr});
  s.conditions.push_back({"inverse", laws,
                          {part<Sys>(Arity::single, {"A"},
                                     [o](const T<Sys>& t) {
                                       if (!o->in_inv(t[0])) return true;
                                       const auto b = o->inv(t[0]);
                                       return o->in_inv(b) && o->st(o->mul(t[0], b)) == o->D;
                                     })},
                          nullptr});
  s.conditions.push_back({"closure", laws,
                          {part<Sys>(Arity::positioned, {"A", "B"},
                                     [o, inv2](const T<Sys>& t) {
                                       if (!inv2(t)) return true;
                                       const auto p = o->st(o->mul(t[0], t[1]));
                                       return o->in_inv(p) && p == o->st(o->mul(t[1], t[0]));
                                     })},
                          nullptr});
  s.conditions.push_back({"associativity", laws,
                          {part<Sys>(Arity::triple, {"X", "A", "B"},
                                     [o](const T<Sys>& t) {
                                       if (!o->in_inv(t[0]) || !o->in_inv(t[1]) || !o->in_inv(t[2])) return true;
                                       return o->st(o->mul(o->st(o->mul(t[0], t[1])), t[2])) ==
                                              o->st(o->mul(t[0], o->st(o->mul(t[1], t[2]))));
                                     })},
                          nullptr});
  s.conditions.push_back({"order-compatible", laws,
                          {part<Sys>(Arity::triple, {"X", "A", "B"},
                                     [o](const T<Sys>& t) {
                                       if (!o->in_inv(t[0]) || !o->in_inv(t[1]) || !o->in_inv(t[2])) return true;
                                       if (!o->sub(t[2], t[1])) return true;
                                       return o->sub(o->st(o->mul(t[0], t[2])), o->st(o->mul(t[0], t[1])));
                                     })},
                          nullptr});

  auto pair_probe = per_pair<Sys>(o, [](const I<Sys>& x, const I<Sys>& y, const I<Sys>&) {
    return std::vector<T<Sys>>{{x, y}};
  });
  s.conditions.push_back(every_invertible<Sys>(o, "star-prufer", g));
  s.conditions.push_back({"lattice-star", g,
                          {part<Sys>(Arity::positioned, {"A", "B"},
                                     [o, inv2](const T<Sys>& t) {
                                       if (!inv2(t)) return true;
                                       const auto s = o->add(t[0], t[1]);
                                       const auto inf = o->st(s);
                                       return o->in_inv(o->cap(t[0], t[1])) && o->in_inv(inf) && inf == o->v(s);
                                     })},
                          pair_probe, "", "sup is the intersection, inf is (A+B)* = (A+B)^v"});
  s.conditions.push_back(
      {"v-prufer-and-sums", g,
       {part<Sys>(Arity::single, {"F"}, [o](const T<Sys>& t) { return o->v_invertible(t[0]); }),
        part<Sys>(Arity::positioned, {"A", "B"},
                  [o, inv2](const T<Sys>& t) {
                    if (!inv2(t)) return true;
                    const auto s = o->add(t[0], t[1]);
                    return o->st(s) == o->v(s);
                  })},
       [o](const ProbeInput<Sys>& in) {
         std::vector<Instance<Sys>> out;
         for (const auto& h : in.keys) {
           out.push_back({0, {h}});
           auto xy = o->two_generated(h, [&](const I<Sys>& a) { return !o->invertible(a); });
           if (!xy) continue;
           out.push_back({0, {o->add(xy->first, xy->second)}});
           out.push_back({1, {xy->first, xy->second}});
         }
         return out;
       }});
  s.conditions.push_back({"lattice-v", lv,
                          {part<Sys>(Arity::positioned, {"A", "B"},
                                     [o, inv2](const T<Sys>& t) {
                                       if (!inv2(t)) return true;
                                       return o->in_inv(o->cap(t[0], t[1])) && o->in_inv(o->v(o->add(t[0], t[1])));
                                     })},
                          [o](const ProbeInput<Sys>& in) {
                            std::vector<Instance<Sys>> out;
                            for (const auto& t : in.failures)
                              for (const auto& h : t) {
                                auto bad = [&](const I<Sys>& a) { return !o->v_invertible(a) || !o->invertible(a); };
                                if (auto xy = o->two_generated(h, bad)) out.push_back({0, {xy->first, xy->second}});
                              }
                            return out;
                          }});
  s.conditions.push_back(every_v_invertible<Sys>(o, "v-prufer", gv));
  return s;
}

template <IdealSystem Sys>
Suite<Sys> gcd(OpsPtr<Sys> o) {
  const std::string g = "star-prufer", uniq = "gcd-uniqueness";
  Suite<Sys> s{"gcd", {invertibility_group(o, g), {{uniq, GroupMode::must_hold}, nullptr}}, {}, {}};
  auto eligible = [o](const I<Sys>& a) { return o->integral(a) && o->in_inv(a); };
  s.conditions.push_back(every_invertible<Sys>(o, "star-prufer", g));
  s.conditions.push_back(
      {"gcd", g,
       {part<Sys>(Arity::positioned, {"A", "B"},
                  [o, eligible](const T<Sys>& t) {
                    const auto &a = t[0], &b = t[1];
                    if (!eligible(a) || !eligible(b)) return true;
                    const auto c = o->st(o->add(a, b));
                    if (!o->invertible(c)) return false;
                    const auto a1 = o->st(o->mul(a, o->inv(c))), b1 = o->st(o->mul(b, o->inv(c)));
                    return o->integral(a1) && o->integral(b1) && o->st(o->mul(a1, c)) == a &&
                           o->st(o->mul(b1, c)) == b && o->st(o->add(a1, b1)) == o->D;
                  })},
       per_pair<Sys>(o, [o](const I<Sys>& x, const I<Sys>& y, const I<Sys>&) {
         auto [a, b] = o->make_integral(x, y);
         return std::vector<T<Sys>>{{a, b}};
       }),
       "", "C = (A+B)*, A1 = (AC^-1)*, B1 = (BC^-1)* over integral invertible star-ideals"});
  s.conditions.push_back(
      {"uniqueness", uniq,
       {part<Sys>(Arity::triple, {"C", "A", "B"},
                  [o, eligible](const T<Sys>& t) {
                    const auto &c = t[0], &a = t[1], &b = t[2];
                    if (!eligible(a) || !eligible(b) || !(o->st(c) == c)) return true;
                    const auto a1 = o->st(o->mul(a, o->inv(c))), b1 = o->st(o->mul(b, o->inv(c)));
                    const bool solves = o->integral(a1) && o->integral(b1) && o->st(o->mul(a1, c)) == a &&
                                        o->st(o->mul(b1, c)) == b && o->st(o->add(a1, b1)) == o->D;
                    return !solves || c == o->st(o->add(a, b));
                  })},
       nullptr});
  return s;
}

/// H is ⋆-invertible iff (A:H)^⋆ = (A^⋆:H) = (AH^{-1})^⋆ for every A.
template <IdealSystem Sys>
bool colon_identity(const Ops<Sys>& o, const I<Sys>& a, const I<Sys>& h) {
  const auto target = o.st(o.mul(a, o.inv(h)));
  return o.st(o.col(a, h)) == target && o.col(o.st(a), h) == target;
}

template <IdealSystem Sys>
Suite<Sys> colon(OpsPtr<Sys> o) {
  const std::string g = "colon-characterization";
  Suite<Sys> s{"colon", {{{g, GroupMode::must_hold}, nullptr}}, {}, {}};
  s.conditions.push_back({"invertible-gives-identity", g,
                          {part<Sys>(Arity::bilinear, {"A", "H"},
                                     [o](const T<Sys>& t) {
                                       return !o->invertible(t[1]) || colon_identity(*o, t[0], t[1]);
                                     })},
                          nullptr});
  s.conditions.push_back({"identity-gives-invertible", g,
                          {part<Sys>(Arity::single, {"H"},
                                     [o](const T<Sys>& t) {
                                       return colon_identity(*o, t[0], t[0]) == o->invertible(t[0]);
                                     })},
                          nullptr, "", "A = H already decides the converse"});
  return s;
}

}  // namespace suites

/// Builds the named suite for one star operation.
template <IdealSystem Sys>
Suite<Sys> make_suite(const std::string& name, const Sys& sys, const StarOperation<Sys>& star) {
  if (!(star.owner() == sys)) throw OwnerMismatch("star operation belongs to another system");
  auto o = std::make_shared<const Ops<Sys>>(sys, star);
  if (name == "cicd") return suites::star_cicd<Sys>(o);
  if (name == "v-cicd") return suites::star_v_cicd<Sys>(o);
  if (name == "prod-dual") return suites::prod_dual<Sys>(o);
  if (name == "prufer") return suites::star_prufer<Sys>(o);
  if (name == "prufer-quotient") return suites::star_prufer_quotient<Sys>(o);
  if (name == "stability") return suites::stability<Sys>(o);
  if (name == "necessary") return suites::necessary<Sys>(o);
  if (name == "inverse-product") return suites::inverse_product<Sys>(o);
  if (name == "dedekind")
    return suites::dedekind<Sys>(std::make_shared<const Ops<Sys>>(sys, finite_character(star)));
  if (name == "inv-group") return suites::inv_group<Sys>(o);
  if (name == "gcd") return suites::gcd<Sys>(o);
  if (name == "colon") return suites::colon<Sys>(o);
  throw UsageError("unknown suite '" + name + "'");
}

template <IdealSystem Sys>
EquivalenceReport run_suite(const std::string& name, const Sys& sys, const StarOperation<Sys>& star,
                            const Scope<Sys>& scope) {
  return evaluate(sys, star, scope, make_suite(name, sys, star));
}

template <IdealSystem Sys>
EquivalenceReport suite_star_cicd(const Sys& sys, const StarOperation<Sys>& star, const Scope<Sys>& scope) {
  return run_suite("cicd", sys, star, scope);
}
template <IdealSystem Sys>
EquivalenceReport suite_star_v_cicd(const Sys& sys, const StarOperation<Sys>& star, const Scope<Sys>& scope) {
  return run_suite("v-cicd", sys, star, scope);
}
template <IdealSystem Sys>
EquivalenceReport suite_prod_dual_cicd(const Sys& sys, const StarOperation<Sys>& star, const Scope<Sys>& scope) {
  return run_suite("prod-dual", sys, star, scope);
}
template <IdealSystem Sys>
EquivalenceReport suite_star_prufer(const Sys& sys, const StarOperation<Sys>& star, const Scope<Sys>& scope) {
  return run_suite("prufer", sys, star, scope);
}
template <IdealSystem Sys>
EquivalenceReport suite_star_prufer_quotient(const Sys& sys, const StarOperation<Sys>& star,
                                             const Scope<Sys>& scope) {
  return run_suite("prufer-quotient", sys, star, scope);
}
template <IdealSystem Sys>
EquivalenceReport suite_stability(const Sys& sys, const StarOperation<Sys>& star, const Scope<Sys>& scope) {
  return run_suite("stability", sys, star, scope);
}
template <IdealSystem Sys>
EquivalenceReport check_necessary(const Sys& sys, const StarOperation<Sys>& star, const Scope<Sys>& scope) {
  return run_suite("necessary", sys, star, scope);
}
template <IdealSystem Sys>
EquivalenceReport suite_inverse_product(const Sys& sys, const StarOperation<Sys>& star, const Scope<Sys>& scope) {
  return run_suite("inverse-product", sys, star, scope);
}
template <IdealSystem Sys>
EquivalenceReport suite_dedekind(const Sys& sys, const StarOperation<Sys>& star, const Scope<Sys>& scope) {
  return run_suite("dedekind", sys, star, scope);
}
template <IdealSystem Sys>
EquivalenceReport suite_inv_group(const Sys& sys, const StarOperation<Sys>& star, const Scope<Sys>& scope) {
  return run_suite("inv-group", sys, star, scope);
}

/// The unique C = (A+B)^⋆ with A = (A1 C)^⋆, B = (B1 C)^⋆, (A1+B1)^⋆ = D.
template <IdealSystem Sys>
struct GcdDecomposition {
  IdealOf<Sys> c, a1, b1;
};

/// Throws UsageError unless A, B are integral ⋆-invertible ⋆-ideals,
/// NotApplicable when (A+B)^⋆ is not ⋆-invertible, and ConsistencyError if a
/// certificate equation fails.
template <IdealSystem Sys>
GcdDecomposition<Sys> gcd_decompose(const Sys& sys, const StarOperation<Sys>& star, const IdealOf<Sys>& a,
                                    const IdealOf<Sys>& b) {
  const Ops<Sys> o(sys, star);
  for (const auto* x : {&a, &b})
    if (!o.integral(*x) || !o.in_inv(*x))
      throw UsageError(sys.format(*x) + " is not an integral " + star.name() + "-invertible " + star.name() +
                       "-ideal");
  const auto c = o.st(o.add(a, b));
  if (!o.invertible(c)) throw NotApplicable("(A+B)^" + star.name() + " = " + sys.format(c) + " is not invertible");
  GcdDecomposition<Sys> out{c, o.st(o.mul(a, o.inv(c))), o.st(o.mul(b, o.inv(c)))};
  if (!o.integral(out.a1) || !o.integral(out.b1) || !(o.st(o.mul(out.a1, c)) == a) ||
      !(o.st(o.mul(out.b1, c)) == b) || !(o.st(o.add(out.a1, out.b1)) == o.D))
    throw ConsistencyError("gcd certificate fails for " + sys.format(a) + ", " + sys.format(b));
  return out;
}

struct ColonCharacterization {
  bool invertible = false;
  bool identity = false;
};

/// Both sides of "H ⋆-invertible ⟺ (A:H)^⋆ = (A^⋆:H) = (AH^{-1})^⋆ ∀A",
/// the universal side over the scope ideals and H itself.
template <IdealSystem Sys>
ColonCharacterization colon_characterization(const Sys& sys, const StarOperation<Sys>& star, const IdealOf<Sys>& h,
                                             const Scope<Sys>& scope) {
  const Ops<Sys> o(sys, star);
  ColonCharacterization out{o.invertible(h), suites::colon_identity(o, h, h)};
  for (const auto& a : scope.ideals) {
    if (!out.identity) break;
    out.identity = suites::colon_identity(o, a, h);
  }
  return out;
}

}  // namespace starideal::check
