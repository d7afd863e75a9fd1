#include "pawn/verify.hpp"

#include <array>
#include <chrono>
#include <random>

#include "pawn/cyclotomic.hpp"
#include "pawn/newton.hpp"
#include "pawn/parallel.hpp"
#include "pawn/umbral.hpp"

namespace pawn {

namespace {

using Witness = std::optional<Json>;

struct Outcome {
  Witness witness;
  std::string detail;
  bool cut = false;  // a bound shortened the sweep
};

Json mismatch(Tree t, const Json& expected, const Json& actual) {
  return Json{{"tree", t.encoding()}, {"expected", expected}, {"actual", actual}};
}

// Runs fn on every tree and returns the first witness in canonical order.
template <class Fn>
Witness sweep(const std::vector<Tree>& trees, unsigned workers, Fn&& fn) {
  std::vector<Witness> found(trees.size());
  parallel_for(trees.size(), workers, [&](std::size_t i) { found[i] = fn(trees[i]); });
  for (auto& w : found)
    if (w) return w;
  return std::nullopt;
}

template <class R>
Witness compare_series(const TreeSeries<R>& expected, const TreeSeries<R>& actual) {
  for (Tree t : trees_up_to(expected.order()))
    if (!(expected.coeff(t) == actual.coeff(t))) return mismatch(t, to_json(expected.coeff(t)), to_json(actual.coeff(t)));
  return std::nullopt;
}

std::string trees_detail(std::size_t order) {
  return std::to_string(trees_up_to(order).size()) + " trees up to size " + std::to_string(order);
}

TreeSeries<Rational> random_series(std::mt19937_64& rng, std::size_t order) {
  std::uniform_int_distribution<int> coef(-5, 5);
  TreeSeries<Rational> s(order);
  for (Tree t : trees_up_to(order)) s.set(t, coef(rng));
  return s;
}

TreeSeries<Rational> ones(std::size_t order) {
  TreeSeries<Rational> s(order);
  for (Tree t : trees_up_to(order)) s.set(t, 1);
  return s;
}

QRat signed_one(bool negative) { return QRat(negative ? -1 : 1); }

// ---- individual checks --------------------------------------------------

Outcome check_positive_values(const CheckOptions& o) {
  const auto pawn = solve_pawn(o.max_order, o.workers);
  const auto trees = trees_up_to(o.max_order);
  for (long n = std::max(0L, o.n_lo); n <= o.n_hi; ++n) {
    const auto values = eval_pawn_at_qint(pawn, n);
    auto w = sweep(trees, o.workers, [&](Tree t) -> Witness {
      const QRat want(coloring_poly(t, n, ColoringMode::weak));
      if (!(values.coeff(t) == want)) return mismatch(t, to_json(want), to_json(values.coeff(t)));
      return std::nullopt;
    });
    if (w) {
      (*w)["n"] = n;
      return {w, ""};
    }
  }
  return {std::nullopt, trees_detail(o.max_order)};
}

Outcome check_negative_values(const CheckOptions& o) {
  const auto pawn = solve_pawn(o.max_order, o.workers);
  const auto trees = trees_up_to(o.max_order);
  for (long n = std::max(1L, o.n_lo); n <= o.n_hi; ++n) {
    const auto values = eval_pawn_at_qint(pawn, -n);
    auto w = sweep(trees, o.workers, [&](Tree t) -> Witness {
      const long m = static_cast<long>(t.size());
      const QRat want = n == 1 ? QRat()
                               : signed_one(m % 2 == 1) * QRat::q_power(m) *
                                     QRat(coloring_poly(t, n - 2, ColoringMode::strict));
      const QRat got = values.coeff(t).reciprocal();
      if (!(got == want)) return mismatch(t, to_json(want), to_json(got));
      return std::nullopt;
    });
    if (w) {
      (*w)["n"] = -n;
      return {w, ""};
    }
  }
  return {std::nullopt, trees_detail(o.max_order)};
}

Outcome check_special_value(const CheckOptions& o) {
  const auto pawn = solve_pawn(o.max_order, o.workers);
  return {compare_series(solve_omega_bar(o.max_order, o.workers), limit_minus_one_over_q(pawn)),
          trees_detail(o.max_order)};
}

Outcome check_recovery(const CheckOptions& o) {
  std::mt19937_64 rng(o.seed);
  const auto e = ones(o.max_order);
  const auto minus_vertex = unit_vertex(Rational(-1), o.max_order);
  for (int i = 0; i < o.random_series; ++i) {
    const auto a = random_series(rng, o.max_order);
    const auto back = diamond_crls(diamond_crls(a, e, o.workers), minus_vertex, o.workers);
    if (auto w = compare_series(a, back)) {
      (*w)["draw"] = i;
      return {w, ""};
    }
  }
  // Divisibility by k + 1 of Crls ⋄ (E, k●) away from the vertex and of
  // (k●) # E everywhere.
  const std::size_t order = std::min<std::size_t>(o.max_order, 7);
  const auto e7 = ones(order);
  for (long k = 1; k <= 5; ++k) {
    const auto kv = unit_vertex(Rational(k), order);
    const auto d = diamond_crls(e7, kv, o.workers);
    const auto s = sharp(kv, e7, o.workers);
    for (Tree t : trees_up_to(order)) {
      const bool bad_d = t.size() >= 2 && mpz_divisible_ui_p(d.coeff(t).get_num().get_mpz_t(), k + 1) == 0;
      const bool bad_s = s.coeff(t).get_den() != 1 || mpz_divisible_ui_p(s.coeff(t).get_num().get_mpz_t(), k + 1) == 0;
      if (bad_d || bad_s)
        return {Json{{"tree", t.encoding()}, {"k", k}, {"diamond", to_json(d.coeff(t))}, {"sharp", to_json(s.coeff(t))}},
                ""};
    }
  }
  return {std::nullopt, std::to_string(o.random_series) + " random series to order " + std::to_string(o.max_order) +
                            "; divisibility for k = 1..5 to order " + std::to_string(order)};
}

XPoly children_product_shifted(Tree t) {
  XPoly prod(1);
  for (Tree c : t.children()) prod = prod * pawn_coefficient(c).substitute_one_plus_qx();
  return prod;
}

XPoly children_product(Tree t) {
  XPoly prod(1);
  for (Tree c : t.children()) prod = prod * pawn_coefficient(c);
  return prod;
}

Outcome check_action_delta(const CheckOptions& o) {
  const QRat q = QRat::q();
  return {sweep(trees_up_to(o.max_order), o.workers,
                [&](Tree t) -> Witness {
                  const XPoly want = q * children_product_shifted(t);
                  const XPoly got = hahn_delta(pawn_coefficient(t));
                  if (!(got == want)) return mismatch(t, to_json(want), to_json(got));
                  return std::nullopt;
                }),
          trees_detail(o.max_order)};
}

Outcome check_umbral_root(const CheckOptions& o) {
  return {sweep(trees_up_to(o.max_order), o.workers,
                [&](Tree t) -> Witness {
                  const QRat want = psi_umbral(children_product(t));
                  const QRat& got = omega_bar_coefficient(t);
                  if (!(got == want)) return mismatch(t, to_json(want), to_json(got));
                  return std::nullopt;
                }),
          trees_detail(o.max_order)};
}

Outcome check_umbral_graft(const CheckOptions& o) {
  const std::size_t order = o.max_order - 1;
  return {sweep(trees_up_to(order), o.workers,
                [&](Tree t) -> Witness {
                  const QRat want = psi_umbral(-XPoly::x() * children_product(t));
                  const Tree grafted = Tree::graft({t});
                  const QRat& got = omega_bar_coefficient(grafted);
                  if (!(got == want)) return mismatch(grafted, to_json(want), to_json(got));
                  return std::nullopt;
                }),
          trees_detail(order) + ", grafted"};
}

Outcome check_known_factors(const CheckOptions& o) {
  return {sweep(trees_up_to(o.max_order), o.workers,
                [&](Tree t) -> Witness {
                  XPoly p = pawn_coefficient(t);
                  if (p.degree() != static_cast<int>(t.size()))
                    return Json{{"tree", t.encoding()}, {"reason", "x-degree differs from size"}, {"degree", p.degree()}};
                  for (int i = 1; i <= t.height(); ++i) {
                    try {
                      p = p.divide_linear(q_integer(i), QRat::q_power(i));
                    } catch (const NotDivisible&) {
                      return Json{{"tree", t.encoding()}, {"reason", "not divisible"}, {"i", i}};
                    }
                  }
                  return std::nullopt;
                }),
          trees_detail(o.max_order)};
}

Outcome check_x_infinity(const CheckOptions& o) {
  const auto lead = pawn_x_infinity(solve_pawn(o.max_order, o.workers));
  TreeSeries<QRat> want(o.max_order);
  for (Tree t : trees_up_to(o.max_order)) want.set(t, q_factorial(t).inverse());
  return {compare_series(want, lead), trees_detail(o.max_order)};
}

Outcome check_q1(const CheckOptions& o) {
  TreeSeries<XPoly> lim;
  try {
    lim = pawn_q1_limit(solve_pawn(o.max_order, o.workers));
  } catch (const PoleError& e) {
    return {Json{{"reason", e.what()}}, ""};
  }
  if (!(lim.coeff(Tree::vertex()) == XPoly::linear(QRat(1), QRat(1))))
    return {mismatch(Tree::vertex(), "1 + x", to_json(lim.coeff(Tree::vertex()))), ""};
  return {sweep(trees_up_to(o.max_order), o.workers,
                [&](Tree t) -> Witness {
                  const XPoly& f = lim.coeff(t);
                  for (long m = 0; m <= static_cast<long>(t.size()); ++m) {
                    const QRat want(coloring_poly(t, m, ColoringMode::weak).eval(1));
                    if (!(f.eval(QRat(m)) == want)) {
                      Json w = mismatch(t, to_json(want), to_json(f.eval(QRat(m))));
                      w["x"] = m;
                      return w;
                    }
                  }
                  const QRat want = signed_one(t.size() % 2 == 0) * QRat(omega_coefficient(t).eval(1));
                  const QRat got = f.derivative().eval(QRat(-1));
                  if (!(got == want)) return mismatch(t, to_json(want), to_json(got));
                  return std::nullopt;
                }),
          trees_detail(o.max_order)};
}

Outcome check_cover_type(const CheckOptions& o) {
  return {sweep(trees_up_to(o.max_size), o.workers,
                [&](Tree t) -> Witness {
                  const int type = fbar_type(t);
                  const auto cover = min_vertex_covers_root(t);
                  if ((type == 1) != cover.some_cover_contains_root)
                    return Json{{"tree", t.encoding()}, {"type", type}, {"root_in_some_cover", cover.some_cover_contains_root}};
                  return std::nullopt;
                }),
          trees_detail(o.max_size)};
}

Outcome check_sharp_form(const CheckOptions& o) {
  const QRat q = QRat::q();
  const std::size_t order = o.max_order;
  const auto pawn = solve_pawn(order, o.workers);
  const auto lhs = sharp(unit_vertex(XPoly(-1), order), pawn, o.workers);
  const auto scaled = XPoly(q) * suspension(pawn, XPoly(q));
  const auto rhs = sharp(scaled, unit_vertex(-XPoly::linear(q, q * q - q), order), o.workers);
  return {compare_series(lhs, rhs), trees_detail(order)};
}

Outcome check_nesting(const CheckOptions& o) {
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < o.random_series; ++i) {
    const auto a = random_series(rng, o.max_order), b = random_series(rng, o.max_order),
               c = random_series(rng, o.max_order);
    auto w = compare_series(diamond_crls(a, sharp(c, b, o.workers), o.workers),
                            diamond_crls(diamond_crls(a, b, o.workers), c, o.workers));
    if (!w) w = compare_series(sharp(a, sharp(b, c, o.workers), o.workers), sharp(sharp(a, b, o.workers), c, o.workers));
    if (w) {
      (*w)["draw"] = i;
      return {w, ""};
    }
  }
  return {std::nullopt, std::to_string(o.random_series) + " random triples to order " + std::to_string(o.max_order)};
}

Outcome check_suspension(const CheckOptions& o) {
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < o.random_series; ++i) {
    const auto b = random_series(rng, o.max_order), c = random_series(rng, o.max_order);
    for (long alpha : {2L, -3L}) {
      const Rational al(alpha);
      auto w = compare_series(suspension(diamond_crls(b, c, o.workers), al),
                              diamond_crls(suspension(b, al), al * suspension(c, al), o.workers));
      if (w) {
        (*w)["alpha"] = alpha;
        return {w, ""};
      }
    }
    const QRat q = QRat::q();
    const auto bq = b.map<QRat>([](const Rational& r) { return QRat(r); });
    const auto cq = c.map<QRat>([](const Rational& r) { return QRat(r); });
    auto w = compare_series(suspension(diamond_crls(bq, cq, o.workers), q),
                            diamond_crls(suspension(bq, q), q * suspension(cq, q), o.workers));
    if (w) {
      (*w)["alpha"] = "q";
      return {w, ""};
    }
  }
  return {std::nullopt, std::to_string(o.random_series) + " random pairs to order " + std::to_string(o.max_order)};
}

Outcome check_linear(const CheckOptions& o) {
  for (std::size_t n = 1; n <= o.max_order; ++n) {
    const Tree t = Tree::linear(n);
    if (!(pawn_linear(n) == pawn_coefficient(t))) return {mismatch(t, to_json(pawn_linear(n)), to_json(pawn_coefficient(t))), ""};
  }
  return {std::nullopt, "n <= " + std::to_string(o.max_order)};
}

Outcome check_corolla(const CheckOptions& o) {
  for (std::size_t n = 0; n < o.max_order; ++n) {
    const Tree t = Tree::corolla(n);
    if (!(pawn_corolla(n) == pawn_coefficient(t))) return {mismatch(t, to_json(pawn_corolla(n)), to_json(pawn_coefficient(t))), ""};
  }
  return {std::nullopt, "n < " + std::to_string(o.max_order)};
}

Outcome check_omega_bar_paths(const CheckOptions& o) {
  return {compare_series(solve_omega_bar(o.max_order, o.workers), omega_bar_via_reflection(solve_omega(o.max_order, o.workers))),
          trees_detail(o.max_order)};
}

Outcome check_reflection(const CheckOptions& o) {
  const std::size_t top = std::max<std::size_t>(10, o.max_order);
  for (std::size_t k = 2; k <= top; ++k) {
    const QRat& b = bernoulli_carlitz(k);
    const QRat want = signed_one(k % 2 == 1) * QRat::q_power(static_cast<long>(k) - 1) * b;
    if (!(b.reciprocal() == want)) return {Json{{"k", k}, {"expected", to_json(want)}, {"actual", to_json(b.reciprocal())}}, ""};
  }
  return {std::nullopt, "2 <= k <= " + std::to_string(top)};
}

Outcome check_bernoulli_limit(const CheckOptions& o) {
  // Classical numbers from sum_{j<=m} binom(m+1, j) B_j = 0.
  const std::size_t top = std::max<std::size_t>(12, o.max_order);
  std::vector<Rational> b{1};
  for (std::size_t m = 1; m <= top; ++m) {
    Rational s = 0;
    for (std::size_t j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * b[j];
    b.push_back(-s / Rational(static_cast<long>(m) + 1));
  }
  for (std::size_t k = 0; k <= top; ++k)
    if (bernoulli_carlitz(k).eval(1) != b[k])
      return {Json{{"k", k}, {"expected", to_json(b[k])}, {"actual", to_json(bernoulli_carlitz(k).eval(1))}}, ""};
  return {std::nullopt, "k <= " + std::to_string(top)};
}

Witness squarefree_witness(Tree t, const QRat& v, const char* series) {
  const auto f = factor_cyclotomic(v.den());
  bool ok = f.remainder.is_constant();
  for (const auto& [d, m] : f.factors) ok = ok && m == 1;
  if (ok) return std::nullopt;
  Json factors = Json::object();
  for (const auto& [d, m] : f.factors) factors[std::to_string(d)] = m;
  return Json{{"tree", t.encoding()}, {"series", series}, {"factors", factors}, {"remainder", to_json(f.remainder)}};
}

Outcome check_squarefree(const CheckOptions& o) {
  return {sweep(trees_up_to(o.max_order), o.workers,
                [&](Tree t) -> Witness {
                  if (auto w = squarefree_witness(t, omega_coefficient(t), "omega")) return w;
                  return squarefree_witness(t, omega_bar_coefficient(t), "omega_bar");
                }),
          trees_detail(o.max_order)};
}

Outcome check_petit(const CheckOptions& o) {
  const std::size_t top = std::max<std::size_t>(8, o.max_order);
  for (std::size_t n = 1; n <= top; ++n) {
    const QRat got = psi_umbral(-XPoly::x() * pawn_linear(n));
    const QRat want = q_integer(static_cast<long>(n) + 2).inverse();
    if (!(got == want)) return {Json{{"n", n}, {"expected", to_json(want)}, {"actual", to_json(got)}}, ""};
  }
  return {std::nullopt, "n <= " + std::to_string(top)};
}

Outcome check_specialization(const CheckOptions& o) {
  const auto pawn = solve_pawn(o.max_order, o.workers);
  for (long n = -3; n <= 3; ++n) {
    if (auto w = compare_series(eval_pawn_at_qint(pawn, n), solve_pawn_at(q_integer(n), o.max_order))) {
      (*w)["n"] = n;
      return {w, ""};
    }
  }
  return {std::nullopt, "-3 <= n <= 3, " + trees_detail(o.max_order)};
}

Outcome check_coloring_oracle(const CheckOptions& o) {
  const std::size_t order = std::min(o.max_order, o.bounds.coloring_max_size);
  auto w = sweep(trees_up_to(order), o.workers, [&](Tree t) -> Witness {
    for (long n = 0; n <= 3; ++n)
      for (auto mode : {ColoringMode::weak, ColoringMode::strict}) {
        const QPoly want = oracle_colorings(t, n, mode, o.bounds);
        if (!(coloring_poly(t, n, mode) == want)) {
          Json j = mismatch(t, to_json(want), to_json(coloring_poly(t, n, mode)));
          j["n"] = n;
          j["mode"] = mode == ColoringMode::weak ? "weak" : "strict";
          return j;
        }
      }
    return std::nullopt;
  });
  return {w, trees_detail(order) + ", n <= 3, both modes", order < o.max_order};
}

Outcome check_interpolation_oracle(const CheckOptions& o) {
  const std::size_t order = std::min(o.max_order, o.bounds.interpolation_max_size);
  auto w = sweep(trees_up_to(order), o.workers, [&](Tree t) -> Witness {
    const XPoly want = oracle_interpolate_pawn(t, o.bounds);
    if (!(pawn_coefficient(t) == want)) return mismatch(t, to_json(want), to_json(pawn_coefficient(t)));
    return std::nullopt;
  });
  return {w, trees_detail(order), order < o.max_order};
}

struct TheoremEntry {
  Theorem id;
  std::string_view name;
  Outcome (*run)(const CheckOptions&);
  bool uses_n_range;
  bool uses_seed;
};

const std::array<TheoremEntry, 24>& theorem_table() {
  static const std::array<TheoremEntry, 24> table{{
      {Theorem::valeur_n_positif, "valeur_n_positif", check_positive_values, true, false},
      {Theorem::valeur_n_negatif, "valeur_n_negatif", check_negative_values, true, false},
      {Theorem::valeur_speciale, "valeur_speciale", check_special_value, false, false},
      {Theorem::prop_gen, "prop_gen", check_recovery, false, true},
      {Theorem::action_delta, "action_delta", check_action_delta, false, false},
      {Theorem::ombral_iti, "ombral_iti", check_umbral_root, false, false},
      {Theorem::ombral_nui, "ombral_nui", check_umbral_graft, false, false},
      {Theorem::facteurs_connus, "facteurs_connus", check_known_factors, false, false},
      {Theorem::x_infinity, "x_infinity", check_x_infinity, false, false},
      {Theorem::q1_no_pole, "q1_no_pole", check_q1, false, false},
      {Theorem::fbar_vs_cover, "fbar_vs_cover", check_cover_type, false, false},
      {Theorem::sharp_reformulation, "sharp_reformulation", check_sharp_form, false, false},
      {Theorem::associativity, "associativity", check_nesting, false, true},
      {Theorem::suspension_formula, "suspension_formula", check_suspension, false, true},
      {Theorem::linear_formula, "linear_formula", check_linear, false, false},
      {Theorem::corolla_egf, "corolla_egf", check_corolla, false, false},
      {Theorem::omega_bar_paths, "omega_bar_paths", check_omega_bar_paths, false, false},
      {Theorem::carlitz_reflection, "carlitz_reflection", check_reflection, false, false},
      {Theorem::bernoulli_limit, "bernoulli_limit", check_bernoulli_limit, false, false},
      {Theorem::squarefree_denominators, "squarefree_denominators", check_squarefree, false, false},
      {Theorem::petit_lemma, "petit_lemma", check_petit, false, false},
      {Theorem::specialization_consistency, "specialization_consistency", check_specialization, false, false},
      {Theorem::oracle_colorings, "oracle_colorings", check_coloring_oracle, false, false},
      {Theorem::oracle_interpolation, "oracle_interpolation", check_interpolation_oracle, false, false},
  }};
  return table;
}

const TheoremEntry& entry(Theorem t) {
  for (const auto& e : theorem_table())
    if (e.id == t) return e;
  throw std::logic_error("unknown theorem");
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

CheckReport make_report(std::string name, Json params, Outcome out) {
  CheckReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  if (out.witness) {
    r.status = CheckStatus::fail;
    r.witness = std::move(*out.witness);
  } else {
    r.status = out.cut ? CheckStatus::inconclusive : CheckStatus::pass;
  }
  r.detail = std::move(out.detail);
  return r;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

Json to_json(const CheckReport& r, bool with_timing) {
  Json j{{"check", r.name}, {"params", r.params}, {"status", to_string(r.status)}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.status == CheckStatus::fail) j["witness"] = r.witness;
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

QPoly oracle_colorings(Tree t, long n, ColoringMode mode, const OracleBounds& bounds) {
  const std::size_t size = t.size();
  if (size > bounds.coloring_max_size)
    throw BoundExceeded("coloring oracle: tree of size " + std::to_string(size) + " exceeds bound " +
                        std::to_string(bounds.coloring_max_size));
  if (n < 0) return QPoly();
  const auto base = static_cast<std::uint64_t>(n) + 1;
  std::uint64_t states = 1;
  for (std::size_t i = 0; i < size; ++i) {
    states *= base;
    if (states > bounds.coloring_max_states)
      throw BoundExceeded("coloring oracle: more than " + std::to_string(bounds.coloring_max_states) + " maps");
  }
  const auto lt = labeled(t);
  std::vector<long> color(size, 0);
  std::vector<long> count(size * static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t s = 0; s < states; ++s) {
    bool ok = true;
    for (std::size_t v = 1; ok && v < size; ++v) {
      const long child = color[v], parent = color[static_cast<std::size_t>(lt.parent[v])];
      ok = mode == ColoringMode::weak ? child <= parent : child < parent;
    }
    if (ok) {
      long sigma = 0;
      for (long c : color) sigma += c;
      ++count[static_cast<std::size_t>(sigma)];
    }
    for (std::size_t v = 0; v < size; ++v) {
      if (++color[v] <= n) break;
      color[v] = 0;
    }
  }
  std::vector<Rational> c(count.begin(), count.end());
  return QPoly(std::move(c));
}

XPoly oracle_interpolate_pawn(Tree t, const OracleBounds& bounds) {
  const std::size_t size = t.size();
  if (size > bounds.interpolation_max_size)
    throw BoundExceeded("interpolation oracle: tree of size " + std::to_string(size) + " exceeds bound " +
                        std::to_string(bounds.interpolation_max_size));
  // Newton divided differences through (x_m, y_m), m = 0..#T.
  std::vector<QRat> xs, dd;
  for (std::size_t m = 0; m <= size; ++m) {
    xs.push_back(q_integer(static_cast<long>(m)));
    dd.emplace_back(oracle_colorings(t, static_cast<long>(m), ColoringMode::weak, bounds));
  }
  for (std::size_t level = 1; level <= size; ++level)
    for (std::size_t i = size; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  XPoly out(dd[size]);
  for (std::size_t i = size; i-- > 0;) out = out * XPoly::linear(-xs[i], QRat(1)) + XPoly(dd[i]);
  return out;
}

std::string_view theorem_name(Theorem t) { return entry(t).name; }

std::optional<Theorem> theorem_from_name(std::string_view name) {
  for (const auto& e : theorem_table())
    if (e.name == name) return e.id;
  return std::nullopt;
}

const std::vector<Theorem>& all_theorems() {
  static const std::vector<Theorem> all = [] {
    std::vector<Theorem> v;
    for (const auto& e : theorem_table()) v.push_back(e.id);
    return v;
  }();
  return all;
}

CheckReport check_theorem(Theorem which, const CheckOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const auto& e = entry(which);
  Json params{{"max_order", opts.max_order}};
  if (which == Theorem::fbar_vs_cover) params = Json{{"max_size", opts.max_size}};
  if (e.uses_n_range) params["n_range"] = Json::array({opts.n_lo, opts.n_hi});
  if (e.uses_seed) {
    params["seed"] = opts.seed;
    params["random_series"] = opts.random_series;
  }
  if (opts.max_order < 1) throw std::invalid_argument("max order must be at least 1");
  CheckReport r = make_report(std::string(e.name), std::move(params), e.run(opts));
  r.elapsed_ms = elapsed_ms(start);
  return r;
}

CheckReport check_corolla_denominator(std::size_t max_n, const Progress& progress) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out{std::nullopt, "n <= " + std::to_string(max_n)};
  for (std::size_t n = 1; n <= max_n && !out.witness; ++n) {
    const auto den = split_numerator(pawn_corolla(n)).denominator;
    const auto f = factor_cyclotomic(den);
    std::map<unsigned, unsigned> want;
    for (unsigned d = 2; d <= n + 1; ++d) want[d] = 1;
    if (f.factors != want || !f.remainder.is_constant()) {
      Json factors = Json::object();
      for (const auto& [d, m] : f.factors) factors[std::to_string(d)] = m;
      out.witness = Json{{"n", n}, {"factors", factors}, {"remainder", to_json(f.remainder)}};
    }
    if (progress) progress(n, max_n);
  }
  CheckReport r = make_report("corolla-denominator", Json{{"max_n", max_n}}, std::move(out));
  r.elapsed_ms = elapsed_ms(start);
  return r;
}

CheckReport check_newton(Tree t) {
  const auto start = std::chrono::steady_clock::now();
  const long n = static_cast<long>(t.size());
  const NewtonPolygon hull(split_numerator(pawn_coefficient(t)).numerator);
  const auto stats = tree_stats(t);
  std::vector<long> runs;  // horizontal run of the left boundary per unit rise
  for (const auto& [height, count] : stats.height_histogram) runs.insert(runs.end(), static_cast<std::size_t>(count), height);

  auto fail = [&](const std::string& reason) {
    Json verts = Json::array();
    for (const auto& v : hull.vertices()) verts.push_back(Json::array({v.q_deg, v.x_deg}));
    return Json{{"tree", t.encoding()}, {"reason", reason}, {"vertices", verts}, {"left_runs", runs}};
  };

  Outcome out{std::nullopt, std::to_string(hull.vertices().size()) + " hull vertices"};
  if (hull.min_x_deg() != 0 || hull.max_x_deg() != n) {
    out.witness = fail("x-degrees do not span 0..#T");
  } else {
    const Rational left0 = *hull.left_at(0), right0 = *hull.right_at(0);
    Rational left = left0;
    for (long h = 1; h <= n && !out.witness; ++h) {
      left += Rational(runs[static_cast<std::size_t>(h - 1)]);
      if (*hull.left_at(h) != left) out.witness = fail("left boundary at x-degree " + std::to_string(h));
      else if (*hull.right_at(h) != right0 + h) out.witness = fail("right boundary at x-degree " + std::to_string(h));
    }
  }
  CheckReport r = make_report("newton", Json{{"tree", t.encoding()}}, std::move(out));
  r.elapsed_ms = elapsed_ms(start);
  return r;
}

CheckReport check_newton_sweep(std::size_t max_size, unsigned workers, const Progress& progress) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out{std::nullopt, trees_detail(max_size)};
  for (std::size_t n = 1; n <= max_size && !out.witness; ++n) {
    const auto& trees = enumerate_trees(n);
    std::vector<CheckReport> reports(trees.size());
    parallel_for(trees.size(), workers, [&](std::size_t i) { reports[i] = check_newton(trees[i]); });
    for (auto& rep : reports)
      if (rep.status == CheckStatus::fail) {
        out.witness = rep.witness;
        break;
      }
    if (progress) progress(n, max_size);
  }
  CheckReport r = make_report("newton", Json{{"max_size", max_size}}, std::move(out));
  r.elapsed_ms = elapsed_ms(start);
  return r;
}

CheckReport check_partition_conjecture(std::span<const int> lambda, int k, std::size_t cap) {
  const auto start = std::chrono::steady_clock::now();
  if (k < 1) throw std::invalid_argument("k must be positive");
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && lambda[i] > lambda[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  std::size_t weight = 0;
  for (int part : lambda) weight += static_cast<std::size_t>(part);
  const std::size_t size = 1 + static_cast<std::size_t>(k) * (1 + weight);
  if (size > cap)
    throw BoundExceeded("tree has " + std::to_string(size) + " vertices, above the cap " + std::to_string(cap));

  const Tree t = Tree::graft(std::vector<Tree>(static_cast<std::size_t>(k), partition_tree(lambda)));
  const unsigned d = 1 + static_cast<unsigned>(lambda.empty() ? 0 : lambda.front());
  const QRat& w = omega_coefficient(t);
  Json params{{"lambda", std::vector<int>(lambda.begin(), lambda.end())}, {"k", k}, {"cap", cap}};
  Outcome out;
  if (divides(cyclotomic(d), w.num())) {
    out.detail = "Phi_" + std::to_string(d) + " divides the numerator on " + t.encoding();
  } else {
    out.witness = Json{{"tree", t.encoding()}, {"phi", d}, {"omega", to_json(w)}};
  }
  CheckReport r = make_report("partition", std::move(params), std::move(out));
  r.elapsed_ms = elapsed_ms(start);
  return r;
}

}  // namespace pawn
