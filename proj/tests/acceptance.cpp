// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. The CLI path is the first argument.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "printed_values.hpp"
#include "pawn/newton.hpp"
#include "pawn/series.hpp"
#include "pawn/umbral.hpp"
#include "pawn/verify.hpp"

using namespace pawn;

namespace {

// Each check returns an empty string on success, else what went wrong.
using Check = std::function<std::string()>;

std::string expect(bool ok, const std::string& what) { return ok ? "" : what; }

std::string all_of(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts)
    if (!p.empty()) out += (out.empty() ? "" : "; ") + p;
  return out;
}

std::string report_ok(const CheckReport& r) {
  return r.status == CheckStatus::pass ? "" : r.name + " " + to_string(r.status) + ": " + r.detail;
}

std::string run_command(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = ::pclose(pipe);
  return out;
}

std::string criterion1() {
  const auto pawn = solve_pawn(3);
  std::string err;
  for (const auto& [t, v] : printed::first_pawn_terms())
    if (pawn.coeff(t) != v) err += "mismatch on " + t.encoding() + " ";
  return all_of({err, expect(pawn.nonzero_count() == 4, "unexpected extra terms")});
}

std::string criterion2() {
  const auto v = solve_omega_bar(4);
  std::string err;
  for (const auto& [t, val] : printed::first_omega_bar_terms())
    if (v.coeff(t) != val) err += "mismatch on " + t.encoding() + " ";
  return all_of({err, expect(v.nonzero_count() == 8, "unexpected extra terms")});
}

std::string criterion3() {
  const Tree t = printed::five_vertex_tree();
  const XPoly p = pawn_coefficient(t);
  const auto split = split_numerator(p);
  return all_of({
      expect(split.denominator == printed::five_vertex_pawn_denominator(), "pawn denominator"),
      expect(p == printed::five_vertex_pawn_numerator() * (QRat(1) / QRat(printed::five_vertex_pawn_denominator())),
             "pawn numerator"),
      expect(coloring_poly(t, 1, ColoringMode::weak) == printed::five_vertex_F1(), "F^(1)"),
      expect(coloring_poly(t, 3, ColoringMode::strict) == printed::five_vertex_G3(), "G^(3)"),
      expect(omega_bar_coefficient(t) == printed::five_vertex_omega_bar(), "Omega-bar"),
  });
}

std::string criterion4() {
  std::string err;
  const auto trees = trees_up_to(7);
  if (trees.size() != 85) err += "expected 85 trees, got " + std::to_string(trees.size()) + " ";
  const auto pawn = solve_pawn(7);
  for (Tree t : trees) {
    if (oracle_interpolate_pawn(t) != pawn.coeff(t)) err += "interpolation on " + t.encoding() + " ";
    for (long n = 0; n <= 3; ++n)
      for (auto mode : {ColoringMode::weak, ColoringMode::strict})
        if (oracle_colorings(t, n, mode) != coloring_poly(t, n, mode)) err += "colorings on " + t.encoding() + " ";
  }
  return err;
}

std::string criterion5() {
  const auto at = [](Theorem which, std::size_t order) {
    CheckOptions o;
    o.max_order = order;
    o.n_lo = 2;
    o.n_hi = 4;
    o.seed = 1;
    o.random_series = 3;
    o.max_size = 9;
    return report_ok(check_theorem(which, o));
  };
  return all_of({
      at(Theorem::valeur_n_positif, 6),
      at(Theorem::valeur_n_negatif, 6),
      at(Theorem::valeur_speciale, 6),
      at(Theorem::ombral_iti, 7),
      at(Theorem::ombral_nui, 7),
      at(Theorem::action_delta, 6),
      at(Theorem::facteurs_connus, 8),
      at(Theorem::x_infinity, 8),
      at(Theorem::prop_gen, 6),
      at(Theorem::fbar_vs_cover, 9),
  });
}

// Classical Bernoulli numbers from sum_{j<=k} C(k+1, j) B_j = 0.
std::vector<Rational> bernoulli_by_recurrence(std::size_t n) {
  std::vector<Rational> b{Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc(0);
    Rational binom(1);
    for (std::size_t j = 0; j < k; ++j) {
      acc += binom * b[j];
      binom = binom * Rational(static_cast<long>(k + 1 - j)) / Rational(static_cast<long>(j + 1));
    }
    b.push_back(-acc / Rational(static_cast<long>(k + 1)));
  }
  return b;
}

std::string criterion6() {
  const auto printed = printed::bernoulli_numbers();
  const auto derived = bernoulli_by_recurrence(printed.size() - 1);
  std::string err;
  for (std::size_t k = 0; k < printed.size(); ++k) {
    if (printed[k] != derived[k]) err += "printed B_" + std::to_string(k) + " ";
    if (bernoulli_carlitz(k).eval(1) != printed[k]) err += "beta_" + std::to_string(k) + " at q=1 ";
  }
  CheckOptions o;
  o.max_order = 6;
  return all_of({err, report_ok(check_theorem(Theorem::carlitz_reflection, o))});
}

std::string criterion7() {
  const auto b = printed::bernoulli_numbers();
  const auto dc = printed::double_corolla_values();
  std::string err;
  const auto omega = solve_omega(9);
  for (std::size_t k = 1; k + 1 <= 9; ++k)
    if (omega.coeff(Tree::corolla(k)).eval(1) != b[k]) err += "corolla " + std::to_string(k) + " ";
  for (std::size_t k = 1; k <= dc.size(); ++k) {
    const Tree t = Tree::graft(std::vector<Tree>(k, Tree::linear(2)));
    if (omega.coeff(t).eval(1) != dc[k - 1]) err += "double corolla " + std::to_string(k) + " ";
  }
  return err;
}

std::string criterion8() {
  const int one[] = {1};
  return all_of({
      report_ok(check_corolla_denominator(12)),
      report_ok(check_newton_sweep(8, 1)),
      report_ok(check_partition_conjecture(one, 3, 11)),
      report_ok(check_partition_conjecture(one, 5, 11)),
  });
}

// sum_{j>=1} q^(j-1) [j]_q^k through q^m by integer convolution.
std::vector<Rational> zeta_oracle(std::size_t k, std::size_t m) {
  std::vector<long> total(m + 1, 0);
  for (std::size_t j = 1; j <= m + 1; ++j) {
    std::vector<long> p(m + 1, 0);
    p[j - 1] = 1;
    for (std::size_t r = 0; r < k; ++r) {
      std::vector<long> next(m + 1, 0);
      for (std::size_t e = 0; e <= m; ++e)
        for (std::size_t s = 0; s < j && e + s <= m; ++s) next[e + s] += p[e];
      p = std::move(next);
    }
    for (std::size_t e = 0; e <= m; ++e) total[e] += p[e];
  }
  return {total.begin(), total.end()};
}

std::string criterion9() {
  constexpr std::size_t m = 20;
  std::string err;
  std::vector<Rational> geometric(m + 1, Rational(1));
  const QSeries x(geometric, m);
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto want = zeta_oracle(k, m);
    if (pawn_one_minus_q_inverse(k, m).coefficients() != want) err += "k=" + std::to_string(k) + " ";
    const auto direct = solve_pawn_in_series(x, k + 1, m).coeff(Tree::corolla(k));
    if (direct.coefficients() != want) err += "k=" + std::to_string(k) + " (series solve) ";
  }
  return err;
}

std::string criterion10(const std::string& cli) {
  if (cli.empty()) return "no CLI path given";
  const std::string cmd = cli + " compute pawn --order 6 --format json";
  int s1 = 0, s2 = 0, s3 = 0;
  const std::string a = run_command(cmd, s1);
  const std::string b = run_command(cmd, s2);
  const std::string c = run_command(cmd + " --workers 4", s3);
  return all_of({
      expect(s1 == 0 && s2 == 0 && s3 == 0, "CLI exit status"),
      expect(!a.empty(), "empty CLI output"),
      expect(a == b, "repeated runs differ"),
      expect(a == c, "parallel run differs from single worker"),
      expect(solve_pawn(6, 1) == solve_pawn(6, 4), "library parallel solve differs"),
      expect(solve_omega(7, 1) == solve_omega(7, 4), "library parallel Omega differs"),
  });
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, Check>> criteria{
      {"first terms of the pawn series", criterion1},
      {"first terms of Omega-bar", criterion2},
      {"five-vertex example", criterion3},
      {"oracle equivalence up to size 7", criterion4},
      {"theorem sweeps", criterion5},
      {"Bernoulli data and Carlitz reflection", criterion6},
      {"classical sequences at q = 1", criterion7},
      {"conjecture sweeps", criterion8},
      {"corollas at x = 1/(1-q)", criterion9},
      {"determinism", [&] { return criterion10(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string err;
    try {
      err = criteria[i].second();
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (err.empty() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
         << std::fixed;
    line.precision(2);
    line << secs << " s)";
    if (!err.empty()) line << " -- " << err;
    std::cout << line.str() << std::endl;
    failed += err.empty() ? 0 : 1;
  }
  return failed ? 1 : 0;
}
