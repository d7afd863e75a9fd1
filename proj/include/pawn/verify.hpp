#pragma once

// Brute-force oracles, theorem sweeps and conjecture checkers.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pawn/serialize.hpp"
#include "pawn/series.hpp"

namespace pawn {

class BoundExceeded : public std::range_error {
 public:
  using std::range_error::range_error;
};

enum class CheckStatus { pass, fail, inconclusive };
std::string to_string(CheckStatus s);

struct CheckReport {
  std::string name;
  Json params = Json::object();
  CheckStatus status = CheckStatus::pass;
  /// Set on failure: the offending tree, value or hull.
  Json witness;
  std::string detail;
  double elapsed_ms = 0;

  bool passed() const { return status == CheckStatus::pass; }
};

/// Timing is left out when with_timing is false, which makes the document
/// a pure function of (name, params).
Json to_json(const CheckReport& r, bool with_timing = true);

struct OracleBounds {
  std::size_t coloring_max_size = 9;
  std::uint64_t coloring_max_states = std::uint64_t{1} << 22;
  std::size_t interpolation_max_size = 7;
};

/// Sum of q^(sum of colors) over all maps V(T) -> {0..n} that weakly
/// (strictly) decrease away from the root, by direct enumeration.
QPoly oracle_colorings(Tree t, long n, ColoringMode mode, const OracleBounds& bounds = {});

/// ♟_T by interpolation through the values of the coloring oracle at
/// x = [m]_q, m = 0..#T.
XPoly oracle_interpolate_pawn(Tree t, const OracleBounds& bounds = {});

enum class Theorem {
  valeur_n_positif,
  valeur_n_negatif,
  valeur_speciale,
  prop_gen,
  action_delta,
  ombral_iti,
  ombral_nui,
  facteurs_connus,
  x_infinity,
  q1_no_pole,
  fbar_vs_cover,
  sharp_reformulation,
  associativity,
  suspension_formula,
  linear_formula,
  corolla_egf,
  omega_bar_paths,
  carlitz_reflection,
  bernoulli_limit,
  squarefree_denominators,
  petit_lemma,
  specialization_consistency,
  oracle_colorings,
  oracle_interpolation,
};

std::string_view theorem_name(Theorem t);
std::optional<Theorem> theorem_from_name(std::string_view name);
const std::vector<Theorem>& all_theorems();

struct CheckOptions {
  std::size_t max_order = 6;
  /// Range of n for the q-integer evaluations.
  long n_lo = 2;
  long n_hi = 4;
  std::uint64_t seed = 1;
  int random_series = 3;
  /// Tree size bound for the vertex-cover sweep.
  std::size_t max_size = 9;
  unsigned workers = 1;
  OracleBounds bounds;
};

CheckReport check_theorem(Theorem which, const CheckOptions& opts = {});

/// Denominator of ♟_{Crl_n} equals prod_{d=2}^{n+1} Phi_d for n = 1..max_n.
/// Called with (done, total) as a sweep advances.
using Progress = std::function<void(std::size_t, std::size_t)>;

CheckReport check_corolla_denominator(std::size_t max_n, const Progress& progress = {});

/// Shape of the Newton polygon of the numerator of ♟_T: x-degrees span
/// 0..#T, the right boundary is one edge of slope 1, and the left boundary
/// rises through edges of slope 1/i, the one of slope 1/i rising by the
/// number of vertices at height i.
CheckReport check_newton(Tree t);
/// Progress is reported once per tree size.
CheckReport check_newton_sweep(std::size_t max_size, unsigned workers = 1, const Progress& progress = {});

/// Phi_{1 + max lambda} divides the numerator of Omega on
/// B+(T_lambda, ..., T_lambda) with k copies. Throws BoundExceeded when
/// the tree has more than `cap` vertices and std::invalid_argument on a
/// malformed partition.
CheckReport check_partition_conjecture(std::span<const int> lambda, int k, std::size_t cap);

}  // namespace pawn
