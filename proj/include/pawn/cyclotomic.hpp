#pragma once

#include <map>
#include <optional>
#include <string>

#include "pawn/qpoly.hpp"
#include "pawn/qrat.hpp"

namespace pawn {

/// Phi_d(q), d >= 1. Memoized in a process-wide insert-only cache.
const QPoly& cyclotomic(unsigned d);

struct CyclotomicFactorization {
  Rational unit;
  std::map<unsigned, unsigned> factors;  // d -> multiplicity
  QPoly remainder;                       // primitive over Z, positive lead

  /// unit * prod Phi_d^m * remainder.
  QPoly expand() const;
};

/// Ascending trial division by Phi_1, Phi_2, ... up to `bound`
/// (default 2*deg(p) + 2). Throws std::invalid_argument on p = 0.
CyclotomicFactorization factor_cyclotomic(const QPoly& p, std::optional<unsigned> bound = {});

/// "\Phi_2\Phi_3^{2}" style product of the factor map; "1" when empty.
std::string cyclotomic_product_tex(const std::map<unsigned, unsigned>& factors);

}  // namespace pawn
