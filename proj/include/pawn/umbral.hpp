#pragma once

// Bernoulli–Carlitz numbers, the q-umbra Psi and the Hahn operator.

#include <cstddef>

#include "pawn/qrat.hpp"
#include "pawn/xpoly.hpp"

namespace pawn {

/// beta_k from q(q beta + 1)^n - beta_n = [n = 1], beta_0 = 1 (memoized).
const QRat& bernoulli_carlitz(std::size_t k);

/// Linear form sending x^n to beta_n.
QRat psi_umbral(const XPoly& p);

/// (f(1 + q x) - f(x)) / (1 + q x - x).
XPoly hahn_delta(const XPoly& f);

/// The unique f divisible by 1 + q x with hahn_delta(f) = g.
XPoly hahn_inverse(const XPoly& g);

}  // namespace pawn
