#pragma once

// Text renderings of coefficients for the csv and tex output formats.

#include <string>

#include "pawn/qrat.hpp"
#include "pawn/xpoly.hpp"

namespace pawn::render {

/// Ascending powers, e.g. "1 + q + \frac{1}{2} q^{2}".
std::string tex(const QPoly& p, char var = 'q');
/// Numerator over a cyclotomic-factored denominator.
std::string tex(const QRat& f);
/// Numerator with every factor [i]_q + q^i x split off, over a
/// cyclotomic-factored denominator.
std::string tex(const XPoly& f);

std::string plain(const QRat& f);
std::string plain(const XPoly& f);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

}  // namespace pawn::render
