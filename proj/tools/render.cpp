#include "render.hpp"

#include <vector>

#include "pawn/cyclotomic.hpp"
#include "pawn/newton.hpp"

namespace pawn::render {

namespace {

std::string tex_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string monomial(char var, std::size_t e) {
  if (e == 0) return "";
  std::string s(1, var);
  if (e > 1) s += "^{" + std::to_string(e) + "}";
  return s;
}

bool is_monomial(const QPoly& p) {
  int nonzero = 0;
  for (const auto& c : p.coeffs()) nonzero += c != 0;
  return nonzero == 1;
}

// Denominator rendered as cyclotomic factors times any leftover; the unit
// is returned separately so it can be moved into the numerator.
std::string factored_denominator(const QPoly& den, Rational& unit) {
  const auto f = factor_cyclotomic(den);
  unit = f.unit;
  std::string out = f.factors.empty() ? "" : cyclotomic_product_tex(f.factors);
  if (!f.remainder.is_constant()) out += "(" + tex(f.remainder) + ")";
  return out;
}

std::string frac(const std::string& num, const std::string& den) {
  if (den.empty()) return num;
  return "\\frac{" + num + "}{" + den + "}";
}

}  // namespace

std::string tex(const QPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto c = p.coeffs();
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] == 0) continue;
    const bool neg = c[e] < 0;
    const Rational mag = neg ? Rational(-c[e]) : c[e];
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const std::string m = monomial(var, e);
    if (m.empty())
      out += tex_rational(mag);
    else if (mag == 1)
      out += m;
    else
      out += tex_rational(mag) + " " + m;
  }
  return out;
}

std::string tex(const QRat& f) {
  if (f.den().is_constant()) return tex(f.num());
  Rational unit;
  const std::string den = factored_denominator(f.den(), unit);
  return frac(tex(f.num() * (Rational(1) / unit)), den);
}

std::string tex(const XPoly& f) {
  if (f.is_zero()) return "0";
  const auto split = split_numerator(f);
  XPoly rest = split.numerator.to_xpoly();
  std::string factors;
  for (int i = 1; i <= f.degree() && rest.degree() >= 1; ++i) {
    const QRat a = q_integer(i), b = QRat::q_power(i);
    try {
      rest = rest.divide_linear(a, b);
      factors += "(" + tex(a.num()) + " + " + monomial('q', static_cast<std::size_t>(i)) + " x)";
    } catch (const NotDivisible&) {
    }
  }
  Rational unit = 1;
  const std::string den = split.denominator.is_constant() ? "" : factored_denominator(split.denominator, unit);
  rest *= QRat(Rational(1) / unit);

  // The cofactor has polynomial coefficients: the divisors are primitive
  // in x. Descending powers of x.
  std::string cof;
  for (int j = rest.degree(); j >= 0; --j) {
    const QPoly& p = rest.coeff(static_cast<std::size_t>(j)).num();
    if (p.is_zero()) continue;
    std::string term = tex(p);
    const std::string xm = monomial('x', static_cast<std::size_t>(j));
    if (!xm.empty()) {
      if (p == QPoly(1))
        term = xm;
      else if (p == QPoly(-1))
        term = "-" + xm;
      else if (is_monomial(p))
        term += " " + xm;
      else
        term = "(" + term + ") " + xm;
    }
    if (cof.empty())
      cof = term;
    else
      cof += term.front() == '-' ? " - " + term.substr(1) : " + " + term;
  }
  std::string num;
  if (factors.empty()) {
    num = cof;
  } else if (rest.degree() == 0) {
    const QPoly& c = rest.coeff(0).num();
    if (c == QPoly(1))
      num = factors;
    else if (c == QPoly(-1))
      num = "-" + factors;
    else
      num = (is_monomial(c) ? cof + " " : "(" + cof + ")") + factors;
  } else {
    num = factors + "(" + cof + ")";
  }
  return frac(num, den);
}

std::string plain(const QRat& f) { return f.to_string(); }
std::string plain(const XPoly& f) { return f.to_string(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace pawn::render
