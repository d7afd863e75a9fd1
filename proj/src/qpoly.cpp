#include "pawn/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace pawn {

namespace {

const Rational& zero_rational() {
  static const Rational z(0);
  return z;
}

using ZPoly = std::vector<Integer>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(ZPoly& p) {
  if (p.empty()) return;
  Integer g = content(p);
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly to_primitive_z(const QPoly& p) {
  const Rational c = p.content();
  ZPoly z;
  z.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) {
    Rational r = a / c;
    z.push_back(r.get_num());
  }
  return z;
}

// Pseudo-remainder of a by b (deg a >= deg b), made primitive.
ZPoly prem_primitive(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const Integer la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  make_primitive(a);
  return a;
}

}  // namespace

QPoly::QPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPoly QPoly::monomial(const Rational& c, std::size_t exp) {
  QPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(exp + 1, Rational(0));
  p.coeffs_[exp] = c;
  return p;
}

QPoly QPoly::q_power_minus_one(std::size_t n) {
  QPoly p = monomial(1, n);
  p -= QPoly(1);
  return p;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t QPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return 0;
}

const Rational& QPoly::coeff(std::size_t exp) const {
  return exp < coeffs_.size() ? coeffs_[exp] : zero_rational();
}

const Rational& QPoly::leading() const {
  return coeffs_.empty() ? zero_rational() : coeffs_.back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& o) {
  *this = *this * o;
  return *this;
}

QPoly& QPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

QPoly QPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  QPoly r;
  r.coeffs_.assign(k, Rational(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

QPoly QPoly::unshifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  if (valuation() < k) throw NotDivisible("unshift: low coefficients do not vanish");
  return QPoly(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

QPoly QPoly::reversed() const {
  std::vector<Rational> r(coeffs_.rbegin(), coeffs_.rend());
  return QPoly(std::move(r));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  const Rational lc = leading();
  if (lc == 1) return *this;
  QPoly r = *this;
  for (auto& a : r.coeffs_) a /= lc;
  return r;
}

QPoly QPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return QPoly(std::move(d));
}

Rational QPoly::content() const {
  if (is_zero()) return 0;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& a : coeffs_) {
    if (a == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), a.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  if (leading() < 0) c = -c;
  return c;
}

QPoly QPoly::primitive_part() const {
  if (is_zero()) return *this;
  const Rational c = content();
  QPoly r = *this;
  for (auto& a : r.coeffs_) a /= c;
  return r;
}

Rational QPoly::eval(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

std::string QPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (c < 0)
      out << (first ? "-" : " - ");
    else if (!first)
      out << " + ";
    first = false;
    if (i == 0) {
      out << pawn::to_string(mag);
      continue;
    }
    if (mag != 1) out << pawn::to_string(mag) << '*';
    out << var;
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> quo(rem.size() - db, Rational(0));
  const Rational inv_lead = 1 / b.leading();
  const auto bc = b.coeffs();
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational f = rem[k + db] * inv_lead;
    if (f == 0) continue;
    quo[k] = f;
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= f * bc[i];
  }
  rem.resize(db);
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  auto [quo, rem] = divmod(a, b);
  if (!rem.is_zero()) throw NotDivisible("polynomial division leaves a remainder");
  return quo;
}

bool divides(const QPoly& d, const QPoly& p) { return divmod(p, d).second.is_zero(); }

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return QPoly(1);
  if (a == b) return a.monic();
  // Pull out the common power of q first: cheap and very common here.
  const std::size_t v = std::min(a.valuation(), b.valuation());
  ZPoly x = to_primitive_z(a.unshifted(a.valuation()));
  ZPoly y = to_primitive_z(b.unshifted(b.valuation()));
  if (x.size() < y.size()) std::swap(x, y);
  while (y.size() > 1) {
    ZPoly r = prem_primitive(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rational> g;
  if (y.empty()) {
    g.reserve(x.size());
    for (auto& c : x) g.emplace_back(c);
  } else {
    g.emplace_back(1);
  }
  return QPoly(std::move(g)).monic().shifted(v);
}

QPoly pow(const QPoly& p, unsigned e) {
  QPoly result(1);
  QPoly base = p;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

QPoly q_integer_poly(std::size_t n) {
  return QPoly(std::vector<Rational>(n, Rational(1)));
}

}  // namespace pawn
