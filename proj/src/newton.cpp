#include "pawn/newton.hpp"

#include <algorithm>
#include <stdexcept>

namespace pawn {

BivarIntPoly::BivarIntPoly(std::map<std::pair<unsigned, unsigned>, Rational> terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

std::vector<LatticePoint> BivarIntPoly::exponents() const {
  std::vector<LatticePoint> pts;
  pts.reserve(terms_.size());
  for (const auto& [key, c] : terms_) pts.push_back({static_cast<long>(key.first), static_cast<long>(key.second)});
  return pts;
}

QPoly BivarIntPoly::x_coefficient(unsigned j) const {
  std::vector<Rational> c;
  for (const auto& [key, v] : terms_) {
    if (key.second != j) continue;
    if (c.size() <= key.first) c.resize(key.first + 1, Rational(0));
    c[key.first] = v;
  }
  return QPoly(std::move(c));
}

XPoly BivarIntPoly::to_xpoly() const {
  unsigned top = 0;
  for (const auto& [key, v] : terms_) top = std::max(top, key.second);
  std::vector<QRat> coeffs;
  if (!terms_.empty())
    for (unsigned j = 0; j <= top; ++j) coeffs.emplace_back(x_coefficient(j));
  return XPoly(std::move(coeffs));
}

QPoly lcm(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return exact_div(a * b, gcd(a, b)).monic();
}

XPolyFraction split_numerator(const XPoly& f) {
  QPoly den(1);
  for (const auto& c : f.coeffs())
    if (!c.is_zero()) den = lcm(den, c.den());
  std::map<std::pair<unsigned, unsigned>, Rational> terms;
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
    const QRat& c = f.coeffs()[j];
    if (c.is_zero()) continue;
    const QPoly scaled = c.num() * exact_div(den, c.den());
    for (std::size_t i = 0; i < scaled.coeffs().size(); ++i)
      if (scaled.coeffs()[i] != 0)
        terms.emplace(std::make_pair(static_cast<unsigned>(i), static_cast<unsigned>(j)), scaled.coeffs()[i]);
  }
  return {BivarIntPoly(std::move(terms)), den};
}

namespace {
long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.q_deg - o.q_deg) * (b.x_deg - o.x_deg) - (a.x_deg - o.x_deg) * (b.q_deg - o.q_deg);
}
}  // namespace

NewtonPolygon::NewtonPolygon(const BivarIntPoly& p) : NewtonPolygon(p.exponents()) {}

NewtonPolygon::NewtonPolygon(std::vector<LatticePoint> pts) {
  if (pts.empty()) throw std::invalid_argument("Newton polygon of the zero polynomial");
  // Sort by (x_deg, q_deg) so the chain starts at the lowest-leftmost point.
  std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
    return a.x_deg != b.x_deg ? a.x_deg < b.x_deg : a.q_deg < b.q_deg;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) {
    vertices_ = pts;
    return;
  }
  // Andrew's monotone chain on the (x_deg, q_deg) order.
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) >= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) >= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  // The chain above runs clockwise in (q, x) axes; flip to counterclockwise
  // keeping the starting vertex.
  std::reverse(hull.begin() + 1, hull.end());
  vertices_ = std::move(hull);
}

long NewtonPolygon::min_x_deg() const {
  long m = vertices_.front().x_deg;
  for (const auto& v : vertices_) m = std::min(m, v.x_deg);
  return m;
}

long NewtonPolygon::max_x_deg() const {
  long m = vertices_.front().x_deg;
  for (const auto& v : vertices_) m = std::max(m, v.x_deg);
  return m;
}

std::optional<std::pair<Rational, Rational>> NewtonPolygon::span_at(long h) const {
  std::optional<Rational> lo, hi;
  auto take = [&](const Rational& a) {
    if (!lo || a < *lo) lo = a;
    if (!hi || a > *hi) hi = a;
  };
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % n];
    if (a.x_deg == h) take(Rational(a.q_deg));
    if ((a.x_deg < h && b.x_deg > h) || (a.x_deg > h && b.x_deg < h)) {
      Rational t(h - a.x_deg, b.x_deg - a.x_deg);
      t.canonicalize();
      take(Rational(a.q_deg) + t * (b.q_deg - a.q_deg));
    }
  }
  if (!lo) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

std::optional<Rational> NewtonPolygon::left_at(long h) const {
  auto s = span_at(h);
  if (!s) return std::nullopt;
  return s->first;
}

std::optional<Rational> NewtonPolygon::right_at(long h) const {
  auto s = span_at(h);
  if (!s) return std::nullopt;
  return s->second;
}

}  // namespace pawn
