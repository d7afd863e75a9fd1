#include "pawn/serialize.hpp"

#include <stdexcept>

namespace pawn {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed ") + what + ": " + e.what());
  } catch (const DivisionByZero&) {
    throw std::invalid_argument(std::string("malformed ") + what + ": zero denominator");
  }
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const QPoly& p) {
  Json out = Json::array();
  const auto c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) out.push_back(Json::array({i, to_string(c[i])}));
  return out;
}

Json to_json(const QRat& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const XPoly& f) {
  Json out = Json::array();
  const auto c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) out.push_back(Json::array({i, to_json(c[i])}));
  return out;
}

Json to_json(const QSeries& s) {
  Json coeffs = Json::array();
  if (s.order() == QSeries::kExact) {
    if (!s.is_zero()) coeffs.push_back(Json::array({0, to_string(s.coeff(0))}));
    return Json{{"order", nullptr}, {"coeffs", coeffs}};
  }
  const auto c = s.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) coeffs.push_back(Json::array({i, to_string(c[i])}));
  return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

Rational rational_from_json(const Json& j) {
  return guarded("rational", [&] { return parse_rational(j.get<std::string>()); });
}

QPoly qpoly_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    std::vector<Rational> c;
    long last = -1;
    for (const auto& term : j) {
      const long e = term.at(0).get<long>();
      if (e <= last) throw std::invalid_argument("polynomial exponents must ascend");
      last = e;
      c.resize(static_cast<std::size_t>(e) + 1);
      c[static_cast<std::size_t>(e)] = rational_from_json(term.at(1));
    }
    return QPoly(std::move(c));
  });
}

QRat qrat_from_json(const Json& j) {
  return guarded("rational function", [&] { return QRat(qpoly_from_json(j.at("num")), qpoly_from_json(j.at("den"))); });
}

XPoly xpoly_from_json(const Json& j) {
  return guarded("polynomial in x", [&] {
    std::vector<QRat> c;
    long last = -1;
    for (const auto& term : j) {
      const long e = term.at(0).get<long>();
      if (e <= last) throw std::invalid_argument("x exponents must ascend");
      last = e;
      c.resize(static_cast<std::size_t>(e) + 1);
      c[static_cast<std::size_t>(e)] = qrat_from_json(term.at(1));
    }
    return XPoly(std::move(c));
  });
}

QSeries qseries_from_json(const Json& j) {
  return guarded("q-series", [&] {
    if (j.at("order").is_null()) {
      const auto& c = j.at("coeffs");
      return c.empty() ? QSeries() : QSeries(rational_from_json(c.at(0).at(1)));
    }
    const auto order = j.at("order").get<std::size_t>();
    std::vector<Rational> c(order + 1);
    for (const auto& term : j.at("coeffs")) {
      const auto e = term.at(0).get<std::size_t>();
      if (e > order) throw std::invalid_argument("q-series term beyond its order");
      c[e] = rational_from_json(term.at(1));
    }
    return QSeries(std::move(c), order);
  });
}

}  // namespace pawn
