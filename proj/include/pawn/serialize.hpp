#pragma once

// JSON forms of the exact values and of tree series.
//
//   Rational  "p/r" (or "p")
//   QPoly     [[exp, "p/r"], ...], exponents ascending, zeros omitted
//   QRat      {"num": QPoly, "den": QPoly}
//   XPoly     [[exp, QRat], ...]
//   QSeries   {"order": M, "coeffs": [[exp, "p/r"], ...]}
//   series    {"series": name, "params": {...}, "order": N, "ring": tag,
//              "entries": [[encoding, coefficient], ...]}

#include <string>

#include "json.hpp"
#include "pawn/qseries.hpp"
#include "pawn/tree_series.hpp"
#include "pawn/xpoly.hpp"

namespace pawn {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const QPoly& p);
Json to_json(const QRat& f);
Json to_json(const XPoly& f);
Json to_json(const QSeries& s);

/// Throws std::invalid_argument on malformed input.
Rational rational_from_json(const Json& j);
QPoly qpoly_from_json(const Json& j);
QRat qrat_from_json(const Json& j);
XPoly xpoly_from_json(const Json& j);
QSeries qseries_from_json(const Json& j);

template <class R>
R ring_from_json(const Json& j);
template <>
inline Rational ring_from_json<Rational>(const Json& j) { return rational_from_json(j); }
template <>
inline QRat ring_from_json<QRat>(const Json& j) { return qrat_from_json(j); }
template <>
inline XPoly ring_from_json<XPoly>(const Json& j) { return xpoly_from_json(j); }
template <>
inline QSeries ring_from_json<QSeries>(const Json& j) { return qseries_from_json(j); }

template <class R>
Json series_to_json(const TreeSeries<R>& s, const std::string& name, const Json& params) {
  Json entries = Json::array();
  for (const auto& [t, v] : s.entries()) entries.push_back(Json::array({t.encoding(), to_json(v)}));
  return Json{{"series", name},
              {"params", params.is_null() ? Json::object() : params},
              {"order", s.order()},
              {"ring", RingName<R>::value},
              {"entries", std::move(entries)}};
}

template <class R>
TreeSeries<R> series_from_json(const Json& j) {
  try {
    if (j.at("ring").get<std::string>() != RingName<R>::value)
      throw std::invalid_argument("ring tag " + j.at("ring").get<std::string>() + ", expected " + RingName<R>::value);
    TreeSeries<R> s(j.at("order").get<std::size_t>());
    for (const auto& e : j.at("entries")) s.set(Tree::parse(e.at(0).get<std::string>()), ring_from_json<R>(e.at(1)));
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed series document: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string("malformed series document: ") + e.what());
  }
}

}  // namespace pawn
