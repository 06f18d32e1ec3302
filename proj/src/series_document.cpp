#include "modseries/series_document.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace modseries {

namespace {

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace

SeriesDocument SeriesDocument::from_series(const PuiseuxSeries& s) {
  SeriesDocument doc;
  doc.variable = s.variable();
  doc.ramification = s.ramification();
  doc.valuation = s.body().valuation();
  doc.precision = s.body().precision();
  for (const auto& [e, c] : s.terms()) doc.coefficients.emplace_back(e.get_str(), c.get_str());
  return doc;
}

PuiseuxSeries SeriesDocument::to_series() const {
  if (ramification < 1) throw std::invalid_argument("ramification must be >= 1");
  if (precision < valuation) throw std::invalid_argument("precision below valuation");
  std::vector<Rat> body(static_cast<std::size_t>(precision - valuation));
  Exponent last = valuation - 1;
  for (const auto& [es, cs] : coefficients) {
    const Rat e = parse_rat(es);
    const Rat c = parse_rat(cs);
    if (c == 0) throw std::invalid_argument("zero coefficients are not listed");
    const Rat k = e * ramification;
    if (k.get_den() != 1)
      throw std::invalid_argument("exponent " + es + " is off the 1/ramification lattice");
    const Exponent idx = k.get_num().get_si();
    if (idx <= last) throw std::invalid_argument("exponents must be strictly increasing");
    if (idx < valuation || idx >= precision)
      throw std::invalid_argument("exponent " + es + " outside [valuation, precision)");
    if (last < valuation && idx != valuation)
      throw std::invalid_argument("first coefficient must sit at the valuation");
    body[static_cast<std::size_t>(idx - valuation)] = c;
    last = idx;
  }
  if (coefficients.empty() && valuation != precision)
    throw std::invalid_argument("zero series must have valuation equal to precision");
  return {LaurentSeries(variable, valuation, std::move(body), precision), ramification};
}

std::string SeriesDocument::to_json() const {
  std::ostringstream out;
  out << "{\"variable\": " << quoted(variable) << ", \"ramification\": " << ramification
      << ", \"valuation\": " << valuation << ", \"precision\": " << precision
      << ", \"coefficients\": [";
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) out << ", ";
    out << "[" << quoted(coefficients[i].first) << ", " << quoted(coefficients[i].second) << "]";
  }
  out << "]}";
  return out.str();
}

SeriesDocument SeriesDocument::parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed series document: ") + e.what());
  }
  if (!j.is_object() || j.size() != 5) throw std::invalid_argument("series document must have exactly 5 fields");
  SeriesDocument doc;
  try {
    doc.variable = j.at("variable").get<std::string>();
    doc.ramification = j.at("ramification").get<long>();
    doc.valuation = j.at("valuation").get<Exponent>();
    doc.precision = j.at("precision").get<Exponent>();
    for (const auto& pair : j.at("coefficients")) {
      if (!pair.is_array() || pair.size() != 2)
        throw std::invalid_argument("coefficient entries are [exponent, value] pairs");
      doc.coefficients.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad series document field: ") + e.what());
  }
  // validates lattice, ordering and canonical numbers
  (void)doc.to_series();
  return doc;
}

}  // namespace modseries
