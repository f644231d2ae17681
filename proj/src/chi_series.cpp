#include "wakimoto/chi_series.hpp"

#include <set>

#include <json.hpp>

#include "wakimoto/errors.hpp"

namespace wakimoto {

namespace {
const Rational kZero{0};
}

ChiSeries::ChiSeries(const Coeffs& coeffs) {
  for (const auto& [m, v] : coeffs) {
    if (!v.is_zero()) coeffs_.emplace(m, v);
  }
}

ChiSeries ChiSeries::with_residue(const Rational& chi0, const std::map<std::int64_t, Rational>& tail) {
  Coeffs c;
  c.emplace(0, chi0);
  for (const auto& [n, v] : tail) {
    if (n < 1) throw DomainError("tail index must be >= 1");
    c.emplace(-n, v);
  }
  return ChiSeries(c);
}

const Rational& ChiSeries::coeff(std::int64_t m) const {
  const auto it = coeffs_.find(m);
  return it == coeffs_.end() ? kZero : it->second;
}

ChiSeries ChiSeries::with(std::int64_t m, const Rational& value) const {
  ChiSeries out = *this;
  if (value.is_zero()) {
    out.coeffs_.erase(m);
  } else {
    out.coeffs_[m] = value;
  }
  return out;
}

std::int64_t pole_order(const ChiSeries& chi) {
  const auto& c = chi.coeffs();
  if (c.empty() || c.rbegin()->first <= 0) return 0;
  return c.rbegin()->first;
}

std::optional<std::int64_t> ell_of(const ChiSeries& chi) {
  if (pole_order(chi) != 0) return std::nullopt;
  const Rational& chi0 = chi.coeff(0);
  if (!chi0.is_integer()) return std::nullopt;
  return chi0.to_int() - 1;
}

ChiSeries parse_chi(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("coeffs")) throw ParseError("missing field 'coeffs'");
  const auto& arr = doc.at("coeffs");
  if (!arr.is_array()) throw ParseError("field 'coeffs' must be an array");

  ChiSeries::Coeffs coeffs;
  std::set<std::int64_t> seen;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "coeffs[" + std::to_string(i) + "]";
    const auto& entry = arr[i];
    if (!entry.is_object()) throw ParseError(where + " must be an object");
    if (!entry.contains("m") || !entry.at("m").is_number_integer()) {
      throw ParseError(where + ".m must be an integer");
    }
    if (!entry.contains("value") || !entry.at("value").is_string()) {
      throw ParseError(where + ".value must be a rational string");
    }
    const auto m = entry.at("m").get<std::int64_t>();
    if (!seen.insert(m).second) throw ParseError(where + ".m: duplicate index " + std::to_string(m));
    try {
      coeffs.emplace(m, Rational::parse(entry.at("value").get<std::string>()));
    } catch (const ParseError& e) {
      throw ParseError(where + ".value: " + e.what());
    }
  }
  return ChiSeries(coeffs);
}

std::string chi_to_json(const ChiSeries& chi) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, v] : chi.coeffs()) arr.push_back({{"m", m}, {"value", v.to_string()}});
  return nlohmann::json{{"coeffs", arr}}.dump();
}

}  // namespace wakimoto
