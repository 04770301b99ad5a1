#pragma once

// JSON forms of the exact types.  Needs nlohmann/json on the include path.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "json.hpp"
#include "ssgamma/cyclotomic.hpp"
#include "ssgamma/errors.hpp"
#include "ssgamma/matrix.hpp"
#include "ssgamma/parameter.hpp"
#include "ssgamma/rankin_selberg.hpp"
#include "ssgamma/scalar.hpp"

namespace ssgamma {

using Json = nlohmann::json;

inline mpq_class parse_rational(const std::string& s) {
  mpq_class r;
  if (s.empty() || r.set_str(s, 10) != 0) throw ParseError("not a rational: '" + s + "'");
  if (sgn(r.get_den()) == 0) throw ParseError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline Json to_json(const CyclotomicNumber& c) {
  Json coeffs = Json::array();
  for (const auto& x : c.coefficients()) coeffs.push_back(x.get_str());
  return {{"order", c.order()}, {"coeffs", coeffs}};
}

inline CyclotomicNumber cyclotomic_from_json(const Json& j) {
  try {
    std::vector<mpq_class> coeffs;
    for (const auto& x : j.at("coeffs")) coeffs.push_back(parse_rational(x.get<std::string>()));
    return CyclotomicNumber::from_coefficients(j.at("order").get<unsigned>(), std::move(coeffs));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("cyclotomic json: ") + e.what());
  }
}

inline Json to_json(const ExactScalar& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) {
    Json t = to_json(c);
    t["q_half"] = e.q_half;
    t["s_power"] = e.s_power;
    terms.push_back(std::move(t));
  }
  Json out{{"terms", terms}, {"text", s.to_string()}};
  if (s.q() != 0) out["q"] = s.q();
  return out;
}

inline ExactScalar scalar_from_json(const Json& j) {
  try {
    ExactScalar out;
    for (const auto& t : j.at("terms"))
      out += ExactScalar::monomial(cyclotomic_from_json(t), t.at("q_half").get<int>(), t.at("s_power").get<int>());
    if (j.contains("q")) out = out.with_q(j.at("q").get<unsigned long>());
    return out;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("scalar json: ") + e.what());
  }
}

inline Json to_json(const GroupMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return {{"prime", m.prime()}, {"ambient", ambient_name(m.ambient())}, {"rows", rows}};
}

inline Json to_json(const GammaResult& r) {
  return {{"computed", to_json(r.computed)},
          {"predicted", to_json(r.predicted)},
          {"matches", r.matches},
          {"metadata", r.metadata}};
}

inline GammaResult gamma_result_from_json(const Json& j) {
  try {
    GammaResult r;
    r.computed = scalar_from_json(j.at("computed"));
    r.predicted = scalar_from_json(j.at("predicted"));
    r.matches = j.at("matches").get<bool>();
    r.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
    return r;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("gamma json: ") + e.what());
  }
}

inline Json to_json(const ParamData& pd) {
  Json kappa_units = Json::object();
  for (const auto& [r, k] : pd.kappa_on_units) kappa_units[std::to_string(r)] = k;
  Json xi_units = Json::object();
  for (const auto& [r, k] : pd.xi_on_units) xi_units[std::to_string(r)] = k;
  Json parts = Json::array();
  for (const auto& c : pd.partition_checks) parts.push_back({{"parts", c.parts}, {"attains_depth", c.attains_depth}});
  return {{"p", pd.prime},
          {"ell", pd.ell},
          {"degree", pd.degree},
          {"zeta", pd.zeta},
          {"depth", pd.depth.get_str()},
          {"xi_at_uniformizer", {{"zeta", pd.zeta}, {"lambda_token_inverse", pd.xi_at_uniformizer.lambda_power == -1}}},
          {"kappa_on_units", kappa_units},
          {"xi_on_units", xi_units},
          {"kappa_rule", "(u, (-1)^(l+1) w)_p Hilbert symbol"},
          {"depth_check", {{"partitions", parts}, {"single_block_unique", pd.single_block_unique}}}};
}

inline Json to_json(const ScanReport& r) {
  Json pts = Json::array();
  for (const auto& p : r.nonvanishing) {
    Json y = Json::array();
    for (const auto& v : p.y) y.push_back(v.get_str());
    pts.push_back({{"z", p.z.get_str()}, {"y", y}, {"value", p.value}});
  }
  return {{"p", r.prime},
          {"ell", r.ell},
          {"side", side_name(r.side)},
          {"level", r.level},
          {"cutoff", r.cutoff},
          {"points", r.points},
          {"nonvanishing", pts},
          {"false_positives", r.false_positives},
          {"false_negatives", r.false_negatives},
          {"predicate_match", r.matches()}};
}

}  // namespace ssgamma
