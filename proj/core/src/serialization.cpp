#include "polycurve/serialization.hpp"

#include <fstream>
#include <stdexcept>

namespace polycurve::json {

json encode(const Complex& c) { return json::array({c.real(), c.imag()}); }

json encode(const ComplexVector& x) {
  json out = json::array();
  for (const auto& c : x) out.push_back(encode(c));
  return out;
}

json encode(const Pretropism& p) { return {{"v", p.v}, {"initial_counts", p.initial_counts}}; }

json encode(const PretropismCone& c) { return {{"rays", c.rays}, {"dim", c.dim}, {"maximal", c.maximal}}; }

json encode(const Orbit& o) { return {{"representative", o.representative}, {"orbit_size", o.orbit_size}}; }

json encode(const ComplexPoint& p) {
  return {{"coordinates", encode(p.coordinates)},
          {"residual", p.residual},
          {"condition", p.condition},
          {"regular", p.regular},
          {"multiplicity", p.multiplicity}};
}

json encode(const SolveReport& r) {
  json sols = json::array();
  for (const auto& p : r.solutions) sols.push_back(encode(p));
  return {{"solutions", sols},
          {"paths", r.paths},
          {"path_failures", r.path_failures},
          {"at_infinity", r.at_infinity},
          {"off_torus", r.off_torus},
          {"residual_rejected", r.residual_rejected},
          {"singular_dropped", r.singular_dropped}};
}

json encode(const PuiseuxSeries& s) {
  json out = {{"v", s.v},
              {"row", s.row},
              {"y", encode(s.initial)},
              {"r", encode(s.leading_coefficients())},
              {"exact", s.exact}};
  if (s.second) {
    out["w"] = s.second->w;
    out["k"] = encode(s.second->k);
  } else {
    out["w"] = nullptr;
    out["k"] = nullptr;
  }
  return out;
}

json encode(const CensusEntry& e) {
  return {{"v", e.v},         {"orbit_size", e.orbit_size}, {"row", e.row},
          {"roots", e.roots}, {"exact", e.exact},           {"with_second_term", e.with_second_term},
          {"paths", e.paths}};
}

json encode(const Census& c) {
  json entries = json::array();
  for (const auto& e : c.entries) entries.push_back(encode(e));
  json witnesses = json::array();
  for (const auto& w : c.witnesses) {
    json s = encode(w.series);
    s["degree"] = w.degree;
    s["orbit_size"] = w.orbit_size;
    witnesses.push_back(std::move(s));
  }
  return {{"entries", entries}, {"witnesses", witnesses}, {"degree", degree_tally(c.witnesses)}};
}

json encode(const BackelinSet& s) {
  return {{"n", s.n},
          {"m", s.m},
          {"ell", s.ell},
          {"alpha", s.alpha},
          {"beta", s.beta},
          {"u", encode(s.u)},
          {"gamma", encode(s.gamma)},
          {"blocks", s.blocks()},
          {"exponents", exponent_table(s)}};
}

Complex decode_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw std::invalid_argument("decode_complex: expected [re, im]");
}

namespace {

ComplexVector decode_coordinates(const json& j) {
  const json& list = j.is_object() ? j.at("coordinates") : j;
  if (!list.is_array()) throw std::invalid_argument("decode_points: coordinates must be an array");
  ComplexVector x;
  for (const auto& c : list) x.push_back(decode_complex(c));
  return x;
}

}  // namespace

std::vector<ComplexVector> decode_points(const json& j) {
  try {
    const json& list = j.is_object() ? j.at("solutions") : j;
    if (!list.is_array()) throw std::invalid_argument("decode_points: expected a list of points");
    std::vector<ComplexVector> out;
    for (const auto& p : list) out.push_back(decode_coordinates(p));
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("decode_points: ") + e.what());
  }
}

std::vector<ComplexVector> read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return decode_points(j);
}

}  // namespace polycurve::json
