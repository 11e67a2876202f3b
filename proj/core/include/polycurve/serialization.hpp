#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polycurve/backelin.hpp"
#include "polycurve/puiseux.hpp"
#include "polycurve/solver.hpp"
#include "polycurve/symmetry.hpp"
#include "polycurve/tropical.hpp"

namespace polycurve::json {

using nlohmann::json;

/// [re, im]
json encode(const Complex& c);
json encode(const ComplexVector& x);
json encode(const Pretropism& p);
json encode(const PretropismCone& c);
json encode(const Orbit& o);
json encode(const ComplexPoint& p);
json encode(const SolveReport& r);
json encode(const PuiseuxSeries& s);
json encode(const CensusEntry& e);
json encode(const Census& c);
json encode(const BackelinSet& s);

/// Reads [re, im] (or a bare real number). Throws std::invalid_argument.
Complex decode_complex(const json& j);

/// Points from solver JSON ({"solutions": [{"coordinates": ...}]}), a list of
/// such objects or a list of coordinate lists. Throws std::invalid_argument.
std::vector<ComplexVector> decode_points(const json& j);

/// decode_points of a file. Throws std::runtime_error when unreadable.
std::vector<ComplexVector> read_points_file(const std::string& path);

}  // namespace polycurve::json
