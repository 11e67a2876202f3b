#include <charconv>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polycurve/backelin.hpp"
#include "polycurve/puiseux.hpp"
#include "polycurve/serialization.hpp"
#include "polycurve/symmetry.hpp"
#include "polycurve/tropical.hpp"

namespace {

using namespace polycurve;
using nlohmann::json;
namespace pj = polycurve::json;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNothingFound = 2;

struct RunConfig {
  std::string input;
  bool symmetry = false;
  std::uint64_t seed = 0;
  double tol_residual = 1e-8;
  std::string format = "text";
  std::size_t threads = 1;
  std::size_t row = 0;
  std::int64_t wmax = 32;
  std::string direction;
  std::size_t n = 0;
  std::string points;
  bool cones = false;
};

PolySystem load_system(const std::string& input) {
  if (input.rfind("cyclic:", 0) == 0) {
    const std::string digits = input.substr(7);
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw std::invalid_argument("bad builtin system: " + input);
    return cyclic_system(n);
  }
  return read_system_file(input);
}

IntegerVector parse_direction(const std::string& text) {
  IntegerVector v;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::int64_t x = 0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    while (first < last && *first == ' ') ++first;
    if (first < last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, x);
    if (ec != std::errc() || ptr != last) throw std::invalid_argument("bad direction entry: '" + item + "'");
    v.push_back(x);
  }
  if (v.empty()) throw std::invalid_argument("empty direction");
  return v;
}

TrackerConfig tracker_config(const RunConfig& cfg) {
  TrackerConfig t;
  t.seed = cfg.seed;
  t.tol_residual = cfg.tol_residual;
  t.threads = cfg.threads;
  t.validate();
  return t;
}

SeriesConfig series_config(const RunConfig& cfg) {
  SeriesConfig s;
  s.tracker = tracker_config(cfg);
  s.row = cfg.row;
  s.w_max = cfg.wmax;
  return s;
}

SymmetryGroup group_for(const RunConfig& cfg, std::size_t n) {
  if (cfg.symmetry) return cyclic_dihedral_group(n);
  return SymmetryGroup(n, {}, false);
}

// Text mode renders the same document as the JSON mode, one scalar or flat
// array per line.
bool is_flat(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (e.is_object()) return false;
    if (e.is_array() && !(e.size() == 2 && e[0].is_number() && e[1].is_number())) {
      for (const auto& f : e) {
        if (f.is_structured()) return false;
      }
    }
  }
  return true;
}

void render_text(std::ostream& out, const json& j, const std::string& indent) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !is_flat(value) && !value.empty()) {
        out << indent << key << ":\n";
        render_text(out, value, indent + "  ");
      } else {
        out << indent << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (j[i].is_structured() && !is_flat(j[i])) {
        out << indent << "- [" << i << "]\n";
        render_text(out, j[i], indent + "  ");
      } else {
        out << indent << "- " << j[i].dump() << "\n";
      }
    }
  } else {
    out << indent << j.dump() << "\n";
  }
}

void emit(const RunConfig& cfg, const json& doc) {
  if (cfg.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    render_text(std::cout, doc, "");
  }
}

int cmd_cyclic(const RunConfig& cfg) {
  const PolySystem sys = cyclic_system(cfg.n);
  if (cfg.format == "json") {
    json eqs = json::array();
    for (const auto& f : sys) eqs.push_back(to_string(f));
    emit(cfg, {{"variables", sys.variables()}, {"equations", eqs}});
  } else {
    std::cout << to_string(sys);
  }
  return kOk;
}

int cmd_pretropisms(const RunConfig& cfg) {
  const PolySystem sys = load_system(cfg.input);
  const auto found = pretropisms(sys);
  json doc;
  doc["count"] = found.size();
  json list = json::array();
  for (const auto& p : found) list.push_back(pj::encode(p));
  doc["pretropisms"] = list;
  if (cfg.symmetry) {
    std::vector<IntegerVector> vs;
    for (const auto& p : found) vs.push_back(p.v);
    json orbits = json::array();
    for (const auto& o : orbit_representatives(vs, group_for(cfg, sys.variables()))) orbits.push_back(pj::encode(o));
    doc["generators"] = orbits.size();
    doc["orbits"] = orbits;
  }
  if (cfg.cones) {
    json cones = json::array();
    for (const auto& c : cone_structure(sys, found, cfg.seed)) cones.push_back(pj::encode(c));
    doc["cones"] = cones;
  }
  emit(cfg, doc);
  return found.empty() ? kNothingFound : kOk;
}

void require_pretropism(const PolySystem& sys, const IntegerVector& v) {
  if (v.size() != sys.variables()) throw std::invalid_argument("direction has wrong length");
  if (!is_pretropism(supports(sys), v)) throw std::invalid_argument("direction is not a pretropism");
}

int cmd_initforms(const RunConfig& cfg) {
  const PolySystem sys = load_system(cfg.input);
  const IntegerVector v = parse_direction(cfg.direction);
  require_pretropism(sys, v);
  const TransformedSystem ts = transform_system(sys, v, cfg.row);
  json in = json::array(), z = json::array();
  for (const auto& f : initial_form(sys, v)) in.push_back(to_string(f));
  for (const auto& f : ts.initial) z.push_back(to_string(f));
  emit(cfg, {{"v", v}, {"row", cfg.row}, {"matrix", ts.matrix.rows()}, {"initial_forms", in}, {"transformed", z}});
  return kOk;
}

int cmd_solve(const RunConfig& cfg) {
  const PolySystem sys = load_system(cfg.input);
  const SolveReport report = solve(sys, tracker_config(cfg));
  emit(cfg, pj::encode(report));
  return report.solutions.empty() ? kNothingFound : kOk;
}

int cmd_series(const RunConfig& cfg) {
  const PolySystem sys = load_system(cfg.input);
  const IntegerVector v = parse_direction(cfg.direction);
  require_pretropism(sys, v);
  const auto series = leading_terms(sys, v, series_config(cfg));
  json list = json::array();
  std::size_t curves = 0;
  for (const auto& s : series) {
    json e = pj::encode(s);
    if (s.exact) e["degree"] = monomial_curve_degree(s.v);
    if (s.exact || s.second) ++curves;
    list.push_back(std::move(e));
  }
  emit(cfg, {{"v", v}, {"row", cfg.row}, {"roots", series.size()}, {"curves", curves}, {"series", list}});
  return curves == 0 ? kNothingFound : kOk;
}

int cmd_degree(const RunConfig& cfg) {
  const PolySystem sys = load_system(cfg.input);
  const Census census = curve_census(sys, group_for(cfg, sys.variables()), series_config(cfg));
  emit(cfg, pj::encode(census));
  return census.witnesses.empty() ? kNothingFound : kOk;
}

int cmd_backelin(const RunConfig& cfg) {
  auto set = backelin_set(cfg.n);
  if (!set) {
    auto [m, ell] = decompose(cfg.n);
    if (cfg.format == "json") {
      emit(cfg, {{"n", cfg.n}, {"m", m}, {"ell", ell}, {"set", nullptr}});
    } else {
      std::cout << "no positive-dimensional Backelin set (m=1)\n";
    }
    return kNothingFound;
  }
  emit(cfg, pj::encode(*set));
  return kOk;
}

int cmd_membership(const RunConfig& cfg) {
  auto set = backelin_set(cfg.n);
  if (!set) {
    std::cerr << "no positive-dimensional Backelin set for n=" << cfg.n << " (m=1)\n";
    return kNothingFound;
  }
  json results = json::array();
  std::size_t members = 0;
  for (const auto& x : pj::read_points_file(cfg.points)) {
    auto t = membership(*set, x);
    if (t) ++members;
    results.push_back({{"member", t.has_value()}, {"parameters", t ? pj::encode(*t) : json(nullptr)}});
  }
  emit(cfg, {{"n", cfg.n}, {"members", members}, {"points", results}});
  return members == 0 ? kNothingFound : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical prevarieties, Puiseux series and cyclic n-roots"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", cfg.seed, "Random seed");
  };
  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--tol-residual", cfg.tol_residual, "Residual tolerance for accepted roots");
    sub->add_option("--threads", cfg.threads, "Path tracking threads")->check(CLI::PositiveNumber);
  };
  auto add_series = [&](CLI::App* sub) {
    sub->add_option("--row", cfg.row, "Row of the tropism in the unimodular matrix");
    sub->add_option("--wmax", cfg.wmax, "Largest second-term exponent")->check(CLI::PositiveNumber);
  };

  auto* cyclic = app.add_subcommand("cyclic", "Print the cyclic n-roots system");
  cyclic->add_option("n", cfg.n, "Dimension")->required();
  add_common(cyclic);

  auto* pre = app.add_subcommand("pretropisms", "Pretropisms from the Cayley polytope");
  pre->add_option("input", cfg.input, "System file or cyclic:n")->required();
  pre->add_flag("--symmetry", cfg.symmetry, "Reduce under the cyclic and reversal permutations");
  pre->add_flag("--cones", cfg.cones, "Also list the maximal cones");
  add_common(pre);

  auto* init = app.add_subcommand("initforms", "Initial form system along a direction");
  init->add_option("input", cfg.input, "System file or cyclic:n")->required();
  init->add_option("v", cfg.direction, "Direction, comma separated")->required();
  add_common(init);
  init->add_option("--row", cfg.row, "Row of the tropism in the unimodular matrix");

  auto* sol = app.add_subcommand("solve", "Isolated toric roots by homotopy continuation");
  sol->add_option("input", cfg.input, "System file or cyclic:n")->required();
  add_common(sol);
  add_solver(sol);

  auto* ser = app.add_subcommand("series", "Puiseux series along a pretropism");
  ser->add_option("input", cfg.input, "System file or cyclic:n")->required();
  ser->add_option("v", cfg.direction, "Direction, comma separated")->required();
  add_common(ser);
  add_solver(ser);
  add_series(ser);

  auto* deg = app.add_subcommand("degree", "Curve branches over all pretropisms and the degree tally");
  deg->add_option("input", cfg.input, "System file or cyclic:n")->required();
  deg->add_flag("--symmetry", cfg.symmetry, "Reduce under the cyclic and reversal permutations");
  add_common(deg);
  add_solver(deg);
  add_series(deg);

  auto* bk = app.add_subcommand("backelin", "Backelin set of cyclic n-roots");
  bk->add_option("n", cfg.n, "Dimension")->required()->check(CLI::PositiveNumber);
  add_common(bk);

  auto* mem = app.add_subcommand("membership", "Test points against the Backelin set");
  mem->add_option("n", cfg.n, "Dimension")->required()->check(CLI::PositiveNumber);
  mem->add_option("points", cfg.points, "Point file (solver JSON)")->required();
  add_common(mem);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  }

  try {
    if (*cyclic) return cmd_cyclic(cfg);
    if (*pre) return cmd_pretropisms(cfg);
    if (*init) return cmd_initforms(cfg);
    if (*sol) return cmd_solve(cfg);
    if (*ser) return cmd_series(cfg);
    if (*deg) return cmd_degree(cfg);
    if (*bk) return cmd_backelin(cfg);
    if (*mem) return cmd_membership(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
