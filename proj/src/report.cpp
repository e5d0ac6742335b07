#include "ffl/report.hpp"

#include <cstdio>
#include <limits>
#include <sstream>

namespace ffl {
namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json point_to_json(const CurvePoint& p) {
  if (p.infinity) return "O";
  return Json::array({p.x, p.y});
}

}  // namespace

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

Json vectors_to_json(const std::vector<LatticeVector>& vectors) {
  Json out = Json::array();
  for (const auto& v : vectors) out.push_back(v);
  return out;
}

Json lattice_report(const Lattice& lattice) {
  Json j;
  j["group"] = lattice.group().spec();
  j["N"] = lattice.group().order();
  j["min_dist_sq"] = lattice.minimal_distance_sq();
  j["num_min_vecs"] = lattice.minimal_vectors().size();
  j["det_sq"] = big_to_json(lattice.determinant_sq());
  j["index"] = lattice.index_in_an();
  return j;
}

Json basis_report(const AbelianGroup& g, const BasisResult& result) {
  Json j;
  j["group"] = g.spec();
  j["kind"] = std::string(to_string(result.kind));
  j["certified"] = result.certified;
  j["vectors"] = vectors_to_json(result.vectors);
  j["gram_det_sq"] = big_to_json(result.report.gram_det_sq);
  j["checks"] = {{"all_in_lattice", result.report.all_in_lattice},
                 {"all_minimal", result.report.all_minimal},
                 {"count_ok", result.report.count_ok},
                 {"gram_det_sq_ok", result.report.gram_det_sq_ok}};
  if (result.kind == BasisKind::exceptional_cyclic_4) {
    j["fallback"] = vectors_to_json(result.fallback);
    j["span_rank"] = span_rank(Lattice(g).minimal_vectors());
  }
  return j;
}

std::string basis_csv(const BasisResult& result) {
  const auto& rows = result.kind == BasisKind::exceptional_cyclic_4 ? result.fallback : result.vectors;
  std::string out;
  for (const auto& v : rows) out += format_vector(v) + "\n";
  return out;
}

Json curve_report(const CurveGroup& cg) {
  Json j;
  j["p"] = cg.curve.p;
  j["a"] = cg.curve.a;
  j["b"] = cg.curve.b;
  j["N"] = cg.size();
  j["n1"] = cg.structure.m();
  j["n2"] = cg.structure.n();
  j["generators"] = Json::array({point_to_json(cg.g1), point_to_json(cg.g2)});
  return j;
}

Json density_report_json(const std::vector<DensityReport>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"N", r.N},
                   {"k", r.k},
                   {"log_density", r.log_density},
                   {"log_mh_bound", r.log_mh_bound},
                   {"satisfies_mh", r.satisfies_mh}});
  return out;
}

std::string density_csv(const std::vector<DensityReport>& rows) {
  std::string out = "N,log_density,log_mh_bound,satisfies_mh\n";
  for (const auto& r : rows)
    out += std::to_string(r.N) + "," + fmt_double(r.log_density) + "," +
           fmt_double(r.log_mh_bound) + "," + (r.satisfies_mh ? "true" : "false") + "\n";
  return out;
}

Json covering_report_json(const CoveringReport& r) {
  Json j;
  j["N"] = r.N;
  j["mu_A_sq"] = rational_to_string(r.mu_A_sq);
  j["lower"] = r.lower;
  j["upper_new"] = r.upper_new;
  j["upper_old"] = r.upper_old;
  j["upper_boettcher"] = r.upper_boettcher ? Json(*r.upper_boettcher) : Json(nullptr);
  return j;
}

Json sampled_covering_json(const SampledCoveringReport& r) {
  Json j;
  j["N"] = r.N;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["deep_hole_distance_sq"] = rational_to_string(r.deep_hole_distance_sq);
  j["deep_hole_exact"] = r.deep_hole_exact;
  j["max_distance_sq"] = rational_to_string(r.max_distance_sq);
  j["max_distance"] = r.max_distance;
  j["all_within_upper"] = r.all_within_upper;
  j["max_at_least_lower"] = r.max_at_least_lower;
  return j;
}

}  // namespace ffl
