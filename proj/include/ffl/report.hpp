#pragma once

// Machine-readable reports: JSON for everything, CSV for density sweeps and
// basis listings.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ffl/basis.hpp"
#include "ffl/ec_group.hpp"
#include "ffl/geometry.hpp"
#include "ffl/lattice.hpp"

namespace ffl {

using Json = nlohmann::ordered_json;

/// Integer when it fits in 64 bits, decimal string otherwise.
Json big_to_json(const BigInt& v);
std::string rational_to_string(const Rational& r);

Json vectors_to_json(const std::vector<LatticeVector>& vectors);

/// {group, N, min_dist_sq, num_min_vecs, det_sq, index}
Json lattice_report(const Lattice& lattice);

/// {group, kind, certified, vectors, gram_det_sq, ...}
Json basis_report(const AbelianGroup& g, const BasisResult& result);
std::string basis_csv(const BasisResult& result);

/// {p, a, b, N, n1, n2, generators}
Json curve_report(const CurveGroup& cg);

Json density_report_json(const std::vector<DensityReport>& rows);
/// Header "N,log_density,log_mh_bound,satisfies_mh".
std::string density_csv(const std::vector<DensityReport>& rows);

Json covering_report_json(const CoveringReport& r);
Json sampled_covering_json(const SampledCoveringReport& r);

}  // namespace ffl
