#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "ffl/basis.hpp"
#include "ffl/ec_group.hpp"
#include "ffl/error.hpp"
#include "ffl/geometry.hpp"
#include "ffl/lattice.hpp"
#include "ffl/report.hpp"

namespace ffl::cli {
namespace {

enum class Format { json, csv, text };

struct RunConfig {
  std::string group_spec;
  std::string curve_spec;
  std::string input_path;
  bool json = false;
  bool csv = false;
  bool text = false;
  std::int64_t from = 4;
  std::int64_t to = 48;
  std::int64_t trials = 200;
  std::uint64_t seed = 1;
  std::size_t oracle_bound = kDefaultOracleBound;
  std::string cvp_cap;
  std::int64_t max_prime = kDefaultMaxPrime;

  Format format(Format fallback) const {
    if (json) return Format::json;
    if (csv) return Format::csv;
    if (text) return Format::text;
    return fallback;
  }
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t max_prime_from_env() {
  const char* env = std::getenv("EC_LATTICE_MAX_P");
  if (env == nullptr || *env == '\0') return kDefaultMaxPrime;
  const std::string_view s(env);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v < 5)
    throw UsageError("EC_LATTICE_MAX_P must be an integer >= 5, got '" + std::string(s) + "'");
  return v;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto parse = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
      throw UsageError("--cvp-cap: expected an integer or fraction, got '" + text + "'");
    return v;
  };
  const std::string_view t(text);
  if (slash == std::string::npos) return Rational(parse(t));
  const auto den = parse(t.substr(slash + 1));
  if (den <= 0) throw UsageError("--cvp-cap: denominator must be positive");
  return Rational(parse(t.substr(0, slash)), den);
}

void print_vectors(std::ostream& out, const std::vector<LatticeVector>& vectors) {
  for (const auto& v : vectors) out << format_vector(v) << '\n';
}

bool basis_acceptable(const BasisResult& r) {
  return r.certified || (r.kind == BasisKind::exceptional_cyclic_4 && r.report.gram_det_sq_ok &&
                         r.report.all_in_lattice && r.report.count_ok);
}

int cmd_group(const RunConfig& cfg, std::ostream& out) {
  const Lattice lattice(parse_group_spec(cfg.group_spec));
  const Json j = lattice_report(lattice);
  if (cfg.format(Format::json) == Format::json) {
    out << j.dump(2) << '\n';
  } else {
    for (const auto& [k, v] : j.items()) out << k << ": " << v.dump() << '\n';
  }
  return kExitOk;
}

int cmd_basis(const RunConfig& cfg, std::ostream& out) {
  const AbelianGroup g = parse_group_spec(cfg.group_spec);
  const BasisResult r = build_minimal_basis(g);
  switch (cfg.format(Format::json)) {
    case Format::json: out << basis_report(g, r).dump(2) << '\n'; break;
    case Format::csv: out << basis_csv(r); break;
    case Format::text:
      out << "group: " << g.spec() << "\nkind: " << to_string(r.kind)
          << "\ncertified: " << (r.certified ? "true" : "false") << '\n';
      print_vectors(out, r.kind == BasisKind::exceptional_cyclic_4 ? r.fallback : r.vectors);
      break;
  }
  return basis_acceptable(r) ? kExitOk : kExitCertificationFailure;
}

int cmd_minvec(const RunConfig& cfg, std::ostream& out) {
  const Lattice lattice(parse_group_spec(cfg.group_spec));
  const auto mv = lattice.minimal_vectors();
  if (cfg.format(Format::text) == Format::json) {
    Json j;
    j["group"] = lattice.group().spec();
    j["min_dist_sq"] = lattice.minimal_distance_sq();
    j["count"] = mv.size();
    j["span_rank"] = span_rank(mv);
    j["vectors"] = vectors_to_json(mv);
    out << j.dump(2) << '\n';
  } else {
    print_vectors(out, mv);
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const AbelianGroup g = parse_group_spec(cfg.group_spec);
  std::vector<LatticeVector> vectors;
  if (cfg.input_path.empty()) {
    const BasisResult r = build_minimal_basis(g);
    vectors = r.kind == BasisKind::exceptional_cyclic_4 ? r.fallback : r.vectors;
  } else {
    std::ifstream in(cfg.input_path);
    if (!in) throw UsageError("--input: cannot open '" + cfg.input_path + "'");
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#') continue;
      vectors.push_back(parse_vector(line));
    }
  }
  const CertificationReport rep = verify_basis(g, vectors);
  Json j;
  j["group"] = g.spec();
  j["count"] = vectors.size();
  j["all_in_lattice"] = rep.all_in_lattice;
  j["all_minimal"] = rep.all_minimal;
  j["count_ok"] = rep.count_ok;
  j["gram_det_sq_ok"] = rep.gram_det_sq_ok;
  j["gram_det_sq"] = big_to_json(rep.gram_det_sq);
  j["certified"] = rep.certified();
  if (cfg.format(Format::json) == Format::json) {
    out << j.dump(2) << '\n';
  } else {
    for (const auto& [k, v] : j.items()) out << k << ": " << v.dump() << '\n';
  }
  return rep.certified() ? kExitOk : kExitCertificationFailure;
}

int cmd_density(const RunConfig& cfg, std::ostream& out) {
  if (cfg.from < 4 || cfg.to < cfg.from) throw UsageError("--from/--to: need 4 <= from <= to");
  const auto rows = mh_window_scan(cfg.from, cfg.to);
  if (cfg.format(Format::csv) == Format::json)
    out << density_report_json(rows).dump(2) << '\n';
  else
    out << density_csv(rows);
  return kExitOk;
}

int cmd_covering(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const AbelianGroup g = parse_group_spec(cfg.group_spec);
  if (g.order() < 2) throw UsageError("--group: order must be at least 2");
  if (cfg.trials < 0) throw UsageError("--trials: must be >= 0");
  Json j;
  j["group"] = g.spec();
  j["bounds"] = covering_report_json(covering_bounds(g.order(), g.is_cyclic()));
  int status = kExitOk;
  if (cfg.trials > 0) {
    std::optional<Rational> cap;
    if (!cfg.cvp_cap.empty()) cap = parse_rational(cfg.cvp_cap);
    err << "covering: " << cfg.trials << " closest-vector searches on " << g.spec() << '\n';
    const auto s = sampled_covering_check(g, cfg.trials, cfg.seed, cap);
    j["sampled"] = sampled_covering_json(s);
    if (!s.all_within_upper || !s.deep_hole_exact || !s.max_at_least_lower)
      status = kExitCertificationFailure;
  }
  out << j.dump(2) << '\n';
  return status;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const Lattice lattice(parse_group_spec(cfg.group_spec));
  const std::int64_t min_sq = lattice.minimal_distance_sq(0);
  const auto oracle = lattice.svp_oracle(min_sq, cfg.oracle_bound);
  const auto below = lattice.svp_oracle(min_sq - 1, cfg.oracle_bound);
  const auto pairs = lattice.minimal_vectors();
  const bool agree = oracle == pairs && below.empty();
  Json j;
  j["group"] = lattice.group().spec();
  j["N"] = lattice.group().order();
  j["min_dist_sq"] = min_sq;
  j["oracle_count"] = oracle.size();
  j["pair_sum_count"] = pairs.size();
  j["below_min_empty"] = below.empty();
  j["agree"] = agree;
  out << j.dump(2) << '\n';
  return agree ? kExitOk : kExitCertificationFailure;
}

int cmd_curve(const RunConfig& cfg, std::ostream& out) {
  const Curve c = parse_curve_spec(cfg.curve_spec, cfg.max_prime);
  const auto points = curve_points(c, cfg.max_prime);
  const CurveGroup cg = group_structure(points, c);
  const BasisResult basis = build_minimal_basis(cg.structure);
  const CoveringReport cover = covering_bounds(cg.size(), cg.structure.is_cyclic());

  const double dev = std::abs(static_cast<double>(cg.size() - c.p - 1));
  const bool hasse = dev * dev <= 4.0 * static_cast<double>(c.p);
  const bool n1_n2 = cg.structure.n() % cg.structure.m() == 0;
  const bool n1_p = (c.p - 1) % cg.structure.m() == 0;

  Json j = curve_report(cg);
  j["hasse_ok"] = hasse;
  j["n1_divides_n2"] = n1_n2;
  j["n1_divides_p_minus_1"] = n1_p;
  if (cg.size() >= 2) {
    j["basis"] = basis_report(cg.structure, basis);
    j["covering"] = covering_report_json(cover);
  }
  out << j.dump(2) << '\n';
  const bool ok = hasse && n1_n2 && n1_p && (cg.size() < 2 || basis_acceptable(basis));
  return ok ? kExitOk : kExitCertificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Lattices of finite abelian groups and elliptic curves over prime fields",
               "fflattice"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub, bool with_csv, bool with_text) {
    auto* fmt = sub->add_option_group("format");
    fmt->add_flag("--json", cfg.json, "JSON output");
    if (with_csv) fmt->add_flag("--csv", cfg.csv, "CSV output");
    if (with_text) fmt->add_flag("--text", cfg.text, "plain text output");
    fmt->require_option(0, 1);
  };
  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group_spec, "group as 'MxN', e.g. 3x6")->required();
  };

  auto* curve = app.add_subcommand("curve", "curve -> group -> basis -> covering pipeline");
  curve->add_option("--curve", cfg.curve_spec, "curve as 'p,a,b' for y^2 = x^3 + ax + b")
      ->required();
  add_format(curve, false, false);

  auto* group = app.add_subcommand("group", "lattice invariants of a group");
  add_group(group);
  add_format(group, false, true);

  auto* basis = app.add_subcommand("basis", "basis of minimal vectors, certified");
  add_group(basis);
  add_format(basis, true, true);

  auto* minvec = app.add_subcommand("minvec", "all minimal vectors");
  add_group(minvec);
  add_format(minvec, false, true);

  auto* verify = app.add_subcommand("verify", "certify a list of vectors as a basis");
  add_group(verify);
  verify->add_option("--input", cfg.input_path,
                     "file with one comma-separated vector per line (default: built basis)");
  add_format(verify, false, true);

  auto* density = app.add_subcommand("density", "packing density against Minkowski-Hlawka");
  density->add_option("--from", cfg.from, "smallest group order")->capture_default_str();
  density->add_option("--to", cfg.to, "largest group order")->capture_default_str();
  add_format(density, true, false);

  auto* covering = app.add_subcommand("covering", "covering-radius bounds and sampled check");
  add_group(covering);
  covering->add_option("--trials", cfg.trials, "sampled targets including the deep hole")
      ->capture_default_str();
  covering->add_option("--seed", cfg.seed, "mt19937_64 seed")->capture_default_str();
  covering->add_option("--cvp-cap", cfg.cvp_cap, "squared search radius, integer or a/b");
  add_format(covering, false, false);

  auto* oracle = app.add_subcommand("oracle", "cross-check minimal vectors by exhaustive search");
  add_group(oracle);
  oracle->add_option("--oracle-bound", cfg.oracle_bound, "largest N the search accepts")
      ->capture_default_str();
  add_format(oracle, false, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    cfg.max_prime = max_prime_from_env();
    if (curve->parsed()) return cmd_curve(cfg, out);
    if (group->parsed()) return cmd_group(cfg, out);
    if (basis->parsed()) return cmd_basis(cfg, out);
    if (minvec->parsed()) return cmd_minvec(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (density->parsed()) return cmd_density(cfg, out);
    if (covering->parsed()) return cmd_covering(cfg, out, err);
    if (oracle->parsed()) return cmd_oracle(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::internal_inconsistency ? kExitCertificationFailure : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ffl::cli
