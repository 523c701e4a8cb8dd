// This file is part of mirrorlat, a verification toolkit for flat toric
// mirror connections on root-system arrangement complements.
// Distributed under the MIT license; see LICENSE for details.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mirrorlat/connection.hpp"
#include "mirrorlat/hermitian.hpp"
#include "mirrorlat/parallel.hpp"
#include "mirrorlat/prng.hpp"
#include "mirrorlat/report.hpp"
#include "mirrorlat/residues.hpp"
#include "mirrorlat/schwarz.hpp"
#include "mirrorlat/tables.hpp"

using namespace mirrorlat;

namespace {

struct Options {
  std::string type;
  std::string family;
  int rank = 0;
  std::string k;
  std::string kp = "0";
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 0;
  int samples = 5;
  int node = 0;  // 1-based fundamental coweight; 0 selects all
  int which = 0;
  bool perturb = false;
};

RootSystem resolve_type(const Options& o) {
  if (!o.type.empty()) {
    bool digits = o.type.size() >= 2;
    for (std::size_t i = 1; i < o.type.size(); ++i)
      digits = digits && std::isdigit(static_cast<unsigned char>(o.type[i]));
    if (!digits)
      throw UnsupportedTypeError("bad --type '" + o.type +
                                 "' (expected a family letter followed by the rank, e.g. A2)");
    return RootSystem::build(family_from_char(o.type[0]), std::stoi(o.type.substr(1)));
  }
  if (!o.family.empty() && o.rank > 0)
    return RootSystem::build(family_from_char(o.family[0]), o.rank);
  throw UnsupportedTypeError("a type is required: pass --type A2 or --family A --rank 2");
}

Kappa resolve_kappa(const Options& o) {
  return Kappa{Rational::parse(o.k), Rational::parse(o.kp)};
}

Kappa random_kappa(SplitMix64& rng) {
  return Kappa{random_rational(rng, 6, 12), random_rational(rng, 6, 12)};
}

void write_output(const Options& o, const std::string& doc) {
  if (o.output.empty()) {
    std::cout << doc;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file '" + o.output + "'");
  f << doc;
}

void emit_json(const Options& o, const std::string& command, Json result) {
  write_output(o, envelope(command, o.seed, std::move(result)).dump(2) + "\n");
}

Json kappa_json(const Kappa& kappa) {
  Json j;
  j["k"] = kappa.k.str();
  j["kp"] = kappa.kp.str();
  return j;
}

Json spectrum_json(const Spectrum& s) {
  Json out = Json::array();
  for (const auto& line : s) {
    Json j;
    j["value"] = to_json(line.value);
    j["multiplicity"] = line.multiplicity;
    out.push_back(std::move(j));
  }
  return out;
}

int run_info(const Options& o) {
  Json result;
  if (o.type.empty() && o.family.empty()) {
    Json names = Json::array();
    for (const auto& [f, n] : supported_types())
      names.push_back(family_char(f) + std::to_string(n));
    result["supported"] = std::move(names);
    emit_json(o, "info", std::move(result));
    return 0;
  }
  const RootSystem rs = resolve_type(o);
  const Connection conn = Connection::build(rs.family, rs.rank);
  int orbits = 1;
  for (int t : rs.orbit_tag) orbits = std::max(orbits, t + 1);
  result["type"] = rs.name();
  result["rank"] = rs.rank;
  result["ambient_dim"] = rs.ambient;
  result["positive_roots"] = rs.positive.size();
  result["orbits"] = orbits;
  result["coxeter_number"] = rs.coxeter_number();
  result["gamma"] = to_json(rs.gamma());
  result["invariant_form_coefficient"] = conn.a_coeff().str();
  result["normalization_scalar"] = conn.c_kappa().str();
  emit_json(o, "info", std::move(result));
  return 0;
}

int run_flatness(const Options& o) {
  const RootSystem rs = resolve_type(o);
  const Connection conn = Connection::build(rs.family, rs.rank);
  const Rational a_scale = o.perturb ? Rational(2) : Rational(1);

  std::vector<Kappa> kappas;
  if (!o.k.empty()) {
    kappas.push_back(resolve_kappa(o));
  } else {
    SplitMix64 rng(o.seed);
    for (int s = 0; s < o.samples; ++s) kappas.push_back(random_kappa(rng));
  }

  // Per-sample certification is independent exact work; MIRRORLAT_THREADS
  // caps the worker count.  Slot-indexed results keep the output order (and
  // therefore the bytes) identical for any worker count.
  std::vector<FlatnessReport> reports(kappas.size());
  std::vector<std::exception_ptr> errors(kappas.size());
  parallel_for(kappas.size(), [&](std::size_t i) {
    try {
      reports[i] = conn.flatness_conditions_check(kappas[i], a_scale);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);

  bool all_ok = true;
  Json samples = Json::array();
  for (std::size_t i = 0; i < kappas.size(); ++i) {
    const FlatnessReport& rep = reports[i];
    Json entry = kappa_json(kappas[i]);
    entry["ok"] = rep.ok;
    Json conds = Json::array();
    for (const auto& c : rep.conditions) {
      Json jc;
      jc["name"] = c.name;
      jc["ok"] = c.ok;
      conds.push_back(std::move(jc));
    }
    entry["conditions"] = std::move(conds);
    samples.push_back(std::move(entry));
    all_ok = all_ok && rep.ok;
  }

  Json result;
  result["type"] = rs.name();
  result["a_scale"] = a_scale.str();
  result["samples"] = std::move(samples);
  result["ok"] = all_ok;
  emit_json(o, "flatness", std::move(result));
  return all_ok ? 0 : 2;
}

int run_curvature(const Options& o) {
  const RootSystem rs = resolve_type(o);
  const Connection conn = Connection::build(rs.family, rs.rank);
  SplitMix64 rng(o.seed);
  const Kappa kappa = o.k.empty() ? random_kappa(rng) : resolve_kappa(o);
  const double tol = 1e-9;
  const CurvatureReport rep = conn.curvature_check(kappa, o.samples, o.seed);
  const bool ok = rep.max_residual < tol && rep.max_projective_residual < tol;

  Json result = kappa_json(kappa);
  result["type"] = rs.name();
  result["points"] = o.samples;
  result["max_residual"] = rep.max_residual;
  result["max_projective_residual"] = rep.max_projective_residual;
  result["tolerance"] = tol;
  result["ok"] = ok;
  emit_json(o, "curvature", std::move(result));
  return ok ? 0 : 2;
}

int run_wronskian(const Options& o) {
  const RootSystem rs = resolve_type(o);
  const Connection conn = Connection::build(rs.family, rs.rank);
  SplitMix64 rng(o.seed);
  const Kappa kappa = o.k.empty() ? random_kappa(rng) : resolve_kappa(o);
  const double tol_fd = 1e-6, tol_trace = 1e-9;

  double max_fd = 0.0, max_trace = 0.0;
  Json samples = Json::array();
  for (int s = 0; s < o.samples; ++s) {
    const TorusPoint pt = conn.random_regular_point(rng);
    std::vector<Cx> xi(rs.rank);
    for (auto& c : xi) c = Cx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    const WronskianReport rep = conn.wronskian_check(kappa, pt, xi);
    Json entry;
    entry["analytic"] = to_json(rep.analytic);
    entry["finite_difference"] = to_json(rep.finite_difference);
    entry["neg_trace"] = to_json(rep.neg_trace);
    entry["rel_err_fd"] = rep.rel_err_fd;
    entry["rel_err_trace"] = rep.rel_err_trace;
    samples.push_back(std::move(entry));
    max_fd = std::max(max_fd, rep.rel_err_fd);
    max_trace = std::max(max_trace, rep.rel_err_trace);
  }
  const bool ok = max_fd < tol_fd && max_trace < tol_trace;

  Json result = kappa_json(kappa);
  result["type"] = rs.name();
  result["samples"] = std::move(samples);
  result["max_rel_err_fd"] = max_fd;
  result["max_rel_err_trace"] = max_trace;
  result["ok"] = ok;
  emit_json(o, "wronskian", std::move(result));
  return ok ? 0 : 2;
}

int run_residues(const Options& o) {
  const RootSystem rs = resolve_type(o);
  const Connection conn = Connection::build(rs.family, rs.rank);
  if (o.node < 0 || o.node > rs.rank)
    throw std::invalid_argument("--node must be between 1 and " + std::to_string(rs.rank));
  std::vector<int> nodes;
  if (o.node > 0)
    nodes.push_back(o.node);
  else
    for (int m = 1; m <= rs.rank; ++m) nodes.push_back(m);

  bool ok = true;
  Json boundary = Json::array();
  for (int m : nodes) {
    const BoundaryResidue br(conn, m - 1);
    Json entry;
    entry["node"] = m;
    entry["spectrum"] = spectrum_json(br.spectrum());
    entry["phi"] = to_json(br.phi());
    entry["has_jordan_block"] = br.has_jordan_block();
    const bool quad = br.quadratic_identity_exact();
    entry["quadratic_identity"] = quad;
    ok = ok && quad;
    boundary.push_back(std::move(entry));
  }

  int orbits = 1;
  for (int t : rs.orbit_tag) orbits = std::max(orbits, t + 1);
  Json mirror = Json::array();
  for (int tag = 0; tag < orbits; ++tag) {
    Json entry;
    entry["orbit"] = tag;
    entry["spectrum"] = spectrum_json(mirror_spectrum(rs, tag));
    mirror.push_back(std::move(entry));
  }

  Json scaling;
  scaling["origin"] = spectrum_json(scaling_end_spectrum(rs.rank, false));
  scaling["infinity"] = spectrum_json(scaling_end_spectrum(rs.rank, true));

  Json result;
  result["type"] = rs.name();
  result["boundary"] = std::move(boundary);
  result["mirror"] = std::move(mirror);
  result["scaling_ends"] = std::move(scaling);
  result["ok"] = ok;
  emit_json(o, "residues", std::move(result));
  return ok ? 0 : 2;
}

int run_gram(const Options& o) {
  const RootSystem rs = resolve_type(o);
  const Kappa kappa = resolve_kappa(o);
  const HermitianGram g = gram(rs, kappa);
  const RelationReport rel = relation_checks(g);
  const double tol = 1e-9;

  Json matrix = Json::array();
  for (std::size_t i = 0; i < g.entries.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.entries.cols(); ++j) row.push_back(to_json(g.entries(i, j)));
    matrix.push_back(std::move(row));
  }
  Json qhalf = Json::array();
  for (const Cx& q : g.q_half) qhalf.push_back(to_json(q));

  Json result = kappa_json(kappa);
  result["type"] = rs.name();
  result["matrix"] = std::move(matrix);
  result["q_half"] = std::move(qhalf);
  Json rels;
  rels["max_braid"] = rel.max_braid;
  rels["max_quadratic"] = rel.max_quadratic;
  rels["max_invariance"] = rel.max_invariance;
  result["relations"] = std::move(rels);
  result["tolerance"] = tol;
  const bool ok = rel.ok(tol);
  result["ok"] = ok;
  emit_json(o, "gram", std::move(result));
  return ok ? 0 : 2;
}

int run_signature(const Options& o) {
  const RootSystem rs = resolve_type(o);
  const Kappa kappa = resolve_kappa(o);
  const HermitianGram g = gram(rs, kappa);
  const Signature sig = gram_signature(g);

  Json result = kappa_json(kappa);
  result["type"] = rs.name();
  result["signature"] = Json::array({sig.n_plus, sig.n_minus, sig.n_zero});
  try {
    const Signature dual = dual_form_signature(g);
    result["dual_signature"] = Json::array({dual.n_plus, dual.n_minus, dual.n_zero});
  } catch (const SingularFormError&) {
    result["dual_signature"] = nullptr;  // form is degenerate
  }
  result["hyperbolic"] = in_hyperbolic_region(rs, kappa);
  emit_json(o, "signature", std::move(result));
  return 0;
}

int run_hyp_region(const Options& o) {
  const RootSystem rs = resolve_type(o);
  const Kappa kappa = resolve_kappa(o);

  Json result = kappa_json(kappa);
  result["type"] = rs.name();
  result["inside"] = in_hyperbolic_region(rs, kappa);
  if (rs.family == Family::D || rs.family == Family::E) {
    const int c = rs.family == Family::D ? rs.rank - 2 : rs.rank - 3;
    result["k_upper_bound"] = Rational(1, c).str();
  } else {
    const auto [x, y] = det_xy(rs, kappa);
    result["x"] = x.str();
    result["y"] = y.str();
  }
  emit_json(o, "hyp-region", std::move(result));
  return 0;
}

int run_schwarz(const Options& o) {
  const RootSystem rs = resolve_type(o);
  const Kappa kappa = resolve_kappa(o);
  const SchwarzReport rep = schwarz_satisfied(rs, kappa);

  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json jc;
    jc["label"] = c.label;
    jc["value"] = c.value.str();
    jc["constrained"] = c.constrained;
    jc["ok"] = c.ok;
    checks.push_back(std::move(jc));
  }
  Json result = kappa_json(kappa);
  result["type"] = rs.name();
  result["ok"] = rep.ok;
  result["hyperbolic"] = in_hyperbolic_region(rs, kappa);
  result["admissible_ball_quotient"] = ball_quotient_admissible(rs, kappa);
  result["checks"] = std::move(checks);
  emit_json(o, "schwarz", std::move(result));
  return 0;
}

int run_enumerate(const Options& o) {
  const RootSystem rs = resolve_type(o);
  const auto entries = enumerate_ball_quotients(rs.family, rs.rank);
  Json jentries = Json::array();
  for (const auto& e : entries) jentries.push_back(to_json(e));

  Json result;
  result["type"] = rs.name();
  result["count"] = entries.size();
  result["entries"] = std::move(jentries);
  emit_json(o, "enumerate", std::move(result));
  return 0;
}

int run_tables(const Options& o) {
  const DocFormat fmt = doc_format_from_string(o.format);
  write_output(o, emit_tables(o.which, fmt, o.seed));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mirrorlat: exact verification toolkit for flat toric mirror connections"};
  app.require_subcommand(1);
  Options o;

  auto add_type = [&o](CLI::App* c) {
    c->add_option("--type", o.type, "system type as letter+rank, e.g. A2, F4");
    c->add_option("--family", o.family, "family letter A..G (with --rank)");
    c->add_option("--rank", o.rank, "rank (with --family)");
  };
  auto add_kappa = [&o](CLI::App* c, bool required) {
    auto* k = c->add_option("--k", o.k, "weight of the first simple-root orbit, e.g. 1/6");
    c->add_option("--kp", o.kp, "weight of the second orbit (default 0)");
    if (required) k->required();
  };
  auto add_common = [&o](CLI::App* c) {
    c->add_option("--seed", o.seed, "64-bit seed for sampled checks (default 0)");
    c->add_option("--output", o.output, "write the document to this path instead of stdout");
  };

  CLI::App* info = app.add_subcommand("info", "describe a system or list the catalogue");
  add_type(info);
  add_common(info);

  CLI::App* flatness = app.add_subcommand("flatness", "exact flatness certification");
  add_type(flatness);
  add_kappa(flatness, false);
  add_common(flatness);
  flatness->add_option("--samples", o.samples, "number of random weight samples when --k is absent");
  flatness->add_flag("--perturb", o.perturb,
                     "rescale the invariant form by 2; the curvature identity must then fail");

  CLI::App* curvature = app.add_subcommand("curvature", "numeric curvature at regular points");
  add_type(curvature);
  add_kappa(curvature, false);
  add_common(curvature);
  curvature->add_option("--samples", o.samples, "number of regular sample points");

  CLI::App* wronskian = app.add_subcommand("wronskian", "abelian part against the closed form");
  add_type(wronskian);
  add_kappa(wronskian, false);
  add_common(wronskian);
  wronskian->add_option("--samples", o.samples, "number of sample points");

  CLI::App* residues = app.add_subcommand("residues", "exact residue spectra");
  add_type(residues);
  add_common(residues);
  residues->add_option("--node", o.node, "fundamental coweight index (1-based; default all)");

  CLI::App* gram_cmd = app.add_subcommand("gram", "monodromy Hermitian form and its relations");
  add_type(gram_cmd);
  add_kappa(gram_cmd, true);
  add_common(gram_cmd);

  CLI::App* signature = app.add_subcommand("signature", "signature of the Hermitian form");
  add_type(signature);
  add_kappa(signature, true);
  add_common(signature);

  CLI::App* hyp = app.add_subcommand("hyp-region", "exact hyperbolic-region membership");
  add_type(hyp);
  add_kappa(hyp, true);
  add_common(hyp);

  CLI::App* schwarz = app.add_subcommand("schwarz", "relative-exponent admissibility");
  add_type(schwarz);
  add_kappa(schwarz, true);
  add_common(schwarz);

  CLI::App* enumerate = app.add_subcommand("enumerate", "all admissible ball-quotient weights");
  add_type(enumerate);
  add_common(enumerate);

  CLI::App* tables = app.add_subcommand("tables", "emit the reference tables");
  add_common(tables);
  tables->add_option("--which", o.which, "section selector: 0 = all (default), 1, 2 or 3");
  tables->add_option("--format", o.format, "md, json or csv (default json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (info->parsed()) return run_info(o);
    if (flatness->parsed()) return run_flatness(o);
    if (curvature->parsed()) return run_curvature(o);
    if (wronskian->parsed()) return run_wronskian(o);
    if (residues->parsed()) return run_residues(o);
    if (gram_cmd->parsed()) return run_gram(o);
    if (signature->parsed()) return run_signature(o);
    if (hyp->parsed()) return run_hyp_region(o);
    if (schwarz->parsed()) return run_schwarz(o);
    if (enumerate->parsed()) return run_enumerate(o);
    if (tables->parsed()) return run_tables(o);
    std::cerr << "error: no command selected\n";
    return 1;
  } catch (const InconsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
