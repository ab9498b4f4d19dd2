// cover-spectra: decide, certify and cross-check eigenvalues of graph covers.
//
// Exit codes: 0 eigenvalue (positive certificate), 3 not an eigenvalue,
// 2 input error, 4 size cap exceeded, 1 internal error.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "cover_spectra/cover_spectra.hpp"

namespace cs = cover_spectra;
using cs::Json;

namespace {

constexpr int kEigenvalue = 0;
constexpr int kInternal = 1;
constexpr int kInput = 2;
constexpr int kNotEigenvalue = 3;
constexpr int kCapExceeded = 4;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json witness_json(const cs::MultiGraph& g, const cs::TwoRegularWitness& w) {
  Json edges = Json::array();
  for (auto e : w.edges) edges.push_back(g.edge(e).id);
  return {{"support", cs::ids_json(g, w.support)}, {"edges", edges}, {"residual_multiplicity", w.residual_multiplicity}};
}

Json decision_json(const cs::MultiGraph& g, const cs::Decision& d) {
  Json j{{"theta", d.theta.str()},
         {"m_theta", d.m_theta},
         {"decision", cs::to_string(d.kind)},
         {"eigenvalue", d.is_eigenvalue()}};
  if (d.positive) j["certificate"] = cs::certificate_json(g, *d.positive);
  if (d.negative) j["certificate"] = cs::cycle_certificate_json(g, *d.negative);
  if (d.witness) j["witness"] = witness_json(g, *d.witness);
  return j;
}

Json report_json(const cs::CheckReport& r) { return {{"check", r.name}, {"passed", r.passed}, {"failures", r.failures}}; }

std::vector<int> parse_turns(const std::string& text, std::size_t edges) {
  std::vector<int> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(static_cast<int>(cs::Rational::parse(cur).numerator().get_si()));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (text.empty()) out.assign(edges, 0);
  cs::require(out.size() == edges, cs::ErrorKind::InputError, "--turns needs one entry per edge");
  return out;
}

struct Options {
  std::string graph;
  std::string theta;
  std::string polynomial = "matching";
  std::string poly_kind;
  std::string weights = "harary";
  std::string turns;
  std::string check;
  int quotient = 0;
  int ball = -1;
  std::string root;
  double tolerance = 1e-9;
  bool no_oracle = false;
  // gen
  std::string model = "erdos-renyi";
  std::size_t n = 6;
  std::uint64_t seed = 1;
  std::string probability = "1/3";
  std::size_t degree = 3;
  std::string glue_theta = "0";
  bool unweighted = false;
  bool simple = false;
  // corpus
  std::size_t count = 40;
  std::size_t min_n = 3;
  std::size_t max_n = 8;
  bool mutate = false;
};

int run_decide(const Options& o) {
  cs::MultiGraph g = cs::load_graph(o.graph);
  cs::ThetaSpec theta = cs::ThetaSpec::parse(o.theta);
  cs::PolynomialCache cache(g);
  cs::Decision d = cs::decide(cache, theta, !o.no_oracle);
  emit(decision_json(g, d));
  return d.is_eigenvalue() ? kEigenvalue : kNotEigenvalue;
}

int run_certify(const Options& o) {
  cs::MultiGraph g = cs::load_graph(o.graph);
  cs::ThetaSpec theta = cs::ThetaSpec::parse(o.theta);
  cs::PolynomialCache cache(g);
  if (!o.check.empty()) {
    std::ifstream in(o.check);
    cs::require(static_cast<bool>(in), cs::ErrorKind::InputError, "cannot open certificate '" + o.check + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
      cs::fail(cs::ErrorKind::InputError, std::string("malformed certificate JSON: ") + ex.what());
    }
    if (j.contains("subset")) {
      auto rep = cs::validate_certificate(cache, cache.all(), theta, cs::certificate_from_json(g, j));
      emit(report_json(rep));
      return rep.passed ? kEigenvalue : kInput;
    }
    auto rep = cs::validate_cycle_certificate(cache, theta, cs::cycle_certificate_from_json(g, j));
    emit(report_json(rep));
    return rep.passed ? kNotEigenvalue : kInput;
  }
  cs::Decision d = cs::decide(cache, theta, !o.no_oracle);
  if (d.positive) {
    emit(cs::certificate_json(g, *d.positive));
    return kEigenvalue;
  }
  Json j = cs::cycle_certificate_json(g, *d.negative);
  j["aomoto"] = "none";
  emit(j);
  return kNotEigenvalue;
}

int run_verify(const Options& o) {
  cs::MultiGraph g = cs::load_graph(o.graph);
  cs::ThetaSpec theta = cs::ThetaSpec::parse(o.theta);
  cs::EquivalenceVerifier v(g, o.seed);
  auto r = v.verify(theta);
  Json j{{"theta", theta.str()},
         {"c_aomoto_subset", r.c_aomoto},
         {"d_refined_subset", r.d_refined},
         {"e_matching_two_regular", r.e_matching},
         {"f_characteristic_two_regular", r.f_characteristic},
         {"h_molecular", r.h_molecular},
         {"g_probe", r.g_probe},
         {"consistent", r.consistent},
         {"seed", o.seed}};
  if (r.certificate) j["certificate"] = cs::certificate_json(g, *r.certificate);
  if (r.e_witness) j["witness"] = witness_json(g, *r.e_witness);
  if (!r.notes.empty()) j["notes"] = r.notes;
  emit(j);
  if (!r.consistent) return kInternal;
  return r.c_aomoto ? kEigenvalue : kNotEigenvalue;
}

int run_decompose(const Options& o) {
  cs::MultiGraph g = cs::load_graph(o.graph);
  cs::ThetaSpec theta = cs::ThetaSpec::parse(o.theta);
  cs::require(o.polynomial == "matching" || o.polynomial == "characteristic", cs::ErrorKind::InputError,
              "--polynomial must be matching or characteristic");
  auto kind = o.polynomial == "matching" ? cs::PolyKind::Matching : cs::PolyKind::Characteristic;
  emit(cs::partition_json(g, cs::classify(g, theta, kind)));
  return kEigenvalue;
}

int run_poly(const Options& o) {
  cs::MultiGraph g = cs::load_graph(o.graph);
  cs::Polynomial p;
  if (o.poly_kind == "matching") {
    p = cs::matching_polynomial(g);
  } else if (o.poly_kind == "char") {
    p = cs::characteristic_polynomial(g);
  } else if (o.poly_kind == "molecular") {
    cs::require(o.weights == "harary" || o.weights == "zero", cs::ErrorKind::InputError, "--weights must be harary or zero");
    p = cs::molecular_polynomial(g, o.weights == "harary" ? cs::harary_cycle_weights(g) : cs::zero_cycle_weights(g));
  } else if (o.poly_kind == "twisted") {
    p = cs::twisted_characteristic(g, parse_turns(o.turns, g.edge_count()));
  } else {
    cs::fail(cs::ErrorKind::InputError, "unknown polynomial '" + o.poly_kind + "'");
  }
  emit(cs::polynomial_report(p));
  return kEigenvalue;
}

Json projection_json(const cs::MultiGraph& cover, const cs::MultiGraph& base, const std::vector<std::size_t>& proj) {
  Json j = Json::object();
  for (std::size_t v = 0; v < proj.size(); ++v) j[cover.vertex(v).id] = base.vertex(proj[v]).id;
  return j;
}

cs::MultiGraph build_requested_cover(const Options& o, const cs::MultiGraph& g, Json& out) {
  cs::require((o.quotient > 0) != (o.ball >= 0), cs::ErrorKind::InputError, "give exactly one of --quotient or --ball");
  if (o.quotient > 0) {
    auto qc = cs::build_quotient_cover(g, o.quotient);
    out["modulus"] = o.quotient;
    out["projection"] = projection_json(qc.cover, g, qc.vertex_projection);
    return qc.cover;
  }
  cs::require(!o.root.empty(), cs::ErrorKind::InputError, "--ball needs --root");
  auto b = cs::build_cover_ball(g, g.index_of(o.root), o.ball);
  out["radius"] = o.ball;
  out["root"] = o.root;
  out["projection"] = projection_json(b.ball, g, b.vertex_projection);
  return b.ball;
}

int run_cover(const Options& o) {
  cs::MultiGraph g = cs::load_graph(o.graph);
  Json meta;
  cs::MultiGraph cover = build_requested_cover(o, g, meta);
  Json j{{"graph", cs::graph_to_json(cover)}};
  for (auto& [k, v] : meta.items()) j[k] = v;
  emit(j);
  return kEigenvalue;
}

int run_probe(const Options& o) {
  cs::MultiGraph g = cs::load_graph(o.graph);
  cs::ThetaSpec theta = cs::ThetaSpec::parse(o.theta);
  cs::MultiGraph target = g;
  Json meta;
  if (o.quotient > 0 || o.ball >= 0) target = build_requested_cover(o, g, meta);
  auto r = cs::spectral_probe(target, theta, o.tolerance);
  Json j{{"authoritative", false},
         {"dimension", r.dimension},
         {"theta", theta.str()},
         {"theta_approx", r.theta},
         {"min_distance", r.min_distance},
         {"hits_within_tolerance", r.hits},
         {"tolerance", r.tolerance},
         {"eigenvalues", r.eigenvalues}};
  if (meta.contains("modulus")) j["modulus"] = meta["modulus"];
  if (meta.contains("radius")) j["radius"] = meta["radius"];
  emit(j);
  return kEigenvalue;
}

int run_gen(const Options& o) {
  cs::InstanceSpec spec;
  spec.model = cs::parse_model(o.model);
  spec.n = o.n;
  spec.seed = o.seed;
  spec.edge_probability = cs::Rational::parse(o.probability);
  cs::require(spec.edge_probability >= cs::Rational(0) && spec.edge_probability <= cs::Rational(1),
              cs::ErrorKind::InputError, "--p must lie in [0, 1]");
  spec.degree = o.degree;
  spec.theta = cs::Rational::parse(o.glue_theta);
  spec.weighted = !o.unweighted;
  spec.multigraph = !o.simple;
  Json j = cs::graph_to_json(cs::generate_instance(spec));
  j["seed"] = o.seed;
  j["model"] = o.model;
  emit(j);
  return kEigenvalue;
}

int run_corpus(const Options& o) {
  cs::CorpusConfig config;
  config.count = o.count;
  config.seed = o.seed;
  config.min_vertices = o.min_n;
  config.max_vertices = o.max_n;
  config.mutate_lambda_sign = o.mutate;
  auto s = cs::run_corpus(config);
  Json failures = Json::array();
  for (const auto& f : s.failures)
    failures.push_back({{"seed", f.seed}, {"model", f.model}, {"vertices", f.vertices}, {"invariant", f.invariant},
                        {"message", f.message}});
  for (const auto& w : s.warnings) std::cerr << "warning: " << w << "\n";
  emit({{"seed", o.seed},
        {"instances", s.instances},
        {"checks", s.checks},
        {"passed", s.passed()},
        {"failures", failures},
        {"warnings", s.warnings}});
  return s.passed() ? kEigenvalue : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact eigenvalue certificates for universal and abelian covers of weighted multigraphs"};
  app.require_subcommand(1);
  Options o;

  auto graph_and_theta = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph, "graph JSON file")->required();
    sub->add_option("--theta", o.theta, "p/q or minpoly:c0,c1,...:lo,hi")->required();
  };

  auto* decide = app.add_subcommand("decide", "decide whether theta is a cover eigenvalue");
  graph_and_theta(decide);
  decide->add_flag("--no-oracle", o.no_oracle, "skip the brute-force recheck after each cycle removal");

  auto* certify = app.add_subcommand("certify", "emit a certificate, or check one with --check");
  graph_and_theta(certify);
  certify->add_option("--check", o.check, "certificate JSON file to validate");
  certify->add_flag("--no-oracle", o.no_oracle, "skip the brute-force recheck after each cycle removal");

  cs::Limits& caps = cs::limits();
  app.add_option("--max-vertices", caps.max_vertices, "vertex cap for decisions")->capture_default_str();
  app.add_option("--max-oracle-vertices", caps.max_oracle_vertices, "vertex cap for brute-force checks")
      ->capture_default_str();
  app.add_option("--max-frontier", caps.max_frontier, "frontier cap for Hall scans")->capture_default_str();
  app.add_option("--max-cover-vertices", caps.max_cover_vertices, "quotient cover size cap")->capture_default_str();
  app.add_option("--max-ball-vertices", caps.max_ball_vertices, "ball size cap")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "cross-check the equivalent conditions");
  graph_and_theta(verify);
  verify->add_option("--seed", o.seed, "seed for sampled phases");

  auto* decompose = app.add_subcommand("decompose", "theta Gallai-Edmonds partition");
  graph_and_theta(decompose);
  decompose->add_option("--polynomial", o.polynomial, "matching or characteristic");

  auto* poly = app.add_subcommand("poly", "print a graph polynomial");
  poly->add_option("kind", o.poly_kind, "matching, char, molecular or twisted")->required();
  poly->add_option("graph", o.graph, "graph JSON file")->required();
  poly->add_option("--weights", o.weights, "molecular cycle weights: harary or zero");
  poly->add_option("--turns", o.turns, "twisted: quarter turns per edge, comma separated");

  auto* cover = app.add_subcommand("cover", "build a quotient cover or a universal-cover ball");
  cover->add_option("graph", o.graph, "graph JSON file")->required();
  cover->add_option("--quotient", o.quotient, "modulus n of the (Z/n)^k cover");
  cover->add_option("--ball", o.ball, "radius of the non-backtracking ball");
  cover->add_option("--root", o.root, "root vertex id for --ball");

  auto* probe = app.add_subcommand("probe", "floating-point spectrum near theta (illustrative)");
  graph_and_theta(probe);
  probe->add_option("--quotient", o.quotient, "probe a quotient cover instead");
  probe->add_option("--ball", o.ball, "probe a ball instead");
  probe->add_option("--root", o.root, "root vertex id for --ball");
  probe->add_option("--tolerance", o.tolerance, "eigenvalue match tolerance");

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--model", o.model, "forest, erdos-renyi, regular or theta-critical-glue");
  gen->add_option("--n", o.n, "number of vertices");
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--p", o.probability, "edge probability p/q");
  gen->add_option("--degree", o.degree, "degree for the regular model");
  gen->add_option("--theta", o.glue_theta, "rational theta for the glue model");
  gen->add_flag("--unweighted", o.unweighted, "zero vertex weights and unit edges");
  gen->add_flag("--simple", o.simple, "no loops or parallel edges");

  auto* corpus = app.add_subcommand("corpus", "run the invariant suite on generated instances");
  corpus->add_option("--count", o.count, "number of instances");
  corpus->add_option("--seed", o.seed, "base seed");
  corpus->add_option("--min-n", o.min_n, "smallest instance size");
  corpus->add_option("--max-n", o.max_n, "largest instance size");
  corpus->add_flag("--mutate", o.mutate, "inject a wrong sign of lambda_e");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInput;
  }

  try {
    if (*decide) return run_decide(o);
    if (*certify) return run_certify(o);
    if (*verify) return run_verify(o);
    if (*decompose) return run_decompose(o);
    if (*poly) return run_poly(o);
    if (*cover) return run_cover(o);
    if (*probe) return run_probe(o);
    if (*gen) return run_gen(o);
    if (*corpus) return run_corpus(o);
  } catch (const cs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (cs::is_cap_exceeded(e.kind())) return kCapExceeded;
    switch (e.kind()) {
      case cs::ErrorKind::InputError:
      case cs::ErrorKind::UnknownVertex:
      case cs::ErrorKind::SameVertex:
      case cs::ErrorKind::NotAPath:
      case cs::ErrorKind::InvalidCertificate:
      case cs::ErrorKind::EndpointIsRoot:
      case cs::ErrorKind::PreconditionViolated:
        return kInput;
      default:
        return kInternal;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
