#pragma once

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cover_spectra/aomoto.hpp"
#include "cover_spectra/critical_cycles.hpp"
#include "cover_spectra/error.hpp"
#include "cover_spectra/gallai_edmonds.hpp"
#include "cover_spectra/multigraph.hpp"
#include "cover_spectra/polynomial.hpp"

namespace cover_spectra {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string json_string(const Json& j, const char* key, const std::string& fallback = "") {
  if (!j.contains(key)) {
    require(!fallback.empty(), ErrorKind::InputError, std::string("missing field '") + key + "'");
    return fallback;
  }
  const Json& v = j.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  fail(ErrorKind::InputError, std::string("field '") + key + "' must be a string");
}

}  // namespace detail

inline MultiGraph graph_from_json(const Json& j) {
  require(j.is_object() && j.contains("vertices") && j.at("vertices").is_array(), ErrorKind::InputError,
          "graph JSON needs a 'vertices' array");
  MultiGraph g;
  for (const auto& v : j.at("vertices")) {
    std::string id = detail::json_string(v, "id");
    require(!g.has_vertex(id), ErrorKind::InputError, "duplicate vertex id '" + id + "'");
    g.add_vertex(id, Rational::parse(detail::json_string(v, "r", "0")));
  }
  if (j.contains("edges")) {
    require(j.at("edges").is_array(), ErrorKind::InputError, "'edges' must be an array");
    for (const auto& e : j.at("edges")) {
      std::string id = e.contains("id") ? detail::json_string(e, "id") : "e" + std::to_string(g.edge_count() + 1);
      GaussianRational rho(1);
      if (e.contains("rho")) {
        const Json& r = e.at("rho");
        if (r.is_object())
          rho = GaussianRational(Rational::parse(detail::json_string(r, "re", "0")),
                                 Rational::parse(detail::json_string(r, "im", "0")));
        else
          rho = GaussianRational(Rational::parse(r.is_string() ? r.get<std::string>() : r.dump()));
      }
      require(!rho.is_zero(), ErrorKind::InputError, "edge '" + id + "' has rho = 0");
      std::string u = detail::json_string(e, "u"), v = detail::json_string(e, "v");
      require(g.has_vertex(u) && g.has_vertex(v), ErrorKind::InputError, "edge '" + id + "' names an unknown vertex");
      g.add_edge(id, g.index_of(u), g.index_of(v), rho);
    }
  }
  return g;
}

inline MultiGraph parse_graph(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorKind::InputError, std::string("malformed graph JSON: ") + ex.what());
  }
  return graph_from_json(j);
}

inline MultiGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::InputError, "cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

inline Json graph_to_json(const MultiGraph& g) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : g.vertices()) j["vertices"].push_back({{"id", v.id}, {"r", v.r.str()}});
  j["edges"] = Json::array();
  for (const auto& e : g.edges())
    j["edges"].push_back({{"id", e.id},
                          {"u", g.vertex(e.u).id},
                          {"v", g.vertex(e.v).id},
                          {"rho", {{"re", e.rho.re().str()}, {"im", e.rho.im().str()}}}});
  return j;
}

inline Json ids_json(const MultiGraph& g, VertexSet s) { return Json(g.ids_of(s)); }

inline Json polynomial_json(const Polynomial& p) {
  Json arr = Json::array();
  for (int k = 0; k <= std::max(p.degree(), 0); ++k) arr.push_back(p.coeff(static_cast<std::size_t>(k)).str());
  return arr;
}

/// {coeffs, factored?}; `factored` appears only when the factorization is complete.
inline Json polynomial_report(const Polynomial& p) {
  Json j;
  j["coeffs"] = polynomial_json(p);
  if (!p.is_zero() && p.degree() >= 1) {
    auto f = factor_low_degree(p);
    if (f.complete()) j["factored"] = f.str();
  }
  return j;
}

inline Json certificate_json(const MultiGraph& g, const AomotoCertificate& c) {
  Json comps = Json::array();
  for (VertexSet comp : c.components) comps.push_back(ids_json(g, comp));
  return {{"subset", ids_json(g, c.subset)},
          {"components", comps},
          {"frontier", ids_json(g, c.frontier)},
          {"surplus", c.surplus},
          {"refined", c.refined}};
}

inline AomotoCertificate certificate_from_json(const MultiGraph& g, const Json& j) {
  AomotoCertificate c;
  try {
    c.subset = g.mask_of(j.at("subset").get<std::vector<std::string>>());
    for (const auto& comp : j.at("components")) c.components.push_back(g.mask_of(comp.get<std::vector<std::string>>()));
    c.frontier = g.mask_of(j.at("frontier").get<std::vector<std::string>>());
    c.surplus = j.at("surplus").get<int>();
    c.refined = j.value("refined", false);
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorKind::InputError, std::string("malformed certificate JSON: ") + ex.what());
  }
  return c;
}

inline Json cycle_certificate_json(const MultiGraph& g, const CycleCertificate& c) {
  Json cycles = Json::array();
  for (const auto& cyc : c.cycles) cycles.push_back(edge_ids(g, cyc));
  return {{"cycles", cycles}, {"residual_multiplicity", c.residual_multiplicity}};
}

/// Rebuilds cycles from edge-id lists; vertex order follows the edges.
inline CycleCertificate cycle_certificate_from_json(const MultiGraph& g, const Json& j) {
  CycleCertificate c;
  try {
    for (const auto& ids : j.at("cycles")) {
      CyclePath cyc{PathKind::Cycle, {}, {}};
      for (const auto& id : ids) cyc.edges.push_back(g.edge_index_of(id.get<std::string>()));
      require(!cyc.edges.empty(), ErrorKind::InputError, "empty cycle in certificate");
      if (cyc.edges.size() == 1) {
        cyc.vertices = {g.edge(cyc.edges[0]).u};
      } else {
        const Edge& first = g.edge(cyc.edges[0]);
        const Edge& second = g.edge(cyc.edges[1]);
        std::size_t start = (first.v == second.u || first.v == second.v) ? first.u : first.v;
        std::size_t cur = start;
        for (std::size_t k = 0; k < cyc.edges.size(); ++k) {
          cyc.vertices.push_back(cur);
          cur = g.edge(cyc.edges[k]).other(cur);
        }
      }
      c.cycles.push_back(std::move(cyc));
    }
    c.residual_multiplicity = j.at("residual_multiplicity").get<int>();
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorKind::InputError, std::string("malformed cycle certificate JSON: ") + ex.what());
  }
  return c;
}

inline Json partition_json(const MultiGraph& g, const GEPartition& p) {
  Json comps = Json::array();
  for (VertexSet comp : p.critical_components) comps.push_back(ids_json(g, comp));
  Json classes = Json::object();
  for_each_member(p.host, [&](std::size_t i) { classes[g.vertex(i).id] = to_string(p.class_of(i)); });
  return {{"theta", p.theta.str()},
          {"polynomial", to_string(p.kind)},
          {"m_theta", p.m_theta},
          {"zero", ids_json(g, p.zero_set)},
          {"plus_minus", ids_json(g, p.pm_set)},
          {"infinity", ids_json(g, p.inf_set)},
          {"critical_components", comps},
          {"frontier_of_zero", ids_json(g, p.frontier_of_zero)},
          {"classes", classes}};
}

}  // namespace cover_spectra
