#pragma once

// JSON views of results, DOT export of graphs, and a graph importer that
// reads both the JSON graph form and the DOT subset written here.

#include <regex>
#include <string>

#include <json.hpp>

#include "conncheck/s2_fractions.hpp"
#include "conncheck/stanley_reisner.hpp"

namespace conncheck::io {

using json = nlohmann::json;

inline json to_json(const Height& h) {
  if (h.is_infinite())
    return "+∞";
  return h.value();
}

inline json to_json(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const auto& p : ps)
    a.push_back(p.to_string());
  return a;
}

/// Canonical form: reduced grevlex basis, monic, leading monomials descending.
inline json to_json(const Ideal& I) { return to_json(I.groebner().generators); }

inline json to_json(const CertifiedPrime& p) {
  json j{{"ideal", to_json(p.ideal)}, {"certificate", to_string(p.certificate.kind)}};
  if (!p.certificate.note.empty())
    j["certificate_note"] = p.certificate.note;
  return j;
}

inline json to_json(const MinimalPrimeSet& s) {
  json primes = json::array();
  for (const auto& p : s.primes)
    primes.push_back(to_json(p));
  return {{"primes", primes}, {"provenance", to_string(s.provenance)}, {"asserted", s.tainted()}};
}

inline json to_json(const DecompositionReport& r) {
  json j{{"pass", r.pass}};
  if (!r.pass) {
    j["failed_obligation"] = r.failed_obligation;
    j["detail"] = r.detail;
  }
  return j;
}

inline json to_json(const Graph& G) {
  json edges = json::array();
  for (auto [a, b] : G.edges())
    edges.push_back({a, b});
  return {{"vertices", G.labels()}, {"edges", edges}};
}

inline const char* provenance_label(bool asserted) { return asserted ? "asserted" : "computed"; }

inline json to_json(const ConnectivityReport& r) {
  json j{{"status", to_string(r.status)},
         {"connected", r.connected()},
         {"vertices", r.vertex_labels},
         {"components", r.components},
         {"provenance", provenance_label(r.asserted)}};
  json edges = json::array();
  for (auto [a, b] : r.edges)
    edges.push_back({a, b});
  j["edges"] = edges;
  if (!r.heights.empty()) {
    json H = json::array();
    for (const auto& row : r.heights) {
      json jr = json::array();
      for (const auto& h : row)
        jr.push_back(to_json(h));
      H.push_back(jr);
    }
    j["pairwise_heights"] = H;
  }
  if (!r.sum_m_primary.empty()) {
    json M = json::array();
    for (const auto& row : r.sum_m_primary) {
      json jr = json::array();
      for (char c : row)
        jr.push_back(c != 0);
      M.push_back(jr);
    }
    j["pairwise_sum_m_primary"] = M;
  }
  if (r.witness) {
    json w{{"side_a", r.witness->side_a}, {"side_b", r.witness->side_b}};
    if (r.witness->sum_height)
      w["sum_height"] = to_json(*r.witness->sum_height);
    j["witness"] = w;
  }
  return j;
}

inline json to_json(const PrimeGraph& G) {
  json j = to_json(G.graph);
  json H = json::array();
  for (const auto& row : G.heights) {
    json jr = json::array();
    for (const auto& h : row)
      jr.push_back(to_json(h));
    H.push_back(jr);
  }
  j["pairwise_heights"] = H;
  json certs = json::array();
  for (const auto& v : G.vertices)
    certs.push_back(to_string(v.certificate.kind));
  j["certificates"] = certs;
  j["provenance"] = provenance_label(G.asserted);
  return j;
}

inline json to_json(const SimplicialComplex& D) {
  json facets = json::array();
  for (const auto& f : D.facets()) {
    json jf = json::array();
    for (auto v : f)
      jf.push_back(v + 1);
    facets.push_back(jf);
  }
  return {{"n_vertices", D.n_vertices()}, {"facets", facets}};
}

inline json to_json(const HarnessInstance& inst) {
  json gens = json::array();
  const auto ring = face_ring_ambient(inst.complex);
  for (const auto& m : inst.generators)
    gens.push_back(Polynomial::monomial(ring, m, ring->field().one()).to_string());
  return {{"trial", inst.trial},
          {"seed", inst.seed},
          {"complex", to_json(inst.complex)},
          {"ideal", gens},
          {"status", to_string(inst.status)}};
}

inline json to_json(const HarnessReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back(to_json(f));
  return {{"trials", r.trials}, {"passed", r.passed}, {"failed", r.failures.size()}, {"failures", failures}};
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

} // namespace detail

inline std::string to_dot(const Graph& G, const std::string& name = "G") {
  std::string out = "graph " + name + " {\n";
  for (std::size_t v = 0; v < G.size(); ++v)
    out += "  " + std::to_string(v) + " [label=\"" + detail::dot_escape(G.labels()[v]) + "\"];\n";
  for (auto [a, b] : G.edges())
    out += "  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n";
  return out + "}\n";
}

inline Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw PreconditionError("graph JSON needs 'vertices' and 'edges'");
  const auto& vs = j.at("vertices");
  Graph G(vs.is_number() ? vs.get<std::size_t>() : vs.size());
  if (vs.is_array())
    for (std::size_t i = 0; i < vs.size(); ++i)
      G.set_label(i, vs[i].is_string() ? vs[i].get<std::string>() : vs[i].dump());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw PreconditionError("graph edges must be pairs of vertex indices");
    G.add_edge(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return G;
}

/// Reads the JSON graph form, or the DOT subset produced by to_dot.
inline Graph import_graph(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') {
    try {
      return graph_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw PreconditionError(std::string("graph JSON: ") + e.what());
    }
  }
  static const std::regex node(R"re(^\s*(\d+)\s*\[label="((?:[^"\\]|\\.)*)"\];\s*$)re");
  static const std::regex edge(R"(^\s*(\d+)\s*--\s*(\d+);\s*$)");
  static const std::regex open(R"(^\s*(strict\s+)?graph\s+\w*\s*\{\s*$)");
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t lineno = 0;
  bool opened = false, closed = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    std::smatch m;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    if (!opened && std::regex_match(line, open)) {
      opened = true;
    } else if (opened && !closed && std::regex_match(line, m, node)) {
      const auto v = std::stoul(m[1]);
      if (v != labels.size())
        throw ParseError("DOT vertices must be numbered 0, 1, 2, ... in order", static_cast<int>(lineno), 1);
      std::string label;
      const std::string raw = m[2];
      for (std::size_t i = 0; i < raw.size(); ++i)
        label += raw[i] == '\\' && i + 1 < raw.size() ? raw[++i] : raw[i];
      labels.push_back(label);
    } else if (opened && !closed && std::regex_match(line, m, edge)) {
      edges.emplace_back(std::stoul(m[1]), std::stoul(m[2]));
    } else if (opened && !closed && line.find_first_not_of(" \t\r") == line.find('}')) {
      closed = true;
    } else {
      throw ParseError("unsupported DOT line", static_cast<int>(lineno), 1);
    }
  }
  if (!opened || !closed)
    throw ParseError("DOT graph is not enclosed in 'graph NAME { ... }'", static_cast<int>(lineno), 1);
  Graph G(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    G.set_label(i, labels[i]);
  for (auto [a, b] : edges)
    G.add_edge(a, b);
  return G;
}

} // namespace conncheck::io
