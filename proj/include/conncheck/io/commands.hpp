#pragma once

// Command dispatch behind the CLI. Every command yields a JSON report;
// exit codes: 0 computed verdict, 2 refused precondition or bad input,
// 1 internal error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "conncheck/io/report.hpp"
#include "conncheck/io/session.hpp"

namespace conncheck::io {

struct CommandRequest {
  std::string command;
  std::vector<std::string> args;
  std::string strategy = "auto";
  std::size_t trials = 200;
  std::optional<std::uint64_t> seed;
  std::size_t max_vertices = 8;
  std::string format = "json";
  bool timing = false;
};

struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"gb",          "dim",       "minprimes", "kernel", "contract",
                                              "gamma",       "connected", "disconnection", "punctured",
                                              "hl",          "s2member",  "s2local",   "faltings",
                                              "product-gamma"};
  return names;
}

inline MonomialOrder parse_order(const std::string& s) {
  if (s == "lex")
    return MonomialOrder::lex();
  if (s == "grevlex")
    return MonomialOrder::grevlex();
  if (s.rfind("elim:", 0) == 0) {
    try {
      std::size_t used = 0;
      const auto k = std::stoul(s.substr(5), &used);
      if (used == s.size() - 5)
        return MonomialOrder::elimination(k);
    } catch (const std::exception&) {
    }
  }
  throw PreconditionError("unknown monomial order '" + s + "' (use lex, grevlex or elim:K)");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw PreconditionError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

struct Result {
  json doc;
  std::optional<Graph> graph; ///< for --format dot
  int exit_code = 0;
};

inline void need_args(const CommandRequest& r, std::size_t n, const char* usage) {
  if (r.args.size() != n)
    throw PreconditionError("usage: " + r.command + " " + usage);
}

inline const Session& need_session(const Session* s, const std::string& command) {
  if (!s)
    throw PreconditionError("command '" + command + "' needs --session FILE");
  return *s;
}

/// An ideal declared in the session, re-homed into the ring R's ambient.
inline Ideal ideal_in(const Session& s, const std::string& name, const PresentedRing& R) {
  const Ideal I = s.ideal(name);
  if (!same_ring(I.ring(), R.ambient()))
    throw PreconditionError("ideal '" + name + "' does not live in the ring's ambient polynomial ring");
  return Ideal(R.ambient(), I.generators());
}

inline PrimeGraph gamma_of(const Session& s, const std::string& ring) { return build_gamma(s.presented_ring(ring)); }

inline Graph resolve_graph(const Session* s, const std::string& ref) {
  if (s && (s->find<RingDecl>(ref) || s->find<ComplexDecl>(ref)))
    return gamma_of(*s, ref).graph;
  if (std::filesystem::exists(ref))
    return import_graph(read_file(ref));
  throw PreconditionError("'" + ref + "' is neither a ring in the session nor a graph file");
}

inline Result run(const Session* session, const CommandRequest& r) {
  const std::string& c = r.command;
  Result res;
  json& d = res.doc;
  d["command"] = c;
  if (c == "gb") {
    need_args(r, 2, "<ideal> <order>");
    const auto& s = need_session(session, c);
    const Ideal I = s.ideal(r.args[0]);
    const auto order = parse_order(r.args[1]);
    const auto& gb = I.groebner(order);
    d["inputs"] = {{"ideal", r.args[0]}, {"generators", to_json(I.generators())}, {"order", order.to_string()}};
    d["basis"] = to_json(gb.generators);
    d["unit_ideal"] = gb.is_unit();
  } else if (c == "dim") {
    need_args(r, 1, "<ideal>");
    const auto& s = need_session(session, c);
    const Ideal I = s.ideal(r.args[0]);
    d["inputs"] = {{"ideal", r.args[0]}, {"generators", to_json(I.generators())}};
    const int dim = dimension(I);
    d["dimension"] = dim;
    d["unit_ideal"] = dim < 0;
  } else if (c == "minprimes") {
    need_args(r, 1, "<ideal> [--strategy auto|monomial|split|asserted]");
    const auto& s = need_session(session, c);
    const Ideal I = s.ideal(r.args[0]);
    d["inputs"] = {{"ideal", r.args[0]}, {"generators", to_json(I.generators())}, {"strategy", r.strategy}};
    MinimalPrimeSet set{{}, I, Provenance::asserted};
    try {
      if (r.strategy == "auto")
        set = minimal_primes(I);
      else if (r.strategy == "monomial")
        set = monomial_minimal_primes(I);
      else if (r.strategy == "split")
        set = split_minimal_primes(I);
      else if (r.strategy == "asserted") {
        auto a = s.asserted_primes(r.args[0]);
        if (!a)
          throw PreconditionError("no 'assert minprimes " + r.args[0] + "' in the session");
        set = std::move(*a);
      } else {
        throw PreconditionError("unknown strategy '" + r.strategy + "'");
      }
    } catch (const UndecidedComponent& u) {
      json leaves = json::array();
      for (const auto& l : u.leaves())
        leaves.push_back(to_json(l));
      json certified = json::array();
      for (const auto& p : u.certified())
        certified.push_back(to_json(p));
      d["status"] = "undecided";
      d["undecided_components"] = leaves;
      d["certified_primes"] = certified;
      d["message"] = u.what();
      res.exit_code = 2;
      return res;
    }
    d["status"] = "decided";
    d["minimal_primes"] = to_json(set);
    d["verification"] = to_json(verify_decomposition(I, set.ideals()));
    d["provenance"] = provenance_label(set.tainted());
  } else if (c == "kernel") {
    need_args(r, 1, "<map>");
    const auto& s = need_session(session, c);
    const RingMap phi = s.map(r.args[0]);
    const Ideal K = ring_map_kernel(phi);
    d["inputs"] = {{"map", r.args[0]}};
    d["kernel"] = to_json(K);
    d["dimension_of_quotient"] = dimension(K);
  } else if (c == "contract") {
    need_args(r, 2, "<ideal> <map>");
    const auto& s = need_session(session, c);
    const RingMap phi = s.map(r.args[1]);
    const Ideal Q = s.ideal(r.args[0]);
    if (!same_ring(Q.ring(), phi.target))
      throw PreconditionError("ideal '" + r.args[0] + "' does not live in the target of '" + r.args[1] + "'");
    d["inputs"] = {{"ideal", r.args[0]}, {"map", r.args[1]}, {"generators", to_json(Q.generators())}};
    d["contraction"] = to_json(contract(Ideal(phi.target, Q.generators()), phi));
  } else if (c == "gamma") {
    need_args(r, 1, "<ring>");
    const auto& s = need_session(session, c);
    const auto G = gamma_of(s, r.args[0]);
    d["inputs"] = {{"ring", r.args[0]}};
    d["gamma"] = to_json(G);
    d["provenance"] = provenance_label(G.asserted);
    res.graph = G.graph;
  } else if (c == "connected") {
    need_args(r, 1, "<ring>");
    const auto& s = need_session(session, c);
    const auto G = gamma_of(s, r.args[0]);
    d["inputs"] = {{"ring", r.args[0]}};
    d["report"] = to_json(is_connected(G));
    d["connected"] = is_connected(G).connected();
    d["provenance"] = provenance_label(G.asserted);
    res.graph = G.graph;
  } else if (c == "disconnection") {
    need_args(r, 1, "<ring>");
    const auto& s = need_session(session, c);
    const auto rep = disconnection_exists(s.presented_ring(r.args[0]));
    d["inputs"] = {{"ring", r.args[0]}};
    d["disconnection_exists"] = !rep.connected();
    d["report"] = to_json(rep);
    d["provenance"] = provenance_label(rep.asserted);
  } else if (c == "punctured") {
    need_args(r, 2, "<ring> <ideal>");
    const auto& s = need_session(session, c);
    const PresentedRing R = s.presented_ring(r.args[0]);
    const Ideal A = ideal_in(s, r.args[1], R);
    std::optional<MinimalPrimeSet> asserted;
    if (auto a = s.asserted_primes(r.args[1]); a && a->for_ideal == ideal_sum(R.defining, A))
      asserted = std::move(a);
    const auto rep = punctured_spectrum_connected(R, A, asserted);
    d["inputs"] = {{"ring", r.args[0]}, {"ideal", r.args[1]}, {"generators", to_json(A.generators())}};
    d["status"] = to_string(rep.status);
    d["report"] = to_json(rep);
    d["provenance"] = provenance_label(rep.asserted);
    Graph G(rep.vertex_labels.size());
    for (std::size_t i = 0; i < rep.vertex_labels.size(); ++i)
      G.set_label(i, rep.vertex_labels[i]);
    for (auto [a, b] : rep.edges)
      G.add_edge(a, b);
    res.graph = std::move(G);
  } else if (c == "hl") {
    need_args(r, 2, "<ring> <ideal>");
    const auto& s = need_session(session, c);
    const PresentedRing R = s.presented_ring(r.args[0]);
    const Ideal I = ideal_in(s, r.args[1], R);
    const auto v = hl_nonvanishing(R, I);
    d["inputs"] = {{"ring", r.args[0]}, {"ideal", r.args[1]}, {"generators", to_json(I.generators())}};
    d["nonvanishing"] = v.nonvanishing;
    if (v.witness)
      d["witness_prime"] = to_json(R.min_primes->primes[*v.witness].ideal);
    d["provenance"] = provenance_label(v.asserted);
  } else if (c == "s2member") {
    need_args(r, 2, "<ring> <fraction u/v>");
    const auto& s = need_session(session, c);
    auto R = std::make_shared<const PresentedRing>(s.presented_ring(r.args[0]));
    auto [u, v] = parse_fraction(r.args[1], R->ambient());
    const Fraction f(R, u, v);
    const auto cr = conductor(f);
    d["inputs"] = {{"ring", r.args[0]}, {"fraction", f.to_string()}};
    d["conductor"] = to_json(cr.ideal);
    d["conductor_height"] = to_json(cr.height);
    d["member"] = cr.member;
    d["provenance"] = provenance_label(R->equidimensional == Certainty::asserted);
  } else if (c == "s2local") {
    need_args(r, 1, "<ring>");
    const auto& s = need_session(session, c);
    const PresentedRing R = s.presented_ring(r.args[0]);
    const auto rep = s2_local_decision(R);
    d["inputs"] = {{"ring", r.args[0]}};
    d["local"] = rep.local;
    d["reduced_to_top_components"] = rep.reduced_to_top_components;
    d["examined_ring"] = to_json(rep.ring_ideal);
    d["gamma"] = to_json(rep.gamma);
    json conds = json::array();
    for (const auto& cv : rep.conditions)
      conds.push_back(
          {{"key", cv.key}, {"statement", cv.statement}, {"holds", cv.holds}, {"provenance", cv.provenance}});
    d["conditions"] = conds;
    d["provenance"] = provenance_label(rep.gamma.asserted);
  } else if (c == "faltings") {
    need_args(r, 0, "--trials N --seed S --max-vertices V");
    if (!r.seed)
      throw PreconditionError("faltings needs an explicit --seed");
    HarnessOptions opt;
    opt.trials = r.trials;
    opt.seed = *r.seed;
    opt.max_vertices = r.max_vertices;
    const auto rep = faltings_harness(opt);
    d["inputs"] = {{"trials", r.trials}, {"seed", *r.seed}, {"max_vertices", r.max_vertices}};
    d["harness"] = to_json(rep);
    d["all_connected"] = rep.failures.empty();
    d["provenance"] = "computed";
    if (!rep.failures.empty())
      res.exit_code = 1;
  } else if (c == "product-gamma") {
    need_args(r, 2, "<graph-or-ring> <graph-or-ring>");
    const Graph G = resolve_graph(session, r.args[0]);
    const Graph H = resolve_graph(session, r.args[1]);
    const Graph P = gamma_product(G, H);
    const bool pc = is_connected(P).connected();
    d["inputs"] = {{"first", r.args[0]}, {"second", r.args[1]}};
    d["product"] = to_json(P);
    d["connected"] = pc;
    d["factors_connected"] = {is_connected(G).connected(), is_connected(H).connected()};
    d["provenance"] = "computed";
    res.graph = P;
  } else {
    throw PreconditionError("unknown command '" + c + "'");
  }
  return res;
}

inline std::string render_text(const json& doc) {
  std::string out;
  for (const auto& [k, v] : doc.items()) {
    if (k == "inputs")
      continue;
    out += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  }
  return out;
}

} // namespace detail

/// Runs one command. A null session is allowed for session-free commands.
inline Outcome execute(const Session* session, const CommandRequest& request) {
  Outcome o;
  try {
    const auto t0 = std::chrono::steady_clock::now();
    auto res = detail::run(session, request);
    if (request.timing)
      res.doc["timing_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (request.format == "json") {
      o.out = res.doc.dump(2) + "\n";
    } else if (request.format == "text") {
      o.out = detail::render_text(res.doc);
    } else if (request.format == "dot") {
      if (!res.graph)
        throw PreconditionError("--format dot is only available for graph commands");
      o.out = to_dot(*res.graph);
    } else {
      throw PreconditionError("unknown format '" + request.format + "'");
    }
    o.exit_code = res.exit_code;
  } catch (const ParseError& e) {
    o.err = std::string("parse error: ") + e.what() + "\n";
    o.exit_code = 2;
  } catch (const PreconditionError& e) {
    o.err = std::string("refused: ") + e.what() + "\n";
    o.exit_code = 2;
  } catch (const std::exception& e) {
    o.err = std::string("internal error: ") + e.what() + "\n";
    o.exit_code = 1;
  }
  return o;
}

} // namespace conncheck::io
