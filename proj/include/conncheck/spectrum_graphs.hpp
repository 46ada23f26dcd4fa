#pragma once

// Connectedness layer: the minimal-prime graph with its height-one edges,
// bipartition disconnection search, punctured-spectrum graphs, the
// Hartshorne-Lichtenbaum test and abstract graph products.

#include <bit>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "conncheck/minimal_primes.hpp"
#include "conncheck/parallel.hpp"

namespace conncheck {

/// Simple undirected graph on vertices 0..n-1 with optional labels.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n, std::vector<char>(n, 0)), labels_(n) {
    for (std::size_t i = 0; i < n; ++i)
      labels_[i] = std::to_string(i);
  }

  std::size_t size() const noexcept { return adjacency_.size(); }

  void add_edge(std::size_t a, std::size_t b) {
    if (a >= size() || b >= size())
      throw StructuralError("edge endpoint out of range");
    if (a == b)
      throw StructuralError("self-loops are not allowed");
    adjacency_[a][b] = adjacency_[b][a] = 1;
  }

  bool has_edge(std::size_t a, std::size_t b) const { return adjacency_.at(a).at(b) != 0; }

  /// Edges (a, b) with a < b in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = a + 1; b < size(); ++b)
        if (adjacency_[a][b])
          out.emplace_back(a, b);
    return out;
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_label(std::size_t v, std::string label) { labels_.at(v) = std::move(label); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

private:
  std::vector<std::vector<char>> adjacency_;
  std::vector<std::string> labels_;
};

/// Vertices are the minimal primes of R; edge when P + Q has height one.
struct PrimeGraph {
  Graph graph;
  std::vector<CertifiedPrime> vertices;
  std::vector<std::vector<Height>> heights; ///< ht(P_i + P_j); diagonal holds ht(P_i)
  bool asserted = false;                    ///< some prime rests on an assertion
};

struct Bipartition {
  std::vector<std::size_t> side_a;
  std::vector<std::size_t> side_b;
  std::optional<Height> sum_height; ///< ht(∩ side_a + ∩ side_b), when computed
};

enum class ConnectivityStatus { connected, disconnected, empty };

inline std::string to_string(ConnectivityStatus s) {
  switch (s) {
  case ConnectivityStatus::connected: return "connected";
  case ConnectivityStatus::disconnected: return "disconnected";
  case ConnectivityStatus::empty: return "empty";
  }
  return "?";
}

struct ConnectivityReport {
  ConnectivityStatus status = ConnectivityStatus::connected;
  std::vector<std::vector<std::size_t>> components;
  std::optional<Bipartition> witness;
  std::vector<std::string> vertex_labels;
  std::vector<std::vector<Height>> heights;      ///< pairwise heights, when the graph is height based
  std::vector<std::vector<char>> sum_m_primary;  ///< pairwise m-primary flags, for punctured graphs
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool asserted = false;

  bool connected() const { return status == ConnectivityStatus::connected; }
};

/// Union-find components; a disconnected report splits off the first component.
inline ConnectivityReport is_connected(const Graph& G) {
  const std::size_t n = G.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v)
      v = parent[v] = parent[parent[v]];
    return v;
  };
  ConnectivityReport r;
  r.edges = G.edges();
  r.vertex_labels = G.labels();
  for (auto [a, b] : r.edges)
    parent[find(a)] = find(b);
  std::vector<std::size_t> slot(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = find(v);
    if (slot[root] == n) {
      slot[root] = r.components.size();
      r.components.emplace_back();
    }
    r.components[slot[root]].push_back(v);
  }
  if (n == 0) {
    r.status = ConnectivityStatus::empty;
  } else if (r.components.size() > 1) {
    r.status = ConnectivityStatus::disconnected;
    Bipartition w;
    w.side_a = r.components.front();
    for (std::size_t c = 1; c < r.components.size(); ++c)
      w.side_b.insert(w.side_b.end(), r.components[c].begin(), r.components[c].end());
    std::sort(w.side_b.begin(), w.side_b.end());
    r.witness = std::move(w);
  }
  return r;
}

inline ConnectivityReport is_connected(const PrimeGraph& G) {
  auto r = is_connected(G.graph);
  r.heights = G.heights;
  r.asserted = G.asserted;
  return r;
}

namespace detail {

inline std::vector<std::vector<Height>> pairwise_heights(const PresentedRing& R, const std::vector<CertifiedPrime>& P) {
  const std::size_t k = P.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j)
      pairs.emplace_back(i, j);
  std::vector<std::optional<Height>> slots(pairs.size());
  // the first call checks the precondition before threads start
  if (!pairs.empty())
    slots[0] = height_in_quotient(R, P[0].ideal);
  parallel_for(pairs.size(), [&](std::size_t t) {
    if (t == 0)
      return;
    auto [i, j] = pairs[t];
    slots[t] = height_in_quotient(R, i == j ? P[i].ideal : ideal_sum(P[i].ideal, P[j].ideal));
  });
  std::vector<std::vector<Height>> H(k, std::vector<Height>(k, Height::finite(0)));
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    auto [i, j] = pairs[t];
    H[i][j] = H[j][i] = *slots[t];
  }
  return H;
}

} // namespace detail

inline PrimeGraph build_gamma(const PresentedRing& R) {
  const auto& set = require_min_primes(R, "build_gamma");
  if (!holds(R.equidimensional))
    throw PreconditionError("the minimal-prime graph is only defined for equidimensional rings; equidimensionality is " +
                            to_string(R.equidimensional));
  PrimeGraph G;
  G.vertices = set.primes;
  G.asserted = set.tainted() || R.equidimensional == Certainty::asserted;
  G.heights = detail::pairwise_heights(R, G.vertices);
  G.graph = Graph(G.vertices.size());
  for (std::size_t i = 0; i < G.vertices.size(); ++i) {
    G.graph.set_label(i, G.vertices[i].ideal.canonical_string());
    for (std::size_t j = i + 1; j < G.vertices.size(); ++j)
      if (G.heights[i][j] == 1)
        G.graph.add_edge(i, j);
  }
  return G;
}

inline constexpr std::size_t kMaxPartitionPrimes = 20;

/// Search for a split of the minimal primes into two nonempty sides whose
/// cross sums all have height at least two.
inline ConnectivityReport disconnection_exists(const PresentedRing& R) {
  const auto& set = require_min_primes(R, "disconnection_exists");
  const std::size_t k = set.primes.size();
  if (k > kMaxPartitionPrimes)
    throw PreconditionError("disconnection search is capped at " + std::to_string(kMaxPartitionPrimes) +
                            " minimal primes, got " + std::to_string(k));
  if (!holds(R.equidimensional))
    throw PreconditionError("disconnection search needs heights, which need an equidimensional ring; "
                            "equidimensionality is " +
                            to_string(R.equidimensional));
  ConnectivityReport r;
  r.asserted = set.tainted() || R.equidimensional == Certainty::asserted;
  r.heights = detail::pairwise_heights(R, set.primes);
  for (const auto& p : set.primes)
    r.vertex_labels.push_back(p.ideal.canonical_string());
  // low[i]: primes j whose sum with prime i has height < 2
  std::vector<std::uint32_t> low(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && r.heights[i][j] < 2)
        low[i] |= 1u << j;
  const std::uint32_t all = k == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << k) - 1);
  // prime 0 always sits on side a; side b ranges over nonempty subsets of the rest
  for (std::uint32_t b = 2; k > 1 && b <= all; b += 2) {
    const std::uint32_t a = all & ~b;
    bool separated = true;
    for (std::uint32_t rest = a; rest && separated; rest &= rest - 1)
      separated = (low[std::countr_zero(rest)] & b) == 0;
    if (!separated)
      continue;
    Bipartition w;
    std::vector<Ideal> ia, ib;
    for (std::size_t i = 0; i < k; ++i) {
      (b >> i & 1u ? w.side_b : w.side_a).push_back(i);
      (b >> i & 1u ? ib : ia).push_back(set.primes[i].ideal);
    }
    w.sum_height = height_in_quotient(
        R, ideal_sum(intersect_all(R.ambient(), ia), intersect_all(R.ambient(), ib)));
    r.status = ConnectivityStatus::disconnected;
    r.components = {w.side_a, w.side_b};
    r.witness = std::move(w);
    return r;
  }
  r.status = k == 0 ? ConnectivityStatus::empty : ConnectivityStatus::connected;
  std::vector<std::size_t> everything(k);
  std::iota(everything.begin(), everything.end(), 0);
  if (k)
    r.components = {everything};
  return r;
}

/// Connectedness of the punctured spectrum of R/A. Vertices are the minimal
/// primes over J + A; two are adjacent when their sum is not m-primary.
/// `primes` may supply (e.g. asserted) minimal primes of J + A.
inline ConnectivityReport punctured_spectrum_connected(const PresentedRing& R, const Ideal& A,
                                                      std::optional<MinimalPrimeSet> primes = std::nullopt) {
  const Ideal JA = ideal_sum(R.defining, A);
  if (JA.is_unit())
    throw PreconditionError("the ideal is the unit ideal in the ring; there is no punctured spectrum");
  if (!primes)
    primes = minimal_primes(JA);
  else if (!(primes->for_ideal == JA))
    throw PreconditionError("supplied minimal primes belong to a different ideal than J + A");
  ConnectivityReport r;
  r.asserted = primes->tainted();
  const auto& Q = primes->primes;
  const std::size_t k = Q.size();
  for (const auto& q : Q)
    r.vertex_labels.push_back(q.ideal.canonical_string());
  if (is_m_primary(A, R)) {
    r.status = ConnectivityStatus::empty;
    return r;
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      pairs.emplace_back(i, j);
  std::vector<char> flags(pairs.size(), 0);
  parallel_for(pairs.size(), [&](std::size_t t) {
    auto [i, j] = pairs[t];
    flags[t] = static_cast<bool>(is_m_primary(ideal_sum(Q[i].ideal, Q[j].ideal), R));
  });
  Graph G(k);
  r.sum_m_primary.assign(k, std::vector<char>(k, 0));
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    auto [i, j] = pairs[t];
    r.sum_m_primary[i][j] = r.sum_m_primary[j][i] = flags[t];
    if (!flags[t])
      G.add_edge(i, j);
  }
  for (std::size_t i = 0; i < k; ++i)
    G.set_label(i, r.vertex_labels[i]);
  auto c = is_connected(G);
  r.status = c.status;
  r.components = std::move(c.components);
  r.witness = std::move(c.witness);
  r.edges = std::move(c.edges);
  return r;
}

struct HLVerdict {
  bool nonvanishing = false;
  std::optional<std::size_t> witness; ///< index of a top-dimensional prime p with I + p m-primary
  bool asserted = false;

  explicit operator bool() const { return nonvanishing; }
};

/// Top local cohomology with support in I is nonzero iff some minimal prime
/// p with dim R/p = dim R has I + p primary to m.
inline HLVerdict hl_nonvanishing(const PresentedRing& R, const Ideal& I) {
  const auto& set = require_min_primes(R, "hl_nonvanishing");
  const Ideal m = Ideal::maximal(R.ambient());
  for (const auto& g : I.generators())
    if (!m.contains(g))
      throw PreconditionError("hl_nonvanishing needs I inside the maximal ideal; " + g.to_string() + " is not");
  HLVerdict v;
  v.asserted = set.tainted();
  const int d = ring_dimension(R);
  for (std::size_t i = 0; i < set.primes.size(); ++i) {
    const Ideal& p = set.primes[i].ideal;
    if (quotient_dimension(R, p) != d)
      continue;
    if (is_m_primary(ideal_sum(p, I), R)) {
      v.nonvanishing = true;
      v.witness = i;
      return v;
    }
  }
  return v;
}

/// Cartesian product: (p,q) ~ (p',q') when one coordinate agrees and the
/// other is an edge. Vertex (p,q) has index p * |G'| + q.
inline Graph gamma_product(const Graph& G, const Graph& H) {
  const std::size_t n = G.size(), m = H.size();
  Graph P(n * m);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < m; ++q)
      P.set_label(p * m + q, "(" + G.labels()[p] + ", " + H.labels()[q] + ")");
  for (auto [a, b] : G.edges())
    for (std::size_t q = 0; q < m; ++q)
      P.add_edge(a * m + q, b * m + q);
  for (auto [a, b] : H.edges())
    for (std::size_t p = 0; p < n; ++p)
      P.add_edge(p * m + a, p * m + b);
  return P;
}

inline Graph gamma_product(const PrimeGraph& G, const PrimeGraph& H) { return gamma_product(G.graph, H.graph); }

} // namespace conncheck
