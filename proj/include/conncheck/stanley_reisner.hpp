#pragma once

// Simplicial complexes and their face rings: Stanley-Reisner ideals, the
// facet/minimal-prime duality, joins, random pure complexes and the
// randomized connectedness harness for small-generator ideals.

#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "conncheck/spectrum_graphs.hpp"

namespace conncheck {

inline constexpr std::size_t kMaxComplexVertices = 24;

/// Facets stored as vertex bit masks (vertex i is bit i, 0-based), sorted.
class SimplicialComplex {
public:
  /// `facets` as 0-based vertex lists. Comparable facets are rejected; an
  /// empty facet list is the void complex.
  SimplicialComplex(std::size_t n_vertices, const std::vector<std::vector<std::size_t>>& facets)
      : n_(n_vertices) {
    if (n_ > kMaxComplexVertices)
      throw PreconditionError("complexes are limited to " + std::to_string(kMaxComplexVertices) + " vertices");
    for (const auto& f : facets) {
      std::uint32_t mask = 0;
      for (auto v : f) {
        if (v >= n_)
          throw StructuralError("facet vertex " + std::to_string(v + 1) + " exceeds vertex count " +
                                std::to_string(n_));
        mask |= std::uint32_t{1} << v;
      }
      facets_.push_back(mask);
    }
    normalize();
  }

  static SimplicialComplex from_masks(std::size_t n_vertices, std::vector<std::uint32_t> masks) {
    SimplicialComplex c(n_vertices, {});
    c.facets_ = std::move(masks);
    c.normalize();
    return c;
  }

  static SimplicialComplex simplex(std::size_t n) {
    return from_masks(n, {static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1)});
  }

  std::size_t n_vertices() const noexcept { return n_; }
  const std::vector<std::uint32_t>& facet_masks() const noexcept { return facets_; }
  bool is_void() const noexcept { return facets_.empty(); }

  std::vector<std::vector<std::size_t>> facets() const {
    std::vector<std::vector<std::size_t>> out;
    for (auto f : facets_) {
      std::vector<std::size_t> vs;
      for (std::size_t v = 0; v < n_; ++v)
        if (f >> v & 1u)
          vs.push_back(v);
      out.push_back(std::move(vs));
    }
    return out;
  }

  bool is_face(std::uint32_t s) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](std::uint32_t f) { return (s & ~f) == 0; });
  }

  /// Number of vertices of the largest facet; -1 for the void complex.
  int max_facet_size() const {
    int d = -1;
    for (auto f : facets_)
      d = std::max(d, std::popcount(f));
    return d;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      s += i ? ", {" : "{";
      bool first = true;
      for (std::size_t v = 0; v < n_; ++v)
        if (facets_[i] >> v & 1u) {
          s += (first ? "" : ",") + std::to_string(v + 1);
          first = false;
        }
      s += "}";
    }
    return s + "}";
  }

private:
  void normalize() {
    std::sort(facets_.begin(), facets_.end(), [](std::uint32_t a, std::uint32_t b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa > pb : a < b;
    });
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
    for (std::size_t i = 0; i < facets_.size(); ++i)
      for (std::size_t j = 0; j < facets_.size(); ++j)
        if (i != j && (facets_[i] & ~facets_[j]) == 0)
          throw StructuralError("facets must be pairwise incomparable");
  }

  std::size_t n_;
  std::vector<std::uint32_t> facets_;
};

inline bool is_pure(const SimplicialComplex& D) {
  const auto& f = D.facet_masks();
  return std::all_of(f.begin(), f.end(), [&](std::uint32_t m) { return std::popcount(m) == std::popcount(f.front()); });
}

inline RingPtr face_ring_ambient(const SimplicialComplex& D, const Field& field = Field::rationals()) {
  return PolyRing::indexed(D.n_vertices(), field, "x");
}

/// Generated by the minimal non-faces, as squarefree monomials.
inline Ideal sr_ideal(const SimplicialComplex& D, const RingPtr& ring) {
  if (ring->nvars() != D.n_vertices())
    throw StructuralError("face ring needs one variable per vertex");
  std::vector<Polynomial> gens;
  const std::uint64_t limit = std::uint64_t{1} << D.n_vertices();
  std::vector<std::uint32_t> order(limit);
  for (std::uint64_t s = 0; s < limit; ++s)
    order[s] = static_cast<std::uint32_t>(s);
  std::stable_sort(order.begin(), order.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  for (auto s : order) {
    if (D.is_face(s))
      continue;
    bool minimal = true;
    for (std::uint32_t rest = s; rest && minimal; rest &= rest - 1)
      minimal = D.is_face(s & ~(rest & -rest));
    if (!minimal)
      continue;
    std::vector<std::uint32_t> exps(D.n_vertices(), 0);
    for (std::size_t v = 0; v < D.n_vertices(); ++v)
      exps[v] = s >> v & 1u;
    gens.push_back(Polynomial::monomial(ring, Monomial(std::move(exps)), ring->field().one()));
  }
  return Ideal(ring, std::move(gens));
}

/// One prime per facet F, generated by the variables outside F.
inline MinimalPrimeSet facet_min_primes(const SimplicialComplex& D, const RingPtr& ring) {
  MinimalPrimeSet out{{}, sr_ideal(D, ring), Provenance::computed_monomial};
  for (auto f : D.facet_masks()) {
    std::vector<std::size_t> outside;
    for (std::size_t v = 0; v < D.n_vertices(); ++v)
      if (!(f >> v & 1u))
        outside.push_back(v);
    out.primes.push_back(
        {Ideal::variables(ring, outside), {PrimeCertificate::Kind::monomial_variable_prime, "", {}}});
  }
  sort_primes(out.primes);
  return out;
}

/// K[Δ] with its minimal primes read off the facets.
inline PresentedRing face_ring(const SimplicialComplex& D, const Field& field = Field::rationals()) {
  const auto ring = face_ring_ambient(D, field);
  auto primes = facet_min_primes(D, ring);
  PresentedRing R(primes.for_ideal);
  R.reduced = Certainty::certified;
  R.equidimensional = is_pure(D) ? Certainty::certified : Certainty::refuted;
  R.min_primes = std::move(primes);
  return R;
}

/// Γ by the combinatorial rule for pure complexes: facets adjacent when they
/// share all but one vertex. Vertex order matches facet_min_primes.
inline Graph combinatorial_gamma(const SimplicialComplex& D) {
  if (!is_pure(D))
    throw PreconditionError("combinatorial Γ needs a pure complex");
  const auto ring = face_ring_ambient(D);
  const auto primes = facet_min_primes(D, ring);
  std::vector<std::uint32_t> facet_of;
  for (const auto& p : primes.primes) {
    std::uint32_t outside = 0;
    for (const auto& g : p.ideal.generators())
      outside |= static_cast<std::uint32_t>(g.support_mask());
    facet_of.push_back(~outside & static_cast<std::uint32_t>((std::uint64_t{1} << D.n_vertices()) - 1));
  }
  const int d = D.max_facet_size();
  Graph G(facet_of.size());
  for (std::size_t i = 0; i < facet_of.size(); ++i) {
    G.set_label(i, primes.primes[i].ideal.canonical_string());
    for (std::size_t j = i + 1; j < facet_of.size(); ++j)
      if (std::popcount(facet_of[i] & facet_of[j]) == d - 1)
        G.add_edge(i, j);
  }
  return G;
}

/// Δ * Δ': vertices of Δ' are shifted past those of Δ.
inline SimplicialComplex join(const SimplicialComplex& A, const SimplicialComplex& B) {
  std::vector<std::uint32_t> masks;
  for (auto f : A.facet_masks())
    for (auto g : B.facet_masks())
      masks.push_back(f | g << A.n_vertices());
  return SimplicialComplex::from_masks(A.n_vertices() + B.n_vertices(), std::move(masks));
}

namespace detail {

/// Uniform integer in [lo, hi] from raw generator output, so sequences do not
/// depend on the standard library's distribution implementations.
inline std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  if (span == 0)
    return rng();
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do
    x = rng();
  while (x >= limit);
  return lo + x % span;
}

inline std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n)
    return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

inline std::uint32_t random_subset(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> vs(n);
  std::iota(vs.begin(), vs.end(), 0);
  for (std::size_t i = 0; i < k; ++i)
    std::swap(vs[i], vs[uniform(rng, i, n - 1)]);
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < k; ++i)
    m |= std::uint32_t{1} << vs[i];
  return m;
}

} // namespace detail

inline constexpr int kRejectionBudget = 1000;

/// Pure complex with n_facets distinct facets of facet_size vertices whose Γ
/// is connected, by rejection sampling. Deterministic per seed.
inline SimplicialComplex random_pure_connected_complex(std::size_t n_vertices, std::size_t facet_size,
                                                       std::size_t n_facets, std::uint64_t seed) {
  if (n_vertices == 0 || n_vertices > kMaxComplexVertices || facet_size == 0 || facet_size > n_vertices ||
      n_facets == 0 || n_facets > detail::binomial(n_vertices, facet_size))
    throw PreconditionError("infeasible complex parameters: n_vertices=" + std::to_string(n_vertices) +
                            " facet_size=" + std::to_string(facet_size) + " n_facets=" + std::to_string(n_facets));
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    std::vector<std::uint32_t> masks;
    while (masks.size() < n_facets) {
      const auto m = detail::random_subset(rng, n_vertices, facet_size);
      if (std::find(masks.begin(), masks.end(), m) == masks.end())
        masks.push_back(m);
    }
    auto D = SimplicialComplex::from_masks(n_vertices, std::move(masks));
    if (is_connected(build_gamma(face_ring(D))).connected())
      return D;
  }
  throw PreconditionError("rejection budget of " + std::to_string(kRejectionBudget) +
                          " attempts exhausted without a connected Γ");
}

struct HarnessInstance {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  SimplicialComplex complex{0, {}};
  std::vector<Monomial> generators; ///< generators of the ideal A, as monomials
  ConnectivityStatus status = ConnectivityStatus::connected;
};

struct HarnessReport {
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::vector<HarnessInstance> failures;    ///< shrunk reproducers
  std::vector<HarnessInstance> instances;   ///< every trial, in trial order
};

struct HarnessOptions {
  std::size_t trials = 200;
  std::size_t min_vertices = 3;
  std::size_t max_vertices = 8;
  std::size_t max_facet_size = 5;
  std::size_t max_facets = 8;
  unsigned max_generator_degree = 3;
  std::uint64_t seed = 0;
};

inline ConnectivityStatus harness_check(const SimplicialComplex& D, const std::vector<Monomial>& gens) {
  const PresentedRing R = face_ring(D);
  std::vector<Polynomial> polys;
  for (const auto& m : gens)
    polys.push_back(Polynomial::monomial(R.ambient(), m, R.ambient()->field().one()));
  return punctured_spectrum_connected(R, Ideal(R.ambient(), std::move(polys))).status;
}

namespace detail {

inline HarnessInstance sample_instance(const HarnessOptions& opt, std::size_t trial) {
  HarnessInstance inst;
  inst.trial = trial;
  inst.seed = splitmix(opt.seed ^ splitmix(trial));
  std::mt19937_64 rng(inst.seed);
  const std::size_t nv = uniform(rng, opt.min_vertices, opt.max_vertices);
  const std::size_t s = uniform(rng, 2, std::min(opt.max_facet_size, nv));
  const std::size_t nf = uniform(rng, 1, std::min<std::uint64_t>(opt.max_facets, binomial(nv, s)));
  inst.complex = random_pure_connected_complex(nv, s, nf, rng());
  const Ideal J = sr_ideal(inst.complex, face_ring_ambient(inst.complex));
  const std::size_t ngens = uniform(rng, 0, s - 2);
  for (std::size_t g = 0; g < ngens; ++g) {
    // prefer monomials that survive in the face ring
    Monomial m(std::vector<std::uint32_t>(nv, 0));
    for (int tries = 0; tries < 50; ++tries) {
      std::vector<std::uint32_t> e(nv, 0);
      const unsigned deg = static_cast<unsigned>(uniform(rng, 1, opt.max_generator_degree));
      for (unsigned k = 0; k < deg; ++k)
        ++e[uniform(rng, 0, nv - 1)];
      m = Monomial(std::move(e));
      if (!J.contains(Polynomial::monomial(J.ring(), m, J.ring()->field().one())))
        break;
    }
    inst.generators.push_back(m);
  }
  return inst;
}

/// Greedy shrink of a failing instance: drop generators, then facets, while
/// the instance stays pure, Γ-connected and failing.
inline HarnessInstance shrink(HarnessInstance inst) {
  for (std::size_t g = 0; g < inst.generators.size();) {
    auto gens = inst.generators;
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(g));
    const auto st = harness_check(inst.complex, gens);
    if (st != ConnectivityStatus::connected) {
      inst.generators = std::move(gens);
      inst.status = st;
    } else {
      ++g;
    }
  }
  for (std::size_t f = 0; f < inst.complex.facet_masks().size() && inst.complex.facet_masks().size() > 1;) {
    auto masks = inst.complex.facet_masks();
    masks.erase(masks.begin() + static_cast<std::ptrdiff_t>(f));
    auto D = SimplicialComplex::from_masks(inst.complex.n_vertices(), std::move(masks));
    if (is_connected(build_gamma(face_ring(D))).connected()) {
      const auto st = harness_check(D, inst.generators);
      if (st != ConnectivityStatus::connected) {
        inst.complex = std::move(D);
        inst.status = st;
        continue;
      }
    }
    ++f;
  }
  return inst;
}

} // namespace detail

/// Samples pure Γ-connected complexes of facet size n and ideals with at most
/// n - 2 monomial generators; every punctured spectrum must be connected.
inline HarnessReport faltings_harness(const HarnessOptions& opt) {
  if (opt.min_vertices < 2 || opt.max_vertices < opt.min_vertices || opt.max_vertices > kMaxComplexVertices ||
      opt.max_facet_size < 2 || opt.max_facets == 0)
    throw PreconditionError("infeasible harness options");
  HarnessReport report;
  report.trials = opt.trials;
  report.instances.resize(opt.trials);
  parallel_for(opt.trials, [&](std::size_t t) {
    auto inst = detail::sample_instance(opt, t);
    inst.status = harness_check(inst.complex, inst.generators);
    report.instances[t] = std::move(inst);
  });
  for (const auto& inst : report.instances) {
    if (inst.status == ConnectivityStatus::connected)
      ++report.passed;
    else
      report.failures.push_back(detail::shrink(inst));
  }
  return report;
}

} // namespace conncheck
