#pragma once

// Hand-rolled random generators for property tests. All draws go through
// Gen so that a failing case is reproducible from its seed.

#include <cstdint>
#include <random>
#include <vector>

#include "conncheck.hpp"

namespace testgen {

using namespace conncheck;

struct Gen {
  std::mt19937_64 rng;

  explicit Gen(std::uint64_t seed) : rng(seed) {}

  std::uint64_t below(std::uint64_t n) { return conncheck::detail::uniform(rng, 0, n - 1); }
  long between(long lo, long hi) {
    return lo + static_cast<long>(conncheck::detail::uniform(rng, 0, static_cast<std::uint64_t>(hi - lo)));
  }
  bool coin(unsigned percent = 50) { return below(100) < percent; }

  FieldElement coefficient(const Field& F, long bound = 5) {
    long v = 0;
    while (v == 0)
      v = between(-bound, bound);
    if (F.is_rational() && coin(25))
      return F.from_rational(mpq_class(v, between(1, 4)));
    return F.from_integer(v);
  }

  Monomial monomial(std::size_t nvars, unsigned max_degree) {
    std::vector<std::uint32_t> e(nvars, 0);
    const unsigned deg = static_cast<unsigned>(below(max_degree + 1));
    for (unsigned k = 0; k < deg; ++k)
      ++e[below(nvars)];
    return Monomial(std::move(e));
  }

  Polynomial polynomial(const RingPtr& R, std::size_t max_terms, unsigned max_degree) {
    std::vector<Term> terms;
    const std::size_t n = 1 + below(max_terms);
    for (std::size_t i = 0; i < n; ++i)
      terms.push_back({monomial(R->nvars(), max_degree), coefficient(R->field())});
    return Polynomial(R, std::move(terms));
  }

  Polynomial nonzero_polynomial(const RingPtr& R, std::size_t max_terms, unsigned max_degree) {
    for (;;)
      if (auto p = polynomial(R, max_terms, max_degree); !p.is_zero())
        return p;
  }

  std::vector<Polynomial> generators(const RingPtr& R, std::size_t max_gens, std::size_t max_terms,
                                     unsigned max_degree) {
    std::vector<Polynomial> g;
    const std::size_t n = 1 + below(max_gens);
    for (std::size_t i = 0; i < n; ++i)
      g.push_back(nonzero_polynomial(R, max_terms, max_degree));
    return g;
  }

  /// Monomial of degree >= 1 with every term in the maximal ideal.
  Polynomial monomial_in_m(const RingPtr& R, unsigned max_degree) {
    for (;;) {
      auto m = monomial(R->nvars(), max_degree);
      if (m.degree() > 0)
        return Polynomial::monomial(R, m, R->field().one());
    }
  }

  Graph graph(std::size_t n, unsigned edge_percent) {
    Graph G(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (coin(edge_percent))
          G.add_edge(a, b);
    return G;
  }

  /// Arbitrary complex on n vertices: random faces, keeping the maximal ones.
  SimplicialComplex complex(std::size_t n, std::size_t max_faces) {
    std::vector<std::uint32_t> faces;
    const std::size_t k = 1 + below(max_faces);
    for (std::size_t i = 0; i < k; ++i)
      faces.push_back(static_cast<std::uint32_t>(1 + below((std::uint64_t{1} << n) - 1)));
    std::vector<std::uint32_t> maximal;
    for (auto f : faces) {
      bool dominated = false;
      for (auto g : faces)
        if (g != f && (f & ~g) == 0)
          dominated = true;
      if (!dominated && std::find(maximal.begin(), maximal.end(), f) == maximal.end())
        maximal.push_back(f);
    }
    return SimplicialComplex::from_masks(n, std::move(maximal));
  }

  /// Pure complex with facets of size s on n vertices.
  SimplicialComplex pure_complex(std::size_t n, std::size_t s, std::size_t max_facets) {
    const std::size_t limit = std::min<std::uint64_t>(max_facets, conncheck::detail::binomial(n, s));
    const std::size_t k = 1 + below(limit);
    std::vector<std::uint32_t> masks;
    while (masks.size() < k) {
      const auto m = conncheck::detail::random_subset(rng, n, s);
      if (std::find(masks.begin(), masks.end(), m) == masks.end())
        masks.push_back(m);
    }
    return SimplicialComplex::from_masks(n, std::move(masks));
  }
};

} // namespace testgen
