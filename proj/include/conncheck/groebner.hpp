#pragma once

// Normal forms and reduced Groebner bases (Buchberger with the
// Gebauer-Moeller pair update, normal selection strategy).

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "conncheck/polynomial.hpp"

namespace conncheck {

/// Full reduction of f by G. Always rewrites the greatest reducible
/// monomial with the first divisor in list order, so the result is
/// deterministic for a given list.
inline Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const MonomialOrder& order) {
  for (const auto& g : G)
    f.check_ring(g);
  Polynomial h = f.with_order(order);
  std::vector<Term> remainder;
  std::vector<const Polynomial*> divisors;
  std::vector<Polynomial> converted;
  converted.reserve(G.size());
  for (const auto& g : G) {
    if (g.is_zero())
      continue;
    converted.push_back(g.with_order(order));
  }
  for (const auto& g : converted)
    divisors.push_back(&g);

  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    const Polynomial* hit = nullptr;
    for (const Polynomial* g : divisors) {
      if (g->leading_monomial().divides(lt.monomial)) {
        hit = g;
        break;
      }
    }
    if (hit) {
      const Monomial m = lt.monomial / hit->leading_monomial();
      const FieldElement c = lt.coefficient / hit->leading_coefficient();
      h -= hit->mul_term(m, c);
    } else {
      remainder.push_back(h.pop_leading());
    }
  }
  return Polynomial(f.ring(), std::move(remainder), order);
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  f.check_ring(g);
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(l / f.leading_monomial(), f.leading_coefficient().inverse()) -
         g.mul_term(l / g.leading_monomial(), g.leading_coefficient().inverse());
}

/// Reduced Groebner basis: monic, inter-reduced, sorted by leading monomial
/// (descending). Unique for a given (ideal, order), so equality of bases is
/// ideal equality.
struct GroebnerBasis {
  std::vector<Polynomial> generators;
  MonomialOrder order;

  bool is_unit() const { return generators.size() == 1 && generators.front().is_constant(); }
  bool is_zero() const { return generators.empty(); }

  Polynomial reduce(const Polynomial& f) const { return normal_form(f, generators, order); }
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : generators)
      out.push_back(g.leading_monomial());
    return out;
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order == b.order && a.generators == b.generators;
  }
};

namespace detail {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

inline std::vector<Polynomial> minimal_monomial_basis(std::vector<Polynomial> monos, const MonomialOrder& order) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < monos.size() && !redundant; ++j) {
      if (i == j)
        continue;
      const auto& a = monos[j].leading_monomial();
      const auto& b = monos[i].leading_monomial();
      if (a.divides(b) && (!(a == b) || j < i))
        redundant = true;
    }
    if (!redundant)
      out.push_back(monos[i].monic().with_order(order));
  }
  return out;
}

inline void sort_basis(std::vector<Polynomial>& basis, const MonomialOrder& order) {
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return monomial_compare(a.leading_monomial(), b.leading_monomial(), order) > 0;
  });
}

} // namespace detail

inline GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order) {
  std::vector<Polynomial> input;
  for (const auto& g : gens) {
    if (!input.empty())
      input.front().check_ring(g);
    if (!g.is_zero())
      input.push_back(g.with_order(order).monic());
  }
  if (input.empty())
    return GroebnerBasis{{}, order};
  for (const auto& g : input)
    if (g.is_constant())
      return GroebnerBasis{{Polynomial::constant(g.ring(), 1).with_order(order)}, order};

  if (std::all_of(input.begin(), input.end(), [](const Polynomial& g) { return g.is_monomial(); })) {
    auto basis = detail::minimal_monomial_basis(std::move(input), order);
    detail::sort_basis(basis, order);
    return GroebnerBasis{std::move(basis), order};
  }

  std::vector<Polynomial> polys;
  std::vector<std::size_t> active;
  std::vector<detail::CriticalPair> pairs;

  auto update = [&](Polynomial h) {
    const std::size_t hi = polys.size();
    polys.push_back(std::move(h));
    const Monomial& lh = polys[hi].leading_monomial();

    // new pairs surviving the chain criterion among themselves
    std::vector<detail::CriticalPair> candidates;
    for (std::size_t g : active)
      candidates.push_back({g, hi, lcm(polys[g].leading_monomial(), lh)});
    std::vector<detail::CriticalPair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const auto& p = candidates[c];
      bool keep = coprime(polys[p.i].leading_monomial(), lh);
      if (!keep) {
        keep = true;
        for (std::size_t d = c + 1; d < candidates.size() && keep; ++d)
          if (candidates[d].lcm.divides(p.lcm))
            keep = false;
        for (std::size_t d = 0; d < kept.size() && keep; ++d)
          if (kept[d].lcm.divides(p.lcm))
            keep = false;
      }
      if (keep)
        kept.push_back(p);
    }
    // product criterion
    std::erase_if(kept, [&](const detail::CriticalPair& p) { return coprime(polys[p.i].leading_monomial(), lh); });

    // old pairs made redundant by h
    std::erase_if(pairs, [&](const detail::CriticalPair& p) {
      return lh.divides(p.lcm) && !(lcm(polys[p.i].leading_monomial(), lh) == p.lcm) &&
             !(lcm(polys[p.j].leading_monomial(), lh) == p.lcm);
    });
    pairs.insert(pairs.end(), kept.begin(), kept.end());

    std::erase_if(active, [&](std::size_t g) { return lh.divides(polys[g].leading_monomial()); });
    active.push_back(hi);
  };

  auto active_polys = [&] {
    std::vector<Polynomial> out;
    out.reserve(active.size());
    for (std::size_t g : active)
      out.push_back(polys[g]);
    return out;
  };

  for (auto& g : input) {
    Polynomial h = polys.empty() ? g : normal_form(g, active_polys(), order);
    if (h.is_zero())
      continue;
    if (h.is_constant())
      return GroebnerBasis{{Polynomial::constant(h.ring(), 1).with_order(order)}, order};
    update(h.monic());
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      if (a.lcm.degree() != b.lcm.degree())
        return a.lcm.degree() < b.lcm.degree();
      const auto c = monomial_compare(a.lcm, b.lcm, order);
      if (c != 0)
        return c < 0;
      return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
    const detail::CriticalPair pair = *best;
    pairs.erase(best);
    Polynomial h = normal_form(s_polynomial(polys[pair.i], polys[pair.j]), active_polys(), order);
    if (h.is_zero())
      continue;
    if (h.is_constant())
      return GroebnerBasis{{Polynomial::constant(h.ring(), 1).with_order(order)}, order};
    update(h.monic());
  }

  // active leading monomials are pairwise non-dividing; inter-reduce tails
  std::vector<Polynomial> basis = active_polys();
  detail::sort_basis(basis, order);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (j != i)
        others.push_back(basis[j]);
    Polynomial tail = basis[i];
    const Term lead = tail.pop_leading();
    basis[i] = Polynomial::monomial(tail.ring(), lead.monomial, lead.coefficient).with_order(order) +
               normal_form(tail, others, order);
  }
  return GroebnerBasis{std::move(basis), order};
}

} // namespace conncheck
