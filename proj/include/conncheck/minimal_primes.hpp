#pragma once

// Minimal primes: exact for monomial ideals, factor-and-split with primality
// certificates for general ideals, and verification of asserted lists.

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "conncheck/factor.hpp"
#include "conncheck/presented_ring.hpp"

namespace conncheck {

/// Split strategy hit a component it can neither factor nor certify prime.
class UndecidedComponent : public PreconditionError {
public:
  UndecidedComponent(std::vector<Ideal> leaves, std::vector<CertifiedPrime> certified)
      : PreconditionError(describe(leaves)), leaves_(std::move(leaves)), certified_(std::move(certified)) {}

  const std::vector<Ideal>& leaves() const noexcept { return leaves_; }
  const std::vector<CertifiedPrime>& certified() const noexcept { return certified_; }

private:
  static std::string describe(const std::vector<Ideal>& leaves) {
    std::string s = "undecided component(s):";
    for (const auto& l : leaves)
      s += " " + l.canonical_string();
    return s + "; assert the minimal primes instead";
  }

  std::vector<Ideal> leaves_;
  std::vector<CertifiedPrime> certified_;
};

/// Minimal variable sets meeting every support (bit masks), i.e. the
/// minimal vertex covers of the support hypergraph.
inline std::vector<std::uint64_t> minimal_covers(std::vector<std::uint64_t> supports) {
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  std::vector<std::uint64_t> found;
  std::function<void(std::uint64_t)> branch = [&](std::uint64_t chosen) {
    for (auto f : found)
      if ((f & ~chosen) == 0)
        return;
    for (auto s : supports) {
      if (s & chosen)
        continue;
      for (std::uint64_t rest = s; rest; rest &= rest - 1)
        branch(chosen | (rest & -rest));
      return;
    }
    std::erase_if(found, [&](std::uint64_t f) { return (chosen & ~f) == 0; });
    found.push_back(chosen);
  };
  for (auto s : supports)
    if (s == 0)
      return {}; // unit ideal: no primes
  branch(0);
  std::sort(found.begin(), found.end());
  return found;
}

inline void sort_primes(std::vector<CertifiedPrime>& primes) {
  std::stable_sort(primes.begin(), primes.end(),
                   [](const CertifiedPrime& a, const CertifiedPrime& b) { return canonical_less(a.ideal, b.ideal); });
}

inline MinimalPrimeSet monomial_minimal_primes(const Ideal& I) {
  const auto& ring = I.ring();
  if (ring->nvars() > 64)
    throw PreconditionError("monomial minimal primes support at most 64 variables");
  std::vector<std::uint64_t> supports;
  for (const auto& g : I.generators()) {
    if (!g.is_monomial())
      throw StructuralError("monomial_minimal_primes: generator " + g.to_string() + " is not a monomial");
    supports.push_back(g.support_mask());
  }
  MinimalPrimeSet out{{}, I, Provenance::computed_monomial};
  for (auto cover : minimal_covers(supports)) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
      if (cover >> i & 1u)
        vars.push_back(i);
    out.primes.push_back({Ideal::variables(ring, vars), {PrimeCertificate::Kind::monomial_variable_prime, "", {}}});
  }
  sort_primes(out.primes);
  return out;
}

/// Automatic primality certificate, when the ideal falls in a certified class.
inline std::optional<PrimeCertificate> certify_prime(const Ideal& P) {
  using K = PrimeCertificate::Kind;
  const auto& gb = P.groebner();
  if (gb.is_unit())
    return std::nullopt;
  if (gb.is_zero())
    return PrimeCertificate{K::linear_prime, "zero ideal", {}};
  bool variables_only = true;
  std::vector<const Polynomial*> nonlinear;
  for (const auto& g : gb.generators) {
    if (!(g.is_monomial() && g.total_degree() == 1))
      variables_only = false;
    if (g.total_degree() > 1)
      nonlinear.push_back(&g);
  }
  if (variables_only)
    return PrimeCertificate{K::monomial_variable_prime, "", {}};
  if (nonlinear.empty())
    return PrimeCertificate{K::linear_prime, "", {}};
  // linear part eliminates its leading variables; the quotient is a
  // polynomial ring in which the single remaining generator must be irreducible
  if (nonlinear.size() == 1 && certified_irreducible(*nonlinear.front()))
    return PrimeCertificate{K::principal_irreducible, nonlinear.front()->to_string() + " irreducible", {}};
  return std::nullopt;
}

/// P is the kernel of a map into a polynomial ring, hence prime.
inline std::optional<PrimeCertificate> certify_kernel_prime(const Ideal& P, const RingMap& phi) {
  if (!phi.target_is_polynomial_ring() || !same_ring(P.ring(), phi.source))
    return std::nullopt;
  if (!(ring_map_kernel(phi) == P))
    return std::nullopt;
  return PrimeCertificate{PrimeCertificate::Kind::kernel_of_map_into_domain, "", phi};
}

/// Outcome of checking a proposed list of minimal primes of I.
struct DecompositionReport {
  bool pass = true;
  std::string failed_obligation; ///< "containment", "radical", "incomparability" or empty
  std::string detail;
  std::optional<Ideal> intersection;
};

inline Ideal intersect_all(const RingPtr& ring, const std::vector<Ideal>& ideals) {
  if (ideals.empty())
    return Ideal::unit(ring);
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i)
    acc = ideal_intersection(acc, ideals[i]);
  return acc;
}

inline DecompositionReport verify_decomposition(const Ideal& I, const std::vector<Ideal>& primes) {
  DecompositionReport r;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    I.check_ring(primes[i]);
    for (const auto& g : I.generators())
      if (!primes[i].contains(g)) {
        r.pass = false;
        r.failed_obligation = "containment";
        r.detail = "generator " + g.to_string() + " of the ideal is not in prime #" + std::to_string(i + 1) +
                   " " + primes[i].canonical_string();
        return r;
      }
  }
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = 0; j < primes.size(); ++j)
      if (i != j && primes[j].contains(primes[i])) {
        r.pass = false;
        r.failed_obligation = "incomparability";
        r.detail = "prime #" + std::to_string(i + 1) + " " + primes[i].canonical_string() + " is contained in prime #" +
                   std::to_string(j + 1) + " " + primes[j].canonical_string();
        return r;
      }
  r.intersection = intersect_all(I.ring(), primes);
  for (const auto& g : r.intersection->groebner().generators)
    if (!radical_membership(g, I)) {
      r.pass = false;
      r.failed_obligation = "radical";
      r.detail = "element " + g.to_string() + " of the intersection is not in the radical of the ideal";
      return r;
    }
  return r;
}

namespace detail {

inline std::vector<CertifiedPrime> keep_minimal(std::vector<CertifiedPrime> leaves) {
  std::vector<CertifiedPrime> out;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < leaves.size() && !drop; ++j) {
      if (i == j || !leaves[i].ideal.contains(leaves[j].ideal))
        continue;
      // leaves[j] ⊆ leaves[i]: drop i if strictly larger, or equal and later
      drop = !leaves[j].ideal.contains(leaves[i].ideal) || j < i;
    }
    if (!drop)
      out.push_back(leaves[i]);
  }
  return out;
}

} // namespace detail

/// Factor-and-split: V(I) = ∪ V(I + (h)) over the irreducible factors h of a
/// reducible basis element, recursing until every component is certified.
inline MinimalPrimeSet split_minimal_primes(const Ideal& I) {
  std::vector<CertifiedPrime> leaves;
  std::vector<Ideal> undecided;
  std::vector<Ideal> stack{I};
  while (!stack.empty()) {
    Ideal K = std::move(stack.back());
    stack.pop_back();
    if (K.is_unit())
      continue;
    if (auto cert = certify_prime(K)) {
      leaves.push_back({Ideal(K.ring(), K.groebner().generators), *cert});
      continue;
    }
    bool split = false;
    for (const auto& g : K.groebner().generators) {
      const auto fac = factor(g);
      if (fac.factors.size() == 1 && fac.factors[0].multiplicity == 1)
        continue;
      for (const auto& h : fac.factors)
        stack.push_back(ideal_sum(Ideal(K.ring(), K.groebner().generators), h.factor));
      split = true;
      break;
    }
    if (!split)
      undecided.push_back(K);
  }
  auto primes = detail::keep_minimal(std::move(leaves));
  sort_primes(primes);
  if (!undecided.empty())
    throw UndecidedComponent(std::move(undecided), std::move(primes));
  return MinimalPrimeSet{std::move(primes), I, Provenance::computed_split};
}

/// A user-supplied prime, optionally with a ring map whose kernel it is.
struct AssertedPrime {
  Ideal ideal;
  std::optional<RingMap> kernel_of;
};

/// Verifies an asserted list and attaches the best available certificate to
/// each prime. Rejects (PreconditionError) on any failed obligation.
inline MinimalPrimeSet asserted_minimal_primes(const Ideal& I, const std::vector<AssertedPrime>& claimed) {
  std::vector<CertifiedPrime> primes;
  std::vector<Ideal> ideals;
  for (const auto& c : claimed) {
    std::optional<PrimeCertificate> cert;
    if (c.kernel_of) {
      cert = certify_kernel_prime(c.ideal, *c.kernel_of);
      if (!cert)
        throw PreconditionError("asserted prime " + c.ideal.canonical_string() +
                                " is not the kernel of a map into a polynomial ring");
    } else {
      cert = certify_prime(c.ideal);
    }
    if (c.ideal.is_unit())
      throw PreconditionError("asserted prime is the unit ideal");
    primes.push_back({c.ideal, cert ? *cert : PrimeCertificate{}});
    ideals.push_back(c.ideal);
  }
  const auto report = verify_decomposition(I, ideals);
  if (!report.pass)
    throw PreconditionError("asserted minimal primes rejected (" + report.failed_obligation + "): " + report.detail);
  sort_primes(primes);
  return MinimalPrimeSet{std::move(primes), I, Provenance::asserted};
}

struct MonomialStrategy {};
struct SplitStrategy {};
struct AssertedStrategy {
  std::vector<AssertedPrime> primes;
};
using PrimeStrategy = std::variant<MonomialStrategy, SplitStrategy, AssertedStrategy>;

inline MinimalPrimeSet minimal_primes(const Ideal& I, const PrimeStrategy& strategy) {
  return std::visit(
      [&](const auto& s) -> MinimalPrimeSet {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, MonomialStrategy>)
          return monomial_minimal_primes(I);
        else if constexpr (std::is_same_v<S, SplitStrategy>)
          return split_minimal_primes(I);
        else
          return asserted_minimal_primes(I, s.primes);
      },
      strategy);
}

/// Monomial lane when every generator is a monomial, split otherwise.
inline MinimalPrimeSet minimal_primes(const Ideal& I) {
  if (I.is_monomial())
    return monomial_minimal_primes(I);
  return split_minimal_primes(I);
}

/// Attach a verified minimal-prime set to R and derive the reduced and
/// equidimensional flags from it.
inline PresentedRing attach_min_primes(PresentedRing R, MinimalPrimeSet set) {
  if (!(set.for_ideal == R.defining))
    throw PreconditionError("minimal primes were computed for a different ideal");
  const auto report = verify_decomposition(R.defining, set.ideals());
  if (!report.pass)
    throw PreconditionError("minimal primes rejected (" + report.failed_obligation + "): " + report.detail);
  const Certainty yes = set.tainted() ? Certainty::asserted : Certainty::certified;
  const int d = ring_dimension(R);
  bool equi = true;
  for (const auto& p : set.primes)
    if (dimension(ideal_sum(R.defining, p.ideal)) != d)
      equi = false;
  R.equidimensional = equi ? yes : Certainty::refuted;
  R.reduced = R.defining.contains(*report.intersection) ? yes : Certainty::refuted;
  R.min_primes = std::move(set);
  return R;
}

/// Presented ring with its minimal primes computed (monomial or split).
inline PresentedRing presented_ring(const Ideal& J) {
  return attach_min_primes(PresentedRing(J), minimal_primes(J));
}

inline const MinimalPrimeSet& require_min_primes(const PresentedRing& R, const char* operation) {
  if (!R.min_primes)
    throw PreconditionError(std::string(operation) +
                            ": minimal primes unavailable; run minprimes with --strategy monomial, split or "
                            "asserted and attach the result");
  return *R.min_primes;
}

inline bool is_equidimensional(const PresentedRing& R) {
  const auto& set = require_min_primes(R, "is_equidimensional");
  const int d = ring_dimension(R);
  return std::all_of(set.primes.begin(), set.primes.end(), [&](const CertifiedPrime& p) {
    return dimension(ideal_sum(R.defining, p.ideal)) == d;
  });
}

/// The ideal of elements whose annihilator has smaller dimension than R,
/// for reduced R: the intersection of the top-dimensional minimal primes
/// (as an ideal of the ambient ring; it is (0) in R iff it lies in J).
inline Ideal j_ideal(const PresentedRing& R) {
  if (!holds(R.reduced))
    throw PreconditionError("j_ideal: only reduced presentations are supported (reducedness is " +
                            to_string(R.reduced) + ")");
  const auto& set = require_min_primes(R, "j_ideal");
  const int d = ring_dimension(R);
  std::vector<Ideal> top;
  for (const auto& p : set.primes)
    if (dimension(ideal_sum(R.defining, p.ideal)) == d)
      top.push_back(p.ideal);
  return intersect_all(R.ambient(), top);
}

} // namespace conncheck
