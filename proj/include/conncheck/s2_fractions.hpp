#pragma once

// Fractions u/v over a presented ring, their conductor ideals, membership in
// the S2-ification, and the locality decision through the prime graph.

#include <memory>
#include <string>
#include <vector>

#include "conncheck/spectrum_graphs.hpp"

namespace conncheck {

/// u/v in the total quotient ring of R = A/J; v must be a nonzerodivisor,
/// checked as (J : v) = J.
class Fraction {
public:
  Fraction(std::shared_ptr<const PresentedRing> ring, Polynomial u, Polynomial v)
      : ring_(std::move(ring)), u_(std::move(u)), v_(std::move(v)) {
    const auto& A = ring_->ambient();
    if (!same_ring(u_.ring(), A) || !same_ring(v_.ring(), A))
      throw StructuralError("fraction numerator and denominator must live in the ring's ambient");
    if (!(ideal_colon(ring_->defining, v_) == ring_->defining))
      throw PreconditionError("denominator " + v_.to_string() + " is a zerodivisor in the ring");
  }

  const PresentedRing& ring() const noexcept { return *ring_; }
  const std::shared_ptr<const PresentedRing>& ring_ptr() const noexcept { return ring_; }
  const Polynomial& numerator() const noexcept { return u_; }
  const Polynomial& denominator() const noexcept { return v_; }

  std::string to_string() const { return "(" + u_.to_string() + ") / (" + v_.to_string() + ")"; }

  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    a.check(b);
    return Fraction(a.ring_, a.u_ * b.u_, a.v_ * b.v_);
  }
  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    a.check(b);
    return Fraction(a.ring_, a.u_ * b.v_ + b.u_ * a.v_, a.v_ * b.v_);
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    a.check(b);
    return Fraction(a.ring_, a.u_ * b.v_ - b.u_ * a.v_, a.v_ * b.v_);
  }

private:
  void check(const Fraction& other) const {
    if (ring_ != other.ring_ && !(ring_->defining == other.ring_->defining))
      throw StructuralError("fractions over different rings");
  }

  std::shared_ptr<const PresentedRing> ring_;
  Polynomial u_;
  Polynomial v_;
};

struct ConductorResult {
  Ideal ideal; ///< lifted to the ambient ring, contains J
  Height height;
  bool member = false;
};

/// D(u/v) = {r : r u ∈ (v) in R} = (J + (v)) : u.
inline ConductorResult conductor(const Fraction& f) {
  const auto& R = f.ring();
  Ideal D = ideal_colon(ideal_sum(R.defining, f.denominator()), f.numerator());
  const Height h = height_in_quotient(R, D);
  const bool member = h >= 2;
  return {std::move(D), h, member};
}

inline bool s2_membership(const Fraction& f) { return conductor(f).member; }

/// One of the equivalent locality conditions with its verdict.
struct ConditionVerdict {
  std::string key;
  std::string statement;
  bool holds = false;
  std::string provenance; ///< "computed" or "by-equivalence"
};

struct S2LocalReport {
  ConnectivityReport gamma;
  bool local = false;
  bool reduced_to_top_components = false;
  Ideal ring_ideal; ///< defining ideal of the ring actually examined
  std::vector<ConditionVerdict> conditions;
};

namespace detail {

/// R / j(R) for reduced R: presented by the intersection of the top
/// components, whose minimal primes are exactly those components.
inline PresentedRing top_components(const PresentedRing& R) {
  const auto& set = require_min_primes(R, "s2_local_decision");
  const int d = ring_dimension(R);
  MinimalPrimeSet top{{}, j_ideal(R), set.provenance};
  for (const auto& p : set.primes)
    if (quotient_dimension(R, p.ideal) == d)
      top.primes.push_back(p);
  PresentedRing out(top.for_ideal);
  const Certainty c = top.tainted() || R.reduced == Certainty::asserted ? Certainty::asserted : Certainty::certified;
  out.reduced = c;
  out.equidimensional = c;
  out.min_primes = std::move(top);
  return out;
}

} // namespace detail

/// Locality of the S2-ification of R/j(R), decided through Γ connectivity and
/// cross-checked against the bipartition search.
inline S2LocalReport s2_local_decision(const PresentedRing& R) {
  S2LocalReport out{{}, false, false, R.defining, {}};
  const PresentedRing* target = &R;
  std::optional<PresentedRing> reduced;
  if (!holds(R.equidimensional)) {
    if (!holds(R.reduced))
      throw PreconditionError("s2_local_decision: ring is neither known equidimensional nor known reduced (" +
                              to_string(R.equidimensional) + ", " + to_string(R.reduced) +
                              "); j(R) cannot be removed");
    reduced = detail::top_components(R);
    target = &*reduced;
    out.reduced_to_top_components = true;
    out.ring_ideal = reduced->defining;
  }
  out.gamma = is_connected(build_gamma(*target));
  const bool no_split = disconnection_exists(*target).connected();
  if (no_split != out.gamma.connected())
    throw std::logic_error("graph connectivity and bipartition search disagree");
  out.local = out.gamma.connected();
  const bool v = out.local;
  out.conditions = {
      {"top_local_cohomology_indecomposable", "H_m^n(R) is indecomposable", v, "by-equivalence"},
      {"canonical_module_indecomposable", "the canonical module of R is indecomposable", v, "by-equivalence"},
      {"s2_ification_local", "the S2-ification of R/j(R) is local", v, "by-equivalence"},
      {"no_disconnecting_ideals", "no split of the minimal primes with every cross sum of height >= 2", no_split,
       "computed"},
      {"gamma_connected", "the minimal-prime graph is connected", out.gamma.connected(), "computed"},
  };
  return out;
}

} // namespace conncheck
