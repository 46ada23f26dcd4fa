#pragma once

// Quotient rings A/J with their certification flags and minimal primes,
// plus the quotient-ring numerics: dimension, heights, m-primary tests.

#include <compare>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "conncheck/ideal.hpp"
#include "conncheck/ring_map.hpp"

namespace conncheck {

/// Where a set of minimal primes came from.
enum class Provenance { computed_monomial, computed_split, asserted };

inline std::string to_string(Provenance p) {
  switch (p) {
  case Provenance::computed_monomial: return "computed-monomial";
  case Provenance::computed_split: return "computed-split";
  case Provenance::asserted: return "asserted";
  }
  return "?";
}

/// Checkable evidence that an ideal is prime. `asserted` carries no proof.
struct PrimeCertificate {
  enum class Kind { monomial_variable_prime, linear_prime, principal_irreducible, kernel_of_map_into_domain, asserted };

  Kind kind = Kind::asserted;
  std::string note;
  std::optional<RingMap> map;

  bool is_proof() const { return kind != Kind::asserted; }
};

inline std::string to_string(PrimeCertificate::Kind k) {
  using K = PrimeCertificate::Kind;
  switch (k) {
  case K::monomial_variable_prime: return "monomial-variable-prime";
  case K::linear_prime: return "linear-prime";
  case K::principal_irreducible: return "principal-irreducible";
  case K::kernel_of_map_into_domain: return "kernel-of-map-into-domain";
  case K::asserted: return "asserted";
  }
  return "?";
}

struct CertifiedPrime {
  Ideal ideal;
  PrimeCertificate certificate;
};

struct MinimalPrimeSet {
  std::vector<CertifiedPrime> primes;
  Ideal for_ideal;
  Provenance provenance = Provenance::asserted;

  /// True when some prime rests on an assertion rather than a certificate.
  bool tainted() const {
    if (provenance == Provenance::asserted)
      for (const auto& p : primes)
        if (!p.certificate.is_proof())
          return true;
    return false;
  }

  std::vector<Ideal> ideals() const {
    std::vector<Ideal> out;
    for (const auto& p : primes)
      out.push_back(p.ideal);
    return out;
  }
};

/// Whether a ring property is known, and on what authority.
enum class Certainty { unknown, certified, asserted, refuted };

inline bool holds(Certainty c) { return c == Certainty::certified || c == Certainty::asserted; }

inline std::string to_string(Certainty c) {
  switch (c) {
  case Certainty::unknown: return "unknown";
  case Certainty::certified: return "certified";
  case Certainty::asserted: return "asserted";
  case Certainty::refuted: return "refuted";
  }
  return "?";
}

/// A = ambient polynomial ring, R = A/J.
struct PresentedRing {
  Ideal defining;
  Certainty reduced = Certainty::unknown;
  Certainty equidimensional = Certainty::unknown;
  std::optional<MinimalPrimeSet> min_primes;

  explicit PresentedRing(Ideal J) : defining(std::move(J)) {
    if (defining.is_unit())
      throw StructuralError("defining ideal of a presented ring must be proper");
  }

  /// The polynomial ring itself: a domain with the single minimal prime (0).
  static PresentedRing polynomial(const RingPtr& ring) {
    PresentedRing R{Ideal(ring)};
    R.reduced = Certainty::certified;
    R.equidimensional = Certainty::certified;
    R.min_primes = MinimalPrimeSet{{CertifiedPrime{Ideal(ring), {PrimeCertificate::Kind::linear_prime, "zero ideal", {}}}},
                                   Ideal(ring),
                                   Provenance::computed_monomial};
    return R;
  }

  const RingPtr& ambient() const { return defining.ring(); }
};

/// Height with a +∞ sentinel for the unit ideal.
class Height {
public:
  static Height finite(int h) { return Height(h, false); }
  static Height infinity() { return Height(std::numeric_limits<int>::max(), true); }

  bool is_infinite() const noexcept { return infinite_; }
  int value() const noexcept { return value_; }

  std::string to_string() const { return infinite_ ? "+∞" : std::to_string(value_); }

  friend bool operator==(const Height&, const Height&) = default;
  friend std::strong_ordering operator<=>(const Height& a, const Height& b) {
    if (a.infinite_ || b.infinite_)
      return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    return a.value_ <=> b.value_;
  }
  friend bool operator==(const Height& a, int b) { return !a.infinite_ && a.value_ == b; }
  friend std::strong_ordering operator<=>(const Height& a, int b) {
    return a.infinite_ ? std::strong_ordering::greater : a.value_ <=> b;
  }

private:
  Height(int v, bool inf) : value_(v), infinite_(inf) {}
  int value_;
  bool infinite_;
};

inline int ring_dimension(const PresentedRing& R) { return dimension(R.defining); }

/// dim A/(J + I).
inline int quotient_dimension(const PresentedRing& R, const Ideal& I) { return dimension(ideal_sum(R.defining, I)); }

/// ht I = dim R - dim R/I. Only valid for equidimensional R, so it refuses
/// otherwise unless `allow_unverified` is set.
inline Height height_in_quotient(const PresentedRing& R, const Ideal& I, bool allow_unverified = false) {
  if (!allow_unverified && !holds(R.equidimensional))
    throw PreconditionError(
        "height via dim R - dim R/I needs an equidimensional ring; equidimensionality is " +
        to_string(R.equidimensional) + " (compute or assert minimal primes first)");
  const int d = quotient_dimension(R, I);
  if (d < 0)
    return Height::infinity();
  return Height::finite(ring_dimension(R) - d);
}

struct MPrimaryVerdict {
  bool primary = false;
  bool unit_ideal = false;

  explicit operator bool() const { return primary; }
};

/// Is Rad(J + I) the ideal of all variables? Homogeneous input uses the
/// dimension-zero shortcut; otherwise every variable is tested for radical
/// membership.
inline MPrimaryVerdict is_m_primary(const Ideal& I, const PresentedRing& R) {
  const Ideal K = ideal_sum(R.defining, I);
  if (K.is_unit())
    return {false, true};
  if (K.is_homogeneous())
    return {dimension(K) == 0, false};
  if (dimension(K) != 0)
    return {false, false};
  for (std::size_t v = 0; v < R.ambient()->nvars(); ++v)
    if (!radical_membership(Polynomial::variable(R.ambient(), v), K))
      return {false, false};
  return {true, false};
}

} // namespace conncheck
