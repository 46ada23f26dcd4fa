// Walks through the five-variable kernel example and prints what it finds.

#include <iostream>

#include "conncheck.hpp"

using namespace conncheck;

int main() {
  const auto A = PolyRing::make({"a", "b", "c", "d", "e"});
  const auto S = PolyRing::make({"x", "y", "z"});
  const auto x = Polynomial::variable(S, 0), y = Polynomial::variable(S, 1), z = Polynomial::variable(S, 2);
  const RingMap phi(A, S, {x, y, y * z, z * (z - x), z * z * (z - x)});

  const Ideal J = ring_map_kernel(phi);
  std::cout << "J = " << J.canonical_string() << "\n";
  const auto R = std::make_shared<const PresentedRing>(
      attach_min_primes(PresentedRing(J), asserted_minimal_primes(J, {{J, phi}})));
  std::cout << "dim A/J = " << ring_dimension(*R) << "\n";

  const Ideal P = Ideal::variables(A, {1, 2, 3, 4});
  std::cout << "ht " << P.canonical_string() << " = " << height_in_quotient(*R, P).to_string() << "\n";
  for (const Ideal& Q : {Ideal(S, {y, z}), Ideal(S, {y, z - x})})
    std::cout << Q.canonical_string() << " contracts to " << contract(Q, phi).canonical_string() << "\n";

  const Fraction f(R, Polynomial::variable(A, 4), Polynomial::variable(A, 3));
  const auto c = conductor(f);
  std::cout << "conductor of " << f.to_string() << " = " << c.ideal.canonical_string() << ", height "
            << c.height.to_string() << (c.member ? ", in" : ", not in") << " the S2-ification\n";
  std::cout << "S2-ification local: " << (s2_local_decision(*R).local ? "yes" : "no") << "\n";
}
