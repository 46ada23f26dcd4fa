#pragma once

// Limited polynomial factorization, enough to split and certify the
// components met at desk scale:
//   - monomial content,
//   - linear factors, found by an exhaustive candidate search whenever some
//     variable x_p has x_p^d in f (d = total degree),
//   - univariate / binary-form quartics over Q splitting into two quadratics.
// A remaining factor is certified irreducible only when the search above is
// provably exhaustive for it (degree <= 3 with a pivot variable, or a quartic
// binary form with no linear or quadratic split).

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <vector>

#include "conncheck/polynomial.hpp"

namespace conncheck {

struct Factor {
  Polynomial factor;
  unsigned multiplicity = 1;
  bool certified_irreducible = false;
};

struct Factorization {
  std::vector<Factor> factors;

  /// Every factor certified irreducible.
  bool complete() const {
    for (const auto& f : factors)
      if (!f.certified_irreducible)
        return false;
    return true;
  }
};

namespace detail {

inline constexpr long kMaxRootSearchMagnitude = 1'000'000'000'000L;
inline constexpr std::uint64_t kMaxPrimeForRootSearch = 1u << 16;
inline constexpr std::size_t kMaxLinearCandidates = 200'000;

/// Coefficients (index = degree) of f restricted to x_pivot = X and the
/// other variables fixed to `point`.
inline std::vector<FieldElement> restrict_univariate(const Polynomial& f, std::size_t pivot,
                                                     const std::vector<FieldElement>& point) {
  const Field field = f.ring()->field();
  std::vector<FieldElement> coeffs(f.degree_in(pivot) + 1, field.zero());
  for (const auto& t : f.terms()) {
    auto v = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (i == pivot)
        continue;
      for (std::uint32_t e = 0; e < t.monomial[i]; ++e)
        v = v * point[i];
    }
    coeffs[t.monomial[pivot]] = coeffs[t.monomial[pivot]] + v;
  }
  while (coeffs.size() > 1 && coeffs.back().is_zero())
    coeffs.pop_back();
  return coeffs;
}

inline FieldElement horner(const std::vector<FieldElement>& coeffs, const FieldElement& x) {
  FieldElement acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;)
    acc = acc * x + coeffs[i];
  return acc;
}

inline std::vector<mpz_class> positive_divisors(const mpz_class& n, bool& complete) {
  std::vector<mpz_class> out;
  mpz_class a = abs(n);
  if (a == 0 || a > kMaxRootSearchMagnitude) {
    complete = false;
    return out;
  }
  const long v = a.get_si();
  for (long d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.emplace_back(d);
      if (d != v / d)
        out.emplace_back(v / d);
    }
  return out;
}

/// Integer coefficients of a rational univariate polynomial, scaled by the
/// lcm of the denominators.
inline std::vector<mpz_class> integer_coefficients(const std::vector<FieldElement>& coeffs) {
  mpz_class den = 1;
  for (const auto& c : coeffs)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> out;
  for (const auto& c : coeffs) {
    mpq_class scaled = c.rational() * den;
    out.push_back(scaled.get_num());
  }
  return out;
}

/// All roots in the coefficient field (distinct). `complete` is cleared if
/// the search had to be cut short.
inline std::vector<FieldElement> field_roots(const std::vector<FieldElement>& coeffs, const Field& field,
                                             bool& complete) {
  std::vector<FieldElement> roots;
  if (coeffs.size() <= 1)
    return roots;
  if (!field.is_rational()) {
    if (field.characteristic() > kMaxPrimeForRootSearch) {
      complete = false;
      return roots;
    }
    for (std::uint64_t r = 0; r < field.characteristic(); ++r) {
      FieldElement x(r, field.characteristic());
      if (horner(coeffs, x).is_zero())
        roots.push_back(x);
    }
    return roots;
  }
  auto ints = integer_coefficients(coeffs);
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0)
    ++low;
  if (low > 0)
    roots.push_back(field.zero());
  if (low + 1 >= ints.size())
    return roots;
  const auto ps = positive_divisors(ints[low], complete);
  const auto qs = positive_divisors(ints.back(), complete);
  if (!complete)
    return roots;
  for (const auto& p : ps)
    for (const auto& q : qs)
      for (int sign : {1, -1}) {
        mpq_class cand(mpz_class(sign * p), q);
        cand.canonicalize();
        FieldElement x(cand);
        if (horner(coeffs, x).is_zero() &&
            std::find(roots.begin(), roots.end(), x) == roots.end())
          roots.push_back(x);
      }
  return roots;
}

/// Variable p with x_p^d present, d = total degree.
inline std::optional<std::size_t> pivot_variable(const Polynomial& f) {
  const auto d = f.total_degree();
  for (const auto& t : f.terms())
    if (t.monomial.degree() == d)
      for (std::size_t i = 0; i < t.monomial.size(); ++i)
        if (t.monomial[i] == d)
          return i;
  return std::nullopt;
}

struct LinearSearch {
  std::optional<Polynomial> factor;
  bool exhaustive = false;
};

/// Find a linear factor x_p + c0 + sum c_k x_k of f. The search is exhaustive
/// when a pivot exists and every restricted root set was computed in full.
inline LinearSearch find_linear_factor(const Polynomial& f) {
  LinearSearch result;
  const auto pivot = pivot_variable(f);
  if (!pivot || f.total_degree() == 0)
    return result;
  const auto& ring = f.ring();
  const Field field = ring->field();
  const std::size_t n = ring->nvars();
  bool complete = true;

  std::vector<FieldElement> origin(n, field.zero());
  const auto r0 = field_roots(restrict_univariate(f, *pivot, origin), field, complete);

  const std::uint64_t present = f.support_mask();
  std::vector<std::size_t> others;
  std::vector<std::vector<FieldElement>> shifted_roots;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == *pivot || (k < 64 && !(present >> k & 1u)))
      continue;
    auto point = origin;
    point[k] = field.one();
    others.push_back(k);
    shifted_roots.push_back(field_roots(restrict_univariate(f, *pivot, point), field, complete));
  }
  if (!complete)
    return result;

  std::size_t budget = r0.size();
  for (const auto& rs : shifted_roots) {
    budget *= std::max<std::size_t>(rs.size(), 1);
    if (budget > kMaxLinearCandidates)
      return result;
  }

  const Polynomial xp = Polynomial::variable(ring, *pivot);
  for (const auto& root0 : r0) {
    const FieldElement c0 = -root0;
    std::vector<std::size_t> idx(others.size(), 0);
    bool any_empty = false;
    for (const auto& rs : shifted_roots)
      any_empty = any_empty || rs.empty();
    if (any_empty)
      break;
    while (true) {
      Polynomial l = xp + Polynomial::constant(ring, c0);
      for (std::size_t j = 0; j < others.size(); ++j) {
        const FieldElement ck = -shifted_roots[j][idx[j]] - c0;
        l += ck * Polynomial::variable(ring, others[j]);
      }
      if (try_divide_exact(f, l)) {
        result.factor = l;
        result.exhaustive = true;
        return result;
      }
      std::size_t j = 0;
      while (j < idx.size() && ++idx[j] == shifted_roots[j].size())
        idx[j++] = 0;
      if (j == idx.size())
        break;
    }
  }
  result.exhaustive = true;
  return result;
}

/// Univariate view of f: either f involves one variable, or f is a binary
/// form (homogeneous in exactly two variables), dehomogenized at the second.
struct UnivariateView {
  std::size_t main;
  std::optional<std::size_t> homogenizer;
  std::vector<FieldElement> coeffs;
};

inline std::optional<UnivariateView> univariate_view(const Polynomial& f) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i)
    if (f.degree_in(i) > 0)
      vars.push_back(i);
  const Field field = f.ring()->field();
  if (vars.size() == 1) {
    UnivariateView v{vars[0], std::nullopt, std::vector<FieldElement>(f.degree_in(vars[0]) + 1, field.zero())};
    for (const auto& t : f.terms())
      v.coeffs[t.monomial[vars[0]]] = t.coefficient;
    return v;
  }
  if (vars.size() == 2) {
    const auto d = f.total_degree();
    for (const auto& t : f.terms())
      if (t.monomial.degree() != d)
        return std::nullopt;
    UnivariateView v{vars[0], vars[1], std::vector<FieldElement>(d + 1, field.zero())};
    for (const auto& t : f.terms())
      v.coeffs[t.monomial[vars[0]]] = t.coefficient;
    return v;
  }
  return std::nullopt;
}

/// Integer roots of b*c^2 - a*c + k = 0.
inline std::vector<mpz_class> integer_quadratic_roots(const mpz_class& b, const mpz_class& a, const mpz_class& k) {
  std::vector<mpz_class> out;
  if (b == 0) {
    if (a != 0 && k % a == 0)
      out.push_back(k / a);
    return out;
  }
  const mpz_class disc = a * a - 4 * b * k;
  if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t()))
    return out;
  const mpz_class s = sqrt(disc);
  for (const mpz_class& num : {mpz_class(a + s), mpz_class(a - s)})
    if (num % (2 * b) == 0)
      out.push_back(num / (2 * b));
  return out;
}

/// Split a primitive integer quartic without rational roots into two
/// integer quadratics (coefficients low to high), if possible.
inline std::optional<std::pair<std::array<mpz_class, 3>, std::array<mpz_class, 3>>>
split_quartic(const std::vector<mpz_class>& a, bool& complete) {
  const auto b2s = positive_divisors(a[4], complete);
  const auto b0s = positive_divisors(a[0], complete);
  if (!complete)
    return std::nullopt;
  for (const auto& b2 : b2s) {
    const mpz_class c2 = a[4] / b2;
    for (const auto& b0abs : b0s)
      for (int sign : {1, -1}) {
        const mpz_class b0 = mpz_class(sign * b0abs);
        const mpz_class c0 = a[0] / b0;
        const mpz_class det = c2 * b0 - b2 * c0;
        std::vector<std::pair<mpz_class, mpz_class>> candidates; // (b1, c1)
        if (det != 0) {
          const mpz_class nb = a[3] * b0 - b2 * a[1];
          const mpz_class nc = c2 * a[1] - c0 * a[3];
          if (nb % det == 0 && nc % det == 0)
            candidates.emplace_back(nb / det, nc / det);
        } else {
          for (const auto& c1 : integer_quadratic_roots(b2, a[3], c2 * (a[2] - b2 * c0 - b0 * c2))) {
            const mpz_class rest = a[3] - b2 * c1;
            if (rest % c2 == 0)
              candidates.emplace_back(rest / c2, c1);
          }
        }
        for (const auto& [b1, c1] : candidates)
          if (b2 * c1 + b1 * c2 == a[3] && b2 * c0 + b1 * c1 + b0 * c2 == a[2] && b1 * c0 + b0 * c1 == a[1])
            return std::pair{std::array<mpz_class, 3>{b0, b1, b2}, std::array<mpz_class, 3>{c0, c1, c2}};
      }
  }
  return std::nullopt;
}

inline Polynomial from_univariate(const RingPtr& ring, const UnivariateView& view, const std::array<mpz_class, 3>& c) {
  Polynomial out(ring);
  const std::size_t d = 2;
  for (std::size_t i = 0; i <= d; ++i) {
    if (c[i] == 0)
      continue;
    std::vector<std::uint32_t> e(ring->nvars(), 0);
    e[view.main] = static_cast<std::uint32_t>(i);
    if (view.homogenizer)
      e[*view.homogenizer] = static_cast<std::uint32_t>(d - i);
    out += Polynomial::monomial(ring, Monomial(std::move(e)), ring->field().from_rational(mpq_class(c[i])));
  }
  return out;
}

/// f = a*x_i + b with a a single term and no monomial content: any factor
/// of f divides a, so it is a monomial, so it is a unit.
inline bool linear_with_monomial_coefficient(const Polynomial& f) {
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i) {
    if (f.degree_in(i) != 1)
      continue;
    std::size_t terms = 0;
    for (const auto& t : f.terms())
      terms += t.monomial[i] == 1;
    if (terms == 1)
      return true;
  }
  return false;
}

inline void add_factor(std::vector<Factor>& out, Polynomial p, bool certified) {
  p = p.monic();
  for (auto& f : out)
    if (f.factor == p) {
      ++f.multiplicity;
      return;
    }
  out.push_back(Factor{std::move(p), 1, certified});
}

} // namespace detail

/// Factor f (up to a unit) as far as the supported cases reach.
inline Factorization factor(const Polynomial& f) {
  Factorization out;
  if (f.is_constant())
    return out;
  const auto& ring = f.ring();

  // monomial content
  Monomial content = f.terms().front().monomial;
  for (const auto& t : f.terms())
    content = gcd(content, t.monomial);
  Polynomial rest = divide_exact(f, Polynomial::monomial(ring, content, ring->field().one()));
  for (std::size_t i = 0; i < content.size(); ++i)
    for (std::uint32_t e = 0; e < content[i]; ++e)
      detail::add_factor(out.factors, Polynomial::variable(ring, i), true);

  while (rest.total_degree() > 1) {
    if (detail::linear_with_monomial_coefficient(rest)) {
      detail::add_factor(out.factors, rest, true);
      return out;
    }
    const auto search = detail::find_linear_factor(rest);
    if (search.factor) {
      detail::add_factor(out.factors, *search.factor, true);
      rest = divide_exact(rest, *search.factor);
      continue;
    }
    const auto deg = rest.total_degree();
    if (search.exhaustive && deg <= 3) {
      detail::add_factor(out.factors, rest, true);
      return out;
    }
    if (search.exhaustive && deg == 4 && ring->field().is_rational()) {
      if (const auto view = detail::univariate_view(rest); view && view->coeffs.size() == 5) {
        bool complete = true;
        const auto ints = detail::integer_coefficients(view->coeffs);
        if (const auto split = detail::split_quartic(ints, complete)) {
          detail::add_factor(out.factors, detail::from_univariate(ring, *view, split->first), true);
          detail::add_factor(out.factors, detail::from_univariate(ring, *view, split->second), true);
          return out;
        }
        if (complete) {
          detail::add_factor(out.factors, rest, true);
          return out;
        }
      }
    }
    detail::add_factor(out.factors, rest, false);
    return out;
  }
  if (rest.total_degree() == 1)
    detail::add_factor(out.factors, rest, true);
  return out;
}

/// Certified irreducible over the coefficient field.
inline bool certified_irreducible(const Polynomial& f) {
  const auto fac = factor(f);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1 && fac.factors[0].certified_irreducible;
}

} // namespace conncheck
