#pragma once

// Ideals of a polynomial ring and the ideal-level operations built on
// Groebner bases: sums, products, intersections, colons, saturation,
// elimination, radical membership and Krull dimension.

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "conncheck/groebner.hpp"

namespace conncheck {

/// Largest ambient variable count accepted by the independent-set dimension search.
inline constexpr std::size_t kMaxDimensionVariables = 16;

namespace detail {

struct IdealCache {
  std::mutex mutex;
  std::map<MonomialOrder, GroebnerBasis> bases;
  std::optional<int> dimension;
};

} // namespace detail

class Ideal {
public:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<detail::IdealCache>()) {
    if (!ring_)
      throw StructuralError("ideal without ambient ring");
  }

  Ideal(RingPtr ring, std::vector<Polynomial> generators) : Ideal(std::move(ring)) {
    for (auto& g : generators) {
      if (!same_ring(g.ring(), ring_))
        throw StructuralError("ideal generator lives outside the ambient ring");
      if (!g.is_zero())
        generators_.push_back(g.with_order(MonomialOrder::grevlex()));
    }
  }

  static Ideal unit(const RingPtr& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

  /// Ideal generated by the variables whose indices are given.
  static Ideal variables(const RingPtr& ring, const std::vector<std::size_t>& indices) {
    std::vector<Polynomial> gens;
    for (auto i : indices)
      gens.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, std::move(gens));
  }

  /// The homogeneous maximal ideal (all variables).
  static Ideal maximal(const RingPtr& ring) {
    std::vector<std::size_t> all(ring->nvars());
    for (std::size_t i = 0; i < all.size(); ++i)
      all[i] = i;
    return variables(ring, all);
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }

  /// Reduced Groebner basis under `order`, computed once per order.
  const GroebnerBasis& groebner(const MonomialOrder& order = MonomialOrder::grevlex()) const {
    {
      std::lock_guard lock(cache_->mutex);
      if (auto it = cache_->bases.find(order); it != cache_->bases.end())
        return it->second;
    }
    GroebnerBasis gb = buchberger(generators_, order);
    std::lock_guard lock(cache_->mutex);
    return cache_->bases.emplace(order, std::move(gb)).first->second;
  }

  bool is_zero() const { return groebner().is_zero(); }
  bool is_unit() const { return groebner().is_unit(); }
  bool is_monomial() const {
    return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_monomial(); });
  }
  bool is_homogeneous() const {
    return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
  }

  bool contains(const Polynomial& f) const {
    f.check_ring(Polynomial(ring_));
    return groebner().contains(f);
  }
  bool contains(const Ideal& other) const {
    check_ring(other);
    return std::all_of(other.generators_.begin(), other.generators_.end(),
                       [&](const Polynomial& g) { return contains(g); });
  }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return same_ring(a.ring_, b.ring_) && a.groebner() == b.groebner();
  }

  void check_ring(const Ideal& other) const {
    if (!same_ring(ring_, other.ring_))
      throw StructuralError("ideals live in different ambient rings");
  }

  std::optional<int> cached_dimension() const {
    std::lock_guard lock(cache_->mutex);
    return cache_->dimension;
  }
  void store_dimension(int d) const {
    std::lock_guard lock(cache_->mutex);
    cache_->dimension = d;
  }

  std::string to_string() const { return list_string(generators_); }

  /// Reduced grevlex basis, leading monomials descending, monic.
  std::string canonical_string() const { return list_string(groebner().generators); }

private:
  static std::string list_string(const std::vector<Polynomial>& gens) {
    std::string s = "(";
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i)
        s += ", ";
      s += gens[i].to_string();
    }
    return s + (gens.empty() ? "0)" : ")");
  }

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<detail::IdealCache> cache_;
};

/// Deterministic total order on ideals via their reduced grevlex bases.
inline bool canonical_less(const Ideal& a, const Ideal& b) {
  const auto& ga = a.groebner().generators;
  const auto& gb = b.groebner().generators;
  const std::size_t n = std::min(ga.size(), gb.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ta = ga[i].terms();
    const auto& tb = gb[i].terms();
    const std::size_t m = std::min(ta.size(), tb.size());
    for (std::size_t k = 0; k < m; ++k) {
      if (auto c = monomial_compare(ta[k].monomial, tb[k].monomial, MonomialOrder::grevlex()); c != 0)
        return c > 0;
      if (auto c = canonical_compare(ta[k].coefficient, tb[k].coefficient); c != 0)
        return c < 0;
    }
    if (ta.size() != tb.size())
      return ta.size() < tb.size();
  }
  return ga.size() < gb.size();
}

namespace detail {

inline std::string fresh_name(const PolyRing& ring, std::string base) {
  while (ring.index_of(base))
    base += "_";
  return base;
}

/// Ring with one fresh variable in front (position 0), for elimination.
inline RingPtr prepend_variable(const RingPtr& ring, const std::string& base) {
  std::vector<std::string> names{fresh_name(*ring, base)};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  std::vector<int> weights{1};
  weights.insert(weights.end(), ring->weights().begin(), ring->weights().end());
  return PolyRing::make(std::move(names), ring->field(), std::move(weights));
}

inline std::vector<std::size_t> shift_map(std::size_t n, std::size_t offset) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i)
    m[i] = i + offset;
  return m;
}

/// Inverse of shift_map for polynomials free of the first `offset` variables.
inline std::vector<std::size_t> unshift_map(std::size_t n_total, std::size_t offset) {
  std::vector<std::size_t> m(n_total, 0);
  for (std::size_t i = offset; i < n_total; ++i)
    m[i] = i - offset;
  return m;
}

inline std::uint64_t low_mask(std::size_t k) {
  return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

} // namespace detail

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  I.check_ring(J);
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

inline Ideal ideal_sum(const Ideal& I, const Polynomial& f) { return ideal_sum(I, Ideal(I.ring(), {f})); }

inline Ideal ideal_product(const Ideal& I, const Ideal& J) {
  I.check_ring(J);
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators())
    for (const auto& g : J.generators())
      gens.push_back(f * g);
  return Ideal(I.ring(), std::move(gens));
}

/// I ∩ K[x_k, ..., x_n]: reduced basis under the block order, keeping the
/// elements free of the first k variables. Stays in the same ambient ring.
inline Ideal eliminate(const Ideal& I, std::size_t k) {
  if (k == 0)
    return I;
  if (k > I.ring()->nvars())
    throw StructuralError("cannot eliminate more variables than the ring has");
  const auto& gb = I.groebner(MonomialOrder::elimination(k));
  std::vector<Polynomial> kept;
  for (const auto& g : gb.generators) {
    bool free = true;
    for (const auto& t : g.terms())
      for (std::size_t v = 0; v < k && free; ++v)
        if (t.monomial[v] != 0)
          free = false;
    if (free)
      kept.push_back(g.with_order(MonomialOrder::grevlex()));
  }
  return Ideal(I.ring(), std::move(kept));
}

inline Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  I.check_ring(J);
  const auto& ring = I.ring();
  if (I.is_zero() || J.is_zero())
    return Ideal(ring);
  if (I.is_unit())
    return J;
  if (J.is_unit())
    return I;
  const auto& gi = I.groebner().generators;
  const auto& gj = J.groebner().generators;
  const auto monomial = [](const std::vector<Polynomial>& g) {
    return std::all_of(g.begin(), g.end(), [](const Polynomial& p) { return p.is_monomial(); });
  };
  if (monomial(gi) && monomial(gj)) {
    std::vector<Polynomial> gens;
    for (const auto& a : gi)
      for (const auto& b : gj)
        gens.push_back(Polynomial::monomial(ring, lcm(a.leading_monomial(), b.leading_monomial()), ring->field().one()));
    return Ideal(ring, std::move(gens));
  }

  // t*I + (1-t)*J, eliminate t
  const RingPtr ext = detail::prepend_variable(ring, "t");
  const auto up = detail::shift_map(ring->nvars(), 1);
  const Polynomial t = Polynomial::variable(ext, 0);
  const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : gi)
    gens.push_back(t * g.map_variables(ext, up));
  for (const auto& g : gj)
    gens.push_back(one_minus_t * g.map_variables(ext, up));
  const Ideal lifted = eliminate(Ideal(ext, std::move(gens)), 1);
  const auto down = detail::unshift_map(ext->nvars(), 1);
  std::vector<Polynomial> out;
  for (const auto& g : lifted.generators())
    out.push_back(g.map_variables(ring, down));
  return Ideal(ring, std::move(out));
}

/// (I : g) = (I ∩ (g)) / g.
inline Ideal ideal_colon(const Ideal& I, const Polynomial& g) {
  if (g.is_zero())
    return Ideal::unit(I.ring());
  if (I.is_zero())
    return I;
  if (g.is_constant())
    return I;
  const Ideal both = ideal_intersection(I, Ideal(I.ring(), {g}));
  std::vector<Polynomial> gens;
  for (const auto& h : both.generators())
    gens.push_back(divide_exact(h, g));
  return Ideal(I.ring(), std::move(gens));
}

/// (I : J) = ∩_g (I : g) over generators g of J; the unit ideal when J = (0).
inline Ideal ideal_colon(const Ideal& I, const Ideal& J) {
  I.check_ring(J);
  std::optional<Ideal> result;
  for (const auto& g : J.generators()) {
    Ideal part = ideal_colon(I, g);
    result = result ? ideal_intersection(*result, part) : part;
  }
  return result ? *result : Ideal::unit(I.ring());
}

/// (I : J^∞) by iterating the colon until it stabilizes.
inline Ideal saturation(const Ideal& I, const Ideal& J) {
  Ideal current = I;
  while (true) {
    Ideal next = ideal_colon(current, J);
    if (next == current)
      return current;
    current = std::move(next);
  }
}

/// f ∈ Rad I  ⇔  1 ∈ I + (1 - t f) in one more variable.
inline bool radical_membership(const Polynomial& f, const Ideal& I) {
  f.check_ring(Polynomial(I.ring()));
  if (f.is_zero())
    return true;
  if (I.is_unit())
    return true;
  if (I.is_zero())
    return false;
  const auto& gb = I.groebner();
  if (f.is_monomial() && std::all_of(gb.generators.begin(), gb.generators.end(),
                                     [](const Polynomial& p) { return p.is_monomial(); })) {
    const std::uint64_t fs = f.support_mask();
    if (f.ring()->nvars() <= 64)
      return std::any_of(gb.generators.begin(), gb.generators.end(),
                         [&](const Polynomial& p) { return (p.support_mask() & ~fs) == 0; });
  }
  const RingPtr ext = detail::prepend_variable(I.ring(), "t");
  const auto up = detail::shift_map(I.ring()->nvars(), 1);
  std::vector<Polynomial> gens;
  for (const auto& g : gb.generators)
    gens.push_back(g.map_variables(ext, up));
  gens.push_back(Polynomial::constant(ext, 1) - Polynomial::variable(ext, 0) * f.map_variables(ext, up));
  return buchberger(gens, MonomialOrder::grevlex()).is_unit();
}

/// Krull dimension of a quotient by a monomial ideal given by generator
/// supports: the largest variable set containing no generator's support.
inline int monomial_dimension(std::size_t nvars, const std::vector<std::uint64_t>& supports) {
  if (nvars > kMaxDimensionVariables)
    throw PreconditionError("dimension search is capped at " + std::to_string(kMaxDimensionVariables) +
                            " variables (got " + std::to_string(nvars) + ")");
  for (auto s : supports)
    if (s == 0)
      return -1;
  int best = 0;
  const std::uint64_t limit = std::uint64_t{1} << nvars;
  for (std::uint64_t S = 0; S < limit; ++S) {
    const int size = std::popcount(S);
    if (size <= best)
      continue;
    bool independent = true;
    for (auto s : supports)
      if ((s & ~S) == 0) {
        independent = false;
        break;
      }
    if (independent)
      best = size;
  }
  return best;
}

/// dim A/I via the leading-term ideal; -1 for the unit ideal.
inline int dimension(const Ideal& I) {
  if (auto d = I.cached_dimension())
    return *d;
  const auto& gb = I.groebner();
  std::vector<std::uint64_t> supports;
  for (const auto& g : gb.generators)
    supports.push_back(g.leading_monomial().support_mask());
  const int d = gb.is_unit() ? -1 : monomial_dimension(I.ring()->nvars(), supports);
  I.store_dimension(d);
  return d;
}

/// Ideal generated by the leading monomials of the reduced basis.
inline Ideal leading_term_ideal(const Ideal& I, const MonomialOrder& order = MonomialOrder::grevlex()) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.groebner(order).generators)
    gens.push_back(Polynomial::monomial(I.ring(), g.leading_monomial(), I.ring()->field().one()));
  return Ideal(I.ring(), std::move(gens));
}

} // namespace conncheck
