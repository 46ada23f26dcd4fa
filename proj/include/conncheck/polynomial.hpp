#pragma once

// Sparse multivariate polynomials: terms sorted strictly descending in a
// monomial order, no zero coefficients, zero polynomial = no terms.

#include <algorithm>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "conncheck/error.hpp"
#include "conncheck/field.hpp"
#include "conncheck/monomial.hpp"

namespace conncheck {

/// Ambient polynomial ring: named variables (positional identity), a
/// coefficient field and an optional positive grading (default: all ones).
class PolyRing {
public:
  PolyRing(std::vector<std::string> names, Field field, std::vector<int> weights = {})
      : names_(std::move(names)), field_(field), weights_(std::move(weights)) {
    if (weights_.empty())
      weights_.assign(names_.size(), 1);
    if (weights_.size() != names_.size())
      throw StructuralError("grading has " + std::to_string(weights_.size()) + " weights for " +
                            std::to_string(names_.size()) + " variables");
    for (int w : weights_)
      if (w <= 0)
        throw StructuralError("grading weights must be positive");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j])
          throw StructuralError("duplicate variable name '" + names_[i] + "'");
  }

  static std::shared_ptr<const PolyRing> make(std::vector<std::string> names,
                                              Field field = Field::rationals(),
                                              std::vector<int> weights = {}) {
    return std::make_shared<const PolyRing>(std::move(names), field, std::move(weights));
  }

  /// Variables x1..xn over the given field.
  static std::shared_ptr<const PolyRing> indexed(std::size_t n, Field field = Field::rationals(),
                                                 const std::string& prefix = "x") {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
      names.push_back(prefix + std::to_string(i));
    return make(std::move(names), field);
  }

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  const Field& field() const noexcept { return field_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name)
        return i;
    return std::nullopt;
  }

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

private:
  std::vector<std::string> names_;
  Field field_;
  std::vector<int> weights_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

struct Term {
  Monomial monomial;
  FieldElement coefficient;
};

class Polynomial {
public:
  explicit Polynomial(RingPtr ring, MonomialOrder order = MonomialOrder::grevlex())
      : ring_(std::move(ring)), order_(order) {
    if (!ring_)
      throw StructuralError("polynomial without ambient ring");
  }

  Polynomial(RingPtr ring, std::vector<Term> terms, MonomialOrder order = MonomialOrder::grevlex())
      : Polynomial(std::move(ring), order) {
    for (const auto& t : terms) {
      if (t.monomial.size() != ring_->nvars())
        throw StructuralError("monomial length does not match ambient ring");
      if (t.coefficient.characteristic() != ring_->field().characteristic())
        throw StructuralError("coefficient outside the ambient field");
    }
    terms_ = std::move(terms);
    normalize();
  }

  static Polynomial constant(RingPtr ring, const FieldElement& c) {
    const auto n = ring->nvars();
    return Polynomial(std::move(ring), {Term{Monomial(n), c}});
  }
  static Polynomial constant(RingPtr ring, long c) {
    auto value = ring->field().from_integer(c);
    return constant(std::move(ring), value);
  }
  static Polynomial variable(RingPtr ring, std::size_t index) {
    if (index >= ring->nvars())
      throw StructuralError("variable index out of range");
    const auto n = ring->nvars();
    auto one = ring->field().one();
    return Polynomial(std::move(ring), {Term{Monomial::variable(n, index), one}});
  }
  static Polynomial monomial(RingPtr ring, Monomial m, const FieldElement& c) {
    return Polynomial(std::move(ring), {Term{std::move(m), c}});
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  const Term& leading_term() const {
    if (terms_.empty())
      throw StructuralError("leading term of the zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const FieldElement& leading_coefficient() const { return leading_term().coefficient; }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_)
      d = std::max(d, t.monomial.degree());
    return d;
  }

  std::uint64_t support_mask() const {
    std::uint64_t mask = 0;
    for (const auto& t : terms_)
      mask |= t.monomial.support_mask();
    return mask;
  }

  /// Degree in a single variable.
  std::uint32_t degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_)
      d = std::max(d, t.monomial[var]);
    return d;
  }

  /// Homogeneous with respect to the ring's grading.
  bool is_homogeneous() const {
    std::optional<long> deg;
    for (const auto& t : terms_) {
      long d = 0;
      for (std::size_t i = 0; i < t.monomial.size(); ++i)
        d += static_cast<long>(t.monomial[i]) * ring_->weights()[i];
      if (deg && *deg != d)
        return false;
      deg = d;
    }
    return true;
  }

  /// Removes and returns the leading term.
  Term pop_leading() {
    if (terms_.empty())
      throw StructuralError("leading term of the zero polynomial");
    Term t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
  }

  Polynomial with_order(const MonomialOrder& order) const {
    if (order == order_)
      return *this;
    Polynomial p(ring_, order);
    p.terms_ = terms_;
    p.sort_terms();
    return p;
  }

  Polynomial monic() const {
    if (is_zero())
      return *this;
    const auto inv = leading_coefficient().inverse();
    Polynomial p = *this;
    for (auto& t : p.terms_)
      t.coefficient = t.coefficient * inv;
    return p;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_)
      t.coefficient = -t.coefficient;
    return p;
  }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) { return combine(f, g, false); }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return combine(f, g, true); }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    f.check_ring(g);
    std::optional<Polynomial> reordered;
    if (!(g.order_ == f.order_))
      reordered = g.with_order(f.order_);
    const Polynomial& gg = reordered ? *reordered : g;
    const Polynomial& small = f.size() <= gg.size() ? f : gg;
    const Polynomial& large = f.size() <= gg.size() ? gg : f;
    Polynomial acc(f.ring_, f.order_);
    for (const auto& t : small.terms_)
      acc = combine(acc, large.mul_term(t.monomial, t.coefficient), false);
    return acc;
  }

  friend Polynomial operator*(const FieldElement& c, const Polynomial& f) {
    if (c.is_zero())
      return Polynomial(f.ring_, f.order_);
    Polynomial p = f;
    for (auto& t : p.terms_)
      t.coefficient = c * t.coefficient;
    return p;
  }

  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(ring_, 1).with_order(order_);
    Polynomial base = *this;
    while (e) {
      if (e & 1u)
        result = result * base;
      e >>= 1u;
      if (e)
        base = base * base;
    }
    return result;
  }

  /// c * m * this; multiplication by a monomial preserves the term order.
  Polynomial mul_term(const Monomial& m, const FieldElement& c) const {
    Polynomial p(ring_, order_);
    if (c.is_zero())
      return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      p.terms_.push_back(Term{t.monomial * m, t.coefficient * c});
    return p;
  }

  FieldElement evaluate(std::span<const FieldElement> point) const {
    if (point.size() != ring_->nvars())
      throw StructuralError("evaluation point has wrong arity");
    auto sum = ring_->field().zero();
    for (const auto& t : terms_) {
      auto v = t.coefficient;
      for (std::size_t i = 0; i < point.size(); ++i)
        for (std::uint32_t e = 0; e < t.monomial[i]; ++e)
          v = v * point[i];
      sum = sum + v;
    }
    return sum;
  }

  /// Ring homomorphism x_i -> images[i] into the images' ring.
  Polynomial substitute(const RingPtr& target, std::span<const Polynomial> images,
                        MonomialOrder order = MonomialOrder::grevlex()) const {
    if (images.size() != ring_->nvars())
      throw StructuralError("substitution needs one image per variable");
    if (target->field() != ring_->field())
      throw StructuralError("substitution across different coefficient fields");
    Polynomial out(target, order);
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (const auto& t : terms_) {
      Polynomial v = constant(target, t.coefficient).with_order(order);
      for (std::size_t i = 0; i < images.size(); ++i) {
        const std::uint32_t e = t.monomial[i];
        if (e == 0)
          continue;
        if (!same_ring(images[i].ring(), target))
          throw StructuralError("substitution image lives in another ring");
        auto& cache = powers[i];
        if (cache.empty())
          cache.push_back(images[i].with_order(order));
        while (cache.size() < e)
          cache.push_back(cache.back() * cache.front());
        v = v * cache[e - 1];
      }
      out += v;
    }
    return out;
  }

  /// Re-embed into another ring: variable i goes to target variable index_map[i].
  Polynomial map_variables(const RingPtr& target, std::span<const std::size_t> index_map,
                           MonomialOrder order = MonomialOrder::grevlex()) const {
    if (index_map.size() != ring_->nvars())
      throw StructuralError("variable map has wrong arity");
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
      std::vector<std::uint32_t> e(target->nvars(), 0);
      for (std::size_t i = 0; i < index_map.size(); ++i) {
        if (t.monomial[i] == 0)
          continue;
        if (index_map[i] >= target->nvars())
          throw StructuralError("variable map points outside the target ring");
        e[index_map[i]] += t.monomial[i];
      }
      terms.push_back(Term{Monomial(std::move(e)), t.coefficient});
    }
    return Polynomial(target, std::move(terms), order);
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    if (!same_ring(f.ring_, g.ring_) || f.size() != g.size())
      return false;
    std::optional<Polynomial> reordered;
    if (!(g.order_ == f.order_))
      reordered = g.with_order(f.order_);
    const Polynomial& gg = reordered ? *reordered : g;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (!(f.terms_[i].monomial == gg.terms_[i].monomial) ||
          !(f.terms_[i].coefficient == gg.terms_[i].coefficient))
        return false;
    return true;
  }

  std::string to_string() const {
    if (terms_.empty())
      return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
      std::string c = t.coefficient.to_string();
      bool negative = !c.empty() && c[0] == '-';
      if (negative)
        c.erase(0, 1);
      if (first)
        out << (negative ? "-" : "");
      else
        out << (negative ? " - " : " + ");
      first = false;
      const std::string mono = monomial_string(t.monomial);
      if (mono.empty())
        out << c;
      else if (c == "1")
        out << mono;
      else
        out << c << '*' << mono;
    }
    return out.str();
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0)
        continue;
      if (!s.empty())
        s += '*';
      s += ring_->names()[i];
      if (m[i] > 1)
        s += '^' + std::to_string(m[i]);
    }
    return s;
  }

  void check_ring(const Polynomial& other) const {
    if (!same_ring(ring_, other.ring_))
      throw StructuralError("polynomials live in different ambient rings");
  }

private:
  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
      return monomial_compare(a.monomial, b.monomial, order_) > 0;
    });
  }

  void normalize() {
    sort_terms();
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().monomial == t.monomial)
        merged.back().coefficient = merged.back().coefficient + t.coefficient;
      else
        merged.push_back(std::move(t));
      if (merged.back().coefficient.is_zero())
        merged.pop_back();
    }
    terms_ = std::move(merged);
  }

  static Polynomial combine(const Polynomial& f, const Polynomial& g, bool subtract) {
    f.check_ring(g);
    std::optional<Polynomial> reordered;
    if (!(g.order_ == f.order_))
      reordered = g.with_order(f.order_);
    const Polynomial& gg = reordered ? *reordered : g;
    Polynomial out(f.ring_, f.order_);
    out.terms_.reserve(f.size() + gg.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < gg.size()) {
      if (j == gg.size()) {
        out.terms_.push_back(f.terms_[i++]);
        continue;
      }
      const Term& b = gg.terms_[j];
      if (i == f.size()) {
        out.terms_.push_back(Term{b.monomial, subtract ? -b.coefficient : b.coefficient});
        ++j;
        continue;
      }
      const Term& a = f.terms_[i];
      const auto c = monomial_compare(a.monomial, b.monomial, f.order_);
      if (c > 0) {
        out.terms_.push_back(a);
        ++i;
      } else if (c < 0) {
        out.terms_.push_back(Term{b.monomial, subtract ? -b.coefficient : b.coefficient});
        ++j;
      } else {
        auto s = subtract ? a.coefficient - b.coefficient : a.coefficient + b.coefficient;
        if (!s.is_zero())
          out.terms_.push_back(Term{a.monomial, std::move(s)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// Exact division f / g, or nullopt when g does not divide f.
inline std::optional<Polynomial> try_divide_exact(const Polynomial& f, const Polynomial& g) {
  f.check_ring(g);
  if (g.is_zero())
    throw StructuralError("division by the zero polynomial");
  Polynomial rem = f.with_order(g.order());
  std::vector<Term> quot;
  const auto& lm = g.leading_monomial();
  const auto lc_inv = g.leading_coefficient().inverse();
  while (!rem.is_zero()) {
    const auto& lt = rem.leading_term();
    if (!lm.divides(lt.monomial))
      return std::nullopt;
    Term q{lt.monomial / lm, lt.coefficient * lc_inv};
    rem -= g.mul_term(q.monomial, q.coefficient);
    quot.push_back(std::move(q));
  }
  return Polynomial(f.ring(), std::move(quot), f.order());
}

inline Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  auto q = try_divide_exact(f, g);
  if (!q)
    throw StructuralError("polynomial division is not exact");
  return *std::move(q);
}

} // namespace conncheck
