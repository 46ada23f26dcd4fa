#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "conncheck/error.hpp"

namespace conncheck {

/// Exponent vector over a fixed number of ambient variables.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) { recount(); }

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1) {
    Monomial m(nvars);
    m.exps_.at(index) = power;
    m.degree_ = power;
    return m;
  }

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Bit i set iff variable i occurs. Only meaningful for up to 64 variables.
  std::uint64_t support_mask() const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < exps_.size() && i < 64; ++i)
      if (exps_[i] != 0)
        mask |= std::uint64_t{1} << i;
    return mask;
  }

  bool divides(const Monomial& other) const {
    check_size(other);
    if (degree_ > other.degree_)
      return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i])
        return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    a.check_size(b);
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      r.exps_[i] = a.exps_[i] + b.exps_[i];
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    if (!b.divides(a))
      throw StructuralError("monomial quotient is not exact");
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      r.exps_[i] = a.exps_[i] - b.exps_[i];
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_size(b);
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.recount();
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    a.check_size(b);
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.recount();
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    a.check_size(b);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.exps_[i] != 0 && b.exps_[i] != 0)
        return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  void check_size(const Monomial& other) const {
    if (exps_.size() != other.exps_.size())
      throw StructuralError("exponent vectors of different lengths (" + std::to_string(exps_.size()) +
                            " vs " + std::to_string(other.exps_.size()) + ")");
  }

private:
  void recount() { degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0}); }

  std::vector<std::uint32_t> exps_;
  std::uint64_t degree_ = 0;
};

/// lex, grevlex, or an elimination order for the first `block` variables
/// (grevlex on the block, ties broken by grevlex on the rest).
struct MonomialOrder {
  enum class Kind { lex, grevlex, block_elimination };

  Kind kind = Kind::grevlex;
  std::size_t block = 0;

  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
  static MonomialOrder elimination(std::size_t k) { return {Kind::block_elimination, k}; }

  std::string to_string() const {
    switch (kind) {
    case Kind::lex: return "lex";
    case Kind::grevlex: return "grevlex";
    case Kind::block_elimination: return "elim:" + std::to_string(block);
    }
    return "?";
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
  friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;
};

namespace detail {

inline std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db)
    return da <=> db;
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i])
      return b[i] <=> a[i]; // smaller exponent in the last differing variable wins
  return std::strong_ordering::equal;
}

} // namespace detail

inline std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  a.check_size(b);
  switch (order.kind) {
  case MonomialOrder::Kind::lex:
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i])
        return a[i] <=> b[i];
    return std::strong_ordering::equal;
  case MonomialOrder::Kind::grevlex:
    if (a.degree() != b.degree())
      return a.degree() <=> b.degree();
    return detail::grevlex_range(a, b, 0, a.size());
  case MonomialOrder::Kind::block_elimination: {
    const std::size_t k = std::min(order.block, a.size());
    if (auto c = detail::grevlex_range(a, b, 0, k); c != 0)
      return c;
    return detail::grevlex_range(a, b, k, a.size());
  }
  }
  return std::strong_ordering::equal;
}

} // namespace conncheck
