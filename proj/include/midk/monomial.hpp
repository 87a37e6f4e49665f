#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace midk {

using Exponent = std::int64_t;

/// A monomial in a fixed ambient set of variables x1..xn, stored as a dense
/// exponent vector. Variables are 1-indexed in the API; exponents are exact
/// integers and arithmetic that would overflow throws std::overflow_error.
class Monomial {
 public:
  /// The constant monomial 1 in nvars variables.
  explicit Monomial(int nvars) : exps_(static_cast<std::size_t>(nvars), 0) {}
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::vector<Exponent> exps);

  /// x_index in nvars variables.
  static Monomial variable(int nvars, int index);

  int vars() const { return static_cast<int>(exps_.size()); }
  Exponent exponent(int index) const;  // deg_{x_index}, 1-indexed
  Exponent degree() const;
  bool is_one() const;

  const std::vector<Exponent>& exponents() const { return exps_; }

  bool divides(const Monomial& other) const;
  Monomial times(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  /// this / divisor; requires divisor | this.
  Monomial quotient_by(const Monomial& divisor) const;
  /// this / gcd(this, other) -- the monomial colon.
  Monomial colon_by(const Monomial& other) const;
  /// this * x_gain / x_lose; requires deg_{x_lose} >= 1.
  Monomial exchanged(int gain, int lose) const;

  /// Bit i-1 set iff x_i occurs (variables beyond 64 are ignored; the mask
  /// is only used as a divisibility prefilter).
  std::uint64_t support_mask() const;
  std::vector<int> support() const;  // 1-indexed, ascending

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

 private:
  std::vector<Exponent> exps_;
  void check_same_vars(const Monomial& other) const;
};

/// Canonical order on monomials: total degree ascending, ties broken by the
/// exponent sequence lexicographically descending. Generator lists, pair
/// scans and reported witnesses all follow this order.
bool canonical_less(const Monomial& a, const Monomial& b);

}  // namespace midk
