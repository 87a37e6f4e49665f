#include "midk/monomial.hpp"

#include <stdexcept>
#include <string>

namespace midk {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("exponent arithmetic overflow");
  }
  return r;
}

}  // namespace

Monomial::Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {
  for (Exponent e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
  }
}

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
  }
}

Monomial Monomial::variable(int nvars, int index) {
  if (index < 1 || index > nvars) {
    throw std::invalid_argument("variable index " + std::to_string(index) +
                                " out of range 1.." + std::to_string(nvars));
  }
  Monomial m(nvars);
  m.exps_[static_cast<std::size_t>(index - 1)] = 1;
  return m;
}

void Monomial::check_same_vars(const Monomial& other) const {
  if (vars() != other.vars()) {
    throw std::invalid_argument("ambient variable counts differ: " +
                                std::to_string(vars()) + " vs " +
                                std::to_string(other.vars()));
  }
}

Exponent Monomial::exponent(int index) const {
  if (index < 1 || index > vars()) {
    throw std::invalid_argument("variable index out of range");
  }
  return exps_[static_cast<std::size_t>(index - 1)];
}

Exponent Monomial::degree() const {
  Exponent d = 0;
  for (Exponent e : exps_) d = checked_add(d, e);
  return d;
}

bool Monomial::is_one() const {
  for (Exponent e : exps_) {
    if (e != 0) return false;
  }
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  check_same_vars(other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  check_same_vars(other);
  std::vector<Exponent> r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r[i] = checked_add(exps_[i], other.exps_[i]);
  }
  return Monomial(std::move(r));
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_same_vars(other);
  std::vector<Exponent> r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r[i] = exps_[i] > other.exps_[i] ? exps_[i] : other.exps_[i];
  }
  return Monomial(std::move(r));
}

Monomial Monomial::gcd(const Monomial& other) const {
  check_same_vars(other);
  std::vector<Exponent> r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r[i] = exps_[i] < other.exps_[i] ? exps_[i] : other.exps_[i];
  }
  return Monomial(std::move(r));
}

Monomial Monomial::quotient_by(const Monomial& divisor) const {
  check_same_vars(divisor);
  std::vector<Exponent> r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (divisor.exps_[i] > exps_[i]) {
      throw std::invalid_argument("quotient_by: divisor does not divide");
    }
    r[i] = exps_[i] - divisor.exps_[i];
  }
  return Monomial(std::move(r));
}

Monomial Monomial::colon_by(const Monomial& other) const {
  return quotient_by(gcd(other));
}

Monomial Monomial::exchanged(int gain, int lose) const {
  if (exponent(lose) < 1) {
    throw std::invalid_argument("exchanged: x" + std::to_string(lose) +
                                " does not divide the monomial");
  }
  Monomial r = *this;
  r.exps_[static_cast<std::size_t>(lose - 1)] -= 1;
  r.exps_[static_cast<std::size_t>(gain - 1)] =
      checked_add(r.exps_[static_cast<std::size_t>(gain - 1)], 1);
  return r;
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t mask = 0;
  std::size_t lim = exps_.size() < 64 ? exps_.size() : 64;
  for (std::size_t i = 0; i < lim; ++i) {
    if (exps_[i] > 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) s.push_back(static_cast<int>(i) + 1);
  }
  return s;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  Exponent da = a.degree();
  Exponent db = b.degree();
  if (da != db) return da < db;
  // within a degree, lexicographically greater exponent sequence first
  return a.exponents() > b.exponents();
}

}  // namespace midk
