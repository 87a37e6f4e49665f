#include "midk/ideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "midk/errors.hpp"

namespace midk {

namespace {

void check_ambient(int nvars, const Monomial& m) {
  if (m.vars() != nvars) {
    throw std::invalid_argument("generator has " + std::to_string(m.vars()) +
                                " variables, ideal has " +
                                std::to_string(nvars));
  }
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens, Exec exec) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const std::size_t m = gens.size();
  std::vector<char> keep(m, 1);
  // A proper divisor has strictly smaller degree, so it sits earlier in the
  // canonical (degree-ascending) order: only j < i can eliminate i.
  std::vector<Exponent> degs(m);
  for (std::size_t i = 0; i < m; ++i) degs[i] = gens[i].degree();
  std::vector<std::uint64_t> masks(m);
  for (std::size_t i = 0; i < m; ++i) masks[i] = gens[i].support_mask();

#pragma omp parallel for schedule(dynamic, 32) if (exec == Exec::parallel)
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i && degs[j] < degs[i]; ++j) {
      if ((masks[j] & ~masks[i]) != 0) continue;
      if (gens[j].divides(gens[i])) {
        keep[i] = 0;
        break;
      }
    }
  }
  std::vector<Monomial> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (keep[i]) out.push_back(std::move(gens[i]));
  }
  return out;
}

MonomialIdeal MonomialIdeal::from_generators(int nvars,
                                             std::vector<Monomial> gens) {
  if (nvars < 0) throw std::invalid_argument("negative variable count");
  for (const Monomial& g : gens) check_ambient(nvars, g);
  MonomialIdeal ideal;
  ideal.nvars_ = nvars;
  ideal.gens_ = minimalize(std::move(gens));
  ideal.masks_.reserve(ideal.gens_.size());
  ideal.degs_.reserve(ideal.gens_.size());
  for (const Monomial& g : ideal.gens_) {
    ideal.masks_.push_back(g.support_mask());
    ideal.degs_.push_back(g.degree());
  }
  return ideal;
}

MonomialIdeal MonomialIdeal::zero(int nvars) {
  return from_generators(nvars, {});
}

MonomialIdeal MonomialIdeal::unit(int nvars) {
  return from_generators(nvars, {Monomial(nvars)});
}

bool MonomialIdeal::contains(const Monomial& m) const {
  check_ambient(nvars_, m);
  const Exponent dm = m.degree();
  const std::uint64_t mask = m.support_mask();
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (degs_[i] > dm) break;  // canonical order is degree-ascending
    if ((masks_[i] & ~mask) != 0) continue;
    if (gens_[i].divides(m)) return true;
  }
  return false;
}

Exponent MonomialIdeal::min_degree() const {
  if (is_zero()) throw std::invalid_argument("zero ideal has no generators");
  return gens_.front().degree();
}

Exponent MonomialIdeal::max_degree() const {
  if (is_zero()) throw std::invalid_argument("zero ideal has no generators");
  return gens_.back().degree();
}

std::optional<Exponent> MonomialIdeal::equigenerated_degree() const {
  if (is_zero()) return std::nullopt;
  Exponent d = gens_.front().degree();
  return gens_.back().degree() == d ? std::optional<Exponent>(d)
                                    : std::nullopt;
}

std::vector<int> MonomialIdeal::support() const {
  std::set<int> s;
  for (const Monomial& g : gens_) {
    for (int v : g.support()) s.insert(v);
  }
  return {s.begin(), s.end()};
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b,
                        const Bounds& bounds, Exec exec) {
  if (a.vars() != b.vars()) {
    throw std::invalid_argument("intersect: ambient variable counts differ");
  }
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.vars());
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(na) * static_cast<std::uint64_t>(nb);
  if (pairs > bounds.intersect_pairs) {
    throw bound_error("intersect: generator pair count " +
                      std::to_string(pairs) + " exceeds intersect_pairs " +
                      std::to_string(bounds.intersect_pairs));
  }
  std::vector<Monomial> lcms(pairs, Monomial(a.vars()));
#pragma omp parallel for collapse(2) schedule(static) \
    if (exec == Exec::parallel)
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      lcms[i * nb + j] = a.generators()[i].lcm(b.generators()[j]);
    }
  }
  return MonomialIdeal::from_generators(a.vars(), std::move(lcms));
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b,
                       Exec exec) {
  if (a.vars() != b.vars()) {
    throw std::invalid_argument("multiply: ambient variable counts differ");
  }
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.vars());
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  std::vector<Monomial> prods(na * nb, Monomial(a.vars()));
#pragma omp parallel for collapse(2) schedule(static) \
    if (exec == Exec::parallel)
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      prods[i * nb + j] = a.generators()[i].times(b.generators()[j]);
    }
  }
  return MonomialIdeal::from_generators(a.vars(), std::move(prods));
}

MonomialIdeal power(const MonomialIdeal& a, int k, Exec exec) {
  if (k < 1) throw std::invalid_argument("power: k must be >= 1");
  MonomialIdeal r = a;
  for (int i = 1; i < k; ++i) r = multiply(r, a, exec);
  return r;
}

namespace {

void veronese_rec(const std::vector<int>& vars, std::size_t pos, Exponent rem,
                  std::vector<Exponent>& cur, std::vector<Monomial>& out) {
  if (pos + 1 == vars.size()) {
    cur[static_cast<std::size_t>(vars[pos] - 1)] = rem;
    out.emplace_back(cur);
    cur[static_cast<std::size_t>(vars[pos] - 1)] = 0;
    return;
  }
  for (Exponent e = 0; e <= rem; ++e) {
    cur[static_cast<std::size_t>(vars[pos] - 1)] = e;
    veronese_rec(vars, pos + 1, rem - e, cur, out);
  }
  cur[static_cast<std::size_t>(vars[pos] - 1)] = 0;
}

}  // namespace

MonomialIdeal veronese(const std::vector<int>& vars, Exponent a, int nvars) {
  if (vars.empty()) {
    throw std::invalid_argument("veronese: variable set must be non-empty");
  }
  if (a < 1) throw std::invalid_argument("veronese: power must be >= 1");
  for (int v : vars) {
    if (v < 1 || v > nvars) {
      throw std::invalid_argument("veronese: variable index " +
                                  std::to_string(v) + " out of range");
    }
  }
  std::vector<int> sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Monomial> out;
  std::vector<Exponent> cur(static_cast<std::size_t>(nvars), 0);
  veronese_rec(sorted, 0, a, cur, out);
  return MonomialIdeal::from_generators(nvars, std::move(out));
}

MonomialIdeal maximal_ideal(int nvars) {
  std::vector<int> all(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return veronese(all, 1, nvars);
}

namespace {

void degree_monomials_rec(int nvars, std::size_t pos, Exponent rem,
                          std::vector<Exponent>& cur,
                          std::vector<Monomial>& out) {
  if (pos + 1 == static_cast<std::size_t>(nvars)) {
    cur[pos] = rem;
    out.emplace_back(cur);
    cur[pos] = 0;
    return;
  }
  for (Exponent e = 0; e <= rem; ++e) {
    cur[pos] = e;
    degree_monomials_rec(nvars, pos + 1, rem - e, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

MonomialIdeal component(const MonomialIdeal& ideal, Exponent d,
                        const Bounds& bounds) {
  if (d < 0) throw std::invalid_argument("component: degree must be >= 0");
  if (ideal.is_zero()) return MonomialIdeal::zero(ideal.vars());
  const Exponent mindeg = ideal.min_degree();
  if (d < mindeg) return MonomialIdeal::zero(ideal.vars());
  if (d - mindeg > bounds.component_window) {
    throw bound_error("component: window " + std::to_string(d - mindeg) +
                      " exceeds component_window " +
                      std::to_string(bounds.component_window));
  }
  if (ideal.vars() == 0) return MonomialIdeal::unit(0);
  std::vector<Monomial> out;
  for (const Monomial& g : ideal.generators()) {
    const Exponent k = d - g.degree();
    if (k < 0) continue;
    if (k == 0) {
      out.push_back(g);
      continue;
    }
    std::vector<Monomial> cofactors;
    std::vector<Exponent> cur(static_cast<std::size_t>(ideal.vars()), 0);
    degree_monomials_rec(ideal.vars(), 0, k, cur, cofactors);
    for (const Monomial& z : cofactors) out.push_back(g.times(z));
  }
  return MonomialIdeal::from_generators(ideal.vars(), std::move(out));
}

MonomialIdeal colon_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  check_ambient(ideal.vars(), m);
  std::vector<Monomial> out;
  out.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) out.push_back(g.colon_by(m));
  return MonomialIdeal::from_generators(ideal.vars(), std::move(out));
}

}  // namespace midk
