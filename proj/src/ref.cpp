#include "midk/ref.hpp"

#include <algorithm>
#include <stdexcept>

#include "midk/errors.hpp"

namespace midk::ref {

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  for (const Monomial& g : ideal.generators()) {
    if (g.divides(m)) return true;
  }
  return false;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const Monomial& g : gens) {
    bool minimal = true;
    for (const Monomial& h : gens) {
      if (h != g && h.divides(g)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(g);
  }
  return out;
}

ExchangeCertificate check_ndep(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) {
    throw std::invalid_argument("check_ndep: zero ideal");
  }
  const auto& gens = ideal.generators();
  const int n = ideal.vars();
  for (const Monomial& v : gens) {
    for (const Monomial& u : gens) {
      if (u == v || u.degree() > v.degree()) continue;
      for (int i = 1; i <= n; ++i) {
        if (v.exponent(i) >= u.exponent(i)) continue;
        ExchangeViolation w{u, v, i, {}};
        bool repaired = false;
        for (int j = 1; j <= n && !repaired; ++j) {
          if (v.exponent(j) > u.exponent(j)) {
            Monomial candidate = v.exchanged(i, j);
            if (contains(ideal, candidate)) {
              repaired = true;
            } else {
              w.tried.push_back({j, std::move(candidate)});
            }
          }
        }
        if (!repaired) return {std::move(w)};
      }
    }
  }
  return {};
}

ExchangeCertificate check_polymatroidal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) {
    throw std::invalid_argument("check_polymatroidal: zero ideal");
  }
  if (!ideal.equigenerated_degree()) {
    throw not_equigenerated_error(ideal.min_degree(), ideal.max_degree());
  }
  const auto& gens = ideal.generators();
  const int n = ideal.vars();
  for (const Monomial& u : gens) {
    for (const Monomial& v : gens) {
      if (u == v) continue;
      for (int i = 1; i <= n; ++i) {
        if (u.exponent(i) <= v.exponent(i)) continue;
        ExchangeViolation w{u, v, i, {}};
        bool repaired = false;
        for (int j = 1; j <= n && !repaired; ++j) {
          if (u.exponent(j) < v.exponent(j)) {
            Monomial candidate = u.exchanged(j, i);
            if (contains(ideal, candidate)) {
              repaired = true;
            } else {
              w.tried.push_back({j, std::move(candidate)});
            }
          }
        }
        if (!repaired) return {std::move(w)};
      }
    }
  }
  return {};
}

ExchangeCertificate check_weakly_polymatroidal(const MonomialIdeal& ideal,
                                               const VariableOrder& ord) {
  if (ideal.is_zero()) {
    throw std::invalid_argument("check_weakly_polymatroidal: zero ideal");
  }
  if (ord.nvars() != ideal.vars()) {
    throw std::invalid_argument(
        "check_weakly_polymatroidal: order has wrong variable count");
  }
  const auto& gens = ideal.generators();
  const int n = ideal.vars();
  for (const Monomial& v : gens) {
    for (const Monomial& u : gens) {
      if (u == v) continue;
      int t = 0;
      for (int p = 1; p <= n; ++p) {
        const int x = ord.variable_at(p);
        if (u.exponent(x) != v.exponent(x)) {
          t = u.exponent(x) > v.exponent(x) ? p : -p;
          break;
        }
      }
      if (t <= 0) continue;  // equal or v >_lex u
      const int xt = ord.variable_at(t);
      ExchangeViolation w{u, v, t, {}};
      bool repaired = false;
      for (int p = t + 1; p <= n && !repaired; ++p) {
        const int xj = ord.variable_at(p);
        if (v.exponent(xj) >= 1) {
          Monomial candidate = v.exchanged(xt, xj);
          if (contains(ideal, candidate)) {
            repaired = true;
          } else {
            w.tried.push_back({p, std::move(candidate)});
          }
        }
      }
      if (!repaired) return {std::move(w)};
    }
  }
  return {};
}

}  // namespace midk::ref
