#include "midk/linear_quotients.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "midk/errors.hpp"

namespace midk {

namespace {

bool is_permutation_of_generators(const MonomialIdeal& ideal,
                                  const std::vector<Monomial>& ord) {
  if (ord.size() != ideal.size()) return false;
  std::vector<Monomial> sorted = ord;
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  return sorted == ideal.generators();
}

}  // namespace

AdmissibleCertificate is_admissible_order(const MonomialIdeal& ideal,
                                          const std::vector<Monomial>& ord) {
  if (!is_permutation_of_generators(ideal, ord)) {
    throw std::invalid_argument(
        "is_admissible_order: sequence is not a permutation of G(I)");
  }
  for (std::size_t l = 1; l < ord.size(); ++l) {
    std::vector<Monomial> colon;
    colon.reserve(l);
    for (std::size_t k = 0; k < l; ++k) {
      colon.push_back(ord[k].colon_by(ord[l]));
    }
    for (const Monomial& c : minimalize(std::move(colon), Exec::serial)) {
      if (c.degree() >= 2) {
        return {AdmissibleViolation{l + 1, c}};
      }
    }
  }
  return {};
}

namespace {

// Core of the recursion, on generator lists in canonical order.
// Returns the obstruction monomial on failure (relative to the local scale).
std::optional<Monomial> ndep_order_rec(int nvars, std::vector<Monomial> gens,
                                       std::vector<Monomial>& out) {
  // (a) strip the common factor
  Monomial common = gens.front();
  for (std::size_t i = 1; i < gens.size(); ++i) {
    common = common.gcd(gens[i]);
  }
  if (!common.is_one()) {
    std::vector<Monomial> stripped;
    stripped.reserve(gens.size());
    for (const Monomial& g : gens) stripped.push_back(g.quotient_by(common));
    std::vector<Monomial> sub;
    if (auto obstruction = ndep_order_rec(nvars, std::move(stripped), sub)) {
      return obstruction->times(common);
    }
    for (const Monomial& g : sub) out.push_back(g.times(common));
    return std::nullopt;
  }
  // (b) principal base case
  if (gens.size() == 1) {
    out.push_back(gens.front());
    return std::nullopt;
  }
  // (c) least variable supported in a minimum-degree generator
  const Exponent d = gens.front().degree();  // canonical order: degree asc
  int p = 0;
  for (int v = 1; v <= nvars && p == 0; ++v) {
    for (const Monomial& g : gens) {
      if (g.degree() > d) break;
      if (g.exponent(v) > 0) {
        p = v;
        break;
      }
    }
  }
  // (d) split off the part divisible by x_p
  std::vector<Monomial> divisible;
  std::vector<Monomial> free_part;
  for (const Monomial& g : gens) {
    (g.exponent(p) > 0 ? divisible : free_part).push_back(g);
  }
  std::vector<Monomial> quotients;  // G(I_1)
  quotients.reserve(divisible.size());
  const Monomial xp = Monomial::variable(nvars, p);
  for (const Monomial& g : divisible) quotients.push_back(g.quotient_by(xp));
  const MonomialIdeal part_one =
      MonomialIdeal::from_generators(nvars, quotients);
  // (e) the containment I_2 <= I_1 that the dual exchange property forces
  for (const Monomial& v : free_part) {
    if (!part_one.contains(v)) return v;
  }
  // (f)+(g): emit the divisible part first, then the rest
  if (auto obstruction = ndep_order_rec(nvars, std::move(divisible), out)) {
    return obstruction;
  }
  if (free_part.empty()) return std::nullopt;
  return ndep_order_rec(nvars, std::move(free_part), out);
}

}  // namespace

NdepOrderResult ndep_admissible_order(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) {
    throw std::invalid_argument("ndep_admissible_order: zero ideal");
  }
  NdepOrderResult result;
  result.obstruction =
      ndep_order_rec(ideal.vars(), ideal.generators(), result.order);
  if (result.obstruction) result.order.clear();
  return result;
}

std::optional<std::vector<Monomial>> search_linear_quotients(
    const MonomialIdeal& ideal, const Bounds& bounds) {
  if (ideal.is_zero()) {
    throw std::invalid_argument("search_linear_quotients: zero ideal");
  }
  const std::size_t m = ideal.size();
  if (m > bounds.lq_generators || m > 31) {
    throw bound_error("search_linear_quotients: " + std::to_string(m) +
                      " generators exceed lq_generators " +
                      std::to_string(bounds.lq_generators));
  }
  const auto& gens = ideal.generators();

  // Whether the colon by gens[next] of the ideal generated by the chosen
  // prefix set is generated by variables. Depends only on the set.
  const auto extension_ok = [&](const std::vector<int>& chosen, int next) {
    // variables that occur alone as a colon generator
    std::vector<char> linear(static_cast<std::size_t>(ideal.vars()) + 1, 0);
    std::vector<Monomial> quotients;
    quotients.reserve(chosen.size());
    for (int k : chosen) {
      Monomial q = gens[static_cast<std::size_t>(k)].colon_by(
          gens[static_cast<std::size_t>(next)]);
      if (q.degree() == 1) linear[static_cast<std::size_t>(q.support()[0])] = 1;
      quotients.push_back(std::move(q));
    }
    for (const Monomial& q : quotients) {
      if (q.degree() <= 1) continue;
      bool divided = false;
      for (int v : q.support()) {
        if (linear[static_cast<std::size_t>(v)]) {
          divided = true;
          break;
        }
      }
      if (!divided) return false;
    }
    return true;
  };

  std::unordered_set<std::uint32_t> dead;
  std::vector<int> chosen;
  chosen.reserve(m);

  const auto dfs = [&](auto&& self, std::uint32_t mask) -> bool {
    if (chosen.size() == m) return true;
    if (dead.contains(mask)) return false;
    for (std::size_t k = 0; k < m; ++k) {
      if ((mask >> k) & 1u) continue;
      if (!extension_ok(chosen, static_cast<int>(k))) continue;
      chosen.push_back(static_cast<int>(k));
      if (self(self, mask | (1u << k))) return true;
      chosen.pop_back();
    }
    dead.insert(mask);
    return false;
  };

  if (!dfs(dfs, 0)) return std::nullopt;
  std::vector<Monomial> order;
  order.reserve(m);
  for (int k : chosen) order.push_back(gens[static_cast<std::size_t>(k)]);
  return order;
}

}  // namespace midk
