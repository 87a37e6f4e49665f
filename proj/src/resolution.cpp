#include "midk/resolution.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "midk/errors.hpp"

namespace midk {

int BettiTable::max_index() const {
  int top = -1;
  for (const auto& [key, rank] : entries) {
    if (rank != 0 && key.first > top) top = key.first;
  }
  return top;
}

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Distinct lcms of non-empty generator subsets, canonically sorted.
std::vector<Monomial> lcm_closure(const MonomialIdeal& ideal) {
  std::vector<Monomial> closure;
  for (const Monomial& g : ideal.generators()) {
    std::vector<Monomial> next = closure;
    next.push_back(g);
    for (const Monomial& m : closure) next.push_back(m.lcm(g));
    std::sort(next.begin(), next.end(), canonical_less);
    next.erase(std::unique(next.begin(), next.end()), next.end());
    closure = std::move(next);
  }
  return closure;
}

// Rank over GF(p) by row elimination; rows are sparse {column: coefficient}.
int rank_mod_p(std::vector<std::vector<std::pair<int, std::int64_t>>> rows,
               std::int64_t p) {
  std::map<int, std::vector<std::pair<int, std::int64_t>>> pivots;
  int rank = 0;
  for (auto& row : rows) {
    std::map<int, std::int64_t> work;
    for (auto [c, v] : row) {
      const std::int64_t r = ((v % p) + p) % p;
      if (r != 0) work[c] = r;
    }
    while (!work.empty()) {
      const int lead = work.begin()->first;
      auto hit = pivots.find(lead);
      if (hit == pivots.end()) {
        pivots[lead] = {work.begin(), work.end()};
        ++rank;
        break;
      }
      // eliminate the leading entry against the stored pivot row
      std::int64_t inv = 1;
      {
        // modular inverse of the pivot row's leading coefficient (Fermat)
        std::int64_t base = hit->second.front().second;
        std::int64_t exp = p - 2;
        std::int64_t acc = 1;
        base %= p;
        while (exp > 0) {
          if (exp & 1) acc = acc * base % p;
          base = base * base % p;
          exp >>= 1;
        }
        inv = acc;
      }
      const std::int64_t factor = work.begin()->second * inv % p;
      for (auto [c, v] : hit->second) {
        std::int64_t& slot = work[c];
        slot = ((slot - factor * v) % p + p) % p;
        if (slot == 0) work.erase(c);
      }
    }
  }
  return rank;
}

// Largest support size the dense face enumeration will attempt.
constexpr int kMaxKoszulSupport = 22;

// Reduced homology ranks of the Koszul complex at one multidegree:
// hom[i] = dim H~_{i-1}{sigma : alpha / x^sigma in I}, over GF(p).
std::vector<std::pair<int, std::int64_t>> koszul_homology(
    const MonomialIdeal& ideal, const Monomial& alpha, std::int64_t p) {
  const std::vector<int> supp = alpha.support();
  const int s = static_cast<int>(supp.size());
  if (s > kMaxKoszulSupport) {
    throw bound_error("betti_table: multidegree support size " +
                      std::to_string(s) + " exceeds " +
                      std::to_string(kMaxKoszulSupport));
  }
  // faces by size; each face is a bitmask over supp positions
  std::vector<std::vector<std::uint32_t>> faces(
      static_cast<std::size_t>(s) + 1);
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    std::vector<Exponent> exps = alpha.exponents();
    for (int t = 0; t < s; ++t) {
      if ((mask >> t) & 1u) {
        exps[static_cast<std::size_t>(supp[static_cast<std::size_t>(t)] - 1)] -=
            1;
      }
    }
    if (ideal.contains(Monomial(std::move(exps)))) {
      faces[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(
          mask);
    }
  }
  if (faces[0].empty()) return {};  // alpha itself is not in I

  // boundary rank from size-k faces to size-(k-1) faces
  std::vector<int> boundary_rank(static_cast<std::size_t>(s) + 2, 0);
  for (int k = 1; k <= s; ++k) {
    const auto& src = faces[static_cast<std::size_t>(k)];
    const auto& dst = faces[static_cast<std::size_t>(k - 1)];
    if (src.empty() || dst.empty()) continue;
    std::map<std::uint32_t, int> dst_index;
    for (std::size_t i = 0; i < dst.size(); ++i) {
      dst_index[dst[i]] = static_cast<int>(i);
    }
    std::vector<std::vector<std::pair<int, std::int64_t>>> rows;
    rows.reserve(src.size());
    for (std::uint32_t f : src) {
      std::vector<std::pair<int, std::int64_t>> row;
      int sign = 1;
      for (int t = 0; t < s; ++t) {
        if ((f >> t) & 1u) {
          row.emplace_back(dst_index.at(f & ~(1u << t)), sign);
          sign = -sign;
        }
      }
      std::sort(row.begin(), row.end());
      rows.push_back(std::move(row));
    }
    boundary_rank[static_cast<std::size_t>(k)] = rank_mod_p(std::move(rows), p);
  }

  std::vector<std::pair<int, std::int64_t>> hom;
  for (int k = 0; k <= s; ++k) {
    const std::int64_t dim = static_cast<std::int64_t>(
        faces[static_cast<std::size_t>(k)].size());
    if (dim == 0) continue;
    // H~_{k-1} = C_k minus ranks of the boundaries in and out
    const std::int64_t h = dim - boundary_rank[static_cast<std::size_t>(k)] -
                           boundary_rank[static_cast<std::size_t>(k + 1)];
    if (h != 0) hom.emplace_back(k, h);
  }
  return hom;
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& ideal, std::int64_t p,
                       const Bounds& bounds, Exec exec) {
  if (!is_prime(p)) {
    throw std::invalid_argument("betti_table: " + std::to_string(p) +
                                " is not prime");
  }
  if (ideal.size() > bounds.betti_generators) {
    throw bound_error("betti_table: " + std::to_string(ideal.size()) +
                      " generators exceed betti_generators " +
                      std::to_string(bounds.betti_generators));
  }
  BettiTable table;
  table.prime = p;
  if (ideal.is_zero()) return table;

  const std::vector<Monomial> closure = lcm_closure(ideal);
  // validate up front: exceptions cannot leave the parallel region
  for (const Monomial& alpha : closure) {
    if (static_cast<int>(alpha.support().size()) > kMaxKoszulSupport) {
      throw bound_error("betti_table: multidegree support size " +
                        std::to_string(alpha.support().size()) + " exceeds " +
                        std::to_string(kMaxKoszulSupport));
    }
  }
  std::vector<std::vector<std::pair<int, std::int64_t>>> results(
      closure.size());
#pragma omp parallel for schedule(dynamic, 4) if (exec == Exec::parallel)
  for (std::size_t a = 0; a < closure.size(); ++a) {
    results[a] = koszul_homology(ideal, closure[a], p);
  }
  for (std::size_t a = 0; a < closure.size(); ++a) {
    const Exponent j = closure[a].degree();
    for (const auto& [i, h] : results[a]) {
      table.entries[{i, j}] += h;
    }
  }
  return table;
}

BettiTable betti_table_checked(const MonomialIdeal& ideal,
                               const Bounds& bounds, Exec exec) {
  BettiTable primary = betti_table(ideal, kBettiPrimary, bounds, exec);
  BettiTable cross = betti_table(ideal, kBettiCrossCheck, bounds, exec);
  if (primary.entries != cross.entries) {
    throw characteristic_dependence_error(
        "betti_table: ranks differ between characteristics " +
        std::to_string(kBettiPrimary) + " and " +
        std::to_string(kBettiCrossCheck));
  }
  return primary;
}

bool has_linear_resolution(const MonomialIdeal& ideal, const Bounds& bounds,
                           Exec exec) {
  const auto d = ideal.equigenerated_degree();
  if (!d) {
    if (ideal.is_zero()) {
      throw std::invalid_argument("has_linear_resolution: zero ideal");
    }
    throw not_equigenerated_error(ideal.min_degree(), ideal.max_degree());
  }
  const BettiTable table = betti_table_checked(ideal, bounds, exec);
  for (const auto& [key, rank] : table.entries) {
    if (rank != 0 && key.second != key.first + *d) return false;
  }
  return true;
}

ComponentwiseResult is_componentwise_linear(const MonomialIdeal& ideal,
                                            const Bounds& bounds, Exec exec) {
  if (ideal.is_zero()) {
    throw std::invalid_argument("is_componentwise_linear: zero ideal");
  }
  ComponentwiseResult result;
  result.linear = true;
  for (Exponent d = ideal.min_degree(); d <= ideal.max_degree(); ++d) {
    const MonomialIdeal comp = component(ideal, d, bounds);
    if (comp.is_zero()) {
      result.components.push_back({d, true, 0});
      continue;
    }
    const bool linear = has_linear_resolution(comp, bounds, exec);
    result.components.push_back({d, linear, comp.size()});
    if (!linear) result.linear = false;
  }
  return result;
}

}  // namespace midk
