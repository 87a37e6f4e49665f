#include "midk/exchange.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "midk/errors.hpp"

namespace midk {

VariableOrder VariableOrder::descending(std::vector<int> vars) {
  const int n = static_cast<int>(vars.size());
  std::vector<int> pos(static_cast<std::size_t>(n), 0);
  for (int p = 0; p < n; ++p) {
    const int v = vars[static_cast<std::size_t>(p)];
    if (v < 1 || v > n || pos[static_cast<std::size_t>(v - 1)] != 0) {
      throw std::invalid_argument(
          "variable order is not a permutation of 1.." + std::to_string(n));
    }
    pos[static_cast<std::size_t>(v - 1)] = p + 1;
  }
  VariableOrder ord;
  ord.seq_ = std::move(vars);
  ord.pos_ = std::move(pos);
  return ord;
}

VariableOrder VariableOrder::natural(int nvars) {
  std::vector<int> seq(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) seq[static_cast<std::size_t>(i)] = i + 1;
  return descending(std::move(seq));
}

namespace {

// ---- non-pure dual exchange -------------------------------------------

// First i (ascending) with deg_{x_i}(v) < deg_{x_i}(u) for which no j with
// deg_{x_j}(v) > deg_{x_j}(u) repairs v; 0 when the pair is fine.
int ndep_pair_pivot(const MonomialIdeal& ideal, const Monomial& u,
                    const Monomial& v) {
  const int n = ideal.vars();
  for (int i = 1; i <= n; ++i) {
    if (v.exponent(i) >= u.exponent(i)) continue;
    bool repaired = false;
    for (int j = 1; j <= n; ++j) {
      if (v.exponent(j) > u.exponent(j) &&
          ideal.contains(v.exchanged(i, j))) {
        repaired = true;
        break;
      }
    }
    if (!repaired) return i;
  }
  return 0;
}

ExchangeViolation ndep_violation_at(const MonomialIdeal& ideal,
                                    const Monomial& u, const Monomial& v,
                                    int pivot) {
  ExchangeViolation w{u, v, pivot, {}};
  for (int j = 1; j <= ideal.vars(); ++j) {
    if (v.exponent(j) > u.exponent(j)) {
      w.tried.push_back({j, v.exchanged(pivot, j)});
    }
  }
  return w;
}

// ---- symmetric (polymatroidal) exchange --------------------------------

int poly_pair_pivot(const MonomialIdeal& ideal, const Monomial& u,
                    const Monomial& v) {
  const int n = ideal.vars();
  for (int i = 1; i <= n; ++i) {
    if (u.exponent(i) <= v.exponent(i)) continue;
    bool repaired = false;
    for (int j = 1; j <= n; ++j) {
      if (u.exponent(j) < v.exponent(j) &&
          ideal.contains(u.exchanged(j, i))) {
        repaired = true;
        break;
      }
    }
    if (!repaired) return i;
  }
  return 0;
}

ExchangeViolation poly_violation_at(const MonomialIdeal& ideal,
                                    const Monomial& u, const Monomial& v,
                                    int pivot) {
  ExchangeViolation w{u, v, pivot, {}};
  for (int j = 1; j <= ideal.vars(); ++j) {
    if (u.exponent(j) < v.exponent(j)) {
      w.tried.push_back({j, u.exchanged(j, pivot)});
    }
  }
  return w;
}

// ---- weak polymatroidality ----------------------------------------------

// +1 / -1 / 0 comparison of a and b in the pure lex order induced by ord.
int lex_compare(const Monomial& a, const Monomial& b,
                const VariableOrder& ord) {
  for (int x : ord.sequence()) {
    const Exponent ea = a.exponent(x);
    const Exponent eb = b.exponent(x);
    if (ea != eb) return ea > eb ? 1 : -1;
  }
  return 0;
}

// For u >_lex v: order position t of the first differing variable; 0 when
// some x_{i_j} below x_{i_t} divides v and x_{i_t}(v/x_{i_j}) lies in I.
int weakly_pair_pivot(const MonomialIdeal& ideal, const VariableOrder& ord,
                      const Monomial& u, const Monomial& v) {
  const int n = ord.nvars();
  int t = 0;
  for (int p = 1; p <= n; ++p) {
    if (u.exponent(ord.variable_at(p)) != v.exponent(ord.variable_at(p))) {
      t = p;
      break;
    }
  }
  const int xt = ord.variable_at(t);
  for (int p = t + 1; p <= n; ++p) {
    const int xj = ord.variable_at(p);
    if (v.exponent(xj) >= 1 && ideal.contains(v.exchanged(xt, xj))) {
      return 0;
    }
  }
  return t;
}

ExchangeViolation weakly_violation_at(const VariableOrder& ord,
                                      const Monomial& u, const Monomial& v,
                                      int t) {
  ExchangeViolation w{u, v, t, {}};
  const int xt = ord.variable_at(t);
  for (int p = t + 1; p <= ord.nvars(); ++p) {
    const int xj = ord.variable_at(p);
    if (v.exponent(xj) >= 1) {
      w.tried.push_back({p, v.exchanged(xt, xj)});
    }
  }
  return w;
}

constexpr std::size_t kNoRank = static_cast<std::size_t>(-1);

// Minimum rank in [0, count) at which test() reports a hit. The parallel
// path reduces with an atomic min, so the winner matches the serial scan.
template <typename Test>
std::size_t min_hit_rank(std::size_t count, Exec exec, const Test& test) {
  if (exec == Exec::serial) {
    for (std::size_t r = 0; r < count; ++r) {
      if (test(r)) return r;
    }
    return kNoRank;
  }
  std::atomic<std::size_t> best{kNoRank};
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t r = 0; r < count; ++r) {
    if (r >= best.load(std::memory_order_relaxed)) continue;
    if (test(r)) {
      std::size_t cur = best.load(std::memory_order_relaxed);
      while (r < cur && !best.compare_exchange_weak(cur, r)) {
      }
    }
  }
  return best.load();
}

}  // namespace

ExchangeCertificate check_ndep(const MonomialIdeal& ideal, Exec exec) {
  if (ideal.is_zero()) {
    throw std::invalid_argument("check_ndep: zero ideal");
  }
  const auto& gens = ideal.generators();
  const std::size_t m = gens.size();
  // The generator being repaired (v) scans the outer loop.
  const std::size_t rank = min_hit_rank(
      m * m, exec, [&](std::size_t r) {
        const Monomial& v = gens[r / m];
        const Monomial& u = gens[r % m];
        if (&u == &v || u.degree() > v.degree()) return false;
        return ndep_pair_pivot(ideal, u, v) != 0;
      });
  if (rank == kNoRank) return {};
  const Monomial& v = gens[rank / m];
  const Monomial& u = gens[rank % m];
  return {ndep_violation_at(ideal, u, v, ndep_pair_pivot(ideal, u, v))};
}

ExchangeCertificate check_polymatroidal(const MonomialIdeal& ideal,
                                        Exec exec) {
  if (ideal.is_zero()) {
    throw std::invalid_argument("check_polymatroidal: zero ideal");
  }
  if (!ideal.equigenerated_degree()) {
    throw not_equigenerated_error(ideal.min_degree(), ideal.max_degree());
  }
  const auto& gens = ideal.generators();
  const std::size_t m = gens.size();
  // Here the exchange modifies u, so u scans the outer loop.
  const std::size_t rank = min_hit_rank(
      m * m, exec, [&](std::size_t r) {
        const Monomial& u = gens[r / m];
        const Monomial& v = gens[r % m];
        if (&u == &v) return false;
        return poly_pair_pivot(ideal, u, v) != 0;
      });
  if (rank == kNoRank) return {};
  const Monomial& u = gens[rank / m];
  const Monomial& v = gens[rank % m];
  return {poly_violation_at(ideal, u, v, poly_pair_pivot(ideal, u, v))};
}

ExchangeCertificate check_weakly_polymatroidal(const MonomialIdeal& ideal,
                                               const VariableOrder& ord,
                                               Exec exec) {
  if (ideal.is_zero()) {
    throw std::invalid_argument("check_weakly_polymatroidal: zero ideal");
  }
  if (ord.nvars() != ideal.vars()) {
    throw std::invalid_argument(
        "check_weakly_polymatroidal: order has wrong variable count");
  }
  const auto& gens = ideal.generators();
  const std::size_t m = gens.size();
  const std::size_t rank = min_hit_rank(
      m * m, exec, [&](std::size_t r) {
        const Monomial& v = gens[r / m];
        const Monomial& u = gens[r % m];
        if (&u == &v || lex_compare(u, v, ord) <= 0) return false;
        return weakly_pair_pivot(ideal, ord, u, v) != 0;
      });
  if (rank == kNoRank) return {};
  const Monomial& v = gens[rank / m];
  const Monomial& u = gens[rank % m];
  return {weakly_violation_at(ord, u, v,
                              weakly_pair_pivot(ideal, ord, u, v))};
}

WeaklyOrderSearch search_weakly_polymatroidal_order(const MonomialIdeal& ideal,
                                                    const Bounds& bounds,
                                                    Exec exec) {
  if (ideal.is_zero()) {
    throw std::invalid_argument(
        "search_weakly_polymatroidal_order: zero ideal");
  }
  const std::vector<int> supp = ideal.support();
  if (supp.size() > bounds.weakly_search_support) {
    throw bound_error(
        "search_weakly_polymatroidal_order: support size " +
        std::to_string(supp.size()) + " exceeds weakly_search_support " +
        std::to_string(bounds.weakly_search_support));
  }
  std::vector<int> rest;
  {
    std::vector<char> in_supp(static_cast<std::size_t>(ideal.vars()) + 1, 0);
    for (int v : supp) in_supp[static_cast<std::size_t>(v)] = 1;
    for (int v = 1; v <= ideal.vars(); ++v) {
      if (!in_supp[static_cast<std::size_t>(v)]) rest.push_back(v);
    }
  }
  // All support permutations in lexicographic order, non-support appended.
  std::vector<VariableOrder> orders;
  std::vector<int> perm = supp;
  do {
    std::vector<int> seq = perm;
    seq.insert(seq.end(), rest.begin(), rest.end());
    orders.push_back(VariableOrder::descending(std::move(seq)));
  } while (std::next_permutation(perm.begin(), perm.end()));

  const std::size_t count = orders.size();
  std::vector<std::optional<ExchangeViolation>> failures(count);
  const std::size_t rank = min_hit_rank(count, exec, [&](std::size_t r) {
    const ExchangeCertificate cert =
        check_weakly_polymatroidal(ideal, orders[r], Exec::serial);
    if (cert.holds()) return true;
    failures[r] = *cert.violation;
    return false;
  });

  WeaklyOrderSearch out;
  if (rank != kNoRank) {
    out.order = orders[rank];
    out.orders_tried = rank + 1;
    return out;
  }
  out.orders_tried = count;
  out.failures.reserve(count);
  for (std::size_t r = 0; r < count; ++r) {
    // A rank can only lack its certificate if some earlier rank succeeded,
    // which the found() branch already handled.
    out.failures.emplace_back(orders[r], *failures[r]);
  }
  return out;
}

std::optional<ExchangeViolation> make_ndep_violation(const MonomialIdeal& ideal,
                                                     const Monomial& u,
                                                     const Monomial& v,
                                                     int pivot) {
  const auto& gens = ideal.generators();
  if (std::find(gens.begin(), gens.end(), u) == gens.end() ||
      std::find(gens.begin(), gens.end(), v) == gens.end()) {
    throw std::invalid_argument("witness monomials must be minimal generators");
  }
  if (u.degree() > v.degree() || v.exponent(pivot) >= u.exponent(pivot)) {
    return std::nullopt;
  }
  for (int j = 1; j <= ideal.vars(); ++j) {
    if (v.exponent(j) > u.exponent(j) &&
        ideal.contains(v.exchanged(pivot, j))) {
      return std::nullopt;
    }
  }
  return ndep_violation_at(ideal, u, v, pivot);
}

std::optional<ExchangeViolation> make_polymatroidal_violation(
    const MonomialIdeal& ideal, const Monomial& u, const Monomial& v,
    int pivot) {
  const auto& gens = ideal.generators();
  if (std::find(gens.begin(), gens.end(), u) == gens.end() ||
      std::find(gens.begin(), gens.end(), v) == gens.end()) {
    throw std::invalid_argument("witness monomials must be minimal generators");
  }
  if (u.exponent(pivot) <= v.exponent(pivot)) return std::nullopt;
  for (int j = 1; j <= ideal.vars(); ++j) {
    if (u.exponent(j) < v.exponent(j) && ideal.contains(u.exchanged(j, pivot))) {
      return std::nullopt;
    }
  }
  return poly_violation_at(ideal, u, v, pivot);
}

std::optional<ExchangeViolation> make_weakly_violation(
    const MonomialIdeal& ideal, const VariableOrder& ord, const Monomial& u,
    const Monomial& v) {
  const auto& gens = ideal.generators();
  if (std::find(gens.begin(), gens.end(), u) == gens.end() ||
      std::find(gens.begin(), gens.end(), v) == gens.end()) {
    throw std::invalid_argument("witness monomials must be minimal generators");
  }
  if (lex_compare(u, v, ord) <= 0) return std::nullopt;
  const int t = weakly_pair_pivot(ideal, ord, u, v);
  if (t == 0) return std::nullopt;
  return weakly_violation_at(ord, u, v, t);
}

namespace {

bool same_violation(const std::optional<ExchangeViolation>& a,
                    const ExchangeViolation& b) {
  return a.has_value() && a->u == b.u && a->v == b.v && a->pivot == b.pivot &&
         a->tried == b.tried;
}

}  // namespace

bool replay_ndep_violation(const MonomialIdeal& ideal,
                           const ExchangeViolation& w) {
  return same_violation(make_ndep_violation(ideal, w.u, w.v, w.pivot), w);
}

bool replay_polymatroidal_violation(const MonomialIdeal& ideal,
                                    const ExchangeViolation& w) {
  return same_violation(make_polymatroidal_violation(ideal, w.u, w.v, w.pivot),
                        w);
}

bool replay_weakly_violation(const MonomialIdeal& ideal,
                             const VariableOrder& ord,
                             const ExchangeViolation& w) {
  const auto rebuilt = make_weakly_violation(ideal, ord, w.u, w.v);
  return same_violation(rebuilt, w);
}

}  // namespace midk
