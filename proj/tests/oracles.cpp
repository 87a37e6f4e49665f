#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "midk/ref.hpp"
#include "midk/render.hpp"

namespace midk::test {

namespace {

void degree_rec(int nvars, std::size_t pos, Exponent rem,
                std::vector<Exponent>& cur, std::vector<Monomial>& out) {
  if (pos + 1 == static_cast<std::size_t>(nvars)) {
    cur[pos] = rem;
    out.emplace_back(cur);
    cur[pos] = 0;
    return;
  }
  for (Exponent e = 0; e <= rem; ++e) {
    cur[pos] = e;
    degree_rec(nvars, pos + 1, rem - e, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, Exponent d) {
  if (nvars == 0) {
    return d == 0 ? std::vector<Monomial>{Monomial(0)} : std::vector<Monomial>{};
  }
  std::vector<Monomial> out;
  std::vector<Exponent> cur(static_cast<std::size_t>(nvars), 0);
  degree_rec(nvars, 0, d, cur, out);
  return out;
}

std::vector<Monomial> monomials_up_to_degree(int nvars, Exponent d) {
  std::vector<Monomial> out;
  for (Exponent k = 0; k <= d; ++k) {
    auto part = monomials_of_degree(nvars, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool naive_member(const std::vector<Monomial>& gens, const Monomial& m) {
  for (const Monomial& g : gens) {
    if (g.divides(m)) return true;
  }
  return false;
}

std::size_t check_intersection_membership(const MonomialIdeal& a,
                                          const MonomialIdeal& b,
                                          const MonomialIdeal& meet) {
  Exponent top = 0;
  for (const Monomial& u : a.generators()) {
    for (const Monomial& v : b.generators()) {
      top = std::max(top, u.lcm(v).degree());
    }
  }
  std::size_t checked = 0;
  for (const Monomial& m : monomials_up_to_degree(a.vars(), top)) {
    const bool both = naive_member(a.generators(), m) &&
                      naive_member(b.generators(), m);
    if (both != naive_member(meet.generators(), m)) {
      throw std::runtime_error("intersection membership mismatch at " +
                               to_string(m));
    }
    ++checked;
  }
  return checked;
}

std::vector<Monomial> brute_component(const MonomialIdeal& ideal, Exponent d) {
  std::vector<Monomial> in_ideal;
  for (const Monomial& m : monomials_of_degree(ideal.vars(), d)) {
    if (naive_member(ideal.generators(), m)) in_ideal.push_back(m);
  }
  return ref::minimalize(std::move(in_ideal));
}

std::int64_t euler_alternating_sum(const MonomialIdeal& ideal, Exponent j) {
  const auto& gens = ideal.generators();
  if (gens.size() > 20) {
    throw std::runtime_error("euler_alternating_sum: too many generators");
  }
  std::int64_t sum = 0;
  for (std::uint32_t mask = 1; mask < (1u << gens.size()); ++mask) {
    Monomial l(ideal.vars());
    int size = 0;
    for (std::size_t t = 0; t < gens.size(); ++t) {
      if ((mask >> t) & 1u) {
        l = l.lcm(gens[t]);
        ++size;
      }
    }
    if (l.degree() == j) sum += (size % 2 == 1) ? 1 : -1;
  }
  return sum;
}

std::vector<CoverVector> brute_minimal_covers(const WeightedHypergraph& h,
                                              int k) {
  const int n = h.vertex_count();
  std::vector<Exponent> box(static_cast<std::size_t>(n), 0);
  for (const WeightedEdge& e : h.edges()) {
    for (int v : e.vertices) {
      box[static_cast<std::size_t>(v - 1)] =
          std::max(box[static_cast<std::size_t>(v - 1)],
                   static_cast<Exponent>(k) * e.weight);
    }
  }
  std::vector<Monomial> covers;
  std::vector<Exponent> c(static_cast<std::size_t>(n), 0);
  const auto rec = [&](auto&& self, std::size_t t) -> void {
    if (t == static_cast<std::size_t>(n)) {
      for (const WeightedEdge& e : h.edges()) {
        Exponent have = 0;
        for (int v : e.vertices) have += c[static_cast<std::size_t>(v - 1)];
        if (have < static_cast<Exponent>(k) * e.weight) return;
      }
      covers.emplace_back(c);
      return;
    }
    for (Exponent e = 0; e <= box[t]; ++e) {
      c[t] = e;
      self(self, t + 1);
    }
    c[t] = 0;
  };
  if (n > 0) {
    rec(rec, 0);
  } else if (h.edges().empty()) {
    covers.emplace_back(c);
  }
  std::vector<CoverVector> out;
  for (const Monomial& m : ref::minimalize(std::move(covers))) {
    out.push_back(m.exponents());
  }
  return out;
}

}  // namespace midk::test
