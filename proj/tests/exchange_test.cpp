#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "generators.hpp"
#include "midk/errors.hpp"
#include "midk/exchange.hpp"
#include "midk/ref.hpp"
#include "midk/render.hpp"

using namespace midk;
using namespace midk::test;

namespace {

MonomialIdeal six_gen() {
  return MonomialIdeal::from_generators(
      3, {Monomial{2, 0, 0}, Monomial{1, 2, 0}, Monomial{1, 1, 1},
          Monomial{0, 2, 1}, Monomial{1, 0, 3}, Monomial{0, 1, 3}});
}

MonomialIdeal three_edge_cover(Exponent w1, Exponent w2, Exponent w3) {
  return intersect(intersect(veronese({1, 2}, w1, 5), veronese({2, 3, 4}, w2, 5)),
                   veronese({4, 5}, w3, 5));
}

}  // namespace

TEST_CASE("variable orders validate") {
  const VariableOrder ord = VariableOrder::descending({2, 1, 3});
  CHECK(ord.variable_at(1) == 2);
  CHECK(ord.position_of(2) == 1);
  CHECK(ord.position_of(3) == 3);
  CHECK(VariableOrder::natural(3).sequence() == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(VariableOrder::descending({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(VariableOrder::descending({1, 4, 2}), std::invalid_argument);
}

TEST_CASE("ndep: six-generator ideal holds, its square does not") {
  CHECK(check_ndep(six_gen()).holds());

  const MonomialIdeal sq = power(six_gen(), 2);
  const ExchangeCertificate cert = check_ndep(sq);
  REQUIRE_FALSE(cert.holds());
  // first violation in canonical scan order (frozen)
  CHECK(cert.violation->u == Monomial{3, 0, 3});
  CHECK(cert.violation->v == Monomial{1, 3, 2});
  CHECK(cert.violation->pivot == 3);
  REQUIRE(cert.violation->tried.size() == 1);
  CHECK(cert.violation->tried[0].index == 2);
  CHECK(cert.violation->tried[0].candidate == Monomial{1, 2, 3});
  CHECK(replay_ndep_violation(sq, *cert.violation));

  // the stated witness pair is also a genuine violation: the single
  // candidate x2 yields x2^3*x3^3 which is outside the square
  const auto stated =
      make_ndep_violation(sq, Monomial{3, 0, 3}, Monomial{0, 4, 2}, 3);
  REQUIRE(stated.has_value());
  REQUIRE(stated->tried.size() == 1);
  CHECK(stated->tried[0].index == 2);
  CHECK(stated->tried[0].candidate == Monomial{0, 3, 3});
  CHECK_FALSE(sq.contains(Monomial{0, 3, 3}));
}

TEST_CASE("ndep: totally balanced three-edge cover ideal fails") {
  const ExchangeCertificate cert = check_ndep(three_edge_cover(1, 1, 1));
  REQUIRE_FALSE(cert.holds());
  CHECK(cert.violation->u == Monomial{0, 1, 0, 0, 1});  // x2x5
  CHECK(cert.violation->v == Monomial{1, 0, 0, 1, 0});  // x1x4
  CHECK(cert.violation->pivot == 5);
  REQUIRE(cert.violation->tried.size() == 2);
  CHECK(cert.violation->tried[0].index == 1);
  CHECK(cert.violation->tried[0].candidate == Monomial{0, 0, 0, 1, 1});
  CHECK(cert.violation->tried[1].index == 4);
  CHECK(cert.violation->tried[1].candidate == Monomial{1, 0, 0, 0, 1});
}

TEST_CASE("ndep trivial cases") {
  CHECK(check_ndep(MonomialIdeal::from_generators(3, {Monomial{1, 2, 0}}))
            .holds());
  CHECK(check_ndep(MonomialIdeal::unit(2)).holds());
  CHECK_THROWS_AS(check_ndep(MonomialIdeal::zero(2)), std::invalid_argument);
}

TEST_CASE("polymatroidal") {
  CHECK(check_polymatroidal(power(maximal_ideal(2), 2)).holds());

  const MonomialIdeal coprime = MonomialIdeal::from_generators(
      4, {Monomial{1, 0, 1, 0}, Monomial{0, 1, 0, 1}});
  const ExchangeCertificate cert = check_polymatroidal(coprime);
  REQUIRE_FALSE(cert.holds());
  CHECK(cert.violation->u == Monomial{1, 0, 1, 0});
  CHECK(cert.violation->v == Monomial{0, 1, 0, 1});
  CHECK(cert.violation->pivot == 1);
  REQUIRE(cert.violation->tried.size() == 2);
  CHECK(cert.violation->tried[0].candidate == Monomial{0, 1, 1, 0});  // x2x3
  CHECK(cert.violation->tried[1].candidate == Monomial{0, 0, 1, 1});  // x3x4
  CHECK(replay_polymatroidal_violation(coprime, *cert.violation));

  CHECK_THROWS_AS(check_polymatroidal(MonomialIdeal::from_generators(
                      2, {Monomial{1, 0}, Monomial{0, 2}})),
                  not_equigenerated_error);
}

TEST_CASE("veronese ideals satisfy both exchange properties") {
  for (int n = 1; n <= 6; ++n) {
    for (Exponent a = 1; a <= 4; ++a) {
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> vars;
        for (int v = 0; v < n; ++v) {
          if ((mask >> v) & 1u) vars.push_back(v + 1);
        }
        const MonomialIdeal ideal = veronese(vars, a, n);
        CHECK(check_ndep(ideal).holds());
        CHECK(check_polymatroidal(ideal).holds());
      }
    }
  }
}

TEST_CASE("weakly polymatroidal: the dual exchange does not imply it") {
  const MonomialIdeal ideal = MonomialIdeal::from_generators(
      3, {Monomial{0, 1, 1}, Monomial{2, 0, 1}});
  CHECK(check_ndep(ideal).holds());
  const ExchangeCertificate cert =
      check_weakly_polymatroidal(ideal, VariableOrder::natural(3));
  REQUIRE_FALSE(cert.holds());
  CHECK(cert.violation->u == Monomial{2, 0, 1});
  CHECK(cert.violation->v == Monomial{0, 1, 1});
  CHECK(cert.violation->pivot == 1);  // position of x1
  REQUIRE(cert.violation->tried.size() == 2);
  CHECK(cert.violation->tried[0].candidate == Monomial{1, 0, 1});  // x1x3
  CHECK(cert.violation->tried[1].candidate == Monomial{1, 1, 0});  // x1x2
  CHECK(replay_weakly_violation(ideal, VariableOrder::natural(3),
                                *cert.violation));
}

TEST_CASE("weakly polymatroidal: mixed weights fail under the block order") {
  const MonomialIdeal ideal = three_edge_cover(2, 3, 2);
  const VariableOrder ord = VariableOrder::descending({2, 1, 4, 5, 3});
  const ExchangeCertificate cert = check_weakly_polymatroidal(ideal, ord);
  REQUIRE_FALSE(cert.holds());
  CHECK(cert.violation->u == Monomial{0, 3, 0, 0, 2});  // x2^3x5^2
  CHECK(cert.violation->v == Monomial{0, 2, 0, 2, 0});  // x2^2x4^2
  CHECK(cert.violation->pivot == 1);                    // position of x2
  REQUIRE(cert.violation->tried.size() == 1);
  CHECK(cert.violation->tried[0].index == 3);  // position of x4
  CHECK(cert.violation->tried[0].candidate == Monomial{0, 3, 0, 1, 0});
  CHECK_FALSE(ideal.contains(Monomial{0, 3, 0, 1, 0}));  // x2^3x4
}

TEST_CASE("weakly polymatroidal: equal weights satisfy the block order") {
  const MonomialIdeal ideal = three_edge_cover(2, 2, 2);
  CHECK(check_weakly_polymatroidal(ideal,
                                   VariableOrder::descending({2, 1, 4, 5, 3}))
            .holds());
}

TEST_CASE("weakly order validation") {
  CHECK_THROWS_AS(check_weakly_polymatroidal(six_gen(),
                                             VariableOrder::natural(5)),
                  std::invalid_argument);
}

TEST_CASE("order search: principal ideals") {
  // support {1,2} enumerates its ascending permutation first
  const auto r1 = search_weakly_polymatroidal_order(
      MonomialIdeal::from_generators(3, {Monomial{2, 1, 0}}));
  REQUIRE(r1.found());
  CHECK(r1.order->sequence() == std::vector<int>{1, 2, 3});
  CHECK(r1.orders_tried == 1);
  // non-support variables go last in index order
  const auto r2 = search_weakly_polymatroidal_order(
      MonomialIdeal::from_generators(3, {Monomial{0, 2, 0}}));
  REQUIRE(r2.found());
  CHECK(r2.order->sequence() == std::vector<int>{2, 1, 3});
}

TEST_CASE("order search: (x2x3, x1^2x3) admits an order") {
  const MonomialIdeal ideal = MonomialIdeal::from_generators(
      3, {Monomial{0, 1, 1}, Monomial{2, 0, 1}});
  const auto r = search_weakly_polymatroidal_order(ideal);
  REQUIRE(r.found());
  // x1>x2>x3 and x1>x3>x2 fail; x2>x1>x3 is the first that works
  CHECK(r.order->sequence() == std::vector<int>{2, 1, 3});
  CHECK(r.orders_tried == 3);
  CHECK(check_weakly_polymatroidal(ideal, *r.order).holds());
  CHECK_FALSE(check_weakly_polymatroidal(
                  ideal, VariableOrder::descending({1, 3, 2}))
                  .holds());
}

TEST_CASE("order search: six-variable squared cover ideal is exhausted") {
  const MonomialIdeal ideal = intersect(
      intersect(veronese({1, 2, 3}, 2, 6), veronese({3, 4, 5}, 2, 6)),
      veronese({1, 5, 6}, 2, 6));
  const WeaklyOrderSearch r = search_weakly_polymatroidal_order(ideal);
  CHECK_FALSE(r.found());
  CHECK(r.orders_tried == 720);
  CHECK(r.failures.size() == 720);
  // every recorded failure replays
  for (std::size_t i = 0; i < r.failures.size(); i += 97) {
    CHECK(replay_weakly_violation(ideal, r.failures[i].first,
                                  r.failures[i].second));
  }
}

TEST_CASE("order search bound") {
  Bounds tight;
  tight.weakly_search_support = 2;
  CHECK_THROWS_AS(search_weakly_polymatroidal_order(six_gen(), tight),
                  bound_error);
}

TEST_CASE("ndep verdict is invariant under variable relabeling") {
  Rng rng(23);
  for (int round = 0; round < 40; ++round) {
    const int n = pick(rng, 2, 4);
    const MonomialIdeal ideal = random_ideal(rng, n, 5, 4);
    if (ideal.is_zero()) continue;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(check_ndep(ideal).holds() == check_ndep(relabel(ideal, perm)).holds());
  }
}

TEST_CASE("equigenerated: polymatroidal implies the dual exchange") {
  Rng rng(29);
  int polym = 0;
  for (int round = 0; round < 400; ++round) {
    const int n = pick(rng, 2, 4);
    const MonomialIdeal ideal =
        random_equigenerated(rng, n, pick(rng, 1, 4), 5);
    if (!check_polymatroidal(ideal).holds()) continue;
    ++polym;
    CHECK(check_ndep(ideal).holds());
  }
  CHECK(polym > 30);  // the filter must keep a meaningful sample
}

TEST_CASE("maximal-ideal multiples keep the dual exchange") {
  Rng rng(31);
  int kept = 0;
  for (int round = 0; round < 120 || kept < 25; ++round) {
    const int n = pick(rng, 2, 4);
    const MonomialIdeal ideal = random_ideal(rng, n, 5, 4);
    if (ideal.is_zero() || !check_ndep(ideal).holds()) continue;
    ++kept;
    CHECK(check_ndep(multiply(maximal_ideal(n), ideal)).holds());
    if (round > 400) break;
  }
  CHECK(kept >= 25);
}

TEST_CASE("violation certificates replay on arbitrary ideals") {
  Rng rng(37);
  int violated = 0;
  for (int round = 0; round < 200; ++round) {
    const int n = pick(rng, 2, 4);
    const MonomialIdeal ideal = random_ideal(rng, n, 6, 4);
    if (ideal.is_zero()) continue;
    const ExchangeCertificate cert = check_ndep(ideal);
    if (cert.holds()) continue;
    ++violated;
    CHECK(replay_ndep_violation(ideal, *cert.violation));
    // every recorded candidate really is outside the ideal
    for (const TriedExchange& t : cert.violation->tried) {
      CHECK_FALSE(ideal.contains(t.candidate));
    }
  }
  CHECK(violated > 10);
}
