#include <doctest.h>

// The parallel kernels must reproduce the serial scan bit for bit: same
// verdicts, same witnesses, same tables, independent of scheduling. The
// plain reference implementations pin the intended semantics.

#include <array>
#include <thread>

#include "generators.hpp"
#include "midk/exchange.hpp"
#include "midk/hypergraph.hpp"
#include "midk/ref.hpp"
#include "midk/resolution.hpp"

using namespace midk;
using namespace midk::test;

namespace {

bool same_certificate(const ExchangeCertificate& a,
                      const ExchangeCertificate& b) {
  if (a.holds() != b.holds()) return false;
  if (a.holds()) return true;
  return a.violation->u == b.violation->u && a.violation->v == b.violation->v &&
         a.violation->pivot == b.violation->pivot &&
         a.violation->tried == b.violation->tried;
}

}  // namespace

TEST_CASE("exchange scans: serial, parallel and reference agree") {
  Rng rng(103);
  for (int round = 0; round < 60; ++round) {
    const int n = pick(rng, 2, 5);
    const MonomialIdeal ideal = random_ideal(rng, n, 7, 4);
    if (ideal.is_zero()) continue;

    const auto serial = check_ndep(ideal, Exec::serial);
    CHECK(same_certificate(serial, check_ndep(ideal, Exec::parallel)));
    CHECK(same_certificate(serial, ref::check_ndep(ideal)));

    const VariableOrder ord = VariableOrder::natural(n);
    const auto ws = check_weakly_polymatroidal(ideal, ord, Exec::serial);
    CHECK(same_certificate(
        ws, check_weakly_polymatroidal(ideal, ord, Exec::parallel)));
    CHECK(same_certificate(ws, ref::check_weakly_polymatroidal(ideal, ord)));

    if (ideal.equigenerated_degree()) {
      const auto ps = check_polymatroidal(ideal, Exec::serial);
      CHECK(same_certificate(ps, check_polymatroidal(ideal, Exec::parallel)));
      CHECK(same_certificate(ps, ref::check_polymatroidal(ideal)));
    }
  }
}

TEST_CASE("membership and minimalization agree with the reference") {
  Rng rng(107);
  for (int round = 0; round < 40; ++round) {
    const int n = pick(rng, 1, 5);
    std::vector<Monomial> gens;
    for (int i = 0, c = pick(rng, 1, 15); i < c; ++i) {
      gens.push_back(random_monomial(rng, n, pick(rng, 0, 5)));
    }
    CHECK(minimalize(gens, Exec::parallel) == ref::minimalize(gens));
    const MonomialIdeal ideal = MonomialIdeal::from_generators(n, gens);
    for (int i = 0; i < 10; ++i) {
      const Monomial probe = random_monomial(rng, n, pick(rng, 0, 6));
      CHECK(ideal.contains(probe) == ref::contains(ideal, probe));
    }
  }
}

TEST_CASE("order search agrees across execution policies") {
  Rng rng(109);
  for (int round = 0; round < 12; ++round) {
    const int n = pick(rng, 2, 4);
    const MonomialIdeal ideal = random_ideal(rng, n, 5, 3);
    if (ideal.is_zero()) continue;
    const auto serial =
        search_weakly_polymatroidal_order(ideal, {}, Exec::serial);
    const auto parallel =
        search_weakly_polymatroidal_order(ideal, {}, Exec::parallel);
    CHECK(serial.found() == parallel.found());
    CHECK(serial.orders_tried == parallel.orders_tried);
    if (serial.found()) {
      CHECK(serial.order->sequence() == parallel.order->sequence());
    } else {
      REQUIRE(serial.failures.size() == parallel.failures.size());
      for (std::size_t i = 0; i < serial.failures.size(); ++i) {
        CHECK(serial.failures[i].first.sequence() ==
              parallel.failures[i].first.sequence());
      }
    }
  }
}

TEST_CASE("betti tables and covers agree across execution policies") {
  Rng rng(113);
  for (int round = 0; round < 12; ++round) {
    const int n = pick(rng, 2, 4);
    const MonomialIdeal ideal = random_ideal(rng, n, 5, 3);
    if (ideal.is_zero()) continue;
    const BettiTable a = betti_table(ideal, kBettiPrimary, {}, Exec::serial);
    const BettiTable b = betti_table(ideal, kBettiPrimary, {}, Exec::parallel);
    CHECK(a.entries == b.entries);
  }
  for (int round = 0; round < 15; ++round) {
    const auto inst = random_cover_instance(rng);
    CHECK(minimal_kcovers(inst.hypergraph, inst.k, {}, Exec::serial) ==
          minimal_kcovers(inst.hypergraph, inst.k, {}, Exec::parallel));
    CHECK(kcover_ideal(inst.hypergraph, inst.k, {}, Exec::serial) ==
          kcover_ideal(inst.hypergraph, inst.k, {}, Exec::parallel));
  }
}

TEST_CASE("values are safe to share across threads") {
  // immutable after construction: concurrent readers must agree
  const MonomialIdeal ideal = intersect(
      intersect(veronese({1, 2, 3}, 2, 6), veronese({3, 4, 5}, 2, 6)),
      veronese({1, 5, 6}, 2, 6));
  const ExchangeCertificate expected = check_ndep(ideal, Exec::serial);
  std::vector<std::thread> workers;
  std::array<bool, 4> agree{};
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&, t] {
      bool ok = true;
      for (int round = 0; round < 5; ++round) {
        const ExchangeCertificate cert = check_ndep(ideal, Exec::serial);
        ok = ok && same_certificate(cert, expected);
        for (const Monomial& g : ideal.generators()) {
          ok = ok && ideal.contains(g);
        }
      }
      agree[static_cast<std::size_t>(t)] = ok;
    });
  }
  for (std::thread& w : workers) w.join();
  for (bool ok : agree) CHECK(ok);
}
