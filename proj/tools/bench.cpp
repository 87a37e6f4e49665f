// Benchmark comparing the plain reference kernels, the serial scan path and
// the OpenMP path on representative workloads. Results are checked for
// agreement before timings are reported.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "midk/exchange.hpp"
#include "midk/hypergraph.hpp"
#include "midk/ideal.hpp"
#include "midk/parallel.hpp"
#include "midk/ref.hpp"
#include "midk/resolution.hpp"

using namespace midk;

namespace {

double time_of(const std::function<void()>& fn, int repeats = 3) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const double s = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (s < best) best = s;
  }
  return best;
}

void report(const std::string& name, double ref, double serial,
            double parallel) {
  if (ref >= 0) {
    std::printf("%-34s %10.3f ms", name.c_str(), ref * 1e3);
  } else {
    std::printf("%-34s %13s", name.c_str(), "-");
  }
  std::printf(" %10.3f ms %10.3f ms   x%.2f\n", serial * 1e3, parallel * 1e3,
              parallel > 0 ? serial / parallel : 0.0);
}

MonomialIdeal sunflower_workload() {
  // three petals of size 5 around a core of size 2, plus a separated edge
  MonomialIdeal ideal = veronese({1, 2, 3, 4, 5}, 2, 13);
  ideal = intersect(ideal, veronese({1, 2, 6, 7, 8}, 2, 13));
  ideal = intersect(ideal, veronese({1, 2, 9, 10, 11}, 2, 13));
  ideal = intersect(ideal, veronese({12, 13}, 2, 13));
  return ideal;
}

}  // namespace

int main() {
  std::printf("%-34s %13s %13s %13s %8s\n", "workload", "reference", "serial",
              "parallel", "speedup");
  std::printf("workers: %d\n", worker_count());

  {
    const MonomialIdeal ideal = sunflower_workload();
    std::printf("dual exchange scan: |G| = %zu\n", ideal.size());
    ExchangeCertificate r1, r2, r3;
    const double t_ref = time_of([&] { r1 = ref::check_ndep(ideal); }, 1);
    const double t_ser =
        time_of([&] { r2 = check_ndep(ideal, Exec::serial); });
    const double t_par =
        time_of([&] { r3 = check_ndep(ideal, Exec::parallel); });
    if (r1.holds() != r2.holds() || r2.holds() != r3.holds()) {
      std::printf("MISMATCH in dual exchange verdicts\n");
      return 1;
    }
    report("check_ndep (sunflower)", t_ref, t_ser, t_par);
  }

  {
    const MonomialIdeal ideal = intersect(
        intersect(intersect(veronese({1, 2, 3}, 2, 7), veronese({3, 4, 5}, 2, 7)),
                  veronese({1, 5, 6}, 2, 7)),
        veronese({2, 6, 7}, 1, 7));
    std::printf("order search: |G| = %zu, support 7 -> 5040 orders\n",
                ideal.size());
    WeaklyOrderSearch s1, s2;
    const double t_ser = time_of(
        [&] { s1 = search_weakly_polymatroidal_order(ideal, {}, Exec::serial); });
    const double t_par = time_of([&] {
      s2 = search_weakly_polymatroidal_order(ideal, {}, Exec::parallel);
    });
    if (s1.found() != s2.found() || s1.orders_tried != s2.orders_tried) {
      std::printf("MISMATCH in order search results\n");
      return 1;
    }
    report("weakly order search (5040 orders)", -1, t_ser, t_par);
  }

  {
    const MonomialIdeal a = veronese({1, 2, 3, 4, 5, 6}, 5, 8);
    const MonomialIdeal b = veronese({3, 4, 5, 6, 7, 8}, 5, 8);
    MonomialIdeal m1 = MonomialIdeal::zero(8), m2 = MonomialIdeal::zero(8);
    const double t_ser =
        time_of([&] { m1 = intersect(a, b, {}, Exec::serial); });
    const double t_par =
        time_of([&] { m2 = intersect(a, b, {}, Exec::parallel); });
    if (!(m1 == m2)) {
      std::printf("MISMATCH in intersection results\n");
      return 1;
    }
    std::printf("intersection: %zu x %zu pairs -> |G| = %zu\n", a.size(),
                b.size(), m1.size());
    report("intersect (veronese pair)", -1, t_ser, t_par);
  }

  {
    const MonomialIdeal ideal = intersect(
        intersect(veronese({1, 2, 3}, 2, 6), veronese({3, 4, 5}, 2, 6)),
        veronese({1, 5, 6}, 2, 6));
    Bounds loose;
    loose.betti_generators = 24;
    BettiTable b1, b2;
    const double t_ser = time_of(
        [&] { b1 = betti_table(ideal, kBettiPrimary, loose, Exec::serial); },
        1);
    const double t_par = time_of(
        [&] { b2 = betti_table(ideal, kBettiPrimary, loose, Exec::parallel); },
        1);
    if (b1.entries != b2.entries) {
      std::printf("MISMATCH in Betti tables\n");
      return 1;
    }
    report("betti_table (20 generators)", -1, t_ser, t_par);
  }

  return 0;
}
