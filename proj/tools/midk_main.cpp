#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "midk/bounds.hpp"
#include "midk/errors.hpp"
#include "midk/exchange.hpp"
#include "midk/hypergraph.hpp"
#include "midk/ideal.hpp"
#include "midk/json_io.hpp"
#include "midk/linear_quotients.hpp"
#include "midk/paper_suite.hpp"
#include "midk/parallel.hpp"
#include "midk/render.hpp"
#include "midk/resolution.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFails = 1;
constexpr int kUsage = 2;

struct Options {
  bool json = false;
  midk::Bounds bounds;
};

std::vector<int> parse_order_list(const std::string& text) {
  std::vector<int> vars;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      vars.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw midk::parse_error("--order: expected comma-separated integers");
    }
  }
  return vars;
}

void print_exchange_human(const midk::ExchangeCertificate& cert,
                          const midk::VariableOrder* ord) {
  if (cert.holds()) {
    std::cout << "holds\n";
    return;
  }
  const midk::ExchangeViolation& w = *cert.violation;
  std::cout << "violated\n";
  std::cout << "  u = " << midk::to_string(w.u) << "\n";
  std::cout << "  v = " << midk::to_string(w.v) << "\n";
  if (ord != nullptr) {
    std::cout << "  pivot = position " << w.pivot << " (x"
              << ord->variable_at(w.pivot) << ")\n";
  } else {
    std::cout << "  pivot = x" << w.pivot << "\n";
  }
  std::cout << "  tried:";
  if (w.tried.empty()) std::cout << " (no eligible exchange)";
  for (const midk::TriedExchange& t : w.tried) {
    if (ord != nullptr) {
      std::cout << " position " << t.index << " -> "
                << midk::to_string(t.candidate) << " (outside)";
    } else {
      std::cout << " x" << t.index << " -> " << midk::to_string(t.candidate)
                << " (outside)";
    }
  }
  std::cout << "\n";
}

int emit_exchange(const Options& opt, const midk::ExchangeCertificate& cert,
                  const midk::VariableOrder* ord = nullptr) {
  if (opt.json) {
    std::cout << midk::to_json(cert).dump(2) << "\n";
  } else {
    print_exchange_human(cert, ord);
  }
  return cert.holds() ? kOk : kPropertyFails;
}

int emit_ideal(const Options& opt, const midk::MonomialIdeal& ideal) {
  if (opt.json) {
    std::cout << midk::to_json(ideal).dump(2) << "\n";
  } else {
    std::cout << midk::to_string(ideal) << "\n";
  }
  return kOk;
}

void print_betti_human(const midk::BettiTable& table) {
  if (table.entries.empty()) {
    std::cout << "empty table\n";
    return;
  }
  const int imax = table.max_index();
  midk::Exponent dmin = 0, dmax = 0;
  bool first = true;
  for (const auto& [key, rank] : table.entries) {
    if (rank == 0) continue;
    const midk::Exponent d = key.second - key.first;
    if (first || d < dmin) dmin = d;
    if (first || d > dmax) dmax = d;
    first = false;
  }
  std::printf("%8s", "");
  for (int i = 0; i <= imax; ++i) std::printf("%8d", i);
  std::printf("\n");
  for (midk::Exponent d = dmin; d <= dmax; ++d) {
    std::printf("%7lld:", static_cast<long long>(d));
    for (int i = 0; i <= imax; ++i) {
      const std::int64_t r = table.rank(i, d + i);
      if (r == 0) {
        std::printf("%8s", ".");
      } else {
        std::printf("%8lld", static_cast<long long>(r));
      }
    }
    std::printf("\n");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact toolkit for exchange properties of monomial ideals"};
  app.require_subcommand(1);
  Options opt;
  opt.bounds = midk::bounds_from_env();
  int threads = 0;
  bool serial = false;
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_flag("--serial", serial, "run the scan kernels serially");
  app.add_option("--threads", threads, "worker threads for parallel kernels");

  int exit_code = kOk;
  std::function<void()> action;

  // ---- gens ----
  auto* gens = app.add_subcommand("gens", "generator-level ideal arithmetic");
  gens->require_subcommand(1);
  {
    static std::string a, b;
    auto* c = gens->add_subcommand("intersect", "G(I ∩ J)");
    c->add_option("ideal_a", a)->required();
    c->add_option("ideal_b", b)->required();
    c->callback([&] { action = [&] {
      exit_code = emit_ideal(opt, midk::intersect(midk::load_ideal(a),
                                                  midk::load_ideal(b),
                                                  opt.bounds));
    }; });
  }
  {
    static std::string a, b;
    auto* c = gens->add_subcommand("multiply", "G(I * J)");
    c->add_option("ideal_a", a)->required();
    c->add_option("ideal_b", b)->required();
    c->callback([&] { action = [&] {
      exit_code = emit_ideal(
          opt, midk::multiply(midk::load_ideal(a), midk::load_ideal(b)));
    }; });
  }
  {
    static std::string a;
    static int k = 2;
    auto* c = gens->add_subcommand("power", "G(I^k)");
    c->add_option("ideal", a)->required();
    c->add_option("-k,--exponent", k, "power, >= 1");
    c->callback([&] { action = [&] {
      exit_code = emit_ideal(opt, midk::power(midk::load_ideal(a), k));
    }; });
  }
  {
    static std::string vars;
    static long long power = 1;
    static int n = 0;
    auto* c = gens->add_subcommand("veronese",
                                   "all monomials of one degree in a "
                                   "variable subset");
    c->add_option("--vars", vars, "comma-separated variable indices")
        ->required();
    c->add_option("--power", power, "degree, >= 1")->required();
    c->add_option("--n", n, "ambient variable count")->required();
    c->callback([&] { action = [&] {
      exit_code =
          emit_ideal(opt, midk::veronese(parse_order_list(vars), power, n));
    }; });
  }
  {
    static std::string a;
    static long long d = 0;
    auto* c = gens->add_subcommand("component", "G(I_<d>)");
    c->add_option("ideal", a)->required();
    c->add_option("-d,--degree", d)->required();
    c->callback([&] { action = [&] {
      exit_code =
          emit_ideal(opt, midk::component(midk::load_ideal(a), d, opt.bounds));
    }; });
  }
  {
    static std::string a, by;
    auto* c = gens->add_subcommand("colon", "G(I : m)");
    c->add_option("ideal", a)->required();
    c->add_option("--by", by, "monomial, e.g. x1^2*x3")->required();
    c->callback([&] { action = [&] {
      const midk::MonomialIdeal ideal = midk::load_ideal(a);
      exit_code = emit_ideal(
          opt, midk::colon_monomial(
                   ideal, midk::parse_monomial(by, ideal.vars())));
    }; });
  }

  // ---- check ----
  auto* check = app.add_subcommand("check", "property deciders");
  check->require_subcommand(1);
  {
    static std::string a;
    auto* c = check->add_subcommand("ndep", "non-pure dual exchange property");
    c->add_option("ideal", a)->required();
    c->callback([&] { action = [&] {
      exit_code = emit_exchange(opt, midk::check_ndep(midk::load_ideal(a)));
    }; });
  }
  {
    static std::string a;
    auto* c = check->add_subcommand("polymatroidal", "symmetric exchange");
    c->add_option("ideal", a)->required();
    c->callback([&] { action = [&] {
      exit_code =
          emit_exchange(opt, midk::check_polymatroidal(midk::load_ideal(a)));
    }; });
  }
  {
    static std::string a, order;
    auto* c = check->add_subcommand("weakly", "weak polymatroidality");
    c->add_option("ideal", a)->required();
    c->add_option("--order", order,
                  "descending variable list, e.g. 2,1,3 (default natural)");
    c->callback([&] { action = [&] {
      const midk::MonomialIdeal ideal = midk::load_ideal(a);
      const midk::VariableOrder ord =
          order.empty() ? midk::VariableOrder::natural(ideal.vars())
                        : midk::VariableOrder::descending(
                              parse_order_list(order));
      if (!opt.json) std::cout << "order: " << midk::to_string(ord) << "\n";
      exit_code = emit_exchange(
          opt, midk::check_weakly_polymatroidal(ideal, ord), &ord);
    }; });
  }
  {
    static std::string a;
    auto* c = check->add_subcommand("weakly-search",
                                    "search all variable orders");
    c->add_option("ideal", a)->required();
    c->callback([&] { action = [&] {
      const midk::WeaklyOrderSearch r = midk::search_weakly_polymatroidal_order(
          midk::load_ideal(a), opt.bounds);
      if (opt.json) {
        midk::json j{{"found", r.found()}, {"orders_tried", r.orders_tried}};
        if (r.found()) j["order"] = midk::to_json(*r.order);
        std::cout << j.dump(2) << "\n";
      } else if (r.found()) {
        std::cout << "order found after " << r.orders_tried
                  << " candidates: " << midk::to_string(*r.order) << "\n";
      } else {
        std::cout << "no order works (" << r.orders_tried << " tried)\n";
      }
      exit_code = r.found() ? kOk : kPropertyFails;
    }; });
  }
  {
    static std::string a, ord;
    auto* c = check->add_subcommand("admissible",
                                    "linear-quotients order verification");
    c->add_option("ideal", a)->required();
    c->add_option("order", ord, "JSON array of exponent vectors")->required();
    c->callback([&] { action = [&] {
      const midk::MonomialIdeal ideal = midk::load_ideal(a);
      const midk::AdmissibleCertificate cert = midk::is_admissible_order(
          ideal, midk::load_order(ord, ideal.vars()));
      if (opt.json) {
        std::cout << midk::to_json(cert).dump(2) << "\n";
      } else if (cert.holds()) {
        std::cout << "admissible\n";
      } else {
        std::cout << "not admissible: position " << cert.violation->position
                  << " has colon generator "
                  << midk::to_string(cert.violation->colon_generator) << "\n";
      }
      exit_code = cert.holds() ? kOk : kPropertyFails;
    }; });
  }
  {
    static std::string a;
    auto* c = check->add_subcommand("linear-quotients",
                                    "backtracking admissible-order search");
    c->add_option("ideal", a)->required();
    c->callback([&] { action = [&] {
      const auto r =
          midk::search_linear_quotients(midk::load_ideal(a), opt.bounds);
      if (opt.json) {
        midk::json j{{"found", r.has_value()}};
        if (r) j["order"] = midk::order_to_json(*r);
        std::cout << j.dump(2) << "\n";
      } else if (r) {
        std::cout << "linear quotients order:";
        for (const midk::Monomial& m : *r) {
          std::cout << " " << midk::to_string(m);
        }
        std::cout << "\n";
      } else {
        std::cout << "no admissible order exists\n";
      }
      exit_code = r.has_value() ? kOk : kPropertyFails;
    }; });
  }
  {
    static std::string a;
    auto* c = check->add_subcommand("componentwise-linear",
                                    "Betti-table componentwise linearity");
    c->add_option("ideal", a)->required();
    c->callback([&] { action = [&] {
      const midk::ComponentwiseResult r =
          midk::is_componentwise_linear(midk::load_ideal(a), opt.bounds);
      if (opt.json) {
        std::cout << midk::to_json(r).dump(2) << "\n";
      } else {
        for (const midk::ComponentReport& cr : r.components) {
          std::cout << "degree " << cr.degree << ": "
                    << (cr.linear ? "linear" : "not linear") << " ("
                    << cr.generator_count << " generators)\n";
        }
        std::cout << (r.linear ? "componentwise linear\n"
                               : "not componentwise linear\n");
      }
      exit_code = r.linear ? kOk : kPropertyFails;
    }; });
  }
  {
    static std::string a;
    auto* c = check->add_subcommand("totally-balanced",
                                    "special-cycle search");
    c->add_option("hypergraph", a)->required();
    c->callback([&] { action = [&] {
      const midk::BalanceResult r =
          midk::is_totally_balanced(midk::load_hypergraph(a), opt.bounds);
      if (opt.json) {
        midk::json j{{"balanced", r.balanced()}};
        if (!r.balanced()) {
          j["special_cycle"] =
              midk::json{{"vertices", r.special_cycle->vertices},
                         {"edges", r.special_cycle->edge_indices}};
        }
        std::cout << j.dump(2) << "\n";
      } else if (r.balanced()) {
        std::cout << "totally balanced\n";
      } else {
        std::cout << "special cycle of length " << r.special_cycle->length()
                  << ", vertices:";
        for (int v : r.special_cycle->vertices) std::cout << " " << v;
        std::cout << "\n";
      }
      exit_code = r.balanced() ? kOk : kPropertyFails;
    }; });
  }

  // ---- cover ----
  auto* cover = app.add_subcommand("cover", "k-cover computations");
  cover->require_subcommand(1);
  {
    static std::string a;
    static int k = 1;
    auto* c = cover->add_subcommand("ideal", "ideal of k-covers");
    c->add_option("hypergraph", a)->required();
    c->add_option("-k", k, "cover order, >= 1");
    c->callback([&] { action = [&] {
      exit_code = emit_ideal(
          opt, midk::kcover_ideal(midk::load_hypergraph(a), k, opt.bounds));
    }; });
  }
  {
    static std::string a;
    static int k = 1;
    auto* c = cover->add_subcommand("minimal",
                                    "minimal k-covers by direct enumeration");
    c->add_option("hypergraph", a)->required();
    c->add_option("-k", k, "cover order, >= 1");
    c->callback([&] { action = [&] {
      const auto covers =
          midk::minimal_kcovers(midk::load_hypergraph(a), k, opt.bounds);
      if (opt.json) {
        std::cout << midk::to_json(covers).dump(2) << "\n";
      } else {
        for (const midk::CoverVector& cv : covers) {
          for (std::size_t i = 0; i < cv.size(); ++i) {
            std::cout << (i ? " " : "") << cv[i];
          }
          std::cout << "\n";
        }
      }
      exit_code = kOk;
    }; });
  }

  // ---- order ----
  auto* order = app.add_subcommand("order", "order constructions");
  order->require_subcommand(1);
  {
    static std::string a;
    auto* c = order->add_subcommand(
        "ndep", "admissible order from the dual-exchange recursion");
    c->add_option("ideal", a)->required();
    c->callback([&] { action = [&] {
      const midk::NdepOrderResult r =
          midk::ndep_admissible_order(midk::load_ideal(a));
      if (opt.json) {
        midk::json j{{"ok", r.ok()}};
        if (r.ok()) {
          j["order"] = midk::order_to_json(r.order);
        } else {
          j["obstruction"] = midk::json(r.obstruction->exponents());
        }
        std::cout << j.dump(2) << "\n";
      } else if (r.ok()) {
        std::cout << "admissible order:";
        for (const midk::Monomial& m : r.order) {
          std::cout << " " << midk::to_string(m);
        }
        std::cout << "\n";
      } else {
        std::cout << "split containment fails: "
                  << midk::to_string(*r.obstruction)
                  << " is outside the divisible part\n";
      }
      exit_code = r.ok() ? kOk : kPropertyFails;
    }; });
  }
  {
    static std::string a;
    auto* c = order->add_subcommand(
        "three-edge", "block variable order for a three-edge hypergraph");
    c->add_option("hypergraph", a)->required();
    c->callback([&] { action = [&] {
      const midk::WeightedHypergraph h = midk::load_hypergraph(a);
      if (h.edges().size() != 3) {
        throw midk::parse_error("order three-edge: hypergraph must have "
                                "exactly 3 edges, got " +
                                std::to_string(h.edges().size()));
      }
      const midk::VariableOrder ord = midk::three_edge_order(
          h.edges()[0].vertices, h.edges()[1].vertices, h.edges()[2].vertices,
          h.vertex_count());
      if (opt.json) {
        std::cout << midk::to_json(ord).dump() << "\n";
      } else {
        std::cout << midk::to_string(ord) << "\n";
      }
      exit_code = kOk;
    }; });
  }

  // ---- betti ----
  {
    static std::string a;
    static long long p = midk::kBettiPrimary;
    auto* c = app.add_subcommand("betti", "graded Betti numbers");
    c->add_option("ideal", a)->required();
    c->add_option("-p,--prime", p, "field characteristic");
    c->callback([&] { action = [&] {
      const midk::BettiTable table =
          midk::betti_table(midk::load_ideal(a), p, opt.bounds);
      if (opt.json) {
        std::cout << midk::to_json(table).dump(2) << "\n";
      } else {
        print_betti_human(table);
      }
      exit_code = kOk;
    }; });
  }

  // ---- paper-suite ----
  {
    auto* c = app.add_subcommand("paper-suite",
                                 "re-derive the bundled worked examples");
    c->callback([&] { action = [&] {
      const midk::SuiteReport report = midk::run_paper_suite();
      if (opt.json) {
        std::cout << midk::to_json(report).dump(2) << "\n";
      } else {
        for (const midk::FixtureResult& f : report.fixtures) {
          std::printf("[%s] %-36s %s\n", f.pass ? "PASS" : "FAIL",
                      f.name.c_str(), f.claim.c_str());
          if (!f.pass) {
            std::printf("       expected: %s\n       computed: %s\n",
                        f.expected.c_str(), f.computed.c_str());
          }
        }
        std::printf("%zu/%zu fixtures pass\n",
                    static_cast<std::size_t>(
                        std::count_if(report.fixtures.begin(),
                                      report.fixtures.end(),
                                      [](const auto& f) { return f.pass; })),
                    report.fixtures.size());
      }
      exit_code = report.all_pass ? kOk : kPropertyFails;
    }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (serial) midk::set_default_execution(midk::Exec::serial);
  if (threads > 0) midk::set_worker_count(threads);
  if (action) action();
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const midk::bound_error& e) {
    std::cerr << "bound error: " << e.what() << "\n";
    return kUsage;
  } catch (const midk::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const midk::not_equigenerated_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
