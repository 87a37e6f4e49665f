#include "midk/bounds.hpp"

#include <cstdlib>
#include <string>

#include "midk/errors.hpp"

namespace midk {

namespace {

template <typename T>
void read_env(const char* name, T& slot) {
  const char* raw = std::getenv(name);
  if (raw == nullptr) return;
  char* end = nullptr;
  const long long value = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 0) {
    throw parse_error(std::string(name) + ": expected a non-negative integer, got '" +
                      raw + "'");
  }
  slot = static_cast<T>(value);
}

}  // namespace

Bounds bounds_from_env() {
  Bounds b;
  read_env("MIDK_BOUND_INTERSECT_PAIRS", b.intersect_pairs);
  read_env("MIDK_BOUND_COMPONENT_WINDOW", b.component_window);
  read_env("MIDK_BOUND_WEAKLY_SEARCH_SUPPORT", b.weakly_search_support);
  read_env("MIDK_BOUND_LQ_GENERATORS", b.lq_generators);
  read_env("MIDK_BOUND_BETTI_GENERATORS", b.betti_generators);
  read_env("MIDK_BOUND_TB_EDGES", b.tb_edges);
  read_env("MIDK_BOUND_TB_VERTICES", b.tb_vertices);
  read_env("MIDK_BOUND_COVER_BOX", b.cover_box);
  return b;
}

}  // namespace midk
