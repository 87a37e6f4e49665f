#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace midk {

/// Base class for all library-specific failures.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A desk-scale resource bound was exceeded. The message names the bound
/// and the offending quantity.
struct bound_error : error {
  using error::error;
};

/// Malformed input file or string.
struct parse_error : error {
  using error::error;
};

/// An operation requiring an equigenerated ideal saw two generator degrees.
struct not_equigenerated_error : error {
  std::int64_t degree_a;
  std::int64_t degree_b;
  not_equigenerated_error(std::int64_t a, std::int64_t b)
      : error("ideal is not equigenerated: generator degrees " +
              std::to_string(a) + " and " + std::to_string(b)),
        degree_a(a),
        degree_b(b) {}
};

/// Betti ranks differed between the two check primes.
struct characteristic_dependence_error : error {
  using error::error;
};

}  // namespace midk
