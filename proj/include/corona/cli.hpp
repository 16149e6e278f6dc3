#pragma once

#include "corona/lattice.hpp"
#include "corona/polynomial.hpp"

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace corona::cli {

enum class Method { closed, transfer, brute };

std::string to_string(Method m);

/// Result of one counting method for one shape.
struct CountReport {
  Shape shape;
  Method method = Method::closed;
  std::map<std::uint64_t, BigInt> by_size;
  BigInt total;
  bool algebraic_extension = false;
  double elapsed_ms = 0;
};

/// JSON text for a report:
/// {"shape", "sides", "method", "sizes", "counts", "total", "algebraic_extension", "elapsed_ms"}.
/// Totals are decimal strings; counts are numbers while they fit in 64 bits.
std::string to_json(const CountReport& report);

/// Empty when all reports carry the same breakdown; otherwise one line per
/// lozenge count listing each method's value, then the totals.
std::string describe_mismatch(const std::vector<CountReport>& reports);

/// Runs one subcommand. `args` excludes the program name. Exit codes: 0 ok,
/// 1 verification mismatch, 2 invalid arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace corona::cli
