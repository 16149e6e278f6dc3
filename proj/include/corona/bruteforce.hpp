#pragma once

// Geometric enumeration of coronas by exact cover.
//
// A corona of a region is a set of pairwise disjoint lozenges, each outside
// the region and touching its boundary in at least one vertex, that covers
// every external ring triangle exactly once. Ring triangles are the primary
// items of the cover; the other outside triangles a candidate lozenge may
// reach are secondary (covered at most once).

#include "corona/lattice.hpp"
#include "corona/polynomial.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace corona {

struct Corona {
  std::vector<Lozenge> lozenges;  // sorted

  std::size_t size() const { return lozenges.size(); }
  bool operator==(const Corona&) const = default;
};

struct CoronaHistogram {
  std::map<std::size_t, BigInt> by_size;  // lozenge count -> coronas
  BigInt total;

  /// Coefficient of x^k is the number of coronas with k lozenges.
  Polynomial as_polynomial() const;

  bool operator==(const CoronaHistogram&) const = default;
};

struct EnumerateOptions {
  /// Worker threads for the root branches; 0 picks hardware concurrency.
  /// Output is identical for every value.
  unsigned threads = 1;
};

using CoronaSink = std::function<void(const Corona&)>;

/// Visits every corona exactly once, in canonical order, and returns the
/// size histogram. Throws std::invalid_argument for an invalid region.
CoronaHistogram enumerate_coronas(const Region& r, const CoronaSink& emit = {}, EnumerateOptions opts = {});

/// Same search, histogram only.
CoronaHistogram enumerate_count_only(const Region& r, EnumerateOptions opts = {});

enum class Violation { none, lozenge_inside_region, detached_lozenge, overlap, uncovered_required_triangle };

std::string to_string(Violation v);

struct CoronaCheck {
  Violation violation = Violation::none;
  std::string detail;

  bool ok() const { return violation == Violation::none; }
  explicit operator bool() const { return ok(); }
};

/// Reports the first violated condition, checked in this order: lozenge
/// inside the region, detached lozenge, overlap, uncovered ring triangle.
CoronaCheck is_valid_corona(const Region& r, const std::vector<Lozenge>& lozenges);

}  // namespace corona
