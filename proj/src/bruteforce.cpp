#include "corona/bruteforce.hpp"

#include "corona/exact_cover.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace corona {

Polynomial CoronaHistogram::as_polynomial() const {
  Polynomial p;
  for (const auto& [size, count] : by_size) p += Polynomial::monomial(count, static_cast<unsigned>(size));
  return p;
}

std::string to_string(Violation v) {
  switch (v) {
    case Violation::none: return "ok";
    case Violation::lozenge_inside_region: return "lozenge inside region";
    case Violation::detached_lozenge: return "detached lozenge";
    case Violation::overlap: return "overlap";
    case Violation::uncovered_required_triangle: return "uncovered required triangle";
  }
  return "?";
}

namespace {

std::string describe(TriangleId t) {
  return std::string(t.points_up ? "U(" : "D(") + std::to_string(t.x) + "," + std::to_string(t.y) + ")";
}

std::string describe(const Lozenge& l) { return "{" + describe(l.first()) + " " + describe(l.second()) + "}"; }

std::size_t index_of(const std::vector<TriangleId>& sorted, TriangleId t) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), t) - sorted.begin());
}

struct Problem {
  std::vector<Lozenge> candidates;
  ExactCover cover;
};

Problem build_problem(const Region& r) {
  for (int s : r.shape.sides)
    if (s < 1) throw std::invalid_argument("side lengths must be at least 1");
  if (r.triangles.empty()) throw std::invalid_argument("empty region");

  const auto ring = external_ring_triangles(r);
  auto candidates = candidate_lozenges(r);

  std::vector<TriangleId> secondary;
  for (const auto& l : candidates)
    for (TriangleId t : {l.first(), l.second()})
      if (!std::binary_search(ring.begin(), ring.end(), t)) secondary.push_back(t);
  std::sort(secondary.begin(), secondary.end());
  secondary.erase(std::unique(secondary.begin(), secondary.end()), secondary.end());

  auto item_of = [&](TriangleId t) {
    if (std::binary_search(ring.begin(), ring.end(), t)) return index_of(ring, t);
    return ring.size() + index_of(secondary, t);
  };

  ExactCover cover(ring.size(), secondary.size());
  for (const auto& l : candidates) {
    const std::size_t items[2] = {item_of(l.first()), item_of(l.second())};
    cover.add_option(items);
  }
  return {std::move(candidates), std::move(cover)};
}

Corona to_corona(const std::vector<Lozenge>& candidates, std::span<const std::size_t> options) {
  Corona c;
  c.lozenges.reserve(options.size());
  for (std::size_t o : options) c.lozenges.push_back(candidates[o]);
  std::sort(c.lozenges.begin(), c.lozenges.end());
  return c;
}

struct BranchResult {
  std::map<std::size_t, BigInt> by_size;
  std::vector<Corona> coronas;
};

CoronaHistogram run(const Region& r, const CoronaSink& emit, EnumerateOptions opts) {
  Problem problem = build_problem(r);
  CoronaHistogram hist;

  unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.threads;
  const auto branches = problem.cover.root_branches();

  if (threads <= 1 || branches.size() <= 1) {
    problem.cover.solve([&](std::span<const std::size_t> options) {
      ++hist.by_size[options.size()];
      if (emit) emit(to_corona(problem.candidates, options));
    });
  } else {
    std::vector<BranchResult> results(branches.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t b = next++; b < branches.size(); b = next++) {
        BranchResult& out = results[b];
        problem.cover.solve_branch(branches[b], [&](std::span<const std::size_t> options) {
          ++out.by_size[options.size()];
          if (emit) out.coronas.push_back(to_corona(problem.candidates, options));
        });
      }
    };
    threads = std::min<unsigned>(threads, static_cast<unsigned>(branches.size()));
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (auto& res : results) {
      for (const auto& [size, count] : res.by_size) hist.by_size[size] += count;
      if (emit)
        for (const auto& c : res.coronas) emit(c);
    }
  }

  for (const auto& [size, count] : hist.by_size) hist.total += count;
  return hist;
}

}  // namespace

CoronaHistogram enumerate_coronas(const Region& r, const CoronaSink& emit, EnumerateOptions opts) {
  return run(r, emit, opts);
}

CoronaHistogram enumerate_count_only(const Region& r, EnumerateOptions opts) { return run(r, {}, opts); }

CoronaCheck is_valid_corona(const Region& r, const std::vector<Lozenge>& lozenges) {
  const auto candidates = candidate_lozenges(r);
  for (const auto& l : lozenges) {
    if (r.contains(l.first()) || r.contains(l.second()))
      return {Violation::lozenge_inside_region, describe(l)};
  }
  for (const auto& l : lozenges) {
    if (!std::binary_search(candidates.begin(), candidates.end(), l))
      return {Violation::detached_lozenge, describe(l)};
  }

  std::vector<TriangleId> used;
  used.reserve(2 * lozenges.size());
  for (const auto& l : lozenges) {
    used.push_back(l.first());
    used.push_back(l.second());
  }
  std::sort(used.begin(), used.end());
  if (auto dup = std::adjacent_find(used.begin(), used.end()); dup != used.end())
    return {Violation::overlap, describe(*dup)};

  for (const auto& t : external_ring_triangles(r))
    if (!std::binary_search(used.begin(), used.end(), t)) return {Violation::uncovered_required_triangle, describe(t)};
  return {};
}

}  // namespace corona
