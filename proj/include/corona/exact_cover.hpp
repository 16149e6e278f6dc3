#pragma once

// Dancing-links exact cover with secondary items.
//
// Primary items must be covered exactly once; secondary items at most once.
// The column chosen at each step is the active primary item with the fewest
// remaining options (lowest index on ties), and options within an item are
// tried in insertion order, so the search order is fully deterministic.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace corona {

class ExactCover {
 public:
  ExactCover(std::size_t primary_items, std::size_t secondary_items);

  /// Items are indexed 0..primary+secondary-1, primary first. Returns the
  /// option index.
  std::size_t add_option(std::span<const std::size_t> items);

  std::size_t option_count() const { return option_first_node_.size(); }

  using Visitor = std::function<void(std::span<const std::size_t> options)>;

  /// Visits every solution; `options` lists chosen option indices in the
  /// order they were selected.
  void solve(const Visitor& visit);

  /// Options of the item the root of the search branches on, in the order
  /// solve() would try them. Empty if there is nothing to branch on.
  std::vector<std::size_t> root_branches() const;

  /// Visits the solutions below one root branch only. Solving every entry of
  /// root_branches() in order reproduces solve() exactly. Takes a copy so
  /// branches can run concurrently.
  void solve_branch(std::size_t option, const Visitor& visit) const;

 private:
  std::size_t choose_item() const;
  void cover(std::size_t c);
  void uncover(std::size_t c);
  void select(std::size_t row_node);
  void deselect(std::size_t row_node);
  void search(const Visitor& visit);

  std::size_t items_;
  // Node 0 is the root; nodes 1..items_ are headers; option nodes follow.
  std::vector<std::size_t> left_, right_, up_, down_, column_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> option_of_node_;
  std::vector<std::size_t> option_first_node_;
  std::vector<std::size_t> chosen_;
};

}  // namespace corona
