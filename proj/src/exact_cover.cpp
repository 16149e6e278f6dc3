#include "corona/exact_cover.hpp"

#include <limits>
#include <stdexcept>

namespace corona {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

ExactCover::ExactCover(std::size_t primary_items, std::size_t secondary_items)
    : items_(primary_items + secondary_items) {
  const std::size_t n = items_ + 1;
  left_.resize(n);
  right_.resize(n);
  up_.resize(n);
  down_.resize(n);
  column_.resize(n);
  size_.assign(n, 0);
  option_of_node_.assign(n, npos);
  for (std::size_t i = 0; i < n; ++i) {
    up_[i] = down_[i] = column_[i] = i;
    left_[i] = right_[i] = i;
  }
  // Only primary headers join the root ring.
  std::size_t prev = 0;
  for (std::size_t i = 1; i <= primary_items; ++i) {
    right_[prev] = i;
    left_[i] = prev;
    prev = i;
  }
  right_[prev] = 0;
  left_[0] = prev;
}

std::size_t ExactCover::add_option(std::span<const std::size_t> items) {
  if (items.empty()) throw std::invalid_argument("empty option");
  const std::size_t option = option_first_node_.size();
  std::size_t first = npos;
  for (std::size_t item : items) {
    if (item >= items_) throw std::out_of_range("item index out of range");
    const std::size_t c = item + 1;
    const std::size_t node = left_.size();
    left_.push_back(node);
    right_.push_back(node);
    column_.push_back(c);
    option_of_node_.push_back(option);
    size_.push_back(0);
    // append at the bottom of column c
    up_.push_back(up_[c]);
    down_.push_back(c);
    down_[up_[c]] = node;
    up_[c] = node;
    ++size_[c];
    if (first == npos) {
      first = node;
    } else {
      right_[node] = first;
      left_[node] = left_[first];
      right_[left_[first]] = node;
      left_[first] = node;
    }
  }
  option_first_node_.push_back(first);
  return option;
}

void ExactCover::cover(std::size_t c) {
  right_[left_[c]] = right_[c];
  left_[right_[c]] = left_[c];
  for (std::size_t i = down_[c]; i != c; i = down_[i])
    for (std::size_t j = right_[i]; j != i; j = right_[j]) {
      up_[down_[j]] = up_[j];
      down_[up_[j]] = down_[j];
      --size_[column_[j]];
    }
}

void ExactCover::uncover(std::size_t c) {
  for (std::size_t i = up_[c]; i != c; i = up_[i])
    for (std::size_t j = left_[i]; j != i; j = left_[j]) {
      ++size_[column_[j]];
      up_[down_[j]] = j;
      down_[up_[j]] = j;
    }
  right_[left_[c]] = c;
  left_[right_[c]] = c;
}

void ExactCover::select(std::size_t row_node) {
  chosen_.push_back(option_of_node_[row_node]);
  for (std::size_t j = right_[row_node]; j != row_node; j = right_[j]) cover(column_[j]);
}

void ExactCover::deselect(std::size_t row_node) {
  for (std::size_t j = left_[row_node]; j != row_node; j = left_[j]) uncover(column_[j]);
  chosen_.pop_back();
}

std::size_t ExactCover::choose_item() const {
  std::size_t best = 0;
  std::size_t best_size = npos;
  for (std::size_t c = right_[0]; c != 0; c = right_[c])
    if (size_[c] < best_size) {
      best = c;
      best_size = size_[c];
      if (best_size == 0) break;
    }
  return best;
}

void ExactCover::search(const Visitor& visit) {
  if (right_[0] == 0) {
    visit(chosen_);
    return;
  }
  const std::size_t c = choose_item();
  if (size_[c] == 0) return;
  cover(c);
  for (std::size_t r = down_[c]; r != c; r = down_[r]) {
    select(r);
    search(visit);
    deselect(r);
  }
  uncover(c);
}

void ExactCover::solve(const Visitor& visit) {
  chosen_.clear();
  search(visit);
}

std::vector<std::size_t> ExactCover::root_branches() const {
  std::vector<std::size_t> out;
  if (right_[0] == 0) return out;
  const std::size_t c = choose_item();
  for (std::size_t r = down_[c]; r != c; r = down_[r]) out.push_back(option_of_node_[r]);
  return out;
}

void ExactCover::solve_branch(std::size_t option, const Visitor& visit) const {
  if (right_[0] == 0) throw std::logic_error("no root branch: problem is already solved");
  ExactCover work = *this;
  work.chosen_.clear();
  const std::size_t c = work.choose_item();
  std::size_t row = npos;
  for (std::size_t r = work.down_[c]; r != c; r = work.down_[r])
    if (work.option_of_node_[r] == option) row = r;
  if (row == npos) throw std::invalid_argument("option is not a root branch");
  work.cover(c);
  work.select(row);
  work.search(visit);
}

}  // namespace corona
