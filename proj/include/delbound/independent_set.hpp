#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "delbound/bitmatrix.hpp"

namespace delbound {

struct IndependentSetResult {
  std::vector<std::size_t> vertices;  // ascending
  bool optimal = false;               // false when the deadline cut the search short
  std::uint64_t nodes = 0;
};

/// Maximum independent set by branch and bound. Searches for a maximum
/// clique of the complement over a degeneracy order; greedy colorings of the
/// complement (clique covers of `graph`) bound each subproblem.
IndependentSetResult maximum_independent_set(
    const BitMatrix& graph, std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

}  // namespace delbound
