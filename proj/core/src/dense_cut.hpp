#pragma once

#include <cstdint>
#include <vector>

namespace relicut::detail {

/// Global minimum cut of a dense symmetric weight matrix (k x k, row-major).
/// If best_group is non-null it receives the vertices of one side.
double stoer_wagner(std::size_t k, std::vector<double> matrix, std::vector<std::uint32_t>* best_group);

/// Maximum s-t flow on a dense directed capacity matrix (Edmonds-Karp).
double max_flow(std::size_t k, std::vector<double> capacity, std::uint32_t s, std::uint32_t t);

}  // namespace relicut::detail
