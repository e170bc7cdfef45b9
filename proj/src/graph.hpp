#pragma once

#include <cstddef>
#include <vector>

namespace parasp::detail {

/// Strongly connected components (iterative Tarjan). Returns the component of each vertex;
/// components are numbered in completion order, a reverse topological order of the condensation.
/// `steps` counts vertex and edge visits.
std::vector<std::size_t> strongly_connected(const std::vector<std::vector<std::size_t>>& succ,
                                            std::size_t& component_count, std::size_t& steps);

}  // namespace parasp::detail
