#pragma once

#include <string>
#include <vector>

#include "gtclust/dataset.hpp"

namespace gtclust {

// Scatter plot of a labeled point set: one palette color per cluster id
// (cycled), noise drawn as unfilled circles, cluster-center points ringed.
// Pure text emission with fixed formatting, so equal inputs produce equal
// bytes.
std::string render_scatter_svg(const std::vector<Point>& points,
                               const std::vector<int>& labels,
                               const std::vector<int>& center_indices);

}  // namespace gtclust
