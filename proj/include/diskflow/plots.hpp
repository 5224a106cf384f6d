#pragma once

#include <string>
#include <vector>

#include "diskflow/sphere.hpp"

// Static SVG views of one parameter cell: the cutoff shape, the two radial
// Hamiltonian profiles, the mean-rotation envelopes with the binding level
// and the attained extrema, and the orbit-class scatter.  The transition
// band is drawn widened, since at selected parameters its true radial width
// is far below one pixel.

namespace diskflow {

// Writes the four SVG files into out_dir (which must exist) and returns
// their paths.  k_max bounds the scatter plot.
std::vector<std::string> emit_plots(const SectorParams& params, const std::string& out_dir,
                                    int k_max);

}  // namespace diskflow
