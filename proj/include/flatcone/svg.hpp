#pragma once

// SVG figures of realized surfaces, laid out as nets.

#include <string>

#include "flatcone/geometry.hpp"
#include "flatcone/labeling.hpp"

namespace flatcone::svg {

struct Options {
  bool triangles = false;      // unit triangle grid
  bool vertex_colors = false;  // 4-color dots at grid vertices
  bool overlay_dual = false;   // blue and red edges of the multigraph
};

/// Deterministic SVG text. Exact coordinates become doubles only here, with y scaled by
/// sqrt(3) and flipped so that the positive imaginary axis points up.
std::string render(const emg::EnhancedMultigraph& g, const std::vector<labeling::PolygonBoundary>& boundaries,
                   const geometry::RealizedSurface& surface, const Options& options);

inline constexpr const char* kWhiteFill = "#FFFFFF";
inline constexpr const char* kBlackFill = "#202020";
inline constexpr const char* kPalette[4] = {"#E41A1C", "#377EB8", "#4DAF4A", "#FF7F00"};

}  // namespace flatcone::svg
