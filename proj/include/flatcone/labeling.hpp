#pragma once

// Polygon boundary structure and sixth-root-of-unity direction labels on blue edges.

#include <optional>
#include <vector>

#include "flatcone/emg.hpp"

namespace flatcone::labeling {

enum class CornerKind { Acute, Obtuse };

/// Exterior turn at a corner, in units of pi/3.
inline int turn(CornerKind c) { return c == CornerKind::Acute ? 2 : 1; }

/// The nice polygon dual to one vertex of the multigraph.
///
/// `sides` are the blue darts at the vertex in rotation order, starting at the side that
/// sits in slot 0 of the hexagon frame. `corners[i]` lies between sides i and i+1
/// (cyclically). Slots increase by 2 across an acute corner and by 1 across an obtuse one,
/// so the slots left unused are the zero-length sides of the degenerate hexagon.
struct PolygonBoundary {
  std::size_t vertex = 0;
  emg::PolygonColor color = emg::PolygonColor::White;
  std::vector<emg::Dart> sides;
  std::vector<CornerKind> corners;
  std::vector<int> slots;

  std::size_t side_count() const { return sides.size(); }
  std::size_t acute_count() const;
};

/// One polygon per vertex, in vertex index order. Throws emg::StructureError when a
/// corner holds more than one red dart or the corners do not add up to a full turn.
std::vector<PolygonBoundary> polygon_boundaries(const emg::EnhancedMultigraph& g);

/// A polygon and one of its sides, by id.
struct SeedFlag {
  int vertex_id = 0;
  int edge_id = 0;
};

struct LabelMap {
  /// Exponent e in 0..5 per edge index (direction omega^e, omega = exp(i pi/3)); -1 on red edges.
  std::vector<int> exponent;
  SeedFlag seed;

  int operator[](std::size_t edge) const { return exponent[edge]; }
};

/// Thrown when label propagation reaches some edge with two different exponents.
class HolonomyError : public Error {
 public:
  using Error::Error;
};

/// Default seed: lowest-id vertex and its slot-0 side.
SeedFlag default_seed(const emg::EnhancedMultigraph& g, const std::vector<PolygonBoundary>& boundaries);

/// Breadth-first propagation from the seed. Walking a white polygon in rotation order
/// adds the exterior turn at each corner; walking a black one subtracts it. Both
/// polygons along an edge agree on its exponent.
LabelMap assign_labels(const emg::EnhancedMultigraph& g, const std::vector<PolygonBoundary>& boundaries,
                       std::optional<SeedFlag> seed = std::nullopt);

/// Parses "v:e" as used on the command line.
SeedFlag parse_seed_flag(std::string_view text);

}  // namespace flatcone::labeling
