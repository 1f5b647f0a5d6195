#pragma once

// The full analysis of one instance, from multigraph to realized and colored surfaces.

#include <optional>
#include <string>
#include <vector>

#include "flatcone/cone.hpp"
#include "flatcone/emg.hpp"
#include "flatcone/geometry.hpp"
#include "flatcone/labeling.hpp"
#include "flatcone/qform.hpp"
#include "flatcone/shapesys.hpp"

namespace flatcone::pipeline {

/// Everything that depends only on the combinatorics.
struct Instance {
  std::string name;
  emg::EnhancedMultigraph graph;
  emg::ValidationReport validation;
  std::vector<labeling::PolygonBoundary> boundaries;
  labeling::LabelMap labels;
  shapesys::ShapeSystem system;
  shapesys::KernelBasis kernel;
  shapesys::LemmaCheck lemmas;
  cone::ConeDescription cone;
  cone::LatticeBasis lattice;
  qform::QuadraticForm form;
};

/// Throws InvalidInstance when the graph is not plausible; labeling and geometry errors
/// propagate unchanged.
class InvalidInstance : public Error {
 public:
  InvalidInstance(std::string message, emg::ValidationReport report)
      : Error(std::move(message)), report_(std::move(report)) {}
  const emg::ValidationReport& report() const { return report_; }

 private:
  emg::ValidationReport report_;
};

Instance analyze(std::string name, emg::EnhancedMultigraph graph,
                 std::optional<labeling::SeedFlag> seed = std::nullopt);

/// Edge lengths in edge index order (zero on red edges) from shape-system columns.
geometry::EdgeLengths edge_lengths(const Instance& inst, const IntVector& columns);

struct Realization {
  IntVector columns;  // blue edge lengths in column order
  geometry::RealizedSurface surface;
  geometry::ColoredTriangulation triangulation;
  geometry::ColoringCheck coloring;
  bool brute_force_proper = false;
  Rational triarea_sum;
  qform::TriangleIdentity identity;
  std::vector<geometry::GridPoint> cone_points;

  bool ok() const {
    return coloring.proper && coloring.balanced && brute_force_proper && identity.holds() &&
           triangulation.has_octahedral_degrees() && triangulation.euler_characteristic() == 2;
  }
};

/// Realizes a strictly positive integer point and runs every geometric check on it.
Realization realize_point(const Instance& inst, const IntVector& columns,
                          std::optional<std::uint64_t> tree_seed = std::nullopt);

/// Independent properness check: every pair of vertices at unit distance in the folded
/// image that share a triangle gets different colors.
bool brute_force_proper(const geometry::ColoredTriangulation& t);

}  // namespace flatcone::pipeline
