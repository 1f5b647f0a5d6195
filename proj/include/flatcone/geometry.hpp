#pragma once

// Exact realization of a cone point as polygons on the triangular grid, the folded and
// net developments of the glued surface, unit triangulation, and the 4-coloring.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "flatcone/emg.hpp"
#include "flatcone/labeling.hpp"
#include "flatcone/shapesys.hpp"

namespace flatcone::geometry {

/// The planar point x + y*sqrt(3)*i.
struct GridPoint {
  Rational x;
  Rational y;

  GridPoint() = default;
  GridPoint(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}

  friend GridPoint operator+(const GridPoint& a, const GridPoint& b) { return {a.x + b.x, a.y + b.y}; }
  friend GridPoint operator-(const GridPoint& a, const GridPoint& b) { return {a.x - b.x, a.y - b.y}; }
  friend GridPoint operator-(const GridPoint& a) { return {-a.x, -a.y}; }
  friend GridPoint operator*(const Rational& s, const GridPoint& p) { return {s * p.x, s * p.y}; }
  GridPoint& operator+=(const GridPoint& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  friend bool operator==(const GridPoint& a, const GridPoint& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const GridPoint& a, const GridPoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }

  /// Multiplication by omega^e, omega = exp(i pi/3).
  GridPoint rotated(int e) const;
  /// Complex conjugate (reflection in the real axis).
  GridPoint conjugate() const { return {x, -y}; }
  /// x + y and x - y are both integers.
  bool is_eisenstein() const;
  /// Class in Eis / 2 Eis, 0..3; requires is_eisenstein().
  int residue_class() const;
  /// |p|^2 = x^2 + 3 y^2.
  Rational norm() const { return x * x + 3 * y * y; }
};

/// omega^e for any integer e.
GridPoint direction(int e);

/// Twice the signed shoelace sum in grid units: area / (sqrt(3)/4) with sign (positive
/// for counterclockwise chains).
Rational signed_triarea(const std::vector<GridPoint>& chain);
/// Area in units of one unit equilateral triangle.
Rational triarea(const std::vector<GridPoint>& chain);

class ClosureError : public Error {
 public:
  using Error::Error;
};
class GluingError : public Error {
 public:
  using Error::Error;
};
class AngleError : public Error {
 public:
  using Error::Error;
};
class MeshError : public Error {
 public:
  using Error::Error;
};
class ColorError : public Error {
 public:
  using Error::Error;
};

/// One polygon in its folded chart. Side i runs from chart[i] to chart[i+1] in direction
/// sign * omega^label, sign being +1 for white and -1 for black; chart[i] is the corner
/// between sides i-1 and i. White charts run counterclockwise, black charts clockwise.
struct RealizedPolygon {
  std::size_t vertex = 0;
  emg::PolygonColor color = emg::PolygonColor::White;
  std::vector<std::size_t> edges;      // edge index of each side
  std::vector<Rational> lengths;       // length of each side
  std::vector<int> steps;              // exponent of each side's step direction
  std::vector<GridPoint> chart;        // corner positions, chart[0] = origin
  std::vector<std::size_t> corner_of;  // surface vertex at chart[i]

  std::size_t side_count() const { return edges.size(); }
};

/// Edge lengths indexed by edge index; red entries are ignored.
using EdgeLengths = std::vector<Rational>;

/// Lengths from a vector in shape-system column order.
EdgeLengths lengths_from_columns(const shapesys::ShapeSystem& s, const std::vector<Rational>& columns);
EdgeLengths lengths_from_columns(const shapesys::ShapeSystem& s, const IntVector& columns);

/// One chart per polygon, in vertex index order. Throws ClosureError when a polygon does
/// not close up, or when a length is not positive.
std::vector<RealizedPolygon> realize_polygons(const emg::EnhancedMultigraph& g,
                                              const std::vector<labeling::PolygonBoundary>& boundaries,
                                              const labeling::LabelMap& labels, const EdgeLengths& lengths);

enum class SurfaceVertexKind { Cone, Regular };

struct SurfaceVertex {
  SurfaceVertexKind kind = SurfaceVertexKind::Regular;
  std::size_t blue_face = 0;
  GridPoint folded;  // image under the folding map
  std::vector<std::pair<std::size_t, std::size_t>> corners;  // (polygon, chart index)
};

/// How the two sides of a blue edge are identified.
struct Gluing {
  std::size_t edge = 0;
  std::size_t white_polygon = 0, white_side = 0;
  std::size_t black_polygon = 0, black_side = 0;
  bool tree_edge = false;
  /// Always true: the folded charts of black polygons are mirror images.
  bool reflecting = true;
};

/// The cone vertex at the origin, the polygon above the positive real axis, and its side
/// along that axis.
struct BaseFlag {
  std::size_t vertex = 0;   // surface vertex
  std::size_t polygon = 0;  // white polygon
  std::size_t side = 0;     // side of that polygon leaving the vertex counterclockwise
};

struct RealizedSurface {
  std::vector<RealizedPolygon> polygons;
  std::vector<GridPoint> translation;  // folded placement of each polygon chart
  int rotation = 0;                    // all charts are turned by omega^rotation before translating
  std::vector<SurfaceVertex> vertices;
  std::vector<Gluing> gluings;  // one per blue edge, by edge index order
  BaseFlag base;

  std::vector<std::size_t> cone_vertices() const;
  std::vector<std::size_t> regular_vertices() const;
  /// Folded image of a chart point of a polygon.
  GridPoint place(std::size_t polygon, const GridPoint& chart_point) const;
  std::vector<GridPoint> folded_images() const;
};

/// Develops the folded map. Polygons are placed by translations along a spanning tree of
/// the dual graph, a breadth-first tree from the base polygon by default or a random one
/// when a seed is given. Every edge is then checked for coincidence (GluingError) and every
/// surface vertex for a single image and the right angles (AngleError).
RealizedSurface develop_surface(const emg::EnhancedMultigraph& g,
                                const std::vector<labeling::PolygonBoundary>& boundaries,
                                std::vector<RealizedPolygon> polygons,
                                std::optional<std::uint64_t> tree_seed = std::nullopt);

/// Convenience: realize_polygons followed by develop_surface.
RealizedSurface realize(const emg::EnhancedMultigraph& g, const std::vector<labeling::PolygonBoundary>& boundaries,
                        const labeling::LabelMap& labels, const EdgeLengths& lengths,
                        std::optional<std::uint64_t> tree_seed = std::nullopt);

struct UnitTriangle {
  std::array<GridPoint, 3> v;  // counterclockwise
  bool up = true;              // apex above the horizontal side
};

/// Tiles a closed convex chain with integer sides, lattice vertices and turns of one or two
/// sixths by repeatedly cutting off a triangle at the first acute corner with the shortest
/// adjacent side, or a trapezoid strip when no corner is acute.
std::vector<UnitTriangle> unit_triangulate(const std::vector<GridPoint>& chain);

struct ColoredTriangulation {
  std::size_t vertex_count = 0;
  std::vector<std::array<std::size_t, 3>> triangles;
  std::vector<emg::PolygonColor> triangle_color;
  std::vector<std::size_t> triangle_polygon;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // sorted pairs
  std::vector<std::size_t> degree;
  std::vector<GridPoint> folded;               // folding map image per vertex
  std::vector<std::optional<std::size_t>> surface_vertex;  // polygon corners only
  std::vector<int> color;                      // 0..3, empty until four_color

  long long euler_characteristic() const;
  std::map<std::size_t, std::size_t> degree_histogram() const;
  /// Six vertices of degree 4 and every other vertex of degree 6.
  bool has_octahedral_degrees() const;
};

/// Glues the per-polygon unit triangulations into one closed triangulated sphere.
/// Throws MeshError when points along a glued edge do not match or the result is not a
/// closed sphere.
ColoredTriangulation build_triangulation(const RealizedSurface& surface);

struct ColoringCheck {
  bool proper = false;
  bool balanced = false;  // black and white triangle counts agree mod 3 at every vertex
};

/// Colors every vertex by the class of its folded image in Eis / 2 Eis. Throws ColorError
/// if some image is not an Eisenstein integer.
ColoringCheck four_color(ColoredTriangulation& t);

/// Layout of the polygons by orientation-preserving isometries z -> omega^r z + t.
struct NetPlacement {
  int rotation = 0;
  bool mirrored = false;  // black charts are conjugated first
  GridPoint translation;
  std::vector<GridPoint> points;  // placed corners
};

struct Net {
  std::vector<NetPlacement> polygons;
  std::vector<std::size_t> parent;  // tree parent polygon; npos at the root
  std::vector<std::size_t> parent_edge;
  std::vector<std::size_t> depth;
  std::vector<std::pair<std::size_t, std::size_t>> overlaps;  // polygon pairs whose interiors meet
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  GridPoint place(std::size_t polygon, const GridPoint& chart_point) const;
};

/// Breadth-first net from the base polygon, neighbors taken in edge index order.
Net develop_net(const RealizedSurface& surface);

/// Developed position of each cone vertex, taken in the polygon nearest the base polygon
/// in the net (ties to the lowest polygon index). The base cone vertex lands at 0.
std::vector<GridPoint> cone_point_coordinates(const RealizedSurface& surface);

}  // namespace flatcone::geometry
