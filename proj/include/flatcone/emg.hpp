#pragma once

// Enhanced multigraphs: the red/blue dual multigraph of a nice coloring, embedded in the
// oriented sphere by a rotation system.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "flatcone/exact.hpp"

namespace flatcone::emg {

enum class PolygonColor { Black, White };
enum class EdgeColor { Blue, Red };

inline PolygonColor opposite(PolygonColor c) {
  return c == PolygonColor::Black ? PolygonColor::White : PolygonColor::Black;
}

/// One end of an edge. `edge` is an edge index (not id); end 0 sits at the edge's first
/// endpoint, end 1 at its second.
struct Dart {
  std::size_t edge = 0;
  int end = 0;

  Dart reversed() const { return {edge, 1 - end}; }
  std::size_t index() const { return 2 * edge + static_cast<std::size_t>(end); }
  static Dart from_index(std::size_t i) { return {i / 2, static_cast<int>(i % 2)}; }

  friend auto operator<=>(const Dart&, const Dart&) = default;
};

struct Vertex {
  int id = 0;
  PolygonColor color = PolygonColor::White;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Endpoints are vertex indices.
struct Edge {
  int id = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  EdgeColor color = EdgeColor::Blue;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Id-based records, as they appear in files.
struct VertexRecord {
  int id;
  PolygonColor color;
};
struct EdgeRecord {
  int id;
  int a;
  int b;
  EdgeColor color;
};
struct DartRecord {
  int edge;
  int end;
};
struct RotationRecord {
  int vertex;
  std::vector<DartRecord> darts;
};

/// Thrown when records do not describe a well-formed rotation system.
class StructureError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Immutable after construction. Vertices and edges are stored in ascending id order;
/// every function below that says "index" means position in that order.
class EnhancedMultigraph {
 public:
  EnhancedMultigraph() = default;
  EnhancedMultigraph(std::vector<VertexRecord> vertices, std::vector<EdgeRecord> edges,
                     std::vector<RotationRecord> rotations);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t dart_count() const { return 2 * edges_.size(); }
  std::size_t blue_edge_count() const;
  std::size_t red_edge_count() const { return edge_count() - blue_edge_count(); }

  const Vertex& vertex(std::size_t v) const { return vertices_[v]; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }
  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }

  std::size_t vertex_index(int id) const;
  std::size_t edge_index(int id) const;
  std::optional<std::size_t> find_vertex(int id) const;
  std::optional<std::size_t> find_edge(int id) const;

  /// Vertex index at which the dart sits.
  std::size_t vertex_of(Dart d) const { return d.end == 0 ? edges_[d.edge].a : edges_[d.edge].b; }
  /// The vertex at the far end of the dart.
  std::size_t opposite_vertex(Dart d) const { return vertex_of(d.reversed()); }
  EdgeColor color_of(Dart d) const { return edges_[d.edge].color; }

  /// Counterclockwise cyclic order of darts at v.
  std::span<const Dart> rotation(std::size_t v) const { return rotations_[v]; }
  std::size_t position_in_rotation(Dart d) const { return position_[d.index()]; }
  Dart next_in_rotation(Dart d) const;
  Dart previous_in_rotation(Dart d) const;

  std::size_t degree(std::size_t v) const { return rotations_[v].size(); }
  std::size_t blue_degree(std::size_t v) const;
  std::size_t red_degree(std::size_t v) const { return degree(v) - blue_degree(v); }

  /// Blue darts at v in rotation order.
  std::vector<Dart> blue_rotation(std::size_t v) const;

  friend bool operator==(const EnhancedMultigraph& x, const EnhancedMultigraph& y) {
    return x.vertices_ == y.vertices_ && x.edges_ == y.edges_ && x.rotations_ == y.rotations_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Dart>> rotations_;
  std::vector<std::size_t> position_;
  std::unordered_map<int, std::size_t> vertex_by_id_;
  std::unordered_map<int, std::size_t> edge_by_id_;
};

EnhancedMultigraph parse_emg(std::string_view text);
/// Canonical serialization: vertices, edges, rotations in ascending id order.
std::string render_emg(const EnhancedMultigraph& g);

/// Subset of edge colors considered by face tracing.
struct ColorSet {
  bool blue = true;
  bool red = true;
  static ColorSet blue_only() { return {true, false}; }
  static ColorSet all() { return {true, true}; }
  bool contains(EdgeColor c) const { return c == EdgeColor::Blue ? blue : red; }
};

enum class FaceKind { Bigon, Quadrilateral, Other };

struct Face {
  std::vector<Dart> darts;  // cyclic; each dart leaves the vertex it sits at
  FaceKind kind = FaceKind::Other;
  /// Red edges lying inside this face (both darts in corners of the face). Only filled
  /// for traces that exclude red edges.
  std::vector<std::size_t> red_edges;
};

struct FaceSet {
  std::vector<Face> faces;
  /// Face index per dart index; npos for darts excluded by the filter.
  std::vector<std::size_t> face_of_dart;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t count(FaceKind k) const;
};

/// Faces of the sub-embedding on the given edge colors. The successor of dart d is the
/// dart following reverse(d) in the filtered rotation at d's far end.
FaceSet trace_faces(const EnhancedMultigraph& g, ColorSet filter);

/// For a vertex v and a corner between consecutive blue darts (corner i follows blue dart
/// i in blue_rotation(v)), the blue face containing it.
std::size_t corner_face(const EnhancedMultigraph& g, const FaceSet& blue_faces, std::size_t v,
                        std::size_t corner);

enum class Rule { Sphere, Degree, BlueFaces, RedParallel, Euler, Bipartite, RedCount };
enum class Severity { Error, Warning };

std::string_view to_string(Rule r);
std::string_view to_string(Severity s);

struct Finding {
  Rule rule;
  Severity severity;
  std::string message;
};

struct Counts {
  std::size_t vertices = 0;
  std::size_t blue_edges = 0;
  std::size_t red_edges = 0;
  std::size_t bigons = 0;
  std::size_t quadrilaterals = 0;
  friend bool operator==(const Counts&, const Counts&) = default;
};

struct ValidationReport {
  bool plausible = false;
  std::vector<Finding> findings;
  Counts counts;

  bool has(Rule r) const;
};

/// Runs every check and collects every failure; never stops at the first one.
ValidationReport validate_plausible(const EnhancedMultigraph& g);

/// Color- and rotation-preserving isomorphism of embedded multigraphs, ignoring ids.
/// Orientation must be preserved as well (no mirror images).
bool isomorphic(const EnhancedMultigraph& x, const EnhancedMultigraph& y);

}  // namespace flatcone::emg
