#include "flatcone/geometry.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <tuple>

namespace flatcone::geometry {

using emg::Dart;
using emg::PolygonColor;

// ---------------------------------------------------------------------------------------
// Grid arithmetic

GridPoint GridPoint::rotated(int e) const {
  GridPoint p = *this;
  for (int i = 0; i < mod_floor(e, 6); ++i) p = {p.x / 2 - 3 * p.y / 2, p.x / 2 + p.y / 2};
  return p;
}

bool GridPoint::is_eisenstein() const { return is_integral(x + y) && is_integral(x - y); }

int GridPoint::residue_class() const {
  if (!is_eisenstein()) throw ColorError("not an Eisenstein integer");
  Integer a = numerator_of(x - y);
  Integer b = numerator_of(2 * y);
  auto parity = [](const Integer& z) { return z % 2 == 0 ? 0 : 1; };
  return parity(a) + 2 * parity(b);
}

GridPoint direction(int e) {
  static const GridPoint table[6] = {
      {Rational(1), Rational(0)},        {Rational(1, 2), Rational(1, 2)},   {Rational(-1, 2), Rational(1, 2)},
      {Rational(-1), Rational(0)},       {Rational(-1, 2), Rational(-1, 2)}, {Rational(1, 2), Rational(-1, 2)},
  };
  return table[mod_floor(e, 6)];
}

Rational signed_triarea(const std::vector<GridPoint>& chain) {
  Rational s = 0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const GridPoint& a = chain[i];
    const GridPoint& b = chain[(i + 1) % chain.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return 2 * s;
}

Rational triarea(const std::vector<GridPoint>& chain) {
  Rational s = signed_triarea(chain);
  return s < 0 ? Rational(-s) : s;
}

namespace {

// Sign of the cross product of two grid vectors (the sqrt(3) factor is positive).
int cross_sign(const GridPoint& u, const GridPoint& v) {
  Rational c = u.x * v.y - v.x * u.y;
  return c > 0 ? 1 : c < 0 ? -1 : 0;
}

// t with p == t * direction(e), if any.
std::optional<Rational> along(const GridPoint& p, int e) {
  GridPoint d = direction(e);
  Rational t = d.x != 0 ? p.x / d.x : p.y / d.y;
  if (t * d.x == p.x && t * d.y == p.y) return t;
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------------------
// Polygons

EdgeLengths lengths_from_columns(const shapesys::ShapeSystem& s, const std::vector<Rational>& columns) {
  if (columns.size() != s.column_edge.size()) throw Error("length vector has the wrong size");
  EdgeLengths out(s.edge_column.size(), Rational(0));
  for (std::size_t c = 0; c < columns.size(); ++c) out[s.column_edge[c]] = columns[c];
  return out;
}

EdgeLengths lengths_from_columns(const shapesys::ShapeSystem& s, const IntVector& columns) {
  return lengths_from_columns(s, to_rationals(columns));
}

std::vector<RealizedPolygon> realize_polygons(const emg::EnhancedMultigraph& g,
                                              const std::vector<labeling::PolygonBoundary>& boundaries,
                                              const labeling::LabelMap& labels, const EdgeLengths& lengths) {
  if (lengths.size() != g.edge_count()) throw Error("one length per edge is required");
  const emg::FaceSet faces = emg::trace_faces(g, emg::ColorSet::blue_only());
  std::vector<RealizedPolygon> out;
  for (const auto& b : boundaries) {
    RealizedPolygon p;
    p.vertex = b.vertex;
    p.color = b.color;
    const int flip = b.color == PolygonColor::White ? 0 : 3;
    const std::size_t k = b.sides.size();
    GridPoint at;
    for (std::size_t i = 0; i < k; ++i) {
      Dart d = b.sides[i];
      const Rational& len = lengths[d.edge];
      if (len <= 0)
        throw ClosureError("edge " + std::to_string(g.edge(d.edge).id) + " has nonpositive length " + to_string(len));
      p.edges.push_back(d.edge);
      p.lengths.push_back(len);
      p.steps.push_back(static_cast<int>(mod_floor(labels[d.edge] + flip, 6)));
      p.chart.push_back(at);
      p.corner_of.push_back(faces.face_of_dart[d.index()]);
      at += len * direction(p.steps.back());
    }
    if (!(at == GridPoint{}))
      throw ClosureError("polygon " + std::to_string(g.vertex(b.vertex).id) + " does not close: gap (" +
                         to_string(at.x) + ", " + to_string(at.y) + " sqrt3)");
    const int sign = b.color == PolygonColor::White ? 1 : -1;
    for (std::size_t i = 0; i < k; ++i) {
      int turned = static_cast<int>(mod_floor(p.steps[(i + 1) % k] - p.steps[i], 6));
      if (turned != mod_floor(sign * labeling::turn(b.corners[i]), 6))
        throw ClosureError("polygon " + std::to_string(g.vertex(b.vertex).id) + " turns the wrong way at corner " +
                           std::to_string(i));
    }
    out.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------------------
// Folded development

std::vector<std::size_t> RealizedSurface::cone_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (vertices[v].kind == SurfaceVertexKind::Cone) out.push_back(v);
  return out;
}

std::vector<std::size_t> RealizedSurface::regular_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (vertices[v].kind == SurfaceVertexKind::Regular) out.push_back(v);
  return out;
}

GridPoint RealizedSurface::place(std::size_t polygon, const GridPoint& chart_point) const {
  return chart_point.rotated(rotation) + translation[polygon];
}

std::vector<GridPoint> RealizedSurface::folded_images() const {
  std::vector<GridPoint> out;
  for (const auto& v : vertices) out.push_back(v.folded);
  return out;
}

namespace {

std::size_t side_of(const RealizedPolygon& p, std::size_t edge) {
  for (std::size_t i = 0; i < p.edges.size(); ++i)
    if (p.edges[i] == edge) return i;
  throw Error("edge is not a side of the polygon");
}

// Spanning tree of the dual graph as a subset of gluing indices.
std::vector<bool> spanning_tree(const std::vector<Gluing>& gluings, std::size_t polygon_count, std::size_t root,
                                std::optional<std::uint64_t> seed) {
  std::vector<bool> in_tree(gluings.size(), false);
  if (seed) {
    std::vector<std::size_t> order(gluings.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(*seed);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> parent(polygon_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i : order) {
      std::size_t a = find(gluings[i].white_polygon), b = find(gluings[i].black_polygon);
      if (a == b) continue;
      parent[a] = b;
      in_tree[i] = true;
    }
    return in_tree;
  }
  std::vector<bool> seen(polygon_count, false);
  std::deque<std::size_t> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    std::size_t p = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gluings.size(); ++i) {
      const Gluing& gl = gluings[i];
      std::size_t q;
      if (gl.white_polygon == p)
        q = gl.black_polygon;
      else if (gl.black_polygon == p)
        q = gl.white_polygon;
      else
        continue;
      if (seen[q]) continue;
      seen[q] = true;
      in_tree[i] = true;
      queue.push_back(q);
    }
  }
  return in_tree;
}

}  // namespace

RealizedSurface develop_surface(const emg::EnhancedMultigraph& g,
                                const std::vector<labeling::PolygonBoundary>& boundaries,
                                std::vector<RealizedPolygon> polygons, std::optional<std::uint64_t> tree_seed) {
  RealizedSurface s;
  s.polygons = std::move(polygons);
  const emg::FaceSet faces = emg::trace_faces(g, emg::ColorSet::blue_only());

  s.vertices.resize(faces.faces.size());
  for (std::size_t f = 0; f < faces.faces.size(); ++f) {
    s.vertices[f].blue_face = f;
    switch (faces.faces[f].kind) {
      case emg::FaceKind::Bigon: s.vertices[f].kind = SurfaceVertexKind::Cone; break;
      case emg::FaceKind::Quadrilateral: s.vertices[f].kind = SurfaceVertexKind::Regular; break;
      default:
        throw AngleError("surface vertex " + std::to_string(f) + " is surrounded by " +
                         std::to_string(faces.faces[f].darts.size()) + " polygons");
    }
  }
  for (std::size_t p = 0; p < s.polygons.size(); ++p)
    for (std::size_t i = 0; i < s.polygons[p].side_count(); ++i)
      s.vertices[s.polygons[p].corner_of[i]].corners.push_back({p, i});

  // Base flag.
  auto cones = s.cone_vertices();
  if (cones.empty()) throw AngleError("surface has no cone vertex");
  s.base.vertex = cones.front();
  bool found = false;
  for (auto [p, i] : s.vertices[s.base.vertex].corners) {
    if (s.polygons[p].color == PolygonColor::White) {
      s.base.polygon = p;
      s.base.side = i;
      found = true;
      break;
    }
  }
  if (!found) throw AngleError("base cone vertex has no white polygon");
  const RealizedPolygon& base = s.polygons[s.base.polygon];
  s.rotation = static_cast<int>(mod_floor(-base.steps[s.base.side], 6));

  // Gluings, one per blue edge.
  std::vector<std::size_t> polygon_of_vertex(g.vertex_count(), static_cast<std::size_t>(-1));
  for (std::size_t p = 0; p < s.polygons.size(); ++p) polygon_of_vertex[s.polygons[p].vertex] = p;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const emg::Edge& edge = g.edge(e);
    if (edge.color != emg::EdgeColor::Blue) continue;
    std::size_t pa = polygon_of_vertex[edge.a], pb = polygon_of_vertex[edge.b];
    if (s.polygons[pa].color == s.polygons[pb].color)
      throw GluingError("edge " + std::to_string(edge.id) + " joins two polygons of the same color");
    if (s.polygons[pa].color == PolygonColor::Black) std::swap(pa, pb);
    s.gluings.push_back({e, pa, side_of(s.polygons[pa], e), pb, side_of(s.polygons[pb], e), false, true});
  }

  auto in_tree = spanning_tree(s.gluings, s.polygons.size(), s.base.polygon, tree_seed);
  s.translation.assign(s.polygons.size(), GridPoint{});
  std::vector<bool> placed(s.polygons.size(), false);
  s.translation[s.base.polygon] = -base.chart[s.base.side].rotated(s.rotation);
  placed[s.base.polygon] = true;
  std::deque<std::size_t> queue{s.base.polygon};
  while (!queue.empty()) {
    std::size_t p = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < s.gluings.size(); ++i) {
      if (!in_tree[i]) continue;
      Gluing& gl = s.gluings[i];
      gl.tree_edge = true;
      bool from_white = gl.white_polygon == p;
      if (!from_white && gl.black_polygon != p) continue;
      std::size_t q = from_white ? gl.black_polygon : gl.white_polygon;
      if (placed[q]) continue;
      std::size_t sp = from_white ? gl.white_side : gl.black_side;
      std::size_t sq = from_white ? gl.black_side : gl.white_side;
      const auto& P = s.polygons[p];
      const auto& Q = s.polygons[q];
      // The start of a side in one polygon is the end of the same side in the other.
      s.translation[q] = s.place(p, P.chart[sp]) - Q.chart[(sq + 1) % Q.side_count()].rotated(s.rotation);
      placed[q] = true;
      queue.push_back(q);
    }
  }
  if (std::find(placed.begin(), placed.end(), false) != placed.end())
    throw GluingError("dual graph is disconnected");

  for (const Gluing& gl : s.gluings) {
    const auto& W = s.polygons[gl.white_polygon];
    const auto& B = s.polygons[gl.black_polygon];
    GridPoint w0 = s.place(gl.white_polygon, W.chart[gl.white_side]);
    GridPoint w1 = s.place(gl.white_polygon, W.chart[(gl.white_side + 1) % W.side_count()]);
    GridPoint b0 = s.place(gl.black_polygon, B.chart[gl.black_side]);
    GridPoint b1 = s.place(gl.black_polygon, B.chart[(gl.black_side + 1) % B.side_count()]);
    if (!(w0 == b1 && w1 == b0))
      throw GluingError("sides of edge " + std::to_string(g.edge(gl.edge).id) + " do not coincide in the folded image");
  }

  for (std::size_t v = 0; v < s.vertices.size(); ++v) {
    SurfaceVertex& sv = s.vertices[v];
    int white_angle = 0, black_angle = 0;
    for (std::size_t c = 0; c < sv.corners.size(); ++c) {
      auto [p, i] = sv.corners[c];
      GridPoint image = s.place(p, s.polygons[p].chart[i]);
      if (c == 0)
        sv.folded = image;
      else if (!(image == sv.folded))
        throw AngleError("surface vertex " + std::to_string(v) + " has two folded images");
      const auto& b = boundaries[s.polygons[p].vertex];
      int angle = 3 - labeling::turn(b.corners[(i + b.side_count() - 1) % b.side_count()]);
      (s.polygons[p].color == PolygonColor::White ? white_angle : black_angle) += angle;
    }
    if (sv.kind == SurfaceVertexKind::Cone) {
      if (sv.corners.size() != 2 || white_angle != 2 || black_angle != 2)
        throw AngleError("cone vertex " + std::to_string(v) + " does not have two angles of 2pi/3");
    } else if (sv.corners.size() != 4 || white_angle + black_angle != 6 || white_angle != black_angle) {
      throw AngleError("regular vertex " + std::to_string(v) + " does not close up");
    }
  }
  return s;
}

RealizedSurface realize(const emg::EnhancedMultigraph& g, const std::vector<labeling::PolygonBoundary>& boundaries,
                        const labeling::LabelMap& labels, const EdgeLengths& lengths,
                        std::optional<std::uint64_t> tree_seed) {
  return develop_surface(g, boundaries, realize_polygons(g, boundaries, labels, lengths), tree_seed);
}

// ---------------------------------------------------------------------------------------
// Unit triangulation

namespace {

UnitTriangle make_triangle(GridPoint a, GridPoint b, GridPoint c) {
  if (cross_sign(b - a, c - a) < 0) std::swap(b, c);
  UnitTriangle t{{a, b, c}, true};
  for (int i = 0; i < 3; ++i) {
    const GridPoint& p = t.v[i];
    const GridPoint& q = t.v[(i + 1) % 3];
    if (p.y == q.y) t.up = t.v[(i + 2) % 3].y > p.y;
  }
  return t;
}

// The m*m unit triangles of the equilateral triangle with corner c and legs m*a, m*b.
void emit_triangle(std::vector<UnitTriangle>& out, const GridPoint& c, const GridPoint& a, const GridPoint& b,
                   long long m) {
  auto at = [&](long long i, long long k) { return c + Rational(i) * a + Rational(k) * b; };
  for (long long i = 0; i < m; ++i) {
    for (long long k = 0; i + k < m; ++k) {
      out.push_back(make_triangle(at(i, k), at(i + 1, k), at(i, k + 1)));
      if (i + k + 2 <= m) out.push_back(make_triangle(at(i + 1, k), at(i, k + 1), at(i + 1, k + 1)));
    }
  }
}

// Strip of depth m along the side from p of length base in direction a; h is the unit
// step from p into the polygon along the previous side.
void emit_strip(std::vector<UnitTriangle>& out, const GridPoint& p, const GridPoint& a, const GridPoint& h,
                long long base, long long m) {
  for (long long r = 0; r < m; ++r) {
    GridPoint row = p + Rational(r) * h;
    long long len = base + r;
    auto bottom = [&](long long t) { return row + Rational(t) * a; };
    auto top = [&](long long t) { return row + h + Rational(t) * a; };
    for (long long t = 0; t < len; ++t) out.push_back(make_triangle(bottom(t), bottom(t + 1), top(t + 1)));
    for (long long t = 0; t <= len; ++t) out.push_back(make_triangle(bottom(t), top(t + 1), top(t)));
  }
}

long long to_ll(const Rational& q) {
  if (!is_integral(q)) throw Error("unit triangulation needs integer side lengths, got " + to_string(q));
  return numerator_of(q).convert_to<long long>();
}

}  // namespace

std::vector<UnitTriangle> unit_triangulate(const std::vector<GridPoint>& input) {
  std::vector<GridPoint> chain = input;
  if (chain.size() < 3) throw Error("unit triangulation needs at least three corners");
  if (signed_triarea(chain) < 0) std::reverse(chain.begin(), chain.end());

  // Side directions and lengths, then the six-slot frame starting at side 0.
  const std::size_t k = chain.size();
  std::vector<int> exps;
  std::vector<long long> lens;
  for (std::size_t i = 0; i < k; ++i) {
    GridPoint v = chain[(i + 1) % k] - chain[i];
    bool ok = false;
    for (int e = 0; e < 6 && !ok; ++e) {
      if (auto t = along(v, e); t && *t > 0) {
        exps.push_back(e);
        lens.push_back(to_ll(*t));
        ok = true;
      }
    }
    if (!ok) throw Error("polygon side is not along a lattice direction");
  }
  std::array<long long, 6> len{};
  int total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    int turn = static_cast<int>(mod_floor(exps[(i + 1) % k] - exps[i], 6));
    if (turn != 1 && turn != 2) throw Error("polygon is not convex with angles pi/3 and 2pi/3");
    len[static_cast<std::size_t>(mod_floor(exps[i] - exps[0], 6))] = lens[i];
    total += turn;
  }
  if (total != 6) throw Error("polygon does not turn once");

  auto dir = [&](long long s) { return direction(exps[0] + static_cast<int>(mod_floor(s, 6))); };
  std::array<GridPoint, 6> corner;
  corner[0] = chain[0];
  for (int s = 0; s < 5; ++s) corner[s + 1] = corner[s] + Rational(len[s]) * dir(s);
  auto frame = [&] { return std::vector<GridPoint>(corner.begin(), corner.end()); };
  auto idx = [](long long s) { return static_cast<std::size_t>(mod_floor(s, 6)); };

  std::vector<UnitTriangle> out;
  while (signed_triarea(frame()) != 0) {
    long long best_m = -1;
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < 6; ++j) {
      if (len[j] != 0 || len[idx(j - 1)] == 0 || len[idx(j + 1)] == 0) continue;
      long long m = std::min(len[idx(j - 1)], len[idx(j + 1)]);
      if (best_m < 0 || m < best_m) {
        best_m = m;
        best_j = j;
      }
    }
    if (best_m > 0) {
      const std::size_t j = best_j;
      const long long m = best_m;
      GridPoint c = corner[j];
      emit_triangle(out, c, -dir(j - 1), dir(j + 1), m);
      len[idx(j - 1)] -= m;
      len[idx(j + 1)] -= m;
      len[j] = m;
      corner[j] = c - Rational(m) * dir(j - 1);
      corner[idx(j + 1)] = c + Rational(m) * dir(j + 1);
      continue;
    }
    if (std::all_of(len.begin(), len.end(), [](long long l) { return l > 0; })) {
      std::size_t i = 0;
      long long m = -1;
      for (std::size_t s = 0; s < 6; ++s) {
        long long cand = std::min(len[idx(s - 1)], len[idx(s + 1)]);
        if (m < 0 || cand < m) {
          m = cand;
          i = s;
        }
      }
      emit_strip(out, corner[i], dir(i), -dir(i - 1), len[i], m);
      len[idx(i - 1)] -= m;
      len[idx(i + 1)] -= m;
      len[i] += m;
      corner[i] = corner[i] - Rational(m) * dir(i - 1);
      corner[idx(i + 1)] = corner[idx(i + 1)] + Rational(m) * dir(i + 1);
      continue;
    }
    throw Error("unit triangulation reached a shape it cannot cut");
  }
  return out;
}

// ---------------------------------------------------------------------------------------
// Global triangulation

long long ColoredTriangulation::euler_characteristic() const {
  return static_cast<long long>(vertex_count) - static_cast<long long>(edges.size()) +
         static_cast<long long>(triangles.size());
}

std::map<std::size_t, std::size_t> ColoredTriangulation::degree_histogram() const {
  std::map<std::size_t, std::size_t> h;
  for (auto d : degree) ++h[d];
  return h;
}

bool ColoredTriangulation::has_octahedral_degrees() const {
  auto h = degree_histogram();
  std::size_t fours = h.count(4) ? h.at(4) : 0;
  std::size_t sixes = h.count(6) ? h.at(6) : 0;
  return fours == 6 && fours + sixes == vertex_count;
}

ColoredTriangulation build_triangulation(const RealizedSurface& surface) {
  // Key: (kind, id, a, b). Corners: (0, surface vertex); side points: (1, edge, distance
  // from the white polygon's end); interior points: (2, polygon, chart x, chart y).
  using Key = std::tuple<int, std::size_t, Rational, Rational>;
  std::map<Key, std::size_t> index;
  ColoredTriangulation t;

  auto key_of = [&](std::size_t p, const GridPoint& q) -> Key {
    const RealizedPolygon& poly = surface.polygons[p];
    for (std::size_t i = 0; i < poly.side_count(); ++i)
      if (poly.chart[i] == q) return {0, poly.corner_of[i], Rational(0), Rational(0)};
    for (std::size_t i = 0; i < poly.side_count(); ++i) {
      auto s = along(q - poly.chart[i], poly.steps[i]);
      if (!s || *s <= 0 || *s >= poly.lengths[i]) continue;
      Rational from_white = poly.color == PolygonColor::White ? *s : poly.lengths[i] - *s;
      return {1, poly.edges[i], from_white, Rational(0)};
    }
    return {2, p, q.x, q.y};
  };

  for (std::size_t p = 0; p < surface.polygons.size(); ++p) {
    const RealizedPolygon& poly = surface.polygons[p];
    for (const UnitTriangle& tri : unit_triangulate(poly.chart)) {
      std::array<std::size_t, 3> ids{};
      for (int c = 0; c < 3; ++c) {
        Key key = key_of(p, tri.v[c]);
        GridPoint image = surface.place(p, tri.v[c]);
        auto [it, fresh] = index.emplace(key, t.vertex_count);
        if (fresh) {
          ++t.vertex_count;
          t.folded.push_back(image);
          t.surface_vertex.push_back(std::get<0>(key) == 0 ? std::optional<std::size_t>(std::get<1>(key))
                                                           : std::nullopt);
        } else if (!(t.folded[it->second] == image)) {
          throw MeshError("a subdivision point of polygon " + std::to_string(poly.vertex) +
                          " does not match its glued copy");
        }
        ids[c] = it->second;
      }
      t.triangles.push_back(ids);
      t.triangle_color.push_back(poly.color);
      t.triangle_polygon.push_back(p);
    }
  }

  std::map<std::pair<std::size_t, std::size_t>, int> edge_use;
  for (const auto& tri : t.triangles)
    for (int c = 0; c < 3; ++c) {
      auto a = tri[c], b = tri[(c + 1) % 3];
      ++edge_use[{std::min(a, b), std::max(a, b)}];
    }
  t.degree.assign(t.vertex_count, 0);
  for (const auto& [e, uses] : edge_use) {
    if (uses != 2) throw MeshError("a triangulation edge lies in " + std::to_string(uses) + " triangles");
    t.edges.push_back(e);
    ++t.degree[e.first];
    ++t.degree[e.second];
  }
  if (t.euler_characteristic() != 2)
    throw MeshError("triangulation has Euler characteristic " + std::to_string(t.euler_characteristic()));
  return t;
}

ColoringCheck four_color(ColoredTriangulation& t) {
  t.color.assign(t.vertex_count, 0);
  for (std::size_t v = 0; v < t.vertex_count; ++v) {
    if (!t.folded[v].is_eisenstein())
      throw ColorError("vertex " + std::to_string(v) + " folds to (" + to_string(t.folded[v].x) + ", " +
                       to_string(t.folded[v].y) + " sqrt3), not an Eisenstein integer");
    t.color[v] = t.folded[v].residue_class();
  }
  ColoringCheck check;
  check.proper = std::all_of(t.edges.begin(), t.edges.end(),
                             [&](const auto& e) { return t.color[e.first] != t.color[e.second]; });
  std::vector<long long> balance(t.vertex_count, 0);
  for (std::size_t i = 0; i < t.triangles.size(); ++i)
    for (auto v : t.triangles[i]) balance[v] += t.triangle_color[i] == PolygonColor::Black ? 1 : -1;
  check.balanced = std::all_of(balance.begin(), balance.end(), [](long long b) { return mod_floor(b, 3) == 0; });
  return check;
}

// ---------------------------------------------------------------------------------------
// Net

GridPoint Net::place(std::size_t polygon, const GridPoint& chart_point) const {
  const NetPlacement& n = polygons[polygon];
  GridPoint local = n.mirrored ? chart_point.conjugate() : chart_point;
  return local.rotated(n.rotation) + n.translation;
}

namespace {

// Interiors of two counterclockwise convex polygons meet.
bool interiors_meet(const std::vector<GridPoint>& a, const std::vector<GridPoint>& b) {
  auto separated_by = [](const std::vector<GridPoint>& p, const std::vector<GridPoint>& q) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      GridPoint edge = p[(i + 1) % p.size()] - p[i];
      if (std::all_of(q.begin(), q.end(), [&](const GridPoint& x) { return cross_sign(edge, x - p[i]) <= 0; }))
        return true;
    }
    return false;
  };
  return !separated_by(a, b) && !separated_by(b, a);
}

}  // namespace

Net develop_net(const RealizedSurface& surface) {
  const std::size_t n = surface.polygons.size();
  Net net;
  net.polygons.resize(n);
  net.parent.assign(n, Net::npos);
  net.parent_edge.assign(n, Net::npos);
  net.depth.assign(n, 0);
  for (std::size_t p = 0; p < n; ++p) net.polygons[p].mirrored = surface.polygons[p].color == PolygonColor::Black;

  std::vector<bool> placed(n, false);
  const std::size_t root = surface.base.polygon;
  net.polygons[root].rotation = surface.rotation;
  net.polygons[root].translation = surface.translation[root];
  placed[root] = true;
  std::deque<std::size_t> queue{root};
  while (!queue.empty()) {
    std::size_t p = queue.front();
    queue.pop_front();
    for (const Gluing& gl : surface.gluings) {
      bool from_white = gl.white_polygon == p;
      if (!from_white && gl.black_polygon != p) continue;
      std::size_t q = from_white ? gl.black_polygon : gl.white_polygon;
      if (placed[q]) continue;
      std::size_t sp = from_white ? gl.white_side : gl.black_side;
      std::size_t sq = from_white ? gl.black_side : gl.white_side;
      const auto& P = surface.polygons[p];
      const auto& Q = surface.polygons[q];
      GridPoint pa = net.place(p, P.chart[sp]);
      GridPoint pb = net.place(p, P.chart[(sp + 1) % P.side_count()]);
      NetPlacement& place = net.polygons[q];
      auto local = [&](const GridPoint& x) { return place.mirrored ? x.conjugate() : x; };
      GridPoint qa = local(Q.chart[(sq + 1) % Q.side_count()]);
      GridPoint qb = local(Q.chart[sq]);
      bool ok = false;
      for (int r = 0; r < 6 && !ok; ++r) {
        if ((qb - qa).rotated(r) == pb - pa) {
          place.rotation = r;
          place.translation = pa - qa.rotated(r);
          ok = true;
        }
      }
      if (!ok) throw GluingError("net cannot glue edge " + std::to_string(gl.edge));
      placed[q] = true;
      net.parent[q] = p;
      net.parent_edge[q] = gl.edge;
      net.depth[q] = net.depth[p] + 1;
      queue.push_back(q);
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    auto& pts = net.polygons[p].points;
    for (const auto& c : surface.polygons[p].chart) pts.push_back(net.place(p, c));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (interiors_meet(net.polygons[a].points, net.polygons[b].points)) net.overlaps.push_back({a, b});
  return net;
}

std::vector<GridPoint> cone_point_coordinates(const RealizedSurface& surface) {
  Net net = develop_net(surface);
  std::vector<GridPoint> out;
  for (std::size_t v : surface.cone_vertices()) {
    const auto& corners = surface.vertices[v].corners;
    auto best = *std::min_element(corners.begin(), corners.end(), [&](const auto& x, const auto& y) {
      return std::tie(net.depth[x.first], x.first) < std::tie(net.depth[y.first], y.first);
    });
    out.push_back(net.place(best.first, surface.polygons[best.first].chart[best.second]));
  }
  return out;
}

}  // namespace flatcone::geometry
