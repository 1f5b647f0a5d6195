#include "flatcone/svg.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace flatcone::svg {

using geometry::GridPoint;

namespace {

struct Canvas {
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool empty = true;

  void include(double x, double y) {
    if (empty) {
      min_x = max_x = x;
      min_y = max_y = y;
      empty = false;
      return;
    }
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
};

double to_double(const Rational& q) { return q.convert_to<double>(); }

// Screen coordinates: y up in the plane becomes y down in SVG.
std::pair<double, double> screen(const GridPoint& p) { return {to_double(p.x), -to_double(p.y) * std::sqrt(3.0)}; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v == 0.0 ? 0.0 : v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string point_list(const std::vector<GridPoint>& pts) {
  std::string out;
  for (const auto& p : pts) {
    auto [x, y] = screen(p);
    if (!out.empty()) out += ' ';
    out += num(x) + ',' + num(y);
  }
  return out;
}

GridPoint centroid(const std::vector<GridPoint>& pts) {
  GridPoint c;
  for (const auto& p : pts) c += p;
  return Rational(1, static_cast<long long>(pts.size())) * c;
}

GridPoint midpoint(const GridPoint& a, const GridPoint& b) { return Rational(1, 2) * (a + b); }

}  // namespace

std::string render(const emg::EnhancedMultigraph& g, const std::vector<labeling::PolygonBoundary>& boundaries,
                   const geometry::RealizedSurface& surface, const Options& options) {
  const geometry::Net net = geometry::develop_net(surface);
  const std::size_t n = surface.polygons.size();

  Canvas box;
  for (const auto& placement : net.polygons)
    for (const auto& p : placement.points) {
      auto [x, y] = screen(p);
      box.include(x, y);
    }
  const double width = box.max_x - box.min_x, height = box.max_y - box.min_y;
  const double pad = 0.05 * std::max(width, height);
  const double stroke = 0.004 * std::max(width, height);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(box.min_x - pad) << ' ' << num(box.min_y - pad)
      << ' ' << num(width + 2 * pad) << ' ' << num(height + 2 * pad) << "\">\n";
  out << "<g id=\"polygons\" stroke=\"#808080\" stroke-width=\"" << num(stroke) << "\" stroke-linejoin=\"round\">\n";
  for (std::size_t p = 0; p < n; ++p) {
    bool white = surface.polygons[p].color == emg::PolygonColor::White;
    out << "<polygon class=\"" << (white ? "white" : "black") << "\" data-vertex=\""
        << g.vertex(surface.polygons[p].vertex).id << "\" fill=\"" << (white ? kWhiteFill : kBlackFill)
        << "\" points=\"" << point_list(net.polygons[p].points) << "\"/>\n";
  }
  out << "</g>\n";

  if (options.triangles) {
    out << "<g id=\"triangles\" fill=\"none\" stroke=\"#A0A0A0\" stroke-width=\"" << num(stroke / 2) << "\">\n";
    for (std::size_t p = 0; p < n; ++p)
      for (const auto& tri : geometry::unit_triangulate(surface.polygons[p].chart)) {
        std::vector<GridPoint> pts;
        for (const auto& v : tri.v) pts.push_back(net.place(p, v));
        out << "<polygon class=\"tri\" points=\"" << point_list(pts) << "\"/>\n";
      }
    out << "</g>\n";
  }

  if (options.overlay_dual) {
    std::vector<std::size_t> polygon_of_vertex(g.vertex_count());
    for (std::size_t p = 0; p < n; ++p) polygon_of_vertex[surface.polygons[p].vertex] = p;
    std::vector<GridPoint> centers;
    for (std::size_t p = 0; p < n; ++p) centers.push_back(centroid(net.polygons[p].points));
    auto segment = [&](const GridPoint& a, const GridPoint& b) {
      auto [ax, ay] = screen(a);
      auto [bx, by] = screen(b);
      return "M" + num(ax) + ',' + num(ay) + " L" + num(bx) + ',' + num(by);
    };
    // Net position of chart side i's midpoint, and of the corner holding a red dart.
    auto side_mid = [&](std::size_t p, std::size_t e) {
      const auto& poly = surface.polygons[p];
      for (std::size_t i = 0; i < poly.side_count(); ++i)
        if (poly.edges[i] == e)
          return midpoint(net.polygons[p].points[i], net.polygons[p].points[(i + 1) % poly.side_count()]);
      throw Error("edge is not a side of the polygon");
    };
    auto red_corner = [&](emg::Dart d) {
      std::size_t p = polygon_of_vertex[g.vertex_of(d)];
      emg::Dart b = g.next_in_rotation(d);
      while (g.color_of(b) != emg::EdgeColor::Blue) b = g.next_in_rotation(b);
      const auto& sides = boundaries[surface.polygons[p].vertex].sides;
      for (std::size_t i = 0; i < sides.size(); ++i)
        if (sides[i] == b) return std::pair{p, net.polygons[p].points[i]};
      throw Error("red dart has no corner");
    };

    out << "<g id=\"dual\" fill=\"none\" stroke-width=\"" << num(1.5 * stroke) << "\" stroke-linecap=\"round\">\n";
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const emg::Edge& edge = g.edge(e);
      std::string path;
      const char* color;
      if (edge.color == emg::EdgeColor::Blue) {
        std::size_t a = polygon_of_vertex[edge.a], b = polygon_of_vertex[edge.b];
        path = segment(centers[a], side_mid(a, e)) + ' ' + segment(side_mid(b, e), centers[b]);
        color = "#1F5FD0";
      } else {
        auto [a, ca] = red_corner({e, 0});
        auto [b, cb] = red_corner({e, 1});
        path = segment(centers[a], midpoint(centers[a], ca)) + ' ' + segment(midpoint(centers[b], cb), centers[b]);
        color = "#D02020";
      }
      out << "<path class=\"" << (edge.color == emg::EdgeColor::Blue ? "blue" : "red") << "\" data-edge=\""
          << edge.id << "\" stroke=\"" << color << "\" d=\"" << path << "\"/>\n";
    }
    out << "</g>\n";
  }

  if (options.vertex_colors) {
    out << "<g id=\"vertex-colors\" stroke=\"none\">\n";
    std::set<GridPoint> drawn;
    for (std::size_t p = 0; p < n; ++p) {
      std::set<GridPoint> local;
      for (const auto& tri : geometry::unit_triangulate(surface.polygons[p].chart))
        for (const auto& v : tri.v) local.insert(v);
      for (const auto& v : local) {
        GridPoint at = net.place(p, v);
        if (!drawn.insert(at).second) continue;
        int color = surface.place(p, v).residue_class();
        auto [x, y] = screen(at);
        out << "<circle class=\"c" << color << "\" cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\""
            << num(3 * stroke) << "\" fill=\"" << kPalette[color] << "\"/>\n";
      }
    }
    out << "</g>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace flatcone::svg
