#include <doctest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "flatcone/families.hpp"
#include "flatcone/geometry.hpp"
#include "flatcone/pipeline.hpp"

using namespace flatcone;
using namespace flatcone::geometry;

namespace {

GridPoint pt(Rational x, Rational y) { return {std::move(x), std::move(y)}; }

std::vector<IntVector> positive_points(const pipeline::Instance& inst, long long bound) {
  std::vector<IntVector> out;
  for (const auto& p : cone::enumerate_lattice_points(inst.cone, inst.lattice, bound).points)
    if (p.strictly_positive) out.push_back(p.edges);
  return out;
}

IntVector scaled(const IntVector& v, long long s) {
  IntVector out;
  for (const auto& x : v) out.push_back(x * s);
  return out;
}

IntVector sum(const IntVector& a, const IntVector& b) {
  IntVector out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

const pipeline::Instance& spiral3() {
  static const pipeline::Instance inst = pipeline::analyze("spiral-3", families::gen_spiral(3));
  return inst;
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("grid directions are the sixth roots of unity") {
    CHECK(direction(0) == pt(1, 0));
    CHECK(direction(1) == pt(Rational(1, 2), Rational(1, 2)));
    CHECK(direction(3) == pt(-1, 0));
    for (int e = -6; e < 12; ++e) {
      CHECK(direction(e).norm() == 1);
      CHECK(direction(e) == direction(e + 6));
      CHECK(direction(e).rotated(1) == direction(e + 1));
      CHECK(direction(e).is_eisenstein());
    }
    CHECK(pt(Rational(1, 2), 0).is_eisenstein() == false);
    CHECK(pt(0, 0).residue_class() == 0);
  }

  TEST_CASE("triarea of small polygons") {
    std::vector<GridPoint> tri{pt(0, 0), pt(1, 0), pt(Rational(1, 2), Rational(1, 2))};
    CHECK(triarea(tri) == 1);
    CHECK(signed_triarea(tri) == 1);
    std::vector<GridPoint> rev(tri.rbegin(), tri.rend());
    CHECK(signed_triarea(rev) == -1);
    std::vector<GridPoint> hex;
    GridPoint p;
    for (int e = 0; e < 6; ++e) {
      hex.push_back(p);
      p += direction(e);
    }
    CHECK(triarea(hex) == 6);
    CHECK(oracle::count_unit_triangles(hex) == 6);
  }

  TEST_CASE("unit triangulation of small charts") {
    std::vector<GridPoint> tri{pt(0, 0), pt(1, 0), pt(Rational(1, 2), Rational(1, 2))};
    CHECK(unit_triangulate(tri).size() == 1);
    std::vector<GridPoint> par{pt(0, 0), pt(2, 0), pt(Rational(5, 2), Rational(1, 2)), pt(Rational(1, 2), Rational(1, 2))};
    auto t = unit_triangulate(par);
    CHECK(t.size() == 4);
    CHECK(oracle::count_unit_triangles(par) == 4);
    std::size_t up = 0;
    for (const auto& x : t) {
      CHECK(triarea({x.v[0], x.v[1], x.v[2]}) == 1);
      CHECK(signed_triarea({x.v[0], x.v[1], x.v[2]}) == 1);
      up += x.up;
    }
    CHECK(up == 2);
  }

  TEST_CASE("doubled trapezoid with sides 2, 1, 1, 1") {
    auto g = emg::parse_emg(fixtures::kDoubledTrapezoid);
    auto b = labeling::polygon_boundaries(g);
    auto labels = labeling::assign_labels(g, b);
    auto s = shapesys::build_constraints(g, b, labels);
    auto polys = realize_polygons(g, b, labels, lengths_from_columns(s, IntVector{2, 1, 1, 1}));
    REQUIRE(polys.size() == 2);
    for (const auto& p : polys) {
      CHECK(p.side_count() == 4);
      CHECK(p.chart[0] == pt(0, 0));
      CHECK(triarea(p.chart) == 3);
      CHECK(unit_triangulate(p.chart).size() == 3);
      CHECK(oracle::count_unit_triangles(p.chart) == 3);
      // Interior angles in sixths of a turn: 1 at the ends of the long side, 2 elsewhere.
      std::multiset<int> angles;
      for (std::size_t i = 0; i < 4; ++i) {
        int d = mod_floor(p.steps[i] - p.steps[(i + 3) % 4], 6);
        angles.insert(3 - (p.color == emg::PolygonColor::White ? d : 6 - d));
      }
      CHECK(angles == std::multiset<int>{1, 1, 2, 2});
    }
    CHECK(signed_triarea(polys[0].chart) > 0);
    CHECK(signed_triarea(polys[1].chart) < 0);
  }

  TEST_CASE("lengths violating one constraint do not close") {
    auto g = emg::parse_emg(fixtures::kDoubledTrapezoid);
    auto b = labeling::polygon_boundaries(g);
    auto labels = labeling::assign_labels(g, b);
    auto s = shapesys::build_constraints(g, b, labels);
    CHECK_THROWS_AS(realize_polygons(g, b, labels, lengths_from_columns(s, IntVector{3, 1, 1, 1})), ClosureError);
    CHECK_THROWS_AS(realize_polygons(g, b, labels, lengths_from_columns(s, IntVector{2, 2, 1, 1})), ClosureError);
    CHECK_THROWS_AS(realize_polygons(g, b, labels, lengths_from_columns(s, IntVector{0, 0, 0, 0})), ClosureError);
  }

  TEST_CASE("a spiral point realizes with six cone vertices") {
    const auto& inst = spiral3();
    auto pts = positive_points(inst, 3);
    REQUIRE_FALSE(pts.empty());
    for (const auto& cols : pts) {
      auto r = pipeline::realize_point(inst, cols);
      CHECK(r.surface.cone_vertices().size() == 6);
      CHECK(r.ok());
      CHECK(r.triangulation.euler_characteristic() == 2);
      CHECK(r.cone_points.size() == 6);
      CHECK(r.cone_points[0] == pt(0, 0));
      // Polygon triangulations match the centroid count.
      for (const auto& p : r.surface.polygons)
        CHECK(unit_triangulate(p.chart).size() == oracle::count_unit_triangles(p.chart));
    }
  }

  TEST_CASE("folded images do not depend on the spanning tree") {
    const auto& inst = spiral3();
    auto cols = positive_points(inst, 3).front();
    auto base = pipeline::realize_point(inst, cols).surface.folded_images();
    for (std::uint64_t seed : {1u, 2u, 3u, 99u}) CHECK(pipeline::realize_point(inst, cols, seed).surface.folded_images() == base);
  }

  TEST_CASE("scaling the lengths scales the developments") {
    const auto& inst = spiral3();
    auto pts = positive_points(inst, 3);
    REQUIRE(pts.size() >= 2);
    auto a = pipeline::realize_point(inst, pts[0]);
    auto b = pipeline::realize_point(inst, pts[1]);
    auto two = pipeline::realize_point(inst, scaled(pts[0], 2));
    auto both = pipeline::realize_point(inst, sum(pts[0], pts[1]));
    auto fa = a.surface.folded_images(), f2 = two.surface.folded_images();
    REQUIRE(fa.size() == f2.size());
    for (std::size_t i = 0; i < fa.size(); ++i) CHECK(f2[i] == Rational(2) * fa[i]);
    for (std::size_t i = 0; i < a.cone_points.size(); ++i) {
      CHECK(two.cone_points[i] == Rational(2) * a.cone_points[i]);
      CHECK(both.cone_points[i] == a.cone_points[i] + b.cone_points[i]);
    }
    CHECK(two.triangulation.triangles.size() == 4 * a.triangulation.triangles.size());
  }

  TEST_CASE("coloring is proper and balanced by direct recount") {
    const auto& inst = spiral3();
    for (const auto& cols : positive_points(inst, 3)) {
      auto r = pipeline::realize_point(inst, cols);
      const auto& t = r.triangulation;
      REQUIRE(t.color.size() == t.vertex_count);
      for (const auto& tri : t.triangles)
        for (int i = 0; i < 3; ++i) {
          std::size_t u = tri[i], v = tri[(i + 1) % 3];
          CHECK((t.folded[u] - t.folded[v]).norm() == 1);
          CHECK(oracle::different_classes(t.folded[u], t.folded[v]));
          CHECK(t.color[u] != t.color[v]);
        }
      std::vector<long long> balance(t.vertex_count, 0);
      for (std::size_t i = 0; i < t.triangles.size(); ++i)
        for (auto v : t.triangles[i]) balance[v] += t.triangle_color[i] == emg::PolygonColor::Black ? 1 : -1;
      for (auto x : balance) CHECK(mod_floor(x, 3) == 0);
      std::set<int> used(t.color.begin(), t.color.end());
      CHECK(used.size() == 4);
    }
  }

  TEST_CASE("every edge of the mesh lies in exactly two triangles") {
    const auto& inst = spiral3();
    auto r = pipeline::realize_point(inst, positive_points(inst, 3).front());
    std::map<std::pair<std::size_t, std::size_t>, int> uses;
    for (const auto& tri : r.triangulation.triangles)
      for (int i = 0; i < 3; ++i) {
        auto u = tri[i], v = tri[(i + 1) % 3];
        ++uses[{std::min(u, v), std::max(u, v)}];
      }
    for (const auto& [e, n] : uses) CHECK(n == 2);
    CHECK(uses.size() == r.triangulation.edges.size());
    CHECK(r.triangulation.has_octahedral_degrees());
  }

  TEST_CASE("net neighbours share their glued side") {
    const auto& inst = spiral3();
    auto r = pipeline::realize_point(inst, positive_points(inst, 3).front());
    auto net = develop_net(r.surface);
    std::size_t roots = 0;
    for (std::size_t p = 0; p < net.polygons.size(); ++p) {
      if (net.parent[p] == Net::npos) {
        ++roots;
        CHECK(p == r.surface.base.polygon);
        continue;
      }
      CHECK(net.depth[p] == net.depth[net.parent[p]] + 1);
      auto side_points = [&](std::size_t poly) {
        const auto& rp = r.surface.polygons[poly];
        for (std::size_t i = 0; i < rp.side_count(); ++i)
          if (rp.edges[i] == net.parent_edge[p])
            return std::set<GridPoint>{net.polygons[poly].points[i], net.polygons[poly].points[(i + 1) % rp.side_count()]};
        return std::set<GridPoint>{};
      };
      CHECK(side_points(p) == side_points(net.parent[p]));
      CHECK(side_points(p).size() == 2);
    }
    CHECK(roots == 1);
  }

  TEST_CASE("every spiral up to k=6 realizes its smallest positive point") {
    for (int k = 3; k <= 6; ++k) {
      auto inst = pipeline::analyze("spiral", families::gen_spiral(k));
      auto pts = positive_points(inst, 2);
      REQUIRE_FALSE(pts.empty());
      auto r = pipeline::realize_point(inst, pts.front());
      CHECK(r.ok());
      CHECK(r.surface.cone_vertices().size() == 6);
    }
  }
}
