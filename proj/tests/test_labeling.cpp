#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "flatcone/families.hpp"
#include "flatcone/labeling.hpp"

using namespace flatcone;
using namespace flatcone::labeling;

TEST_SUITE("labeling") {
  TEST_CASE("hexagon: six sides, all corners obtuse, every slot used") {
    auto g = families::load_bundled("doubled-hexagon");
    auto b = polygon_boundaries(g);
    REQUIRE(b.size() == 2);
    for (const auto& p : b) {
      CHECK(p.side_count() == 6);
      CHECK(p.acute_count() == 0);
      CHECK(p.slots == std::vector<int>{0, 1, 2, 3, 4, 5});
    }
  }

  TEST_CASE("triangle: alternating red darts give three acute corners") {
    auto g = emg::parse_emg(fixtures::kDoubledTriangle);
    for (const auto& p : polygon_boundaries(g)) {
      CHECK(p.side_count() == 3);
      CHECK(p.acute_count() == 3);
      CHECK(p.slots == std::vector<int>{0, 2, 4});
    }
  }

  TEST_CASE("trapezoid: red darts flanking one side put the long side in slot 0") {
    auto g = emg::parse_emg(fixtures::kDoubledTrapezoid);
    for (const auto& p : polygon_boundaries(g)) {
      CHECK(p.side_count() == 4);
      CHECK(p.acute_count() == 2);
      std::set<int> slots(p.slots.begin(), p.slots.end());
      CHECK(slots == std::set<int>{0, 2, 3, 4});
      // The slot-0 side is blue edge 0, flanked by both acute corners.
      CHECK(p.sides[0].edge == g.edge_index(0));
      CHECK(p.corners.back() == CornerKind::Acute);
      CHECK(p.corners.front() == CornerKind::Acute);
    }
  }

  TEST_CASE("corner and side counts obey the polygon identities") {
    for (int k = 3; k <= 8; ++k) {
      auto g = families::gen_spiral(k);
      for (const auto& p : polygon_boundaries(g)) {
        const std::size_t acute = p.acute_count(), sides = p.side_count();
        CHECK(sides + acute == 6);
        CHECK(acute == g.red_degree(p.vertex));
        CHECK(acute + 2 * (sides - acute) == 3 * (sides - 2));
        int total = 0;
        for (auto c : p.corners) total += turn(c);
        CHECK(total == 6);
      }
    }
  }

  TEST_CASE("two red darts in one corner are rejected") {
    auto text = fixtures::replace_line(fixtures::kDoubledTrapezoid, "rot 0 4:0 0:0 5:0", "rot 0 4:0 5:0 0:0");
    CHECK_THROWS_AS(polygon_boundaries(emg::parse_emg(text)), emg::StructureError);
  }

  TEST_CASE("white hexagon seeded at exponent 0 turns once around") {
    auto g = families::load_bundled("doubled-hexagon");
    auto b = polygon_boundaries(g);
    auto labels = assign_labels(g, b, SeedFlag{0, 0});
    std::vector<int> seen;
    for (auto d : b[0].sides) seen.push_back(labels[d.edge]);
    CHECK(seen == std::vector<int>{0, 1, 2, 3, 4, 5});
  }

  // Independent check: walking each polygon, consecutive sides differ by the signed turn.
  void check_directional_closure(const emg::EnhancedMultigraph& g, const std::vector<PolygonBoundary>& b,
                                 const LabelMap& labels) {
    for (const auto& p : b) {
      const int sign = p.color == emg::PolygonColor::White ? 1 : -1;
      int sum = 0;
      for (std::size_t i = 0; i < p.side_count(); ++i) {
        int here = labels[p.sides[i].edge];
        int next = labels[p.sides[(i + 1) % p.side_count()].edge];
        CHECK(mod_floor(next - here - sign * turn(p.corners[i]), 6) == 0);
        sum += turn(p.corners[i]);
      }
      CHECK(sum == 6);
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (g.edge(e).color == emg::EdgeColor::Blue)
        CHECK((labels[e] >= 0 && labels[e] < 6));
      else
        CHECK(labels[e] == -1);
    }
  }

  TEST_CASE("spiral instances label without holonomy defects") {
    for (int k = 3; k <= 8; ++k) {
      auto g = families::gen_spiral(k);
      auto b = polygon_boundaries(g);
      check_directional_closure(g, b, assign_labels(g, b));
    }
  }

  TEST_CASE("moving one red dart produces a holonomy contradiction") {
    auto g = emg::parse_emg(fixtures::mutated_spiral());
    CHECK_THROWS_AS(assign_labels(g, polygon_boundaries(g)), HolonomyError);
  }

  TEST_CASE("reseeding shifts every exponent by the same amount") {
    auto g = families::gen_spiral(4);
    auto b = polygon_boundaries(g);
    auto base = assign_labels(g, b);
    for (const auto& p : b) {
      for (auto d : p.sides) {
        SeedFlag seed{g.vertex(p.vertex).id, g.edge(d.edge).id};
        auto other = assign_labels(g, b, seed);
        CHECK(other[d.edge] == 0);
        std::set<long long> offsets;
        for (std::size_t e = 0; e < g.edge_count(); ++e)
          if (base[e] >= 0) offsets.insert(mod_floor(other[e] - base[e], 6));
        CHECK(offsets.size() == 1);
      }
    }
  }

  TEST_CASE("seed flags parse from v:e") {
    auto s = parse_seed_flag("12:7");
    CHECK(s.vertex_id == 12);
    CHECK(s.edge_id == 7);
    CHECK_THROWS_AS(parse_seed_flag("12"), Error);
    auto g = families::gen_spiral(3);
    auto b = polygon_boundaries(g);
    CHECK_THROWS_AS(assign_labels(g, b, SeedFlag{0, 5}), Error);  // edge 5 does not touch vertex 0
  }
}
