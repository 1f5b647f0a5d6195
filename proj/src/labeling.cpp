#include "flatcone/labeling.hpp"

#include <algorithm>
#include <deque>

namespace flatcone::labeling {

using emg::Dart;
using emg::EdgeColor;
using emg::StructureError;

std::size_t PolygonBoundary::acute_count() const {
  return static_cast<std::size_t>(std::count(corners.begin(), corners.end(), CornerKind::Acute));
}

namespace {

std::vector<int> slots_from(const std::vector<CornerKind>& corners, std::size_t start) {
  std::vector<int> slots;
  int s = 0;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    slots.push_back(s);
    s += turn(corners[(start + i) % corners.size()]);
  }
  return slots;
}

}  // namespace

std::vector<PolygonBoundary> polygon_boundaries(const emg::EnhancedMultigraph& g) {
  std::vector<PolygonBoundary> out;
  out.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::string where = "polygon " + std::to_string(g.vertex(v).id);
    auto rot = g.rotation(v);
    std::vector<std::size_t> blue_positions;
    for (std::size_t i = 0; i < rot.size(); ++i)
      if (g.color_of(rot[i]) == EdgeColor::Blue) blue_positions.push_back(i);
    if (blue_positions.size() < 3) throw StructureError(where + " has fewer than 3 blue sides");

    std::vector<Dart> sides;
    std::vector<CornerKind> corners;
    for (std::size_t j = 0; j < blue_positions.size(); ++j) {
      std::size_t here = blue_positions[j];
      std::size_t next = blue_positions[(j + 1) % blue_positions.size()];
      std::size_t reds = (next + rot.size() - here - 1) % rot.size();
      if (reds > 1) throw StructureError(where + " has " + std::to_string(reds) + " red darts in one corner");
      sides.push_back(rot[here]);
      corners.push_back(reds == 1 ? CornerKind::Acute : CornerKind::Obtuse);
    }
    int total = 0;
    for (auto c : corners) total += turn(c);
    if (total != 6)
      throw StructureError(where + " turns by " + std::to_string(total) + " units of pi/3 instead of 6");

    // Slot 0 goes to the side whose corner turns, read from the corner just before it,
    // form the lexicographically largest sequence: the side after the longest run of
    // acute corners. Among equal choices the earliest in rotation order wins.
    const std::size_t k = sides.size();
    auto key = [&](std::size_t s) {
      std::vector<int> t;
      for (std::size_t i = 0; i < k; ++i) t.push_back(turn(corners[(s + k - 1 + i) % k]));
      return t;
    };
    std::size_t best = 0;
    std::vector<int> best_key = key(0);
    for (std::size_t s = 1; s < k; ++s) {
      auto cand = key(s);
      if (cand > best_key) {
        best = s;
        best_key = std::move(cand);
      }
    }
    std::vector<int> best_slots = slots_from(corners, best);
    PolygonBoundary b;
    b.vertex = v;
    b.color = g.vertex(v).color;
    for (std::size_t i = 0; i < sides.size(); ++i) {
      b.sides.push_back(sides[(best + i) % sides.size()]);
      b.corners.push_back(corners[(best + i) % sides.size()]);
    }
    b.slots = std::move(best_slots);
    out.push_back(std::move(b));
  }
  return out;
}

SeedFlag default_seed(const emg::EnhancedMultigraph& g, const std::vector<PolygonBoundary>& boundaries) {
  if (boundaries.empty()) throw Error("no polygons to seed");
  const auto& b = boundaries.front();
  return {g.vertex(b.vertex).id, g.edge(b.sides.front().edge).id};
}

LabelMap assign_labels(const emg::EnhancedMultigraph& g, const std::vector<PolygonBoundary>& boundaries,
                       std::optional<SeedFlag> seed) {
  LabelMap labels;
  labels.seed = seed.value_or(default_seed(g, boundaries));
  labels.exponent.assign(g.edge_count(), -1);

  std::size_t seed_vertex = g.vertex_index(labels.seed.vertex_id);
  std::size_t seed_edge = g.edge_index(labels.seed.edge_id);
  const auto& seed_sides = boundaries.at(seed_vertex).sides;
  if (std::none_of(seed_sides.begin(), seed_sides.end(), [&](Dart d) { return d.edge == seed_edge; }))
    throw Error("seed edge " + std::to_string(labels.seed.edge_id) + " is not a side of polygon " +
                std::to_string(labels.seed.vertex_id));
  labels.exponent[seed_edge] = 0;

  std::vector<bool> done(g.vertex_count(), false);
  std::deque<std::size_t> queue{seed_vertex};
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    if (done[v]) continue;
    const PolygonBoundary& b = boundaries[v];
    const std::size_t k = b.sides.size();
    std::size_t start = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (labels.exponent[b.sides[i].edge] >= 0) {
        start = i;
        break;
      }
    }
    if (start == k) continue;  // reached again later through a labeled neighbor
    done[v] = true;
    const int sign = b.color == emg::PolygonColor::White ? 1 : -1;
    int current = labels.exponent[b.sides[start].edge];
    for (std::size_t step = 1; step <= k; ++step) {
      std::size_t i = (start + step) % k;
      current = static_cast<int>(mod_floor(current + sign * turn(b.corners[(i + k - 1) % k]), 6));
      int& slot = labels.exponent[b.sides[i].edge];
      if (slot >= 0 && slot != current)
        throw HolonomyError("edge " + std::to_string(g.edge(b.sides[i].edge).id) + " gets exponents " +
                            std::to_string(slot) + " and " + std::to_string(current) + " around polygon " +
                            std::to_string(g.vertex(v).id));
      slot = current;
    }
    for (Dart d : b.sides) {
      std::size_t w = g.opposite_vertex(d);
      if (!done[w]) queue.push_back(w);
    }
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).color == EdgeColor::Blue && labels.exponent[e] < 0)
      throw Error("blue edge " + std::to_string(g.edge(e).id) + " is unreachable from the seed");
  }
  return labels;
}

SeedFlag parse_seed_flag(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error("seed flag must look like v:e");
  auto number = [&](std::string_view s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw Error("seed flag must look like v:e, got '" + std::string(text) + "'");
    return std::stoi(std::string(s));
  };
  return {number(text.substr(0, colon)), number(text.substr(colon + 1))};
}

}  // namespace flatcone::labeling
