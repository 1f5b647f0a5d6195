#include "flatcone/families.hpp"

#include <algorithm>
#include <map>

#include "flatcone/labeling.hpp"

namespace flatcone::families {

namespace {

using emg::EdgeColor;

// Mutable rotation system used while a generator is running.
class Builder {
 public:
  struct BEdge {
    int a, b;
    EdgeColor color;
  };
  using BDart = std::pair<int, int>;  // (edge, end)

  void add_vertex(int v) { rot_[v]; }

  int at(BDart d) const { return d.second == 0 ? edges_[d.first].a : edges_[d.first].b; }
  static BDart rev(BDart d) { return {d.first, 1 - d.second}; }

  const std::vector<BEdge>& edges() const { return edges_; }
  std::vector<BDart>& rotation(int v) { return rot_.at(v); }

  // New edge a-b; its darts go right after the given darts, or at the end if absent.
  int add_edge(int a, int b, EdgeColor color, std::optional<BDart> after_a, std::optional<BDart> after_b) {
    int e = static_cast<int>(edges_.size());
    edges_.push_back({a, b, color});
    place({e, 0}, a, after_a);
    place({e, 1}, b, after_b);
    return e;
  }

  void insert_after(int v, BDart anchor, BDart d) { place(d, v, anchor); }
  void insert_before(int v, BDart anchor, BDart d) {
    auto& r = rot_.at(v);
    r.insert(std::find(r.begin(), r.end(), anchor), d);
  }

  std::vector<std::vector<BDart>> blue_faces() const {
    std::map<int, std::vector<BDart>> blue_rot;
    for (const auto& [v, r] : rot_)
      for (const auto& d : r)
        if (edges_[d.first].color == EdgeColor::Blue) blue_rot[v].push_back(d);
    std::vector<std::vector<BDart>> faces;
    std::vector<bool> seen(2 * edges_.size(), false);
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      if (edges_[e].color != EdgeColor::Blue) continue;
      for (int end : {0, 1}) {
        BDart d{e, end};
        if (seen[2 * e + end]) continue;
        std::vector<BDart> face;
        while (!seen[2 * d.first + d.second]) {
          seen[2 * d.first + d.second] = true;
          face.push_back(d);
          BDart r = rev(d);
          const auto& rr = blue_rot.at(at(r));
          auto it = std::find(rr.begin(), rr.end(), r);
          d = (std::next(it) == rr.end()) ? rr.front() : *std::next(it);
        }
        faces.push_back(std::move(face));
      }
    }
    return faces;
  }

  std::vector<BDart> face_with_vertices(std::vector<int> vs) const {
    std::sort(vs.begin(), vs.end());
    for (auto& f : blue_faces()) {
      std::vector<int> fv;
      for (auto d : f) fv.push_back(at(d));
      std::sort(fv.begin(), fv.end());
      if (fv == vs) return f;
    }
    throw ConstructionError("spiral construction lost its outer face");
  }

  int edge_between(int u, int v) const {
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      const auto& x = edges_[e];
      if ((x.a == u && x.b == v) || (x.a == v && x.b == u)) return e;
    }
    throw ConstructionError("no edge between " + std::to_string(u) + " and " + std::to_string(v));
  }

  emg::EnhancedMultigraph finish(const std::map<int, emg::PolygonColor>& colors) const {
    std::vector<emg::VertexRecord> vs;
    for (const auto& [v, c] : colors) vs.push_back({v, c});
    std::vector<emg::EdgeRecord> es;
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e)
      es.push_back({e, edges_[e].a, edges_[e].b, edges_[e].color});
    std::vector<emg::RotationRecord> rs;
    for (const auto& [v, r] : rot_) {
      emg::RotationRecord rec{v, {}};
      for (auto d : r) rec.darts.push_back({d.first, d.second});
      rs.push_back(std::move(rec));
    }
    return emg::EnhancedMultigraph(std::move(vs), std::move(es), std::move(rs));
  }

 private:
  void place(BDart d, int v, std::optional<BDart> after) {
    auto& r = rot_.at(v);
    if (!after) {
      r.push_back(d);
      return;
    }
    auto it = std::find(r.begin(), r.end(), *after);
    if (it == r.end()) throw ConstructionError("anchor dart missing from rotation");
    r.insert(std::next(it), d);
  }

  std::vector<BEdge> edges_;
  std::map<int, std::vector<BDart>> rot_;
};

void spiral_quadrangulation(Builder& b, int n_vertices) {
  for (int v = 0; v < 4; ++v) b.add_vertex(v);
  for (int i = 0; i < 4; ++i) b.add_edge(i, (i + 1) % 4, EdgeColor::Blue, std::nullopt, std::nullopt);
  std::vector<int> outer{3, 0, 1, 2};  // newest vertex first
  for (int n = 4; n < n_vertices; ++n) {
    auto face = b.face_with_vertices(outer);
    auto corner = [&](int x) {
      for (auto d : face)
        if (b.at(Builder::rev(d)) == x) return Builder::rev(d);
      throw ConstructionError("outer face has no corner at " + std::to_string(x));
    };
    const int a0 = outer[0], a2 = outer[2], a3 = outer[3];
    auto c0 = corner(a0);
    auto c2 = corner(a2);
    b.add_vertex(n);
    b.add_edge(n, a0, EdgeColor::Blue, std::nullopt, c0);
    b.add_edge(n, a2, EdgeColor::Blue, std::nullopt, c2);
    outer = {n, a2, a3, a0};
  }
}

std::map<int, emg::PolygonColor> two_color(const Builder& b, int n_vertices) {
  std::map<int, emg::PolygonColor> color{{0, emg::PolygonColor::White}};
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& e : b.edges()) {
      if (e.a != v && e.b != v) continue;
      int w = e.a == v ? e.b : e.a;
      auto want = emg::opposite(color.at(v));
      auto [it, fresh] = color.emplace(w, want);
      if (fresh)
        stack.push_back(w);
      else if (it->second != want)
        throw ConstructionError("spiral quadrangulation is not bipartite");
    }
  }
  if (static_cast<int>(color.size()) != n_vertices) throw ConstructionError("spiral quadrangulation is disconnected");
  return color;
}

}  // namespace

emg::EnhancedMultigraph gen_spiral(int k) {
  if (k < 3) throw ConstructionError("spiral family needs k >= 3, got " + std::to_string(k));
  const int n = 2 * k;
  Builder b;
  spiral_quadrangulation(b, n);
  const auto colors = two_color(b, n);
  const int quad_edges = static_cast<int>(b.edges().size());

  std::vector<int> red_along;
  red_along.push_back(b.edge_between(0, 1));
  for (int j = 2; j <= k - 2; ++j) red_along.push_back(b.edge_between(2 * j + 1, 2 * j - 2));
  red_along.push_back(b.edge_between(2 * k - 1, 2 * k - 2));

  const std::vector<std::pair<int, int>> parallels{{1, 2}, {3, 0}, {3, 0}, {2 * k - 2, 2 * k - 3},
                                                   {2 * k - 1, 2 * k - 4}, {2 * k - 1, 2 * k - 4}};
  for (auto [u, v] : parallels) {
    int e = b.edge_between(u, v);
    const int a = b.edges()[e].a, c = b.edges()[e].b;
    int copy = b.add_edge(a, c, EdgeColor::Blue, Builder::BDart{e, 0}, std::nullopt);
    // the end-1 dart goes right before e's end-1 dart instead of at the end
    auto& rc = b.rotation(c);
    rc.pop_back();
    b.insert_before(c, {e, 1}, {copy, 1});
  }

  auto is_red_carrier = [&](int e) {
    if (std::find(red_along.begin(), red_along.end(), e) != red_along.end()) return true;
    if (e < quad_edges) return false;
    const auto& x = b.edges()[e];
    return std::any_of(red_along.begin(), red_along.end(), [&](int r) {
      return b.edges()[r].a == x.a && b.edges()[r].b == x.b;
    });
  };
  for (const auto& face : b.blue_faces()) {
    if (face.size() != 4) continue;
    std::vector<Builder::BDart> carriers;
    for (auto d : face)
      if (is_red_carrier(d.first)) carriers.push_back(d);
    if (carriers.size() != 1)
      throw ConstructionError("spiral quadrilateral with " + std::to_string(carriers.size()) + " red carriers (k=" +
                              std::to_string(k) + ")");
    auto d = carriers.front();
    int tail = b.at(d), head = b.at(Builder::rev(d));
    int red = b.add_edge(tail, head, EdgeColor::Red, std::nullopt, std::nullopt);
    b.rotation(tail).pop_back();
    b.rotation(head).pop_back();
    b.insert_after(head, Builder::rev(d), {red, 1});
    b.insert_before(tail, d, {red, 0});
  }

  emg::EnhancedMultigraph g = b.finish(colors);
  auto report = emg::validate_plausible(g);
  if (!report.plausible) {
    std::string msg = "spiral k=" + std::to_string(k) + " is not plausible:";
    for (const auto& f : report.findings) msg += " [" + std::string(emg::to_string(f.rule)) + "] " + f.message + ";";
    throw ConstructionError(msg);
  }
  try {
    labeling::assign_labels(g, labeling::polygon_boundaries(g));
  } catch (const Error& e) {
    throw ConstructionError("spiral k=" + std::to_string(k) + " cannot be labeled: " + e.what());
  }
  return g;
}

std::vector<std::string> bundled_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : detail::bundled_files()) names.emplace_back(name);
  std::sort(names.begin(), names.end());
  return names;
}

std::string_view bundled_text(std::string_view name) {
  for (const auto& [n, text] : detail::bundled_files())
    if (n == name) return text;
  std::string known;
  for (const auto& n : bundled_names()) known += (known.empty() ? "" : ", ") + n;
  throw RegistryError("no bundled instance named '" + std::string(name) + "' (known: " + known + ")");
}

emg::EnhancedMultigraph load_bundled(std::string_view name) { return emg::parse_emg(bundled_text(name)); }

}  // namespace flatcone::families
