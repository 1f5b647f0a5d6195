#include "flatcone/emg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace flatcone::emg {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

// ---------------------------------------------------------------------------------------
// EnhancedMultigraph

EnhancedMultigraph::EnhancedMultigraph(std::vector<VertexRecord> vertices,
                                       std::vector<EdgeRecord> edges,
                                       std::vector<RotationRecord> rotations) {
  std::sort(vertices.begin(), vertices.end(), [](auto& x, auto& y) { return x.id < y.id; });
  std::sort(edges.begin(), edges.end(), [](auto& x, auto& y) { return x.id < y.id; });
  for (const auto& v : vertices) {
    if (v.id < 0) throw StructureError("negative vertex id " + std::to_string(v.id));
    if (!vertex_by_id_.emplace(v.id, vertices_.size()).second)
      throw StructureError("duplicate vertex " + std::to_string(v.id));
    vertices_.push_back({v.id, v.color});
  }
  for (const auto& e : edges) {
    if (e.id < 0) throw StructureError("negative edge id " + std::to_string(e.id));
    if (!edge_by_id_.emplace(e.id, edges_.size()).second)
      throw StructureError("duplicate edge " + std::to_string(e.id));
    auto a = find_vertex(e.a);
    auto b = find_vertex(e.b);
    if (!a) throw StructureError("unknown vertex " + std::to_string(e.a));
    if (!b) throw StructureError("unknown vertex " + std::to_string(e.b));
    edges_.push_back({e.id, *a, *b, e.color});
  }
  rotations_.assign(vertices_.size(), {});
  position_.assign(2 * edges_.size(), static_cast<std::size_t>(-1));
  std::vector<bool> has_rotation(vertices_.size(), false);
  for (const auto& r : rotations) {
    auto v = find_vertex(r.vertex);
    if (!v) throw StructureError("unknown vertex " + std::to_string(r.vertex));
    if (has_rotation[*v]) throw StructureError("second rotation for vertex " + std::to_string(r.vertex));
    has_rotation[*v] = true;
    for (const auto& dr : r.darts) {
      auto e = find_edge(dr.edge);
      if (!e) throw StructureError("unknown edge " + std::to_string(dr.edge));
      if (dr.end != 0 && dr.end != 1) throw StructureError("dart end must be 0 or 1");
      Dart d{*e, dr.end};
      if (vertex_of(d) != *v)
        throw StructureError("dart " + std::to_string(dr.edge) + ":" + std::to_string(dr.end) +
                             " does not sit at vertex " + std::to_string(r.vertex));
      if (position_[d.index()] != static_cast<std::size_t>(-1))
        throw StructureError("duplicate dart " + std::to_string(dr.edge) + ":" + std::to_string(dr.end));
      position_[d.index()] = rotations_[*v].size();
      rotations_[*v].push_back(d);
    }
  }
  for (std::size_t i = 0; i < position_.size(); ++i) {
    if (position_[i] == static_cast<std::size_t>(-1)) {
      Dart d = Dart::from_index(i);
      throw StructureError("dart " + std::to_string(edges_[d.edge].id) + ":" + std::to_string(d.end) +
                           " missing from rotation");
    }
  }
}

std::size_t EnhancedMultigraph::blue_edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.color == EdgeColor::Blue; }));
}

std::optional<std::size_t> EnhancedMultigraph::find_vertex(int id) const {
  auto it = vertex_by_id_.find(id);
  if (it == vertex_by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> EnhancedMultigraph::find_edge(int id) const {
  auto it = edge_by_id_.find(id);
  if (it == edge_by_id_.end()) return std::nullopt;
  return it->second;
}

std::size_t EnhancedMultigraph::vertex_index(int id) const {
  auto v = find_vertex(id);
  if (!v) throw Error("unknown vertex " + std::to_string(id));
  return *v;
}

std::size_t EnhancedMultigraph::edge_index(int id) const {
  auto e = find_edge(id);
  if (!e) throw Error("unknown edge " + std::to_string(id));
  return *e;
}

Dart EnhancedMultigraph::next_in_rotation(Dart d) const {
  const auto& r = rotations_[vertex_of(d)];
  return r[(position_[d.index()] + 1) % r.size()];
}

Dart EnhancedMultigraph::previous_in_rotation(Dart d) const {
  const auto& r = rotations_[vertex_of(d)];
  return r[(position_[d.index()] + r.size() - 1) % r.size()];
}

std::size_t EnhancedMultigraph::blue_degree(std::size_t v) const {
  return static_cast<std::size_t>(std::count_if(rotations_[v].begin(), rotations_[v].end(),
                                                [&](Dart d) { return color_of(d) == EdgeColor::Blue; }));
}

std::vector<Dart> EnhancedMultigraph::blue_rotation(std::size_t v) const {
  std::vector<Dart> out;
  for (Dart d : rotations_[v])
    if (color_of(d) == EdgeColor::Blue) out.push_back(d);
  return out;
}

// ---------------------------------------------------------------------------------------
// Text format

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

int parse_id(const Token& t, std::size_t line) {
  if (t.text.empty() || t.text.size() > 9 ||
      !std::all_of(t.text.begin(), t.text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError(line, t.column, "expected a nonnegative integer id, got '" + t.text + "'");
  return std::stoi(t.text);
}

}  // namespace

EnhancedMultigraph parse_emg(std::string_view text) {
  std::vector<VertexRecord> vertices;
  std::vector<EdgeRecord> edges;
  std::vector<RotationRecord> rotations;
  std::map<int, std::size_t> vertex_line, edge_line;
  std::map<int, EdgeRecord> edge_by_id;
  std::set<int> rotated;
  std::set<std::pair<int, int>> seen_darts;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  struct PendingRot {
    RotationRecord rec;
    std::size_t line;
    std::vector<std::size_t> columns;
    std::size_t vertex_column;
  };
  std::vector<PendingRot> pending;

  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string& kw = tokens[0].text;
    if (kw == "vertex") {
      if (tokens.size() != 3)
        throw ParseError(line_no, tokens[0].column, "vertex record needs: vertex <id> <B|W>");
      int id = parse_id(tokens[1], line_no);
      PolygonColor c;
      if (tokens[2].text == "B")
        c = PolygonColor::Black;
      else if (tokens[2].text == "W")
        c = PolygonColor::White;
      else
        throw ParseError(line_no, tokens[2].column, "polygon color must be B or W");
      if (!vertex_line.emplace(id, line_no).second)
        throw ParseError(line_no, tokens[1].column, "duplicate vertex " + std::to_string(id));
      vertices.push_back({id, c});
    } else if (kw == "edge") {
      if (tokens.size() != 5)
        throw ParseError(line_no, tokens[0].column, "edge record needs: edge <id> <vidA> <vidB> <blue|red>");
      int id = parse_id(tokens[1], line_no);
      int a = parse_id(tokens[2], line_no);
      int b = parse_id(tokens[3], line_no);
      EdgeColor c;
      if (tokens[4].text == "blue")
        c = EdgeColor::Blue;
      else if (tokens[4].text == "red")
        c = EdgeColor::Red;
      else
        throw ParseError(line_no, tokens[4].column, "edge color must be blue or red");
      if (!edge_line.emplace(id, line_no).second)
        throw ParseError(line_no, tokens[1].column, "duplicate edge " + std::to_string(id));
      edges.push_back({id, a, b, c});
      edge_by_id[id] = edges.back();
      // endpoint resolution happens after all vertices are known
    } else if (kw == "rot") {
      if (tokens.size() < 3)
        throw ParseError(line_no, tokens[0].column, "rot record needs: rot <vid> (<eid>:<0|1>)+");
      PendingRot p;
      p.line = line_no;
      p.vertex_column = tokens[1].column;
      p.rec.vertex = parse_id(tokens[1], line_no);
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        const auto& t = tokens[i];
        auto colon = t.text.find(':');
        if (colon == std::string::npos || colon + 2 != t.text.size() ||
            (t.text.back() != '0' && t.text.back() != '1'))
          throw ParseError(line_no, t.column, "dart must look like <eid>:<0|1>, got '" + t.text + "'");
        Token id_tok{t.text.substr(0, colon), t.column};
        p.rec.darts.push_back({parse_id(id_tok, line_no), t.text.back() - '0'});
        p.columns.push_back(t.column);
      }
      pending.push_back(std::move(p));
    } else {
      throw ParseError(line_no, tokens[0].column, "unknown record '" + kw + "'");
    }
  }

  for (const auto& e : edges) {
    for (int endpoint : {e.a, e.b}) {
      if (!vertex_line.count(endpoint))
        throw ParseError(edge_line[e.id], 1, "unknown vertex " + std::to_string(endpoint) + " in edge " +
                                                 std::to_string(e.id));
    }
  }
  for (const auto& p : pending) {
    if (!vertex_line.count(p.rec.vertex))
      throw ParseError(p.line, p.vertex_column, "unknown vertex " + std::to_string(p.rec.vertex));
    if (!rotated.insert(p.rec.vertex).second)
      throw ParseError(p.line, p.vertex_column, "second rotation for vertex " + std::to_string(p.rec.vertex));
    for (std::size_t i = 0; i < p.rec.darts.size(); ++i) {
      const auto& d = p.rec.darts[i];
      auto it = edge_by_id.find(d.edge);
      if (it == edge_by_id.end())
        throw ParseError(p.line, p.columns[i], "unknown edge " + std::to_string(d.edge));
      int at = d.end == 0 ? it->second.a : it->second.b;
      if (at != p.rec.vertex)
        throw ParseError(p.line, p.columns[i],
                         "dart " + std::to_string(d.edge) + ":" + std::to_string(d.end) + " sits at vertex " +
                             std::to_string(at) + ", not " + std::to_string(p.rec.vertex));
      if (!seen_darts.insert({d.edge, d.end}).second)
        throw ParseError(p.line, p.columns[i],
                         "duplicate dart " + std::to_string(d.edge) + ":" + std::to_string(d.end));
    }
    rotations.push_back(p.rec);
  }
  for (const auto& e : edges) {
    for (int end : {0, 1}) {
      if (!seen_darts.count({e.id, end}))
        throw ParseError(edge_line[e.id], 1,
                         "dart " + std::to_string(e.id) + ":" + std::to_string(end) + " missing from rotation");
    }
  }
  return EnhancedMultigraph(std::move(vertices), std::move(edges), std::move(rotations));
}

std::string render_emg(const EnhancedMultigraph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertices())
    out << "vertex " << v.id << ' ' << (v.color == PolygonColor::Black ? 'B' : 'W') << '\n';
  for (const auto& e : g.edges())
    out << "edge " << e.id << ' ' << g.vertex(e.a).id << ' ' << g.vertex(e.b).id << ' '
        << (e.color == EdgeColor::Blue ? "blue" : "red") << '\n';
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.rotation(v).empty()) continue;
    out << "rot " << g.vertex(v).id;
    for (Dart d : g.rotation(v)) out << ' ' << g.edge(d.edge).id << ':' << d.end;
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------------------
// Faces

std::size_t FaceSet::count(FaceKind k) const {
  return static_cast<std::size_t>(std::count_if(faces.begin(), faces.end(), [&](const Face& f) { return f.kind == k; }));
}

namespace {

// Filtered rotations: per vertex the darts of allowed colors, plus each dart's position.
struct FilteredRotations {
  std::vector<std::vector<Dart>> rot;
  std::vector<std::size_t> pos;
};

FilteredRotations filter_rotations(const EnhancedMultigraph& g, ColorSet filter) {
  FilteredRotations f;
  f.rot.resize(g.vertex_count());
  f.pos.assign(g.dart_count(), FaceSet::npos);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (Dart d : g.rotation(v)) {
      if (!filter.contains(g.color_of(d))) continue;
      f.pos[d.index()] = f.rot[v].size();
      f.rot[v].push_back(d);
    }
  }
  return f;
}

// Blue face holding the corner in which a red dart sits: the one containing the next
// blue dart after it in the rotation.
std::optional<std::size_t> red_dart_face(const EnhancedMultigraph& g, const FaceSet& blue, Dart red) {
  Dart d = red;
  for (std::size_t i = 0; i < g.degree(g.vertex_of(red)); ++i) {
    d = g.next_in_rotation(d);
    if (g.color_of(d) == EdgeColor::Blue) return blue.face_of_dart[d.index()];
  }
  return std::nullopt;
}

}  // namespace

FaceSet trace_faces(const EnhancedMultigraph& g, ColorSet filter) {
  FilteredRotations fr = filter_rotations(g, filter);
  FaceSet fs;
  fs.face_of_dart.assign(g.dart_count(), FaceSet::npos);
  for (std::size_t i = 0; i < g.dart_count(); ++i) {
    Dart start = Dart::from_index(i);
    if (!filter.contains(g.color_of(start)) || fs.face_of_dart[i] != FaceSet::npos) continue;
    Face face;
    Dart d = start;
    while (fs.face_of_dart[d.index()] == FaceSet::npos) {
      fs.face_of_dart[d.index()] = fs.faces.size();
      face.darts.push_back(d);
      Dart r = d.reversed();
      const auto& rot = fr.rot[g.vertex_of(r)];
      d = rot[(fr.pos[r.index()] + 1) % rot.size()];
    }
    face.kind = face.darts.size() == 2   ? FaceKind::Bigon
                : face.darts.size() == 4 ? FaceKind::Quadrilateral
                                         : FaceKind::Other;
    fs.faces.push_back(std::move(face));
  }
  if (filter.blue && !filter.red) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (g.edge(e).color != EdgeColor::Red) continue;
      auto f0 = red_dart_face(g, fs, Dart{e, 0});
      auto f1 = red_dart_face(g, fs, Dart{e, 1});
      if (f0 && f1 && *f0 == *f1) fs.faces[*f0].red_edges.push_back(e);
    }
  }
  return fs;
}

std::size_t corner_face(const EnhancedMultigraph& g, const FaceSet& blue_faces, std::size_t v,
                        std::size_t corner) {
  auto blues = g.blue_rotation(v);
  return blue_faces.face_of_dart[blues[(corner + 1) % blues.size()].index()];
}

// ---------------------------------------------------------------------------------------
// Validation

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::Sphere: return "sphere";
    case Rule::Degree: return "degree";
    case Rule::BlueFaces: return "blue-faces";
    case Rule::RedParallel: return "red-parallel";
    case Rule::Euler: return "euler";
    case Rule::Bipartite: return "bipartite";
    case Rule::RedCount: return "red-count";
  }
  return "?";
}

std::string_view to_string(Severity s) { return s == Severity::Error ? "error" : "warning"; }

bool ValidationReport::has(Rule r) const {
  return std::any_of(findings.begin(), findings.end(), [&](const Finding& f) { return f.rule == r; });
}

namespace {

bool connected(const EnhancedMultigraph& g, ColorSet filter) {
  if (g.vertex_count() == 0) return true;
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges())
    if (filter.contains(e.color)) parent[find(e.a)] = find(e.b);
  std::size_t root = find(0);
  for (std::size_t v = 1; v < g.vertex_count(); ++v)
    if (find(v) != root) return false;
  return true;
}

}  // namespace

ValidationReport validate_plausible(const EnhancedMultigraph& g) {
  ValidationReport rep;
  auto fail = [&](Rule r, std::string msg) { rep.findings.push_back({r, Severity::Error, std::move(msg)}); };
  auto vid = [&](std::size_t v) { return std::to_string(g.vertex(v).id); };
  auto eid = [&](std::size_t e) { return std::to_string(g.edge(e).id); };

  const FaceSet blue = trace_faces(g, ColorSet::blue_only());
  const FaceSet full = trace_faces(g, ColorSet::all());
  rep.counts.vertices = g.vertex_count();
  rep.counts.blue_edges = g.blue_edge_count();
  rep.counts.red_edges = g.red_edge_count();
  rep.counts.bigons = blue.count(FaceKind::Bigon);
  rep.counts.quadrilaterals = blue.count(FaceKind::Quadrilateral);

  const long long V = static_cast<long long>(g.vertex_count());
  if (V == 0) fail(Rule::Sphere, "graph has no vertices");
  if (!connected(g, ColorSet::blue_only())) fail(Rule::Sphere, "blue subgraph is not connected");
  if (V > 0) {
    long long chi_full = V - static_cast<long long>(g.edge_count()) + static_cast<long long>(full.faces.size());
    if (chi_full != 2)
      fail(Rule::Sphere, "rotation system has Euler characteristic " + std::to_string(chi_full) + ", not 2");
    long long chi_blue =
        V - static_cast<long long>(rep.counts.blue_edges) + static_cast<long long>(blue.faces.size());
    if (chi_blue != 2)
      fail(Rule::Sphere, "blue sub-embedding has Euler characteristic " + std::to_string(chi_blue) + ", not 2");
  }

  // (a)
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 6) fail(Rule::Degree, "vertex " + vid(v) + " has degree " + std::to_string(g.degree(v)));

  // (b)
  if (rep.counts.bigons != 6)
    fail(Rule::BlueFaces, "blue embedding has " + std::to_string(rep.counts.bigons) + " bigons, expected 6");
  for (std::size_t f = 0; f < blue.faces.size(); ++f) {
    if (blue.faces[f].kind == FaceKind::Other)
      fail(Rule::BlueFaces, "blue face " + std::to_string(f) + " has " + std::to_string(blue.faces[f].darts.size()) +
                                " sides");
  }

  // (c)
  std::vector<std::size_t> reds_in_face(blue.faces.size(), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& red = g.edge(e);
    if (red.color != EdgeColor::Red) continue;
    auto f0 = red_dart_face(g, blue, Dart{e, 0});
    auto f1 = red_dart_face(g, blue, Dart{e, 1});
    if (!f0 || !f1) {
      fail(Rule::RedParallel, "red edge " + eid(e) + " ends at a vertex without blue edges");
      continue;
    }
    if (*f0 != *f1) {
      fail(Rule::RedParallel, "red edge " + eid(e) + " does not lie inside a single blue face");
      continue;
    }
    const Face& face = blue.faces[*f0];
    ++reds_in_face[*f0];
    if (face.kind != FaceKind::Quadrilateral) {
      fail(Rule::RedParallel, "red edge " + eid(e) + " lies in a blue face that is not a quadrilateral");
      continue;
    }
    // Find the parallel blue edge of the face whose darts flank the red darts.
    bool found = false;
    for (Dart fd : face.darts) {
      const Edge& be = g.edge(fd.edge);
      bool same_ends = (be.a == red.a && be.b == red.b) || (be.a == red.b && be.b == red.a);
      if (!same_ends) continue;
      auto flanks = [&](Dart red_dart) {
        Dart prev = g.previous_in_rotation(red_dart), next = g.next_in_rotation(red_dart);
        return prev.edge == fd.edge || next.edge == fd.edge;
      };
      if (flanks(Dart{e, 0}) && flanks(Dart{e, 1})) {
        found = true;
        break;
      }
    }
    if (!found)
      fail(Rule::RedParallel,
           "red edge " + eid(e) + " is not parallel and adjacent to a blue edge of its quadrilateral");
  }
  for (std::size_t f = 0; f < blue.faces.size(); ++f) {
    if (blue.faces[f].kind == FaceKind::Quadrilateral && reds_in_face[f] != 1)
      fail(Rule::RedParallel, "blue quadrilateral " + std::to_string(f) + " contains " +
                                  std::to_string(reds_in_face[f]) + " red edges, expected 1");
  }

  // (d)
  long long euler = static_cast<long long>(rep.counts.blue_edges) - 2 * V;
  if (euler != 2) fail(Rule::Euler, "E_b - 2V = " + std::to_string(euler) + ", expected 2");

  // (e)
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& be = g.edge(e);
    if (be.color != EdgeColor::Blue) continue;
    if (g.vertex(be.a).color == g.vertex(be.b).color)
      fail(Rule::Bipartite, "blue edge " + eid(e) + " joins two " +
                                (g.vertex(be.a).color == PolygonColor::Black ? "black" : "white") + " vertices");
  }

  // (f)
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::size_t k = g.blue_degree(v);
    std::size_t reds = g.red_degree(v);
    if (k > 6 || reds != 6 - k)
      fail(Rule::RedCount, "vertex " + vid(v) + " has blue degree " + std::to_string(k) + " and " +
                               std::to_string(reds) + " red edges");
  }

  rep.plausible = std::none_of(rep.findings.begin(), rep.findings.end(),
                               [](const Finding& f) { return f.severity == Severity::Error; });
  return rep;
}

// ---------------------------------------------------------------------------------------
// Isomorphism

bool isomorphic(const EnhancedMultigraph& x, const EnhancedMultigraph& y) {
  if (x.vertex_count() != y.vertex_count() || x.edge_count() != y.edge_count() ||
      x.blue_edge_count() != y.blue_edge_count())
    return false;
  if (x.edge_count() == 0) return x.vertex_count() == y.vertex_count();
  if (!connected(x, ColorSet::all()) || !connected(y, ColorSet::all())) return false;
  const Dart x0{0, 0};
  for (std::size_t j = 0; j < y.dart_count(); ++j) {
    std::vector<std::size_t> map(x.dart_count(), FaceSet::npos);
    std::vector<bool> used(y.dart_count(), false);
    std::queue<std::pair<Dart, Dart>> todo;
    todo.push({x0, Dart::from_index(j)});
    bool ok = true;
    while (ok && !todo.empty()) {
      auto [a, b] = todo.front();
      todo.pop();
      if (map[a.index()] != FaceSet::npos) {
        ok = map[a.index()] == b.index();
        continue;
      }
      if (used[b.index()] || x.color_of(a) != y.color_of(b) ||
          x.vertex(x.vertex_of(a)).color != y.vertex(y.vertex_of(b)).color ||
          x.degree(x.vertex_of(a)) != y.degree(y.vertex_of(b))) {
        ok = false;
        break;
      }
      map[a.index()] = b.index();
      used[b.index()] = true;
      todo.push({a.reversed(), b.reversed()});
      todo.push({x.next_in_rotation(a), y.next_in_rotation(b)});
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace flatcone::emg
