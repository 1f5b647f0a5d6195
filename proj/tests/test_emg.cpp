#include <doctest.h>

#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "flatcone/emg.hpp"
#include "flatcone/families.hpp"

using namespace flatcone;
using namespace flatcone::emg;

TEST_SUITE("emg") {
  TEST_CASE("minimal file parses") {
    auto g = parse_emg(fixtures::kTwoVertexOneEdge);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.blue_edge_count() == 1);
  }

  TEST_CASE("comments and blank lines are ignored") {
    auto g = parse_emg(std::string("# header\n\n") + fixtures::kTwoVertexOneEdge + "   # trailing\n");
    CHECK(g.edge_count() == 1);
  }

  TEST_CASE("undeclared vertex is rejected") {
    const char* text = "vertex 0 W\nedge 0 0 99 blue\nrot 0 0:0\n";
    CHECK_THROWS_WITH_AS(parse_emg(text), doctest::Contains("unknown vertex"), Error);
  }

  TEST_CASE("undeclared edge in a rotation is rejected") {
    auto text = fixtures::replace_line(fixtures::kTwoVertexOneEdge, "rot 1 0:1", "rot 1 0:1 7:0");
    CHECK_THROWS_WITH_AS(parse_emg(text), doctest::Contains("unknown edge"), Error);
  }

  TEST_CASE("dart missing from every rotation is rejected") {
    auto text = fixtures::replace_line(fixtures::kTwoVertexOneEdge, "rot 1 0:1", "rot 1");
    CHECK_THROWS_AS(parse_emg(text), Error);
    auto text2 = fixtures::replace_line(fixtures::kTwoVertexOneEdge, "rot 1 0:1\n", "");
    CHECK_THROWS_WITH_AS(parse_emg(text2), doctest::Contains("missing"), Error);
  }

  TEST_CASE("duplicate dart is rejected") {
    auto text = fixtures::replace_line(fixtures::kTwoVertexOneEdge, "rot 0 0:0", "rot 0 0:0 0:0");
    CHECK_THROWS_WITH_AS(parse_emg(text), doctest::Contains("duplicate dart"), Error);
  }

  TEST_CASE("syntax errors carry a position") {
    try {
      parse_emg("vertex 0 W\nvertex 1 Q\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() > 0);
    }
  }

  TEST_CASE("dart at the wrong vertex is rejected") {
    auto text = fixtures::replace_line(fixtures::kTwoVertexOneEdge, "rot 0 0:0\nrot 1 0:1", "rot 0 0:1\nrot 1 0:0");
    CHECK_THROWS_AS(parse_emg(text), Error);
  }

  TEST_CASE("bundled six-polygon spiral has all degrees six") {
    auto g = families::load_bundled("spiral-6");
    CHECK(g.vertex_count() == 6);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 6);
  }

  TEST_CASE("a single loop cuts the sphere in two") {
    auto g = parse_emg("vertex 0 W\nedge 0 0 0 blue\nrot 0 0:0 0:1\n");
    auto f = trace_faces(g, ColorSet::all());
    CHECK(f.faces.size() == 2);
  }

  TEST_CASE("blue faces of the k=3 spiral") {
    auto g = families::gen_spiral(3);
    auto f = trace_faces(g, ColorSet::blue_only());
    CHECK(f.count(FaceKind::Bigon) == 6);
    CHECK(f.count(FaceKind::Quadrilateral) == 4);
    CHECK(f.faces.size() == 10);
    // Euler characteristic of the blue embedding.
    long long chi = static_cast<long long>(g.vertex_count()) - static_cast<long long>(g.blue_edge_count()) +
                    static_cast<long long>(f.faces.size());
    CHECK(chi == 2);
    for (const auto& face : f.faces)
      if (face.kind == FaceKind::Quadrilateral) CHECK(face.red_edges.size() == 1);
  }

  TEST_CASE("full trace of the k=3 spiral is a sphere") {
    auto g = families::gen_spiral(3);
    auto f = trace_faces(g, ColorSet::all());
    long long chi = static_cast<long long>(g.vertex_count()) - static_cast<long long>(g.edge_count()) +
                    static_cast<long long>(f.faces.size());
    CHECK(chi == 2);
    std::size_t darts = 0;
    for (const auto& face : f.faces) darts += face.darts.size();
    CHECK(darts == g.dart_count());
  }

  TEST_CASE("face multiset does not depend on where each rotation starts") {
    auto g = families::gen_spiral(4);
    std::string text = render_emg(g);
    // Rotate every rotation line by one position.
    std::string shifted;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
      if (line.rfind("rot ", 0) == 0) {
        std::istringstream ls(line);
        std::string rot, v, first, rest, tok;
        ls >> rot >> v >> first;
        while (ls >> tok) rest += tok + " ";
        line = "rot " + v + " " + rest + first;
      }
      shifted += line + "\n";
    }
    auto h = parse_emg(shifted);
    auto sizes = [](const FaceSet& f) {
      std::multiset<std::size_t> s;
      for (const auto& face : f.faces) s.insert(face.darts.size());
      return s;
    };
    CHECK(sizes(trace_faces(g, ColorSet::all())) == sizes(trace_faces(h, ColorSet::all())));
    CHECK(sizes(trace_faces(g, ColorSet::blue_only())) == sizes(trace_faces(h, ColorSet::blue_only())));
    CHECK(isomorphic(g, h));
  }

  TEST_CASE("k=3 spiral is plausible with the expected counts") {
    auto r = validate_plausible(families::gen_spiral(3));
    CHECK(r.plausible);
    CHECK(r.findings.empty());
    // Euler forces E_b = 2V + 2 = 14; the red count is (6V - 2 E_b) / 2 = 4.
    CHECK(r.counts == Counts{6, 14, 4, 6, 4});
  }

  TEST_CASE("deleting a red edge breaks the degree and red-edge rules") {
    std::string text = render_emg(families::gen_spiral(3));
    text = fixtures::replace_line(text, "edge 14 0 1 red\n", "");
    text = fixtures::replace_line(text, "rot 0 14:0 ", "rot 0 ");
    text = fixtures::replace_line(text, " 14:1 ", " ");
    auto r = validate_plausible(parse_emg(text));
    CHECK_FALSE(r.plausible);
    CHECK(r.has(Rule::Degree));
    CHECK(r.has(Rule::RedParallel));
  }

  TEST_CASE("two white polygons sharing a blue edge break bipartiteness") {
    std::string text = render_emg(families::gen_spiral(3));
    text = fixtures::replace_line(text, "vertex 1 B", "vertex 1 W");
    auto r = validate_plausible(parse_emg(text));
    CHECK_FALSE(r.plausible);
    CHECK(r.has(Rule::Bipartite));
  }

  TEST_CASE("Euler identities hold on every plausible instance") {
    std::vector<EnhancedMultigraph> all;
    for (int k = 3; k <= 8; ++k) all.push_back(families::gen_spiral(k));
    for (const auto& name : families::bundled_names()) all.push_back(families::load_bundled(name));
    for (const auto& g : all) {
      auto r = validate_plausible(g);
      REQUIRE(r.plausible);
      auto faces = trace_faces(g, ColorSet::blue_only()).faces.size();
      CHECK(r.counts.blue_edges == 2 * r.counts.vertices + 2);
      CHECK(2 * faces == r.counts.blue_edges + 6);
    }
  }

  TEST_CASE("canonical rendering round-trips") {
    for (int k = 3; k <= 6; ++k) {
      auto g = families::gen_spiral(k);
      auto text = render_emg(g);
      CHECK(parse_emg(text) == g);
      CHECK(render_emg(parse_emg(text)) == text);
    }
    auto h = families::load_bundled("spiral-8");
    CHECK(parse_emg(render_emg(h)) == h);
  }
}
