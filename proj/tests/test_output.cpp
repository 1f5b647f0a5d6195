#include <doctest.h>

#include <regex>

#include "flatcone/families.hpp"
#include "flatcone/pipeline.hpp"
#include "flatcone/report.hpp"
#include "flatcone/svg.hpp"

using namespace flatcone;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

bool has_float(const report::Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& x : j)
      if (has_float(x)) return true;
  return false;
}

struct Fixture {
  pipeline::Instance inst = pipeline::analyze("spiral-3", families::gen_spiral(3));
  pipeline::Realization real;

  Fixture() {
    for (const auto& p : cone::enumerate_lattice_points(inst.cone, inst.lattice, 3).points)
      if (p.strictly_positive) {
        real = pipeline::realize_point(inst, p.edges);
        break;
      }
  }
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

}  // namespace

TEST_SUITE("output") {
  TEST_CASE("svg is deterministic and complete") {
    const auto& f = fixture();
    svg::Options all{true, true, true};
    auto a = svg::render(f.inst.graph, f.inst.boundaries, f.real.surface, all);
    auto b = svg::render(f.inst.graph, f.inst.boundaries, f.real.surface, all);
    CHECK(a == b);
    CHECK(count(a, "<polygon class=\"white\"") == 3);
    CHECK(count(a, "<polygon class=\"black\"") == 3);
    CHECK(count(a, "<polygon class=\"tri\"") == f.real.triangulation.triangles.size());
    CHECK(3 * count(a, "<polygon class=\"tri\"") == f.real.identity.form_value);
    CHECK(count(a, "<path class=\"blue\"") == f.inst.graph.blue_edge_count());
    CHECK(count(a, "<path class=\"red\"") == f.inst.graph.edge_count() - f.inst.graph.blue_edge_count());
    CHECK(count(a, "<circle class=\"c") > 0);
    CHECK_FALSE(std::regex_search(a, std::regex("nan|inf")));
  }

  TEST_CASE("svg layers follow the options") {
    const auto& f = fixture();
    auto plain = svg::render(f.inst.graph, f.inst.boundaries, f.real.surface, {});
    CHECK(count(plain, "class=\"tri\"") == 0);
    CHECK(count(plain, "<path") == 0);
    CHECK(count(plain, "<circle") == 0);
    CHECK(count(plain, "<polygon") == 6);
  }

  TEST_CASE("json encodes exact values as strings") {
    const auto& f = fixture();
    CHECK(report::rational(Rational(3, 4)) == "3/4");
    CHECK(report::integer(Integer(-12)) == "-12");
    CHECK(report::point({Rational(1, 2), Rational(-1, 2)}) == report::Json{{"x", "1/2"}, {"ys3", "-1/2"}});
    auto sys = report::system(f.inst);
    auto cone = report::cone(f.inst);
    auto form = report::form(f.inst);
    auto real = report::realization(f.inst, f.real, true);
    for (const auto* j : {&sys, &cone, &form, &real}) CHECK_FALSE(has_float(*j));
    CHECK(form["signature_is_1_3_0"] == true);
    CHECK(real["ok"] == true);
    CHECK(report::realization(f.inst, f.real, true).dump() == real.dump());
  }

  TEST_CASE("validation report lists findings") {
    auto text = emg::render_emg(families::gen_spiral(3));
    text.replace(text.find("vertex 1 B"), 10, "vertex 1 W");
    auto j = report::validation(emg::validate_plausible(emg::parse_emg(text)));
    CHECK(j["findings"].size() > 0);
    CHECK_FALSE(has_float(j));
  }
}
