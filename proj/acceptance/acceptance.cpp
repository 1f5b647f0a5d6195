// Acceptance run: one line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "flatcone/families.hpp"
#include "flatcone/pipeline.hpp"

using namespace flatcone;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Spiral3 {
  pipeline::Instance inst = pipeline::analyze("spiral-3", families::gen_spiral(3));
  std::vector<IntVector> positive;
  std::vector<pipeline::Realization> realized;
};

Spiral3& spiral3() {
  static Spiral3 s = [] {
    Spiral3 s;
    for (const auto& p : cone::enumerate_lattice_points(s.inst.cone, s.inst.lattice, 3).points)
      if (p.strictly_positive) {
        s.positive.push_back(p.edges);
        s.realized.push_back(pipeline::realize_point(s.inst, p.edges));
      }
    return s;
  }();
  return s;
}

Outcome form_values() {
  auto t0 = Clock::now();
  bool ok = qform::polygon_form({0, 1, 2, 3, 4, 5}).value(IntVector{1, 1, 1, 1, 1, 1}) == 18;
  auto tri = qform::polygon_form({0, 2, 4});
  for (long long s = 1; s <= 10; ++s) ok &= tri.value(IntVector{s, s, s}) == 3 * s * s;
  double ms = 1000 * seconds_since(t0);
  std::ostringstream d;
  d << "hexagon 18, triangles 3s^2 for s=1..10, " << ms << " ms";
  return {ok && ms < 1.0, d.str()};
}

Outcome rank_law() {
  std::ostringstream d;
  bool ok = true;
  double slowest = 0;
  for (int k = 3; k <= 8; ++k) {
    auto t0 = Clock::now();
    auto inst = pipeline::analyze("spiral", families::gen_spiral(k));
    double s = seconds_since(t0);
    slowest = std::max(slowest, s);
    const std::size_t eb = inst.graph.blue_edge_count();
    bool here = inst.kernel.rank == eb - 4 && inst.kernel.dimension == 4 && s < 10;
    ok &= here;
    d << "k=" << k << " rank " << inst.kernel.rank << "/" << eb << (here ? "" : " (bad)") << "; ";
  }
  d << "slowest " << slowest << " s";
  return {ok, d.str()};
}

std::vector<std::pair<std::string, emg::EnhancedMultigraph>> all_instances() {
  std::vector<std::pair<std::string, emg::EnhancedMultigraph>> out;
  for (int k = 3; k <= 8; ++k) out.emplace_back("spiral k=" + std::to_string(k), families::gen_spiral(k));
  for (const auto& n : families::bundled_names()) out.emplace_back(n, families::load_bundled(n));
  return out;
}

Outcome rows_sum_to_zero() {
  bool ok = true;
  std::size_t n = 0;
  for (auto& [name, g] : all_instances()) {
    auto b = labeling::polygon_boundaries(g);
    auto s = shapesys::build_constraints(g, b, labeling::assign_labels(g, b));
    for (std::size_t c = 0; c < s.matrix.cols(); ++c) {
      Integer total = 0;
      for (std::size_t r = 0; r < s.matrix.rows(); ++r) total += s.matrix(r, c);
      ok &= total == 0;
    }
    ++n;
  }
  return {ok, std::to_string(n) + " instances"};
}

Outcome euler_law() {
  bool ok = true;
  std::size_t n = 0;
  for (auto& [name, g] : all_instances()) {
    auto r = emg::validate_plausible(g);
    if (!r.plausible) continue;
    ok &= static_cast<long long>(g.blue_edge_count()) - 2 * static_cast<long long>(g.vertex_count()) == 2;
    ++n;
  }
  return {ok && n > 0, std::to_string(n) + " plausible instances"};
}

Outcome triangle_identity(double setup) {
  auto& s = spiral3();
  bool ok = !s.realized.empty();
  for (const auto& r : s.realized) {
    ok &= r.identity.form_value == 3 * Integer(r.triangulation.triangles.size());
    ok &= Rational(r.identity.form_value) == 3 * r.triarea_sum;
  }
  std::ostringstream d;
  d << s.realized.size() << " strictly positive points, " << setup << " s";
  return {ok && setup < 60, d.str()};
}

Outcome degrees() {
  auto& s = spiral3();
  bool ok = !s.realized.empty();
  for (const auto& r : s.realized) ok &= r.triangulation.has_octahedral_degrees();
  return {ok, std::to_string(s.realized.size()) + " triangulations"};
}

Outcome coloring() {
  auto& s = spiral3();
  bool ok = !s.realized.empty();
  for (const auto& r : s.realized) {
    ok &= r.coloring.proper && r.coloring.balanced && r.brute_force_proper;
    const auto& t = r.triangulation;
    for (const auto& tri : t.triangles)
      for (int i = 0; i < 3; ++i) ok &= t.color[tri[i]] != t.color[tri[(i + 1) % 3]];
  }
  return {ok, std::to_string(s.realized.size()) + " triangulations"};
}

Outcome signatures(std::vector<std::string>& findings) {
  std::ostringstream d;
  double slowest = 0;
  for (int k = 3; k <= 8; ++k) {
    auto inst = pipeline::analyze("spiral", families::gen_spiral(k));
    auto t0 = Clock::now();
    auto sig = qform::signature(inst.form.restricted);
    slowest = std::max(slowest, seconds_since(t0));
    d << "k=" << k << " (" << sig.positive << "," << sig.negative << "," << sig.zero << "); ";
    if (!(sig == qform::Signature{1, 3, 0}))
      findings.push_back("spiral k=" + std::to_string(k) + " has signature (" + std::to_string(sig.positive) + "," +
                         std::to_string(sig.negative) + "," + std::to_string(sig.zero) + ")");
  }
  d << "slowest " << slowest << " s";
  return {slowest < 1.0, d.str()};
}

Outcome cone_oracle() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(20261018);
  bool ok = true;
  std::size_t compared = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t d = 0;
    auto b = oracle::random_pointed_system(rng, d);
    IntMatrix m(b.size(), d);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = b[i][j];
    auto cd = cone::extreme_rays(cone::ConeDescription::from_inequalities(m));
    std::vector<oracle::Row> rays;
    for (const auto& r : cd.rays) {
      oracle::Row x;
      for (const auto& v : r) x.push_back(v.convert_to<long long>());
      rays.push_back(x);
    }
    ok &= rays == oracle::extreme_rays(b, d);
    for (long long bound = 0; bound <= 4; ++bound) {
      auto expected = oracle::box_points(b, d, bound);
      if (!expected) continue;
      auto got = cone::enumerate_lattice_points(cd, cone::LatticeBasis::standard(cd), bound, 50'000'000);
      std::set<oracle::Row> seen;
      for (const auto& p : got.points) {
        oracle::Row x;
        for (const auto& v : p.coordinates) x.push_back(v.convert_to<long long>());
        seen.insert(x);
      }
      ok &= seen == *expected;
      ++compared;
    }
  }
  double s = seconds_since(t0);
  std::ostringstream d;
  d << "100 systems, " << compared << " enumerations compared, " << s << " s";
  return {ok && s < 120, d.str()};
}

Outcome folding_well_defined() {
  auto& s = spiral3();
  bool ok = !s.positive.empty();
  std::mt19937_64 rng(7);
  for (std::size_t i = 0; i < s.positive.size(); ++i) {
    auto base = s.realized[i].surface.folded_images();
    for (int t = 0; t < 5; ++t) ok &= pipeline::realize_point(s.inst, s.positive[i], rng()).surface.folded_images() == base;
  }
  return {ok, std::to_string(s.positive.size()) + " points x 5 random trees"};
}

Outcome linearity() {
  auto& s = spiral3();
  bool ok = !s.positive.empty();
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < s.positive.size(); ++i)
    for (std::size_t j = i; j < s.positive.size(); ++j) {
      IntVector sum;
      for (std::size_t c = 0; c < s.positive[i].size(); ++c) sum.push_back(s.positive[i][c] + s.positive[j][c]);
      auto both = pipeline::realize_point(s.inst, sum).cone_points;
      const auto& a = s.realized[i].cone_points;
      const auto& b = s.realized[j].cone_points;
      ok &= both.size() == a.size();
      for (std::size_t v = 0; v < a.size() && v < both.size(); ++v) ok &= both[v] == a[v] + b[v];
      ++pairs;
    }
  return {ok, std::to_string(pairs) + " pairs"};
}

}  // namespace

int main() {
  std::vector<std::string> findings;
  int failures = 0;
  auto run = [&](int n, const std::string& title, const std::function<Outcome()>& f) {
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << n << " " << title << ": " << o.detail << "\n" << std::flush;
  };

  auto t0 = Clock::now();
  double setup = 0;
  try {
    spiral3();
    setup = seconds_since(t0);
  } catch (const std::exception& e) {
    std::cout << "setup failed: " << e.what() << "\n";
  }

  run(1, "unit hexagon and triangle form values", form_values);
  run(2, "rank law on the spiral family", rank_law);
  run(3, "constraint rows sum to zero", rows_sum_to_zero);
  run(4, "Euler law E_b - 2V = 2", euler_law);
  run(5, "form value is 3 x unit triangles and 3 x triarea", [&] { return triangle_identity(setup); });
  run(6, "octahedral degree sequence", degrees);
  run(7, "proper balanced 4-coloring", coloring);
  run(8, "signature survey", [&] { return signatures(findings); });
  run(9, "cone engine against brute force", cone_oracle);
  run(10, "folding map independent of the spanning tree", folding_well_defined);
  run(11, "cone point coordinates are additive", linearity);

  for (const auto& f : findings) std::cout << "finding: " << f << "\n";
  if (findings.empty()) std::cout << "finding: every surveyed signature is (1,3,0)\n";
  return failures == 0 ? 0 : 1;
}
