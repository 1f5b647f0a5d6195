#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "fixtures.hpp"
#include "flatcone/families.hpp"
#include "flatcone/labeling.hpp"
#include "flatcone/linalg.hpp"
#include "flatcone/shapesys.hpp"

using namespace flatcone;
using namespace flatcone::shapesys;

namespace {

struct Built {
  emg::EnhancedMultigraph g;
  std::vector<labeling::PolygonBoundary> b;
  labeling::LabelMap labels;
  ShapeSystem s;
};

Built build(emg::EnhancedMultigraph g) {
  Built x{std::move(g), {}, {}, {}};
  x.b = labeling::polygon_boundaries(x.g);
  x.labels = labeling::assign_labels(x.g, x.b);
  x.s = build_constraints(x.g, x.b, x.labels);
  return x;
}

// Rank modulo a large prime: never above the rational rank, equal to it for all but
// finitely many primes.
std::size_t rank_mod_p(const IntMatrix& m) {
  const long long p = 1'000'000'007;
  std::vector<std::vector<long long>> a(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = ((m(i, j) % p + p) % p).convert_to<long long>();
  auto power = [&](long long b, long long e) {
    long long r = 1;
    for (b %= p; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    long long inv = power(a[rank][c], p - 2);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      long long f = a[i][c] * inv % p;
      for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_SUITE("shapesys") {
  TEST_CASE("rows follow the scaled sixth roots of unity") {
    auto x = build(families::gen_spiral(4));
    const double s3 = std::sqrt(3.0);
    for (std::size_t v = 0; v < x.b.size(); ++v) {
      const auto& p = x.b[v];
      const double sign = p.color == emg::PolygonColor::White ? 1 : -1;
      std::vector<std::complex<double>> col(x.s.edge_count());
      for (auto d : p.sides)
        col[x.s.edge_column[d.edge]] += sign * std::polar(1.0, M_PI * x.labels[d.edge] / 3.0);
      for (std::size_t c = 0; c < x.s.edge_count(); ++c) {
        long long re = std::llround(2 * col[c].real()), im = std::llround(2 * col[c].imag() / s3);
        CHECK(x.s.matrix(2 * v, c) == re);
        CHECK(x.s.matrix(2 * v + 1, c) == im);
        CHECK(abs(x.s.matrix(2 * v, c)) <= 2);
        CHECK(abs(x.s.matrix(2 * v + 1, c)) <= 2);
      }
    }
  }

  TEST_CASE("each column is supported on the rows of its two polygons") {
    auto x = build(families::gen_spiral(5));
    for (std::size_t c = 0; c < x.s.edge_count(); ++c) {
      const auto& e = x.g.edge(x.s.column_edge[c]);
      for (std::size_t r = 0; r < x.s.matrix.rows(); ++r) {
        std::size_t v = x.s.row_origin[r].vertex;
        if (v != e.a && v != e.b) CHECK(x.s.matrix(r, c) == 0);
      }
      bool touches_a = false, touches_b = false;
      for (std::size_t r = 0; r < x.s.matrix.rows(); ++r) {
        if (x.s.matrix(r, c) == 0) continue;
        touches_a |= x.s.row_origin[r].vertex == e.a;
        touches_b |= x.s.row_origin[r].vertex == e.b;
      }
      CHECK(touches_a);
      CHECK(touches_b);
    }
  }

  TEST_CASE("white hexagon rows are the two closure vectors") {
    auto x = build(families::load_bundled("doubled-hexagon"));
    std::vector<long long> re, im;
    for (auto d : x.b[0].sides) {
      re.push_back(x.s.matrix(0, x.s.edge_column[d.edge]).convert_to<long long>());
      im.push_back(x.s.matrix(1, x.s.edge_column[d.edge]).convert_to<long long>());
    }
    std::vector<long long> v1, v2 = im;
    for (std::size_t i = 0; i < 6; ++i) v1.push_back((re[i] + im[i]) / 2);
    CHECK(v1 == std::vector<long long>{1, 1, 0, -1, -1, 0});
    CHECK(v2 == std::vector<long long>{0, 1, 1, 0, -1, -1});
  }

  TEST_CASE("trapezoid rows are the hexagon rows with two slots removed") {
    auto x = build(emg::parse_emg(fixtures::kDoubledTrapezoid));
    const auto& p = x.b[0];
    REQUIRE(p.slots == std::vector<int>{0, 2, 3, 4});
    std::vector<long long> re, im;
    for (auto d : p.sides) {
      re.push_back(x.s.matrix(0, x.s.edge_column[d.edge]).convert_to<long long>());
      im.push_back(x.s.matrix(1, x.s.edge_column[d.edge]).convert_to<long long>());
    }
    // 2 l0 - l2 - 2 l3 - l4 = 0 and l2 - l4 = 0, so l2 = l4 and l0 = l3 + l4.
    CHECK(re == std::vector<long long>{2, -1, -2, -1});
    CHECK(im == std::vector<long long>{0, 1, 0, -1});
  }

  TEST_CASE("rows sum to zero on every instance") {
    std::vector<emg::EnhancedMultigraph> all;
    for (int k = 3; k <= 8; ++k) all.push_back(families::gen_spiral(k));
    for (const auto& name : families::bundled_names()) all.push_back(families::load_bundled(name));
    for (auto& g : all) {
      auto x = build(std::move(g));
      for (std::size_t c = 0; c < x.s.edge_count(); ++c) {
        Integer re = 0, im = 0;
        for (std::size_t r = 0; r < x.s.matrix.rows(); r += 2) {
          re += x.s.matrix(r, c);
          im += x.s.matrix(r + 1, c);
        }
        CHECK(re == 0);
        CHECK(im == 0);
      }
      CHECK(verify_lemmas(x.s, kernel_basis(x.s)).rows_sum_to_zero);
    }
  }

  TEST_CASE("rank is E_b - 4 for the spiral family") {
    for (int k = 3; k <= 8; ++k) {
      auto x = build(families::gen_spiral(k));
      auto kb = kernel_basis(x.s);
      const std::size_t eb = x.g.blue_edge_count();
      CHECK(kb.rank == eb - 4);
      CHECK(kb.dimension == 4);
      CHECK(rank_mod_p(x.s.matrix) == eb - 4);
      CHECK(verify_lemmas(x.s, kb).all());
    }
  }

  TEST_CASE("k=3 has rank 10 and k=4 has rank 14") {
    CHECK(kernel_basis(build(families::gen_spiral(3)).s).rank == 10);
    CHECK(kernel_basis(build(families::gen_spiral(4)).s).rank == 14);
  }

  TEST_CASE("kernel of trivial matrices") {
    auto z = kernel_basis(IntMatrix(2, 3));
    CHECK(z.rank == 0);
    CHECK(z.dimension == 3);
    auto id = kernel_basis(IntMatrix::identity(4));
    CHECK(id.rank == 4);
    CHECK(id.dimension == 0);
  }

  TEST_CASE("random combinations of the kernel basis solve the system exactly") {
    auto x = build(families::gen_spiral(6));
    auto kb = kernel_basis(x.s);
    RatMatrix m = to_rational(x.s.matrix);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
    for (int trial = 0; trial < 20; ++trial) {
      RatVector v(x.s.edge_count(), Rational(0));
      for (const auto& b : kb.basis) {
        Rational c(num(rng), den(rng));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * Rational(b[i]);
      }
      for (const auto& r : m * v) CHECK(r == 0);
    }
  }

  TEST_CASE("a holonomy-consistent mutant is diagnosed, not rejected") {
    // Two doubled triangles do not form an octahedron: the lemma checks report it.
    auto x = build(emg::parse_emg(fixtures::kDoubledTriangle));
    auto c = verify_lemmas(x.s, kernel_basis(x.s));
    CHECK(c.rows_sum_to_zero);
    CHECK_FALSE(c.dimension_is_four);
    CHECK_FALSE(c.all());
  }
}
