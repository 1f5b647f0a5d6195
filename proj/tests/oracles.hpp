#pragma once

// Brute-force reference computations used to cross-check the library. They share no code
// with it beyond the number types.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "flatcone/exact.hpp"
#include "flatcone/geometry.hpp"

namespace oracle {

using flatcone::Integer;
using flatcone::Rational;
using Row = std::vector<long long>;
using Rows = std::vector<Row>;

inline long long det(const Rows& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Rows minor;
    for (std::size_t i = 1; i < n; ++i) {
      Row r;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) r.push_back(m[i][k]);
      minor.push_back(r);
    }
    s += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
  }
  return s;
}

// Generalized cross product of d-1 vectors in dimension d; zero iff they are dependent.
inline Row cross(const Rows& a, std::size_t d) {
  Row v(d);
  for (std::size_t j = 0; j < d; ++j) {
    Rows minor;
    for (const auto& r : a) {
      Row x;
      for (std::size_t k = 0; k < d; ++k)
        if (k != j) x.push_back(r[k]);
      minor.push_back(x);
    }
    v[j] = (j % 2 ? -1 : 1) * det(minor);
  }
  return v;
}

inline Row primitive(Row v) {
  long long g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

inline bool feasible(const Rows& b, const Row& x) {
  for (const auto& r : b) {
    long long s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += r[j] * x[j];
    if (s < 0) return false;
  }
  return true;
}

inline std::size_t rank_of(const Rows& b, std::size_t d) {
  // Largest k such that some k rows have a nonzero k x k minor.
  for (std::size_t k = std::min(d, b.size()); k > 0; --k) {
    std::vector<bool> pick(b.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
      std::vector<bool> cols(d, false);
      std::fill(cols.begin(), cols.begin() + static_cast<long>(k), true);
      do {
        Rows m;
        for (std::size_t i = 0; i < b.size(); ++i)
          if (pick[i]) {
            Row r;
            for (std::size_t j = 0; j < d; ++j)
              if (cols[j]) r.push_back(b[i][j]);
            m.push_back(r);
          }
        if (det(m) != 0) return k;
      } while (std::prev_permutation(cols.begin(), cols.end()));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return 0;
}

/// Extreme rays of the pointed cone {x : b x >= 0} by active sets: every (d-1)-subset of
/// rows with a one-dimensional common kernel gives a candidate direction.
inline std::vector<Row> extreme_rays(const Rows& b, std::size_t d) {
  std::set<Row> rays;
  std::vector<bool> pick(b.size(), false);
  if (d - 1 > b.size()) return {};
  std::fill(pick.begin(), pick.begin() + static_cast<long>(d - 1), true);
  do {
    Rows a;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (pick[i]) a.push_back(b[i]);
    Row v = cross(a, d);
    if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; })) continue;
    v = primitive(v);
    Row w(v);
    for (auto& x : w) x = -x;
    if (feasible(b, v)) rays.insert(v);
    if (feasible(b, w)) rays.insert(w);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return {rays.begin(), rays.end()};
}

/// Integer x with 0 <= (b x)_i <= bound for all i, by scanning a box derived from one
/// invertible row subset (the one with the smallest box). Empty if the box is too large.
inline std::optional<std::set<Row>> box_points(const Rows& b, std::size_t d, long long bound,
                                               long double max_volume = 4e6L) {
  std::optional<std::vector<std::pair<Integer, Integer>>> best;
  long double best_volume = 0;
  std::vector<bool> pick(b.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(d), true);
  do {
    Rows s;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (pick[i]) s.push_back(b[i]);
    long long D = det(s);
    if (D == 0) continue;
    // inverse entry (j, i) = cofactor(i, j) / D
    std::vector<std::pair<Integer, Integer>> box(d);
    long double volume = 1;
    for (std::size_t j = 0; j < d; ++j) {
      Rational lo = 0, hi = 0;
      for (std::size_t i = 0; i < d; ++i) {
        Rows minor;
        for (std::size_t r = 0; r < d; ++r) {
          if (r == i) continue;
          Row x;
          for (std::size_t c = 0; c < d; ++c)
            if (c != j) x.push_back(s[r][c]);
          minor.push_back(x);
        }
        Rational inv(Integer(((i + j) % 2 ? -1 : 1) * det(minor)), Integer(D));
        (inv < 0 ? lo : hi) += inv * bound;
      }
      box[j] = {flatcone::ceil_of(lo), flatcone::floor_of(hi)};
      volume *= static_cast<long double>((box[j].second - box[j].first + 1).convert_to<long long>());
    }
    if (!best || volume < best_volume) {
      best = box;
      best_volume = volume;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  if (!best || best_volume > max_volume) return std::nullopt;

  std::set<Row> out;
  Row x(d);
  for (std::size_t j = 0; j < d; ++j) x[j] = (*best)[j].first.convert_to<long long>();
  while (true) {
    bool ok = true;
    for (const auto& r : b) {
      long long s = 0;
      for (std::size_t j = 0; j < d; ++j) s += r[j] * x[j];
      if (s < 0 || s > bound) ok = false;
    }
    if (ok) out.insert(x);
    std::size_t j = 0;
    while (j < d && x[j] == (*best)[j].second.convert_to<long long>()) {
      x[j] = (*best)[j].first.convert_to<long long>();
      ++j;
    }
    if (j == d) break;
    ++x[j];
  }
  return out;
}

/// A random system of 1..4 columns and up to 12 rows with entries in [-3, 3] whose
/// cone is pointed.
inline Rows random_pointed_system(std::mt19937_64& rng, std::size_t& d) {
  std::uniform_int_distribution<int> dim(1, 4), entry(-3, 3);
  while (true) {
    d = static_cast<std::size_t>(dim(rng));
    std::uniform_int_distribution<std::size_t> rows(d, 12);
    Rows b(rows(rng), Row(d));
    for (auto& r : b)
      for (auto& x : r) x = entry(rng);
    if (rank_of(b, d) == d) return b;
  }
}

using flatcone::geometry::GridPoint;

inline bool strictly_inside(const std::vector<GridPoint>& ccw, const GridPoint& q) {
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    GridPoint e = ccw[(i + 1) % ccw.size()] - ccw[i];
    GridPoint w = q - ccw[i];
    if (e.x * w.y - e.y * w.x <= 0) return false;
  }
  return true;
}

/// Unit lattice triangles whose centroid lies inside a convex lattice polygon.
inline std::size_t count_unit_triangles(std::vector<GridPoint> poly) {
  Rational s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i)
    s += poly[i].x * poly[(i + 1) % poly.size()].y - poly[(i + 1) % poly.size()].x * poly[i].y;
  if (s < 0) std::reverse(poly.begin(), poly.end());
  // Lattice point a + b*omega = (a + b/2, b/2).
  Rational min_y = poly[0].y, max_y = poly[0].y, min_x = poly[0].x, max_x = poly[0].x;
  for (const auto& p : poly) {
    min_y = std::min(min_y, p.y), max_y = std::max(max_y, p.y);
    min_x = std::min(min_x, p.x), max_x = std::max(max_x, p.x);
  }
  long long b0 = flatcone::floor_of(2 * min_y).convert_to<long long>() - 1;
  long long b1 = flatcone::ceil_of(2 * max_y).convert_to<long long>() + 1;
  std::size_t count = 0;
  for (long long b = b0; b <= b1; ++b) {
    long long a0 = flatcone::floor_of(min_x - Rational(b, 2)).convert_to<long long>() - 1;
    long long a1 = flatcone::ceil_of(max_x - Rational(b, 2)).convert_to<long long>() + 1;
    for (long long a = a0; a <= a1; ++a) {
      GridPoint p{Rational(a) + Rational(b, 2), Rational(b, 2)};
      // up: p, p+1, p+omega; down: p+1, p+1+omega, p+omega
      GridPoint up = p + GridPoint{Rational(1, 2), Rational(1, 6)};
      GridPoint down = p + GridPoint{Rational(1), Rational(1, 3)};
      count += strictly_inside(poly, up);
      count += strictly_inside(poly, down);
    }
  }
  return count;
}

/// Two lattice points lie in different classes of Eis / 2 Eis.
inline bool different_classes(const GridPoint& p, const GridPoint& q) {
  GridPoint h = Rational(1, 2) * (p - q);
  bool eisenstein = flatcone::is_integral(h.x + h.y) && flatcone::is_integral(h.x - h.y);
  return !eisenstein;
}

struct Inertia {
  std::size_t positive = 0, negative = 0, zero = 0;
};

/// Inertia of a symmetric rational matrix from its characteristic polynomial: all roots
/// are real, so Descartes' rule of signs counts them exactly.
inline Inertia inertia(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  // Faddeev-LeVerrier: c[k] is the coefficient of x^(n-k), c[0] = 1.
  std::vector<Rational> c(n + 1, Rational(0));
  c[0] = 1;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    // m <- a m + c[k-1] I
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        next[i][j] = s + (i == j ? c[k - 1] : Rational(0));
      }
    m = next;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    c[k] = -trace / Rational(static_cast<long long>(k));
  }
  Inertia out;
  while (out.zero < n && c[n - out.zero] == 0) ++out.zero;
  auto changes = [&](bool flip) {
    std::size_t count = 0;
    int last = 0;
    for (std::size_t k = 0; k <= n - out.zero; ++k) {
      Rational v = c[k];
      if (flip && (n - k) % 2 == 1) v = -v;
      int s = v > 0 ? 1 : v < 0 ? -1 : 0;
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  out.positive = changes(false);
  out.negative = changes(true);
  return out;
}

}  // namespace oracle
