#include "flatcone/cone.hpp"

#include <algorithm>
#include <numeric>

namespace flatcone::cone {

namespace {

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t nonzeros(std::span<const Integer> row) {
  return static_cast<std::size_t>(std::count_if(row.begin(), row.end(), [](const Integer& x) { return x != 0; }));
}

Integer dot_row(std::span<const Integer> row, const IntVector& x) {
  Integer s = 0;
  for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * x[i];
  return s;
}

IntMatrix select_rows(const IntMatrix& m, const std::vector<std::size_t>& rows) {
  IntMatrix out(rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(rows[i], j);
  return out;
}

struct Ray {
  IntVector v;
  std::vector<bool> zero;  // rows (by original index) tight at v, among those inserted
};

// Extreme rays of the pointed cone {y : a y >= 0}, a of full column rank.
std::vector<IntVector> pointed_rays(const IntMatrix& a) {
  const std::size_t m = a.rows(), r = a.cols();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    std::size_t nx = nonzeros(a.row(x)), ny = nonzeros(a.row(y));
    if (nx != ny) return nx < ny;
    return std::lexicographical_compare(a.row(x).begin(), a.row(x).end(), a.row(y).begin(), a.row(y).end());
  });

  std::vector<std::size_t> initial;
  for (std::size_t i : order) {
    auto trial = initial;
    trial.push_back(i);
    if (rank_rational(to_rational(select_rows(a, trial))) == trial.size()) initial = std::move(trial);
    if (initial.size() == r) break;
  }
  if (initial.size() != r) throw Error("double description needs a full column rank system");

  RatMatrix inv = inverse(to_rational(select_rows(a, initial)));
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < r; ++j) {
    Ray ray{clear_denominators(inv.column_vector(j)), std::vector<bool>(m, false)};
    for (std::size_t t = 0; t < r; ++t)
      if (t != j) ray.zero[initial[t]] = true;
    rays.push_back(std::move(ray));
  }
  std::vector<bool> inserted(m, false);
  for (std::size_t i : initial) inserted[i] = true;

  for (std::size_t i : order) {
    if (inserted[i]) continue;
    inserted[i] = true;
    std::vector<Integer> value;
    value.reserve(rays.size());
    for (const auto& ray : rays) value.push_back(dot_row(a.row(i), ray.v));

    std::vector<Ray> next;
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (value[p] < 0) continue;
      Ray kept = rays[p];
      if (value[p] == 0) kept.zero[i] = true;
      next.push_back(std::move(kept));
    }
    for (std::size_t p = 0; p < rays.size() && r >= 2; ++p) {
      if (value[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (value[n] >= 0) continue;
        std::vector<std::size_t> common;
        for (std::size_t row = 0; row < m; ++row)
          if (rays[p].zero[row] && rays[n].zero[row]) common.push_back(row);
        if (common.size() < r - 2) continue;
        if (rank_rational(to_rational(select_rows(a, common))) != r - 2) continue;
        IntVector v(r);
        for (std::size_t t = 0; t < r; ++t) v[t] = value[p] * rays[n].v[t] - value[n] * rays[p].v[t];
        Ray made{make_primitive(std::move(v)), std::vector<bool>(m, false)};
        for (std::size_t row : common) made.zero[row] = true;
        made.zero[i] = true;
        next.push_back(std::move(made));
      }
    }
    rays = std::move(next);
  }
  std::vector<IntVector> out;
  for (auto& ray : rays) out.push_back(std::move(ray.v));
  return out;
}

}  // namespace

ConeDescription ConeDescription::from_inequalities(IntMatrix b) {
  ConeDescription cd;
  cd.dimension = b.cols();
  cd.edge_map = b;
  cd.inequalities = std::move(b);
  return cd;
}

bool ConeDescription::contains(const IntVector& x) const {
  for (std::size_t i = 0; i < inequalities.rows(); ++i)
    if (dot_row(inequalities.row(i), x) < 0) return false;
  return true;
}

ConeDescription restrict_to_kernel(const shapesys::KernelBasis& k) {
  if (k.dimension == 0) throw Error("cone over a zero-dimensional solution space");
  ConeDescription cd;
  cd.dimension = k.dimension;
  cd.edge_map = k.as_columns();
  cd.inequalities = IntMatrix(k.ambient, k.dimension);
  for (std::size_t i = 0; i < k.ambient; ++i) {
    IntVector row = make_primitive(cd.edge_map.row_vector(i));
    for (std::size_t j = 0; j < k.dimension; ++j) cd.inequalities(i, j) = row[j];
  }
  return cd;
}

ConeDescription extreme_rays(ConeDescription cd) {
  const IntMatrix& b = cd.inequalities;
  const std::size_t d = b.cols();
  cd.rays.clear();
  cd.lineality = integer_null_space(b);

  Echelon ech = reduced_row_echelon(to_rational(b));
  const std::size_t r = ech.pivots.size();
  if (r > 0) {
    // Parametrize the row space: x = W^T y with W the echelon rows.
    std::vector<IntVector> w;
    for (std::size_t i = 0; i < r; ++i) w.push_back(clear_denominators(ech.reduced.row_vector(i)));
    IntMatrix wt(d, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < d; ++j) wt(j, i) = w[i][j];
    for (const auto& y : pointed_rays(b * wt)) cd.rays.push_back(make_primitive(wt * y));
  }
  std::sort(cd.rays.begin(), cd.rays.end(), lex_less);
  cd.rays.erase(std::unique(cd.rays.begin(), cd.rays.end()), cd.rays.end());

  IntVector sum(d, Integer(0));
  for (const auto& ray : cd.rays)
    for (std::size_t j = 0; j < d; ++j) sum[j] += ray[j];
  cd.has_positive_point = true;
  for (std::size_t i = 0; i < b.rows(); ++i)
    if (dot_row(b.row(i), sum) <= 0) cd.has_positive_point = false;
  cd.rays_computed = true;
  return cd;
}

LatticeBasis LatticeBasis::standard(const ConeDescription& cd) {
  LatticeBasis lb;
  lb.basis = cd.edge_map;
  lb.to_kernel = RatMatrix::identity(cd.dimension);
  lb.from_kernel = RatMatrix::identity(cd.dimension);
  return lb;
}

LatticeBasis lattice_basis(const std::vector<RatVector>& spanning, const IntMatrix& edge_map) {
  const std::size_t n = edge_map.rows();
  std::vector<IntVector> rows;
  for (const auto& v : spanning) {
    if (v.size() != n) throw Error("spanning vector has the wrong length");
    rows.push_back(clear_denominators(v));
  }
  std::vector<IntVector> lattice;
  if (!rows.empty()) {
    auto orth = integer_null_space(IntMatrix::from_rows(rows));
    if (orth.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n, Integer(0));
        e[i] = 1;
        lattice.push_back(std::move(e));
      }
    } else {
      lattice = integer_null_space(IntMatrix::from_rows(orth));
    }
  }
  LatticeBasis lb;
  lb.basis = IntMatrix::from_columns(lattice, n);
  const std::size_t d = lattice.size();
  lb.to_kernel = RatMatrix(edge_map.cols(), d);
  RatMatrix map = to_rational(edge_map);
  for (std::size_t j = 0; j < d; ++j) {
    auto t = solve(map, to_rationals(lattice[j]));
    if (!t) throw Error("lattice vector outside the span of the edge map");
    for (std::size_t i = 0; i < edge_map.cols(); ++i) lb.to_kernel(i, j) = (*t)[i];
  }
  if (lb.to_kernel.rows() == d && d > 0) lb.from_kernel = inverse(lb.to_kernel);
  return lb;
}

LatticeBasis lattice_basis(const shapesys::KernelBasis& k) {
  std::vector<RatVector> spanning;
  for (const auto& v : k.basis) spanning.push_back(to_rationals(v));
  return lattice_basis(spanning, k.as_columns());
}

BudgetExceeded::BudgetExceeded(std::uint64_t budget, EnumerationResult partial)
    : Error("lattice enumeration exceeded the budget of " + std::to_string(budget) +
            " candidates; raise it with --budget or lower --max-len (" + std::to_string(partial.points.size()) +
            " points found so far)"),
      budget_(budget),
      partial_(std::move(partial)) {}

namespace {

struct Box {
  std::vector<Integer> lo, hi;
  Integer volume;
};

std::optional<Box> box_for(const IntMatrix& l, const std::vector<std::size_t>& rows, long long bound) {
  IntMatrix sub = select_rows(l, rows);
  RatMatrix rs = to_rational(sub);
  if (determinant(rs) == 0) return std::nullopt;
  RatMatrix c = inverse(rs);
  Box box;
  box.volume = 1;
  for (std::size_t j = 0; j < c.rows(); ++j) {
    Rational lo = 0, hi = 0;
    for (std::size_t k = 0; k < c.cols(); ++k) {
      Rational v = c(j, k) * bound;
      (v < 0 ? lo : hi) += v;
    }
    box.lo.push_back(ceil_of(lo));
    box.hi.push_back(floor_of(hi));
    Integer width = box.hi.back() - box.lo.back() + 1;
    box.volume *= width > 0 ? width : Integer(0);
  }
  return box;
}

// Smallest box among independent row subsets, trying subsets in lexicographic order up to
// a fixed cap; beyond it the first independent subset found greedily is used.
Box choose_box(const IntMatrix& l, long long bound) {
  const std::size_t n = l.rows(), d = l.cols();
  std::vector<std::size_t> greedy;
  for (std::size_t i = 0; i < n && greedy.size() < d; ++i) {
    auto trial = greedy;
    trial.push_back(i);
    if (rank_rational(to_rational(select_rows(l, trial))) == trial.size()) greedy = std::move(trial);
  }
  if (greedy.size() != d) throw Error("lattice basis is not of full column rank");
  Box best = *box_for(l, greedy, bound);

  constexpr std::size_t kSubsetCap = 4096;
  std::vector<std::size_t> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t tried = 0; tried < kSubsetCap && d > 0; ++tried) {
    if (auto b = box_for(l, idx, bound); b && b->volume < best.volume) best = std::move(*b);
    std::size_t i = d;
    while (i > 0 && idx[i - 1] == n - d + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

}  // namespace

EnumerationResult enumerate_lattice_points(const ConeDescription& cd, const LatticeBasis& lb, long long bound,
                                           std::uint64_t budget) {
  if (bound < 0) throw Error("edge length bound must be nonnegative");
  const IntMatrix& l = lb.basis;
  if (l.rows() != cd.edge_map.rows()) throw Error("lattice basis and cone disagree on the edge count");
  const std::size_t d = l.cols();
  EnumerationResult result;
  auto accept = [&](const IntVector& z) {
    IntVector x = l * z;
    bool positive = true;
    for (const auto& xi : x) {
      if (xi < 0 || xi > bound) return;
      if (xi == 0) positive = false;
    }
    result.points.push_back({std::move(x), z, positive});
  };

  if (d == 0) {
    result.candidates = 1;
    accept({});
    return result;
  }
  Box box = choose_box(l, bound);
  if (box.volume == 0) return result;
  IntVector z = box.lo;
  while (true) {
    if (result.candidates == budget) {
      std::sort(result.points.begin(), result.points.end(),
                [](const LatticePoint& a, const LatticePoint& b) { return lex_less(a.edges, b.edges); });
      throw BudgetExceeded(budget, std::move(result));
    }
    ++result.candidates;
    accept(z);
    std::size_t j = 0;
    while (j < d && z[j] == box.hi[j]) {
      z[j] = box.lo[j];
      ++j;
    }
    if (j == d) break;
    ++z[j];
  }
  std::sort(result.points.begin(), result.points.end(),
            [](const LatticePoint& a, const LatticePoint& b) { return lex_less(a.edges, b.edges); });
  return result;
}

}  // namespace flatcone::cone
