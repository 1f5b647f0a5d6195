#include "flatcone/linalg.hpp"

#include <tuple>
#include <utility>

namespace flatcone {

namespace {

// (g, s, t) with s*a + t*b == g >= 0.
std::tuple<Integer, Integer, Integer> extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, Integer(old_r - q * r));
    std::tie(old_s, s) = std::make_tuple(s, Integer(old_s - q * s));
    std::tie(old_t, t) = std::make_tuple(t, Integer(old_t - q * t));
  }
  if (old_r < 0) return {Integer(-old_r), Integer(-old_s), Integer(-old_t)};
  return {old_r, old_s, old_t};
}

// Floor division for integers.
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

Echelon reduced_row_echelon(RatMatrix m) {
  Echelon e;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, lead);
    Rational inv = 1 / m(lead, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c) == 0) continue;
      Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= f * m(lead, j);
    }
    e.pivots.push_back(c);
    ++lead;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank_rational(const RatMatrix& m) { return reduced_row_echelon(m).pivots.size(); }

std::size_t rank_fraction_free(IntMatrix m) {
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, rank);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Integer num = m(rank, c) * m(r, j) - m(r, c) * m(rank, j);
        if (num % prev != 0) throw Error("fraction-free elimination lost exactness");
        m(r, j) = num / prev;
      }
      m(r, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

std::vector<RatVector> null_space(const RatMatrix& m) {
  Echelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

IntMatrix hermite_normal_form(IntMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    while (true) {
      std::size_t best = m.rows();
      for (std::size_t k = r; k < m.rows(); ++k) {
        if (m(k, c) == 0) continue;
        if (best == m.rows() || abs(m(k, c)) < abs(m(best, c))) best = k;
      }
      if (best == m.rows()) break;
      m.swap_rows(best, r);
      bool clean = true;
      for (std::size_t k = r + 1; k < m.rows(); ++k) {
        if (m(k, c) == 0) continue;
        Integer q = floor_div(m(k, c), m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(k, j) -= q * m(r, j);
        if (m(k, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0)
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = -m(r, j);
    for (std::size_t k = 0; k < r; ++k) {
      Integer q = floor_div(m(k, c), m(r, c));
      if (q == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m(k, j) -= q * m(r, j);
    }
    ++r;
  }
  IntMatrix out(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

std::vector<IntVector> integer_null_space(const IntMatrix& m) {
  const std::size_t n = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(n);
  auto combine = [&](IntMatrix& x, std::size_t p, std::size_t j, const Integer& s, const Integer& t,
                     const Integer& bg, const Integer& ag) {
    for (std::size_t r = 0; r < x.rows(); ++r) {
      Integer xp = x(r, p), xj = x(r, j);
      x(r, p) = s * xp + t * xj;
      x(r, j) = -bg * xp + ag * xj;
    }
  };
  std::size_t piv = 0;
  for (std::size_t i = 0; i < a.rows() && piv < n; ++i) {
    for (std::size_t j = piv + 1; j < n; ++j) {
      if (a(i, j) == 0) continue;
      Integer av = a(i, piv), bv = a(i, j);
      auto [g, s, t] = extended_gcd(av, bv);
      Integer ag = av / g, bg = bv / g;
      combine(a, piv, j, s, t, bg, ag);
      combine(u, piv, j, s, t, bg, ag);
    }
    if (a(i, piv) != 0) ++piv;
  }
  if (piv == n) return {};
  IntMatrix k(n - piv, n);
  for (std::size_t c = piv; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) k(c - piv, r) = u(r, c);
  IntMatrix h = hermite_normal_form(std::move(k));
  std::vector<IntVector> basis;
  for (std::size_t r = 0; r < h.rows(); ++r) basis.push_back(h.row_vector(r));
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw Error("solve: dimension mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = reduced_row_echelon(std::move(aug));
  RatVector x(m.cols(), Rational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

Rational determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  Rational det = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t p = c;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < m.rows(); ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error("inverse of non-square matrix");
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = reduced_row_echelon(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw Error("inverse of singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

}  // namespace flatcone
