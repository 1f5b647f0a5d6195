#include "flatcone/qform.hpp"

namespace flatcone::qform {

const IntMatrix& slot_matrix() {
  static const IntMatrix m = [] {
    IntMatrix s(6, 6);
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        int dist = std::min((i - j + 6) % 6, (j - i + 6) % 6);
        s(i, j) = dist == 1 ? 2 : dist == 2 ? 1 : 0;
      }
    }
    return s;
  }();
  return m;
}

Rational PolygonForm::value(const RatVector& sides) const {
  if (sides.size() != slots.size()) throw Error("polygon form needs one length per side");
  Rational v = 0;
  for (std::size_t i = 0; i < sides.size(); ++i)
    for (std::size_t j = 0; j < sides.size(); ++j) v += Rational(local(i, j)) * sides[i] * sides[j];
  return v / 2;
}

Integer PolygonForm::value(const IntVector& sides) const {
  if (sides.size() != slots.size()) throw Error("polygon form needs one length per side");
  Integer v = 0;
  for (std::size_t i = 0; i < sides.size(); ++i)
    for (std::size_t j = 0; j < sides.size(); ++j) v += local(i, j) * sides[i] * sides[j];
  return v / 2;  // the diagonal of M vanishes, so v is even
}

IntMatrix PolygonForm::pushed(std::size_t edge_count) const {
  if (columns.size() != slots.size()) throw Error("polygon form is not mapped to edges");
  IntMatrix g(edge_count, edge_count);
  for (std::size_t i = 0; i < slots.size(); ++i)
    for (std::size_t j = 0; j < slots.size(); ++j) g(columns[i], columns[j]) += local(i, j);
  return g;
}

PolygonForm polygon_form(const std::vector<int>& slots) {
  PolygonForm f;
  f.slots = slots;
  for (int s : slots)
    if (s < 0 || s > 5) throw Error("slot out of range");
  f.local = IntMatrix(slots.size(), slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i)
    for (std::size_t j = 0; j < slots.size(); ++j) f.local(i, j) = slot_matrix()(slots[i], slots[j]);
  return f;
}

PolygonForm polygon_form(const labeling::PolygonBoundary& b, const shapesys::ShapeSystem& s) {
  PolygonForm f = polygon_form(b.slots);
  for (emg::Dart d : b.sides) f.columns.push_back(s.edge_column.at(d.edge));
  return f;
}

Integer QuadraticForm::value(const IntVector& edges) const {
  return dot<Integer>(edges, global * edges) / 2;
}

QuadraticForm assemble_form(const std::vector<labeling::PolygonBoundary>& boundaries,
                            const shapesys::ShapeSystem& s) {
  QuadraticForm q;
  const std::size_t n = s.edge_count();
  q.global = IntMatrix(n, n);
  for (const auto& b : boundaries) {
    PolygonForm f = polygon_form(b, s);
    for (std::size_t i = 0; i < f.slots.size(); ++i)
      for (std::size_t j = 0; j < f.slots.size(); ++j) q.global(f.columns[i], f.columns[j]) += f.local(i, j);
  }
  return q;
}

QuadraticForm restrict_form(QuadraticForm q, const IntMatrix& kernel_columns) {
  IntMatrix r = kernel_columns.transposed() * q.global * kernel_columns;
  q.restricted = to_rational(r);
  q.signature = signature(q.restricted);
  return q;
}

Signature signature(RatMatrix m) {
  if (m.rows() != m.cols()) throw Error("signature of a non-square matrix");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m(i, j) != m(j, i)) throw Error("signature of a non-symmetric matrix");

  Signature sig;
  auto count = [&](const Rational& d) {
    if (d > 0)
      ++sig.positive;
    else if (d < 0)
      ++sig.negative;
    else
      ++sig.zero;
  };
  auto swap_sym = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    m.swap_rows(a, b);
    for (std::size_t r = 0; r < n; ++r) std::swap(m(r, a), m(r, b));
  };
  // Adds factor * (row/col src) to (row/col dst).
  auto add_sym = [&](std::size_t dst, std::size_t src, const Rational& factor) {
    for (std::size_t c = 0; c < n; ++c) m(dst, c) += factor * m(src, c);
    for (std::size_t r = 0; r < n; ++r) m(r, dst) += factor * m(r, src);
  };

  std::size_t k = 0;
  while (k < n) {
    std::size_t p = k;
    while (p < n && m(p, p) == 0) ++p;
    if (p == n) {
      // No usable diagonal entry: find an off-diagonal one and make a diagonal pivot.
      std::size_t a = n, b = n;
      for (std::size_t i = k; i < n && a == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (m(i, j) != 0) {
            a = i;
            b = j;
            break;
          }
      if (a == n) {
        sig.zero += n - k;
        break;
      }
      // (e_a + e_b)^T M (e_a + e_b) = 2 m(a, b) != 0.
      add_sym(a, b, Rational(1));
      p = a;
    }
    swap_sym(k, p);
    const Rational pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      add_sym(i, k, -m(i, k) / pivot);
    }
    count(pivot);
    ++k;
  }
  return sig;
}

TriangleIdentity verify_triangle_identity(const QuadraticForm& q, const IntVector& edges,
                                          std::size_t triangle_count, const Rational& triarea_sum) {
  TriangleIdentity t;
  t.form_value = q.value(edges);
  t.triangle_count = triangle_count;
  t.triarea_sum = triarea_sum;
  t.matches_triangles = t.form_value == Integer(3) * Integer(triangle_count);
  t.matches_triarea = Rational(t.form_value) == 3 * triarea_sum;
  return t;
}

}  // namespace flatcone::qform
