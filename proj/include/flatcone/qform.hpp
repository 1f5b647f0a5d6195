#pragma once

// The integral quadratic form counting unit triangles, its restriction to the solution
// space, and exact signatures.

#include <vector>

#include "flatcone/labeling.hpp"
#include "flatcone/linalg.hpp"
#include "flatcone/shapesys.hpp"

namespace flatcone::qform {

/// 6x6 slot matrix M: 2 for cyclically adjacent slots, 1 at distance two, 0 otherwise.
/// Q(l) = l^T M l / 2 = 2 sum l_i l_{i+1} + sum l_i l_{i+2}.
const IntMatrix& slot_matrix();

/// A polygon's form restricted to its occupied slots.
struct PolygonForm {
  std::vector<int> slots;
  std::vector<std::size_t> columns;  // edge column of each side; empty when unmapped
  IntMatrix local;                   // M restricted to the occupied slots

  /// Q at the given side lengths, one per occupied slot.
  Rational value(const RatVector& sides) const;
  Integer value(const IntVector& sides) const;
  /// The local matrix pushed to edge columns (repeated edges accumulate).
  IntMatrix pushed(std::size_t edge_count) const;
};

/// Form on the occupied slots of a degenerate hexagon, not tied to any edges.
PolygonForm polygon_form(const std::vector<int>& slots);
PolygonForm polygon_form(const labeling::PolygonBoundary& b, const shapesys::ShapeSystem& s);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct QuadraticForm {
  /// Hessian of Q on edge coordinates: Q(V) = V^T global V / 2.
  IntMatrix global;
  /// kernel^T global kernel; empty until restrict_form.
  RatMatrix restricted;
  std::optional<Signature> signature;

  Integer value(const IntVector& edges) const;
};

QuadraticForm assemble_form(const std::vector<labeling::PolygonBoundary>& boundaries,
                            const shapesys::ShapeSystem& s);

QuadraticForm restrict_form(QuadraticForm q, const IntMatrix& kernel_columns);

/// Exact congruence diagonalization with symmetric pivoting. When every remaining diagonal
/// entry vanishes, a hyperbolic pair (a, b) is turned into the pivot e_a + e_b.
Signature signature(RatMatrix m);

struct TriangleIdentity {
  Integer form_value;
  std::size_t triangle_count = 0;
  Rational triarea_sum;
  bool matches_triangles = false;
  bool matches_triarea = false;

  bool holds() const { return matches_triangles && matches_triarea; }
};

TriangleIdentity verify_triangle_identity(const QuadraticForm& q, const IntVector& edges,
                                          std::size_t triangle_count, const Rational& triarea_sum);

}  // namespace flatcone::qform
