#pragma once

// The shape system: closure of every polygon as integer linear constraints on the blue
// edge lengths, and its solution space.

#include <vector>

#include "flatcone/emg.hpp"
#include "flatcone/labeling.hpp"
#include "flatcone/linalg.hpp"

namespace flatcone::shapesys {

/// 2 Re(omega^e) and Im(omega^e) / (sqrt(3)/2), for e = 0..5.
inline constexpr int kDoubledReal[6] = {2, 1, -1, -2, -1, 1};
inline constexpr int kScaledImag[6] = {0, 1, 1, 0, -1, -1};

enum class Part { Re, Im };

struct RowOrigin {
  std::size_t vertex;
  Part part;
};

struct ShapeSystem {
  /// Two rows per polygon (re, im), one column per blue edge in edge index order.
  IntMatrix matrix;
  std::vector<RowOrigin> row_origin;
  /// Edge index of each column.
  std::vector<std::size_t> column_edge;
  /// Column of each edge index; npos for red edges.
  std::vector<std::size_t> edge_column;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t edge_count() const { return matrix.cols(); }
};

/// Row entries are sign * (2 Re, 2/sqrt(3) Im) of omega^label, with sign +1 on white
/// polygons and -1 on black ones, summed over the polygon's sides.
ShapeSystem build_constraints(const emg::EnhancedMultigraph& g,
                              const std::vector<labeling::PolygonBoundary>& boundaries,
                              const labeling::LabelMap& labels);

struct KernelBasis {
  /// Canonical basis: one primitive integer vector per free column of the reduced
  /// echelon form, in free-column order.
  std::vector<IntVector> basis;
  std::size_t rank = 0;
  std::size_t dimension = 0;
  std::size_t ambient = 0;

  /// ambient x dimension, basis vectors as columns.
  IntMatrix as_columns() const;
};

KernelBasis kernel_basis(const IntMatrix& matrix);
inline KernelBasis kernel_basis(const ShapeSystem& s) { return kernel_basis(s.matrix); }

struct LemmaCheck {
  bool rows_sum_to_zero = false;
  bool rank_is_edges_minus_four = false;
  bool dimension_is_four = false;
  bool ranks_agree = false;  // rational echelon and fraction-free elimination
  std::size_t rank = 0;
  std::size_t fraction_free_rank = 0;
  std::size_t dimension = 0;

  bool all() const { return rows_sum_to_zero && rank_is_edges_minus_four && dimension_is_four && ranks_agree; }
};

/// Diagnostic only: the expected identities presuppose a nice coloring.
LemmaCheck verify_lemmas(const ShapeSystem& s, const KernelBasis& k);

}  // namespace flatcone::shapesys
