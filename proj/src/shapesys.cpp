#include "flatcone/shapesys.hpp"

namespace flatcone::shapesys {

ShapeSystem build_constraints(const emg::EnhancedMultigraph& g,
                              const std::vector<labeling::PolygonBoundary>& boundaries,
                              const labeling::LabelMap& labels) {
  ShapeSystem s;
  s.edge_column.assign(g.edge_count(), ShapeSystem::npos);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).color != emg::EdgeColor::Blue) continue;
    s.edge_column[e] = s.column_edge.size();
    s.column_edge.push_back(e);
  }
  s.matrix = IntMatrix(2 * boundaries.size(), s.column_edge.size());
  for (std::size_t p = 0; p < boundaries.size(); ++p) {
    const auto& b = boundaries[p];
    const int sign = b.color == emg::PolygonColor::White ? 1 : -1;
    for (emg::Dart d : b.sides) {
      int e = labels[d.edge];
      if (e < 0) throw Error("side without a label");
      std::size_t c = s.edge_column[d.edge];
      s.matrix(2 * p, c) += sign * kDoubledReal[e];
      s.matrix(2 * p + 1, c) += sign * kScaledImag[e];
    }
    s.row_origin.push_back({b.vertex, Part::Re});
    s.row_origin.push_back({b.vertex, Part::Im});
  }
  return s;
}

IntMatrix KernelBasis::as_columns() const {
  IntMatrix m(ambient, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < ambient; ++i) m(i, j) = basis[j][i];
  return m;
}

KernelBasis kernel_basis(const IntMatrix& matrix) {
  KernelBasis k;
  k.ambient = matrix.cols();
  for (const auto& v : null_space(to_rational(matrix))) k.basis.push_back(clear_denominators(v));
  k.dimension = k.basis.size();
  k.rank = k.ambient - k.dimension;
  return k;
}

LemmaCheck verify_lemmas(const ShapeSystem& s, const KernelBasis& k) {
  LemmaCheck c;
  c.rows_sum_to_zero = true;
  for (std::size_t j = 0; j < s.matrix.cols(); ++j) {
    Integer re = 0, im = 0;
    for (std::size_t i = 0; i < s.matrix.rows(); ++i) (s.row_origin[i].part == Part::Re ? re : im) += s.matrix(i, j);
    if (re != 0 || im != 0) c.rows_sum_to_zero = false;
  }
  c.rank = k.rank;
  c.dimension = k.dimension;
  c.fraction_free_rank = rank_fraction_free(s.matrix);
  c.ranks_agree = c.fraction_free_rank == c.rank;
  c.rank_is_edges_minus_four = s.edge_count() >= 4 && c.rank == s.edge_count() - 4;
  c.dimension_is_four = c.dimension == 4;
  return c;
}

}  // namespace flatcone::shapesys
