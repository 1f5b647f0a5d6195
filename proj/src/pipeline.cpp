#include "flatcone/pipeline.hpp"

namespace flatcone::pipeline {

Instance analyze(std::string name, emg::EnhancedMultigraph graph, std::optional<labeling::SeedFlag> seed) {
  auto validation = emg::validate_plausible(graph);
  if (!validation.plausible) throw InvalidInstance(name + " is not plausible", validation);
  Instance inst{std::move(name), std::move(graph), std::move(validation), {}, {}, {}, {}, {}, {}, {}, {}};
  inst.boundaries = labeling::polygon_boundaries(inst.graph);
  inst.labels = labeling::assign_labels(inst.graph, inst.boundaries, seed);
  inst.system = shapesys::build_constraints(inst.graph, inst.boundaries, inst.labels);
  inst.kernel = shapesys::kernel_basis(inst.system);
  inst.lemmas = shapesys::verify_lemmas(inst.system, inst.kernel);
  inst.cone = cone::extreme_rays(cone::restrict_to_kernel(inst.kernel));
  inst.lattice = cone::lattice_basis(inst.kernel);
  inst.form = qform::restrict_form(qform::assemble_form(inst.boundaries, inst.system), inst.kernel.as_columns());
  return inst;
}

geometry::EdgeLengths edge_lengths(const Instance& inst, const IntVector& columns) {
  return geometry::lengths_from_columns(inst.system, columns);
}

bool brute_force_proper(const geometry::ColoredTriangulation& t) {
  for (const auto& tri : t.triangles)
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        const auto& p = t.folded[tri[a]];
        const auto& q = t.folded[tri[b]];
        if ((p - q).norm() != 1) return false;
        if (t.color[tri[a]] == t.color[tri[b]]) return false;
      }
  return true;
}

Realization realize_point(const Instance& inst, const IntVector& columns, std::optional<std::uint64_t> tree_seed) {
  Realization r;
  r.columns = columns;
  r.surface = geometry::realize(inst.graph, inst.boundaries, inst.labels, edge_lengths(inst, columns), tree_seed);
  r.triangulation = geometry::build_triangulation(r.surface);
  r.coloring = geometry::four_color(r.triangulation);
  r.brute_force_proper = brute_force_proper(r.triangulation);
  r.triarea_sum = 0;
  for (const auto& p : r.surface.polygons) r.triarea_sum += geometry::triarea(p.chart);
  r.identity = qform::verify_triangle_identity(inst.form, columns, r.triangulation.triangles.size(), r.triarea_sum);
  r.cone_points = geometry::cone_point_coordinates(r.surface);
  return r;
}

}  // namespace flatcone::pipeline
