#include "flatcone/report.hpp"

namespace flatcone::report {

Json rational(const Rational& q) { return to_string(q); }
Json integer(const Integer& z) { return to_string(z); }

Json integers(const IntVector& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(to_string(z));
  return out;
}

Json point(const geometry::GridPoint& p) { return Json{{"x", to_string(p.x)}, {"ys3", to_string(p.y)}}; }

namespace {

Json signature_json(const qform::Signature& s) {
  return Json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

Json matrix_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Json validation(const emg::ValidationReport& r) {
  Json findings = Json::array();
  for (const auto& f : r.findings)
    findings.push_back(
        {{"rule", std::string(emg::to_string(f.rule))}, {"severity", std::string(emg::to_string(f.severity))},
         {"message", f.message}});
  return Json{{"plausible", r.plausible},
              {"counts",
               {{"vertices", r.counts.vertices},
                {"blue_edges", r.counts.blue_edges},
                {"red_edges", r.counts.red_edges},
                {"bigons", r.counts.bigons},
                {"quadrilaterals", r.counts.quadrilaterals}}},
              {"euler_holds", r.counts.blue_edges == 2 * r.counts.vertices + 2},
              {"findings", std::move(findings)}};
}

Json labels(const emg::EnhancedMultigraph& g, const labeling::LabelMap& labels) {
  Json edges = Json::object();
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (g.edge(e).color == emg::EdgeColor::Blue) edges[std::to_string(g.edge(e).id)] = labels[e];
  return Json{{"seed", {{"vertex", labels.seed.vertex_id}, {"edge", labels.seed.edge_id}}}, {"exponents", edges}};
}

Json system(const pipeline::Instance& inst) {
  Json columns = Json::array();
  for (auto e : inst.system.column_edge) columns.push_back(inst.graph.edge(e).id);
  Json rows = Json::array();
  for (std::size_t i = 0; i < inst.system.matrix.rows(); ++i) {
    const auto& o = inst.system.row_origin[i];
    Json row = integers(inst.system.matrix.row_vector(i));
    rows.push_back({{"polygon", inst.graph.vertex(o.vertex).id},
                    {"part", o.part == shapesys::Part::Re ? "re" : "im"},
                    {"coefficients", std::move(row)}});
  }
  Json basis = Json::array();
  for (const auto& b : inst.kernel.basis) basis.push_back(integers(b));
  const auto& l = inst.lemmas;
  return Json{{"columns", std::move(columns)},
              {"rows", std::move(rows)},
              {"rank", inst.kernel.rank},
              {"dimension", inst.kernel.dimension},
              {"kernel_basis", std::move(basis)},
              {"checks",
               {{"rows_sum_to_zero", l.rows_sum_to_zero},
                {"rank_is_edges_minus_four", l.rank_is_edges_minus_four},
                {"dimension_is_four", l.dimension_is_four},
                {"ranks_agree", l.ranks_agree}}}};
}

Json cone(const pipeline::Instance& inst) {
  Json rays = Json::array();
  Json ray_edges = Json::array();
  for (const auto& r : inst.cone.rays) {
    rays.push_back(integers(r));
    ray_edges.push_back(integers(inst.cone.edge_map * r));
  }
  Json lineality = Json::array();
  for (const auto& r : inst.cone.lineality) lineality.push_back(integers(r));
  Json lattice = Json::array();
  for (std::size_t j = 0; j < inst.lattice.rank(); ++j) lattice.push_back(integers(inst.lattice.basis.column_vector(j)));
  return Json{{"dimension", inst.cone.dimension},
              {"rays", std::move(rays)},
              {"ray_edge_lengths", std::move(ray_edges)},
              {"lineality", std::move(lineality)},
              {"has_positive_point", inst.cone.has_positive_point},
              {"lattice_basis", std::move(lattice)}};
}

Json lattice_points(const pipeline::Instance&, const cone::EnumerationResult& r) {
  Json pts = Json::array();
  std::size_t positive = 0;
  for (const auto& p : r.points) {
    positive += p.strictly_positive;
    pts.push_back({{"edges", integers(p.edges)},
                   {"coordinates", integers(p.coordinates)},
                   {"strictly_positive", p.strictly_positive}});
  }
  return Json{{"count", r.points.size()}, {"strictly_positive", positive}, {"candidates", r.candidates},
              {"points", std::move(pts)}};
}

Json form(const pipeline::Instance& inst) {
  Json global = Json::array();
  for (std::size_t i = 0; i < inst.form.global.rows(); ++i) global.push_back(integers(inst.form.global.row_vector(i)));
  Json out{{"hessian", std::move(global)}, {"restricted", matrix_json(inst.form.restricted)}};
  if (inst.form.signature) {
    out["signature"] = signature_json(*inst.form.signature);
    out["signature_is_1_3_0"] = *inst.form.signature == kExpectedSignature;
  }
  return out;
}

Json realization(const pipeline::Instance& inst, const pipeline::Realization& r, bool include_mesh) {
  const auto& g = inst.graph;
  Json polygons = Json::array();
  for (const auto& p : r.surface.polygons) {
    Json chart = Json::array();
    Json folded = Json::array();
    for (std::size_t i = 0; i < p.side_count(); ++i) {
      chart.push_back(point(p.chart[i]));
      folded.push_back(point(r.surface.place(&p - r.surface.polygons.data(), p.chart[i])));
    }
    Json sides = Json::array();
    for (std::size_t i = 0; i < p.side_count(); ++i)
      sides.push_back({{"edge", g.edge(p.edges[i]).id}, {"length", to_string(p.lengths[i])}, {"step", p.steps[i]}});
    polygons.push_back({{"vertex", g.vertex(p.vertex).id},
                        {"color", p.color == emg::PolygonColor::White ? "W" : "B"},
                        {"sides", std::move(sides)},
                        {"chart", std::move(chart)},
                        {"folded", std::move(folded)},
                        {"triarea", to_string(geometry::triarea(p.chart))}});
  }
  Json vertices = Json::array();
  for (const auto& v : r.surface.vertices)
    vertices.push_back({{"kind", v.kind == geometry::SurfaceVertexKind::Cone ? "cone" : "regular"},
                        {"folded", point(v.folded)},
                        {"polygons", v.corners.size()}});
  Json cones = Json::array();
  for (const auto& c : r.cone_points) cones.push_back(point(c));
  Json histogram = Json::object();
  for (auto [d, count] : r.triangulation.degree_histogram()) histogram[std::to_string(d)] = count;

  Json out{{"edge_lengths", integers(r.columns)},
           {"base", {{"surface_vertex", r.surface.base.vertex},
                     {"polygon", g.vertex(r.surface.polygons[r.surface.base.polygon].vertex).id},
                     {"edge", g.edge(r.surface.polygons[r.surface.base.polygon].edges[r.surface.base.side]).id}}},
           {"polygons", std::move(polygons)},
           {"surface_vertices", std::move(vertices)},
           {"cone_points", std::move(cones)},
           {"triangulation",
            {{"vertices", r.triangulation.vertex_count},
             {"edges", r.triangulation.edges.size()},
             {"triangles", r.triangulation.triangles.size()},
             {"euler_characteristic", r.triangulation.euler_characteristic()},
             {"degree_histogram", std::move(histogram)},
             {"octahedral_degrees", r.triangulation.has_octahedral_degrees()}}},
           {"coloring",
            {{"proper", r.coloring.proper},
             {"proper_by_edge_scan", r.brute_force_proper},
             {"mod3_balanced", r.coloring.balanced}}},
           {"form_value", to_string(r.identity.form_value)},
           {"triarea_sum", to_string(r.identity.triarea_sum)},
           {"form_is_three_times_triangles", r.identity.matches_triangles},
           {"form_is_three_times_triarea", r.identity.matches_triarea},
           {"ok", r.ok()}};
  if (include_mesh) {
    Json folded = Json::array();
    for (std::size_t v = 0; v < r.triangulation.vertex_count; ++v)
      folded.push_back({{"point", point(r.triangulation.folded[v])}, {"color", r.triangulation.color[v]}});
    Json tris = Json::array();
    for (std::size_t t = 0; t < r.triangulation.triangles.size(); ++t) {
      const auto& tri = r.triangulation.triangles[t];
      tris.push_back({{"vertices", {tri[0], tri[1], tri[2]}},
                      {"color", r.triangulation.triangle_color[t] == emg::PolygonColor::White ? "W" : "B"}});
    }
    out["mesh"] = {{"vertices", std::move(folded)}, {"triangles", std::move(tris)}};
  }
  return out;
}

}  // namespace flatcone::report
