#pragma once

// JSON views of pipeline results. Exact values are strings: rationals as "p/q", integers
// in decimal, grid points as {"x": "p/q", "ys3": "p/q"}.

#include <json.hpp>

#include "flatcone/pipeline.hpp"

namespace flatcone::report {

using Json = nlohmann::ordered_json;

Json rational(const Rational& q);
Json integer(const Integer& z);
Json integers(const IntVector& v);
Json point(const geometry::GridPoint& p);

Json validation(const emg::ValidationReport& r);
Json labels(const emg::EnhancedMultigraph& g, const labeling::LabelMap& labels);
Json system(const pipeline::Instance& inst);
Json cone(const pipeline::Instance& inst);
Json lattice_points(const pipeline::Instance& inst, const cone::EnumerationResult& r);
Json form(const pipeline::Instance& inst);
Json realization(const pipeline::Instance& inst, const pipeline::Realization& r, bool include_mesh);

/// Expected inertia of the restricted form.
inline constexpr qform::Signature kExpectedSignature{1, 3, 0};

}  // namespace flatcone::report
