#pragma once

// The cone of nonnegative solutions, its extreme rays, the integer lattice of the
// solution space, and lattice point enumeration.

#include <cstdint>
#include <vector>

#include "flatcone/linalg.hpp"
#include "flatcone/shapesys.hpp"

namespace flatcone::cone {

/// {x in R^d : inequalities * x >= 0}, plus the map x -> edge lengths.
struct ConeDescription {
  IntMatrix inequalities;  // one primitive row per edge coordinate
  IntMatrix edge_map;      // edge lengths = edge_map * x
  std::size_t dimension = 0;

  bool rays_computed = false;
  std::vector<IntVector> rays;       // primitive, lexicographically sorted
  std::vector<IntVector> lineality;  // basis of the largest subspace inside the cone
  bool has_positive_point = false;

  /// A cone given directly by its inequalities; edge coordinates are the rows' values.
  static ConeDescription from_inequalities(IntMatrix b);

  bool contains(const IntVector& x) const;
};

/// Inequalities only; the kernel basis vectors become the columns of edge_map.
ConeDescription restrict_to_kernel(const shapesys::KernelBasis& k);

/// Double description in exact integer arithmetic. Rows are inserted sorted by number of
/// nonzeros and then lexicographically. When the cone contains a line the rays describe
/// the pointed part inside the row space and the lineality basis is filled in.
ConeDescription extreme_rays(ConeDescription cd);

struct LatticeBasis {
  /// Columns span every integer edge vector of the solution space.
  IntMatrix basis;  // edge count x d
  /// Lattice vector j equals edge_map * to_kernel column j.
  RatMatrix to_kernel;
  RatMatrix from_kernel;

  std::size_t rank() const { return basis.cols(); }
  /// The standard lattice Z^d of a cone given by its own inequalities.
  static LatticeBasis standard(const ConeDescription& cd);
};

/// Saturated integer basis of the span of the given vectors, in Hermite normal form.
LatticeBasis lattice_basis(const std::vector<RatVector>& spanning, const IntMatrix& edge_map);
LatticeBasis lattice_basis(const shapesys::KernelBasis& k);

struct LatticePoint {
  IntVector edges;        // edge lengths
  IntVector coordinates;  // in the lattice basis
  bool strictly_positive = false;
};

struct EnumerationResult {
  std::vector<LatticePoint> points;  // sorted by edge vector
  std::uint64_t candidates = 0;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t budget, EnumerationResult partial);
  std::uint64_t budget() const { return budget_; }
  const EnumerationResult& partial() const { return partial_; }

 private:
  std::uint64_t budget_;
  EnumerationResult partial_;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Every lattice point with all edge lengths in [0, bound]. Lattice coordinates range over
/// a box obtained by inverting a set of independent edge rows; each candidate counts
/// against the budget.
EnumerationResult enumerate_lattice_points(const ConeDescription& cd, const LatticeBasis& lb, long long bound,
                                           std::uint64_t budget = kDefaultBudget);

}  // namespace flatcone::cone
