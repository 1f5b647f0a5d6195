#pragma once

// Generated and bundled instances.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flatcone/emg.hpp"

namespace flatcone::families {

class ConstructionError : public Error {
 public:
  using Error::Error;
};

class RegistryError : public Error {
 public:
  using Error::Error;
};

/// The spiral family on 2k polygons, k >= 3.
///
/// Start from the spiral quadrangulation: a square 0-1-2-3, then each new vertex n is
/// joined to the two outer-face vertices n-1 and n-3, cutting the outer face in two.
/// Red double edges go on (0,1), on (2j+1, 2j-2) for 2 <= j <= k-2 and on (2k-1, 2k-2);
/// blue parallels complete the degrees on (1,2), (3,0) twice, (2k-2, 2k-3) and
/// (2k-1, 2k-4) twice. Polygon colors alternate with vertex 0 white.
///
/// Throws ConstructionError unless the result is plausible and labelable.
emg::EnhancedMultigraph gen_spiral(int k);

std::vector<std::string> bundled_names();
std::string_view bundled_text(std::string_view name);
emg::EnhancedMultigraph load_bundled(std::string_view name);

namespace detail {
/// Defined in a source file generated from the data directory at build time.
const std::vector<std::pair<std::string_view, std::string_view>>& bundled_files();
}  // namespace detail

}  // namespace flatcone::families
