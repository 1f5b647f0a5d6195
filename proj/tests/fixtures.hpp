#pragma once

// Small hand-written instances shared by the test suites.

#include <string>

#include "flatcone/emg.hpp"
#include "flatcone/families.hpp"

namespace fixtures {

inline const char* kTwoVertexOneEdge = R"(vertex 0 W
vertex 1 B
edge 0 0 1 blue
rot 0 0:0
rot 1 0:1
)";

// Two triangles glued along their sides, red marks in every corner.
inline const char* kDoubledTriangle = R"(vertex 0 W
vertex 1 B
edge 0 0 1 blue
edge 1 0 1 blue
edge 2 0 1 blue
edge 3 0 1 red
edge 4 0 1 red
edge 5 0 1 red
rot 0 0:0 3:0 1:0 4:0 2:0 5:0
rot 1 5:1 2:1 4:1 1:1 3:1 0:1
)";

// Two trapezoids: red darts flank blue edge 0 on both sides.
inline const char* kDoubledTrapezoid = R"(vertex 0 W
vertex 1 B
edge 0 0 1 blue
edge 1 0 1 blue
edge 2 0 1 blue
edge 3 0 1 blue
edge 4 0 1 red
edge 5 0 1 red
rot 0 4:0 0:0 5:0 1:0 2:0 3:0
rot 1 3:1 2:1 1:1 5:1 0:1 4:1
)";

/// The k = 3 spiral with one red dart at vertex 0 moved two corners further on.
inline std::string mutated_spiral() {
  std::string text = flatcone::emg::render_emg(flatcone::families::gen_spiral(3));
  const std::string from = "rot 0 14:0 0:0 15:1 9:1 10:1 3:1";
  const std::string to = "rot 0 0:0 15:1 9:1 14:0 10:1 3:1";
  auto at = text.find(from);
  if (at == std::string::npos) throw flatcone::Error("spiral fixture changed");
  return text.replace(at, from.size(), to);
}

/// Replaces one line of an EMG text.
inline std::string replace_line(std::string text, const std::string& from, const std::string& to) {
  auto at = text.find(from);
  if (at == std::string::npos) throw flatcone::Error("line not found: " + from);
  return text.replace(at, from.size(), to);
}

}  // namespace fixtures
