#pragma once

#include "surfep/embedding.hpp"

namespace surfep::testing {

// K = C2, H = C2, trivial action (A = V4), beta: x_1 -> 1, all else -> 0.
inline SplitEP v4_problem(std::size_t genus = 64) {
  const FiniteGroup c2 = catalog::cyclic(2);
  std::vector<Elem> x(genus, 0), y(genus, 0);
  x[0] = 1;
  return make_split_ep(c2, c2, ActionSpec::trivial(c2, c2), SurfaceTuple(c2, x, y), genus);
}

// A C2 channel on genus g with a single non-identity image.
inline SurfaceTuple c2_channel(std::size_t genus, bool on_y, std::size_t index) {
  const FiniteGroup c2 = catalog::cyclic(2);
  std::vector<Elem> x(genus, 0), y(genus, 0);
  (on_y ? y : x)[index - 1] = 1;
  return SurfaceTuple(c2, x, y);
}

}  // namespace surfep::testing
