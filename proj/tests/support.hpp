#pragma once

#include <vector>

#include "steiner/design.hpp"

namespace steiner::testsupport {

// AG(2, 3): rows, columns, and both diagonal parallel classes of the 3x3
// grid under (x, y) -> 3x + y. The unique S(2, 3, 9) up to isomorphism
// (there is no cyclic construction at v = 9).
inline Design ag23() {
  const int lines[12][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6},
                            {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {1, 5, 6},
                            {2, 3, 7}, {0, 5, 7}, {1, 3, 8}, {2, 4, 6}};
  std::vector<Subset> blocks;
  for (const auto& l : lines) blocks.push_back(make_subset({l[0], l[1], l[2]}));
  return make_design(9, 3, 2, 1, std::move(blocks));
}

// The S(2, 4, 13) generated by the planar difference set {0, 1, 3, 9}.
inline Design singer_s2413() {
  const std::vector<Subset> base{make_subset({0, 1, 3, 9})};
  return make_cyclic_design(13, base, 4, 2);
}

}  // namespace steiner::testsupport
