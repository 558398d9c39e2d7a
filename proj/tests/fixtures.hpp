#pragma once

// Shared hand-checked fixtures used across the test binaries. The reference
// bipartition exercises every beta-number quantity at e = 3; the e = 4
// fixtures pair a staircase bicore with block members around it.

#include <string>
#include <vector>

#include "klr/convex_order.hpp"
#include "klr/diagrams.hpp"
#include "klr/root_system.hpp"

namespace klr::fixtures {

// e = 3, charges (2, 1). Exercises windows, runner maxima, hook shifts, and
// one removable plus one addable ribbon with known witnesses.
inline Multipartition reference_bipartition_e3() {
  return Multipartition(3, {2, 1}, {{8, 4, 4, 3, 3, 2, 2}, {6, 5, 5, 4, 4, 2, 1, 1}});
}

// Row-reading residue word of the reference bipartition.
inline std::string reference_leading_word_e3() {
  return std::string("20120120") + "1201" + "0120" + "201" + "120" + "01" + "20" +
         "120120" + "01201" + "20120" + "1201" + "0120" + "20" + "1" + "0";
}

inline ResiduePermutation reference_theta_e4() { return ResiduePermutation(4, {1, 3, 0, 2}); }

// The two-row comparison matrix realizing reference_theta_e4.
inline ConvexPreorder reference_preorder_e4() {
  return ConvexPreorder(4, {{1, -1, 2, -2}, {0, -1, 1, 0}});
}

// e = 4, charges (2, 0): a bicore whose runners are solidly filled below
// their maxima; every runner-swap statistic of it is frozen in the tests.
inline Multipartition rock_bicore_e4() {
  return Multipartition(4, {2, 0},
                        {{13, 10, 7, 6, 5, 4, 3, 2, 2, 2, 1, 1, 1},
                         {11, 8, 5, 4, 3, 2, 2, 2, 1, 1, 1}});
}

// A member of the block ten delta above the bicore that keeps the runner
// discipline of reference_theta_e4...
inline Multipartition rock_member_e4() {
  return Multipartition(4, {2, 0},
                        {{13, 12, 11, 10, 9, 6, 5, 4, 2, 2, 1, 1, 1},
                         {15, 12, 7, 6, 4, 4, 3, 3, 3, 2, 1}});
}

// ...and a member of the same block that breaks it.
inline Multipartition non_rock_member_e4() {
  return Multipartition(4, {2, 0},
                        {{13, 12, 11, 10, 9, 6, 5, 4, 3, 3, 3, 1, 1},
                         {15, 8, 7, 6, 4, 4, 3, 3, 3, 2, 1}});
}

// e = 4, charges (0, 3): a 103-node content whose block has exactly these
// three members, all of them bicores.
inline std::vector<Multipartition> core_block_trio_e4() {
  return {
      Multipartition(4, {0, 3},
                     {{11, 8, 7, 6, 5, 4, 3, 2, 1, 1, 1},
                      {12, 9, 6, 5, 4, 3, 3, 3, 2, 2, 2, 1, 1, 1}}),
      Multipartition(4, {0, 3},
                     {{11, 8, 7, 6, 5, 4, 3, 3, 3, 2, 2, 2, 1, 1, 1},
                      {12, 9, 6, 5, 4, 3, 2, 1, 1, 1}}),
      Multipartition(4, {0, 3},
                     {{11, 8, 5, 4, 3, 2, 2, 2, 1, 1, 1},
                      {12, 9, 8, 7, 6, 5, 4, 3, 2, 2, 2, 1, 1, 1}}),
  };
}

// e = 4, charge (0), level one: a core with hook shifts all >= 3 along the
// runner order of reference_theta_e4, giving headroom for four delta layers.
inline Multipartition capacity_core_e4() {
  return Multipartition(4, {0}, {{19, 16, 13, 10, 9, 8, 7, 6, 5, 4, 3, 3, 3, 2, 2, 2, 1, 1, 1}});
}

}  // namespace klr::fixtures
