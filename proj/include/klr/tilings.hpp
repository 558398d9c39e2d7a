#pragma once

// Cuspidality tests for ribbons and skew diagrams, the unique cuspidal
// Kostant tiling with its greedy construction, the strict merge of
// same-content runs, tiling-based block classification, and the recovery
// of a root partition from an e-restricted partition.

#include <optional>
#include <vector>

#include "klr/blocks.hpp"
#include "klr/convex_order.hpp"
#include "klr/diagrams.hpp"
#include "klr/root_system.hpp"

namespace klr {

// Disjoint tiles listed in tableau order, together with their contents and
// their union. Construction checks the tiles are pairwise disjoint and that
// the union is again a skew diagram; content monotonicity along the order is
// the responsibility of whoever builds the tiling.
class RibbonTiling {
 public:
  RibbonTiling(Int e, std::vector<SkewDiagram> tiles);

  Int e() const { return e_; }
  const std::vector<SkewDiagram>& tiles() const { return tiles_; }
  const std::vector<RootVector>& contents() const { return contents_; }
  const SkewDiagram& diagram() const { return union_; }
  Int size() const { return (Int)tiles_.size(); }

  friend bool operator==(const RibbonTiling& a, const RibbonTiling& b);

 private:
  Int e_ = 0;
  std::vector<SkewDiagram> tiles_;
  std::vector<RootVector> contents_;
  SkewDiagram union_;
};

// Nonempty subsets of tau closed under east and south steps inside tau,
// component by component. Exactly the shapes a final tableau tile can take;
// the full diagram itself is included.
std::vector<SkewDiagram> se_closed_subsets(const SkewDiagram& tau);

// The ribbons among the SE-closed subsets, enumerated by a boundary walk:
// from each start with no tau-node to the south, steps east are forced
// (and poisoned by a node hanging below the target), steps north are
// optional, and every east-free node ends a ribbon.
std::vector<SkewDiagram> se_removable_ribbons(const SkewDiagram& tau);
// Mirror walk for ribbons closed under west and north steps.
std::vector<SkewDiagram> nw_removable_ribbons(const SkewDiagram& tau);

// Whether the ribbon is the cuspidal one for its content: equal to the
// preorder walk rebuilt from its own southwest node. The content must be an
// indivisible positive root.
bool is_cuspidal_ribbon(const SkewDiagram& xi, const ConvexPreorder& order);

// Whether every two-tile tableau of tau splits its content into roots weakly
// below and weakly above the indivisible base of cont(tau). Content not of
// the form K * beta for indivisible beta yields false.
bool is_semicuspidal_diagram(const SkewDiagram& tau, const ConvexPreorder& order);

enum class GreedyDirection { southeast_min, northwest_max };

// The unique cuspidal Kostant tiling, built by iteratively removing a
// minimal-content SE-removable ribbon (or dually a maximal-content
// NW-removable one). Tiles come out in tableau order, contents weakly
// decreasing.
RibbonTiling cuspidal_kostant_tiling(
    const SkewDiagram& tau, const ConvexPreorder& order,
    GreedyDirection direction = GreedyDirection::southeast_min);

// Merge the runs of equal-content tiles of the cuspidal Kostant tiling into
// single tiles of content K * beta, strictly decreasing in beta.
RibbonTiling strict_kostant_tiling(const SkewDiagram& tau, const ConvexPreorder& order);

struct TilingClassReport {
  std::vector<Multipartition> members;
  std::vector<bool> weakly_above;    // all tile contents >= delta
  std::vector<bool> strictly_above;  // all tile contents > delta
  bool all_weakly_above = true;
  bool all_strictly_above = true;
};

// Tile every member of the block and record which members only use tiles
// with content weakly (resp. strictly) above delta. Core blocks skip the
// layered enumeration; other blocks respect its budget.
TilingClassReport block_tiling_class(const RootVector& omega,
                                     const std::vector<Int>& charges,
                                     const ConvexPreorder& order, Int budget = 0);

// The unique a for which the delta-content ribbon matches the (theta, a)
// row template, if any.
std::optional<Int> theta_a_ribbon_test(const SkewDiagram& xi,
                                       const ResiduePermutation& theta);

// Read the root partition off the strict tiling of an e-restricted level-one
// partition: real-content tiles give the multiplicities, and the connected
// pieces of the delta-content tile are unscaled back to the partitions they
// dilate via the anchor lattice of their constituent ribbons.
RootPartition root_partition_from_restricted(const Multipartition& lam,
                                             const ConvexPreorder& order);

}  // namespace klr
