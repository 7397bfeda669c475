#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "thinset/chains.hpp"
#include "thinset/group.hpp"

namespace thinset {

enum class LineKind { horizontal, vertical, diagonal };

// horizontal g: G×{g}; vertical g: {g}×G; diagonal g: {(x, gx) : x ∈ G}.
struct LineSpec {
  LineKind kind;
  Elem g;
};

// Finite partial coloring of G×G with region provenance.
class ColoringTable {
 public:
  explicit ColoringTable(GroupPtr g) : group_(std::move(g)) {}

  std::uint32_t intern_region(const std::string& name);
  void set(const Elem& x, const Elem& y, int color, std::uint32_t region);

  std::optional<int> color_of(const Elem& x, const Elem& y) const;
  std::optional<std::string> region_of(const Elem& x, const Elem& y) const;
  std::size_t size() const { return map_.size(); }
  const GroupPtr& group() const { return group_; }
  const std::vector<std::string>& region_names() const { return region_names_; }

  struct Entry {
    Elem x, y;
    int color;
    std::uint32_t region;
  };
  std::vector<Entry> sorted_entries() const;

 private:
  GroupPtr group_;
  std::unordered_map<ElemPair, std::pair<int, std::uint32_t>, ElemPairHash> map_;
  std::vector<std::string> region_names_;
};

// Theorem-style Step 1 over an abstract countable window: two block families
// that each partition the points, with pairwise finite intersections, get the
// alternating coloring A_0→2, B_0\A_0→1, A_1\B_0→2, ... Returns color 1 or 2
// per point index.
std::vector<int> alternating_two_coloring(
    std::size_t n_points, const std::vector<std::vector<std::size_t>>& a_blocks,
    const std::vector<std::vector<std::size_t>>& b_blocks,
    std::size_t intersection_cap);

// Step 2: colors (H×H) \ (K×K) with palette per region:
//   (H\K)×(H\K) → {1,2}, horizontals vs verticals;
//   K×(H\K)     → {1,3}, horizontals vs diagonal traces;
//   (H\K)×K     → {2,3}, diagonal traces vs verticals.
// K must be a window-verified subgroup of the H window.
ColoringTable block_three_coloring(GroupPtr g, const std::vector<Elem>& h_window,
                                   const std::vector<Elem>& k_subgroup);

// Step 3: χ(e,e) = 1 and each annulus (G_{a+1}×G_{a+1}) \ (G_a×G_a) colored
// by Step 2. The chain's top level must cover the window prefix.
ColoringTable chain_three_coloring(GroupPtr g, const SubgroupChain& chain,
                                   std::size_t window_n);

struct LineCensus {
  std::array<std::size_t, 4> counts{};  // counts[1..3]
  int interest_color = 0;               // 1/2/3 for horizontal/vertical/diagonal
  std::vector<ElemPair> interest_points;
  std::size_t points_seen = 0;
};

LineCensus line_census(const ColoringTable& table, const LineSpec& line,
                       const std::vector<Elem>& window_elems);

}  // namespace thinset
