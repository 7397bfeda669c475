#include <algorithm>

#include "doctest.h"
#include "support/helpers.hpp"
#include "thinset/square_coloring.hpp"

using namespace thinset;
using namespace thinset::testing;

namespace {

// 20×20 grid: point (col, row) at index col*20 + row.
constexpr std::size_t kGrid = 20;

std::vector<std::vector<std::size_t>> columns() {
  std::vector<std::vector<std::size_t>> blocks(kGrid);
  for (std::size_t c = 0; c < kGrid; ++c)
    for (std::size_t r = 0; r < kGrid; ++r) blocks[c].push_back(c * kGrid + r);
  return blocks;
}

std::vector<std::vector<std::size_t>> rows() {
  std::vector<std::vector<std::size_t>> blocks(kGrid);
  for (std::size_t r = 0; r < kGrid; ++r)
    for (std::size_t c = 0; c < kGrid; ++c) blocks[r].push_back(c * kGrid + r);
  return blocks;
}

}  // namespace

TEST_CASE("alternating coloring of the omega-by-omega grid window") {
  std::vector<int> chi =
      alternating_two_coloring(kGrid * kGrid, columns(), rows(), kGrid);

  for (std::size_t c = 0; c < kGrid; ++c) {
    for (std::size_t r = 0; r < kGrid; ++r) {
      int want = c <= r ? 2 : 1;
      CHECK(chi[c * kGrid + r] == want);
    }
  }
  // Column n has exactly n points of color 1; row j exactly j+1 of color 2.
  for (std::size_t c = 0; c < kGrid; ++c) {
    std::size_t ones = 0;
    for (std::size_t r = 0; r < kGrid; ++r)
      if (chi[c * kGrid + r] == 1) ++ones;
    CHECK(ones == c);
  }
  for (std::size_t r = 0; r < kGrid; ++r) {
    std::size_t twos = 0;
    for (std::size_t c = 0; c < kGrid; ++c)
      if (chi[c * kGrid + r] == 2) ++twos;
    CHECK(twos == r + 1);
  }
}

TEST_CASE("alternating coloring consequences are exact inclusions") {
  auto a_blocks = columns();
  auto b_blocks = rows();
  std::vector<int> chi = alternating_two_coloring(kGrid * kGrid, a_blocks, b_blocks, kGrid);

  // χ⁻¹(1) ∩ A_n ⊆ ∪_{j<n} (A_n ∩ B_j) and χ⁻¹(2) ∩ B_n ⊆ ∪_{j<=n} (B_n ∩ A_j).
  std::vector<std::size_t> b_of(kGrid * kGrid), a_of(kGrid * kGrid);
  for (std::size_t n = 0; n < kGrid; ++n) {
    for (std::size_t p : a_blocks[n]) a_of[p] = n;
    for (std::size_t p : b_blocks[n]) b_of[p] = n;
  }
  for (std::size_t p = 0; p < kGrid * kGrid; ++p) {
    if (chi[p] == 1) CHECK(b_of[p] < a_of[p]);
    if (chi[p] == 2) CHECK(a_of[p] <= b_of[p]);
  }
}

TEST_CASE("alternating coloring degenerate families") {
  // One A-block covering everything: all color 2.
  std::vector<std::vector<std::size_t>> whole{{0, 1, 2, 3, 4, 5}};
  std::vector<std::vector<std::size_t>> singles{{0}, {1}, {2}, {3}, {4}, {5}};
  std::vector<int> chi = alternating_two_coloring(6, whole, singles, 6);
  CHECK(std::count(chi.begin(), chi.end(), 2) == 6);

  // Identical families with finite blocks: everything color 2 as well.
  std::vector<int> same = alternating_two_coloring(6, singles, singles, 6);
  CHECK(std::count(same.begin(), same.end(), 2) == 6);
}

TEST_CASE("alternating coloring validates its preconditions") {
  std::vector<std::vector<std::size_t>> partial{{0, 1}};
  std::vector<std::vector<std::size_t>> full{{0, 1, 2}};
  CHECK_THROWS_AS(alternating_two_coloring(3, partial, full, 3), PreconditionError);
  std::vector<std::vector<std::size_t>> overlap{{0, 1}, {1, 2}};
  CHECK_THROWS_AS(alternating_two_coloring(3, overlap, full, 3), PreconditionError);
  // Intersection cap models "A_n ∩ B_m finite".
  std::vector<std::vector<std::size_t>> a{{0, 1, 2}};
  CHECK_THROWS_AS(alternating_two_coloring(3, a, a, 2), PreconditionError);
}

TEST_CASE("block three-coloring of a Z window over the even subgroup") {
  GroupPtr z = make_integer_lattice(1);
  std::vector<Elem> h_window, k_sub;
  for (std::int64_t v = -8; v <= 8; ++v) {
    h_window.push_back(z->parse(std::to_string(v)));
    if (v % 2 == 0) k_sub.push_back(z->parse(std::to_string(v)));
  }
  ColoringTable table = block_three_coloring(z, h_window, k_sub);
  CHECK(table.size() == 17 * 17 - 9 * 9);

  ElemSet k_set(k_sub.begin(), k_sub.end());
  for (const auto& entry : table.sorted_entries()) {
    bool xk = k_set.count(entry.x) != 0;
    bool yk = k_set.count(entry.y) != 0;
    if (!xk && !yk) CHECK((entry.color == 1 || entry.color == 2));
    if (xk && !yk) CHECK((entry.color == 1 || entry.color == 3));
    if (!xk && yk) CHECK((entry.color == 2 || entry.color == 3));
    CHECK_FALSE((xk && yk));
  }
}

TEST_CASE("block three-coloring degenerate and finite cases") {
  GroupPtr z = make_integer_lattice(1);
  std::vector<Elem> window;
  for (std::int64_t v = -3; v <= 3; ++v) window.push_back(z->parse(std::to_string(v)));

  // K = H: empty domain.
  ColoringTable empty = block_three_coloring(z, window, window);
  CHECK(empty.size() == 0);

  // Full finite group, K = first factor: all 12 pairs within palettes.
  GroupPtr v4 = make_product(make_cyclic(2), make_cyclic(2));
  std::vector<Elem> all = v4->prefix(4);
  std::vector<Elem> k{v4->parse("(0 ; 0)"), v4->parse("(1 ; 0)")};
  ColoringTable table = block_three_coloring(v4, all, k);
  CHECK(table.size() == 12);
  ElemSet k_set(k.begin(), k.end());
  for (const auto& entry : table.sorted_entries()) {
    bool xk = k_set.count(entry.x) != 0;
    bool yk = k_set.count(entry.y) != 0;
    if (!xk && !yk) CHECK(entry.color != 3);
    if (xk && !yk) CHECK(entry.color != 2);
    if (!xk && yk) CHECK(entry.color != 1);
  }

  // K must be a subgroup.
  std::vector<Elem> not_subgroup{z->parse("0"), z->parse("1")};
  CHECK_THROWS_AS(block_three_coloring(z, window, not_subgroup), ChainError);
}

TEST_CASE("chain three-coloring containments on the 16-element window") {
  GroupPtr g = make_direct_sum(2, std::nullopt);
  SubgroupChain chain = SubgroupChain::enumeration_power_chain(g, 2, 4);
  ColoringTable table = chain_three_coloring(g, chain, 16);
  std::vector<Elem> window = g->prefix(16);
  CHECK(table.size() == 256);

  for (const Elem& gg : window) {
    if (g->is_identity(gg)) continue;
    std::size_t level = *chain.level_of(gg);
    for (const Elem& x : window) {
      auto h = table.color_of(x, gg);
      if (h && *h == 1) CHECK(chain.member_of_level(level, x));
      auto v = table.color_of(gg, x);
      if (v && *v == 2) CHECK(chain.member_of_level(level, x));
      auto d = table.color_of(x, g->multiply(gg, x));
      if (d && *d == 3) {
        CHECK(chain.member_of_level(level, x));
        CHECK(chain.member_of_level(level, g->multiply(gg, x)));
      }
    }
  }
}

TEST_CASE("chain three-coloring restricted to an annulus equals the block coloring") {
  GroupPtr g = make_direct_sum(2, std::nullopt);
  SubgroupChain chain = SubgroupChain::enumeration_power_chain(g, 2, 4);
  ColoringTable table = chain_three_coloring(g, chain, 16);

  for (std::size_t alpha = 0; alpha + 1 < chain.level_count(); ++alpha) {
    ColoringTable block =
        block_three_coloring(g, chain.level(alpha + 1), chain.level(alpha));
    for (const auto& entry : block.sorted_entries())
      CHECK(table.color_of(entry.x, entry.y) == entry.color);
  }

  // Single-level window: the chain table is the block table plus the base.
  SubgroupChain one = SubgroupChain::enumeration_power_chain(g, 2, 1);
  ColoringTable single = chain_three_coloring(g, one, 2);
  ColoringTable block = block_three_coloring(g, one.level(1), one.level(0));
  CHECK(single.size() == block.size() + 1);
  CHECK(single.color_of(g->identity(), g->identity()) == 1);
}

TEST_CASE("chain must cover the window") {
  GroupPtr g = make_direct_sum(2, std::nullopt);
  SubgroupChain chain = SubgroupChain::enumeration_power_chain(g, 2, 2);
  CHECK_THROWS_AS(chain_three_coloring(g, chain, 16), ChainError);
}

TEST_CASE("line census") {
  GroupPtr g = make_direct_sum(2, std::nullopt);
  SubgroupChain chain = SubgroupChain::enumeration_power_chain(g, 2, 4);
  ColoringTable table = chain_three_coloring(g, chain, 16);
  std::vector<Elem> window = g->prefix(16);

  // Horizontal line at g in G_2 \ G_1: color-1 points inside G_2 × {g}.
  Elem gg = g->at(2);
  std::size_t level = *chain.level_of(gg);
  CHECK(level == 2);
  LineCensus census = line_census(table, {LineKind::horizontal, gg}, window);
  CHECK(census.points_seen == 16);
  CHECK(census.counts[1] + census.counts[2] + census.counts[3] == 16);
  for (const ElemPair& p : census.interest_points)
    CHECK(chain.member_of_level(level, p.first));

  // True diagonal g = e: census only, no containment asserted.
  LineCensus diag = line_census(table, {LineKind::diagonal, g->identity()}, window);
  CHECK(diag.points_seen == 16);
  CHECK(diag.interest_color == 3);
}
