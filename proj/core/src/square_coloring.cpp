#include "thinset/square_coloring.hpp"

#include <algorithm>
#include <map>

namespace thinset {

std::uint32_t ColoringTable::intern_region(const std::string& name) {
  for (std::uint32_t i = 0; i < region_names_.size(); ++i)
    if (region_names_[i] == name) return i;
  region_names_.push_back(name);
  return static_cast<std::uint32_t>(region_names_.size() - 1);
}

void ColoringTable::set(const Elem& x, const Elem& y, int color, std::uint32_t region) {
  auto [it, fresh] = map_.emplace(ElemPair{x, y}, std::make_pair(color, region));
  if (!fresh)
    throw Error("coloring table already holds (" + x.repr() + ", " + y.repr() + ")");
}

std::optional<int> ColoringTable::color_of(const Elem& x, const Elem& y) const {
  auto it = map_.find(ElemPair{x, y});
  if (it == map_.end()) return std::nullopt;
  return it->second.first;
}

std::optional<std::string> ColoringTable::region_of(const Elem& x, const Elem& y) const {
  auto it = map_.find(ElemPair{x, y});
  if (it == map_.end()) return std::nullopt;
  return region_names_[it->second.second];
}

std::vector<ColoringTable::Entry> ColoringTable::sorted_entries() const {
  std::vector<Entry> out;
  out.reserve(map_.size());
  for (const auto& [key, val] : map_)
    out.push_back({key.first, key.second, val.first, val.second});
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
    if (a.x < b.x) return true;
    if (b.x < a.x) return false;
    return a.y < b.y;
  });
  return out;
}

std::vector<int> alternating_two_coloring(
    std::size_t n_points, const std::vector<std::vector<std::size_t>>& a_blocks,
    const std::vector<std::vector<std::size_t>>& b_blocks,
    std::size_t intersection_cap) {
  auto check_partition = [&](const std::vector<std::vector<std::size_t>>& blocks,
                             const char* name) {
    std::vector<bool> seen(n_points, false);
    std::size_t total = 0;
    for (const auto& block : blocks) {
      for (std::size_t p : block) {
        if (p >= n_points)
          throw PreconditionError(std::string(name) + " family indexes past the window");
        if (seen[p])
          throw PreconditionError(std::string(name) + " family is not disjoint");
        seen[p] = true;
        ++total;
      }
    }
    if (total != n_points)
      throw PreconditionError(std::string(name) + " family does not cover the window");
  };
  check_partition(a_blocks, "A");
  check_partition(b_blocks, "B");

  // Finite-intersection precondition, window proxy: |A_n ∩ B_m| <= cap.
  {
    std::vector<std::size_t> b_of(n_points, 0);
    for (std::size_t m = 0; m < b_blocks.size(); ++m)
      for (std::size_t p : b_blocks[m]) b_of[p] = m;
    for (const auto& block : a_blocks) {
      std::map<std::size_t, std::size_t> inter;
      for (std::size_t p : block) ++inter[b_of[p]];
      for (const auto& [m, count] : inter) {
        if (count > intersection_cap)
          throw PreconditionError("block intersection of size " + std::to_string(count) +
                                  " exceeds the window cap " +
                                  std::to_string(intersection_cap));
      }
    }
  }

  std::vector<int> color(n_points, 0);
  std::size_t stages = std::max(a_blocks.size(), b_blocks.size());
  for (std::size_t k = 0; k < stages; ++k) {
    if (k < a_blocks.size())
      for (std::size_t p : a_blocks[k])
        if (color[p] == 0) color[p] = 2;
    if (k < b_blocks.size())
      for (std::size_t p : b_blocks[k])
        if (color[p] == 0) color[p] = 1;
  }
  return color;
}

namespace {

// Deterministic order key for a block parameter: enumeration index when it
// can be found, then element order.
struct ParamKey {
  std::size_t index;
  Elem elem;
  bool operator<(const ParamKey& o) const {
    if (index != o.index) return index < o.index;
    return elem < o.elem;
  }
};

ParamKey param_key(const Group& g, const Elem& e, std::size_t scan_cap) {
  auto idx = g.index_of(e, scan_cap);
  return ParamKey{idx ? *idx : static_cast<std::size_t>(-1), e};
}

struct RegionPoint {
  Elem x, y;
};

// Runs Step 1 on one region: points grouped into two transversal families
// keyed by their parameters, ordered by enumeration index.
void color_region(ColoringTable& table, const Group& g,
                  const std::vector<RegionPoint>& points,
                  const std::function<Elem(const RegionPoint&)>& a_param,
                  const std::function<Elem(const RegionPoint&)>& b_param,
                  const std::array<int, 3>& rename, const std::string& region_name,
                  std::size_t scan_cap) {
  if (points.empty()) return;
  std::map<ParamKey, std::vector<std::size_t>> a_fam, b_fam;
  for (std::size_t i = 0; i < points.size(); ++i) {
    a_fam[param_key(g, a_param(points[i]), scan_cap)].push_back(i);
    b_fam[param_key(g, b_param(points[i]), scan_cap)].push_back(i);
  }
  std::vector<std::vector<std::size_t>> a_blocks, b_blocks;
  for (auto& [key, block] : a_fam) a_blocks.push_back(std::move(block));
  for (auto& [key, block] : b_fam) b_blocks.push_back(std::move(block));

  // Transversal families meet in at most one point per pair of blocks; the
  // cap turns that into a checked invariant on every run.
  std::vector<int> colors =
      alternating_two_coloring(points.size(), a_blocks, b_blocks, 1);
  std::uint32_t region = table.intern_region(region_name);
  for (std::size_t i = 0; i < points.size(); ++i)
    table.set(points[i].x, points[i].y, rename[static_cast<std::size_t>(colors[i])],
              region);
}

void block_three_coloring_into(ColoringTable& table, const GroupPtr& gp,
                               const std::vector<Elem>& h_window,
                               const std::vector<Elem>& k_subgroup,
                               const std::string& region_prefix) {
  const Group& g = *gp;
  ElemSet h_set(h_window.begin(), h_window.end());
  ElemSet k_set(k_subgroup.begin(), k_subgroup.end());

  for (const Elem& e : k_subgroup)
    if (!h_set.count(e))
      throw ChainError("K is not contained in the H window");
  if (!k_set.count(g.identity()))
    throw ChainError("K misses the identity; not a subgroup");
  for (const Elem& x : k_subgroup) {
    Elem xi = g.invert(x);
    if (h_set.count(xi) && !k_set.count(xi))
      throw ChainError("K is not inverse-closed at " + g.format(x));
    for (const Elem& y : k_subgroup) {
      Elem p = g.multiply(x, y);
      if (h_set.count(p) && !k_set.count(p))
        throw ChainError("K is not product-closed at " + g.format(x) + " * " +
                         g.format(y));
    }
  }

  std::size_t scan_cap = h_window.size() * 8 + 64;

  std::vector<RegionPoint> outer_outer, k_outer, outer_k;
  for (const Elem& x : h_window) {
    bool xk = k_set.count(x) != 0;
    for (const Elem& y : h_window) {
      bool yk = k_set.count(y) != 0;
      if (xk && yk) continue;  // the K×K hole
      if (!xk && !yk)
        outer_outer.push_back({x, y});
      else if (xk)
        k_outer.push_back({x, y});
      else
        outer_k.push_back({x, y});
    }
  }

  auto horizontal = [](const RegionPoint& p) { return p.y; };
  auto vertical = [](const RegionPoint& p) { return p.x; };
  auto diagonal = [&g](const RegionPoint& p) {
    return g.multiply(p.y, g.invert(p.x));  // the g with y = g·x
  };

  // (H\K)×(H\K): horizontals vs verticals, palette {1,2}.
  color_region(table, g, outer_outer, horizontal, vertical, {0, 1, 2},
               region_prefix + "(H\\K)x(H\\K)", scan_cap);
  // K×(H\K): horizontals vs diagonal traces, palette {1,3}.
  color_region(table, g, k_outer, horizontal, diagonal, {0, 1, 3},
               region_prefix + "Kx(H\\K)", scan_cap);
  // (H\K)×K: diagonal traces vs verticals, palette {2,3} (diagonal 1 → 3).
  color_region(table, g, outer_k, diagonal, vertical, {0, 3, 2},
               region_prefix + "(H\\K)xK", scan_cap);
}

}  // namespace

ColoringTable block_three_coloring(GroupPtr g, const std::vector<Elem>& h_window,
                                   const std::vector<Elem>& k_subgroup) {
  ColoringTable table(g);
  block_three_coloring_into(table, g, h_window, k_subgroup, "");
  return table;
}

ColoringTable chain_three_coloring(GroupPtr g, const SubgroupChain& chain,
                                   std::size_t window_n) {
  std::vector<Elem> window = g->prefix(window_n);
  if (!chain.covers(window))
    throw ChainError("chain does not cover the window prefix");

  ColoringTable table(g);
  std::uint32_t base = table.intern_region("base");
  table.set(g->identity(), g->identity(), 1, base);

  for (std::size_t alpha = 0; alpha + 1 < chain.level_count(); ++alpha) {
    block_three_coloring_into(table, g, chain.level(alpha + 1), chain.level(alpha),
                              "annulus" + std::to_string(alpha) + ":");
  }
  return table;
}

LineCensus line_census(const ColoringTable& table, const LineSpec& line,
                       const std::vector<Elem>& window_elems) {
  const Group& g = *table.group();
  LineCensus census;
  switch (line.kind) {
    case LineKind::horizontal:
      census.interest_color = 1;
      break;
    case LineKind::vertical:
      census.interest_color = 2;
      break;
    case LineKind::diagonal:
      census.interest_color = 3;
      break;
  }
  for (const Elem& x : window_elems) {
    ElemPair point;
    switch (line.kind) {
      case LineKind::horizontal:
        point = {x, line.g};
        break;
      case LineKind::vertical:
        point = {line.g, x};
        break;
      case LineKind::diagonal:
        point = {x, g.multiply(line.g, x)};
        break;
    }
    auto color = table.color_of(point.first, point.second);
    if (!color) continue;
    ++census.points_seen;
    if (*color >= 1 && *color <= 3) ++census.counts[static_cast<std::size_t>(*color)];
    if (*color == census.interest_color) census.interest_points.push_back(point);
  }
  return census;
}

}  // namespace thinset
