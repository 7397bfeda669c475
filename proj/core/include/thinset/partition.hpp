#pragma once

#include <functional>
#include <string>
#include <vector>

#include "thinset/chains.hpp"
#include "thinset/thinness.hpp"

namespace thinset {

struct PartitionTraceEntry {
  Elem element;
  std::size_t window_pos = 0;
  int color = 0;
  // Index into the cumulative radius schedule this element was able to honor
  // (0 = none, i.e. absorbed into the reported bounded prefix).
  std::size_t active_radius = 0;
  std::size_t conflicts = 0;
};

struct PartitionResult {
  WindowPtr window;
  std::vector<std::vector<Elem>> parts;                  // window order inside a part
  std::vector<std::vector<ThinnessReport>> part_reports; // [part][schedule radius]
  std::vector<std::string> schedule;                     // radius descriptions
  std::vector<std::size_t> radius_bounds;                // reported bound per radius
  std::vector<PartitionTraceEntry> trace;

  std::size_t nonempty_parts() const;
};

struct GreedyOptions {
  // Input bound for the m-thin precondition check; SIZE_MAX means window/8.
  std::size_t input_bound = static_cast<std::size_t>(-1);
  bool skip_precondition = false;
};

// Greedy coloring along the window order. Conflicts at schedule step j use
// D_j = R_j·R_j⁻¹ \ {e} for the cumulative radius R_j — exactly the pairs
// that can share a translate R_j·x. Each element honors the largest j with
// |D_j a ∩ A| <= m-1, so back-degree < m and m colors always suffice; the
// elements that honor fewer steps are covered by the reported per-radius
// bounds, and every part then passes the 1-thin window check at every
// scheduled radius by construction.
PartitionResult greedy_thin_partition(const WindowedSubset& A, int m,
                                      const std::vector<Radius>& schedule,
                                      const GreedyOptions& opts = {});

// Ordinal radii F_1, F_2, F_4, ..., capped at the window size.
std::vector<Radius> default_radius_schedule(GroupPtr g, std::size_t window_size,
                                            std::size_t max_radius = 64);

struct VerificationReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Re-checks disjointness, covering, and per-part m_part-thin window reports;
// independent of any algorithm trace.
VerificationReport verify_partition(const WindowedSubset& A,
                                    const std::vector<std::vector<Elem>>& parts,
                                    const Radius& F, int m_part, std::size_t bound);

// ---------------------------------------------------------------------------
// Uniform-space variant: entourages over an abstract finite point set.
// ---------------------------------------------------------------------------

struct Entourage {
  std::string name;
  std::function<bool(const Elem&, const Elem&)> related;
};

struct UniformPartitionResult {
  std::vector<std::vector<Elem>> parts;
  std::size_t colors_used = 0;
  std::vector<PartitionTraceEntry> trace;
};

// Partitions A into <= mu parts, each V-discrete: builds the graph with an
// edge (x,y) iff some z in the point set has x,y ∈ V(z), greedy-colors it,
// and the preconditions |U(x) ∩ A| <= mu and V∘V ⊆ U (checked, with witness)
// make every part P satisfy V(x) ∩ P = {x}.
UniformPartitionResult uniform_discrete_partition(const std::vector<Elem>& points,
                                                  const std::vector<Elem>& subset,
                                                  const Entourage& U,
                                                  const Entourage& V, int mu);

// ---------------------------------------------------------------------------
// Subgroup-chain partition.
// ---------------------------------------------------------------------------

// Assigns colors to the level subset; entries with preassigned[i] >= 0 must
// keep their color (levels extend each other), the rest are -1.
using LevelPartitioner = std::function<std::vector<int>(
    const WindowedSubset& level_subset, int parts_target,
    const std::vector<int>& preassigned)>;

struct ChainCollisionCheck {
  std::size_t level = 0;  // alpha with g in H_{alpha+1} \ H_alpha
  Elem g;
  int part = 0;
  std::vector<Elem> collision;   // {x in B_i : gx in B_i}
  std::vector<Elem> exceptions;  // collision elements outside H_{alpha+1}
};

struct ChainPartitionResult {
  std::vector<std::vector<Elem>> parts;  // exactly parts_target entries, empties kept
  std::vector<std::vector<int>> level_assignments;
  std::vector<ChainCollisionCheck> checks;
  std::size_t total_exceptions = 0;
};

// Theorem-3 device on a window: partition each A ∩ H_α coherently (levels
// extend), collect B_i from annulus assignments, and verify for every
// g ∈ H_{α+1} \ H_α that per-part collision sets stay inside H_{α+1},
// reporting exceptions instead of assuming them away.
ChainPartitionResult chain_partition(const WindowedSubset& A, const SubgroupChain& chain,
                                     const LevelPartitioner& per_level, int m,
                                     int parts_target);

// Default per-level partitioner: greedy_thin_partition with the level's own
// ordinal radius schedule, extended to honor preassigned colors.
LevelPartitioner greedy_level_partitioner(int m);

}  // namespace thinset
