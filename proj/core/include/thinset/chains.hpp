#pragma once

#include <string>
#include <vector>

#include "thinset/group.hpp"

namespace thinset {

// Increasing chain of finite subgroups H_0 ⊆ H_1 ⊆ ... ⊆ H_L with H_0 = {e}.
// Levels are validated: closure under multiplication and inversion, strict
// growth, identity-only base.
class SubgroupChain {
 public:
  static SubgroupChain of(GroupPtr g, std::vector<std::vector<Elem>> levels);

  // H_i = enumeration prefix of size base^i, validated as subgroups; the
  // natural chain for DirectSum[Zmod base; ...] (and a ChainError for groups
  // whose prefixes are not subgroups, e.g. the Z spiral).
  static SubgroupChain enumeration_power_chain(GroupPtr g, std::size_t base,
                                               std::size_t levels);

  const GroupPtr& group() const { return group_; }
  std::size_t depth() const { return levels_.size() - 1; }  // number of steps
  std::size_t level_count() const { return levels_.size(); }
  const std::vector<Elem>& level(std::size_t i) const { return levels_[i]; }
  bool member_of_level(std::size_t i, const Elem& x) const {
    return level_sets_[i].count(x) != 0;
  }
  // Smallest i with x ∈ H_i, if any.
  std::optional<std::size_t> level_of(const Elem& x) const;
  bool covers(const std::vector<Elem>& window_elems) const;

  std::string describe() const;

 private:
  SubgroupChain(GroupPtr g, std::vector<std::vector<Elem>> levels,
                std::vector<ElemSet> sets);

  GroupPtr group_;
  std::vector<std::vector<Elem>> levels_;
  std::vector<ElemSet> level_sets_;
};

// Closure of a seed set under multiplication and inversion inside a finite
// group; throws CapExceededError past max_size.
std::vector<Elem> subgroup_closure(const Group& g, std::vector<Elem> seed,
                                   std::size_t max_size);

}  // namespace thinset
