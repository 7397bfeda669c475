#include "thinset/chains.hpp"

#include <algorithm>

namespace thinset {
namespace {

void check_subgroup(const Group& g, const std::vector<Elem>& elems, const ElemSet& set,
                    std::size_t level_index) {
  std::string where = "chain level " + std::to_string(level_index);
  if (!set.count(g.identity())) throw ChainError(where + " misses the identity");
  for (const Elem& x : elems) {
    if (!set.count(g.invert(x)))
      throw ChainError(where + " is not inverse-closed at " + g.format(x));
    for (const Elem& y : elems) {
      if (!set.count(g.multiply(x, y)))
        throw ChainError(where + " is not closed under products: " + g.format(x) +
                         " * " + g.format(y));
    }
  }
}

}  // namespace

SubgroupChain::SubgroupChain(GroupPtr g, std::vector<std::vector<Elem>> levels,
                             std::vector<ElemSet> sets)
    : group_(std::move(g)), levels_(std::move(levels)), level_sets_(std::move(sets)) {}

SubgroupChain SubgroupChain::of(GroupPtr g, std::vector<std::vector<Elem>> levels) {
  if (levels.empty()) throw ChainError("chain needs at least the base level {e}");
  std::vector<ElemSet> sets;
  sets.reserve(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (const Elem& e : levels[i]) g->require_mine(e, "chain");
    std::sort(levels[i].begin(), levels[i].end());
    levels[i].erase(std::unique(levels[i].begin(), levels[i].end()), levels[i].end());
    ElemSet set(levels[i].begin(), levels[i].end());
    check_subgroup(*g, levels[i], set, i);
    sets.push_back(std::move(set));
  }
  if (levels[0].size() != 1)
    throw ChainError("chain base level must be exactly {e}");
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    if (levels[i].size() >= levels[i + 1].size())
      throw ChainError("chain must be strictly increasing at level " +
                       std::to_string(i + 1));
    for (const Elem& e : levels[i])
      if (!sets[i + 1].count(e))
        throw ChainError("chain level " + std::to_string(i) +
                         " is not contained in level " + std::to_string(i + 1));
  }
  return SubgroupChain(std::move(g), std::move(levels), std::move(sets));
}

SubgroupChain SubgroupChain::enumeration_power_chain(GroupPtr g, std::size_t base,
                                                     std::size_t levels) {
  if (base < 2) throw ChainError("enumeration_power_chain needs base >= 2");
  std::vector<std::vector<Elem>> lv;
  std::size_t size = 1;
  for (std::size_t i = 0; i <= levels; ++i) {
    lv.push_back(g->prefix(size));
    if (i < levels) {
      if (size > SIZE_MAX / base) throw ChainError("chain level size overflows");
      size *= base;
    }
  }
  return of(std::move(g), std::move(lv));
}

std::optional<std::size_t> SubgroupChain::level_of(const Elem& x) const {
  for (std::size_t i = 0; i < level_sets_.size(); ++i)
    if (level_sets_[i].count(x)) return i;
  return std::nullopt;
}

bool SubgroupChain::covers(const std::vector<Elem>& window_elems) const {
  const ElemSet& top = level_sets_.back();
  for (const Elem& e : window_elems)
    if (!top.count(e)) return false;
  return true;
}

std::string SubgroupChain::describe() const {
  std::string out = "chain(";
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (i) out += " < ";
    out += std::to_string(levels_[i].size());
  }
  return out + ") in " + group_->spec_text();
}

std::vector<Elem> subgroup_closure(const Group& g, std::vector<Elem> seed,
                                   std::size_t max_size) {
  ElemSet set;
  std::vector<Elem> elems;
  auto add = [&](const Elem& e) {
    if (set.insert(e).second) {
      elems.push_back(e);
      return true;
    }
    return false;
  };
  add(g.identity());
  for (const Elem& e : seed) {
    g.require_mine(e, "subgroup_closure");
    add(e);
  }
  std::size_t frontier = 0;
  while (frontier < elems.size()) {
    if (elems.size() > max_size)
      throw CapExceededError("subgroup closure exceeded cap " + std::to_string(max_size),
                             {elems.size()});
    Elem x = elems[frontier++];
    add(g.invert(x));
    for (std::size_t i = 0; i < elems.size(); ++i) {
      add(g.multiply(x, elems[i]));
      add(g.multiply(elems[i], x));
      if (elems.size() > max_size)
        throw CapExceededError(
            "subgroup closure exceeded cap " + std::to_string(max_size), {elems.size()});
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace thinset
