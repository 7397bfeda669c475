#pragma once

#include <string>
#include <vector>

#include "thinset/groups.hpp"
#include "thinset/thinness.hpp"
#include "thinset/window.hpp"

namespace thinset::testing {

inline WindowPtr z_window(std::size_t n) {
  return Window::prefix(make_integer_lattice(1), n);
}

inline WindowedSubset z_subset(const WindowPtr& w, const std::vector<std::int64_t>& values,
                               std::string desc = "explicit") {
  std::vector<Elem> elems;
  for (std::int64_t v : values) elems.push_back(w->group()->parse(std::to_string(v)));
  return WindowedSubset::of_elements(w, elems, std::move(desc));
}

inline Radius z_radius(const WindowPtr& w, const std::vector<std::int64_t>& values) {
  std::vector<Elem> elems;
  for (std::int64_t v : values) elems.push_back(w->group()->parse(std::to_string(v)));
  return Radius::of(w->group(), std::move(elems));
}

// { b^n, b^n + 1, ..., b^n + width - 1 : n >= 1 } clipped to the window.
inline std::vector<std::int64_t> power_cluster_values(std::int64_t base,
                                                      std::int64_t max_value,
                                                      int width = 1) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = base; p <= max_value; p *= base)
    for (int j = 0; j < width; ++j) out.push_back(p + j);
  return out;
}

inline std::vector<std::int64_t> int_values(const WindowedSubset& s) {
  std::vector<std::int64_t> out;
  for (const Elem& e : s.members()) out.push_back(e.int_value());
  return out;
}

}  // namespace thinset::testing

#include "thinset/constructions.hpp"

namespace thinset::testing {

// First seed at or after `seed` whose indexing passes the genericity audit.
inline PairIndexing find_generic_indexing(const GroupPtr& h, const GroupPtr& k,
                                          const std::vector<ElemPair>& pairs,
                                          std::size_t pool, IndexingMode mode,
                                          std::uint64_t seed) {
  for (std::uint64_t s = seed;; ++s) {
    try {
      return build_pair_indexing(h, k, pairs, pool, mode, s);
    } catch (const GenericityError&) {
      continue;
    }
  }
}

}  // namespace thinset::testing
