#include "thinset/thinness.hpp"

#include <algorithm>

#include "thinset/chains.hpp"
#include "thinset/parallel.hpp"

namespace thinset {

std::vector<Elem> collision_set(const WindowedSubset& A, const Elem& g) {
  const Group& grp = *A.group();
  grp.require_mine(g, "collision_set");
  if (grp.is_identity(g))
    throw IdentityRadiusError("collision_set needs g != e");
  std::vector<Elem> out;
  for (const Elem& a : A.members())
    if (A.contains(grp.multiply(g, a))) out.push_back(a);
  return out;
}

std::vector<Elem> exceptional_set(const WindowedSubset& A, const Radius& F, int m) {
  if (m < 1) throw PreconditionError("exceptional_set needs m >= 1");
  const Group& grp = *A.group();
  std::vector<Elem> out;
  for (const Elem& a : A.members()) {
    int hits = 1;  // a itself is in B(a,F) ∩ A
    for (const Elem& f : F.elems()) {
      Elem y = grp.multiply(f, a);
      if (y != a && A.contains(y)) ++hits;
      if (hits > m) break;
    }
    if (hits > m) out.push_back(a);
  }
  return out;
}

ThinnessReport is_m_thin_window(const WindowedSubset& A, const Radius& F, int m,
                                std::size_t bound) {
  if (m < 1) throw PreconditionError("is_m_thin_window needs m >= 1");
  const Window& w = *A.window();
  if (bound > w.size())
    throw PreconditionError("bound exceeds window size");

  ThinnessReport report;
  report.radius = F.describe();
  report.subset = A.describe();
  report.multiplicity = m;
  report.window_size = w.size();
  report.bound = bound;

  const Group& grp = *w.group();
  std::vector<char> violates(w.size(), 0);
  parallel_chunks(w.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t pos = begin; pos < end; ++pos) {
      const Elem& x = w.at(pos);
      int hits = 0;
      for (const Elem& f : F.elems()) {
        if (A.contains(grp.multiply(f, x))) ++hits;
        if (hits > m) break;
      }
      if (hits > m) violates[pos] = 1;
    }
  });
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (!violates[pos]) continue;
    report.violators.push_back(w.at(pos));
    report.minimal_consistent_bound = pos + 1;
    if (pos >= bound) report.violated = true;
  }
  report.exceptional = exceptional_set(A, F, m);
  return report;
}

Lemma1Report lemma1_equivalence_check(const WindowedSubset& A, const Radius& F, int m) {
  if (m < 1) throw PreconditionError("lemma1_equivalence_check needs m >= 1");
  const Window& w = *A.window();

  Radius sym = symmetrize(F);
  Radius beta = compose_radii(sym, sym);

  Lemma1Report report;
  report.radius = F.describe();
  report.composed_radius = beta.describe();
  report.multiplicity = m;
  report.exceptional = exceptional_set(A, beta, m);

  std::vector<Elem> shadow_all = ball_of_set(report.exceptional, sym);
  ElemSet shadow_set;
  for (const Elem& z : shadow_all) {
    if (w.contains(z)) {
      report.shadow.push_back(z);
      shadow_set.insert(z);
    }
  }

  const Group& grp = *w.group();
  for (const Elem& x : w.elements()) {
    if (shadow_set.count(x)) continue;
    int hits = A.contains(x) ? 1 : 0;
    for (const Elem& f : sym.elems()) {
      Elem y = grp.multiply(f, x);
      if (y != x && A.contains(y)) ++hits;
      if (hits > m) break;
    }
    if (hits > m) report.violators.push_back(x);
  }
  return report;
}

namespace {

// Next (m+1)-combination of indices in [0, n); standard odometer.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

IsolatingSubgroupResult thin_isolating_subgroup(const WindowedSubset& A,
                                                const std::vector<Elem>& seed_set,
                                                int m, IsolatingCaps caps) {
  const GroupPtr& gp = A.group();
  const Group& g = *gp;
  if (!g.is_finite())
    throw PreconditionError("thin_isolating_subgroup needs a finite group");
  std::uint64_t order = *g.order();
  if (A.window()->size() != order)
    throw PreconditionError(
        "thin_isolating_subgroup needs the window to cover the whole group");

  std::vector<Elem> universe = A.window()->elements();

  IsolatingSubgroupResult result;
  std::vector<Elem> h = subgroup_closure(g, seed_set, caps.max_subgroup_size);
  result.chain_sizes.push_back(h.size());

  while (true) {
    ElemSet h_set(h.begin(), h.end());
    std::vector<Elem> growth;

    if (h.size() > static_cast<std::size_t>(m)) {
      std::vector<std::size_t> idx(static_cast<std::size_t>(m) + 1);
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      do {
        if (++result.subset_evaluations > caps.max_subset_evaluations)
          throw CapExceededError(
              "thin_isolating_subgroup exceeded the subset-evaluation cap",
              result.chain_sizes);
        // K(X) = {g : |Xg ∩ A| > m}; with |X| = m+1 that means Xg ⊆ A.
        for (const Elem& cand : universe) {
          if (h_set.count(cand)) continue;
          bool all_in = true;
          for (std::size_t i : idx) {
            if (!A.contains(g.multiply(h[i], cand))) {
              all_in = false;
              break;
            }
          }
          if (all_in) growth.push_back(cand);
        }
      } while (next_combination(idx, h.size()));
    }

    if (growth.empty()) break;
    std::vector<Elem> seed = h;
    seed.insert(seed.end(), growth.begin(), growth.end());
    std::vector<Elem> next = subgroup_closure(g, std::move(seed), caps.max_subgroup_size);
    if (next.size() == h.size()) break;
    h = std::move(next);
    result.chain_sizes.push_back(h.size());
  }

  result.whole_group = h.size() == order;
  result.subgroup = std::move(h);
  return result;
}

}  // namespace thinset
