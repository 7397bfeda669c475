#pragma once

#include <string>
#include <vector>

#include "thinset/ballean.hpp"
#include "thinset/window.hpp"

namespace thinset {

// Verdicts are only ever "consistent with m-thinness on this window beyond
// this bound" or "violated"; a finite window can refute thinness, never
// prove it.
struct ThinnessReport {
  std::string radius;
  std::string subset;
  int multiplicity = 1;
  std::size_t window_size = 0;
  std::size_t bound = 0;
  // All positions x in the window with |Fx ∩ A| > m.
  std::vector<Elem> violators;
  // Lemma-1 form: {a ∈ A : |B(a,F) ∩ A| > m}.
  std::vector<Elem> exceptional;
  bool violated = false;  // a violator exists beyond the first `bound` positions

  const char* verdict() const { return violated ? "violated" : "consistent"; }
  // Smallest bound that would make the verdict consistent.
  std::size_t minimal_consistent_bound = 0;
};

// {a ∈ A : ga ∈ A} within the window; equals A ∩ g⁻¹A there.
std::vector<Elem> collision_set(const WindowedSubset& A, const Elem& g);

// {a ∈ A : |ball(a,F) ∩ A| > m}.
std::vector<Elem> exceptional_set(const WindowedSubset& A, const Radius& F, int m);

// Checks |Fx ∩ A| <= m for every window x beyond the first `bound` window
// positions; reports all violators either way.
ThinnessReport is_m_thin_window(const WindowedSubset& A, const Radius& F, int m,
                                std::size_t bound);

// Window-exact form of the Lemma-1 "only if" argument: with F̂ = F ∪ F⁻¹ and
// β the composition radius for B(B(x,F̂),F̂), puts Y = {a ∈ A : |B(a,β) ∩ A| > m}
// and Z = B(Y,F̂), then checks |B(x,F̂) ∩ A| <= m for every window x outside Z.
// `agrees` is guaranteed by the argument itself; a violator would be a bug.
struct Lemma1Report {
  std::string radius;
  std::string composed_radius;
  int multiplicity = 1;
  std::vector<Elem> exceptional;  // Y, within the window
  std::vector<Elem> shadow;       // Z = B(Y,F̂), within the window
  std::vector<Elem> violators;    // window x outside Z with |B(x,F̂) ∩ A| > m
  bool agrees() const { return violators.empty(); }
};

Lemma1Report lemma1_equivalence_check(const WindowedSubset& A, const Radius& F, int m);

// Lemma-2 closure iteration at finite scale. Starting from the subgroup
// generated by `seed_set`, repeatedly adds every g with |Xg ∩ A| > m for some
// (m+1)-subset X of the current H, closes under the group operations, and
// stops at a fixpoint. The result satisfies |Hx ∩ A| <= m for every x ∉ H.
struct IsolatingCaps {
  std::size_t max_subset_evaluations = std::size_t{1} << 12;
  std::size_t max_subgroup_size = std::size_t{1} << 12;
};

struct IsolatingSubgroupResult {
  std::vector<Elem> subgroup;             // sorted
  std::vector<std::size_t> chain_sizes;   // |H_0| ⊆ |H_1| ⊆ ...
  std::size_t subset_evaluations = 0;
  bool whole_group = false;               // trivial-result warning
};

IsolatingSubgroupResult thin_isolating_subgroup(const WindowedSubset& A,
                                                const std::vector<Elem>& seed_set,
                                                int m, IsolatingCaps caps = {});

}  // namespace thinset
