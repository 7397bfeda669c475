#pragma once

#include <map>
#include <string>
#include <vector>

#include "thinset/groups.hpp"
#include "thinset/rational.hpp"
#include "thinset/window.hpp"

namespace thinset {

enum class IndexingMode { ordered, unordered };

const char* to_string(IndexingMode mode);

// Certifies that a finite seeded indexing behaves like its infinite ideal:
// distinct x's, no identity, X ∩ X⁻¹ empty, and pairwise quotients distinct
// (the Sidon-style surrogate for a recursively chosen thin X).
struct GenericityAudit {
  bool injective = true;
  bool identity_free = true;
  bool sign_free = true;
  bool sidon = true;
  std::vector<std::string> failures;
  bool passed() const { return injective && identity_free && sign_free && sidon; }
};

// Injective map from pairs of H-elements to distinct elements of K. In
// unordered mode {a,b} and {b,a} share one key (and one x); ordered mode
// keeps them apart.
class PairIndexing {
 public:
  IndexingMode mode = IndexingMode::ordered;
  std::uint64_t seed = 0;
  GroupPtr h;
  GroupPtr k;
  std::map<ElemPair, Elem> x_of;

  ElemPair key(const Elem& a, const Elem& b) const;
  const Elem& x(const Elem& a, const Elem& b) const;
  std::vector<Elem> x_values() const;
};

// Draws x-values from the first k_pool enumerated elements of K (index 0,
// the identity, excluded) and audits the result; a failing audit rejects the
// seed with a GenericityError carrying the report.
PairIndexing build_pair_indexing(GroupPtr H, GroupPtr K,
                                 const std::vector<ElemPair>& domain_pairs,
                                 std::size_t k_pool, IndexingMode mode,
                                 std::uint64_t seed);

GenericityAudit audit_indexing(const PairIndexing& idx);

struct Provenance {
  Elem a, b;
  int role = 0;    // bergman: 0 base, 1 a-shift, 2 b-shift; quadratic: k
  int label = -1;  // direct-sum component label, -1 otherwise
};

struct ConstructionOutput {
  std::string kind;
  GroupPtr ambient;
  std::vector<Elem> elements;  // sorted, collision-free
  std::map<Elem, Provenance> provenance;
  IndexingMode mode = IndexingMode::ordered;
  std::uint64_t seed = 0;
  GenericityAudit audit;

  bool contains(const Elem& e) const { return provenance.count(e) != 0; }
  WindowedSubset as_subset(WindowPtr w) const;
};

// All ordered pairs (a,b) with a ≠ b and both ≠ e from a finite group.
std::vector<ElemPair> all_distinct_pairs(GroupPtr H);

// Seeded pairs of Q^d vectors with small entries, (0,0) excluded.
std::vector<ElemPair> sample_rational_pairs(GroupPtr Hq, std::size_t count,
                                            std::uint64_t seed);

// A = { (e, x_{a,b}), (a, x_{a,b}), (b, x_{a,b}) } ⊆ H×K over the domain
// pairs. Degenerate pairs (a = b or touching e) are rejected up front.
ConstructionOutput bergman_set(GroupPtr H, GroupPtr K,
                               const std::vector<ElemPair>& pairs,
                               const PairIndexing& idx);

struct TranslateCount {
  std::size_t count = 0;
  std::vector<Elem> witnesses;
};

// Exact over the entire group, not just a window: any g with Fg ⊆ A lies in
// F⁻¹A, so the candidate sweep is complete. Requires e ∈ F.
TranslateCount count_translates_in(const std::vector<Elem>& F,
                                   const ConstructionOutput& A);

// A = { x_{a,b} + ka + k²b : k = 0..m } ⊆ K ⊕ H with H = Q^d.
ConstructionOutput quadratic_thin_set(GroupPtr Hq, GroupPtr K, int m,
                                      const std::vector<ElemPair>& pairs,
                                      const PairIndexing& idx);

// A(x,y) = {α ∈ A : α·x ∈ A and α·y ∈ A}; x, y distinct and non-identity.
std::vector<Elem> pair_collision_set(const ConstructionOutput& A, const Elem& x,
                                     const Elem& y);

struct VandermondeSolution {
  std::vector<Rational> a, b;
};

// Unique (a,b) with (j−i)a + (j²−i²)b = x2 and (k−i)a + (k²−i²)b = y2;
// the determinant (j−i)(k−i)(k−j) must be nonzero.
VandermondeSolution vandermonde_solve(int i, int j, int k,
                                      const std::vector<Rational>& x2,
                                      const std::vector<Rational>& y2);

// (x + ka + k²b) − (x + la + l²b) = (k−l)a + (k²−l²)b, exactly.
bool difference_identity_check(const std::vector<Rational>& a,
                               const std::vector<Rational>& b, int k, int l);

// A = A_left ∪ A_right inside ambient_left ⊕ ambient_right, components
// labeled n = m(m+1)/2 − 1 in provenance.
ConstructionOutput direct_sum_set(int label_left, const ConstructionOutput& left,
                                  int label_right, const ConstructionOutput& right);

struct CollisionExplanation {
  Elem element;
  int i = 0, j = 0, k = 0;
  bool same_pair = false;
  bool vandermonde_matches = false;
  bool ok() const { return same_pair && vandermonde_matches; }
};

// Completeness of the zero-K-component case analysis: every member of
// A(x,y) must decode, through provenance, to a distinct-index triple whose
// Vandermonde solution reproduces its pair exactly.
std::vector<CollisionExplanation> explain_zero_k_collisions(
    const ConstructionOutput& A, const Elem& x, const Elem& y);

// Rational coordinates of a Q^d element.
std::vector<Rational> rational_coords(const Elem& e);

// Named construction output as a windowed subset; the subset-spec hook
// "construction <kind>; key=value; ...". The window group must match the
// construction's ambient group.
WindowedSubset construction_subset(const std::string& kind,
                                   const std::map<std::string, std::string>& params,
                                   WindowPtr w);

}  // namespace thinset
