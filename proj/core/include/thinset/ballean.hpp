#pragma once

#include <functional>
#include <string>
#include <vector>

#include "thinset/group.hpp"

namespace thinset {

// A finite radius set F; balls are B(x,F) = Fx ∪ {x}. Elements are kept
// sorted and deduplicated.
class Radius {
 public:
  static Radius of(GroupPtr g, std::vector<Elem> elems);
  // Prefix radius F_n = first n enumerated elements; the cofinal chain that
  // makes the group ballean ordinal.
  static Radius ordinal(GroupPtr g, std::size_t n);

  const std::vector<Elem>& elems() const { return elems_; }
  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(const Elem& x) const;

  bool is_ordinal() const { return ordinal_n_.has_value(); }
  std::optional<std::size_t> ordinal_index() const { return ordinal_n_; }

  std::string describe() const;

 private:
  Radius(GroupPtr g, std::vector<Elem> elems, std::optional<std::size_t> ordinal_n);

  GroupPtr group_;
  std::vector<Elem> elems_;
  std::optional<std::size_t> ordinal_n_;
};

// B(x,F) = Fx ∪ {x}, sorted.
std::vector<Elem> ball(const Elem& x, const Radius& F);
// B*(x,F) = F⁻¹x ∪ {x}; y ∈ ball(x,F) iff x ∈ star_ball(y,F).
std::vector<Elem> star_ball(const Elem& x, const Radius& F);
std::vector<Elem> ball_of_set(const std::vector<Elem>& xs, const Radius& F);

// F ∪ F⁻¹; the resulting ball equals its star ball everywhere.
Radius symmetrize(const Radius& F);
// γ = F2·F1 ∪ F1 ∪ F2, so that B(B(x,F1),F2) ⊆ B(x,γ) for every x.
Radius compose_radii(const Radius& F1, const Radius& F2);
// Minimal n with F ⊆ F_n; scans at most scan_cap enumeration entries.
std::size_t covering_ordinal_radius(const Radius& F, std::size_t scan_cap);

// Ball structure over an arbitrary ball function; group_ballean wires in the
// group's B(x,F) = Fx ∪ {x} together with symmetrize/compose witnesses.
struct BallStructure {
  std::string name;
  std::function<std::vector<Elem>(const Elem&, const Radius&)> ball_of;
  std::function<Radius(const Radius&)> symmetrize_radius;        // may be empty
  std::function<Radius(const Radius&, const Radius&)> compose;   // may be empty

  static BallStructure group_ballean(GroupPtr g);
};

struct AxiomCheckReport {
  bool passed = true;
  bool connected_on_sample = true;
  std::size_t membership_checks = 0;
  std::size_t star_checks = 0;
  std::size_t composition_checks = 0;
  std::vector<std::string> failures;

  std::string summary() const;
};

// Verifies on the sample: x ∈ B(x,α); the ball/star interchange axioms with
// symmetrized witnesses; composition containment with a compose witness; and
// reports connectivity of the sample. Violations are report content.
AxiomCheckReport ballean_axioms_check(const BallStructure& B,
                                      const std::vector<Elem>& sample,
                                      const std::vector<Radius>& radii);

}  // namespace thinset
