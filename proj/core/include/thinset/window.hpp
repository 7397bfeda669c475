#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "thinset/group.hpp"

namespace thinset {

// A finite, ordered slice of a group on which every check is exact: either
// an enumeration prefix or an explicit element list. The order defines what
// "the first `bound` elements" means in every report.
class Window {
 public:
  static std::shared_ptr<const Window> prefix(GroupPtr g, std::size_t n);
  static std::shared_ptr<const Window> of_elements(GroupPtr g, std::vector<Elem> elems,
                                                   std::string describe);

  const std::vector<Elem>& elements() const { return elems_; }
  const Elem& at(std::size_t i) const { return elems_[i]; }
  std::size_t size() const { return elems_.size(); }
  bool contains(const Elem& x) const { return pos_.count(x) != 0; }
  std::optional<std::size_t> position(const Elem& x) const;
  const GroupPtr& group() const { return group_; }
  const std::string& describe() const { return describe_; }

 private:
  Window(GroupPtr g, std::vector<Elem> elems, std::string describe);

  GroupPtr group_;
  std::vector<Elem> elems_;
  ElemMap<std::size_t> pos_;
  std::string describe_;
};

using WindowPtr = std::shared_ptr<const Window>;

// A target subset given by membership on a window; all checks run against
// the materialized member list, so growing the window can refine but never
// silently change a verdict.
class WindowedSubset {
 public:
  static WindowedSubset from_predicate(WindowPtr w,
                                       const std::function<bool(const Elem&)>& pred,
                                       std::string describe);
  static WindowedSubset of_elements(WindowPtr w, const std::vector<Elem>& elems,
                                    std::string describe);

  const std::vector<Elem>& members() const { return members_; }
  bool contains(const Elem& x) const { return member_set_.count(x) != 0; }
  std::size_t size() const { return members_.size(); }
  const WindowPtr& window() const { return window_; }
  const GroupPtr& group() const { return window_->group(); }
  const std::string& describe() const { return describe_; }

 private:
  WindowedSubset(WindowPtr w, std::vector<Elem> members, std::string describe);

  WindowPtr window_;
  std::vector<Elem> members_;
  ElemSet member_set_;
  std::string describe_;
};

// Subset spec grammar (documented in the CLI):
//   explicit {x1,x2,...}   elements in the group's own element syntax
//   evens                  Z only: multiples of 2
//   powers B               Z only: { B^n : n >= 1 }
//   pairs B^n              Z only: { B^n, B^n + 1 : n >= 1 }
//   cluster B^n k          Z only: { B^n + j : 0 <= j < k, n >= 1 }
//   random P seed S        deterministic pseudo-random membership, P percent
WindowedSubset parse_subset_spec(std::string_view text, WindowPtr w);

}  // namespace thinset
