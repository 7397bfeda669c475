#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thinset/element.hpp"
#include "thinset/errors.hpp"

namespace thinset {

// A computable group: identity, multiply, invert, and a fixed injective
// enumeration g_0, g_1, ... with g_0 the identity. Enumerations are pinned
// per instance (documented with each constructor) so that ordinal radii and
// everything downstream is reproducible.
//
// Immutable after construction; the enumeration cache is guarded, so all
// operations are safe from concurrent workers.
class Group {
 public:
  virtual ~Group() = default;

  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;

  const std::string& spec_text() const { return spec_; }
  std::uint32_t tag() const { return tag_; }

  // Total number of elements, when finite.
  std::optional<std::uint64_t> order() const { return order_; }
  bool is_finite() const { return order_.has_value(); }

  const Elem& identity() const;
  bool is_identity(const Elem& x) const { return x == identity(); }

  Elem multiply(const Elem& x, const Elem& y) const;
  Elem invert(const Elem& x) const;

  // i-th element of the fixed enumeration; throws ExhaustedEnumerationError
  // past the order of a finite group.
  Elem at(std::size_t i) const;
  std::vector<Elem> prefix(std::size_t n) const;

  // Enumeration index of x, scanning at most scan_cap elements.
  std::optional<std::size_t> index_of(const Elem& x, std::size_t scan_cap) const;

  std::string format(const Elem& x) const;
  Elem parse(std::string_view text) const;

  bool contains(const Elem& x) const {
    return x.tag() == tag_ && valid_impl(x);
  }
  void require_mine(const Elem& x, const char* what) const;

  bool same_group(const Group& o) const { return tag_ == o.tag_; }

 protected:
  // Incremental enumeration source; next() yields elements in order and
  // returns nullopt when a finite group is exhausted. Tagging is done by the
  // base class.
  class Enumerator {
   public:
    virtual ~Enumerator() = default;
    virtual std::optional<Elem> next() = 0;
  };

  Group(std::string spec, std::optional<std::uint64_t> order);

  Elem mint(Elem e) const {
    e.set_tag(tag_);
    return e;
  }

  virtual Elem mul_impl(const Elem& x, const Elem& y) const = 0;
  virtual Elem inv_impl(const Elem& x) const = 0;
  virtual bool valid_impl(const Elem& x) const = 0;
  virtual std::string format_impl(const Elem& x) const = 0;
  virtual Elem parse_impl(std::string_view text) const = 0;
  virtual std::unique_ptr<Enumerator> make_enumerator() const = 0;

 private:
  void extend_cache_locked(std::size_t target) const;

  std::string spec_;
  std::uint32_t tag_;
  std::optional<std::uint64_t> order_;

  mutable std::mutex mu_;
  mutable std::vector<Elem> cache_;
  mutable ElemMap<std::size_t> index_;
  mutable std::unique_ptr<Enumerator> enumerator_;
  mutable bool exhausted_ = false;
};

using GroupPtr = std::shared_ptr<const Group>;

// First n elements of the fixed enumeration; element 0 is the identity.
inline std::vector<Elem> enumerate_prefix(const Group& g, std::size_t n) {
  return g.prefix(n);
}

std::uint32_t spec_tag(const std::string& spec_text);

}  // namespace thinset
