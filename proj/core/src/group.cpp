#include "thinset/group.hpp"

#include <cctype>

namespace thinset {

std::uint32_t spec_tag(const std::string& spec_text) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : spec_text) {
    h ^= c;
    h *= 16777619u;
  }
  // 0 is reserved for untagged values.
  return h == 0 ? 1u : h;
}

Group::Group(std::string spec, std::optional<std::uint64_t> order)
    : spec_(std::move(spec)), tag_(spec_tag(spec_)), order_(order) {}

const Elem& Group::identity() const {
  std::lock_guard<std::mutex> lock(mu_);
  extend_cache_locked(1);
  if (cache_.empty()) throw Error("group '" + spec_ + "' enumerated no elements");
  return cache_[0];
}

void Group::require_mine(const Elem& x, const char* what) const {
  if (!contains(x)) {
    throw ForeignElementError(std::string(what) + ": element " + x.repr() +
                              " does not belong to " + spec_);
  }
}

Elem Group::multiply(const Elem& x, const Elem& y) const {
  require_mine(x, "multiply");
  require_mine(y, "multiply");
  return mint(mul_impl(x, y));
}

Elem Group::invert(const Elem& x) const {
  require_mine(x, "invert");
  return mint(inv_impl(x));
}

void Group::extend_cache_locked(std::size_t target) const {
  if (!enumerator_ && !exhausted_) enumerator_ = make_enumerator();
  while (cache_.size() < target && !exhausted_) {
    std::optional<Elem> e = enumerator_->next();
    if (!e) {
      exhausted_ = true;
      enumerator_.reset();
      break;
    }
    Elem minted = mint(std::move(*e));
    index_.emplace(minted, cache_.size());
    cache_.push_back(std::move(minted));
  }
}

Elem Group::at(std::size_t i) const {
  std::lock_guard<std::mutex> lock(mu_);
  extend_cache_locked(i + 1);
  if (i >= cache_.size()) {
    throw ExhaustedEnumerationError("enumeration of " + spec_ + " has only " +
                                    std::to_string(cache_.size()) +
                                    " elements, index " + std::to_string(i) +
                                    " requested");
  }
  return cache_[i];
}

std::vector<Elem> Group::prefix(std::size_t n) const {
  std::lock_guard<std::mutex> lock(mu_);
  extend_cache_locked(n);
  if (cache_.size() < n) {
    throw ExhaustedEnumerationError("enumeration of " + spec_ + " has only " +
                                    std::to_string(cache_.size()) +
                                    " elements, prefix of " + std::to_string(n) +
                                    " requested");
  }
  return std::vector<Elem>(cache_.begin(), cache_.begin() + n);
}

std::optional<std::size_t> Group::index_of(const Elem& x,
                                           std::size_t scan_cap) const {
  if (!contains(x)) return std::nullopt;
  std::lock_guard<std::mutex> lock(mu_);
  auto it = index_.find(x);
  if (it != index_.end()) return it->second;
  while (cache_.size() < scan_cap && !exhausted_) {
    extend_cache_locked(cache_.size() + 64);
    it = index_.find(x);
    if (it != index_.end()) return it->second;
  }
  it = index_.find(x);
  if (it != index_.end()) return it->second;
  return std::nullopt;
}

std::string Group::format(const Elem& x) const {
  require_mine(x, "format");
  return format_impl(x);
}

Elem Group::parse(std::string_view text) const {
  // Trim outer whitespace; element grammars own the rest.
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return mint(parse_impl(text.substr(b, e - b)));
}

}  // namespace thinset
