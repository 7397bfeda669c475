#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "thinset/rational.hpp"

namespace thinset {

// Canonical group element value. Every shipped group encodes its elements
// into this little recursive shape:
//   Int — Z, Z_n, and Q^1/Z^1 scalars
//   Rat — Q^1 scalars
//   Seq — tuples (Z^d, S_n one-line, free words, finite-support sequences,
//         product pairs), possibly nested.
// The tag identifies the minting group, so foreign elements are detected
// exactly rather than by accidental shape overlap.
class Elem {
 public:
  using Seq = std::vector<Elem>;

  Elem() : value_(std::int64_t{0}) {}
  explicit Elem(std::int64_t v) : value_(v) {}
  explicit Elem(Rational v) : value_(std::move(v)) {}
  explicit Elem(Seq v) : value_(std::move(v)) {}

  enum class Kind { Int, Rat, Seq };

  Kind kind() const { return static_cast<Kind>(value_.index()); }
  bool is_int() const { return kind() == Kind::Int; }
  bool is_rat() const { return kind() == Kind::Rat; }
  bool is_seq() const { return kind() == Kind::Seq; }

  std::int64_t int_value() const { return std::get<std::int64_t>(value_); }
  const Rational& rat_value() const { return std::get<Rational>(value_); }
  const Seq& seq() const { return std::get<Seq>(value_); }

  std::uint32_t tag() const { return tag_; }
  void set_tag(std::uint32_t t) { tag_ = t; }
  Elem with_tag(std::uint32_t t) const {
    Elem e = *this;
    e.tag_ = t;
    return e;
  }

  bool operator==(const Elem& o) const;
  bool operator!=(const Elem& o) const { return !(*this == o); }
  bool operator<(const Elem& o) const;

  std::size_t hash() const;

  // Structural debug form, e.g. "(1 2)" or "3/4"; groups own the user-facing
  // format.
  std::string repr() const;

 private:
  std::variant<std::int64_t, Rational, Seq> value_;
  std::uint32_t tag_ = 0;
};

struct ElemHash {
  std::size_t operator()(const Elem& e) const { return e.hash(); }
};

using ElemSet = std::unordered_set<Elem, ElemHash>;
template <typename T>
using ElemMap = std::unordered_map<Elem, T, ElemHash>;

using ElemPair = std::pair<Elem, Elem>;

struct ElemPairHash {
  std::size_t operator()(const ElemPair& p) const {
    return p.first.hash() * 0x9e3779b97f4a7c15ULL ^ p.second.hash();
  }
};

}  // namespace thinset
