#include "thinset/element.hpp"

namespace thinset {

bool Elem::operator==(const Elem& o) const {
  if (tag_ != o.tag_ || value_.index() != o.value_.index()) return false;
  switch (kind()) {
    case Kind::Int:
      return int_value() == o.int_value();
    case Kind::Rat:
      return rat_value() == o.rat_value();
    case Kind::Seq: {
      const Seq& a = seq();
      const Seq& b = o.seq();
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
      return true;
    }
  }
  return false;
}

bool Elem::operator<(const Elem& o) const {
  if (tag_ != o.tag_) return tag_ < o.tag_;
  if (value_.index() != o.value_.index()) return value_.index() < o.value_.index();
  switch (kind()) {
    case Kind::Int:
      return int_value() < o.int_value();
    case Kind::Rat:
      return rat_value() < o.rat_value();
    case Kind::Seq: {
      const Seq& a = seq();
      const Seq& b = o.seq();
      std::size_t n = a.size() < b.size() ? a.size() : b.size();
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
      }
      return a.size() < b.size();
    }
  }
  return false;
}

std::size_t Elem::hash() const {
  constexpr std::size_t kPrime = 0x100000001b3ULL;
  std::size_t h = 0xcbf29ce484222325ULL ^ (static_cast<std::size_t>(tag_) << 1);
  switch (kind()) {
    case Kind::Int:
      h = (h ^ static_cast<std::size_t>(int_value())) * kPrime;
      h ^= 0x2545f4914f6cdd1dULL;
      break;
    case Kind::Rat:
      h = (h ^ rat_value().hash()) * kPrime;
      break;
    case Kind::Seq:
      h = (h ^ (seq().size() + 0x517cc1b727220a95ULL)) * kPrime;
      for (const Elem& e : seq()) h = (h ^ e.hash()) * kPrime;
      break;
  }
  return h;
}

std::string Elem::repr() const {
  switch (kind()) {
    case Kind::Int:
      return std::to_string(int_value());
    case Kind::Rat:
      return rat_value().to_string();
    case Kind::Seq: {
      std::string out = "(";
      for (std::size_t i = 0; i < seq().size(); ++i) {
        if (i) out += ' ';
        out += seq()[i].repr();
      }
      out += ')';
      return out;
    }
  }
  return "?";
}

}  // namespace thinset
