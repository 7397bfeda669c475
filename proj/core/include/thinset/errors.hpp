#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace thinset {

// Base class for every error raised by the library. Subclasses exist so
// callers (and tests) can react to the specific failure, not just the text.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

// An element was handed to a group it does not belong to.
class ForeignElementError : public Error {
 public:
  using Error::Error;
};

// Asked for more elements than a finite group has.
class ExhaustedEnumerationError : public Error {
 public:
  using Error::Error;
};

// Spec-text parse failure; carries a character position.
class GrammarError : public Error {
 public:
  GrammarError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// collision_set with g = identity.
class IdentityRadiusError : public Error {
 public:
  using Error::Error;
};

// thin_isolating_subgroup ran past its caps; carries the partial chain sizes.
class CapExceededError : public Error {
 public:
  CapExceededError(const std::string& what, std::vector<std::size_t> chain_sizes)
      : Error(what), chain_sizes_(std::move(chain_sizes)) {}
  const std::vector<std::size_t>& chain_sizes() const { return chain_sizes_; }

 private:
  std::vector<std::size_t> chain_sizes_;
};

class InputNotThinError : public Error {
 public:
  using Error::Error;
};

class ScheduleInfeasibleError : public Error {
 public:
  using Error::Error;
};

// Subgroup chain validation: not a subgroup, not increasing, or not covering.
class ChainError : public Error {
 public:
  using Error::Error;
};

class IndexingCollisionError : public Error {
 public:
  using Error::Error;
};

// A seeded construction failed its genericity audit and must be rejected.
class GenericityError : public Error {
 public:
  using Error::Error;
};

class DegenerateArgumentError : public Error {
 public:
  using Error::Error;
};

class RepeatedIndexError : public Error {
 public:
  using Error::Error;
};

// Ordinal expression outside the supported fragment.
class UnsupportedOrdinalError : public Error {
 public:
  using Error::Error;
};

}  // namespace thinset
