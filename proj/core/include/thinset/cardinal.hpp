#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thinset/errors.hpp"

namespace thinset {

// Ordinal fragment used as aleph indices: finite sums of initial-ordinal
// atoms omega_k (k >= 1), omega-multiples omega*q, and a finite tail, kept
// in canonical strictly descending form. Enough for every cardinal named in
// the partition-number formula; anything else errors loudly.
class OrdinalExpr {
 public:
  struct Term {
    // rank 0: finite units; rank 1: omega; rank r >= 2: omega_{r-1}.
    int rank = 0;
    std::uint64_t coeff = 0;
    bool operator==(const Term&) const = default;
  };

  OrdinalExpr() = default;  // zero

  static OrdinalExpr finite(std::uint64_t n);
  static OrdinalExpr omega(std::uint64_t q = 1);
  static OrdinalExpr omega_k(int k, std::uint64_t coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_successor() const {
    return !terms_.empty() && terms_.back().rank == 0;
  }
  bool is_limit() const { return !is_zero() && !is_successor(); }

  OrdinalExpr successor() const;
  OrdinalExpr predecessor() const;  // error unless successor
  // Appends a term of no-higher rank (ordinal addition inside the fragment).
  OrdinalExpr plus(const Term& t) const;

  const std::vector<Term>& terms() const { return terms_; }
  // Rank of the least term; governs cofinality at limits.
  int tail_rank() const;

  int compare(const OrdinalExpr& o) const;
  bool operator==(const OrdinalExpr& o) const { return compare(o) == 0; }
  bool operator<(const OrdinalExpr& o) const { return compare(o) < 0; }
  bool operator<=(const OrdinalExpr& o) const { return compare(o) <= 0; }

  std::string to_string() const;
  // Accepts "0", "3", "omega", "omega*2+3", "omega1", "omega2*5+omega+1",
  // with optional parentheses around the whole expression.
  static OrdinalExpr parse(std::string_view text);

 private:
  std::vector<Term> terms_;  // strictly descending rank, coeff >= 1
};

// Aleph indexed by a supported ordinal expression.
class Aleph {
 public:
  Aleph() = default;  // aleph 0
  explicit Aleph(OrdinalExpr index) : index_(std::move(index)) {}

  const OrdinalExpr& index() const { return index_; }
  Aleph successor() const { return Aleph(index_.successor()); }

  int compare(const Aleph& o) const { return index_.compare(o.index_); }
  bool operator==(const Aleph& o) const { return compare(o) == 0; }
  bool operator!=(const Aleph& o) const { return compare(o) != 0; }
  bool operator<(const Aleph& o) const { return compare(o) < 0; }
  bool operator<=(const Aleph& o) const { return compare(o) <= 0; }

  std::string to_string() const;  // "aleph 3", "aleph omega", "aleph (omega*2+3)"
  static Aleph parse(std::string_view text);

 private:
  OrdinalExpr index_;
};

enum class CardinalClass { successor, limit };

// aleph 0 counts as limit (non-successor), so the partition-number formula's
// first branch never fires for it.
CardinalClass classify(const Aleph& c);

// Successor alephs and aleph 0 are regular; aleph_alpha for limit alpha has
// cofinality aleph_0 (tail omega*q) or aleph_{k} (tail omega_k atom).
Aleph cofinality(const Aleph& c);

bool is_regular(const Aleph& c);

struct MuResult {
  bool ambiguous = false;
  Aleph value;  // exact value, or the lower of the ambiguity pair
  Aleph upper;  // == value unless ambiguous
  int branch = 0;

  std::string to_string() const;
};

// The four-branch partition-number formula:
//   |G| = gamma^+                        -> gamma
//   |G| limit, kappa < |G| or |G| regular -> |G|
//   |G| singular, kappa = |G|, cf|G| limit -> cf|G|
//   |G| singular, kappa = |G|, cf|G| = gamma^+ -> {gamma, gamma^+}
// Preconditions: aleph 0 <= kappa <= sizeG.
MuResult mu_thin_partition_number(const Aleph& sizeG, const Aleph& kappa);

// G partitions into gamma many (gamma^+,1)-thin pieces iff |G| = gamma^+.
bool theorem4_predicate(const Aleph& gamma, const Aleph& sizeG);

}  // namespace thinset
