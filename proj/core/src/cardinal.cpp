#include "thinset/cardinal.hpp"

#include <cctype>

namespace thinset {

OrdinalExpr OrdinalExpr::finite(std::uint64_t n) {
  OrdinalExpr e;
  if (n > 0) e.terms_.push_back({0, n});
  return e;
}

OrdinalExpr OrdinalExpr::omega(std::uint64_t q) {
  if (q == 0) throw UnsupportedOrdinalError("omega coefficient must be >= 1");
  OrdinalExpr e;
  e.terms_.push_back({1, q});
  return e;
}

OrdinalExpr OrdinalExpr::omega_k(int k, std::uint64_t coeff) {
  if (k < 1) throw UnsupportedOrdinalError("omega_k atoms need k >= 1");
  if (coeff == 0) throw UnsupportedOrdinalError("omega_k coefficient must be >= 1");
  OrdinalExpr e;
  e.terms_.push_back({k + 1, coeff});
  return e;
}

OrdinalExpr OrdinalExpr::plus(const Term& t) const {
  if (t.coeff == 0) return *this;
  OrdinalExpr e = *this;
  if (!e.terms_.empty()) {
    if (e.terms_.back().rank < t.rank)
      throw UnsupportedOrdinalError(
          "ordinal terms must be appended in descending rank");
    if (e.terms_.back().rank == t.rank) {
      e.terms_.back().coeff += t.coeff;
      return e;
    }
  }
  e.terms_.push_back(t);
  return e;
}

OrdinalExpr OrdinalExpr::successor() const { return plus({0, 1}); }

OrdinalExpr OrdinalExpr::predecessor() const {
  if (!is_successor())
    throw UnsupportedOrdinalError("predecessor of a non-successor ordinal");
  OrdinalExpr e = *this;
  if (--e.terms_.back().coeff == 0) e.terms_.pop_back();
  return e;
}

int OrdinalExpr::tail_rank() const {
  if (terms_.empty()) throw UnsupportedOrdinalError("tail of the zero ordinal");
  return terms_.back().rank;
}

int OrdinalExpr::compare(const OrdinalExpr& o) const {
  for (std::size_t i = 0; i < std::min(terms_.size(), o.terms_.size()); ++i) {
    if (terms_[i].rank != o.terms_[i].rank)
      return terms_[i].rank < o.terms_[i].rank ? -1 : 1;
    if (terms_[i].coeff != o.terms_[i].coeff)
      return terms_[i].coeff < o.terms_[i].coeff ? -1 : 1;
  }
  if (terms_.size() != o.terms_.size())
    return terms_.size() < o.terms_.size() ? -1 : 1;
  return 0;
}

std::string OrdinalExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += '+';
    const Term& t = terms_[i];
    if (t.rank == 0) {
      out += std::to_string(t.coeff);
    } else {
      out += t.rank == 1 ? "omega" : "omega" + std::to_string(t.rank - 1);
      if (t.coeff > 1) out += "*" + std::to_string(t.coeff);
    }
  }
  return out;
}

namespace {

struct OrdinalParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  std::uint64_t number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw GrammarError("expected a number in ordinal", pos);
    return std::stoull(std::string(text.substr(start, pos - start)));
  }

  OrdinalExpr parse() {
    skip_ws();
    bool parens = peek('(');
    if (parens) ++pos;
    OrdinalExpr e = sum();
    if (parens) {
      if (!peek(')')) throw GrammarError("missing ')' in ordinal", pos);
      ++pos;
    }
    skip_ws();
    if (pos != text.size()) throw GrammarError("trailing input after ordinal", pos);
    return e;
  }

  OrdinalExpr sum() {
    OrdinalExpr e = term(OrdinalExpr{});
    while (peek('+')) {
      ++pos;
      e = term(e);
    }
    return e;
  }

  OrdinalExpr term(const OrdinalExpr& acc) {
    skip_ws();
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      return acc.plus({0, number()});
    }
    // omega or omegaK
    static constexpr std::string_view kOmega = "omega";
    if (text.substr(pos, kOmega.size()) != kOmega)
      throw GrammarError("expected 'omega', 'omegaK', or a number", pos);
    pos += kOmega.size();
    int rank = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::uint64_t k = number();
      if (k < 1 || k > 1000) throw UnsupportedOrdinalError("omega_k atom out of range");
      rank = static_cast<int>(k) + 1;
    }
    std::uint64_t coeff = 1;
    if (peek('*')) {
      ++pos;
      coeff = number();
      if (coeff == 0) throw UnsupportedOrdinalError("coefficient must be >= 1");
    }
    return acc.plus({rank, coeff});
  }
};

}  // namespace

OrdinalExpr OrdinalExpr::parse(std::string_view text) {
  OrdinalParser p{text};
  return p.parse();
}

std::string Aleph::to_string() const {
  std::string idx = index_.to_string();
  bool simple = index_.terms().size() <= 1 &&
                (index_.is_zero() || index_.terms()[0].coeff == 1 ||
                 index_.terms()[0].rank == 0);
  return simple ? "aleph " + idx : "aleph (" + idx + ")";
}

Aleph Aleph::parse(std::string_view text) {
  std::size_t b = 0;
  while (b < text.size() && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  static constexpr std::string_view kAleph = "aleph";
  if (text.substr(b, kAleph.size()) != kAleph)
    throw GrammarError("cardinal literal must start with 'aleph'", b);
  return Aleph(OrdinalExpr::parse(text.substr(b + kAleph.size())));
}

CardinalClass classify(const Aleph& c) {
  return c.index().is_successor() ? CardinalClass::successor : CardinalClass::limit;
}

Aleph cofinality(const Aleph& c) {
  const OrdinalExpr& idx = c.index();
  if (idx.is_zero() || idx.is_successor()) return c;  // regular
  int rank = idx.tail_rank();
  if (rank == 1) return Aleph(OrdinalExpr::finite(0));  // cf = omega
  // tail atom omega_{rank-1}: regular initial ordinal.
  return Aleph(OrdinalExpr::finite(static_cast<std::uint64_t>(rank - 1)));
}

bool is_regular(const Aleph& c) { return cofinality(c) == c; }

std::string MuResult::to_string() const {
  if (!ambiguous) return value.to_string();
  return "{" + value.to_string() + ", " + upper.to_string() + "}";
}

MuResult mu_thin_partition_number(const Aleph& sizeG, const Aleph& kappa) {
  Aleph aleph0;
  if (!(aleph0 <= kappa) || !(kappa <= sizeG))
    throw PreconditionError("mu needs aleph 0 <= kappa <= |G|");

  MuResult result;
  if (classify(sizeG) == CardinalClass::successor) {
    result.branch = 1;
    result.value = Aleph(sizeG.index().predecessor());
    result.upper = result.value;
    return result;
  }
  if (kappa < sizeG || is_regular(sizeG)) {
    result.branch = 2;
    result.value = sizeG;
    result.upper = sizeG;
    return result;
  }
  Aleph cf = cofinality(sizeG);
  if (classify(cf) == CardinalClass::limit) {
    result.branch = 3;
    result.value = cf;
    result.upper = cf;
    return result;
  }
  result.branch = 4;
  result.ambiguous = true;
  result.value = Aleph(cf.index().predecessor());
  result.upper = cf;
  return result;
}

bool theorem4_predicate(const Aleph& gamma, const Aleph& sizeG) {
  if (!(gamma <= sizeG))
    throw PreconditionError("theorem4_predicate needs |G| >= gamma");
  return sizeG == gamma.successor();
}

}  // namespace thinset
