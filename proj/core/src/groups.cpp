#include "thinset/groups.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace thinset {
namespace {

std::int64_t parse_int_token(std::string_view text) {
  std::int64_t v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw GrammarError("bad integer literal '" + std::string(text) + "'", 0);
  return v;
}

// Splits "a,b,c" at top level, respecting (), [] nesting.
std::vector<std::string_view> split_top_level(std::string_view body, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(body.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(body.substr(start));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// ---------------------------------------------------------------------------
// Z^d
// ---------------------------------------------------------------------------

class IntegerLattice final : public Group {
 public:
  explicit IntegerLattice(int d)
      : Group("Z^" + std::to_string(d), std::nullopt), d_(d) {}

  Elem from_coords(const std::vector<std::int64_t>& v) const {
    if (static_cast<int>(v.size()) != d_) throw Error("Z^d coordinate arity mismatch");
    if (d_ == 1) return mint(Elem(v[0]));
    Elem::Seq s;
    s.reserve(v.size());
    for (auto c : v) s.emplace_back(c);
    return mint(Elem(std::move(s)));
  }

 protected:
  Elem mul_impl(const Elem& x, const Elem& y) const override {
    if (d_ == 1) return Elem(x.int_value() + y.int_value());
    Elem::Seq s;
    s.reserve(d_);
    for (int i = 0; i < d_; ++i)
      s.emplace_back(x.seq()[i].int_value() + y.seq()[i].int_value());
    return Elem(std::move(s));
  }

  Elem inv_impl(const Elem& x) const override {
    if (d_ == 1) return Elem(-x.int_value());
    Elem::Seq s;
    s.reserve(d_);
    for (int i = 0; i < d_; ++i) s.emplace_back(-x.seq()[i].int_value());
    return Elem(std::move(s));
  }

  bool valid_impl(const Elem& x) const override {
    if (d_ == 1) return x.is_int();
    if (!x.is_seq() || static_cast<int>(x.seq().size()) != d_) return false;
    for (const Elem& c : x.seq())
      if (!c.is_int() || c.tag() != 0) return false;
    return true;
  }

  std::string format_impl(const Elem& x) const override {
    if (d_ == 1) return std::to_string(x.int_value());
    std::string out = "(";
    for (int i = 0; i < d_; ++i) {
      if (i) out += ',';
      out += std::to_string(x.seq()[i].int_value());
    }
    return out + ")";
  }

  Elem parse_impl(std::string_view text) const override {
    if (d_ == 1) return Elem(parse_int_token(text));
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
      throw GrammarError("Z^d element must look like (1,2)", 0);
    auto parts = split_top_level(text.substr(1, text.size() - 2), ',');
    if (static_cast<int>(parts.size()) != d_)
      throw GrammarError("Z^d element arity mismatch", 0);
    Elem::Seq s;
    for (auto p : parts) s.emplace_back(parse_int_token(trim(p)));
    return Elem(std::move(s));
  }

  std::unique_ptr<Enumerator> make_enumerator() const override {
    if (d_ == 1) return std::make_unique<Spiral>();
    return std::make_unique<Shells>(d_);
  }

 private:
  // 0, 1, -1, 2, -2, ...
  struct Spiral final : Enumerator {
    std::int64_t next_value = 0;
    std::optional<Elem> next() override {
      std::int64_t v = next_value;
      next_value = next_value > 0 ? -next_value : -next_value + 1;
      return Elem(v);
    }
  };

  // l-infinity shells; lexicographic within a shell.
  struct Shells final : Enumerator {
    explicit Shells(int d) : d(d) {}
    int d;
    std::int64_t r = 0;
    std::vector<std::int64_t> cur;
    bool shell_open = false;

    std::optional<Elem> next() {
      while (true) {
        if (!shell_open) {
          cur.assign(d, -r);
          shell_open = true;
        } else if (!advance()) {
          ++r;
          shell_open = false;
          continue;
        }
        std::int64_t norm = 0;
        for (auto c : cur) norm = std::max(norm, c < 0 ? -c : c);
        if (norm == r) {
          Elem::Seq s;
          s.reserve(d);
          for (auto c : cur) s.emplace_back(c);
          return d == 1 ? Elem(cur[0]) : Elem(std::move(s));
        }
      }
    }

    bool advance() {
      for (int i = d - 1; i >= 0; --i) {
        if (cur[i] < r) {
          ++cur[i];
          for (int j = i + 1; j < d; ++j) cur[j] = -r;
          return true;
        }
      }
      return false;
    }
  };

  int d_;
};

// ---------------------------------------------------------------------------
// Zmod n
// ---------------------------------------------------------------------------

class CyclicGroup final : public Group {
 public:
  explicit CyclicGroup(std::uint64_t n)
      : Group("Zmod " + std::to_string(n), n), n_(static_cast<std::int64_t>(n)) {}

 protected:
  Elem mul_impl(const Elem& x, const Elem& y) const override {
    return Elem((x.int_value() + y.int_value()) % n_);
  }
  Elem inv_impl(const Elem& x) const override {
    return Elem((n_ - x.int_value()) % n_);
  }
  bool valid_impl(const Elem& x) const override {
    return x.is_int() && x.int_value() >= 0 && x.int_value() < n_;
  }
  std::string format_impl(const Elem& x) const override {
    return std::to_string(x.int_value());
  }
  Elem parse_impl(std::string_view text) const override {
    std::int64_t v = parse_int_token(text);
    return Elem(((v % n_) + n_) % n_);
  }
  std::unique_ptr<Enumerator> make_enumerator() const override {
    struct Counter final : Enumerator {
      std::int64_t n, i = 0;
      explicit Counter(std::int64_t n) : n(n) {}
      std::optional<Elem> next() override {
        if (i >= n) return std::nullopt;
        return Elem(i++);
      }
    };
    return std::make_unique<Counter>(n_);
  }

 private:
  std::int64_t n_;
};

// ---------------------------------------------------------------------------
// Sym n (one-line images, lexicographic enumeration)
// ---------------------------------------------------------------------------

std::uint64_t factorial_checked(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

class SymmetricGroup final : public Group {
 public:
  explicit SymmetricGroup(int n)
      : Group("Sym " + std::to_string(n), factorial_checked(n)), n_(n) {}

 protected:
  // (xy)(i) = x(y(i))
  Elem mul_impl(const Elem& x, const Elem& y) const override {
    Elem::Seq s;
    s.reserve(n_);
    for (int i = 0; i < n_; ++i)
      s.push_back(x.seq()[static_cast<std::size_t>(y.seq()[i].int_value())]);
    return Elem(std::move(s));
  }

  Elem inv_impl(const Elem& x) const override {
    Elem::Seq s(static_cast<std::size_t>(n_), Elem(std::int64_t{0}));
    for (int i = 0; i < n_; ++i)
      s[static_cast<std::size_t>(x.seq()[i].int_value())] = Elem(static_cast<std::int64_t>(i));
    return Elem(std::move(s));
  }

  bool valid_impl(const Elem& x) const override {
    if (!x.is_seq() || static_cast<int>(x.seq().size()) != n_) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (const Elem& c : x.seq()) {
      if (!c.is_int() || c.tag() != 0) return false;
      std::int64_t v = c.int_value();
      if (v < 0 || v >= n_ || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
  }

  // One-line form, 1-based: "(2,1,3)".
  std::string format_impl(const Elem& x) const override {
    std::string out = "(";
    for (int i = 0; i < n_; ++i) {
      if (i) out += ',';
      out += std::to_string(x.seq()[i].int_value() + 1);
    }
    return out + ")";
  }

  Elem parse_impl(std::string_view text) const override {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
      throw GrammarError("permutation must look like (2,1,3)", 0);
    auto parts = split_top_level(text.substr(1, text.size() - 2), ',');
    if (static_cast<int>(parts.size()) != n_)
      throw GrammarError("permutation arity mismatch", 0);
    Elem::Seq s;
    for (auto p : parts) s.emplace_back(parse_int_token(trim(p)) - 1);
    Elem e{std::move(s)};
    if (!valid_impl(e)) throw GrammarError("not a permutation", 0);
    return e;
  }

  std::unique_ptr<Enumerator> make_enumerator() const override {
    struct Lex final : Enumerator {
      std::vector<std::int64_t> cur;
      bool done = false, first = true;
      explicit Lex(int n) {
        cur.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) cur[static_cast<std::size_t>(i)] = i;
      }
      std::optional<Elem> next() override {
        if (done) return std::nullopt;
        if (!first && !std::next_permutation(cur.begin(), cur.end())) {
          done = true;
          return std::nullopt;
        }
        first = false;
        Elem::Seq s;
        s.reserve(cur.size());
        for (auto v : cur) s.emplace_back(v);
        return Elem(std::move(s));
      }
    };
    return std::make_unique<Lex>(n_);
  }

 private:
  int n_;
};

// ---------------------------------------------------------------------------
// Free k (reduced words; letters +-1..+-k; a < a^-1 < b < b^-1 ...)
// ---------------------------------------------------------------------------

class FreeGroup final : public Group {
 public:
  explicit FreeGroup(int k)
      : Group("Free " + std::to_string(k), std::nullopt), k_(k) {}

 protected:
  Elem mul_impl(const Elem& x, const Elem& y) const override {
    std::vector<std::int64_t> w = letters(x);
    for (const Elem& c : y.seq()) {
      std::int64_t l = c.int_value();
      if (!w.empty() && w.back() == -l) {
        w.pop_back();
      } else {
        w.push_back(l);
      }
    }
    return from_letters(w);
  }

  Elem inv_impl(const Elem& x) const override {
    std::vector<std::int64_t> w = letters(x);
    std::reverse(w.begin(), w.end());
    for (auto& l : w) l = -l;
    return from_letters(w);
  }

  bool valid_impl(const Elem& x) const override {
    if (!x.is_seq()) return false;
    std::int64_t prev = 0;
    for (const Elem& c : x.seq()) {
      if (!c.is_int() || c.tag() != 0) return false;
      std::int64_t l = c.int_value();
      if (l == 0 || l > k_ || l < -k_) return false;
      if (prev != 0 && l == -prev) return false;  // not reduced
      prev = l;
    }
    return true;
  }

  // Lowercase = generator, uppercase = inverse; empty word prints "e".
  std::string format_impl(const Elem& x) const override {
    if (x.seq().empty()) return "e";
    std::string out;
    for (const Elem& c : x.seq()) {
      std::int64_t l = c.int_value();
      out += static_cast<char>((l > 0 ? 'a' + l : 'A' - l) - 1);
    }
    return out;
  }

  Elem parse_impl(std::string_view text) const override {
    if (text == "e") return Elem(Elem::Seq{});
    std::vector<std::int64_t> w;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      std::int64_t l;
      if (c >= 'a' && c < 'a' + k_) {
        l = c - 'a' + 1;
      } else if (c >= 'A' && c < 'A' + k_) {
        l = -(c - 'A' + 1);
      } else {
        throw GrammarError("bad free-group letter '" + std::string(1, c) + "'", i);
      }
      if (!w.empty() && w.back() == -l) {
        w.pop_back();
      } else {
        w.push_back(l);
      }
    }
    return from_letters(w);
  }

  std::unique_ptr<Enumerator> make_enumerator() const override {
    struct ByLength final : Enumerator {
      int k;
      std::size_t length = 0;
      std::vector<std::vector<std::int64_t>> batch;
      std::size_t pos = 0;
      explicit ByLength(int k) : k(k) { batch.push_back({}); }

      void fill(std::size_t target_len) {
        batch.clear();
        pos = 0;
        std::vector<std::int64_t> cur;
        gen(target_len, cur);
      }
      void gen(std::size_t target_len, std::vector<std::int64_t>& cur) {
        if (cur.size() == target_len) {
          batch.push_back(cur);
          return;
        }
        for (int rank = 0; rank < 2 * k; ++rank) {
          std::int64_t l = rank / 2 + 1;
          if (rank % 2) l = -l;
          if (!cur.empty() && cur.back() == -l) continue;
          cur.push_back(l);
          gen(target_len, cur);
          cur.pop_back();
        }
      }
      std::optional<Elem> next() override {
        if (pos >= batch.size()) {
          ++length;
          fill(length);
        }
        const auto& w = batch[pos++];
        Elem::Seq s;
        s.reserve(w.size());
        for (auto l : w) s.emplace_back(l);
        return Elem(std::move(s));
      }
    };
    return std::make_unique<ByLength>(k_);
  }

 private:
  static std::vector<std::int64_t> letters(const Elem& x) {
    std::vector<std::int64_t> w;
    w.reserve(x.seq().size());
    for (const Elem& c : x.seq()) w.push_back(c.int_value());
    return w;
  }
  static Elem from_letters(const std::vector<std::int64_t>& w) {
    Elem::Seq s;
    s.reserve(w.size());
    for (auto l : w) s.emplace_back(l);
    return Elem(std::move(s));
  }

  int k_;
};

// ---------------------------------------------------------------------------
// DirectSum[Zmod c; omega] and DirectSum[Zmod c; d]
// ---------------------------------------------------------------------------

std::optional<std::uint64_t> pow_checked(std::uint64_t base, int exp) {
  std::uint64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > UINT64_MAX / base) return std::nullopt;
    v *= base;
  }
  return v;
}

class DirectSumGroup final : public Group {
 public:
  DirectSumGroup(std::uint64_t c, std::optional<int> arity)
      : Group("DirectSum[Zmod " + std::to_string(c) + "; " +
                  (arity ? std::to_string(*arity) : std::string("omega")) + "]",
              arity ? pow_checked(c, *arity) : std::nullopt),
        c_(static_cast<std::int64_t>(c)),
        arity_(arity) {
    if (arity && !order())
      throw Error("DirectSum order overflows; use a smaller arity");
  }

 protected:
  Elem mul_impl(const Elem& x, const Elem& y) const override {
    const Elem::Seq& a = x.seq();
    const Elem::Seq& b = y.seq();
    std::size_t n = std::max(a.size(), b.size());
    Elem::Seq s;
    s.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t va = i < a.size() ? a[i].int_value() : 0;
      std::int64_t vb = i < b.size() ? b[i].int_value() : 0;
      s.emplace_back((va + vb) % c_);
    }
    trim_zeros(s);
    return Elem(std::move(s));
  }

  Elem inv_impl(const Elem& x) const override {
    Elem::Seq s;
    s.reserve(x.seq().size());
    for (const Elem& c : x.seq()) s.emplace_back((c_ - c.int_value()) % c_);
    trim_zeros(s);
    return Elem(std::move(s));
  }

  bool valid_impl(const Elem& x) const override {
    if (!x.is_seq()) return false;
    if (arity_ && static_cast<int>(x.seq().size()) > *arity_) return false;
    for (const Elem& c : x.seq()) {
      if (!c.is_int() || c.tag() != 0) return false;
      if (c.int_value() < 0 || c.int_value() >= c_) return false;
    }
    return x.seq().empty() || x.seq().back().int_value() != 0;
  }

  std::string format_impl(const Elem& x) const override {
    std::string out = "[";
    for (std::size_t i = 0; i < x.seq().size(); ++i) {
      if (i) out += ',';
      out += std::to_string(x.seq()[i].int_value());
    }
    return out + "]";
  }

  Elem parse_impl(std::string_view text) const override {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
      throw GrammarError("direct-sum element must look like [1,0,1]", 0);
    std::string_view body = trim(text.substr(1, text.size() - 2));
    Elem::Seq s;
    if (!body.empty()) {
      for (auto p : split_top_level(body, ',')) {
        std::int64_t v = parse_int_token(trim(p));
        s.emplace_back(((v % c_) + c_) % c_);
      }
    }
    trim_zeros(s);
    Elem e{std::move(s)};
    if (!valid_impl(e)) throw GrammarError("direct-sum element out of range", 0);
    return e;
  }

  std::unique_ptr<Enumerator> make_enumerator() const override {
    // Base-c digit expansion of the index; prefixes of size c^k are exactly
    // the coordinate subgroups.
    struct Digits final : Enumerator {
      std::int64_t c;
      std::optional<std::uint64_t> total;
      std::uint64_t i = 0;
      Digits(std::int64_t c, std::optional<std::uint64_t> total) : c(c), total(total) {}
      std::optional<Elem> next() override {
        if (total && i >= *total) return std::nullopt;
        std::uint64_t v = i++;
        Elem::Seq s;
        while (v > 0) {
          s.emplace_back(static_cast<std::int64_t>(v % static_cast<std::uint64_t>(c)));
          v /= static_cast<std::uint64_t>(c);
        }
        return Elem(std::move(s));
      }
    };
    return std::make_unique<Digits>(c_, order());
  }

 private:
  static void trim_zeros(Elem::Seq& s) {
    while (!s.empty() && s.back().int_value() == 0) s.pop_back();
  }

  std::int64_t c_;
  std::optional<int> arity_;
};

// ---------------------------------------------------------------------------
// Q^d
// ---------------------------------------------------------------------------

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

// Scalar enumeration: 0, then per height h >= 1 all reduced p/q with
// max(|p|, q) = h sorted by (|p|, q), positive before negative.
void append_scalars_of_height(std::uint64_t h, std::vector<Rational>& out) {
  if (h == 0) {
    out.emplace_back(0);
    return;
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> frac;  // (|p|, q)
  auto H = static_cast<std::int64_t>(h);
  for (std::int64_t p = 1; p <= H; ++p) {
    for (std::int64_t q = 1; q <= H; ++q) {
      if (std::max(p, q) != H) continue;
      if (gcd64(p, q) != 1) continue;
      frac.emplace_back(p, q);
    }
  }
  std::sort(frac.begin(), frac.end());
  for (auto [p, q] : frac) {
    out.emplace_back(p, q);
    out.emplace_back(-p, q);
  }
}

class RationalVectorGroup final : public Group {
 public:
  explicit RationalVectorGroup(int d)
      : Group("Q^" + std::to_string(d), std::nullopt), d_(d) {}

  Elem from_coords(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != d_) throw Error("Q^d coordinate arity mismatch");
    if (d_ == 1) return mint(Elem(v[0]));
    Elem::Seq s;
    s.reserve(v.size());
    for (const auto& c : v) s.emplace_back(c);
    return mint(Elem(std::move(s)));
  }

  std::vector<Rational> coords(const Elem& x) const {
    std::vector<Rational> v;
    if (d_ == 1) {
      v.push_back(x.rat_value());
    } else {
      for (const Elem& c : x.seq()) v.push_back(c.rat_value());
    }
    return v;
  }

 protected:
  Elem mul_impl(const Elem& x, const Elem& y) const override {
    if (d_ == 1) return Elem(x.rat_value() + y.rat_value());
    Elem::Seq s;
    s.reserve(d_);
    for (int i = 0; i < d_; ++i)
      s.emplace_back(x.seq()[i].rat_value() + y.seq()[i].rat_value());
    return Elem(std::move(s));
  }

  Elem inv_impl(const Elem& x) const override {
    if (d_ == 1) return Elem(-x.rat_value());
    Elem::Seq s;
    s.reserve(d_);
    for (int i = 0; i < d_; ++i) s.emplace_back(-x.seq()[i].rat_value());
    return Elem(std::move(s));
  }

  bool valid_impl(const Elem& x) const override {
    if (d_ == 1) return x.is_rat();
    if (!x.is_seq() || static_cast<int>(x.seq().size()) != d_) return false;
    for (const Elem& c : x.seq())
      if (!c.is_rat() || c.tag() != 0) return false;
    return true;
  }

  std::string format_impl(const Elem& x) const override {
    if (d_ == 1) return x.rat_value().to_string();
    std::string out = "(";
    for (int i = 0; i < d_; ++i) {
      if (i) out += ',';
      out += x.seq()[i].rat_value().to_string();
    }
    return out + ")";
  }

  Elem parse_impl(std::string_view text) const override {
    if (d_ == 1) return Elem(Rational::parse(std::string(text)));
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
      throw GrammarError("Q^d element must look like (1/2,-3)", 0);
    auto parts = split_top_level(text.substr(1, text.size() - 2), ',');
    if (static_cast<int>(parts.size()) != d_)
      throw GrammarError("Q^d element arity mismatch", 0);
    Elem::Seq s;
    for (auto p : parts) s.emplace_back(Rational::parse(std::string(trim(p))));
    return Elem(std::move(s));
  }

  std::unique_ptr<Enumerator> make_enumerator() const override {
    struct HeightShells final : Enumerator {
      int d;
      std::uint64_t shell = 0;
      std::vector<Rational> scalars;      // all scalars with height <= shell
      std::size_t prev_count = 0;         // scalars with height < shell
      std::vector<std::size_t> idx;
      bool shell_open = false;
      explicit HeightShells(int d) : d(d) {}

      std::optional<Elem> next() override {
        while (true) {
          if (!shell_open) {
            if (shell == 0) {
              scalars.clear();
              append_scalars_of_height(0, scalars);
              prev_count = 0;
            } else {
              prev_count = scalars.size();
              append_scalars_of_height(shell, scalars);
            }
            idx.assign(static_cast<std::size_t>(d), 0);
            shell_open = true;
          } else if (!advance()) {
            ++shell;
            shell_open = false;
            continue;
          }
          bool touches = false;
          for (auto i : idx)
            if (i >= prev_count) touches = true;
          if (shell == 0) touches = true;
          if (!touches) continue;
          if (d == 1) return Elem(scalars[idx[0]]);
          Elem::Seq s;
          s.reserve(static_cast<std::size_t>(d));
          for (auto i : idx) s.emplace_back(scalars[i]);
          return Elem(std::move(s));
        }
      }

      bool advance() {
        for (int i = d - 1; i >= 0; --i) {
          if (idx[static_cast<std::size_t>(i)] + 1 < scalars.size()) {
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < d; ++j) idx[static_cast<std::size_t>(j)] = 0;
            return true;
          }
        }
        return false;
      }
    };
    return std::make_unique<HeightShells>(d_);
  }

 private:
  int d_;
};

// ---------------------------------------------------------------------------
// Product(A, B)
// ---------------------------------------------------------------------------

class ProductGroup final : public Group {
 public:
  ProductGroup(GroupPtr a, GroupPtr b)
      : Group("Product(" + a->spec_text() + ", " + b->spec_text() + ")",
              combined_order(*a, *b)),
        a_(std::move(a)),
        b_(std::move(b)) {}

  const GroupPtr& left() const { return a_; }
  const GroupPtr& right() const { return b_; }

 protected:
  Elem mul_impl(const Elem& x, const Elem& y) const override {
    Elem::Seq s;
    s.reserve(2);
    s.push_back(a_->multiply(x.seq()[0], y.seq()[0]));
    s.push_back(b_->multiply(x.seq()[1], y.seq()[1]));
    return Elem(std::move(s));
  }

  Elem inv_impl(const Elem& x) const override {
    Elem::Seq s;
    s.reserve(2);
    s.push_back(a_->invert(x.seq()[0]));
    s.push_back(b_->invert(x.seq()[1]));
    return Elem(std::move(s));
  }

  bool valid_impl(const Elem& x) const override {
    return x.is_seq() && x.seq().size() == 2 && a_->contains(x.seq()[0]) &&
           b_->contains(x.seq()[1]);
  }

  std::string format_impl(const Elem& x) const override {
    return "(" + a_->format(x.seq()[0]) + " ; " + b_->format(x.seq()[1]) + ")";
  }

  Elem parse_impl(std::string_view text) const override {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
      throw GrammarError("product element must look like (x ; y)", 0);
    auto parts = split_top_level(text.substr(1, text.size() - 2), ';');
    if (parts.size() != 2) throw GrammarError("product element needs two components", 0);
    Elem::Seq s;
    s.push_back(a_->parse(trim(parts[0])));
    s.push_back(b_->parse(trim(parts[1])));
    return Elem(std::move(s));
  }

  std::unique_ptr<Enumerator> make_enumerator() const override {
    // Square shells over index pairs: shell s emits (i,s) for i < s, then
    // (s,j) for j <= s, skipping indices past a finite factor.
    struct PairShells final : Enumerator {
      const ProductGroup* g;
      std::uint64_t shell = 0, step = 0;
      std::optional<std::uint64_t> pa, pb;
      std::uint64_t emitted = 0;
      std::optional<std::uint64_t> total;
      explicit PairShells(const ProductGroup* g)
          : g(g), pa(g->a_->order()), pb(g->b_->order()), total(g->order()) {}

      std::optional<Elem> next() override {
        if (total && emitted >= *total) return std::nullopt;
        while (true) {
          std::uint64_t s = shell;
          std::uint64_t count_first = s;       // (i, s), i in [0, s)
          std::uint64_t count_second = s + 1;  // (s, j), j in [0, s]
          if (step >= count_first + count_second) {
            ++shell;
            step = 0;
            continue;
          }
          std::uint64_t i, j;
          if (step < count_first) {
            i = step;
            j = s;
          } else {
            i = s;
            j = step - count_first;
          }
          ++step;
          if (pa && i >= *pa) continue;
          if (pb && j >= *pb) continue;
          Elem::Seq pair;
          pair.reserve(2);
          pair.push_back(g->a_->at(static_cast<std::size_t>(i)));
          pair.push_back(g->b_->at(static_cast<std::size_t>(j)));
          ++emitted;
          return Elem(std::move(pair));
        }
      }
    };
    return std::make_unique<PairShells>(this);
  }

 private:
  static std::optional<std::uint64_t> combined_order(const Group& a, const Group& b) {
    if (!a.order() || !b.order()) return std::nullopt;
    std::uint64_t x = *a.order(), y = *b.order();
    if (y != 0 && x > UINT64_MAX / y) throw Error("product order overflows");
    return x * y;
  }

  GroupPtr a_;
  GroupPtr b_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Factories
// ---------------------------------------------------------------------------

GroupPtr make_integer_lattice(int d) {
  if (d < 1) throw Error("Z^d needs d >= 1");
  return std::make_shared<IntegerLattice>(d);
}

GroupPtr make_cyclic(std::uint64_t n) {
  if (n < 1) throw Error("Zmod n needs n >= 1");
  return std::make_shared<CyclicGroup>(n);
}

GroupPtr make_symmetric(int n) {
  if (n < 1 || n > 12) throw Error("Sym n supported for 1 <= n <= 12");
  return std::make_shared<SymmetricGroup>(n);
}

GroupPtr make_free(int k) {
  if (k < 1 || k > 26) throw Error("Free k supported for 1 <= k <= 26");
  return std::make_shared<FreeGroup>(k);
}

GroupPtr make_direct_sum(std::uint64_t c, std::optional<int> arity) {
  if (c < 2) throw Error("DirectSum base Zmod c needs c >= 2");
  if (arity && *arity < 1) throw Error("DirectSum arity must be >= 1 or omega");
  return std::make_shared<DirectSumGroup>(c, arity);
}

GroupPtr make_rational_vector(int d) {
  if (d < 1) throw Error("Q^d needs d >= 1");
  return std::make_shared<RationalVectorGroup>(d);
}

GroupPtr make_product(GroupPtr a, GroupPtr b) {
  if (!a || !b) throw Error("product factors must be non-null");
  return std::make_shared<ProductGroup>(std::move(a), std::move(b));
}

Elem product_pair(const Group& product, const Elem& left, const Elem& right) {
  Elem::Seq s;
  s.reserve(2);
  s.push_back(left);
  s.push_back(right);
  Elem e{std::move(s)};
  e.set_tag(product.tag());
  if (!product.contains(e))
    throw ForeignElementError("product_pair: components do not match " +
                              product.spec_text());
  return e;
}

const Elem& product_left(const Elem& pair) { return pair.seq().at(0); }
const Elem& product_right(const Elem& pair) { return pair.seq().at(1); }

}  // namespace thinset
