#include "thinset/constructions.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace thinset {

const char* to_string(IndexingMode mode) {
  return mode == IndexingMode::ordered ? "ordered" : "unordered";
}

ElemPair PairIndexing::key(const Elem& a, const Elem& b) const {
  if (mode == IndexingMode::unordered && b < a) return {b, a};
  return {a, b};
}

const Elem& PairIndexing::x(const Elem& a, const Elem& b) const {
  auto it = x_of.find(key(a, b));
  if (it == x_of.end())
    throw Error("pair indexing does not cover (" + a.repr() + ", " + b.repr() + ")");
  return it->second;
}

std::vector<Elem> PairIndexing::x_values() const {
  std::vector<Elem> out;
  out.reserve(x_of.size());
  for (const auto& [key, val] : x_of) out.push_back(val);
  std::sort(out.begin(), out.end());
  return out;
}

PairIndexing build_pair_indexing(GroupPtr H, GroupPtr K,
                                 const std::vector<ElemPair>& domain_pairs,
                                 std::size_t k_pool, IndexingMode mode,
                                 std::uint64_t seed) {
  PairIndexing idx;
  idx.mode = mode;
  idx.seed = seed;
  idx.h = H;
  idx.k = K;
  if (k_pool < 2) throw PreconditionError("k_pool must leave room past the identity");
  if (K->order()) k_pool = std::min(k_pool, static_cast<std::size_t>(*K->order()));

  // Deterministic: keys land in a std::map, draws happen in key order.
  for (const auto& [a, b] : domain_pairs) {
    H->require_mine(a, "pair indexing");
    H->require_mine(b, "pair indexing");
    idx.x_of.emplace(idx.key(a, b), Elem{});
  }
  if (idx.x_of.size() >= k_pool)
    throw PreconditionError("K pool too small for " + std::to_string(idx.x_of.size()) +
                            " pairs");

  std::mt19937_64 rng(seed);
  std::vector<bool> used(k_pool, false);
  used[0] = true;  // never the identity
  for (auto& [key, value] : idx.x_of) {
    std::size_t draw;
    do {
      draw = static_cast<std::size_t>(rng() % k_pool);
    } while (used[draw]);
    used[draw] = true;
    value = K->at(draw);
  }

  GenericityAudit audit = audit_indexing(idx);
  if (!audit.passed()) {
    std::string what = "seed " + std::to_string(seed) + " failed the genericity audit:";
    for (const std::string& f : audit.failures) what += " " + f + ";";
    throw GenericityError(what);
  }
  return idx;
}

GenericityAudit audit_indexing(const PairIndexing& idx) {
  GenericityAudit audit;
  const Group& K = *idx.k;
  std::vector<Elem> xs = idx.x_values();

  ElemSet distinct(xs.begin(), xs.end());
  if (distinct.size() != xs.size()) {
    audit.injective = false;
    audit.failures.push_back("x-values collide");
  }
  for (const Elem& x : xs) {
    if (K.is_identity(x)) {
      audit.identity_free = false;
      audit.failures.push_back("identity used as an x-value");
      break;
    }
  }
  for (const Elem& x : xs) {
    if (distinct.count(K.invert(x))) {
      audit.sign_free = false;
      audit.failures.push_back("X meets X^-1 at " + K.format(x));
      break;
    }
  }
  // Pairwise quotients distinct: x_i x_j^-1 determines {i, j} and order.
  ElemMap<std::pair<std::size_t, std::size_t>> quotients;
  for (std::size_t i = 0; i < xs.size() && audit.sidon; ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      Elem q = K.multiply(xs[i], K.invert(xs[j]));
      auto [it, fresh] = quotients.emplace(q, std::make_pair(i, j));
      if (!fresh) {
        audit.sidon = false;
        audit.failures.push_back("pairwise quotient " + K.format(q) + " repeats");
        break;
      }
    }
  }
  return audit;
}

WindowedSubset ConstructionOutput::as_subset(WindowPtr w) const {
  const auto& prov = provenance;
  return WindowedSubset::from_predicate(
      std::move(w), [&prov](const Elem& e) { return prov.count(e) != 0; },
      kind + " seed " + std::to_string(seed));
}

std::vector<ElemPair> all_distinct_pairs(GroupPtr H) {
  if (!H->is_finite()) throw PreconditionError("all_distinct_pairs needs a finite group");
  std::vector<Elem> elems = H->prefix(static_cast<std::size_t>(*H->order()));
  std::vector<ElemPair> pairs;
  for (std::size_t i = 1; i < elems.size(); ++i)
    for (std::size_t j = 1; j < elems.size(); ++j)
      if (i != j) pairs.emplace_back(elems[i], elems[j]);
  return pairs;
}

std::vector<ElemPair> sample_rational_pairs(GroupPtr Hq, std::size_t count,
                                            std::uint64_t seed) {
  const Elem& id = Hq->identity();
  std::size_t d = id.is_seq() ? id.seq().size() : 1;
  std::mt19937_64 rng(seed);
  auto draw_vector = [&]() {
    std::string text;
    if (d > 1) text += '(';
    for (std::size_t c = 0; c < d; ++c) {
      if (c) text += ',';
      std::int64_t num = static_cast<std::int64_t>(rng() % 19) - 9;
      std::int64_t den = static_cast<std::int64_t>(rng() % 9) + 1;
      text += std::to_string(num) + "/" + std::to_string(den);
    }
    if (d > 1) text += ')';
    return Hq->parse(text);
  };
  std::set<std::pair<Elem, Elem>> seen;
  std::vector<ElemPair> pairs;
  while (pairs.size() < count) {
    Elem a = draw_vector();
    Elem b = draw_vector();
    if (a == id && b == id) continue;
    if (seen.emplace(a, b).second) pairs.emplace_back(a, b);
  }
  return pairs;
}

ConstructionOutput bergman_set(GroupPtr H, GroupPtr K,
                               const std::vector<ElemPair>& pairs,
                               const PairIndexing& idx) {
  ConstructionOutput out;
  out.kind = "bergman";
  out.mode = idx.mode;
  out.seed = idx.seed;
  out.audit = audit_indexing(idx);
  out.ambient = make_product(H, K);
  const Group& amb = *out.ambient;
  const Elem& eh = H->identity();

  std::set<ElemPair> done;
  for (const auto& [a, b] : pairs) {
    if (a == b || a == eh || b == eh)
      throw PreconditionError("bergman pair domain excludes degenerate pairs");
    ElemPair key = idx.key(a, b);
    if (!done.insert(key).second) continue;
    const Elem& x = idx.x(a, b);
    const Elem roles[3] = {eh, key.first, key.second};
    for (int r = 0; r < 3; ++r) {
      Elem member = product_pair(amb, roles[r], x);
      Provenance prov{key.first, key.second, r, -1};
      auto [it, fresh] = out.provenance.emplace(member, prov);
      if (!fresh)
        throw IndexingCollisionError("bergman elements collide at " + amb.format(member));
      out.elements.push_back(std::move(member));
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

TranslateCount count_translates_in(const std::vector<Elem>& F,
                                   const ConstructionOutput& A) {
  const Group& g = *A.ambient;
  bool has_identity = false;
  for (const Elem& f : F)
    if (g.is_identity(f)) has_identity = true;
  if (!has_identity)
    throw PreconditionError("count_translates_in expects e ∈ F");

  ElemSet candidates;
  for (const Elem& f : F) {
    Elem fi = g.invert(f);
    for (const Elem& alpha : A.elements) candidates.insert(g.multiply(fi, alpha));
  }

  TranslateCount result;
  for (const Elem& cand : candidates) {
    bool all_in = true;
    for (const Elem& f : F) {
      if (!A.contains(g.multiply(f, cand))) {
        all_in = false;
        break;
      }
    }
    if (all_in) result.witnesses.push_back(cand);
  }
  std::sort(result.witnesses.begin(), result.witnesses.end());
  result.count = result.witnesses.size();
  return result;
}

namespace {

Elem scalar_multiple(const Group& g, const Elem& v, int times) {
  Elem acc = g.identity();
  for (int i = 0; i < times; ++i) acc = g.multiply(acc, v);
  return acc;
}

}  // namespace

ConstructionOutput quadratic_thin_set(GroupPtr Hq, GroupPtr K, int m,
                                      const std::vector<ElemPair>& pairs,
                                      const PairIndexing& idx) {
  if (m < 2) throw PreconditionError("quadratic_thin_set needs m >= 2");
  ConstructionOutput out;
  out.kind = "quadratic";
  out.mode = idx.mode;
  out.seed = idx.seed;
  out.audit = audit_indexing(idx);
  out.ambient = make_product(K, Hq);  // G = K ⊕ H
  const Group& amb = *out.ambient;
  const Elem& zero = Hq->identity();

  std::set<ElemPair> done;
  for (const auto& [a, b] : pairs) {
    if (a == zero && b == zero)
      throw PreconditionError("quadratic pair domain excludes (0,0)");
    ElemPair key = idx.key(a, b);
    if (!done.insert(key).second) continue;
    const Elem& x = idx.x(a, b);
    for (int k = 0; k <= m; ++k) {
      Elem h = Hq->multiply(scalar_multiple(*Hq, key.first, k),
                            scalar_multiple(*Hq, key.second, k * k));
      Elem member = product_pair(amb, x, h);
      Provenance prov{key.first, key.second, k, -1};
      auto [it, fresh] = out.provenance.emplace(member, prov);
      if (!fresh)
        throw IndexingCollisionError("quadratic elements collide at " +
                                     amb.format(member));
      out.elements.push_back(std::move(member));
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

std::vector<Elem> pair_collision_set(const ConstructionOutput& A, const Elem& x,
                                     const Elem& y) {
  const Group& g = *A.ambient;
  g.require_mine(x, "pair_collision_set");
  g.require_mine(y, "pair_collision_set");
  if (x == y || g.is_identity(x) || g.is_identity(y))
    throw DegenerateArgumentError(
        "pair_collision_set needs two distinct non-identity elements");
  std::vector<Elem> out;
  for (const Elem& alpha : A.elements) {
    if (A.contains(g.multiply(alpha, x)) && A.contains(g.multiply(alpha, y)))
      out.push_back(alpha);
  }
  return out;
}

VandermondeSolution vandermonde_solve(int i, int j, int k,
                                      const std::vector<Rational>& x2,
                                      const std::vector<Rational>& y2) {
  if (i == j || i == k || j == k)
    throw RepeatedIndexError("vandermonde_solve needs pairwise distinct indices");
  if (x2.size() != y2.size())
    throw PreconditionError("vandermonde_solve dimension mismatch");

  Rational ji(j - i), ki(k - i);
  Rational j2i2(static_cast<std::int64_t>(j) * j - static_cast<std::int64_t>(i) * i);
  Rational k2i2(static_cast<std::int64_t>(k) * k - static_cast<std::int64_t>(i) * i);
  Rational det = ji * k2i2 - ki * j2i2;  // (j-i)(k-i)(k-j)

  VandermondeSolution sol;
  sol.a.reserve(x2.size());
  sol.b.reserve(x2.size());
  for (std::size_t c = 0; c < x2.size(); ++c) {
    sol.a.push_back((k2i2 * x2[c] - j2i2 * y2[c]) / det);
    sol.b.push_back((ji * y2[c] - ki * x2[c]) / det);
  }
  return sol;
}

bool difference_identity_check(const std::vector<Rational>& a,
                               const std::vector<Rational>& b, int k, int l) {
  if (k == l) throw RepeatedIndexError("difference_identity_check needs k != l");
  if (a.size() != b.size())
    throw PreconditionError("difference_identity_check dimension mismatch");
  Rational kk(k), ll(l);
  for (std::size_t c = 0; c < a.size(); ++c) {
    Rational lhs = (kk * a[c] + kk * kk * b[c]) - (ll * a[c] + ll * ll * b[c]);
    Rational rhs = Rational(k - l) * a[c] +
                   Rational(static_cast<std::int64_t>(k) * k -
                            static_cast<std::int64_t>(l) * l) *
                       b[c];
    if (lhs != rhs) return false;
  }
  return true;
}

ConstructionOutput direct_sum_set(int label_left, const ConstructionOutput& left,
                                  int label_right, const ConstructionOutput& right) {
  ConstructionOutput out;
  out.kind = "direct-sum";
  out.mode = left.mode;
  out.seed = left.seed ^ (right.seed << 1);
  out.ambient = make_product(left.ambient, right.ambient);
  const Group& amb = *out.ambient;
  const Elem& el = left.ambient->identity();
  const Elem& er = right.ambient->identity();

  auto embed = [&](const ConstructionOutput& src, bool left_side, int label) {
    for (const Elem& alpha : src.elements) {
      Elem member = left_side ? product_pair(amb, alpha, er) : product_pair(amb, el, alpha);
      Provenance prov = src.provenance.at(alpha);
      prov.label = label;
      auto [it, fresh] = out.provenance.emplace(member, prov);
      if (!fresh)
        throw IndexingCollisionError("direct-sum embeddings collide at " +
                                     amb.format(member));
      out.elements.push_back(std::move(member));
    }
  };
  embed(left, true, label_left);
  embed(right, false, label_right);
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

std::vector<Rational> rational_coords(const Elem& e) {
  std::vector<Rational> out;
  if (e.is_rat()) {
    out.push_back(e.rat_value());
  } else if (e.is_seq()) {
    for (const Elem& c : e.seq()) out.push_back(c.rat_value());
  } else {
    throw Error("element has no rational coordinates");
  }
  return out;
}

WindowedSubset construction_subset(const std::string& kind,
                                   const std::map<std::string, std::string>& params,
                                   WindowPtr w) {
  auto get = [&](const char* key, const char* fallback) -> std::string {
    auto it = params.find(key);
    return it == params.end() ? std::string(fallback) : it->second;
  };
  IndexingMode mode =
      get("indexing", "ordered") == std::string("unordered") ? IndexingMode::unordered
                                                             : IndexingMode::ordered;
  std::uint64_t seed = std::stoull(get("seed", "1"));

  ConstructionOutput out;
  if (kind == "bergman") {
    GroupPtr h = parse_group_spec(get("H", "Zmod 5"));
    GroupPtr k = parse_group_spec(get("K", "Zmod 10007"));
    std::vector<ElemPair> pairs = all_distinct_pairs(h);
    std::size_t pool = std::stoull(get("pool", "10007"));
    PairIndexing idx = build_pair_indexing(h, k, pairs, pool, mode, seed);
    out = bergman_set(h, k, pairs, idx);
  } else if (kind == "quadratic") {
    GroupPtr hq = make_rational_vector(std::stoi(get("d", "4")));
    GroupPtr k = parse_group_spec(get("K", "Zmod 10007"));
    int m = std::stoi(get("m", "2"));
    std::vector<ElemPair> pairs =
        sample_rational_pairs(hq, std::stoull(get("pairs", "6")), seed);
    std::size_t pool = std::stoull(get("pool", "10007"));
    PairIndexing idx = build_pair_indexing(hq, k, pairs, pool, mode, seed);
    out = quadratic_thin_set(hq, k, m, pairs, idx);
  } else {
    throw GrammarError("unknown construction subset '" + kind + "'", 0);
  }

  if (w->group()->tag() != out.ambient->tag())
    throw PreconditionError("window group " + w->group()->spec_text() +
                            " does not match the construction ambient " +
                            out.ambient->spec_text());
  return out.as_subset(std::move(w));
}

std::vector<CollisionExplanation> explain_zero_k_collisions(
    const ConstructionOutput& A, const Elem& x, const Elem& y) {
  if (A.kind != "quadratic")
    throw PreconditionError("zero-K collision analysis applies to quadratic sets");
  const Group& g = *A.ambient;
  const Elem& xk = product_left(x);
  const Elem& yk = product_left(y);
  if (!(xk == product_left(g.identity())) || !(yk == product_left(g.identity())))
    throw PreconditionError("arguments must have zero K-component");

  std::vector<Rational> x2 = rational_coords(product_right(x));
  std::vector<Rational> y2 = rational_coords(product_right(y));

  std::vector<CollisionExplanation> out;
  for (const Elem& alpha : pair_collision_set(A, x, y)) {
    CollisionExplanation ex;
    ex.element = alpha;
    const Provenance& p0 = A.provenance.at(alpha);
    const Provenance& pj = A.provenance.at(g.multiply(alpha, x));
    const Provenance& pk = A.provenance.at(g.multiply(alpha, y));
    ex.i = p0.role;
    ex.j = pj.role;
    ex.k = pk.role;
    ex.same_pair = p0.a == pj.a && p0.b == pj.b && p0.a == pk.a && p0.b == pk.b;
    if (ex.same_pair && ex.i != ex.j && ex.i != ex.k && ex.j != ex.k) {
      VandermondeSolution sol = vandermonde_solve(ex.i, ex.j, ex.k, x2, y2);
      ex.vandermonde_matches = sol.a == rational_coords(p0.a) &&
                               sol.b == rational_coords(p0.b);
    }
    out.push_back(std::move(ex));
  }
  return out;
}

}  // namespace thinset
