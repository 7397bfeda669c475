#include "thinset/ballean.hpp"

#include <algorithm>

namespace thinset {
namespace {

void sort_dedupe(std::vector<Elem>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool sorted_contains(const std::vector<Elem>& v, const Elem& x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

Radius::Radius(GroupPtr g, std::vector<Elem> elems, std::optional<std::size_t> n)
    : group_(std::move(g)), elems_(std::move(elems)), ordinal_n_(n) {}

Radius Radius::of(GroupPtr g, std::vector<Elem> elems) {
  for (const Elem& e : elems) g->require_mine(e, "radius");
  sort_dedupe(elems);
  return Radius(std::move(g), std::move(elems), std::nullopt);
}

Radius Radius::ordinal(GroupPtr g, std::size_t n) {
  std::vector<Elem> elems = g->prefix(n);
  sort_dedupe(elems);
  return Radius(std::move(g), std::move(elems), n);
}

bool Radius::contains(const Elem& x) const { return sorted_contains(elems_, x); }

std::string Radius::describe() const {
  if (ordinal_n_) return "F" + std::to_string(*ordinal_n_);
  std::string out = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ',';
    out += group_->format(elems_[i]);
  }
  return out + "}";
}

std::vector<Elem> ball(const Elem& x, const Radius& F) {
  const Group& g = *F.group();
  g.require_mine(x, "ball");
  std::vector<Elem> out;
  out.reserve(F.size() + 1);
  for (const Elem& f : F.elems()) out.push_back(g.multiply(f, x));
  out.push_back(x);
  sort_dedupe(out);
  return out;
}

std::vector<Elem> star_ball(const Elem& x, const Radius& F) {
  const Group& g = *F.group();
  g.require_mine(x, "star_ball");
  std::vector<Elem> out;
  out.reserve(F.size() + 1);
  for (const Elem& f : F.elems()) out.push_back(g.multiply(g.invert(f), x));
  out.push_back(x);
  sort_dedupe(out);
  return out;
}

std::vector<Elem> ball_of_set(const std::vector<Elem>& xs, const Radius& F) {
  std::vector<Elem> out;
  for (const Elem& x : xs) {
    std::vector<Elem> b = ball(x, F);
    out.insert(out.end(), b.begin(), b.end());
  }
  sort_dedupe(out);
  return out;
}

Radius symmetrize(const Radius& F) {
  const Group& g = *F.group();
  std::vector<Elem> elems = F.elems();
  for (const Elem& f : F.elems()) elems.push_back(g.invert(f));
  return Radius::of(F.group(), std::move(elems));
}

Radius compose_radii(const Radius& F1, const Radius& F2) {
  if (F1.group()->tag() != F2.group()->tag())
    throw ForeignElementError("compose_radii: radii from different groups");
  const Group& g = *F1.group();
  std::vector<Elem> elems;
  elems.reserve(F1.size() * F2.size() + F1.size() + F2.size());
  for (const Elem& f2 : F2.elems())
    for (const Elem& f1 : F1.elems()) elems.push_back(g.multiply(f2, f1));
  elems.insert(elems.end(), F1.elems().begin(), F1.elems().end());
  elems.insert(elems.end(), F2.elems().begin(), F2.elems().end());
  return Radius::of(F1.group(), std::move(elems));
}

std::size_t covering_ordinal_radius(const Radius& F, std::size_t scan_cap) {
  std::size_t n = 0;
  for (const Elem& f : F.elems()) {
    auto idx = F.group()->index_of(f, scan_cap);
    if (!idx)
      throw Error("covering_ordinal_radius: element " + F.group()->format(f) +
                  " not found within scan cap " + std::to_string(scan_cap));
    n = std::max(n, *idx + 1);
  }
  return n;
}

BallStructure BallStructure::group_ballean(GroupPtr g) {
  BallStructure b;
  b.name = "B(" + g->spec_text() + ", aleph 0)";
  b.ball_of = [](const Elem& x, const Radius& F) { return ball(x, F); };
  b.symmetrize_radius = [](const Radius& F) { return symmetrize(F); };
  b.compose = [](const Radius& a, const Radius& b2) { return compose_radii(a, b2); };
  return b;
}

std::string AxiomCheckReport::summary() const {
  std::string out = passed ? "pass" : "FAIL";
  out += " [window-verified] (membership " + std::to_string(membership_checks) +
         ", star " + std::to_string(star_checks) + ", composition " +
         std::to_string(composition_checks) + ", connected-on-sample " +
         (connected_on_sample ? "yes" : "no") + ")";
  for (const std::string& f : failures) out += "\n  " + f;
  return out;
}

AxiomCheckReport ballean_axioms_check(const BallStructure& B,
                                      const std::vector<Elem>& sample,
                                      const std::vector<Radius>& radii) {
  AxiomCheckReport report;
  auto fail = [&](std::string msg) {
    report.passed = false;
    if (report.failures.size() < 16) report.failures.push_back(std::move(msg));
  };

  // Membership: x ∈ B(x,α).
  for (const Radius& F : radii) {
    for (const Elem& x : sample) {
      ++report.membership_checks;
      std::vector<Elem> b = B.ball_of(x, F);
      if (!std::binary_search(b.begin(), b.end(), x)) {
        fail("membership axiom fails: x not in B(x," + F.describe() + ") for x = " +
             x.repr());
      }
    }
  }

  // Ball/star interchange: for each α a witness α' with, over the sample,
  // B(x,α) ⊆ B*(x,α') and B*(x,α) ⊆ B(x,α'). Witness candidates: the
  // structure's symmetrization when present, else every listed radius.
  for (const Radius& F : radii) {
    std::vector<Radius> candidates;
    if (B.symmetrize_radius) candidates.push_back(B.symmetrize_radius(F));
    for (const Radius& r : radii) candidates.push_back(r);

    bool forward_ok = false, backward_ok = false;
    for (const Radius& W : candidates) {
      // B(x,α) ⊆ B*(x,α'): every y ∈ B(x,α) has x ∈ B(y,α').
      bool fwd = true;
      for (const Elem& x : sample) {
        for (const Elem& y : B.ball_of(x, F)) {
          std::vector<Elem> by = B.ball_of(y, W);
          if (!std::binary_search(by.begin(), by.end(), x)) {
            fwd = false;
            break;
          }
        }
        if (!fwd) break;
      }
      // B*(x,α) ⊆ B(x,α') over the sample: x ∈ B(y,α) implies y ∈ B(x,α').
      bool bwd = true;
      for (const Elem& y : sample) {
        std::vector<Elem> b = B.ball_of(y, F);
        for (const Elem& x : sample) {
          if (!std::binary_search(b.begin(), b.end(), x)) continue;
          std::vector<Elem> bx = B.ball_of(x, W);
          if (!std::binary_search(bx.begin(), bx.end(), y)) {
            bwd = false;
            break;
          }
        }
        if (!bwd) break;
      }
      forward_ok = forward_ok || fwd;
      backward_ok = backward_ok || bwd;
      if (forward_ok && backward_ok) break;
    }
    ++report.star_checks;
    if (!forward_ok)
      fail("no witness radius for B(x,a) subset of B*(x,a') at a = " + F.describe());
    if (!backward_ok)
      fail("no witness radius for B*(x,a) subset of B(x,a') at a = " + F.describe());
  }

  // Composition: B(B(x,α),β) ⊆ B(x,γ) with the compose witness (or any
  // listed radius).
  for (const Radius& F1 : radii) {
    for (const Radius& F2 : radii) {
      std::vector<Radius> candidates;
      if (B.compose) candidates.push_back(B.compose(F1, F2));
      for (const Radius& r : radii) candidates.push_back(r);

      bool ok = false;
      std::string witness;
      for (const Radius& G : candidates) {
        bool contained = true;
        for (const Elem& x : sample) {
          std::vector<Elem> outer = B.ball_of(x, G);
          for (const Elem& y : B.ball_of(x, F1)) {
            for (const Elem& z : B.ball_of(y, F2)) {
              if (!std::binary_search(outer.begin(), outer.end(), z)) {
                contained = false;
                break;
              }
            }
            if (!contained) break;
          }
          if (!contained) break;
        }
        if (contained) {
          ok = true;
          witness = G.describe();
          break;
        }
      }
      ++report.composition_checks;
      if (!ok)
        fail("no composition witness for (" + F1.describe() + ", " + F2.describe() + ")");
    }
  }

  // Connectivity on the sample, reported rather than assumed: breadth-first
  // closure over single-ball hops within the sample.
  if (!sample.empty()) {
    ElemMap<std::size_t> index;
    for (std::size_t i = 0; i < sample.size(); ++i) index.emplace(sample[i], i);
    std::vector<char> reached(sample.size(), 0);
    std::vector<std::size_t> frontier{0};
    reached[0] = 1;
    while (!frontier.empty()) {
      std::size_t i = frontier.back();
      frontier.pop_back();
      for (const Radius& F : radii) {
        for (const Elem& y : B.ball_of(sample[i], F)) {
          auto it = index.find(y);
          if (it != index.end() && !reached[it->second]) {
            reached[it->second] = 1;
            frontier.push_back(it->second);
          }
        }
      }
    }
    for (char r : reached)
      if (!r) report.connected_on_sample = false;
  }

  return report;
}

}  // namespace thinset
