#include "thinset/partition.hpp"

#include <algorithm>

namespace thinset {

std::size_t PartitionResult::nonempty_parts() const {
  std::size_t n = 0;
  for (const auto& p : parts)
    if (!p.empty()) ++n;
  return n;
}

std::vector<Radius> default_radius_schedule(GroupPtr g, std::size_t window_size,
                                            std::size_t max_radius) {
  std::size_t cap = std::min(window_size, max_radius);
  if (g->order()) cap = std::min(cap, static_cast<std::size_t>(*g->order()));
  std::vector<Radius> schedule;
  for (std::size_t n = 1; n <= cap; n *= 2) {
    schedule.push_back(Radius::ordinal(g, n));
    if (n > cap / 2) break;
  }
  return schedule;
}

namespace {

struct GreedyCore {
  std::vector<int> colors;                // per member index
  std::vector<std::size_t> active;        // honored schedule step per member (1-based, 0 = none)
  std::vector<std::size_t> conflict_counts;
  std::vector<Elem> low_active_members;   // members with active < step, per step (flattened later)
};

// Cumulative schedule radii and the conflict difference sets
// D_j = R_j R_j^-1 \ {e}, with each difference labeled by the first step it
// appears in.
struct ConflictSets {
  std::vector<Radius> cumulative;                  // R_1 ⊆ R_2 ⊆ ...
  std::vector<std::pair<Elem, std::size_t>> diffs; // (d, min step), deduped
};

ConflictSets build_conflicts(const GroupPtr& g, const std::vector<Radius>& schedule) {
  ConflictSets cs;
  std::vector<Elem> acc;
  ElemMap<std::size_t> seen;
  for (std::size_t j = 0; j < schedule.size(); ++j) {
    for (const Elem& e : schedule[j].elems()) acc.push_back(e);
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    cs.cumulative.push_back(Radius::of(g, acc));
    for (const Elem& r : acc) {
      Elem ri = g->invert(r);
      for (const Elem& s : acc) {
        Elem d = g->multiply(s, ri);
        if (g->is_identity(d)) continue;
        seen.emplace(d, j + 1);
      }
    }
  }
  cs.diffs.assign(seen.begin(), seen.end());
  std::sort(cs.diffs.begin(), cs.diffs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return cs;
}

GreedyCore run_greedy(const WindowedSubset& A, int colors_available,
                      const ConflictSets& cs, const std::vector<int>* preassigned) {
  const Group& g = *A.group();
  std::size_t n = A.size();
  std::size_t steps = cs.cumulative.size();

  GreedyCore core;
  core.colors.assign(n, -1);
  core.active.assign(n, 0);
  core.conflict_counts.assign(n, 0);

  ElemMap<std::size_t> member_index;
  member_index.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) member_index.emplace(A.members()[i], i);

  for (std::size_t i = 0; i < n; ++i) {
    const Elem& a = A.members()[i];

    // Neighbors of a in A with the first step their difference enters.
    std::vector<std::pair<std::size_t, std::size_t>> neighbors;  // (member idx, step)
    std::vector<std::size_t> per_step(steps + 1, 0);
    for (const auto& [d, step] : cs.diffs) {
      auto it = member_index.find(g.multiply(d, a));
      if (it == member_index.end()) continue;
      neighbors.emplace_back(it->second, step);
      ++per_step[step];
    }

    // Largest step whose conflict degree still fits in the palette.
    std::size_t degree = 0;
    std::size_t active = 0;
    for (std::size_t j = 1; j <= steps; ++j) {
      degree += per_step[j];
      if (degree <= static_cast<std::size_t>(colors_available) - 1) active = j;
      else break;
    }
    core.active[i] = active;

    if (preassigned && (*preassigned)[i] >= 0) {
      core.colors[i] = (*preassigned)[i];
      continue;
    }

    std::vector<bool> taken(static_cast<std::size_t>(colors_available), false);
    std::size_t conflicts = 0;
    for (const auto& [idx, step] : neighbors) {
      if (step > active) continue;
      if (core.colors[idx] < 0) continue;  // later element, not colored yet
      ++conflicts;
      if (core.colors[idx] < colors_available)
        taken[static_cast<std::size_t>(core.colors[idx])] = true;
    }
    core.conflict_counts[i] = conflicts;

    int color = -1;
    for (int c = 0; c < colors_available; ++c) {
      if (!taken[static_cast<std::size_t>(c)]) {
        color = c;
        break;
      }
    }
    if (color < 0)
      throw ScheduleInfeasibleError(
          "greedy ran out of colors at " + g.format(a) +
          " (conflicting ball around it meets every color)");
    core.colors[i] = color;
  }
  return core;
}

}  // namespace

PartitionResult greedy_thin_partition(const WindowedSubset& A, int m,
                                      const std::vector<Radius>& schedule,
                                      const GreedyOptions& opts) {
  if (m < 1) throw PreconditionError("greedy_thin_partition needs m >= 1");
  if (schedule.empty()) throw PreconditionError("radius schedule is empty");
  const GroupPtr& g = A.group();
  const Window& w = *A.window();

  std::size_t input_bound = opts.input_bound;
  if (input_bound == static_cast<std::size_t>(-1)) input_bound = w.size() / 8;

  if (!opts.skip_precondition) {
    for (const Radius& F : schedule) {
      ThinnessReport r = is_m_thin_window(A, F, m, input_bound);
      if (r.violated) {
        const Elem* witness = nullptr;
        for (const Elem& v : r.violators) {
          if (*w.position(v) >= input_bound) {
            witness = &v;
            break;
          }
        }
        throw InputNotThinError("input is not " + std::to_string(m) +
                                "-thin-consistent at radius " + F.describe() +
                                " beyond bound " + std::to_string(input_bound) +
                                (witness ? ", witness " + g->format(*witness) : ""));
      }
    }
  }

  ConflictSets cs = build_conflicts(g, schedule);
  GreedyCore core = run_greedy(A, m, cs, nullptr);

  PartitionResult result;
  result.window = A.window();
  for (const Radius& F : schedule) result.schedule.push_back(F.describe());

  std::vector<std::vector<Elem>> colored(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < A.size(); ++i)
    colored[static_cast<std::size_t>(core.colors[i])].push_back(A.members()[i]);
  for (auto& part : colored)
    if (!part.empty()) result.parts.push_back(std::move(part));

  for (std::size_t i = 0; i < A.size(); ++i) {
    result.trace.push_back({A.members()[i], *w.position(A.members()[i]),
                            core.colors[i], core.active[i], core.conflict_counts[i]});
  }

  // Reported bound per scheduled radius: the window shadow of every member
  // that could not honor that step.
  for (std::size_t j = 1; j <= schedule.size(); ++j) {
    std::size_t bound = 0;
    const Radius& R = cs.cumulative[j - 1];
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (core.active[i] >= j) continue;
      const Elem& u = A.members()[i];
      for (const Elem& r : R.elems()) {
        Elem x = g->multiply(g->invert(r), u);
        auto pos = w.position(x);
        if (pos) bound = std::max(bound, *pos + 1);
      }
      auto posu = w.position(u);
      if (posu) bound = std::max(bound, *posu + 1);
    }
    result.radius_bounds.push_back(bound);
  }

  for (const auto& part : result.parts) {
    WindowedSubset ps = WindowedSubset::of_elements(A.window(), part, "part");
    std::vector<ThinnessReport> reports;
    for (std::size_t j = 0; j < schedule.size(); ++j)
      reports.push_back(is_m_thin_window(ps, schedule[j], 1, result.radius_bounds[j]));
    result.part_reports.push_back(std::move(reports));
  }
  return result;
}

VerificationReport verify_partition(const WindowedSubset& A,
                                    const std::vector<std::vector<Elem>>& parts,
                                    const Radius& F, int m_part, std::size_t bound) {
  VerificationReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.failures.push_back(std::move(msg));
  };

  ElemSet seen;
  std::size_t total = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (const Elem& e : parts[p]) {
      ++total;
      if (!seen.insert(e).second)
        fail("element " + e.repr() + " appears in more than one part");
      if (!A.contains(e))
        fail("element " + e.repr() + " of part " + std::to_string(p) +
             " is not in the input subset");
    }
  }
  if (total != A.size() || seen.size() != A.size()) {
    fail("covering failure: parts hold " + std::to_string(seen.size()) +
         " distinct elements, input has " + std::to_string(A.size()));
  }

  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) continue;
    WindowedSubset ps = WindowedSubset::of_elements(A.window(), parts[p], "part");
    ThinnessReport r = is_m_thin_window(ps, F, m_part, bound);
    if (r.violated)
      fail("part " + std::to_string(p) + " violates the " + std::to_string(m_part) +
           "-thin check at " + F.describe());
  }
  return report;
}

UniformPartitionResult uniform_discrete_partition(const std::vector<Elem>& points,
                                                  const std::vector<Elem>& subset,
                                                  const Entourage& U,
                                                  const Entourage& V, int mu) {
  if (mu < 1) throw PreconditionError("uniform_discrete_partition needs mu >= 1");
  ElemSet point_set(points.begin(), points.end());
  for (const Elem& a : subset)
    if (!point_set.count(a))
      throw PreconditionError("subset element " + a.repr() + " is not a point");

  for (const Elem& x : points) {
    if (!V.related(x, x))
      throw PreconditionError("entourage " + V.name + " is not reflexive at " + x.repr());
    for (const Elem& y : points) {
      if (V.related(x, y) != V.related(y, x))
        throw PreconditionError("entourage " + V.name + " is not symmetric at (" +
                                x.repr() + ", " + y.repr() + ")");
    }
  }

  ElemSet subset_set(subset.begin(), subset.end());

  // V∘V ⊆ U and |U(x) ∩ A| <= mu, both with witnesses.
  for (const Elem& z : points) {
    std::vector<Elem> vz;
    for (const Elem& p : points)
      if (V.related(z, p)) vz.push_back(p);
    for (const Elem& x : vz) {
      for (const Elem& y : vz) {
        if (!U.related(x, y))
          throw PreconditionError(V.name + "^2 is not contained in " + U.name +
                                  ": witness (" + x.repr() + ", " + y.repr() +
                                  ") via " + z.repr());
      }
    }
  }
  for (const Elem& x : points) {
    int hits = 0;
    for (const Elem& a : subset)
      if (U.related(x, a)) ++hits;
    if (hits > mu)
      throw PreconditionError("|" + U.name + "(x) ∩ A| = " + std::to_string(hits) +
                              " > mu at x = " + x.repr());
  }

  // Γ: (x,y) adjacent iff some z has x,y ∈ V(z).
  std::size_t n = subset.size();
  ElemMap<std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(subset[i], i);
  std::vector<std::vector<std::size_t>> adj(n);
  for (const Elem& z : points) {
    std::vector<std::size_t> in_vz;
    for (std::size_t i = 0; i < n; ++i)
      if (V.related(z, subset[i])) in_vz.push_back(i);
    for (std::size_t i : in_vz)
      for (std::size_t j : in_vz)
        if (i != j) adj[i].push_back(j);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  UniformPartitionResult result;
  std::vector<int> color(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> taken(static_cast<std::size_t>(mu), false);
    std::size_t conflicts = 0;
    for (std::size_t j : adj[i]) {
      if (color[j] >= 0) {
        ++conflicts;
        if (color[j] < mu) taken[static_cast<std::size_t>(color[j])] = true;
      }
    }
    int c = -1;
    for (int k = 0; k < mu; ++k)
      if (!taken[static_cast<std::size_t>(k)]) {
        c = k;
        break;
      }
    if (c < 0)
      throw ScheduleInfeasibleError("uniform greedy ran out of colors at " +
                                    subset[i].repr());
    color[i] = c;
    result.trace.push_back({subset[i], i, c, 0, conflicts});
  }

  std::vector<std::vector<Elem>> parts(static_cast<std::size_t>(mu));
  for (std::size_t i = 0; i < n; ++i)
    parts[static_cast<std::size_t>(color[i])].push_back(subset[i]);
  for (auto& p : parts)
    if (!p.empty()) result.parts.push_back(std::move(p));
  result.colors_used = result.parts.size();
  return result;
}

LevelPartitioner greedy_level_partitioner(int m) {
  return [m](const WindowedSubset& level_subset, int parts_target,
             const std::vector<int>& preassigned) {
    // Conflict radii must reach across the whole window, or differences near
    // the top level would never register.
    std::size_t n = level_subset.window()->size();
    std::vector<Radius> schedule =
        default_radius_schedule(level_subset.group(), n, n);
    ConflictSets cs = build_conflicts(level_subset.group(), schedule);
    int colors = std::max(m, parts_target);
    GreedyCore core = run_greedy(level_subset, colors, cs, &preassigned);
    return core.colors;
  };
}

ChainPartitionResult chain_partition(const WindowedSubset& A, const SubgroupChain& chain,
                                     const LevelPartitioner& per_level, int m,
                                     int parts_target) {
  if (parts_target < 1) throw PreconditionError("parts_target must be >= 1");
  if (m < 1) throw PreconditionError("m must be >= 1");
  if (!chain.covers(A.members()))
    throw ChainError("chain does not cover the subset: top level misses members");
  for (std::size_t l = 0; l < chain.level_count(); ++l)
    for (const Elem& e : chain.level(l))
      if (!A.window()->contains(e))
        throw ChainError("chain level " + std::to_string(l) +
                         " extends past the window");

  const std::size_t n = A.size();
  std::vector<int> assignment(n, -1);
  ElemMap<std::size_t> member_index;
  for (std::size_t i = 0; i < n; ++i) member_index.emplace(A.members()[i], i);

  ChainPartitionResult result;

  for (std::size_t lvl = 0; lvl < chain.level_count(); ++lvl) {
    std::vector<Elem> level_members;
    std::vector<std::size_t> level_index;
    for (std::size_t i = 0; i < n; ++i) {
      if (chain.member_of_level(lvl, A.members()[i])) {
        level_members.push_back(A.members()[i]);
        level_index.push_back(i);
      }
    }
    if (level_members.empty()) {
      result.level_assignments.push_back({});
      continue;
    }
    WindowedSubset level_subset = WindowedSubset::of_elements(
        A.window(), level_members, A.describe() + " ∩ H_" + std::to_string(lvl));
    std::vector<int> preassigned;
    preassigned.reserve(level_members.size());
    for (std::size_t i : level_index) preassigned.push_back(assignment[i]);

    std::vector<int> colors = per_level(level_subset, parts_target, preassigned);
    if (colors.size() != level_members.size())
      throw ChainError("level partitioner arity mismatch at level " + std::to_string(lvl));
    for (std::size_t k = 0; k < colors.size(); ++k) {
      if (colors[k] < 0 || colors[k] >= parts_target)
        throw ChainError("level partitioner used a color outside the target arity");
      if (preassigned[k] >= 0 && colors[k] != preassigned[k])
        throw ChainError("level partitioner recolored an inherited element");
      assignment[level_index[k]] = colors[k];
    }
    result.level_assignments.push_back(std::move(colors));
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (assignment[i] < 0)
      throw ChainError("chain does not cover member " + A.members()[i].repr());
  }

  result.parts.assign(static_cast<std::size_t>(parts_target), {});
  for (std::size_t i = 0; i < n; ++i)
    result.parts[static_cast<std::size_t>(assignment[i])].push_back(A.members()[i]);

  // Collision bounds, mirroring the three proof cases: for g in
  // H_{alpha+1} \ H_alpha the per-part collision set must sit inside
  // H_{alpha+1}; anything outside is an exception, reported not assumed.
  const Group& g = *A.group();
  std::vector<ElemSet> part_sets;
  for (const auto& p : result.parts) part_sets.emplace_back(p.begin(), p.end());

  for (std::size_t alpha = 0; alpha + 1 < chain.level_count(); ++alpha) {
    for (const Elem& gg : chain.level(alpha + 1)) {
      if (chain.member_of_level(alpha, gg)) continue;
      for (int part = 0; part < parts_target; ++part) {
        ChainCollisionCheck check;
        check.level = alpha;
        check.g = gg;
        check.part = part;
        for (const Elem& x : result.parts[static_cast<std::size_t>(part)]) {
          if (part_sets[static_cast<std::size_t>(part)].count(g.multiply(gg, x))) {
            check.collision.push_back(x);
            if (!chain.member_of_level(alpha + 1, x)) check.exceptions.push_back(x);
          }
        }
        result.total_exceptions += check.exceptions.size();
        if (!check.collision.empty()) result.checks.push_back(std::move(check));
      }
    }
  }
  return result;
}

}  // namespace thinset
