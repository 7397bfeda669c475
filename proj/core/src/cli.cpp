#include "thinset/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "thinset/cardinal.hpp"
#include "thinset/constructions.hpp"
#include "thinset/partition.hpp"
#include "thinset/square_coloring.hpp"
#include "thinset/thinness.hpp"

namespace thinset {
namespace {

using KV = std::vector<std::pair<std::string, std::string>>;

constexpr const char* kColoringNote =
    "note: three-color line-finiteness exists only up to cardinality aleph 1; "
    "groups of size >= aleph 2 always leave an infinite monochromatic line, so "
    "this tool colors finite windows of subgroup chains only.";

Radius parse_radius_spec(std::string_view text, const GroupPtr& g) {
  if (!text.empty() && text.front() == 'F') {
    std::size_t n = std::stoull(std::string(text.substr(1)));
    return Radius::ordinal(g, n);
  }
  if (!text.empty() && text.front() == '{' && text.back() == '}') {
    std::string body(text.substr(1, text.size() - 2));
    std::vector<Elem> elems;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i < body.size() && (body[i] == '(' || body[i] == '[')) ++depth;
      if (i < body.size() && (body[i] == ')' || body[i] == ']')) --depth;
      if (i == body.size() || (body[i] == ',' && depth == 0)) {
        std::string part = body.substr(start, i - start);
        if (part.find_first_not_of(" \t") != std::string::npos)
          elems.push_back(g->parse(part));
        start = i + 1;
      }
    }
    return Radius::of(g, std::move(elems));
  }
  throw GrammarError("radius must be 'Fn' or '{elements}'", 0);
}

std::vector<Radius> parse_schedule(const std::string& text, const GroupPtr& g,
                                   std::size_t window_size) {
  if (text == "auto") return default_radius_schedule(g, window_size);
  std::vector<Radius> schedule;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      std::string part = text.substr(start, i - start);
      if (!part.empty()) schedule.push_back(parse_radius_spec(part, g));
      start = i + 1;
    }
  }
  if (schedule.empty()) throw GrammarError("empty radius schedule", 0);
  return schedule;
}

std::string elem_list(const Group& g, const std::vector<Elem>& elems,
                      std::size_t cap = 16) {
  std::string out;
  for (std::size_t i = 0; i < elems.size() && i < cap; ++i) {
    if (i) out += ',';
    out += g.format(elems[i]);
  }
  if (elems.size() > cap) out += ",...";
  return out;
}

int run_check_thin(const RunManifest& m, RecordsWriter& w) {
  GroupPtr g = parse_group_spec(m.get("group"));
  WindowPtr window = Window::prefix(g, m.get_u64("window"));
  WindowedSubset subset = parse_subset_spec(m.get("set"), window);
  Radius radius = parse_radius_spec(m.get_or("radius", "F8"), g);
  int mm = static_cast<int>(m.get_u64_or("m", 1));
  std::size_t bound = m.get_u64_or("bound", 0);

  ThinnessReport report = is_m_thin_window(subset, radius, mm, bound);
  w.record("report", {{"type", "check-thin"},
                      {"radius", report.radius},
                      {"m", std::to_string(mm)},
                      {"window", std::to_string(report.window_size)},
                      {"bound", std::to_string(bound)},
                      {"subset-size", std::to_string(subset.size())},
                      {"verdict", report.verdict()},
                      {"violators", std::to_string(report.violators.size())},
                      {"exceptional", std::to_string(report.exceptional.size())},
                      {"minimal-bound", std::to_string(report.minimal_consistent_bound)}});
  if (!report.violators.empty())
    w.record("witness", {{"violators", elem_list(*g, report.violators)}});
  return report.violated ? 1 : 0;
}

int run_partition_greedy(const RunManifest& m, RecordsWriter& w) {
  GroupPtr g = parse_group_spec(m.get("group"));
  WindowPtr window = Window::prefix(g, m.get_u64("window"));
  WindowedSubset subset = parse_subset_spec(m.get("set"), window);
  int mm = static_cast<int>(m.get_u64_or("m", 2));
  std::vector<Radius> schedule =
      parse_schedule(m.get_or("schedule", "auto"), g, window->size());
  GreedyOptions opts;
  if (m.has("bound")) opts.input_bound = m.get_u64("bound");

  PartitionResult result = greedy_thin_partition(subset, mm, schedule, opts);
  w.record("partition", {{"algorithm", "greedy"},
                         {"m", std::to_string(mm)},
                         {"parts", std::to_string(result.parts.size())},
                         {"subset-size", std::to_string(subset.size())}});
  bool ok = result.parts.size() <= static_cast<std::size_t>(mm);
  for (std::size_t p = 0; p < result.parts.size(); ++p) {
    KV kv{{"index", std::to_string(p)},
          {"size", std::to_string(result.parts[p].size())},
          {"elements", elem_list(*g, result.parts[p])}};
    for (std::size_t j = 0; j < result.part_reports[p].size(); ++j) {
      const ThinnessReport& r = result.part_reports[p][j];
      kv.emplace_back(r.radius + "-verdict",
                      std::string(r.verdict()) + "@bound" +
                          std::to_string(result.radius_bounds[j]));
      if (r.violated) ok = false;
    }
    w.record("part", kv);
  }
  for (std::size_t j = 0; j < schedule.size(); ++j) {
    VerificationReport vr =
        verify_partition(subset, result.parts, schedule[j], 1, result.radius_bounds[j]);
    if (!vr.ok) {
      ok = false;
      for (const std::string& f : vr.failures) w.record("failure", {{"what", f}});
    }
  }
  return ok ? 0 : 1;
}

// Entourages |x-y|_inf <= r over Z^d windows.
Entourage lattice_entourage(const GroupPtr& g, std::int64_t r, std::string name) {
  return Entourage{std::move(name), [g, r](const Elem& x, const Elem& y) {
                     Elem diff = g->multiply(x, g->invert(y));
                     std::int64_t norm = 0;
                     if (diff.is_int()) {
                       norm = std::abs(diff.int_value());
                     } else {
                       for (const Elem& c : diff.seq())
                         norm = std::max(norm, std::abs(c.int_value()));
                     }
                     return norm <= r;
                   }};
}

int run_partition_uniform(const RunManifest& m, RecordsWriter& w) {
  GroupPtr g = parse_group_spec(m.get("group"));
  if (m.get("group").rfind("Z", 0) != 0)
    throw PreconditionError("uniform partition entourages are metric; use Z^d");
  WindowPtr window = Window::prefix(g, m.get_u64("window"));
  WindowedSubset subset = parse_subset_spec(m.get("set"), window);
  std::int64_t ur = static_cast<std::int64_t>(m.get_u64("uradius"));
  std::int64_t vr = static_cast<std::int64_t>(m.get_u64("vradius"));
  int mu = static_cast<int>(m.get_u64("mu"));

  Entourage U = lattice_entourage(g, ur, "U(" + std::to_string(ur) + ")");
  Entourage V = lattice_entourage(g, vr, "V(" + std::to_string(vr) + ")");
  UniformPartitionResult result =
      uniform_discrete_partition(window->elements(), subset.members(), U, V, mu);

  w.record("partition", {{"algorithm", "uniform"},
                         {"mu", std::to_string(mu)},
                         {"colors-used", std::to_string(result.colors_used)},
                         {"parts", std::to_string(result.parts.size())}});
  bool ok = result.colors_used <= static_cast<std::size_t>(mu);
  for (std::size_t p = 0; p < result.parts.size(); ++p) {
    // V-discreteness of each part: V(x) ∩ P = {x}.
    ElemSet part_set(result.parts[p].begin(), result.parts[p].end());
    std::size_t violations = 0;
    for (const Elem& x : result.parts[p])
      for (const Elem& y : result.parts[p])
        if (!(x == y) && V.related(x, y)) ++violations;
    if (violations) ok = false;
    w.record("part", {{"index", std::to_string(p)},
                      {"size", std::to_string(result.parts[p].size())},
                      {"v-violations", std::to_string(violations)},
                      {"elements", elem_list(*g, result.parts[p])}});
  }
  return ok ? 0 : 1;
}

std::size_t chain_base_for(const RunManifest& m, const GroupPtr& g) {
  if (m.has("chain-base")) return m.get_u64("chain-base");
  // DirectSum[Zmod c; ...] chains naturally by c.
  const std::string& spec = g->spec_text();
  auto pos = spec.find("Zmod ");
  if (spec.rfind("DirectSum", 0) == 0 && pos != std::string::npos)
    return std::stoull(spec.substr(pos + 5));
  return 2;
}

int run_partition_chain(const RunManifest& m, RecordsWriter& w) {
  GroupPtr g = parse_group_spec(m.get("group"));
  WindowPtr window = Window::prefix(g, m.get_u64("window"));
  WindowedSubset subset = parse_subset_spec(m.get("set"), window);
  int mm = static_cast<int>(m.get_u64_or("m", 2));
  std::size_t levels = m.get_u64("levels");
  int parts_target = static_cast<int>(m.get_u64_or("parts-target",
                                                   static_cast<std::uint64_t>(mm) * mm));

  SubgroupChain chain =
      SubgroupChain::enumeration_power_chain(g, chain_base_for(m, g), levels);
  ChainPartitionResult result =
      chain_partition(subset, chain, greedy_level_partitioner(mm), mm, parts_target);

  w.record("partition", {{"algorithm", "chain"},
                         {"chain", chain.describe()},
                         {"parts-target", std::to_string(parts_target)},
                         {"exceptions", std::to_string(result.total_exceptions)}});
  for (std::size_t p = 0; p < result.parts.size(); ++p)
    w.record("part", {{"index", std::to_string(p)},
                      {"size", std::to_string(result.parts[p].size())},
                      {"elements", elem_list(*g, result.parts[p])}});
  for (const ChainCollisionCheck& c : result.checks) {
    if (c.exceptions.empty()) continue;
    w.record("failure", {{"level", std::to_string(c.level)},
                         {"g", g->format(c.g)},
                         {"part", std::to_string(c.part)},
                         {"exceptions", elem_list(*g, c.exceptions)}});
  }
  return result.total_exceptions == 0 ? 0 : 1;
}

int run_partition(const RunManifest& m, RecordsWriter& w) {
  std::string algorithm = m.get_or("algorithm", "greedy");
  if (algorithm == "greedy") return run_partition_greedy(m, w);
  if (algorithm == "uniform") return run_partition_uniform(m, w);
  if (algorithm == "chain") return run_partition_chain(m, w);
  throw GrammarError("unknown partition algorithm '" + algorithm + "'", 0);
}

int run_color_square(const RunManifest& m, RecordsWriter& w) {
  GroupPtr g = parse_group_spec(m.get("group"));
  std::size_t window_n = m.get_u64("window");
  std::size_t levels = m.get_u64("levels");
  SubgroupChain chain =
      SubgroupChain::enumeration_power_chain(g, chain_base_for(m, g), levels);
  ColoringTable table = chain_three_coloring(g, chain, window_n);
  std::vector<Elem> window = g->prefix(window_n);

  w.record("coloring", {{"chain", chain.describe()},
                        {"window", std::to_string(window_n)},
                        {"colored-pairs", std::to_string(table.size())}});
  w.record("note", {{"text", kColoringNote}});

  if (m.get_u64_or("dump-table", 0) != 0) {
    for (const ColoringTable::Entry& e : table.sorted_entries()) {
      w.record("cell", {{"x", g->format(e.x)},
                        {"y", g->format(e.y)},
                        {"color", std::to_string(e.color)},
                        {"region", table.region_names()[e.region]}});
    }
  }

  if (m.get_u64_or("verify-lines", 0) == 0) return 0;

  std::size_t violations = 0;
  for (const Elem& gg : window) {
    if (g->is_identity(gg)) continue;
    std::size_t level = *chain.level_of(gg);  // g ∈ H_level \ H_{level-1}
    // Horizontal: color-1 points of G×{g} inside G_{alpha+1}×{g}.
    LineCensus horizontal = line_census(table, {LineKind::horizontal, gg}, window);
    for (const ElemPair& p : horizontal.interest_points)
      if (!chain.member_of_level(level, p.first)) ++violations;
    // Vertical: color-2 points of {g}×G inside {g}×G_{alpha+1}.
    LineCensus vertical = line_census(table, {LineKind::vertical, gg}, window);
    for (const ElemPair& p : vertical.interest_points)
      if (!chain.member_of_level(level, p.second)) ++violations;
    // Diagonal: color-3 points of {(x,gx)} inside G_{alpha+1}×G_{alpha+1}.
    LineCensus diagonal = line_census(table, {LineKind::diagonal, gg}, window);
    for (const ElemPair& p : diagonal.interest_points)
      if (!chain.member_of_level(level, p.first) ||
          !chain.member_of_level(level, p.second))
        ++violations;
    w.record("line-census",
             {{"g", g->format(gg)},
              {"level", std::to_string(level)},
              {"horizontal-c1", std::to_string(horizontal.counts[1])},
              {"vertical-c2", std::to_string(vertical.counts[2])},
              {"diagonal-c3", std::to_string(diagonal.counts[3])}});
  }
  w.record("containments", {{"violations", std::to_string(violations)}});
  return violations == 0 ? 0 : 1;
}

Elem embed_left(const Group& product, const GroupPtr& right, const Elem& x) {
  return product_pair(product, x, right->identity());
}

int run_construct_bergman(const RunManifest& m, RecordsWriter& w) {
  GroupPtr H = parse_group_spec(m.get("H"));
  GroupPtr K = parse_group_spec(m.get("K"));
  IndexingMode mode = m.get_or("indexing", "ordered") == "unordered"
                          ? IndexingMode::unordered
                          : IndexingMode::ordered;
  std::uint64_t seed = m.get_u64_or("seed", 1);
  std::size_t pool = m.get_u64_or("k-pool", 10007);

  std::vector<ElemPair> pairs = all_distinct_pairs(H);
  PairIndexing idx = build_pair_indexing(H, K, pairs, pool, mode, seed);
  ConstructionOutput A = bergman_set(H, K, pairs, idx);

  w.record("construct", {{"kind", "bergman"},
                         {"ambient", A.ambient->spec_text()},
                         {"indexing", to_string(mode)},
                         {"seed", std::to_string(seed)},
                         {"size", std::to_string(A.elements.size())},
                         {"audit", A.audit.passed() ? "pass" : "fail"}});

  if (m.get_or("verify", "") != "translate-count") return 0;

  std::size_t expected = mode == IndexingMode::ordered ? 6 : 3;
  bool ok = true;
  std::set<std::vector<Elem>> seen_sets;
  for (const auto& [a, b] : pairs) {
    std::vector<Elem> fset{H->identity(), a, b};
    std::sort(fset.begin(), fset.end());
    if (!seen_sets.insert(fset).second) continue;
    std::vector<Elem> F;
    for (const Elem& h : fset) F.push_back(embed_left(*A.ambient, K, h));
    TranslateCount tc = count_translates_in(F, A);
    if (tc.count != expected) ok = false;
    w.record("translates", {{"F", "{e," + H->format(a) + "," + H->format(b) + "}"},
                            {"count", std::to_string(tc.count)},
                            {"expected", std::to_string(expected)}});
  }
  return ok ? 0 : 1;
}

int run_construct_quadratic(const RunManifest& m, RecordsWriter& w) {
  int d = static_cast<int>(m.get_u64_or("d", 4));
  GroupPtr Hq = make_rational_vector(d);
  GroupPtr K = parse_group_spec(m.get_or("K", "Zmod 10007"));
  int mm = static_cast<int>(m.get_u64_or("m", 2));
  std::size_t n_pairs = m.get_u64_or("pairs", 20);
  std::uint64_t seed = m.get_u64_or("seed", 1);
  IndexingMode mode = m.get_or("indexing", "ordered") == "unordered"
                          ? IndexingMode::unordered
                          : IndexingMode::ordered;

  std::vector<ElemPair> pairs = sample_rational_pairs(Hq, n_pairs, seed);
  PairIndexing idx =
      build_pair_indexing(Hq, K, pairs, m.get_u64_or("k-pool", 10007), mode, seed);
  ConstructionOutput A = quadratic_thin_set(Hq, K, mm, pairs, idx);

  w.record("construct", {{"kind", "quadratic"},
                         {"ambient", A.ambient->spec_text()},
                         {"m", std::to_string(mm)},
                         {"seed", std::to_string(seed)},
                         {"size", std::to_string(A.elements.size())},
                         {"audit", A.audit.passed() ? "pass" : "fail"}});

  if (m.get_or("verify", "") != "collisions") return 0;

  // Zero-K-component arguments realized by actual differences, so the
  // collision sets are nonempty and the explanations must be complete.
  bool ok = true;
  std::size_t explained = 0, members = 0;
  for (const auto& [a, b] : pairs) {
    std::vector<Rational> ca = rational_coords(a), cb = rational_coords(b);
    std::vector<Rational> x2(ca.size()), y2(ca.size());
    for (std::size_t c = 0; c < ca.size(); ++c) {
      x2[c] = ca[c] + cb[c];                             // (1-0)a + (1-0)b
      y2[c] = Rational(2) * ca[c] + Rational(4) * cb[c]; // (2-0)a + (4-0)b
    }
    auto to_elem = [&](const std::vector<Rational>& coords) {
      std::string text;
      if (d > 1) text += '(';
      for (std::size_t c = 0; c < coords.size(); ++c) {
        if (c) text += ',';
        text += coords[c].to_string();
      }
      if (d > 1) text += ')';
      return Hq->parse(text);
    };
    Elem hx = to_elem(x2), hy = to_elem(y2);
    if (Hq->is_identity(hx) || Hq->is_identity(hy) || hx == hy) continue;
    Elem x = product_pair(*A.ambient, K->identity(), hx);
    Elem y = product_pair(*A.ambient, K->identity(), hy);
    for (const CollisionExplanation& ex : explain_zero_k_collisions(A, x, y)) {
      ++members;
      if (ex.ok()) ++explained;
      else ok = false;
    }
  }
  w.record("collision-completeness", {{"members", std::to_string(members)},
                                      {"explained", std::to_string(explained)}});
  return ok ? 0 : 1;
}

int run_construct_direct_sum(const RunManifest& m, RecordsWriter& w) {
  int d = static_cast<int>(m.get_u64_or("d", 2));
  GroupPtr K = parse_group_spec(m.get_or("K", "Zmod 10007"));
  std::uint64_t seed = m.get_u64_or("seed", 1);

  GroupPtr Hq = make_rational_vector(d);
  auto build = [&](int mm, std::uint64_t s) {
    std::vector<ElemPair> pairs = sample_rational_pairs(Hq, m.get_u64_or("pairs", 6), s);
    PairIndexing idx = build_pair_indexing(Hq, K, pairs, 10007,
                                           IndexingMode::ordered, s);
    return quadratic_thin_set(Hq, K, mm, pairs, idx);
  };
  ConstructionOutput left = build(2, seed);          // label n = 2 (m = 2)
  ConstructionOutput right = build(3, seed + 1);     // label n = 5 (m = 3)
  ConstructionOutput A = direct_sum_set(2, left, 5, right);

  w.record("construct", {{"kind", "direct-sum"},
                         {"ambient", A.ambient->spec_text()},
                         {"size", std::to_string(A.elements.size())},
                         {"labels", "2,5"}});

  if (m.get_or("verify", "") != "outside-summand") return 0;

  // |A ∩ (A+x)| <= 1 for every x outside both summands; exact over the whole
  // group because only difference-set x's can give a nonempty intersection.
  const Group& amb = *A.ambient;
  ElemMap<std::size_t> hit_count;
  for (const Elem& alpha : A.elements) {
    for (const Elem& beta : A.elements) {
      Elem x = amb.multiply(beta, amb.invert(alpha));
      const Elem& xl = product_left(x);
      const Elem& xr = product_right(x);
      if (xl == product_left(amb.identity()) || xr == product_right(amb.identity()))
        continue;
      ++hit_count[x];
    }
  }
  std::size_t max_hits = 0;
  for (const auto& [x, count] : hit_count) max_hits = std::max(max_hits, count);
  w.record("outside-summand", {{"difference-xs", std::to_string(hit_count.size())},
                               {"max-intersection", std::to_string(max_hits)}});
  return max_hits <= 1 ? 0 : 1;
}

int run_construct(const RunManifest& m, RecordsWriter& w) {
  std::string kind = m.get("kind");
  if (kind == "bergman") return run_construct_bergman(m, w);
  if (kind == "quadratic") return run_construct_quadratic(m, w);
  if (kind == "direct-sum") return run_construct_direct_sum(m, w);
  throw GrammarError("unknown construction '" + kind + "'", 0);
}

int run_mu(const RunManifest& m, RecordsWriter& w, std::ostream& out) {
  Aleph sizeG = Aleph::parse(m.get("sizeG"));
  Aleph kappa = Aleph::parse(m.get("kappa"));
  MuResult result = mu_thin_partition_number(sizeG, kappa);
  w.record("mu", {{"sizeG", sizeG.to_string()},
                  {"kappa", kappa.to_string()},
                  {"value", result.to_string()},
                  {"branch", std::to_string(result.branch)}});
  if (!w.structured()) out << result.to_string() << "\n";
  return 0;
}

}  // namespace

int run(const RunManifest& manifest, std::ostream& out, std::ostream& err) {
  RecordsWriter w(out, manifest.get_or("format", "text") == "records");
  w.header(manifest);
  int code = 2;
  try {
    std::string command = manifest.get("command");
    if (command == "check-thin")
      code = run_check_thin(manifest, w);
    else if (command == "partition")
      code = run_partition(manifest, w);
    else if (command == "color-square")
      code = run_color_square(manifest, w);
    else if (command == "construct")
      code = run_construct(manifest, w);
    else if (command == "mu")
      code = run_mu(manifest, w, out);
    else
      throw GrammarError("unknown command '" + command + "'", 0);
  } catch (const InputNotThinError& e) {
    w.record("failure", {{"what", e.what()}});
    err << "verification failed: " << e.what() << "\n";
    code = 1;
  } catch (const Error& e) {
    w.record("error", {{"what", e.what()}});
    err << "error: " << e.what() << "\n";
    code = 2;
  }
  w.footer(code);
  return code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"thin-set machinery over computable groups"};
  app.require_subcommand(1);

  RunManifest manifest;
  std::string format = "text";
  app.add_option("--format", format)->check(CLI::IsMember({"text", "records"}));

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option_function<std::string>(
        "--format", [&](const std::string& v) { format = v; });
  };

  std::string group, set, radius = "F8", schedule = "auto";
  std::uint64_t window = 1024, bound = 0, mm = 1, seed = 1;

  CLI::App* check = app.add_subcommand("check-thin", "m-thin window check");
  check->add_option("--group", group)->required();
  check->add_option("--set", set)->required();
  check->add_option("--radius", radius);
  check->add_option("--m", mm);
  check->add_option("--window", window);
  check->add_option("--bound", bound);
  add_common(check);

  std::string algorithm = "greedy";
  std::uint64_t uradius = 2, vradius = 1, mu_colors = 2, levels = 4, parts_target = 0,
                chain_base = 0;
  CLI::App* part = app.add_subcommand("partition", "partition into thin parts");
  part->add_option("--group", group)->required();
  part->add_option("--set", set)->required();
  part->add_option("--m", mm);
  part->add_option("--window", window);
  part->add_option("--bound", bound);
  part->add_option("--schedule", schedule);
  part->add_option("--algorithm", algorithm)
      ->check(CLI::IsMember({"greedy", "uniform", "chain"}));
  part->add_option("--u-radius", uradius);
  part->add_option("--v-radius", vradius);
  part->add_option("--mu", mu_colors);
  part->add_option("--levels", levels);
  part->add_option("--parts-target", parts_target);
  part->add_option("--chain-base", chain_base);
  add_common(part);

  bool verify_lines = false, dump_table = false;
  CLI::App* color = app.add_subcommand("color-square", "three-coloring of G×G");
  color->add_option("--group", group)->required();
  color->add_option("--levels", levels);
  color->add_option("--window", window);
  color->add_option("--chain-base", chain_base);
  color->add_flag("--verify-lines", verify_lines);
  color->add_flag("--dump-table", dump_table);
  add_common(color);

  std::string kind, h_spec, k_spec = "Zmod 10007", indexing = "ordered", verify;
  std::uint64_t d = 4, pairs_n = 20;
  CLI::App* construct = app.add_subcommand("construct", "counterexample sets");
  construct->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"bergman", "quadratic", "direct-sum"}));
  construct->add_option("--H", h_spec);
  construct->add_option("--K", k_spec);
  construct->add_option("--indexing", indexing)
      ->check(CLI::IsMember({"ordered", "unordered"}));
  construct->add_option("--seed", seed);
  construct->add_option("--d", d);
  construct->add_option("--m", mm);
  construct->add_option("--pairs", pairs_n);
  construct->add_option("--verify", verify);
  add_common(construct);

  std::string size_g, kappa;
  CLI::App* mu_cmd = app.add_subcommand("mu", "partition-number formula");
  mu_cmd->add_option("--sizeG", size_g)->required();
  mu_cmd->add_option("--kappa", kappa)->required();
  add_common(mu_cmd);

  std::string replay_file;
  CLI::App* replay = app.add_subcommand("replay", "re-run a serialized manifest");
  replay->add_option("file", replay_file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (replay->parsed()) {
    std::ifstream in(replay_file);
    if (!in) {
      err << "error: cannot open " << replay_file << "\n";
      return 2;
    }
    std::string line;
    while (std::getline(in, line)) {
      if (line.rfind("manifest", 0) == 0 ||
          line.rfind("# manifest", 0) == 0) {
        std::string body = line[0] == '#' ? line.substr(2) : line;
        try {
          return run(RunManifest::from_line(body), out, err);
        } catch (const Error& e) {
          err << "error: " << e.what() << "\n";
          return 2;
        }
      }
    }
    err << "error: no manifest line in " << replay_file << "\n";
    return 2;
  }

  manifest.set("format", format);
  if (check->parsed()) {
    manifest.set("command", "check-thin");
    manifest.set("group", group);
    manifest.set("set", set);
    manifest.set("radius", radius);
    manifest.set("m", mm);
    manifest.set("window", window);
    manifest.set("bound", bound);
  } else if (part->parsed()) {
    manifest.set("command", "partition");
    manifest.set("algorithm", algorithm);
    manifest.set("group", group);
    manifest.set("set", set);
    manifest.set("m", mm);
    manifest.set("window", window);
    manifest.set("schedule", schedule);
    if (part->count("--bound")) manifest.set("bound", bound);
    if (algorithm == "uniform") {
      manifest.set("uradius", uradius);
      manifest.set("vradius", vradius);
      manifest.set("mu", mu_colors);
    }
    if (algorithm == "chain") {
      manifest.set("levels", levels);
      if (parts_target) manifest.set("parts-target", parts_target);
      if (chain_base) manifest.set("chain-base", chain_base);
    }
  } else if (color->parsed()) {
    manifest.set("command", "color-square");
    manifest.set("group", group);
    manifest.set("levels", levels);
    manifest.set("window", window);
    manifest.set("verify-lines", static_cast<std::uint64_t>(verify_lines ? 1 : 0));
    manifest.set("dump-table", static_cast<std::uint64_t>(dump_table ? 1 : 0));
    if (chain_base) manifest.set("chain-base", chain_base);
  } else if (construct->parsed()) {
    manifest.set("command", "construct");
    manifest.set("kind", kind);
    if (!h_spec.empty()) manifest.set("H", h_spec);
    manifest.set("K", k_spec);
    manifest.set("indexing", indexing);
    manifest.set("seed", seed);
    manifest.set("d", d);
    if (construct->count("--m")) manifest.set("m", mm);
    manifest.set("pairs", pairs_n);
    if (!verify.empty()) manifest.set("verify", verify);
  } else if (mu_cmd->parsed()) {
    manifest.set("command", "mu");
    manifest.set("sizeG", size_g);
    manifest.set("kappa", kappa);
  }

  return run(manifest, out, err);
}

}  // namespace thinset
