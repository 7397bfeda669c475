#include "thinset/window.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "thinset/constructions.hpp"

namespace thinset {

Window::Window(GroupPtr g, std::vector<Elem> elems, std::string describe)
    : group_(std::move(g)), elems_(std::move(elems)), describe_(std::move(describe)) {
  pos_.reserve(elems_.size() * 2);
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    auto [it, fresh] = pos_.emplace(elems_[i], i);
    if (!fresh) throw Error("window contains duplicate element " + elems_[i].repr());
  }
}

std::shared_ptr<const Window> Window::prefix(GroupPtr g, std::size_t n) {
  std::vector<Elem> elems = g->prefix(n);
  std::string desc = "prefix " + std::to_string(n) + " of " + g->spec_text();
  return std::shared_ptr<const Window>(new Window(std::move(g), std::move(elems), desc));
}

std::shared_ptr<const Window> Window::of_elements(GroupPtr g, std::vector<Elem> elems,
                                                  std::string describe) {
  for (const Elem& e : elems) g->require_mine(e, "window");
  return std::shared_ptr<const Window>(
      new Window(std::move(g), std::move(elems), std::move(describe)));
}

std::optional<std::size_t> Window::position(const Elem& x) const {
  auto it = pos_.find(x);
  if (it == pos_.end()) return std::nullopt;
  return it->second;
}

WindowedSubset::WindowedSubset(WindowPtr w, std::vector<Elem> members,
                               std::string describe)
    : window_(std::move(w)), members_(std::move(members)), describe_(std::move(describe)) {
  member_set_.reserve(members_.size() * 2);
  for (const Elem& e : members_) member_set_.insert(e);
}

WindowedSubset WindowedSubset::from_predicate(
    WindowPtr w, const std::function<bool(const Elem&)>& pred, std::string describe) {
  std::vector<Elem> members;
  for (const Elem& e : w->elements())
    if (pred(e)) members.push_back(e);
  return WindowedSubset(std::move(w), std::move(members), std::move(describe));
}

WindowedSubset WindowedSubset::of_elements(WindowPtr w, const std::vector<Elem>& elems,
                                           std::string describe) {
  ElemSet seen;
  std::vector<Elem> members;
  for (const Elem& e : elems) {
    if (!w->contains(e))
      throw Error("subset element " + e.repr() + " is outside the window");
    if (seen.insert(e).second) members.push_back(e);
  }
  // Keep window order so bounds mean the same thing everywhere.
  std::sort(members.begin(), members.end(), [&](const Elem& a, const Elem& b) {
    return *w->position(a) < *w->position(b);
  });
  return WindowedSubset(std::move(w), std::move(members), std::move(describe));
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::int64_t int_pow(std::int64_t base, int exp) {
  std::int64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > (INT64_MAX / base)) throw OverflowError("power overflows");
    v *= base;
  }
  return v;
}

}  // namespace

WindowedSubset parse_subset_spec(std::string_view text, WindowPtr w) {
  std::string s(text);
  std::istringstream in(s);
  std::string head;
  in >> head;
  const GroupPtr& g = w->group();
  bool is_z = g->spec_text() == "Z^1";

  auto z_value = [&](const Elem& e) { return e.int_value(); };

  if (head == "explicit" || (!head.empty() && head[0] == '{')) {
    std::size_t open = s.find('{');
    std::size_t close = s.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close < open)
      throw GrammarError("explicit subset must look like {x1,x2,...}", 0);
    std::string body = s.substr(open + 1, close - open - 1);
    std::vector<Elem> elems;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i < body.size() && (body[i] == '(' || body[i] == '[')) ++depth;
      if (i < body.size() && (body[i] == ')' || body[i] == ']')) --depth;
      if (i == body.size() || (body[i] == ',' && depth == 0)) {
        std::string part = body.substr(start, i - start);
        std::size_t b = part.find_first_not_of(" \t");
        if (b != std::string::npos) elems.push_back(g->parse(part));
        start = i + 1;
      }
    }
    return WindowedSubset::of_elements(std::move(w), elems, "explicit {" + body + "}");
  }

  if (head == "evens") {
    if (!is_z) throw GrammarError("'evens' is defined over Z^1 only", 0);
    return WindowedSubset::from_predicate(
        std::move(w), [&](const Elem& e) { return z_value(e) % 2 == 0; }, "evens");
  }

  if (head == "powers" || head == "pairs" || head == "cluster") {
    if (!is_z) throw GrammarError("'" + head + "' is defined over Z^1 only", 0);
    std::string base_text;
    in >> base_text;
    // Accept "10" or "10^n".
    std::size_t caret = base_text.find('^');
    if (caret != std::string::npos) base_text = base_text.substr(0, caret);
    if (base_text.empty()) throw GrammarError("missing base in subset spec", 0);
    std::int64_t base = std::stoll(base_text);
    if (base < 2) throw GrammarError("subset base must be >= 2", 0);
    std::int64_t width = 1;
    if (head == "pairs") width = 2;
    if (head == "cluster") {
      in >> width;
      if (width < 1) throw GrammarError("cluster width must be >= 1", 0);
    }
    // Collect { base^n + j : n >= 1, 0 <= j < width } inside the window.
    ElemSet members;
    std::vector<Elem> ordered;
    for (int n = 1;; ++n) {
      std::int64_t p;
      try {
        p = int_pow(base, n);
      } catch (const OverflowError&) {
        break;
      }
      bool any = false;
      for (std::int64_t j = 0; j < width; ++j) {
        Elem e = g->parse(std::to_string(p + j));
        if (w->contains(e) && members.insert(e).second) {
          ordered.push_back(e);
          any = true;
        }
      }
      if (!any && p > 0 && !w->contains(g->parse(std::to_string(p)))) break;
    }
    std::string desc = head + " " + std::to_string(base) + "^n";
    if (head == "cluster") desc += " " + std::to_string(width);
    return WindowedSubset::of_elements(std::move(w), ordered, desc);
  }

  if (head == "construction") {
    // "construction bergman; H=Zmod 5; K=Zmod 10007; indexing=ordered; seed=7"
    // The window group must be the construction's ambient product group.
    std::string kind;
    in >> kind;
    while (!kind.empty() && (kind.back() == ';' || kind.back() == ' ')) kind.pop_back();
    std::map<std::string, std::string> kv;
    std::size_t semi = s.find(';');
    while (semi != std::string::npos) {
      std::size_t next = s.find(';', semi + 1);
      std::string part = s.substr(semi + 1, next == std::string::npos
                                                ? std::string::npos
                                                : next - semi - 1);
      std::size_t eq = part.find('=');
      if (eq == std::string::npos)
        throw GrammarError("construction parameters must look like key=value", semi);
      auto strip = [](std::string v) {
        std::size_t b = v.find_first_not_of(" \t");
        std::size_t e = v.find_last_not_of(" \t;");
        return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
      };
      kv[strip(part.substr(0, eq))] = strip(part.substr(eq + 1));
      semi = next;
    }
    return construction_subset(kind, kv, std::move(w));
  }

  if (head == "random") {
    std::int64_t percent = 0;
    std::string kw;
    std::uint64_t seed = 0;
    in >> percent >> kw >> seed;
    if (kw != "seed" || percent < 0 || percent > 100)
      throw GrammarError("random subset spec must look like 'random 10 seed 7'", 0);
    auto pred = [seed, percent](const Elem& e) {
      return splitmix64(e.hash() ^ splitmix64(seed)) % 100 < static_cast<std::uint64_t>(percent);
    };
    return WindowedSubset::from_predicate(std::move(w), pred,
                                          "random " + std::to_string(percent) +
                                              " seed " + std::to_string(seed));
  }

  throw GrammarError("unknown subset spec '" + head + "'", 0);
}

}  // namespace thinset
