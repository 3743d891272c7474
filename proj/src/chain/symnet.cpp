#include "tqu/chain/symnet.hpp"

#include <algorithm>
#include <numeric>

#include "tqu/errors.hpp"

namespace tqu::chain {

namespace {

constexpr std::uint64_t kMaxCycle = std::uint64_t{1} << 16;

bool increasing(Model m) { return m == Model::increasing; }

// Level of the whole space: ⊤ for the increasing chain, N_0 for the decreasing one.
std::uint64_t top_level(Model m) { return increasing(m) ? kTop : 0; }

UPSet level_set(Model m, std::uint64_t level) {
  if (increasing(m)) return level == kTop ? UPSet::naturals() : UPSet::below(level);
  return UPSet::from(level);
}

// Does N_a ⊆ N_b?
bool level_leq(Model m, std::uint64_t a, std::uint64_t b) { return increasing(m) ? a <= b : a >= b; }

std::optional<std::vector<ChainStep>> cycle_view(Model m, const NetTail& tail) {
  if (const auto* c = std::get_if<ChainTail>(&tail)) return c->cycle;
  if (std::holds_alternative<TotalTail>(tail)) return std::vector<ChainStep>{{top_level(m), false}};
  return std::nullopt;
}

ChainStep step_at(const std::vector<ChainStep>& cycle, std::uint64_t start, std::uint64_t x) {
  const std::uint64_t len = cycle.size();
  const ChainStep& s = cycle[(x - start) % len];
  if (!s.advancing) return s;
  return {s.level + (x - start) / len * len, true};
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t l = std::lcm(a, b);
  if (l > kMaxCycle) throw ResourceError("combined level period " + std::to_string(l) + " is too long");
  return l;
}

void check_model(const SymNet& u1, const SymNet& u2) {
  if (u1.model() != u2.model()) {
    throw InputError("nets belong to different models (" + to_string(u1.model()) + ", " + to_string(u2.model()) + ")");
  }
}

// Least k >= 0 with a + k*len >= c.
std::uint64_t crossing(std::uint64_t a, std::uint64_t c, std::uint64_t len) {
  return c > a ? (c - a + len - 1) / len : 0;
}

}  // namespace

SymNet::SymNet(Model model, std::vector<UPSet> exceptions, NetTail tail)
    : model_(model), exceptions_(std::move(exceptions)), tail_(std::move(tail)) {
  if (exceptions_.size() > kMaxExceptions) {
    throw ResourceError("net has more than " + std::to_string(kMaxExceptions) + " explicit values");
  }
  for (std::uint64_t x = 0; x < exceptions_.size(); ++x) {
    if (!exceptions_[x].contains(x)) {
      throw InputError("value " + exceptions_[x].to_string() + " at " + std::to_string(x) + " misses its own point");
    }
  }
  if (const auto* c = std::get_if<ChainTail>(&tail_)) {
    if (c->cycle.empty()) throw InputError("chain tail needs at least one level");
    if (c->cycle.size() > kMaxCycle) throw ResourceError("chain tail cycle is too long");
    const std::uint64_t p = start();
    for (std::uint64_t r = 0; r < c->cycle.size(); ++r) {
      const ChainStep& s = c->cycle[r];
      const std::string where = "tail level at " + std::to_string(p + r);
      if (increasing(model_)) {
        if (s.advancing && (s.level == kTop || s.level < p + r + 1)) throw InputError(where + " misses its own point");
        if (!s.advancing && s.level != kTop) {
          throw InputError(where + ": a constant finite level eventually misses its points");
        }
      } else if (s.level == kTop || s.level > p + r) {
        throw InputError(where + " misses its own point");
      }
    }
  }
  canonicalize();
}

void SymNet::canonicalize() {
  if (auto* c = std::get_if<ChainTail>(&tail_)) {
    auto& cycle = c->cycle;
    const std::size_t len = cycle.size();
    for (std::size_t d = 1; d < len; ++d) {
      if (len % d != 0) continue;
      bool repeats = true;
      for (std::size_t r = 0; r + d < len && repeats; ++r) {
        const ChainStep& a = cycle[r];
        const ChainStep& b = cycle[r + d];
        repeats = a.advancing == b.advancing && b.level == (a.advancing ? a.level + d : a.level);
      }
      if (repeats) {
        cycle.resize(d);
        break;
      }
    }
    const ChainStep whole{top_level(model_), false};
    if (std::all_of(cycle.begin(), cycle.end(), [&](const ChainStep& s) { return s == whole; })) tail_ = TotalTail{};
  }
  while (!exceptions_.empty()) {
    const std::uint64_t x = start() - 1;
    std::optional<ChainStep> moved;
    UPSet predicted;
    if (std::holds_alternative<TotalTail>(tail_)) {
      predicted = UPSet::naturals();
    } else if (std::holds_alternative<DiagonalTail>(tail_)) {
      predicted = UPSet::finite({x});
    } else {
      const auto& cycle = std::get<ChainTail>(tail_).cycle;
      ChainStep last = cycle.back();
      if (last.advancing) {
        if (last.level < cycle.size() + (increasing(model_) ? 1 : 0)) break;
        last.level -= cycle.size();
      }
      moved = last;
      predicted = level_set(model_, last.level);
    }
    if (exceptions_.back() != predicted) break;
    exceptions_.pop_back();
    if (moved) {
      auto& cycle = std::get<ChainTail>(tail_).cycle;
      cycle.pop_back();
      cycle.insert(cycle.begin(), *moved);
    }
  }
}

UPSet SymNet::value(std::uint64_t x) const {
  if (x < start()) return exceptions_[x];
  if (std::holds_alternative<DiagonalTail>(tail_)) return UPSet::finite({x});
  return level_set(model_, *level(x));
}

std::optional<std::uint64_t> SymNet::level(std::uint64_t x) const {
  if (x < start()) return std::nullopt;
  const auto cycle = cycle_view(model_, tail_);
  if (!cycle) return std::nullopt;
  return step_at(*cycle, start(), x).level;
}

SymNet symnet_from_cover(const SymCover& c) {
  const Model m = c.model;
  // Chain indices whose N_i belong to the cover.
  const UPSet kept = c.excluded.complement() - UPSet::finite({0});
  const auto level_of = [&](std::uint64_t x) -> std::uint64_t {
    if (increasing(m)) {
      for (std::uint64_t i = x + 1;; ++i) {
        if (kept.contains(i)) return i;
      }
    }
    for (std::uint64_t i = x; i >= 1; --i) {
      if (kept.contains(i)) return i;
    }
    return 0;
  };
  std::uint64_t start = 0;
  NetTail tail = TotalTail{};
  if (kept.is_finite()) {
    if (!kept.is_empty()) {
      start = *kept.max_element();
      if (!increasing(m)) tail = ChainTail{{{start, false}}};
    }
  } else {
    const std::uint64_t p = kept.prefix_length(), q = kept.period_length();
    start = increasing(m) ? p : p + q;
    ChainTail chain;
    for (std::uint64_t r = 0; r < q; ++r) chain.cycle.push_back({level_of(start + r), true});
    tail = std::move(chain);
  }
  if (start > SymNet::kMaxExceptions) throw ResourceError("cover description is too long");
  std::vector<UPSet> exceptions;
  for (std::uint64_t x = 0; x < start; ++x) exceptions.push_back(level_set(m, level_of(x)));
  return SymNet(m, std::move(exceptions), std::move(tail));
}

SymNet symnet_from_family(Model m, const std::vector<UPSet>& beta) {
  const CountableModel cm{m};
  std::uint64_t start = 0;
  for (const UPSet& b : beta) {
    if (!cm.in_lbase(b)) throw InputError(b.to_string() + " is not in the l-base of " + to_string(m));
    if (increasing(m) && b.is_finite() && !b.is_empty()) start = std::max(start, *b.max_element() + 1);
    if (!increasing(m) && !b.is_empty()) start = std::max(start, *cm.chain_index(b));
  }
  if (start > SymNet::kMaxExceptions) throw ResourceError("l-base family is too large");
  std::vector<UPSet> exceptions;
  for (std::uint64_t x = 0; x < start; ++x) {
    UPSet v = UPSet::naturals();
    for (const UPSet& b : beta) {
      if (b.contains(x)) v = v & b;
    }
    exceptions.push_back(std::move(v));
  }
  NetTail tail = TotalTail{};
  if (!increasing(m)) tail = ChainTail{{{start, false}}};
  return SymNet(m, std::move(exceptions), std::move(tail));
}

SymNet diagonal_net(Model m) { return SymNet(m, {}, DiagonalTail{}); }
SymNet total_net(Model m) { return SymNet(m, {}, TotalTail{}); }

SymNet symnet_intersect(const SymNet& u1, const SymNet& u2) {
  check_model(u1, u2);
  const Model m = u1.model();
  std::uint64_t start = std::max(u1.start(), u2.start());
  NetTail tail = DiagonalTail{};
  const auto c1 = cycle_view(m, u1.tail()), c2 = cycle_view(m, u2.tail());
  if (c1 && c2) {
    const std::uint64_t len = checked_lcm(c1->size(), c2->size());
    // Where one residue advances and the other does not, the pointwise
    // winner switches once; start the tail after every switch.
    std::uint64_t k = 0;
    for (std::uint64_t r = 0; r < len; ++r) {
      const ChainStep s1 = step_at(*c1, u1.start(), start + r), s2 = step_at(*c2, u2.start(), start + r);
      if (s1.advancing == s2.advancing) continue;
      const ChainStep& adv = s1.advancing ? s1 : s2;
      const ChainStep& flat = s1.advancing ? s2 : s1;
      if (flat.level != kTop) k = std::max(k, crossing(adv.level, flat.level, len));
    }
    if (k > SymNet::kMaxExceptions / len) throw ResourceError("intersection tail starts too late");
    start += k * len;
    ChainTail chain;
    for (std::uint64_t r = 0; r < len; ++r) {
      const ChainStep s1 = step_at(*c1, u1.start(), start + r), s2 = step_at(*c2, u2.start(), start + r);
      if (s1.advancing == s2.advancing) {
        chain.cycle.push_back({increasing(m) ? std::min(s1.level, s2.level) : std::max(s1.level, s2.level),
                               s1.advancing});
        continue;
      }
      const ChainStep& adv = s1.advancing ? s1 : s2;
      const ChainStep& flat = s1.advancing ? s2 : s1;
      chain.cycle.push_back(increasing(m) && flat.level != kTop ? flat : adv);
    }
    tail = std::move(chain);
  }
  if (start > SymNet::kMaxExceptions) throw ResourceError("intersection has too many explicit values");
  std::vector<UPSet> exceptions;
  for (std::uint64_t x = 0; x < start; ++x) exceptions.push_back(u1.value(x) & u2.value(x));
  return SymNet(m, std::move(exceptions), std::move(tail));
}

std::uint64_t decision_window(const std::vector<const SymNet*>& nets) {
  std::uint64_t start = 0, len = 1, top = 0;
  for (const SymNet* u : nets) {
    start = std::max(start, u->start());
    for (const UPSet& e : u->exceptions()) top = std::max<std::uint64_t>(top, e.prefix_length() + e.period_length());
    if (const auto cycle = cycle_view(u->model(), u->tail())) {
      len = checked_lcm(len, cycle->size());
      for (const ChainStep& s : *cycle) {
        if (s.level != kTop) top = std::max(top, s.level);
      }
    }
  }
  return start + ((top + len - 1) / len + 2) * len;
}

bool symnet_leq(const SymNet& u1, const SymNet& u2) {
  check_model(u1, u2);
  const std::uint64_t window = decision_window({&u1, &u2});
  for (std::uint64_t x = 0; x < window; ++x) {
    const auto l1 = u1.level(x), l2 = u2.level(x);
    if (l1 && l2) {
      if (!level_leq(u1.model(), *l1, *l2)) return false;
    } else if (!u1.value(x).subset_of(u2.value(x))) {
      return false;
    }
  }
  return true;
}

bool symnet_equal(const SymNet& u1, const SymNet& u2) { return symnet_leq(u1, u2) && symnet_leq(u2, u1); }

bool is_transitive(const SymNet& u) {
  const std::uint64_t window = decision_window({&u});
  std::vector<UPSet> values;
  for (std::uint64_t x = 0; x < window; ++x) values.push_back(u.value(x));
  for (std::uint64_t x = 0; x < window; ++x) {
    if (values[x] == UPSet::naturals()) continue;
    const auto lx = u.level(x);
    for (std::uint64_t y = 0; y < window; ++y) {
      if (!values[x].contains(y)) continue;
      const auto ly = u.level(y);
      if (lx && ly ? !level_leq(u.model(), *ly, *lx) : !values[y].subset_of(values[x])) return false;
    }
  }
  return true;
}

std::string SetDescriptor::to_string() const {
  switch (kind) {
    case Kind::chain_element: return "N_" + std::to_string(index) + " = " + set.to_string();
    case Kind::whole: return "whole space";
    case Kind::explicit_set: break;
  }
  return set.to_string();
}

SetDescriptor describe(Model m, const UPSet& s) {
  if (s == UPSet::naturals()) return {SetDescriptor::Kind::whole, 0, s};
  if (const auto j = CountableModel{m}.chain_index(s)) return {SetDescriptor::Kind::chain_element, *j, s};
  return {SetDescriptor::Kind::explicit_set, 0, s};
}

SetDescriptor symnet_image(const SymNet& u, const UPSet& s) {
  const Model m = u.model();
  const std::uint64_t start = u.start();
  UPSet result;
  for (std::uint64_t x = 0; x < start; ++x) {
    if (s.contains(x)) result = result | u.exceptions()[x];
  }
  const UPSet rest = s & UPSet::from(start);
  if (rest.is_empty()) return describe(m, result);
  if (std::holds_alternative<TotalTail>(u.tail())) return describe(m, UPSet::naturals());
  if (std::holds_alternative<DiagonalTail>(u.tail())) return describe(m, result | rest);

  const auto& cycle = std::get<ChainTail>(u.tail()).cycle;
  if (increasing(m)) {
    // Every residue is ⊤ or advancing, so infinitely many points reach ℕ.
    if (!rest.is_finite()) return describe(m, UPSet::naturals());
    std::uint64_t top = 0;
    for (std::uint64_t x : rest.elements()) top = std::max(top, *u.level(x));
    return describe(m, result | level_set(m, top));
  }
  // Levels grow along each residue, so the first hit per residue is the least.
  const std::uint64_t horizon = std::max<std::uint64_t>(start, rest.prefix_length()) +
                                checked_lcm(cycle.size(), rest.period_length());
  std::uint64_t least = kTop;
  for (std::uint64_t x = start; x < horizon; ++x) {
    if (rest.contains(x)) least = std::min(least, *u.level(x));
  }
  return describe(m, result | level_set(m, least));
}

UPSet value_levels(const SymNet& u) {
  const Model m = u.model();
  const CountableModel cm{m};
  std::vector<std::uint64_t> listed;
  UPSet levels;
  for (std::uint64_t x = 0; x < u.start(); ++x) {
    const UPSet& v = u.exceptions()[x];
    if (v == UPSet::naturals()) continue;
    const auto j = cm.chain_index(v);
    if (!j) throw InputError("value " + v.to_string() + " at " + std::to_string(x) + " is not a chain element");
    listed.push_back(*j);
  }
  if (std::holds_alternative<DiagonalTail>(u.tail())) throw InputError("diagonal values are not chain elements");
  if (const auto* c = std::get_if<ChainTail>(&u.tail())) {
    for (std::uint64_t r = 0; r < c->cycle.size(); ++r) {
      const ChainStep& s = c->cycle[r];
      if (s.advancing) {
        levels = levels | UPSet::progression(s.level, c->cycle.size());
      } else if (s.level != kTop && s.level != 0) {
        listed.push_back(s.level);
      }
    }
  }
  std::erase(listed, std::uint64_t{0});
  return levels | UPSet::finite(listed);
}

nlohmann::json to_json(const SymNet& u) {
  nlohmann::json exceptions = nlohmann::json::object();
  for (std::uint64_t x = 0; x < u.start(); ++x) exceptions[std::to_string(x)] = u.exceptions()[x].to_string();
  nlohmann::json tail;
  if (const auto* c = std::get_if<ChainTail>(&u.tail())) {
    nlohmann::json levels = nlohmann::json::array();
    for (const ChainStep& s : c->cycle) {
      levels.push_back({{"level", s.level == kTop ? nlohmann::json("top") : nlohmann::json(s.level)},
                        {"advancing", s.advancing}});
    }
    tail = {{"kind", "chain"}, {"levels", levels}};
  } else if (std::holds_alternative<DiagonalTail>(u.tail())) {
    tail = {{"kind", "diagonal"}};
  } else {
    tail = {{"kind", "total"}};
  }
  return {{"model", to_string(u.model())}, {"exceptions", exceptions}, {"tail", tail}};
}

SymNet symnet_from_json(const nlohmann::json& j) {
  try {
    const Model m = parse_model(j.at("model").get<std::string>());
    std::vector<UPSet> exceptions;
    const auto& ex = j.contains("exceptions") ? j.at("exceptions") : nlohmann::json::object();
    if (!ex.is_object()) throw InputError("net exceptions must be an object keyed by point");
    exceptions.resize(ex.size());
    std::vector<bool> seen(ex.size());
    for (const auto& [key, value] : ex.items()) {
      std::size_t used = 0;
      const unsigned long long x = std::stoull(key, &used);
      if (used != key.size() || x >= ex.size() || seen[x]) {
        throw InputError("net exceptions must be keyed by the points 0.." + std::to_string(ex.size() - 1));
      }
      seen[x] = true;
      exceptions[x] = UPSet::from_json(value);
    }
    const auto& t = j.at("tail");
    const std::string kind = t.at("kind").get<std::string>();
    NetTail tail;
    if (kind == "total") {
      tail = TotalTail{};
    } else if (kind == "diagonal") {
      tail = DiagonalTail{};
    } else if (kind == "chain") {
      ChainTail chain;
      for (const auto& s : t.at("levels")) {
        const auto& level = s.at("level");
        chain.cycle.push_back({level.is_string() && level.get<std::string>() == "top" ? kTop
                                                                                        : level.get<std::uint64_t>(),
                               s.at("advancing").get<bool>()});
      }
      tail = std::move(chain);
    } else {
      throw InputError("unknown net tail kind '" + kind + "'");
    }
    return SymNet(m, std::move(exceptions), std::move(tail));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed net JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw InputError(std::string("malformed net JSON: ") + e.what());
  }
}

}  // namespace tqu::chain
