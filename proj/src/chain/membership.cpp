#include "tqu/chain/membership.hpp"

#include <algorithm>

#include "tqu/errors.hpp"

namespace tqu::chain {

namespace {

std::vector<UPSet> chain_prefix(Model m, std::uint64_t count) {
  std::vector<UPSet> out;
  for (std::uint64_t i = 1; i <= count; ++i) out.push_back(CountableModel{m}.chain_element(i));
  return out;
}

VDeltaResult in_vdelta_increasing(const SymNet& u) {
  if (const auto* c = std::get_if<ChainTail>(&u.tail())) {
    for (std::uint64_t r = 0; r < c->cycle.size(); ++r) {
      if (c->cycle[r].level != kTop) return NonMember{CofinalNonTop{u.start() + r, c->cycle.size()}};
    }
  }
  if (std::holds_alternative<DiagonalTail>(u.tail())) return NonMember{CofinalNonTop{u.start(), 1}};

  // Transitivity forces every value other than ℕ to be finite here, and
  // U_β with β the values themselves lies below u by reflexivity.
  std::vector<UPSet> values;
  for (const UPSet& v : u.exceptions()) {
    if (v != UPSet::naturals() && std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
  }
  if (values.empty()) values.push_back(UPSet::naturals());
  return Member{values};
}

VDeltaResult in_vdelta_decreasing(const SymNet& u) {
  if (std::holds_alternative<DiagonalTail>(u.tail())) return NonMember{PointFailure{u.start()}};
  std::uint64_t top = u.start();
  if (const auto* c = std::get_if<ChainTail>(&u.tail())) {
    for (std::uint64_t r = 0; r < c->cycle.size(); ++r) {
      if (c->cycle[r].advancing) return NonMember{UnboundedLevels{u.start() + r, c->cycle.size()}};
      top = std::max(top, c->cycle[r].level);
    }
  }
  // U_β(x) ⊇ N_x always, and β = {N_1..N_M} attains N_min(x,M).
  for (std::uint64_t x = 0; x < u.start(); ++x) {
    if (!UPSet::from(x).subset_of(u.exceptions()[x])) return NonMember{PointFailure{x}};
  }
  auto beta = chain_prefix(Model::decreasing, top);
  if (beta.empty()) beta.push_back(UPSet::naturals());
  return Member{beta};
}

}  // namespace

VDeltaResult in_vdelta(const SymNet& u, Model m) {
  if (u.model() != m) throw InputError("net belongs to " + to_string(u.model()) + ", not " + to_string(m));
  if (!is_transitive(u)) throw InputError("in_vdelta needs a transitive net");
  return m == Model::increasing ? in_vdelta_increasing(u) : in_vdelta_decreasing(u);
}

bool replay(const SymNet& u, const Certificate& c, std::uint64_t samples) {
  if (const auto* n = std::get_if<CofinalNonTop>(&c)) {
    if (u.model() != Model::increasing || n->stride == 0) return false;
    for (std::uint64_t k = 0; k < samples; ++k) {
      if (u.value(n->start + k * n->stride) == UPSet::naturals()) return false;
    }
    return true;
  }
  if (const auto* n = std::get_if<UnboundedLevels>(&c)) {
    if (u.model() != Model::decreasing || n->stride == 0) return false;
    std::optional<std::uint64_t> previous;
    for (std::uint64_t k = 0; k < samples; ++k) {
      const auto level = u.level(n->start + k * n->stride);
      if (!level || (previous && *level != *previous + n->stride)) return false;
      previous = level;
    }
    return true;
  }
  const auto x = std::get<PointFailure>(c).x;
  return u.model() == Model::decreasing && !UPSet::from(x).subset_of(u.value(x));
}

std::string to_string(const VDeltaResult& r) {
  if (const auto* m = std::get_if<Member>(&r)) {
    std::string s = "member: beta={";
    for (std::size_t i = 0; i < m->beta.size(); ++i) s += (i ? ", " : "") + m->beta[i].to_string();
    return s + "}";
  }
  const auto& c = std::get<NonMember>(r).certificate;
  if (const auto* n = std::get_if<CofinalNonTop>(&c)) {
    return "non-member: value differs from the whole space at " + std::to_string(n->start) + " + k*" +
           std::to_string(n->stride);
  }
  if (const auto* n = std::get_if<UnboundedLevels>(&c)) {
    return "non-member: levels unbounded along " + std::to_string(n->start) + " + k*" + std::to_string(n->stride);
  }
  return "non-member: value at " + std::to_string(std::get<PointFailure>(c).x) + " misses N_x";
}

QUPresentation qu_presentation(Model m, std::vector<SymNet> nets) {
  std::vector<SymNet> closed;
  auto add = [&](SymNet u) {
    for (const SymNet& v : closed) {
      if (symnet_equal(u, v)) return false;
    }
    if (closed.size() == kMaxExtraNets) {
      throw ResourceError("presentation closure exceeds " + std::to_string(kMaxExtraNets) + " nets");
    }
    closed.push_back(std::move(u));
    return true;
  };
  for (SymNet& u : nets) {
    if (u.model() != m) throw InputError("net belongs to " + to_string(u.model()) + ", not " + to_string(m));
    if (!is_transitive(u)) throw InputError("presentation nets must be transitive");
    add(std::move(u));
  }
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) add(symnet_intersect(closed[i], closed[j]));
  }
  return QUPresentation{m, true, std::move(closed)};
}

ClassResult pi_delta_membership(const QUPresentation& q) {
  const CountableModel cm{q.model};
  for (std::size_t i = 0; i < q.extra.size(); ++i) {
    const SymNet& u = q.extra[i];
    for (std::uint64_t x = 0; x < u.start(); ++x) {
      if (!cm.in_lbase(u.exceptions()[x])) return NotInClass{i, UPSet::finite({x}), u.exceptions()[x]};
    }
    // Chain and total tails only produce chain elements, their unions and ℕ.
    if (std::holds_alternative<DiagonalTail>(u.tail())) {
      const UPSet subset =
          q.model == Model::increasing ? UPSet::progression(u.start(), 2) : UPSet::finite({u.start()});
      return NotInClass{i, subset, subset};
    }
  }
  return InClass{};
}

T1Condition t1_condition(Model m) {
  if (m == Model::increasing) return Condition1{model(m)};
  return Condition2{model(m)};
}

T1Condition t1_condition(const finite::LBase&) { return Neither{}; }

QUPresentation t1_construct(Model m) {
  return qu_presentation(m, {symnet_from_cover(cover_alpha(UPSet(), m))});
}

QUPresentation t1_construct(const finite::LBase&) {
  throw UnsupportedError("a finite l-base has no strictly monotone chain; its only compatible member is V_delta");
}

}  // namespace tqu::chain
