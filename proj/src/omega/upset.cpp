#include "tqu/omega/upset.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "tqu/errors.hpp"

namespace tqu::omega {

namespace {

UPSet::Bits parse_bits(std::string_view s) {
  UPSet::Bits out;
  out.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw InputError("bit strings may only contain 0 and 1");
    out.push_back(c == '1');
  }
  return out;
}

void check_length(std::size_t bits) {
  if (bits > UPSet::kMaxLength) {
    throw ResourceError("ultimately periodic description of " + std::to_string(bits) + " bits is too long");
  }
}

}  // namespace

std::string bits_to_string(const UPSet::Bits& bits) {
  std::string s;
  s.reserve(bits.size());
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

UPSet::UPSet() : period_{false} {}

UPSet::UPSet(Bits prefix, Bits period) : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty()) throw InputError("period must be nonempty");
  check_length(prefix_.size() + period_.size());
  canonicalize();
}

void UPSet::canonicalize() {
  const std::size_t q = period_.size();
  for (std::size_t d = 1; d < q; ++d) {
    if (q % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < q && repeats; ++i) repeats = period_[i] == period_[i - d];
    if (repeats) {
      period_.resize(d);
      break;
    }
  }
  // Pull the prefix tail into the period while it agrees with the rotation.
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    prefix_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

UPSet UPSet::from_bits(Bits prefix, Bits period) { return UPSet(std::move(prefix), std::move(period)); }

UPSet UPSet::from_strings(std::string_view prefix, std::string_view period) {
  return UPSet(parse_bits(prefix), parse_bits(period));
}

UPSet UPSet::finite(std::span<const std::uint64_t> elems) {
  Bits prefix;
  for (std::uint64_t e : elems) {
    check_length(e + 2);
    if (e >= prefix.size()) prefix.resize(e + 1, false);
    prefix[e] = true;
  }
  return UPSet(std::move(prefix), Bits{false});
}

UPSet UPSet::finite(std::initializer_list<std::uint64_t> elems) {
  return finite(std::span<const std::uint64_t>(elems.begin(), elems.size()));
}

UPSet UPSet::naturals() { return UPSet(Bits{}, Bits{true}); }

UPSet UPSet::from(std::uint64_t start) {
  check_length(start + 1);
  return UPSet(Bits(start, false), Bits{true});
}

UPSet UPSet::below(std::uint64_t count) {
  check_length(count + 1);
  return UPSet(Bits(count, true), Bits{false});
}

UPSet UPSet::progression(std::uint64_t offset, std::uint64_t step) {
  if (step == 0) throw InputError("progression step must be positive");
  check_length(offset + step);
  Bits period(step, false);
  period[0] = true;
  return UPSet(Bits(offset, false), std::move(period));
}

bool UPSet::contains(std::uint64_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  return period_[(i - prefix_.size()) % period_.size()];
}

bool UPSet::is_empty() const { return prefix_.empty() && period_.size() == 1 && !period_[0]; }
bool UPSet::is_finite() const { return period_.size() == 1 && !period_[0]; }
bool UPSet::is_cofinite() const { return period_.size() == 1 && period_[0]; }

std::optional<std::uint64_t> UPSet::min_element() const {
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (prefix_[i]) return i;
  }
  for (std::size_t i = 0; i < period_.size(); ++i) {
    if (period_[i]) return prefix_.size() + i;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> UPSet::max_element() const {
  if (!is_finite() || is_empty()) return std::nullopt;
  // Canonical finite sets end their prefix with a member.
  return prefix_.size() - 1;
}

std::vector<std::uint64_t> UPSet::elements() const {
  if (!is_finite()) throw InputError("cannot list the elements of an infinite set " + to_string());
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (prefix_[i]) out.push_back(i);
  }
  return out;
}

std::uint64_t UPSet::count_in(std::uint64_t lo, std::uint64_t hi) const {
  std::uint64_t count = 0;
  const std::uint64_t p = prefix_.size();
  for (std::uint64_t i = lo; i < std::min(hi, p); ++i) count += prefix_[i];
  lo = std::max(lo, p);
  if (lo >= hi) return count;
  const std::uint64_t q = period_.size();
  const std::uint64_t per_period = static_cast<std::uint64_t>(std::count(period_.begin(), period_.end(), true));
  const std::uint64_t span = hi - lo;
  count += (span / q) * per_period;
  for (std::uint64_t i = lo + (span / q) * q; i < hi; ++i) count += contains(i);
  return count;
}

UPSet UPSet::complement() const {
  Bits prefix = prefix_;
  Bits period = period_;
  prefix.flip();
  period.flip();
  return UPSet(std::move(prefix), std::move(period));
}

namespace {

template <typename Fn>
UPSet combine(const UPSet& a, const UPSet& b, Fn fn) {
  const std::size_t p = std::max(a.prefix_length(), b.prefix_length());
  const std::size_t q = std::lcm(a.period_length(), b.period_length());
  check_length(p + q);
  UPSet::Bits prefix(p), period(q);
  for (std::size_t i = 0; i < p; ++i) prefix[i] = fn(a.contains(i), b.contains(i));
  for (std::size_t i = 0; i < q; ++i) period[i] = fn(a.contains(p + i), b.contains(p + i));
  return UPSet::from_bits(std::move(prefix), std::move(period));
}

}  // namespace

UPSet operator|(const UPSet& a, const UPSet& b) { return combine(a, b, [](bool x, bool y) { return x || y; }); }
UPSet operator&(const UPSet& a, const UPSet& b) { return combine(a, b, [](bool x, bool y) { return x && y; }); }
UPSet operator-(const UPSet& a, const UPSet& b) { return combine(a, b, [](bool x, bool y) { return x && !y; }); }

bool operator<(const UPSet& a, const UPSet& b) {
  if (a.prefix_ != b.prefix_) return a.prefix_ < b.prefix_;
  return a.period_ < b.period_;
}

bool UPSet::subset_of(const UPSet& other) const { return (*this - other).is_empty(); }
bool UPSet::almost_subset_of(const UPSet& other) const { return (*this - other).is_finite(); }

UPSet bool_op(const UPSet& a, const UPSet& b, BoolOp op) {
  switch (op) {
    case BoolOp::unite: return a | b;
    case BoolOp::intersect: return a & b;
    case BoolOp::difference: return a - b;
    case BoolOp::complement: return a.complement();
  }
  return a;
}

std::string UPSet::to_string() const {
  if (is_finite()) {
    std::string s = "fin{";
    bool first = true;
    for (std::uint64_t e : elements()) {
      if (!first) s += ',';
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }
  return "up(prefix=" + bits_to_string(prefix_) + ",period=" + bits_to_string(period_) + ")";
}

UPSet UPSet::parse(std::string_view text) {
  const auto bad = [&] { return InputError("cannot parse set description '" + std::string(text) + "'"); };
  if (text.starts_with("fin{") && text.ends_with("}")) {
    std::string_view body = text.substr(4, text.size() - 5);
    std::vector<std::uint64_t> elems;
    while (!body.empty()) {
      const auto comma = body.find(',');
      const std::string_view tok = body.substr(0, comma);
      std::uint64_t v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) throw bad();
      if (v >= kMaxLength) throw ResourceError("element " + std::string(tok) + " is too large");
      elems.push_back(v);
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
      if (body.empty()) throw bad();
    }
    return finite(elems);
  }
  constexpr std::string_view head = "up(prefix=";
  constexpr std::string_view mid = ",period=";
  if (text.starts_with(head) && text.ends_with(")")) {
    const std::string_view body = text.substr(head.size(), text.size() - head.size() - 1);
    const auto split = body.find(mid);
    if (split == std::string_view::npos) throw bad();
    const std::string_view period = body.substr(split + mid.size());
    if (period.empty()) throw bad();
    try {
      return from_strings(body.substr(0, split), period);
    } catch (const InputError&) {
      throw bad();
    }
  }
  throw bad();
}

nlohmann::json UPSet::to_json() const {
  return {{"prefix", bits_to_string(prefix_)}, {"period", bits_to_string(period_)}};
}

UPSet UPSet::from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse(j.get<std::string>());
  if (!j.is_object() || !j.contains("prefix") || !j.contains("period") || !j["prefix"].is_string() ||
      !j["period"].is_string()) {
    throw InputError("set JSON needs string fields \"prefix\" and \"period\"");
  }
  return from_strings(j["prefix"].get<std::string>(), j["period"].get<std::string>());
}

}  // namespace tqu::omega
