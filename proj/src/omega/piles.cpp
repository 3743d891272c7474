#include "tqu/omega/piles.hpp"

#include <algorithm>
#include <numeric>

namespace tqu::omega {

namespace {

// Maximal runs of members inside [lo, hi); callers guarantee lo-1 and hi are
// non-members (or out of range) so the runs are genuine piles.
void scan_runs(const UPSet& s, std::uint64_t lo, std::uint64_t hi, std::uint64_t shift, std::vector<Run>& out) {
  std::uint64_t i = lo;
  while (i < hi) {
    if (!s.contains(i)) {
      ++i;
      continue;
    }
    const std::uint64_t first = i;
    while (i < hi && s.contains(i)) ++i;
    out.push_back({first - shift, i - 1 - shift});
  }
}

std::string run_text(const Run& r, const char* sign = "") {
  return "[" + std::string(sign) + std::to_string(r.first) + "," + sign + std::to_string(r.last) + "]";
}

}  // namespace

PileDecomposition piles(const UPSet& n) {
  PileDecomposition d;
  const std::uint64_t p = n.prefix_length();
  const std::uint64_t q = n.period_length();
  if (n.is_finite()) {
    scan_runs(n, 0, p, 0, d.finite_runs);
    return d;
  }
  if (n.is_cofinite()) {
    std::uint64_t start = p;
    while (start > 0 && n.contains(start - 1)) --start;
    scan_runs(n, 0, start, 0, d.finite_runs);
    d.tail = InfiniteRun{start};
    return d;
  }
  const auto& period = n.period();
  std::uint64_t anchor = 0;
  if (!(p == 0 && !period.back())) {
    const auto zero = static_cast<std::uint64_t>(std::find(period.begin(), period.end(), false) - period.begin());
    anchor = p + zero + 1;
  }
  scan_runs(n, 0, anchor, 0, d.finite_runs);
  PeriodicRuns tail{anchor, q, {}};
  scan_runs(n, anchor, anchor + q, anchor, tail.runs);
  d.tail = std::move(tail);
  return d;
}

std::vector<Run> PileDecomposition::piles_below(std::uint64_t limit) const {
  std::vector<Run> out;
  for (const Run& r : finite_runs) {
    if (r.first < limit) out.push_back(r);
  }
  if (const auto* inf = std::get_if<InfiniteRun>(&tail)) {
    if (inf->start < limit) out.push_back({inf->start, limit - 1});
  } else if (const auto* per = std::get_if<PeriodicRuns>(&tail)) {
    for (std::uint64_t base = per->anchor; base < limit; base += per->period) {
      for (const Run& r : per->runs) {
        if (base + r.first < limit) out.push_back({base + r.first, base + r.last});
      }
    }
  }
  return out;
}

std::string PileDecomposition::to_string() const {
  std::string s;
  auto append = [&](const std::string& part) {
    if (!s.empty()) s += ' ';
    s += part;
  };
  for (const Run& r : finite_runs) append(run_text(r));
  if (const auto* inf = std::get_if<InfiniteRun>(&tail)) {
    append("infinite run from " + std::to_string(inf->start));
  } else if (const auto* per = std::get_if<PeriodicRuns>(&tail)) {
    std::string runs;
    for (const Run& r : per->runs) runs += (runs.empty() ? "" : " ") + run_text(r, "+");
    append("periodic runs from " + std::to_string(per->anchor) + " every " + std::to_string(per->period) + ": " +
           runs);
  }
  return s.empty() ? "no piles" : s;
}

nlohmann::json PileDecomposition::to_json() const {
  auto runs_json = [](const std::vector<Run>& runs) {
    nlohmann::json a = nlohmann::json::array();
    for (const Run& r : runs) a.push_back({r.first, r.last});
    return a;
  };
  nlohmann::json tail_json = nullptr;
  if (const auto* inf = std::get_if<InfiniteRun>(&tail)) {
    tail_json = {{"kind", "infinite"}, {"start", inf->start}};
  } else if (const auto* per = std::get_if<PeriodicRuns>(&tail)) {
    tail_json = {{"kind", "periodic"}, {"anchor", per->anchor}, {"period", per->period}, {"runs", runs_json(per->runs)}};
  }
  return {{"finite_runs", runs_json(finite_runs)}, {"tail", tail_json}};
}

AdmissibilityResult admissibility(const UPSet& z, const UPSet& n) {
  const UPSet w = z & n;
  const PileDecomposition d = piles(n);
  std::uint64_t bound = 0;
  for (const Run& r : d.finite_runs) bound = std::max(bound, w.count_in(r.first, r.last + 1));

  if (const auto* inf = std::get_if<InfiniteRun>(&d.tail)) {
    if (!w.is_finite()) return NotAdmissible{*inf};
    if (const auto top = w.max_element()) bound = std::max(bound, w.count_in(inf->start, *top + 1));
  } else if (const auto* per = std::get_if<PeriodicRuns>(&d.tail)) {
    // Per-window counts are periodic in the window index once the window lies
    // past w's prefix; one joint period beyond that covers every value.
    const std::uint64_t q = per->period;
    const std::uint64_t lag = w.prefix_length() > per->anchor ? w.prefix_length() - per->anchor : 0;
    const std::uint64_t windows = (lag + q - 1) / q + std::lcm(q, static_cast<std::uint64_t>(w.period_length())) / q;
    for (std::uint64_t k = 0; k <= windows; ++k) {
      const std::uint64_t base = per->anchor + k * q;
      for (const Run& r : per->runs) bound = std::max(bound, w.count_in(base + r.first, base + r.last + 1));
    }
  }
  return Admissible{bound};
}

std::string to_string(const AdmissibilityResult& r) {
  if (const auto* a = std::get_if<Admissible>(&r)) return "admissible k=" + std::to_string(a->bound);
  return "not admissible: infinite run from " + std::to_string(std::get<NotAdmissible>(r).pile.start);
}

}  // namespace tqu::omega
