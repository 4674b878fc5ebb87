#include <algorithm>
#include <cmath>
#include <limits>

#include "maxwell/bench.hpp"

namespace maxwell {

double MatchReport::max_error(int start, int k) const {
  const int n = static_cast<int>(slot_error.size());
  const int lo = std::max(start, 0), hi = std::min(start + k, n);
  if (lo >= hi) return std::numeric_limits<double>::quiet_NaN();
  double worst = 0.0;
  for (int s = lo; s < hi; ++s) worst = std::max(worst, slot_error[s]);
  return worst;
}

MatchReport match_eigenvalues(std::vector<double> computed, const BenchmarkCase& bench,
                              double window) {
  std::sort(computed.begin(), computed.end());
  const std::vector<ReferenceValue> slots = bench.slots();
  const std::size_t nc = computed.size(), ns = slots.size();

  MatchReport rep;
  rep.slot_status.assign(ns, SlotStatus::unreached);
  rep.slot_error.assign(ns, std::numeric_limits<double>::infinity());

  std::size_t i = 0, s = 0;
  while (i < nc && s < ns) {
    const double c = computed[i], r = slots[s].value;
    const double err = std::abs(c - r) / r * 100.0;
    if (err <= window) {
      rep.pairs.push_back({c, r, err, static_cast<int>(s)});
      rep.slot_status[s] = SlotStatus::matched;
      rep.slot_error[s] = err;
      ++i;
      ++s;
    } else if (c < r) {
      rep.spurious.push_back(c);
      rep.spurious_after.push_back(static_cast<int>(s));
      ++i;
    } else {
      rep.missed.push_back(r);
      rep.slot_status[s] = SlotStatus::missed;
      if (slots[s].singular) rep.missed_singular = true;
      ++s;
    }
  }
  for (; i < nc; ++i) rep.untracked.push_back(computed[i]);
  for (; s < ns; ++s) rep.unreached.push_back(slots[s].value);
  return rep;
}

}  // namespace maxwell
