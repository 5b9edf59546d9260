#include "ttower/cone.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

#include "ttower/errors.hpp"

namespace ttower {

std::string CarriedCurve::id() const {
  std::ostringstream os;
  for (long long w : weights) os << w << ",";
  return os.str();
}

namespace {

template <typename W>
bool switch_equations_hold(const TrainTrack& t, const std::vector<W>& w) {
  for (const SwitchRec& sw : t.switches) {
    if (sw.degenerate()) {
      if (w[TrainTrack::branch_of(sw.slots[0])] !=
          w[TrainTrack::branch_of(sw.slots[1])])
        return false;
    } else {
      W pair_sum = 0;
      for (int i = 0; i < 3; ++i)
        if (i != sw.singleton) pair_sum += w[TrainTrack::branch_of(sw.slots[i])];
      if (w[TrainTrack::branch_of(sw.slots[sw.singleton])] != pair_sum)
        return false;
    }
  }
  return true;
}

}  // namespace

bool carries(const TrainTrack& t, const Weights& w) {
  if (static_cast<int>(w.size()) != t.num_branches)
    throw WrongTrackError("weight vector indexed by a different track");
  for (long long x : w)
    if (x < 0) return false;
  return switch_equations_hold(t, w);
}

bool carries(const TrainTrack& t, const RatRow& w) {
  if (static_cast<int>(w.size()) != t.num_branches)
    throw WrongTrackError("weight vector indexed by a different track");
  for (const Rat& x : w)
    if (x < 0) return false;
  return switch_equations_hold(t, w);
}

bool is_fully_carried(const TrainTrack& t, const Weights& w) {
  if (!carries(t, w)) return false;
  for (long long x : w)
    if (x == 0) return false;
  return !w.empty();
}

// --- strand decomposition ----------------------------------------------------
//
// A strand state (d, j) means: travelling toward switch(d) along branch(d),
// occupying slot j in d's frame. Slot 0 of a dart is the strand nearest the
// sector swept first when rotating ccw from the dart; across a branch, slot j
// in one frame is slot w-1-j in the opposite frame. At a generic switch with
// ccw order (s0, p1, p2) and singleton s0, the order-preserving gluing is
//   s0 slot i  <->  p1 slot (w1-1-i)        for i < w1,
//   s0 slot i  <->  p2 slot (w2-1-(i-w1))   otherwise.

namespace {

struct StrandState {
  int dart;
  long long slot;
  friend bool operator==(const StrandState&, const StrandState&) = default;
  friend auto operator<=>(const StrandState&, const StrandState&) = default;
};

// Advance through the switch of `s.dart` and across the next branch; returns
// the next arrival state.
StrandState strand_step(const TrainTrack& t, const Weights& w, StrandState s) {
  const SwitchRec& sw = t.switches[t.dart_switch[s.dart]];
  int depart_dart;
  long long depart_slot;
  if (sw.degenerate()) {
    depart_dart = sw.slots[1 - t.dart_slot[s.dart]];
    depart_slot = w[TrainTrack::branch_of(depart_dart)] - 1 - s.slot;
  } else {
    const int s0 = sw.slots[sw.singleton];
    const int p1 = sw.slots[(sw.singleton + 1) % 3];
    const int p2 = sw.slots[(sw.singleton + 2) % 3];
    const long long w1 = w[TrainTrack::branch_of(p1)];
    const long long w2 = w[TrainTrack::branch_of(p2)];
    if (s.dart == s0) {
      if (s.slot < w1) {
        depart_dart = p1;
        depart_slot = w1 - 1 - s.slot;
      } else {
        depart_dart = p2;
        depart_slot = w2 - 1 - (s.slot - w1);
      }
    } else if (s.dart == p1) {
      depart_dart = s0;
      depart_slot = w1 - 1 - s.slot;
    } else {
      depart_dart = s0;
      depart_slot = w1 + (w2 - 1 - s.slot);
    }
  }
  const int arrive_dart = TrainTrack::opposite(depart_dart);
  const long long wb = w[TrainTrack::branch_of(depart_dart)];
  return {arrive_dart, wb - 1 - depart_slot};
}

StrandState strand_reverse(const Weights& w, StrandState s) {
  const long long wb = w[TrainTrack::branch_of(s.dart)];
  return {TrainTrack::opposite(s.dart), wb - 1 - s.slot};
}

}  // namespace

std::vector<StrandComponent> decompose(const TrainTrack& t, const Weights& w) {
  if (!carries(t, w)) throw NotCarriedError("decompose of a non-carried vector");
  std::set<StrandState> visited;
  std::vector<StrandComponent> components;
  for (int d = 0; d < t.num_darts(); ++d) {
    for (long long j = 0; j < w[TrainTrack::branch_of(d)]; ++j) {
      StrandState start{d, j};
      if (visited.count(start)) continue;
      StrandComponent comp;
      comp.weights.assign(t.num_branches, 0);
      StrandState s = start;
      do {
        visited.insert(s);
        visited.insert(strand_reverse(w, s));
        comp.weights[TrainTrack::branch_of(s.dart)] += 1;
        comp.route.push_back(TrainTrack::opposite(s.dart));
        s = strand_step(t, w, s);
      } while (!(s == start));
      components.push_back(std::move(comp));
    }
  }
  // Group identical weight vectors by multiplicity, deterministically.
  std::sort(components.begin(), components.end(),
            [](const StrandComponent& a, const StrandComponent& b) {
              return a.weights < b.weights;
            });
  std::vector<StrandComponent> grouped;
  for (auto& c : components) {
    if (!grouped.empty() && grouped.back().weights == c.weights)
      grouped.back().multiplicity += 1;
    else
      grouped.push_back(std::move(c));
  }
  return grouped;
}

// --- enumeration -------------------------------------------------------------

namespace {

// DFS over integral weight vectors in [0, bound]^branches satisfying the
// switch equations; calls sink on every complete solution.
template <typename Sink>
void enumerate_solutions(const TrainTrack& t, long long bound, Sink&& sink,
                         long long step_budget) {
  const int nb = t.num_branches;
  // Order branches so switches close early: BFS from branch 0 over switches.
  std::vector<int> order;
  std::vector<bool> in_order(nb, false);
  for (int seed = 0; seed < nb; ++seed) {
    if (in_order[seed]) continue;
    std::vector<int> queue{seed};
    in_order[seed] = true;
    while (!queue.empty()) {
      const int b = queue.front();
      queue.erase(queue.begin());
      order.push_back(b);
      for (int d : {2 * b, 2 * b + 1}) {
        for (int e : t.switches[t.dart_switch[d]].slots) {
          const int nbr = TrainTrack::branch_of(e);
          if (!in_order[nbr]) {
            in_order[nbr] = true;
            queue.push_back(nbr);
          }
        }
      }
    }
  }
  std::vector<int> rank(nb);
  for (int i = 0; i < nb; ++i) rank[order[i]] = i;
  // For each switch, the position in `order` after which it is fully known.
  std::vector<int> close_at(t.switches.size(), 0);
  for (size_t s = 0; s < t.switches.size(); ++s)
    for (int d : t.switches[s].slots)
      close_at[s] = std::max(close_at[s], rank[TrainTrack::branch_of(d)]);
  std::vector<std::vector<int>> check_after(nb);
  for (size_t s = 0; s < t.switches.size(); ++s)
    check_after[close_at[s]].push_back(static_cast<int>(s));

  Weights w(nb, 0);
  long long steps = 0;
  auto rec = [&](auto&& self, int pos) -> void {
    if (++steps > step_budget)
      throw BudgetExceededError("weight enumeration budget exhausted");
    if (pos == nb) {
      sink(w);
      return;
    }
    const int b = order[pos];
    for (long long v = 0; v <= bound; ++v) {
      w[b] = v;
      bool ok = true;
      for (int s : check_after[pos]) {
        const SwitchRec& sw = t.switches[s];
        if (sw.degenerate()) {
          if (w[TrainTrack::branch_of(sw.slots[0])] !=
              w[TrainTrack::branch_of(sw.slots[1])])
            ok = false;
        } else {
          long long pair_sum = 0;
          for (int i = 0; i < 3; ++i)
            if (i != sw.singleton)
              pair_sum += w[TrainTrack::branch_of(sw.slots[i])];
          if (w[TrainTrack::branch_of(sw.slots[sw.singleton])] != pair_sum)
            ok = false;
        }
        if (!ok) break;
      }
      if (ok) self(self, pos + 1);
    }
    w[b] = 0;
  };
  rec(rec, 0);
}

}  // namespace

int support_nullity(const TrainTrack& t, const Weights& w) {
  std::vector<int> support;
  for (int b = 0; b < t.num_branches; ++b)
    if (w[b] != 0) support.push_back(b);
  if (support.empty()) return 0;
  RatMat rows;
  for (const SwitchRec& sw : t.switches) {
    RatRow row(support.size(), Rat(0));
    bool nonzero = false;
    auto add = [&](int branch, int sign) {
      for (size_t i = 0; i < support.size(); ++i)
        if (support[i] == branch) {
          row[i] += sign;
          nonzero = true;
        }
    };
    if (sw.degenerate()) {
      add(TrainTrack::branch_of(sw.slots[0]), 1);
      add(TrainTrack::branch_of(sw.slots[1]), -1);
    } else {
      for (int i = 0; i < 3; ++i)
        add(TrainTrack::branch_of(sw.slots[i]), i == sw.singleton ? 1 : -1);
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  return static_cast<int>(support.size()) - rat_rank(rows);
}

std::vector<CarriedCurve> vertex_cycles(const TrainTrack& t) {
  std::vector<CarriedCurve> out;
  if (t.empty()) return out;
  enumerate_solutions(
      t, 2,
      [&](const Weights& w) {
        bool zero = true;
        for (long long x : w) zero &= (x == 0);
        if (zero) return;
        if (support_nullity(t, w) != 1) return;
        const auto comps = decompose(t, w);
        if (comps.size() != 1 || comps.front().multiplicity != 1) return;
        out.push_back({w});
      },
      200'000'000LL);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CarriedCurve> carried_inventory(const TrainTrack& t, int bound,
                                            long long budget) {
  if (bound < 0) throw BudgetExceededError("negative bound");
  if (static_cast<long long>(t.num_branches) * bound > budget)
    throw BudgetExceededError("inventory budget: " +
                              std::to_string(t.num_branches) + " branches x " +
                              std::to_string(bound));
  std::vector<CarriedCurve> out;
  if (t.empty() || bound == 0) return out;
  enumerate_solutions(
      t, bound,
      [&](const Weights& w) {
        bool zero = true;
        for (long long x : w) zero &= (x == 0);
        if (zero) return;
        const auto comps = decompose(t, w);
        if (comps.size() != 1 || comps.front().multiplicity != 1) return;
        out.push_back({w});
      },
      200'000'000LL);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_curve_or_barbell(const TrainTrack& t, const Weights& w) {
  long long max_w = 0;
  for (long long x : w) max_w = std::max(max_w, x);
  if (max_w > 2) return false;
  const auto comps = decompose(t, w);
  if (comps.size() != 1 || comps.front().multiplicity != 1) return false;
  if (max_w == 1) return true;  // embedded closed curve in the track
  // Barbell: the weight-2 branches form an embedded arc (the bar), the
  // weight-1 branches two embedded loops hanging off its ends. Structural
  // check: the route visits weight-2 branches exactly twice and weight-1
  // branches once, and contracting the bar leaves two disjoint cycles.
  std::vector<int> deg(t.num_branches, 0);
  for (int d : comps.front().route) deg[TrainTrack::branch_of(d)] += 1;
  for (int b = 0; b < t.num_branches; ++b)
    if (deg[b] != w[b]) return false;
  // The bar must be connected: weight-2 branches form a path in the support
  // graph (each route traversal of the bar is a contiguous run).
  const auto& route = comps.front().route;
  const int n = static_cast<int>(route.size());
  std::vector<int> runs;  // lengths of maximal weight-2 runs along the route
  int i = 0;
  while (i < n && w[TrainTrack::branch_of(route[i])] == 2) ++i;
  if (i == n) return false;  // all weight 2: not a barbell
  int scanned = 0, run = 0;
  for (int k = i; scanned < n; ++scanned, k = (k + 1) % n) {
    if (w[TrainTrack::branch_of(route[k])] == 2) {
      ++run;
    } else if (run > 0) {
      runs.push_back(run);
      run = 0;
    }
  }
  if (run > 0) runs.push_back(run);
  // A barbell traverses the bar twice: exactly two runs of equal length.
  return runs.size() == 2 && runs[0] == runs[1];
}

}  // namespace ttower
