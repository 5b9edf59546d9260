#pragma once

#include <string>
#include <vector>

#include "ttower/rational.hpp"
#include "ttower/track.hpp"

namespace ttower {

using Weights = std::vector<long long>;

// A carried curve on a fixed track: integral weights whose strand
// decomposition is a single component. Identity on one track is the weight
// vector itself; cross-track identity goes through geometric realization.
struct CarriedCurve {
  Weights weights;

  friend bool operator==(const CarriedCurve&, const CarriedCurve&) = default;
  friend auto operator<=>(const CarriedCurve& a, const CarriedCurve& b) {
    return a.weights <=> b.weights;
  }
  std::string id() const;
};

struct StrandComponent {
  Weights weights;
  std::vector<int> route;  // departing darts, in traversal order
  int multiplicity = 1;
};

bool carries(const TrainTrack& t, const Weights& w);
bool carries(const TrainTrack& t, const RatRow& w);
bool is_fully_carried(const TrainTrack& t, const Weights& w);

// Unique multicurve realization of an integral carried weight vector: w
// strands per branch, joined at each switch by the order-preserving bijection
// between the singleton side and the concatenated pair side. Components with
// equal weight vectors are grouped by multiplicity.
std::vector<StrandComponent> decompose(const TrainTrack& t, const Weights& w);

// All extreme rays of the weight cone: integral solutions with weights in
// {0,1,2} that are connected and whose support supports a one-dimensional
// solution space.
std::vector<CarriedCurve> vertex_cycles(const TrainTrack& t);

// All carried curves with every weight <= bound. Refuses when
// branches * bound exceeds the budget.
std::vector<CarriedCurve> carried_inventory(const TrainTrack& t, int bound,
                                            long long budget = 120);

// Nullity of the switch equations restricted to the support of w.
int support_nullity(const TrainTrack& t, const Weights& w);

// Support is an embedded closed curve (all weights 1 on it) or a barbell
// (weight-2 bar, two weight-1 loops). Mosher's classification of vertex
// cycles; used as an acceptance check.
bool is_curve_or_barbell(const TrainTrack& t, const Weights& w);

}  // namespace ttower
