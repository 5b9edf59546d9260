#pragma once

#include <nlohmann/json_fwd.hpp>

#include "ttower/errors.hpp"

namespace ttower {

// Finite-type orientable surface without boundary, recorded by genus and
// puncture count. Immutable value type.
struct Surface {
  int genus = 0;
  int punctures = 0;

  friend bool operator==(const Surface&, const Surface&) = default;

  int euler_characteristic() const { return 2 - 2 * genus - punctures; }
};

// Sphere with <= 4 punctures or torus with <= 1 puncture.
bool is_sporadic(const Surface& s);

void require_non_sporadic(const Surface& s);

// dim ML(Sigma) = 6g - 6 + 2p. Rejects sporadic surfaces.
int dim_ml(const Surface& s);

// Largest index m(Sigma) of a recurrent filling track, by case:
//   closed, g > 2   -> 4g - 5
//   closed, g = 2   -> 2
//   twice-punctured torus -> 1
//   otherwise punctured   -> 4g + p - 4
int max_filling_index(const Surface& s);

}  // namespace ttower
