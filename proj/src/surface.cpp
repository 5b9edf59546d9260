#include "ttower/surface.hpp"

#include <string>

namespace ttower {

bool is_sporadic(const Surface& s) {
  if (s.genus == 0 && s.punctures <= 4) return true;
  if (s.genus == 1 && s.punctures <= 1) return true;
  return false;
}

void require_non_sporadic(const Surface& s) {
  if (is_sporadic(s))
    throw SporadicSurfaceError("sporadic surface (g=" +
                               std::to_string(s.genus) +
                               ", p=" + std::to_string(s.punctures) + ")");
}

int dim_ml(const Surface& s) {
  require_non_sporadic(s);
  return 6 * s.genus - 6 + 2 * s.punctures;
}

int max_filling_index(const Surface& s) {
  require_non_sporadic(s);
  if (s.punctures == 0) return s.genus == 2 ? 2 : 4 * s.genus - 5;
  if (s.genus == 1 && s.punctures == 2) return 1;
  return 4 * s.genus + s.punctures - 4;
}

}  // namespace ttower
