#pragma once

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ttower/errors.hpp"
#include "ttower/surface.hpp"

namespace ttower {

// A train track is stored as a combinatorial map: each branch has two darts
// (2b and 2b+1), and each switch lists its incident darts in counterclockwise
// rotation order together with a smoothing partition. At a generic (trivalent)
// switch one slot is the "singleton" side; the other two form the pair side
// and span the switch's cusp. Degenerate bivalent switches are permitted only
// on closed-curve components.
//
// Conventions used throughout:
//  * darts point away from their switch; opposite(d) = d ^ 1;
//  * sigma(d) = next dart counterclockwise around the switch of d;
//  * face walks step d -> sigma(opposite(d)); the step crosses the sector
//    between opposite(d) and its ccw successor;
//  * a sector at a trivalent switch is a cusp iff neither of its two darts is
//    the singleton dart.

struct SwitchRec {
  std::vector<int> slots;  // dart ids in ccw order; 3 entries, or 2 if degenerate
  int singleton = 0;       // slot index of the singleton side (ignored if degenerate)

  bool degenerate() const { return slots.size() == 2; }
};

// Anchors extra topology of the complementary region containing `dart`'s face
// side: number of punctures and genus of that region.
struct FaceHint {
  int dart = 0;
  int punctures = 0;
  int genus = 0;
};

struct TrainTrack {
  Surface surface;
  int num_branches = 0;
  std::vector<SwitchRec> switches;
  std::vector<FaceHint> hints;

  // Derived indices, rebuilt by finalize().
  std::vector<int> dart_switch;
  std::vector<int> dart_slot;

  int num_darts() const { return 2 * num_branches; }
  bool empty() const { return num_branches == 0; }

  static int opposite(int dart) { return dart ^ 1; }
  static int branch_of(int dart) { return dart / 2; }

  int sigma(int dart) const {
    const SwitchRec& sw = switches[dart_switch[dart]];
    return sw.slots[(dart_slot[dart] + 1) % sw.slots.size()];
  }
  bool is_singleton_dart(int dart) const {
    const SwitchRec& sw = switches[dart_switch[dart]];
    return !sw.degenerate() && sw.singleton == dart_slot[dart];
  }
  // A half-branch is large iff it is the singleton side of its switch.
  bool is_large_half(int dart) const { return is_singleton_dart(dart); }
  bool is_large_branch(int branch) const {
    return is_large_half(2 * branch) && is_large_half(2 * branch + 1);
  }
  bool is_small_branch(int branch) const {
    return !is_large_half(2 * branch) && !is_large_half(2 * branch + 1) &&
           !switches[dart_switch[2 * branch]].degenerate() &&
           !switches[dart_switch[2 * branch + 1]].degenerate();
  }
  int next_in_face(int dart) const { return sigma(opposite(dart)); }

  // Fills dart_switch/dart_slot; throws MalformedMapError when the slot data
  // is not a partition of the darts or a switch record is malformed.
  void finalize();
};

struct Face {
  int id = 0;
  std::vector<int> walk;  // darts in face-orbit order
  int cusps = 0;          // outward corners; equals the side count when > 0
  int punctures = 0;
  int genus = 0;
  bool is_smooth() const { return cusps == 0; }
};

struct FaceCensus {
  std::vector<Face> faces;
  std::vector<int> face_of_dart;  // dart -> face id

  const Face& face_containing(int dart) const { return faces[face_of_dart[dart]]; }
};

// Boundary tracing of the smoothed map. Faces are ordered by their minimal
// dart, so the census is deterministic.
FaceCensus face_census(const TrainTrack& t);

// Empty diagnostics iff all structural and face invariants hold. Each entry
// names the offending face or switch.
std::vector<std::string> validate(const TrainTrack& t);
void require_valid(const TrainTrack& t);

bool is_orientable(const TrainTrack& t);

// Every face a triangle or once-punctured monogon.
bool is_maximal(const TrainTrack& t);
// Necessary polygon condition only: every complementary face a disk with
// at most one puncture and at least one cusp.
bool is_filling_shaped(const TrainTrack& t);

// dim M(t) = b - rank(switch equations), exact over Q.
int dim_m(const TrainTrack& t);

// Every branch lies on a nonnegative solution of the switch equations with
// positive weight; decided by one exact feasibility check.
bool is_recurrent(const TrainTrack& t);

// dim ML(surface) - dim M(t); requires recurrence.
int track_index(const TrainTrack& t);

// 2p + sum(s_i - 3), minus 1 when orientable; requires a recurrent
// filling-shaped track.
int index_by_faces(const TrainTrack& t);

// Induced subtrack on a branch subset. Switches left with the singleton and
// one pair dart are erased by merging branches; a switch left with both pair
// darts (or a single dart) makes the subset illegal.
TrainTrack subtrack(const TrainTrack& t, const std::vector<bool>& keep);

// Canonical form: lexicographically minimal serialization over all BFS dart
// relabellings. Two tracks are combinatorially isomorphic (orientation
// preserving, hints included) iff their canonical forms are equal.
std::string canonical_form(const TrainTrack& t);

nlohmann::json track_to_json(const TrainTrack& t);
TrainTrack track_from_json(const nlohmann::json& j);

// --- surgery support -------------------------------------------------------
//
// Deletes branches and fuses surviving strand ends. A fusion (x, y) glues the
// strand ending at dart x to the strand ending at dart y; fused darts leave
// their switches. Switches that lose all darts disappear; closed fusion
// chains become circle components with one degenerate switch. Face hints are
// transferred: regions merged across deleted branches pool their punctures,
// and genus is recomputed from the Euler count of the merged region.

struct FusionSurgery {
  std::vector<int> delete_branches;
  std::vector<std::pair<int, int>> fusions;
};

struct SurgeryResult {
  TrainTrack track;
  // old branch -> (new branch, flipped?) for surviving branches; deleted
  // branches map to (-1, false). "flipped" records whether the old branch's
  // dart 2b ended up at the new branch's dart 2nb+1.
  std::vector<std::pair<int, bool>> branch_map;
};

SurgeryResult apply_fusion_surgery(const TrainTrack& t, const FusionSurgery& s);

}  // namespace ttower
