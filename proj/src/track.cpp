#include "ttower/track.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ttower/rational.hpp"

namespace ttower {

void TrainTrack::finalize() {
  const int nd = num_darts();
  dart_switch.assign(nd, -1);
  dart_slot.assign(nd, -1);
  for (int s = 0; s < static_cast<int>(switches.size()); ++s) {
    const SwitchRec& sw = switches[s];
    if (sw.slots.size() != 2 && sw.slots.size() != 3)
      throw MalformedMapError("switch " + std::to_string(s) +
                              " must have 2 or 3 slots");
    if (!sw.degenerate() && (sw.singleton < 0 || sw.singleton > 2))
      throw MalformedMapError("switch " + std::to_string(s) +
                              " has bad singleton index");
    for (int i = 0; i < static_cast<int>(sw.slots.size()); ++i) {
      const int d = sw.slots[i];
      if (d < 0 || d >= nd)
        throw MalformedMapError("switch " + std::to_string(s) +
                                " references dart " + std::to_string(d));
      if (dart_switch[d] != -1)
        throw MalformedMapError("dart " + std::to_string(d) +
                                " appears in two slots");
      dart_switch[d] = s;
      dart_slot[d] = i;
    }
  }
  for (int d = 0; d < nd; ++d)
    if (dart_switch[d] == -1)
      throw MalformedMapError("dart " + std::to_string(d) +
                              " is attached to no switch");
}

FaceCensus face_census(const TrainTrack& t) {
  FaceCensus census;
  const int nd = t.num_darts();
  census.face_of_dart.assign(nd, -1);
  for (int d0 = 0; d0 < nd; ++d0) {
    if (census.face_of_dart[d0] != -1) continue;
    Face f;
    f.id = static_cast<int>(census.faces.size());
    int d = d0;
    do {
      census.face_of_dart[d] = f.id;
      f.walk.push_back(d);
      // The step d -> sigma(opposite(d)) crosses the sector between
      // opposite(d) and its ccw successor.
      const int a = TrainTrack::opposite(d);
      const SwitchRec& sw = t.switches[t.dart_switch[a]];
      if (!sw.degenerate()) {
        const int i = t.dart_slot[a];
        const int j = (i + 1) % 3;
        if (i != sw.singleton && j != sw.singleton) ++f.cusps;
      }
      d = t.next_in_face(d);
    } while (d != d0);
    census.faces.push_back(std::move(f));
  }
  for (const FaceHint& h : t.hints) {
    if (h.dart < 0 || h.dart >= nd)
      throw MalformedMapError("face hint anchored at invalid dart");
    Face& f = census.faces[census.face_of_dart[h.dart]];
    f.punctures += h.punctures;
    f.genus += h.genus;
  }
  return census;
}

std::vector<std::string> validate(const TrainTrack& t) {
  std::vector<std::string> out;
  if (t.empty()) return out;  // vacuously valid

  // Degenerate switches only on closed-curve components: every branch at a
  // degenerate switch must connect degenerate switches only.
  for (int s = 0; s < static_cast<int>(t.switches.size()); ++s) {
    if (!t.switches[s].degenerate()) continue;
    for (int d : t.switches[s].slots) {
      const int other = t.dart_switch[TrainTrack::opposite(d)];
      if (!t.switches[other].degenerate())
        out.push_back("switch " + std::to_string(s) +
                      ": degenerate switch on a non-curve component");
    }
  }

  const FaceCensus census = face_census(t);
  int total_punctures = 0;
  int chi_faces = 0;
  for (const Face& f : census.faces) {
    total_punctures += f.punctures;
    chi_faces += 1 - f.punctures - 2 * f.genus;
    if (f.genus < 0)
      out.push_back("face " + std::to_string(f.id) + ": negative genus hint");
    if (f.cusps == 0 && f.genus == 0) {
      if (f.punctures == 0)
        out.push_back("face " + std::to_string(f.id) +
                      ": smooth disk or annulus side");
      else if (f.punctures == 1)
        out.push_back("face " + std::to_string(f.id) +
                      ": smooth once-punctured disk");
    }
    if (f.cusps == 1 && f.punctures == 0 && f.genus == 0)
      out.push_back("face " + std::to_string(f.id) + ": monogon");
    if (f.cusps == 2 && f.punctures == 0 && f.genus == 0)
      out.push_back("face " + std::to_string(f.id) + ": bigon");
  }
  if (total_punctures != t.surface.punctures)
    out.push_back("puncture assignment covers " +
                  std::to_string(total_punctures) + " of " +
                  std::to_string(t.surface.punctures) + " punctures");
  const int v = static_cast<int>(t.switches.size());
  const int chi = (v - t.num_branches) + chi_faces;
  if (chi != t.surface.euler_characteristic())
    out.push_back("euler characteristic mismatch: traced " +
                  std::to_string(chi) + ", surface has " +
                  std::to_string(t.surface.euler_characteristic()));
  return out;
}

void require_valid(const TrainTrack& t) {
  const auto diag = validate(t);
  if (!diag.empty()) throw MalformedMapError("invalid track: " + diag.front());
}

bool is_orientable(const TrainTrack& t) {
  // 2-colouring of darts: value +1 means the branch orientation points away
  // from the dart's switch. Branch: value(d) = -value(opposite(d)). Switch:
  // pair darts agree and oppose the singleton; degenerate: slots oppose.
  const int nd = t.num_darts();
  std::vector<int> val(nd, 0);
  for (int seed = 0; seed < nd; ++seed) {
    if (val[seed] != 0) continue;
    val[seed] = 1;
    std::vector<int> stack{seed};
    while (!stack.empty()) {
      const int d = stack.back();
      stack.pop_back();
      auto push = [&](int e, int want) -> bool {
        if (val[e] == 0) {
          val[e] = want;
          stack.push_back(e);
          return true;
        }
        return val[e] == want;
      };
      if (!push(TrainTrack::opposite(d), -val[d])) return false;
      const SwitchRec& sw = t.switches[t.dart_switch[d]];
      if (sw.degenerate()) {
        const int other = sw.slots[1 - t.dart_slot[d]];
        if (!push(other, -val[d])) return false;
      } else {
        const int sing = sw.slots[sw.singleton];
        for (int e : sw.slots) {
          if (e == d) continue;
          const bool dp = (d != sing);
          const bool ep = (e != sing);
          const int want = (dp == ep) ? val[d] : -val[d];
          if (!push(e, want)) return false;
        }
      }
    }
  }
  return true;
}

bool is_maximal(const TrainTrack& t) {
  if (t.empty()) return false;
  for (const Face& f : face_census(t).faces) {
    const bool triangle = f.cusps == 3 && f.punctures == 0 && f.genus == 0;
    const bool punct_monogon = f.cusps == 1 && f.punctures == 1 && f.genus == 0;
    if (!triangle && !punct_monogon) return false;
  }
  return true;
}

bool is_filling_shaped(const TrainTrack& t) {
  if (t.empty()) return false;
  for (const Face& f : face_census(t).faces)
    if (f.genus != 0 || f.punctures > 1 || f.cusps == 0) return false;
  return true;
}

namespace {

RatMat switch_matrix(const TrainTrack& t) {
  RatMat rows;
  for (const SwitchRec& sw : t.switches) {
    RatRow row(t.num_branches, Rat(0));
    if (sw.degenerate()) {
      row[TrainTrack::branch_of(sw.slots[0])] += 1;
      row[TrainTrack::branch_of(sw.slots[1])] -= 1;
    } else {
      for (int i = 0; i < 3; ++i) {
        const int sign = (i == sw.singleton) ? 1 : -1;
        row[TrainTrack::branch_of(sw.slots[i])] += sign;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

int dim_m(const TrainTrack& t) {
  if (t.empty()) return 0;
  return t.num_branches - rat_rank(switch_matrix(t));
}

bool is_recurrent(const TrainTrack& t) {
  if (t.empty()) return true;
  // Recurrent iff the cone {Aw = 0, w >= 0} contains a strictly positive
  // point; substitute w = u + 1 and test {Au = -A 1, u >= 0}.
  const RatMat a = switch_matrix(t);
  RatRow b(a.size(), Rat(0));
  for (size_t r = 0; r < a.size(); ++r)
    for (const Rat& x : a[r]) b[r] -= x;
  return feasible_nonneg(a, b);
}

int track_index(const TrainTrack& t) {
  if (!is_recurrent(t)) throw NotRecurrentError();
  return dim_ml(t.surface) - dim_m(t);
}

int index_by_faces(const TrainTrack& t) {
  if (!is_recurrent(t)) throw NotRecurrentError();
  if (!is_filling_shaped(t)) throw NotFillingShapedError();
  int sum = 0;
  for (const Face& f : face_census(t).faces) sum += f.cusps - 3;
  return 2 * t.surface.punctures + sum - (is_orientable(t) ? 1 : 0);
}

// --- fusion surgery ---------------------------------------------------------

namespace {

struct GroupFind {
  std::vector<int> parent;
  explicit GroupFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SurgeryResult apply_fusion_surgery(const TrainTrack& t,
                                   const FusionSurgery& s) {
  const int nd = t.num_darts();
  std::vector<bool> deleted(t.num_branches, false);
  for (int b : s.delete_branches) deleted[b] = true;

  std::vector<int> fused_with(nd, -1);
  for (auto [x, y] : s.fusions) {
    if (x < 0 || y < 0 || x >= nd || y >= nd || x == y ||
        deleted[TrainTrack::branch_of(x)] || deleted[TrainTrack::branch_of(y)])
      throw MalformedMapError("bad fusion pair");
    if (fused_with[x] != -1 || fused_with[y] != -1)
      throw MalformedMapError("dart fused twice");
    fused_with[x] = y;
    fused_with[y] = x;
  }

  auto dart_removed = [&](int d) {
    return deleted[TrainTrack::branch_of(d)] || fused_with[d] != -1;
  };

  // Each switch must either keep all darts or lose all of them.
  std::vector<bool> switch_survives(t.switches.size(), false);
  for (size_t sw = 0; sw < t.switches.size(); ++sw) {
    int kept = 0;
    for (int d : t.switches[sw].slots) kept += dart_removed(d) ? 0 : 1;
    if (kept == static_cast<int>(t.switches[sw].slots.size()))
      switch_survives[sw] = true;
    else if (kept != 0)
      throw MalformedMapError("fusion surgery leaves a partial switch");
  }

  // Old faces and the merge relation across deleted branches.
  const FaceCensus old_census = face_census(t);
  GroupFind groups(static_cast<int>(old_census.faces.size()));
  for (int b = 0; b < t.num_branches; ++b) {
    if (!deleted[b]) continue;
    groups.unite(old_census.face_of_dart[2 * b],
                 old_census.face_of_dart[2 * b + 1]);
  }

  // Chains of surviving branches joined end to end by fusions.
  SurgeryResult result;
  result.branch_map.assign(t.num_branches, {-1, false});
  TrainTrack& nt = result.track;
  nt.surface = t.surface;

  std::vector<int> dart_map(nd, -1);  // old free dart -> new dart
  struct CircleSeam {
    int new_branch;
    int x, y;  // old fusion darts at the cut; sector after new dart 2nb
               // corresponds to the old sector ccw-after-x
  };
  std::vector<CircleSeam> seams;

  std::vector<bool> branch_done(t.num_branches, false);
  auto walk_chain = [&](int start_dart) {
    // start_dart: free dart; walk through fusions to the other free end.
    std::vector<int> chain_branches;
    int d = start_dart;  // dart at the leading end of the current branch
    while (true) {
      const int b = TrainTrack::branch_of(d);
      chain_branches.push_back(b);
      branch_done[b] = true;
      const int far = TrainTrack::opposite(d);
      if (fused_with[far] == -1) return std::make_pair(chain_branches, far);
      d = fused_with[far];
    }
  };

  // Open chains first, seeded from free darts in increasing order.
  struct NewBranch {
    int front_old = -1, back_old = -1;  // old free darts, open chains
    std::vector<int> members;
    bool circle = false;
    int seam_x = -1, seam_y = -1;
  };
  std::vector<NewBranch> new_branches;
  for (int d = 0; d < nd; ++d) {
    if (dart_removed(d) || branch_done[TrainTrack::branch_of(d)]) continue;
    auto [members, far] = walk_chain(d);
    NewBranch nb;
    nb.front_old = d;
    nb.back_old = far;
    nb.members = std::move(members);
    new_branches.push_back(std::move(nb));
  }
  // Closed chains: all branches remaining unswept whose darts are all fused.
  for (int b = 0; b < t.num_branches; ++b) {
    if (deleted[b] || branch_done[b]) continue;
    // Find the minimal fusion dart on the cycle to cut at.
    int cut_x = -1;
    {
      int d = 2 * b;
      while (true) {
        const int far = TrainTrack::opposite(d);
        if (cut_x == -1 || far < cut_x) cut_x = far;
        d = fused_with[far];
        if (d == 2 * b) break;
      }
    }
    const int cut_y = fused_with[cut_x];
    NewBranch nb;
    nb.circle = true;
    nb.seam_x = cut_x;
    nb.seam_y = cut_y;
    int d = cut_y;
    while (true) {
      nb.members.push_back(TrainTrack::branch_of(d));
      branch_done[TrainTrack::branch_of(d)] = true;
      const int far = TrainTrack::opposite(d);
      if (far == cut_x) break;
      d = fused_with[far];
    }
    new_branches.push_back(std::move(nb));
  }

  std::sort(new_branches.begin(), new_branches.end(),
            [](const NewBranch& a, const NewBranch& b) {
              return *std::min_element(a.members.begin(), a.members.end()) <
                     *std::min_element(b.members.begin(), b.members.end());
            });

  nt.num_branches = static_cast<int>(new_branches.size());
  for (int i = 0; i < nt.num_branches; ++i) {
    const NewBranch& nb = new_branches[i];
    if (!nb.circle) {
      const bool ordered = nb.front_old < nb.back_old;
      const int front = ordered ? nb.front_old : nb.back_old;
      const int back = ordered ? nb.back_old : nb.front_old;
      dart_map[front] = 2 * i;
      dart_map[back] = 2 * i + 1;
    } else {
      seams.push_back({i, nb.seam_x, nb.seam_y});
    }
    // branch_map orientation: an old branch is "flipped" if its dart 2b lies
    // on the back side of the chain direction. Only needed per branch, and a
    // chain traverses each member once.
    for (int m : nb.members) result.branch_map[m] = {i, false};
  }
  // Orientation flags: walk each chain and record direction of each member.
  for (int i = 0; i < nt.num_branches; ++i) {
    const NewBranch& nb = new_branches[i];
    int d;  // leading dart of the first branch in walk direction
    if (!nb.circle)
      d = (nb.front_old < nb.back_old) ? nb.front_old : nb.back_old;
    else
      d = nb.seam_y;
    while (true) {
      const int b = TrainTrack::branch_of(d);
      result.branch_map[b] = {i, d != 2 * b};
      const int far = TrainTrack::opposite(d);
      if (fused_with[far] == -1 || far == nb.seam_x) break;
      d = fused_with[far];
      if (nb.circle && d == nb.seam_y) break;
    }
  }

  // New switches: surviving old switches, then one degenerate switch per
  // circle seam.
  std::vector<int> switch_map(t.switches.size(), -1);
  for (size_t sw = 0; sw < t.switches.size(); ++sw) {
    if (!switch_survives[sw]) continue;
    SwitchRec rec = t.switches[sw];
    for (int& d : rec.slots) {
      assert(dart_map[d] != -1);
      d = dart_map[d];
    }
    switch_map[sw] = static_cast<int>(nt.switches.size());
    nt.switches.push_back(std::move(rec));
  }
  std::vector<std::pair<int, int>> seam_switches;  // (seam idx, new switch id)
  for (size_t k = 0; k < seams.size(); ++k) {
    SwitchRec rec;
    rec.slots = {2 * seams[k].new_branch, 2 * seams[k].new_branch + 1};
    seam_switches.push_back({static_cast<int>(k),
                             static_cast<int>(nt.switches.size())});
    nt.switches.push_back(std::move(rec));
  }
  nt.finalize();

  // --- hint transfer --------------------------------------------------------
  const FaceCensus new_census = face_census(nt);
  std::vector<int> group_of_new_face(new_census.faces.size(), -1);
  auto match = [&](int new_face, int old_face) {
    const int g = groups.find(old_face);
    if (group_of_new_face[new_face] == -1)
      group_of_new_face[new_face] = g;
    else if (group_of_new_face[new_face] != g)
      throw MalformedMapError("inconsistent face matching in surgery");
  };
  // Sectors at surviving switches correspond slot-for-slot.
  for (size_t sw = 0; sw < t.switches.size(); ++sw) {
    if (!switch_survives[sw]) continue;
    const SwitchRec& old_rec = t.switches[sw];
    for (size_t i = 0; i < old_rec.slots.size(); ++i) {
      const int a = old_rec.slots[i];
      const int old_face = old_census.face_of_dart[TrainTrack::opposite(a)];
      const int na = nt.switches[switch_map[sw]].slots[i];
      const int new_face = new_census.face_of_dart[TrainTrack::opposite(na)];
      match(new_face, old_face);
    }
  }
  // Circle seams: sector ccw-after the new front dart corresponds to the old
  // sector ccw-after x; the complementary sector to the one after y.
  for (auto [k, nsw] : seam_switches) {
    const CircleSeam& seam = seams[k];
    const int nd0 = nt.switches[nsw].slots[0];
    const int nd1 = nt.switches[nsw].slots[1];
    match(new_census.face_of_dart[TrainTrack::opposite(nd0)],
          old_census.face_of_dart[TrainTrack::opposite(seam.x)]);
    match(new_census.face_of_dart[TrainTrack::opposite(nd1)],
          old_census.face_of_dart[TrainTrack::opposite(seam.y)]);
  }
  for (size_t f = 0; f < new_census.faces.size(); ++f)
    if (group_of_new_face[f] == -1)
      throw MalformedMapError("unmatched face in surgery");

  // Per-group data: punctures, unpunctured Euler count, member walks.
  std::map<int, std::vector<int>> walks_of_group;
  for (size_t f = 0; f < new_census.faces.size(); ++f)
    walks_of_group[group_of_new_face[f]].push_back(static_cast<int>(f));
  std::map<int, int> q_of_group, chi_of_group;
  for (const Face& f : old_census.faces) {
    const int g = groups.find(f.id);
    q_of_group[g] += f.punctures;
    chi_of_group[g] += 1 - 2 * f.genus;
  }
  for (int b = 0; b < t.num_branches; ++b)
    if (deleted[b]) chi_of_group[groups.find(old_census.face_of_dart[2 * b])] -= 1;
  for (size_t sw = 0; sw < t.switches.size(); ++sw) {
    if (switch_survives[sw]) continue;
    bool interior = true;
    for (int d : t.switches[sw].slots)
      if (!deleted[TrainTrack::branch_of(d)]) interior = false;
    if (interior) {
      const int of = old_census.face_of_dart[TrainTrack::opposite(
          t.switches[sw].slots[0])];
      chi_of_group[groups.find(of)] += 1;
    }
  }

  for (auto& [g, walks] : walks_of_group) {
    std::sort(walks.begin(), walks.end());
    const int r = static_cast<int>(walks.size());
    const int chi = chi_of_group[g];
    const int genus2 = r - chi;  // 2 * total genus to distribute
    if (genus2 < 0 || genus2 % 2 != 0)
      throw MalformedMapError("surgery euler count not realizable");
    int total_genus = genus2 / 2;
    int q = q_of_group[g];
    // Assign punctures to the first walk; spread genus so that no walk is
    // presented as a smooth disk when genus is available to absorb.
    std::vector<int> qs(r, 0), hs(r, 0);
    qs[0] = q;
    for (int i = 0; i < r && total_genus > 0; ++i) {
      if (new_census.faces[walks[i]].cusps == 0 && qs[i] == 0) {
        hs[i] = 1;
        --total_genus;
      }
    }
    hs[0] += total_genus;
    for (int i = 0; i < r; ++i) {
      if (qs[i] == 0 && hs[i] == 0) continue;
      const Face& f = new_census.faces[walks[i]];
      nt.hints.push_back(
          {*std::min_element(f.walk.begin(), f.walk.end()), qs[i], hs[i]});
    }
  }
  std::sort(nt.hints.begin(), nt.hints.end(),
            [](const FaceHint& a, const FaceHint& b) { return a.dart < b.dart; });
  return result;
}

TrainTrack subtrack(const TrainTrack& t, const std::vector<bool>& keep) {
  if (static_cast<int>(keep.size()) != t.num_branches)
    throw InvalidSubtrackError("keep mask has wrong length");
  FusionSurgery s;
  for (int b = 0; b < t.num_branches; ++b)
    if (!keep[b]) s.delete_branches.push_back(b);
  for (size_t sw = 0; sw < t.switches.size(); ++sw) {
    const SwitchRec& rec = t.switches[sw];
    std::vector<int> kept;
    for (int d : rec.slots)
      if (keep[TrainTrack::branch_of(d)]) kept.push_back(d);
    if (kept.size() == rec.slots.size() || kept.empty()) continue;
    if (kept.size() == 1)
      throw InvalidSubtrackError("branch subset leaves a dead end at switch " +
                                 std::to_string(sw));
    if (rec.degenerate()) {
      throw InvalidSubtrackError("partial degenerate switch");
    }
    const int sing = rec.slots[rec.singleton];
    if (kept[0] != sing && kept[1] != sing)
      throw InvalidSubtrackError(
          "branch subset leaves two pair darts at switch " +
          std::to_string(sw));
    s.fusions.push_back({kept[0], kept[1]});
  }
  TrainTrack result = apply_fusion_surgery(t, s).track;
  return result;
}

// --- canonical form ---------------------------------------------------------

namespace {

// Deterministic trace of the component of start, labels assigned in first
// encounter order. Returns the label permutation old->new and the trace.
std::vector<int> trace_component(const TrainTrack& t, int start,
                                 std::vector<int>* labels_out) {
  std::vector<int>& label = *labels_out;
  label.assign(t.num_darts(), -1);
  std::vector<int> order;
  auto get = [&](int d) {
    if (label[d] == -1) {
      label[d] = static_cast<int>(order.size());
      order.push_back(d);
    }
    return label[d];
  };
  get(start);
  std::vector<int> trace;
  for (size_t i = 0; i < order.size(); ++i) {
    const int d = order[i];
    trace.push_back(get(TrainTrack::opposite(d)));
    const SwitchRec& sw = t.switches[t.dart_switch[d]];
    const int n = static_cast<int>(sw.slots.size());
    trace.push_back(n);
    if (sw.degenerate())
      trace.push_back(0);
    else
      trace.push_back((sw.singleton - t.dart_slot[d] + 3) % 3);
    for (int k = 1; k < n; ++k)
      trace.push_back(get(sw.slots[(t.dart_slot[d] + k) % n]));
  }
  return trace;
}

}  // namespace

std::string canonical_form(const TrainTrack& t) {
  std::ostringstream out;
  out << "g" << t.surface.genus << "p" << t.surface.punctures << ";";
  if (t.empty()) {
    out << "empty";
    return out.str();
  }
  // Resolve hints once.
  const FaceCensus census = face_census(t);

  std::vector<bool> dart_seen(t.num_darts(), false);
  std::vector<std::string> component_traces;
  for (int seed = 0; seed < t.num_darts(); ++seed) {
    if (dart_seen[seed]) continue;
    std::vector<int> labels;
    std::vector<int> best;
    std::vector<int> best_hints;
    std::vector<int> component;
    {
      // Collect component darts via one trace.
      trace_component(t, seed, &labels);
      for (int d = 0; d < t.num_darts(); ++d)
        if (labels[d] != -1) component.push_back(d);
    }
    for (int d : component) dart_seen[d] = true;
    for (int start : component) {
      std::vector<int> trace = trace_component(t, start, &labels);
      // Face hints keyed by the minimal relabelled dart of their face.
      std::vector<std::pair<int, std::pair<int, int>>> hint_list;
      for (const Face& f : census.faces) {
        if (f.punctures == 0 && f.genus == 0) continue;
        if (labels[f.walk.front()] == -1) continue;
        int m = t.num_darts();
        for (int d : f.walk) m = std::min(m, labels[d]);
        hint_list.push_back({m, {f.punctures, f.genus}});
      }
      std::sort(hint_list.begin(), hint_list.end());
      std::vector<int> hint_flat;
      for (auto& [m, qh] : hint_list) {
        hint_flat.push_back(m);
        hint_flat.push_back(qh.first);
        hint_flat.push_back(qh.second);
      }
      if (best.empty() || std::make_pair(trace, hint_flat) <
                              std::make_pair(best, best_hints)) {
        best = std::move(trace);
        best_hints = std::move(hint_flat);
      }
    }
    std::ostringstream cs;
    for (int x : best) cs << x << ",";
    cs << "|";
    for (int x : best_hints) cs << x << ",";
    component_traces.push_back(cs.str());
  }
  std::sort(component_traces.begin(), component_traces.end());
  for (const auto& c : component_traces) out << c << ";";
  return out.str();
}

// --- JSON -------------------------------------------------------------------

nlohmann::json track_to_json(const TrainTrack& t) {
  nlohmann::json j;
  j["surface"] = {{"genus", t.surface.genus}, {"punctures", t.surface.punctures}};
  j["switches"] = nlohmann::json::array();
  for (size_t i = 0; i < t.switches.size(); ++i) {
    nlohmann::json sw;
    sw["id"] = i;
    sw["slots"] = t.switches[i].slots;
    if (t.switches[i].degenerate())
      sw["degenerate"] = true;
    else
      sw["singleton"] = t.switches[i].singleton;
    j["switches"].push_back(sw);
  }
  j["branches"] = nlohmann::json::array();
  for (int b = 0; b < t.num_branches; ++b)
    j["branches"].push_back({{"id", b}, {"darts", {2 * b, 2 * b + 1}}});
  nlohmann::json hints = nlohmann::json::array();
  for (const FaceHint& h : t.hints)
    hints.push_back(
        {{"dart", h.dart}, {"punctures", h.punctures}, {"genus", h.genus}});
  j["punctures"] = {{"face-hints", hints}};
  return j;
}

TrainTrack track_from_json(const nlohmann::json& j) {
  TrainTrack t;
  t.surface.genus = j.at("surface").at("genus").get<int>();
  t.surface.punctures = j.at("surface").at("punctures").get<int>();
  t.num_branches = static_cast<int>(j.at("branches").size());
  for (const auto& sw : j.at("switches")) {
    SwitchRec rec;
    rec.slots = sw.at("slots").get<std::vector<int>>();
    if (sw.contains("singleton")) rec.singleton = sw.at("singleton").get<int>();
    t.switches.push_back(std::move(rec));
  }
  if (j.contains("punctures") && j.at("punctures").contains("face-hints"))
    for (const auto& h : j.at("punctures").at("face-hints"))
      t.hints.push_back({h.at("dart").get<int>(), h.at("punctures").get<int>(),
                         h.value("genus", 0)});
  t.finalize();
  return t;
}

}  // namespace ttower
