#include "chord/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace chord {

namespace {

struct SlotInfo {
  int backbone;
  int pos;  // 1-based position on the backbone
};

struct WalkContext {
  std::vector<SlotInfo> slots;
  std::vector<int> intervalBase;  // per backbone, base of interval ids
  std::vector<int> slotBase;      // per backbone, first global slot id
  std::vector<int> partner;       // global slot -> partner slot or -1
  std::vector<int> chordTwist;    // global slot -> 1 if its chord is twisted
  int totalIntervals = 0;

  explicit WalkContext(const ChordDiagram& d) {
    const int M = d.totalSlots();
    slots.resize(M);
    int base = 0;
    for (std::size_t b = 0; b < d.backboneSizes.size(); ++b) {
      slotBase.push_back(base);
      intervalBase.push_back(totalIntervals);
      for (int p = 1; p <= d.backboneSizes[b]; ++p)
        slots[base + p - 1] = {static_cast<int>(b), p};
      base += d.backboneSizes[b];
      totalIntervals += d.backboneSizes[b] + 1;
    }
    partner.assign(M, -1);
    chordTwist.assign(M, 0);
    for (std::size_t c = 0; c < d.chords.size(); ++c) {
      auto [a, bb] = d.chords[c];
      partner[a] = bb;
      partner[bb] = a;
      chordTwist[a] = chordTwist[bb] = d.twists[c] ? 1 : 0;
    }
  }

  // Directed state: interval (backbone b, index j in 0..size) walked
  // east (dir 0) or west (dir 1).
  int stateId(int b, int j, int dir) const { return 2 * (intervalBase[b] + j) + dir; }
  int stateCount() const { return 2 * totalIntervals; }
};

struct OrbitStats {
  int marked = 0;
  int chordTraversals = 0;
  int undersides = 0;
};

}  // namespace

BoundaryProfile boundary_profile(const ChordDiagram& d) {
  WalkContext ctx(d);
  const int S = ctx.stateCount();
  std::vector<int> orbitOf(S, -1);
  std::vector<OrbitStats> stats;

  for (int start = 0; start < S; ++start) {
    if (orbitOf[start] != -1) continue;
    const int orbit = static_cast<int>(stats.size());
    stats.push_back({});
    OrbitStats& st = stats.back();
    int b = 0, j = 0, dir = 0;
    {
      int iv = start / 2;
      dir = start % 2;
      b = static_cast<int>(std::upper_bound(ctx.intervalBase.begin(),
                                            ctx.intervalBase.end(), iv) -
                           ctx.intervalBase.begin()) -
          1;
      j = iv - ctx.intervalBase[b];
    }
    while (true) {
      const int id = ctx.stateId(b, j, dir);
      if (orbitOf[id] != -1) break;
      orbitOf[id] = orbit;
      const int size = d.backboneSizes[b];
      if (dir == 0) {  // east, toward slot j+1
        if (j == size) {
          st.undersides++;
          j = 0;
          continue;
        }
        const int slot = ctx.slotBase[b] + j;  // slot at position j+1
        if (ctx.partner[slot] < 0) {
          st.marked++;
          j++;
          continue;
        }
        st.chordTraversals++;
        const int q = ctx.partner[slot];
        const SlotInfo& qi = ctx.slots[q];
        if (ctx.chordTwist[slot]) {
          b = qi.backbone;
          j = qi.pos - 1;
          dir = 1;
        } else {
          b = qi.backbone;
          j = qi.pos;
          dir = 0;
        }
      } else {  // west, toward slot j
        if (j == 0) {
          st.undersides++;
          j = d.backboneSizes[b];
          continue;
        }
        const int slot = ctx.slotBase[b] + j - 1;  // slot at position j
        if (ctx.partner[slot] < 0) {
          st.marked++;
          j--;
          continue;
        }
        st.chordTraversals++;
        const int q = ctx.partner[slot];
        const SlotInfo& qi = ctx.slots[q];
        if (ctx.chordTwist[slot]) {
          b = qi.backbone;
          j = qi.pos;
          dir = 0;
        } else {
          b = qi.backbone;
          j = qi.pos - 1;
          dir = 1;
        }
      }
    }
  }

  // Pair each directed orbit with its reversal; one cycle per pair.
  BoundaryProfile profile;
  std::vector<bool> used(stats.size(), false);
  for (int id = 0; id < S; ++id) {
    const int o = orbitOf[id];
    if (used[o]) continue;
    const int rev = orbitOf[id ^ 1];
    assert(rev != o && "a directed boundary orbit paired with itself");
    used[o] = used[rev] = true;
    profile.cycles.push_back(
        {stats[o].marked, stats[o].chordTraversals + stats[o].undersides});
  }
  return profile;
}

bool is_connected(const ChordDiagram& d) {
  const int nb = static_cast<int>(d.backboneSizes.size());
  if (nb <= 1) return true;
  std::vector<int> parent(nb);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> owner;  // global slot -> backbone
  for (int b = 0; b < nb; ++b)
    for (int i = 0; i < d.backboneSizes[b]; ++i) owner.push_back(b);
  for (auto [a, b] : d.chords) parent[find(owner[a])] = find(owner[b]);
  for (int b = 1; b < nb; ++b)
    if (find(b) != find(0)) return false;
  return true;
}

DiagramType classify(const ChordDiagram& d, Variant variant) {
  if (!is_connected(d)) throw DisconnectedDiagram("diagram is not connected");
  BoundaryProfile profile = boundary_profile(d);

  DiagramType t;
  t.k = d.chordCount();
  t.l = d.markedCount();
  for (int s : d.backboneSizes) t.bSpec.bump(s, 1);
  for (const auto& c : profile.cycles) t.nSpec.bump(c.markedPoints, 1);
  const long b = static_cast<long>(d.backboneSizes.size());
  const long n = static_cast<long>(profile.cycles.size());
  const long euler = b - t.k + n;
  if (variant == Variant::Orientable) {
    t.orient = Orientability::Orientable;
    const long twoG = 2 - euler;
    assert(twoG >= 0 && twoG % 2 == 0);
    t.genusOrH = static_cast<int>(twoG / 2);
  } else {
    t.orient = Orientability::NonOrientableAllowed;
    t.genusOrH = static_cast<int>(2 - euler);
  }
  if (t.l == 0) {
    Spectrum p;
    for (const auto& c : profile.cycles) p.bump(c.length, 1);
    t.pSpec = std::move(p);
  }
  return t;
}

namespace {

void enumerate_matchings(std::vector<int>& pairOf, int markedBudget, int chordBudget,
                         const std::function<void(const std::vector<int>&)>& fn) {
  int first = -1;
  for (std::size_t i = 0; i < pairOf.size(); ++i)
    if (pairOf[i] == -2) {
      first = static_cast<int>(i);
      break;
    }
  if (first == -1) {
    fn(pairOf);
    return;
  }
  if (markedBudget > 0) {
    pairOf[first] = -1;
    enumerate_matchings(pairOf, markedBudget - 1, chordBudget, fn);
    pairOf[first] = -2;
  }
  if (chordBudget > 0) {
    for (std::size_t j = first + 1; j < pairOf.size(); ++j) {
      if (pairOf[j] != -2) continue;
      pairOf[first] = static_cast<int>(j);
      pairOf[j] = first;
      enumerate_matchings(pairOf, markedBudget, chordBudget - 1, fn);
      pairOf[first] = -2;
      pairOf[j] = -2;
    }
  }
}

}  // namespace

void enumerate_diagrams(const std::vector<int>& backboneSizes, int k, Variant variant,
                        bool connectedOnly,
                        const std::function<void(const ChordDiagram&)>& fn) {
  int M = 0;
  for (int s : backboneSizes) {
    if (s < 1) throw std::invalid_argument("backbone sizes must be positive");
    M += s;
  }
  if (2 * k > M) throw std::invalid_argument("more chord endpoints than slots");

  ChordDiagram d;
  d.backboneSizes = backboneSizes;
  std::vector<int> pairOf(M, -2);  // -2 undecided, -1 marked, else partner
  enumerate_matchings(pairOf, M - 2 * k, k, [&](const std::vector<int>& match) {
    d.chords.clear();
    for (int i = 0; i < M; ++i)
      if (match[i] > i) d.chords.emplace_back(i, match[i]);
    if (connectedOnly && !is_connected(d)) return;
    const int nc = d.chordCount();
    if (variant == Variant::Orientable) {
      d.twists.assign(nc, false);
      fn(d);
      return;
    }
    for (unsigned mask = 0; mask < (1u << nc); ++mask) {
      d.twists.assign(nc, false);
      for (int c = 0; c < nc; ++c)
        if (mask & (1u << c)) d.twists[c] = true;
      fn(d);
    }
  });
}

TypeHistogram count_types(const std::vector<int>& backboneSizes, int k, Variant variant,
                          bool connectedOnly) {
  TypeHistogram hist;
  enumerate_diagrams(backboneSizes, k, variant, connectedOnly,
                     [&](const ChordDiagram& d) {
                       DiagramType t = classify(d, variant);
                       ClassKey key{t.genusOrH, t.nSpec,
                                    t.pSpec ? *t.pSpec : Spectrum(),
                                    t.pSpec.has_value()};
                       hist[key] += 1;
                     });
  return hist;
}

TypeHistogram count_types_for_bspec(const Spectrum& bSpec, int k, Variant variant,
                                    bool connectedOnly) {
  // All distinct ordered arrangements of the size multiset.
  std::vector<int> sizes;
  for (const auto& [size, mult] : bSpec.entries())
    for (int i = 0; i < mult; ++i) sizes.push_back(size);
  std::sort(sizes.begin(), sizes.end());
  TypeHistogram total;
  do {
    TypeHistogram one = count_types(sizes, k, variant, connectedOnly);
    for (const auto& [key, cnt] : one) total[key] += cnt;
  } while (std::next_permutation(sizes.begin(), sizes.end()));
  return total;
}

}  // namespace chord
