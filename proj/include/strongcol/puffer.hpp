#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "strongcol/decompose.hpp"
#include "strongcol/graph.hpp"

namespace strongcol {

enum class PufferTag {
  kTriangle = 1,
  kFourCycle = 2,
  kBareFiveCycle = 3,
  kFiveCycleSparse = 4,
  kFiveCycleLight = 5,
  kFiveCycleHeavy = 6,
  kBareCycle = 7,
  kEvenCycle = 8,
  kOddCycle = 9,
};

enum class Subcase { kNone, kA, kB, kC };

struct PufferCase {
  PufferTag tag = PufferTag::kTriangle;
  Subcase subcase = Subcase::kNone;
  bool twin_pair = false;    // another maximising pair with a light second vertex
  bool low_degree = false;   // every cycle vertex has degree at most 3
  bool surplus = false;      // d(u)+d(v) falls short of the light triple's sum
  bool seven_cycle = false;  // odd case on exactly seven vertices

  // "1".."7", "8a".."9c"
  std::string label() const;
  friend bool operator==(const PufferCase&, const PufferCase&) = default;
};

enum class Exactness { kExact, kUpper };
std::string_view to_string(Exactness e);

// Cycle positions of the maximising edge uv and, for the five-cycle and odd
// cases, the light triple x, y, z. `direction` is the walk direction along
// the cycle used by the construction (+1 or -1).
struct Witness {
  int u = -1;
  int v = -1;
  std::optional<std::array<int, 3>> xyz;
  int direction = 1;
};

struct BoundReport {
  int value = 0;
  Exactness exactness = Exactness::kExact;
  std::optional<int> eta;
  Witness witness;
  std::string branch;  // e.g. "8b.twin"
};

// Requires a normalised instance (no apexes); throws kBadParameter otherwise.
PufferCase classify(const PufferInstance& p);
BoundReport bound(const PufferInstance& p, const PufferCase& c);
BoundReport bound(const PufferInstance& p);

enum class ConstructionRoute {
  kLemma,          // the case construction met the bound
  kPendantSearch,  // case cycle pattern kept, pendants completed by search
  kExactSearch,    // exact search within the bound (or bound + 1)
  kOverBound,      // nothing within the bound was found
};
std::string_view to_string(ConstructionRoute r);

struct PufferColouring {
  EdgeColouring colouring;  // over the instance's edge ids
  int colours_used = 0;
  ConstructionRoute route = ConstructionRoute::kLemma;
  PufferCase puffer_case;
  BoundReport bound;
};

struct ColourPufferOptions {
  double exact_time_budget_s = 2.0;
  bool allow_exact_search = true;
  // Called whenever the result did not come from the lemma construction.
  // The instance is the normalised one actually coloured.
  std::function<void(const PufferInstance&, const PufferColouring&)> on_fallback;
};

// Strong colouring of a normalised instance. A base precolouring is kept
// unchanged; its colours must be distinct and the precoloured edges pairwise
// within distance one (kBadParameter otherwise).
PufferColouring colour_puffer(const PufferInstance& p, const PufferCase& c, const ColourPufferOptions& options = {});

// Any instance: apexes are split, coloured, and merged back.
PufferColouring colour_puffer(const PufferInstance& p, const ColourPufferOptions& options = {});

// Transfers a colouring of split_apexes(original).instance back to the
// original. Throws kMergeConflict when two surrogates share a colour.
EdgeColouring merge_apex_colours(const PufferInstance& original, const EdgeColouring& split_colouring,
                                 const ApexMergeMap& map);

// Pendant completion for a fixed cycle colouring of a normalised instance.
//
// cycle_colours[i] colours edge (i, i+1); demand[i] is the pendant count at
// position i. Returns the pendant colours per position using only colours
// 1..palette, or nullopt when no completion exists.
std::optional<std::vector<std::vector<Colour>>> complete_pendants(const std::vector<Colour>& cycle_colours,
                                                                   const std::vector<int>& demand, int palette);

}  // namespace strongcol
