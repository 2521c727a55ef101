#pragma once

#include <optional>
#include <vector>

#include "strongcol/puffer.hpp"

namespace strongcol::detail {

struct Evaluation {
  PufferCase pc;
  BoundReport report;
};

Evaluation evaluate(const PufferInstance& p);

// Cycle and pendant colours of a normalised instance, indexed along a frame:
// frame vertex k sits at cycle position start + direction * k.
struct FrameColouring {
  int start = 0;
  int direction = 1;
  std::vector<Colour> cycle;                // frame edge (k, k+1)
  std::vector<std::vector<Colour>> pendants;  // per frame vertex
  bool complete = false;                    // every pendant got a colour
};

// The case construction. Colours above the bound are never used; when the
// construction runs out of permissible colours `complete` is false.
FrameColouring lemma_construction(const PufferInstance& p, const PufferCase& c, const BoundReport& r);

EdgeColouring to_instance_colouring(const PufferInstance& p, const FrameColouring& f);

}  // namespace strongcol::detail
