#pragma once

#include "zxw/diagram.hpp"
#include "zxw/linalg.hpp"

namespace zxw {

struct HalfFactored {
  Diagram core;   // no Half nodes
  int count = 0;  // original = core / 2^count
};

HalfFactored factor_half(const Diagram& d);

/// ZW diagram with the given dyadic matrix as semantics. Throws
/// std::invalid_argument on entries outside D.
Diagram zw_synthesize(const RingMatrix& a);

/// ZX diagram (pi/4 phases only, no triangles) with the given semantics.
Diagram zx_synthesize(const RingMatrix& a);

}  // namespace zxw
