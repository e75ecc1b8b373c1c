#pragma once

// Controlled rotations, the two-target controlled family and the Toffoli
// gate built from triangles, with scalar-exact certification.

#include "zxw/diagram.hpp"
#include "zxw/linalg.hpp"

namespace zxw {

struct ScalarEquivalence {
  bool equal = false;
  Cyclotomic scalar;  // a = scalar * b when equal
};

/// Finds s != 0 in D[w] with a = s b. Throws DimensionError on shape mismatch.
ScalarEquivalence equal_up_to_scalar(const RingMatrix& a, const RingMatrix& b);

/// Control on the first wire; up to scalar diag(1, 1, 1, w^2k).
Term controlled_rz(int k);
/// The same with the target conjugated by H.
Term controlled_rx(int k);
/// NOT on the first wire before and after. Throws TypeError unless d is 2 -> 2.
Term anti_controlled(const Term& d);

/// Control on wire 0: R_Z(2a) on wire 1 then R_X(2g) on wire 2.
Term controlled_u(int a, int g);
/// Anti-controlled R_Z(2b) from wire 0 onto wire 1, wire 2 untouched.
Term anti_controlled_rz_first(int b);

/// 2 -> 1 AND built from triangles.
Term and_gate();
/// 3 -> 3, controls on wires 0 and 1.
Term toffoli();
/// 1 -> 1: the Toffoli with plugged states, a NOT and projectors.
Term triangle_from_toffoli();

/// Reference matrices.
RingMatrix toffoli_matrix();
RingMatrix controlled_phase_matrix(int k);
RingMatrix triangle_matrix();

}  // namespace zxw
