#pragma once

// Translations between the two calculi and the small diagrams they use.
// The last two wires of an xw image are the control pair; they sit on the
// least significant bits, matching psi_matrix.

#include "zxw/diagram.hpp"

namespace zxw {

// ZW macros (terms).
Term zw_one();           // |1>
Term zw_zero();          // |0>
Term zw_plus();          // |0> + |1>
Term zw_discard();       // <0| + <1|
Term zw_copy(int m);     // 1 -> m, |b> -> |b..b>
Term zw_merge(int n);    // n -> 1, transpose of zw_copy
Term zw_splitter();      // |1> -> |01> + |10>, |0> -> |00>

// ZX scalars and states (terms).
Term zx_sqrt2();
Term zx_inv_sqrt2();
Term zx_half();
Term zx_phase_scalar(int k);  // e^{i k pi/4}
Term theta_state();           // 0 -> 2, the column (1, w, w^2, w^3)
Term e1_effect();             // 2 -> 0, the row (1, 0, 0, 0)

/// Wire permutation: input p is connected to output target[p].
Diagram permutation_graph(const std::vector<int>& target);
Diagram identity_graph(int n);

/// ZX -> ZW, type (k, l) -> (k + 2, l + 2), with [[xw(D)]] = psi([[D]]).
Diagram xw(const Term& zx);
Diagram xw(const Diagram& zx);
/// ZW -> ZX by node substitution, same semantics.
Diagram wx(const Diagram& zw);

/// Plugs theta into the last two inputs and e1 onto the last two outputs.
Diagram recover(const Diagram& d);

/// Images used by xw, exposed for tests.
const Diagram& xw_hadamard();
const Diagram& xw_phase();  // image of Z(1,1,1)

}  // namespace zxw
