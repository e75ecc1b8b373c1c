#pragma once

// Random well-typed terms for property tests.

#include <functional>
#include <random>

#include "zxw/diagram.hpp"
#include "zxw/linalg.hpp"

namespace zxw {

struct RandomShape {
  int max_wires = 4;   // never wider than this between layers
  int max_nodes = 12;
  int max_layers = 4;
  bool triangles = false;  // ZX only
};

Term random_zx_term(std::mt19937_64& rng, const RandomShape& shape = {});
Term random_zw_term(std::mt19937_64& rng, const RandomShape& shape = {});

/// Entries a + b w + c w^2 + d w^3 with |num| <= max_num and exponents <= max_exp.
RingMatrix random_matrix(std::mt19937_64& rng, unsigned out, unsigned in, int max_num,
                         unsigned max_exp, bool dyadic_only);

}  // namespace zxw
