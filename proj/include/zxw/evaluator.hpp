#pragma once

#include "zxw/diagram.hpp"
#include "zxw/linalg.hpp"

namespace zxw {

/// Thrown for diagrams mixing ZX and ZW nodes, or too large to contract.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Value of a node's tensor at the given bit assignment of its ports.
Cyclotomic node_value(const Node& n, const std::vector<int>& bits);

/// Matrix of a single generator (wiring generators included).
RingMatrix generator_matrix(const Gen& g);

/// Exact contraction of the graph's tensor network.
RingMatrix evaluate(const Diagram& d);
/// Compositional evaluation of the term (compose / tensor of generator matrices).
RingMatrix evaluate(const Term& t);

/// Independent oracle: sums over every 0/1 assignment of the internal edges.
RingMatrix brute_force_contract(const Diagram& d, int max_edges = 22);

}  // namespace zxw
