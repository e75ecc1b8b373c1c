#pragma once

// Small helper for assembling graphs node by node.

#include "zxw/diagram.hpp"

namespace zxw::detail {

struct Builder {
  Diagram d;

  Builder(int n_in, int n_out) {
    d.n_in = n_in;
    d.n_out = n_out;
  }

  int node(Kind k, int arity, int phase = 0) {
    int id = d.next_id();
    d.nodes[id] = Node{k, phase, arity};
    return id;
  }
  void link(Endpoint a, Endpoint b) { d.edges.push_back({a, b}); }
  static Endpoint p(int id, int port) { return Endpoint::port(id, port); }
};

}  // namespace zxw::detail
