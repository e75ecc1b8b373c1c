#include "zxw/diagram.hpp"

namespace zxw {

// T[b][a] = 1/2 sum_c (-1)^{c b (1-a)}. The cubic phase is spread over
// parities with pi/4 gadgets: xyz = (x + y + z - (x^y) - (x^z) - (y^z) + (x^y^z)) / 4.
const Diagram& triangle_graph() {
  static const Diagram g = [] {
    Diagram d;
    d.n_in = d.n_out = 1;
    auto node = [&](Kind k, int phase, int arity) {
      int id = d.next_id();
      d.nodes[id] = Node{k, phase, arity};
      return id;
    };
    auto wire = [&](int a, int pa, int b, int pb) {
      d.edges.push_back({Endpoint::port(a, pa), Endpoint::port(b, pb)});
    };
    int neg = node(Kind::X, 4, 2);
    int va = node(Kind::Z, 1, 4);
    int vb = node(Kind::Z, 1, 4);
    int vc = node(Kind::Z, 1, 3);
    d.edges.push_back({Endpoint::in(0), Endpoint::port(neg, 0)});
    wire(neg, 1, va, 0);
    d.edges.push_back({Endpoint::port(vb, 0), Endpoint::out(0)});
    // pair gadgets: (a,b) (a,c) (b,c), then the triple
    int pab = node(Kind::X, 0, 3), pac = node(Kind::X, 0, 3), pbc = node(Kind::X, 0, 3);
    int pabc = node(Kind::X, 0, 4);
    wire(va, 1, pab, 0);
    wire(vb, 1, pab, 1);
    wire(va, 2, pac, 0);
    wire(vc, 0, pac, 1);
    wire(vb, 2, pbc, 0);
    wire(vc, 1, pbc, 1);
    wire(va, 3, pabc, 0);
    wire(vb, 3, pabc, 1);
    wire(vc, 2, pabc, 2);
    for (int p : {pab, pac, pbc}) wire(p, 2, node(Kind::Z, 7, 1), 0);
    wire(pabc, 3, node(Kind::Z, 1, 1), 0);
    // scalar 2 sqrt2
    node(Kind::Z, 0, 0);
    int s0 = node(Kind::Z, 0, 1), s1 = node(Kind::X, 0, 1);
    wire(s0, 0, s1, 0);
    return d;
  }();
  return g;
}

const Term& triangle_definition() {
  static const Term t = to_term(triangle_graph());
  return t;
}

}  // namespace zxw
