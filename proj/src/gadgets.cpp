#include "zxw/gadgets.hpp"

namespace zxw {

ScalarEquivalence equal_up_to_scalar(const RingMatrix& a, const RingMatrix& b) {
  if (a.out_wires() != b.out_wires() || a.in_wires() != b.in_wires())
    throw DimensionError("equal_up_to_scalar: " + a.shape_string() + " vs " + b.shape_string());
  ScalarEquivalence r;
  if (a.is_zero() && b.is_zero()) {
    r.equal = true;
    r.scalar = 1;
    return r;
  }
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0;
  while (i < eb.size() && eb[i].is_zero()) ++i;
  if (i == eb.size()) return r;
  Cyclotomic s;
  if (!exact_quotient(ea[i], eb[i], s) || s.is_zero()) return r;
  for (std::size_t j = 0; j < ea.size(); ++j)
    if (!(ea[j] == s * eb[j])) return r;
  r.equal = true;
  r.scalar = s;
  return r;
}

namespace {

Term not_gate() { return Xs(1, 1, 4); }

}  // namespace

Term controlled_rz(int k) {
  return seq({par({Zs(1, 2, k), Zs(1, 2, k)}), par({G(Kind::Id), Xs(2, 1, 0), G(Kind::Id)}),
              par({G(Kind::Id), Zs(1, 0, -k), G(Kind::Id)})});
}

Term controlled_rx(int k) {
  Term h = par({G(Kind::Id), G(Kind::H)});
  return seq({h, controlled_rz(k), h});
}

Term anti_controlled(const Term& d) {
  if (d.in_wires() != 2 || d.out_wires() != 2) throw TypeError("anti_controlled needs a 2 -> 2 diagram");
  Term n = par({not_gate(), G(Kind::Id)});
  return seq({n, d, n});
}

Term controlled_u(int a, int g) {
  Term mid = par({G(Kind::Id), G(Kind::Swap)});
  return seq({par({controlled_rz(a), G(Kind::Id)}), mid, par({controlled_rx(g), G(Kind::Id)}), mid});
}

Term anti_controlled_rz_first(int b) { return par({anti_controlled(controlled_rz(b)), G(Kind::Id)}); }

Term and_gate() {
  return seq({par({G(Kind::Tri), G(Kind::Tri)}), Zs(2, 1, 0), Zs(1, 1, 4), G(Kind::Tri), Zs(1, 1, 4)});
}

Term toffoli() {
  Term id = G(Kind::Id);
  return seq({par({Zs(1, 2, 0), Zs(1, 2, 0), id}), par({id, G(Kind::Swap), id, id}),
              par({id, id, and_gate(), id}), par({id, id, Xs(2, 1, 0)})});
}

Term triangle_from_toffoli() {
  // T|x> = sum_y [not (not x and y)] |y>: the first control gets NOT x, the
  // second a uniform superposition, the target |0>; the target must stay 0.
  return seq({par({not_gate(), Zs(0, 1, 0), Xs(0, 1, 0)}), toffoli(),
              par({Zs(1, 0, 0), G(Kind::Id), Xs(1, 0, 0)})});
}

RingMatrix toffoli_matrix() {
  RingMatrix m(3, 3);
  for (std::size_t c = 0; c < 8; ++c) {
    std::size_t r = (c & 6) == 6 ? c ^ 1 : c;
    m.at(r, c) = 1;
  }
  return m;
}

RingMatrix controlled_phase_matrix(int k) {
  RingMatrix m = RingMatrix::identity(2);
  m.at(3, 3) = Cyclotomic::root_power(2LL * k);
  return m;
}

RingMatrix triangle_matrix() { return RingMatrix::from_rows(1, 1, {{1, 1}, {0, 1}}); }

}  // namespace zxw
