#include "zxw/translate.hpp"

#include <functional>

#include "builder.hpp"
#include "zxw/linalg.hpp"
#include "zxw/synth.hpp"

namespace zxw {

using detail::Builder;

// ---------------------------------------------------------------- macros

Term zw_one() {
  return seq({G(Kind::Cap), par({G(Kind::Id), G(Kind::BW12)}), par({G(Kind::Cup), G(Kind::Id)})});
}

Term zw_zero() { return seq({zw_one(), G(Kind::BW11)}); }

namespace {

Term bent_wz12() {  // |0> -> |00>, |1> -> -|11>
  return seq({par({G(Kind::Cap), G(Kind::Id)}), par({G(Kind::Id), G(Kind::WZ21)})});
}

Term merge2() { return seq({G(Kind::WZ21), G(Kind::WZ11)}); }

}  // namespace

Term zw_plus() { return seq({G(Kind::Cap), merge2()}); }

Term zw_discard() { return seq({G(Kind::WZ11), bent_wz12(), G(Kind::Cup)}); }

Term zw_copy(int m) {
  if (m == 0) return zw_discard();
  if (m == 1) return G(Kind::Id);
  Term t = seq({G(Kind::WZ11), bent_wz12()});
  for (int k = 2; k < m; ++k) t = seq({t, par({ids(k - 1), seq({G(Kind::WZ11), bent_wz12()})})});
  return t;
}

Term zw_merge(int n) {
  if (n == 0) return zw_plus();
  if (n == 1) return G(Kind::Id);
  Term t = merge2();
  for (int k = 2; k < n; ++k) t = seq({par({t, G(Kind::Id)}), merge2()});
  return t;
}

Term zw_splitter() { return seq({G(Kind::BW11), G(Kind::BW12)}); }

Term zx_sqrt2() { return seq({Zs(0, 1, 0), Xs(1, 0, 0)}); }

Term zx_inv_sqrt2() { return seq({Zs(0, 3, 0), Xs(3, 0, 0)}); }

Term zx_half() { return par({zx_inv_sqrt2(), zx_inv_sqrt2()}); }

Term zx_phase_scalar(int k) {
  // Z(0,1,k) into X(1,0,4) is sqrt2 w^k
  return par({seq({Zs(0, 1, mod8(k)), Xs(1, 0, 4)}), zx_inv_sqrt2()});
}

Term theta_state() { return par({Zs(0, 1, 2), Zs(0, 1, 1)}); }

Term e1_effect() { return par({Xs(1, 0, 0), Xs(1, 0, 0), zx_half()}); }

// ------------------------------------------------------------- wiring

Diagram permutation_graph(const std::vector<int>& target) {
  Diagram d;
  d.n_in = d.n_out = static_cast<int>(target.size());
  for (std::size_t p = 0; p < target.size(); ++p)
    d.edges.push_back({Endpoint::in(static_cast<int>(p)), Endpoint::out(target[p])});
  return d;
}

Diagram identity_graph(int n) {
  std::vector<int> t(n);
  for (int i = 0; i < n; ++i) t[i] = i;
  return permutation_graph(t);
}

// ------------------------------------------------------------------- xw

const Diagram& xw_hadamard() {
  static const Diagram d = zw_synthesize(psi_matrix(hadamard_matrix()));
  return d;
}

const Diagram& xw_phase() {
  static const Diagram d = [] {
    RingMatrix p = RingMatrix::identity(1);
    p.at(1, 1) = from_phase(1);
    return zw_synthesize(psi_matrix(p));
  }();
  return d;
}

namespace {

Diagram with_controls(const Term& t) { return graph_tensor(to_graph(t), identity_graph(2)); }

Diagram compose_all(std::initializer_list<Diagram> parts) {
  auto it = parts.begin();
  Diagram d = *it;
  for (++it; it != parts.end(); ++it) d = graph_compose(d, *it);
  return d;
}

/// Moves the first a wires past the next b wires, control pair untouched.
Diagram cross(int a, int b) {
  std::vector<int> t(a + b + 2);
  for (int i = 0; i < a; ++i) t[i] = b + i;
  for (int i = 0; i < b; ++i) t[a + i] = i;
  t[a + b] = a + b;
  t[a + b + 1] = a + b + 1;
  return permutation_graph(t);
}

Diagram xw_rec(const Term& t);

Diagram hadamards(int n) {
  if (n == 0) return identity_graph(2);
  std::vector<Term> hs(n, G(Kind::H));
  return xw_rec(par(std::move(hs)));
}

Diagram xw_z(int n, int m, int k) {
  Diagram d = with_controls(zw_merge(n));
  for (int i = 0; i < mod8(k); ++i) d = graph_compose(d, xw_phase());
  return graph_compose(d, with_controls(zw_copy(m)));
}

Diagram xw_gen(const Gen& g) {
  switch (g.kind) {
    case Kind::Empty: return identity_graph(2);
    case Kind::Id: return identity_graph(3);
    case Kind::Swap:
    case Kind::Cup:
    case Kind::Cap: return with_controls(G(g.kind));
    case Kind::H: return xw_hadamard();
    case Kind::Z: return xw_z(g.n, g.m, g.phase);
    case Kind::X: return compose_all({hadamards(g.n), xw_z(g.n, g.m, g.phase), hadamards(g.m)});
    case Kind::Tri: return xw_rec(triangle_definition());
    default: break;
  }
  throw TypeError(std::string("xw: not a ZX generator: ") + kind_name(g.kind));
}

Diagram xw_rec(const Term& t) {
  switch (t.op) {
    case Term::Op::Gen: return xw_gen(t.gen);
    case Term::Op::Seq: {
      Diagram d = xw_rec(t.kids.front());
      for (std::size_t i = 1; i < t.kids.size(); ++i) d = graph_compose(d, xw_rec(t.kids[i]));
      return d;
    }
    case Term::Op::Par: {
      if (t.kids.empty()) return identity_graph(2);
      Term acc = t.kids.front();
      Diagram d = xw_rec(acc);
      for (std::size_t i = 1; i < t.kids.size(); ++i) {
        const Term& k = t.kids[i];
        const int n = acc.in_wires(), n2 = acc.out_wires(), m = k.in_wires();
        d = compose_all({cross(n, m), graph_tensor(identity_graph(m), d), cross(m, n2),
                         graph_tensor(identity_graph(n2), xw_rec(k))});
        acc = par({acc, k});
      }
      return d;
    }
  }
  return {};
}

}  // namespace

Diagram xw(const Term& zx) {
  Diagram g = to_graph(zx);
  Calculus c = g.calculus();
  if (c == Calculus::ZW || c == Calculus::Mixed) throw TypeError("xw needs a ZX diagram");
  return xw_rec(zx);
}

Diagram xw(const Diagram& zx) { return xw(to_term(zx)); }

// ------------------------------------------------------------------- wx

namespace {

/// Replaces every node for which image() returns a diagram. Port p of the
/// node is glued to In(p) of the image, or Out(p - n_in) past its inputs.
Diagram substitute(const Diagram& d, const std::function<const Diagram*(const Node&)>& image) {
  std::map<int, Node> nodes;
  std::vector<Edge> raw;
  std::map<std::pair<int, int>, int> junction;
  auto jid = [&](int node, int port) {
    auto [it, fresh] = junction.emplace(std::make_pair(node, port), static_cast<int>(junction.size()));
    return Endpoint::junction(it->second);
  };
  std::map<int, const Diagram*> img;
  for (const auto& [id, n] : d.nodes) {
    const Diagram* g = image(n);
    if (g)
      img[id] = g;
    else
      nodes[id] = n;
  }
  auto outer = [&](Endpoint e) {
    if (e.type == Endpoint::Type::Port && img.count(e.node)) return jid(e.node, e.index);
    return e;
  };
  for (const auto& [a, b] : d.edges) raw.push_back({outer(a), outer(b)});
  int next = d.next_id();
  int loops = d.free_loops;
  for (const auto& [id, g] : img) {
    const int off = next;
    next += g->next_id();
    loops += g->free_loops;
    for (const auto& [gid, gn] : g->nodes) nodes[gid + off] = gn;
    auto inner = [&, id = id, g = g](Endpoint e) {
      if (e.type == Endpoint::Type::In) return jid(id, e.index);
      if (e.type == Endpoint::Type::Out) return jid(id, g->n_in + e.index);
      e.node += off;
      return e;
    };
    for (const auto& [a, b] : g->edges) raw.push_back({inner(a), inner(b)});
  }
  return resolve_junctions(d.n_in, d.n_out, std::move(nodes), raw, loops);
}

Diagram single(Kind k, int phase, int arity) {
  Builder b(0, arity);
  int n = b.node(k, arity, phase);
  for (int p = 0; p < arity; ++p) b.link(Builder::p(n, p), Endpoint::out(p));
  return b.d;
}

void add_sqrt2(Builder& b) {
  int z = b.node(Kind::Z, 1), x = b.node(Kind::X, 1);
  b.link(Builder::p(z, 0), Builder::p(x, 0));
}

void add_inv_sqrt2(Builder& b) {
  int z = b.node(Kind::Z, 3), x = b.node(Kind::X, 3);
  for (int p = 0; p < 3; ++p) b.link(Builder::p(z, p), Builder::p(x, p));
}

/// Exactly-one-of-three: odd parity, and not both of the first two.
Diagram w_image() {
  Builder b(0, 3);
  int ca = b.node(Kind::Z, 3), cb = b.node(Kind::Z, 3);
  int par = b.node(Kind::X, 3, 4);
  int neg = b.node(Kind::X, 2, 4);
  int tri = b.node(Kind::Tri, 2);
  b.link(Builder::p(ca, 0), Endpoint::out(0));
  b.link(Builder::p(cb, 0), Endpoint::out(1));
  b.link(Builder::p(par, 2), Endpoint::out(2));
  b.link(Builder::p(ca, 1), Builder::p(par, 0));
  b.link(Builder::p(cb, 1), Builder::p(par, 1));
  // nand(a, b) = T[b][not a]
  b.link(Builder::p(ca, 2), Builder::p(neg, 0));
  b.link(Builder::p(neg, 1), Builder::p(tri, 0));
  b.link(Builder::p(tri, 1), Builder::p(cb, 2));
  add_sqrt2(b);
  return b.d;
}

Diagram fswap_image() {  // ports in0 in1 out0 out1
  Builder b(0, 4);
  int a = b.node(Kind::Z, 3), c = b.node(Kind::Z, 3), h = b.node(Kind::H, 2);
  b.link(Endpoint::out(0), Builder::p(a, 0));
  b.link(Builder::p(a, 1), Endpoint::out(3));
  b.link(Endpoint::out(1), Builder::p(c, 0));
  b.link(Builder::p(c, 1), Endpoint::out(2));
  b.link(Builder::p(a, 2), Builder::p(h, 0));
  b.link(Builder::p(c, 2), Builder::p(h, 1));
  add_sqrt2(b);
  return b.d;
}

Diagram half_image() {
  Builder b(0, 0);
  add_inv_sqrt2(b);
  add_inv_sqrt2(b);
  return b.d;
}

}  // namespace

Diagram wx(const Diagram& zw) {
  Calculus c = zw.calculus();
  if (c == Calculus::ZX || c == Calculus::Mixed) throw TypeError("wx needs a ZW diagram");
  static const Diagram wz11 = single(Kind::Z, 4, 2), wz21 = single(Kind::Z, 4, 3),
                       bw11 = single(Kind::X, 4, 2), bw12 = w_image(), fs = fswap_image(),
                       half = half_image();
  return substitute(zw, [&](const Node& n) -> const Diagram* {
    switch (n.kind) {
      case Kind::WZ11: return &wz11;
      case Kind::WZ21: return &wz21;
      case Kind::BW11: return &bw11;
      case Kind::BW12: return &bw12;
      case Kind::FSwap: return &fs;
      case Kind::Half: return &half;
      default: return nullptr;
    }
  });
}

// ---------------------------------------------------------------- recover

Diagram recover(const Diagram& d) {
  if (d.n_in < 2 || d.n_out < 2) throw TypeError("recover needs at least two inputs and two outputs");
  Diagram top = graph_tensor(identity_graph(d.n_in - 2), to_graph(theta_state()));
  Diagram bottom = graph_tensor(identity_graph(d.n_out - 2), to_graph(e1_effect()));
  return graph_compose(graph_compose(top, d), bottom);
}

}  // namespace zxw
