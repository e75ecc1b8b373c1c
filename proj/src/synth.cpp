#include "zxw/synth.hpp"

#include "builder.hpp"
#include "zxw/translate.hpp"

namespace zxw {

using detail::Builder;

HalfFactored factor_half(const Diagram& d) {
  HalfFactored r;
  r.core = d;
  for (auto it = r.core.nodes.begin(); it != r.core.nodes.end();) {
    if (it->second.kind == Kind::Half) {
      ++r.count;
      it = r.core.nodes.erase(it);
    } else {
      ++it;
    }
  }
  return r;
}

namespace {

// Each helper returns the endpoint of a dangling leg carrying the named state.

Endpoint one_state(Builder& b) {  // W with a self-loop: |1>
  int w = b.node(Kind::BW12, 3);
  b.link(Builder::p(w, 0), Builder::p(w, 1));
  return Builder::p(w, 2);
}

Endpoint zero_state(Builder& b) {
  Endpoint one = one_state(b);
  int n = b.node(Kind::BW11, 2);
  b.link(one, Builder::p(n, 0));
  return Builder::p(n, 1);
}

/// Effect <0| + <1| on the given leg.
void discard(Builder& b, Endpoint leg) {
  int z = b.node(Kind::WZ21, 3);
  b.link(Builder::p(z, 0), Builder::p(z, 1));  // <0| - <1|
  int s = b.node(Kind::WZ11, 2);
  b.link(Builder::p(z, 2), Builder::p(s, 0));
  b.link(Builder::p(s, 1), leg);
}

/// GHZ copy of `in` onto k legs (|0> -> |0..0>, |1> -> |1..1>).
std::vector<Endpoint> copy(Builder& b, Endpoint in, int k) {
  if (k == 1) return {in};
  std::vector<Endpoint> legs;
  int whites = 0;
  Endpoint cur = in;
  for (int i = 0; i < k - 1; ++i) {
    int z = b.node(Kind::WZ21, 3);
    ++whites;
    b.link(cur, Builder::p(z, 0));
    legs.push_back(Builder::p(z, 1));
    cur = Builder::p(z, 2);
  }
  legs.push_back(cur);
  if (whites % 2 == 1) {
    int s = b.node(Kind::WZ11, 2);
    b.link(legs.back(), Builder::p(s, 0));
    legs.back() = Builder::p(s, 1);
  }
  return legs;
}

/// One-hot merge of several legs into one: |0..0> -> |0>, |e_i> -> |1>.
Endpoint merge(Builder& b, const std::vector<Endpoint>& legs) {
  if (legs.empty()) return zero_state(b);
  Endpoint cur = legs[0];
  for (std::size_t i = 1; i < legs.size(); ++i) {
    int w = b.node(Kind::BW12, 3);
    int n = b.node(Kind::BW11, 2);
    b.link(cur, Builder::p(w, 0));
    b.link(legs[i], Builder::p(w, 1));
    b.link(Builder::p(w, 2), Builder::p(n, 0));
    cur = Builder::p(n, 1);
  }
  return cur;
}

/// diag(1, 2): a splitter followed by a merge.
Endpoint doubling(Builder& b, Endpoint in) {
  int n = b.node(Kind::BW11, 2);
  int w = b.node(Kind::BW12, 3);
  b.link(in, Builder::p(n, 0));
  b.link(Builder::p(n, 1), Builder::p(w, 0));
  return merge(b, {Builder::p(w, 1), Builder::p(w, 2)});
}

}  // namespace

Diagram zw_synthesize(const RingMatrix& a) {
  if (!a.is_dyadic()) throw std::invalid_argument("zw_synthesize: matrix has non-dyadic entries");
  const int n_in = static_cast<int>(a.in_wires()), n_out = static_cast<int>(a.out_wires());
  const int legs = n_in + n_out;
  Builder b(n_in, n_out);

  unsigned q = 0;
  for (const auto& e : a.entries()) q = std::max(q, e.denominator_exp());

  struct Unit {
    std::vector<int> bits;
    bool negative;
    unsigned doublings;  // weight 2^doublings
  };
  std::vector<Unit> units;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Cyclotomic& e = a.at(r, c);
      if (e.is_zero()) continue;
      BigInt v = e.raw_num(0) << (q - e.denominator_exp());
      bool neg = v < 0;
      if (neg) v = -v;
      std::vector<int> bits(legs);
      for (int j = 0; j < n_out; ++j) bits[j] = (r >> (n_out - 1 - j)) & 1;
      for (int i = 0; i < n_in; ++i) bits[n_out + i] = (c >> (n_in - 1 - i)) & 1;
      for (unsigned k = 0; v != 0; ++k, v >>= 1)
        if ((v & 1) != 0) units.push_back({bits, neg, k});
    }

  auto boundary = [&](int leg) {
    return leg < n_out ? Endpoint::out(leg) : Endpoint::in(leg - n_out);
  };

  if (units.empty()) {
    int z = b.node(Kind::WZ11, 2);  // trace of diag(1,-1)
    b.link(Builder::p(z, 0), Builder::p(z, 1));
    for (int l = 0; l < legs; ++l) b.link(zero_state(b), boundary(l));
    return b.d;
  }
  for (unsigned i = 0; i < q; ++i) b.node(Kind::Half, 0);

  // one-hot distribution over the units
  std::vector<Endpoint> branch;
  Endpoint rest = one_state(b);
  for (std::size_t u = 0; u + 1 < units.size(); ++u) {
    int n = b.node(Kind::BW11, 2);
    int w = b.node(Kind::BW12, 3);
    b.link(rest, Builder::p(n, 0));
    b.link(Builder::p(n, 1), Builder::p(w, 0));
    branch.push_back(Builder::p(w, 1));
    rest = Builder::p(w, 2);
  }
  branch.push_back(rest);

  std::vector<std::vector<Endpoint>> collect(legs);
  for (std::size_t u = 0; u < units.size(); ++u) {
    Endpoint br = branch[u];
    for (unsigned k = 0; k < units[u].doublings; ++k) br = doubling(b, br);
    if (units[u].negative) {
      int s = b.node(Kind::WZ11, 2);
      b.link(br, Builder::p(s, 0));
      br = Builder::p(s, 1);
    }
    std::vector<int> on;
    for (int l = 0; l < legs; ++l)
      if (units[u].bits[l]) on.push_back(l);
    if (on.empty()) {
      discard(b, br);
      continue;
    }
    auto cps = copy(b, br, static_cast<int>(on.size()));
    for (std::size_t k = 0; k < on.size(); ++k) collect[on[k]].push_back(cps[k]);
  }
  for (int l = 0; l < legs; ++l) b.link(merge(b, collect[l]), boundary(l));
  return b.d;
}

Diagram zx_synthesize(const RingMatrix& a) {
  Diagram w = zw_synthesize(psi_matrix(a));
  return expand_triangle(recover(wx(w)));
}

}  // namespace zxw
