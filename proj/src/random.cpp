#include "zxw/random.hpp"

namespace zxw {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

using Piece = std::function<Term()>;

Term random_term(std::mt19937_64& rng, const RandomShape& s, bool zw) {
  int width = pick(rng, 0, s.max_wires);
  int nodes = 0;
  const int layers = pick(rng, 1, s.max_layers);
  std::vector<Term> parts{ids(width)};
  for (int l = 0; l < layers; ++l) {
    std::vector<Term> pieces;
    int i = 0, out = 0;
    while (i < width || (pieces.empty() && width == 0)) {
      int rest = width - i;
      int room = s.max_wires - out - (rest > 0 ? rest - 1 : 0);
      bool node_ok = nodes < s.max_nodes;
      // candidates (n inputs, m outputs, builder)
      std::vector<Term> cand;
      if (rest >= 1) cand.push_back(G(Kind::Id));
      if (rest >= 2 && room >= 2) cand.push_back(G(Kind::Swap));
      if (rest >= 2 && pick(rng, 0, 3) == 0) cand.push_back(G(Kind::Cup));
      if (room >= 2 && pick(rng, 0, 5) == 0) cand.push_back(G(Kind::Cap));
      if (node_ok) {
        if (!zw) {
          int n = std::min(rest, pick(rng, 0, 2));
          int m = std::min(room, pick(rng, 0, 2));
          if (n + m > 0 || pick(rng, 0, 4) == 0) {
            cand.push_back(pick(rng, 0, 1) ? Zs(n, m, pick(rng, 0, 7)) : Xs(n, m, pick(rng, 0, 7)));
            cand.push_back(cand.back());
          }
          if (rest >= 1 && room >= 1) cand.push_back(G(Kind::H));
          if (s.triangles && rest >= 1 && room >= 1) cand.push_back(G(Kind::Tri));
        } else {
          if (rest >= 1 && room >= 1) {
            cand.push_back(G(Kind::WZ11));
            cand.push_back(G(Kind::BW11));
          }
          if (rest >= 2 && room >= 1) cand.push_back(G(Kind::WZ21));
          if (rest >= 1 && room >= 2) cand.push_back(G(Kind::BW12));
          if (rest >= 2 && room >= 2) cand.push_back(G(Kind::FSwap));
          if (pick(rng, 0, 6) == 0) cand.push_back(G(Kind::Half));
        }
      }
      if (cand.empty()) {
        if (rest == 0) break;
        cand.push_back(G(Kind::Id));
      }
      Term t = cand[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(cand.size()) - 1))];
      if (t.op == Term::Op::Gen && !is_wiring(t.gen.kind)) ++nodes;
      i += t.in_wires();
      out += t.out_wires();
      pieces.push_back(std::move(t));
      if (width == 0) break;
    }
    width = out;
    parts.push_back(par(std::move(pieces)));
  }
  return seq(std::move(parts));
}

}  // namespace

Term random_zx_term(std::mt19937_64& rng, const RandomShape& shape) { return random_term(rng, shape, false); }
Term random_zw_term(std::mt19937_64& rng, const RandomShape& shape) { return random_term(rng, shape, true); }

RingMatrix random_matrix(std::mt19937_64& rng, unsigned out, unsigned in, int max_num,
                         unsigned max_exp, bool dyadic_only) {
  RingMatrix m(out, in);
  auto dy = [&] { return Dyadic(pick(rng, -max_num, max_num), static_cast<unsigned>(pick(rng, 0, static_cast<int>(max_exp)))); };
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      m.at(r, c) = dyadic_only ? Cyclotomic(dy()) : Cyclotomic(dy(), dy(), dy(), dy());
  return m;
}

}  // namespace zxw
