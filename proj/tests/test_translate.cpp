#include <doctest.h>

#include "zxw/evaluator.hpp"
#include "zxw/random.hpp"
#include "zxw/synth.hpp"
#include "zxw/translate.hpp"

using namespace zxw;

namespace {

RingMatrix column(std::vector<Cyclotomic> v, unsigned wires) {
  RingMatrix m(wires, 0);
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

}  // namespace

TEST_CASE("zw macros") {
  CHECK(evaluate(zw_one()) == column({0, 1}, 1));
  CHECK(evaluate(zw_zero()) == column({1, 0}, 1));
  CHECK(evaluate(zw_plus()) == column({1, 1}, 1));
  CHECK(evaluate(zw_discard()) == transpose(column({1, 1}, 1)));
  CHECK(evaluate(zw_splitter()) == RingMatrix::from_rows(2, 1, {{1, 0}, {0, 1}, {0, 1}, {0, 0}}));
  for (int m = 0; m <= 4; ++m) {
    RingMatrix c(m, 1);
    c.at(0, 0) = 1;
    c.at(c.rows() - 1, 1) = 1;
    if (m == 0) c.at(0, 1) = 1;
    CHECK(evaluate(zw_copy(m)) == c);
    CHECK(evaluate(zw_merge(m)) == transpose(c));
    CHECK(to_graph(zw_copy(m)).calculus() != Calculus::ZX);
  }
}

TEST_CASE("zx scalars and theta") {
  CHECK(evaluate(zx_sqrt2()) == RingMatrix::scalar(Cyclotomic::sqrt2()));
  CHECK(evaluate(zx_inv_sqrt2()) == RingMatrix::scalar(Cyclotomic::inv_sqrt2()));
  CHECK(evaluate(zx_half()) == RingMatrix::scalar(Cyclotomic(1).halved()));
  for (int k = 0; k < 8; ++k) CHECK(evaluate(zx_phase_scalar(k)) == RingMatrix::scalar(from_phase(k)));
  CHECK(evaluate(theta_state()) == theta_vector());
  CHECK(evaluate(e1_effect()) == transpose(column({1, 0, 0, 0}, 2)));
}

TEST_CASE("xw images of the basic generators") {
  RingMatrix hh = evaluate(xw_hadamard());
  CHECK(hh == psi_matrix(hadamard_matrix()));
  RingMatrix p = RingMatrix::identity(1);
  p.at(1, 1) = from_phase(1);
  CHECK(evaluate(xw_phase()) == psi_matrix(p));
  CHECK(xw_hadamard().calculus() == Calculus::ZW);
}

TEST_CASE("xw agrees with psi on generators") {
  std::vector<Term> gens{G(Kind::Id), G(Kind::Swap), G(Kind::Cup), G(Kind::Cap), G(Kind::Empty),
                         G(Kind::H), G(Kind::Tri)};
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      for (int k : {0, 1, 4, 7}) {
        gens.push_back(Zs(n, m, k));
        gens.push_back(Xs(n, m, k));
      }
  for (const auto& g : gens) {
    INFO(serialize(g));
    Diagram w = xw(g);
    CHECK(w.calculus() != Calculus::ZX);
    CHECK(evaluate(w) == psi_matrix(evaluate(g)));
  }
}

TEST_CASE("xw agrees with psi on random terms") {
  std::mt19937_64 rng(21);
  RandomShape shape;
  shape.max_nodes = 6;
  shape.max_wires = 3;
  shape.triangles = true;
  for (int i = 0; i < 25; ++i) {
    Term t = random_zx_term(rng, shape);
    INFO(serialize(t));
    CHECK(evaluate(xw(t)) == psi_matrix(evaluate(t)));
  }
}

TEST_CASE("wx preserves semantics") {
  for (Kind k : {Kind::WZ11, Kind::WZ21, Kind::BW11, Kind::BW12, Kind::FSwap, Kind::Half}) {
    Diagram g = to_graph(G(k));
    Diagram x = wx(g);
    CHECK(x.calculus() == Calculus::ZX);
    CHECK(evaluate(x) == evaluate(g));
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    Term t = random_zw_term(rng);
    INFO(serialize(t));
    CHECK(evaluate(wx(to_graph(t))) == evaluate(t));
  }
  CHECK_THROWS_AS(wx(to_graph(Zs(1, 1, 0))), TypeError);
  CHECK_THROWS_AS(xw(G(Kind::BW11)), TypeError);
}

TEST_CASE("recover inverts xw") {
  std::mt19937_64 rng(77);
  RandomShape shape;
  shape.max_nodes = 5;
  shape.max_wires = 3;
  for (int i = 0; i < 10; ++i) {
    Term t = random_zx_term(rng, shape);
    INFO(serialize(t));
    Diagram r = recover(wx(xw(t)));
    CHECK(r.calculus() == Calculus::ZX);
    CHECK(evaluate(r) == evaluate(t));
  }
}

TEST_CASE("synthesis") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    unsigned out = rng() % 3, in = rng() % 3;
    RingMatrix a = random_matrix(rng, out, in, 3, 2, true);
    Diagram w = zw_synthesize(a);
    CHECK(w.calculus() != Calculus::ZX);
    CHECK(evaluate(w) == a);
    auto f = factor_half(w);
    CHECK(f.core.count(Kind::Half) == 0);
    CHECK(scalar_mul(Cyclotomic(1).halved(f.count), evaluate(f.core)) == a);
  }
  CHECK(evaluate(zw_synthesize(RingMatrix(1, 1))) == RingMatrix(1, 1));
  CHECK_THROWS_AS(zw_synthesize(hadamard_matrix()), std::invalid_argument);
  for (int i = 0; i < 6; ++i) {
    RingMatrix a = random_matrix(rng, rng() % 2, rng() % 2 + 1, 2, 1, false);
    Diagram x = zx_synthesize(a);
    CHECK(x.calculus() == Calculus::ZX);
    CHECK(x.count(Kind::Tri) == 0);
    CHECK(evaluate(x) == a);
  }
  CHECK(evaluate(zx_synthesize(hadamard_matrix())) == hadamard_matrix());
}
