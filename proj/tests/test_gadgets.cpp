#include <doctest.h>

#include "oracles.hpp"
#include "zxw/evaluator.hpp"
#include "zxw/gadgets.hpp"
#include "zxw/random.hpp"

using namespace zxw;

namespace {

RingMatrix x_on_first() { return tensor(RingMatrix::from_rows(1, 1, {{0, 1}, {1, 0}}), RingMatrix::identity(1)); }

RingMatrix basis(unsigned wires, std::size_t index) {
  RingMatrix v(wires, 0);
  v.at(index, 0) = 1;
  return v;
}

void check_equiv(const Term& t, const RingMatrix& target) {
  auto r = equal_up_to_scalar(evaluate(t), target);
  CHECK(r.equal);
  CHECK_FALSE(r.scalar.is_zero());
  CHECK(evaluate(t) == scalar_mul(r.scalar, target));
}

}  // namespace

TEST_CASE("exact quotients") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    RingMatrix m = random_matrix(rng, 1, 0, 9, 3, false);
    const Cyclotomic& a = m.at(0, 0);
    const Cyclotomic& b = m.at(1, 0);
    if (b.is_zero()) continue;
    Cyclotomic q;
    // The product always divides back; the oracle checks the numbers.
    REQUIRE(exact_quotient(a * b, b, q));
    CHECK(q == a);
    CHECK(oracle::embed(q) * oracle::embed(b) == oracle::embed(a * b));
  }
  Cyclotomic q;
  CHECK_FALSE(exact_quotient(1, 3, q));
  CHECK_FALSE(exact_quotient(1, 0, q));
  // 1 + w has norm 2, so it is a unit of D[w].
  REQUIRE(exact_quotient(1, Cyclotomic(1, 1, 0, 0), q));
  CHECK(q * Cyclotomic(1, 1, 0, 0) == 1);
  CHECK(galois(Cyclotomic::root_power(1), 3) == Cyclotomic::root_power(3));
  CHECK(galois(Cyclotomic::sqrt2(), 3) == -Cyclotomic::sqrt2());
}

TEST_CASE("equal up to scalar") {
  RingMatrix a = RingMatrix::from_rows(1, 1, {{1, Cyclotomic::root_power(1)}, {0, 3}});
  auto same = equal_up_to_scalar(a, a);
  CHECK(same.equal);
  CHECK(same.scalar == 1);
  auto twice = equal_up_to_scalar(scalar_mul(2, a), a);
  CHECK(twice.equal);
  CHECK(twice.scalar == 2);
  auto root = equal_up_to_scalar(scalar_mul(Cyclotomic::root_power(5), a), a);
  CHECK(root.scalar == Cyclotomic::root_power(5));
  CHECK_FALSE(equal_up_to_scalar(evaluate(controlled_rz(2)), evaluate(seq({par({G(Kind::Id), G(Kind::H)}), controlled_rz(2), par({G(Kind::Id), G(Kind::H)})}))).equal);
  CHECK_FALSE(equal_up_to_scalar(RingMatrix(1, 1), a).equal);
  CHECK(equal_up_to_scalar(RingMatrix(1, 1), RingMatrix(1, 1)).equal);
  CHECK_THROWS_AS(equal_up_to_scalar(a, RingMatrix::identity(2)), DimensionError);
}

TEST_CASE("controlled rotations") {
  check_equiv(controlled_rz(2), controlled_phase_matrix(2));
  CHECK(controlled_phase_matrix(2).at(3, 3) == -1);
  check_equiv(controlled_rz(0), RingMatrix::identity(2));
  RingMatrix h2 = tensor(RingMatrix::identity(1), hadamard_matrix());
  for (int k = 0; k < 8; ++k) {
    check_equiv(controlled_rz(k), controlled_phase_matrix(k));
    check_equiv(controlled_rx(k), compose(h2, compose(controlled_phase_matrix(k), h2)));
    // <0| on the control leaves the identity on the target.
    Term plugged = seq({par({Xs(0, 1, 0), G(Kind::Id)}), controlled_rz(k), par({Xs(1, 0, 0), G(Kind::Id)})});
    check_equiv(plugged, RingMatrix::identity(1));
  }
}

TEST_CASE("anti-controlled") {
  for (int k = 0; k < 8; ++k) {
    Term d = controlled_rz(k);
    Term a = anti_controlled(d);
    CHECK(evaluate(a) == compose(x_on_first(), compose(evaluate(d), x_on_first())));
    CHECK(evaluate(anti_controlled(a)) == evaluate(d));
    RingMatrix expect = RingMatrix::identity(2);
    expect.at(1, 1) = Cyclotomic::root_power(2LL * k);
    check_equiv(a, expect);
  }
  for (int j = 0; j < 8; ++j)
    for (int k = 0; k < 8; ++k) {
      RingMatrix x = evaluate(controlled_rx(j)), z = evaluate(anti_controlled(controlled_rz(k)));
      CHECK(compose(x, z) == compose(z, x));
    }
  CHECK_THROWS_AS(anti_controlled(G(Kind::H)), TypeError);
}

TEST_CASE("controlled pair commutes with anti-controlled rotation") {
  for (int a = 0; a < 8; ++a)
    for (int g = 0; g < 8; ++g) {
      RingMatrix u = evaluate(controlled_u(a, g));
      for (int b = 0; b < 8; ++b) {
        RingMatrix v = evaluate(anti_controlled_rz_first(b));
        CHECK(compose(u, v) == compose(v, u));
      }
    }
  // The family is controlled: with control 0 it acts trivially.
  RingMatrix u = evaluate(controlled_u(3, 5));
  for (std::size_t c = 0; c < 4; ++c) {
    auto col = compose(u, basis(3, c));
    auto r = equal_up_to_scalar(col, basis(3, c));
    CHECK(r.equal);
  }
}

TEST_CASE("toffoli from triangles") {
  check_equiv(and_gate(), RingMatrix::from_rows(1, 2, {{1, 1, 1, 0}, {0, 0, 0, 1}}));
  check_equiv(toffoli(), toffoli_matrix());
  CHECK(evaluate(toffoli()) == scalar_mul(Cyclotomic::inv_sqrt2(), toffoli_matrix()));
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) {
      Term t = seq({par({Xs(0, 1, 4 * k), Xs(0, 1, 4 * l), G(Kind::Id)}), toffoli()});
      RingMatrix flip = (k & l) ? RingMatrix::from_rows(1, 1, {{0, 1}, {1, 0}}) : RingMatrix::identity(1);
      check_equiv(t, tensor(basis(2, 2 * k + l), flip));
    }
  check_equiv(triangle_from_toffoli(), triangle_matrix());
  auto tri = equal_up_to_scalar(evaluate(triangle_from_toffoli()), evaluate(G(Kind::Tri)));
  CHECK(tri.equal);
  CHECK(tri.scalar == Cyclotomic::sqrt2());
}
