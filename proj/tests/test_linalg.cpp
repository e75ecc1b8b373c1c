#include <doctest.h>

#include "oracles.hpp"
#include "zxw/linalg.hpp"
#include "zxw/random.hpp"

using namespace zxw;

TEST_CASE("compose and tensor") {
  RingMatrix i1 = RingMatrix::identity(1);
  CHECK(compose(i1, i1) == i1);
  RingMatrix h = hadamard_matrix();
  CHECK(compose(h, h) == i1);
  CHECK(conj_entrywise(h) == h);
  CHECK_THROWS_AS(compose(RingMatrix::identity(2), i1), DimensionError);
  CHECK(tensor(RingMatrix::scalar(2), i1) == scalar_mul(2, i1));
  CHECK(tensor(i1, i1) == RingMatrix::identity(2));
  CHECK_THROWS_AS(add(i1, RingMatrix::identity(2)), DimensionError);
  CHECK_THROWS_AS(equal(i1, RingMatrix::identity(2)), DimensionError);
}

TEST_CASE("matrix laws on random samples") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    RingMatrix a = random_matrix(rng, 1, 2, 5, 2, false);
    RingMatrix b = random_matrix(rng, 2, 1, 5, 2, false);
    RingMatrix c = random_matrix(rng, 1, 1, 5, 2, false);
    RingMatrix d = random_matrix(rng, 1, 1, 5, 2, false);
    CHECK(compose(c, compose(a, b)) == compose(compose(c, a), b));
    CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
    CHECK(compose(tensor(a, c), tensor(b, d)) == tensor(compose(a, b), compose(c, d)));
    CHECK(transpose(transpose(a)) == a);
    CHECK(equal(a, a));
    // entrywise product against the complex oracle
    RingMatrix ab = compose(a, b);
    for (std::size_t r = 0; r < ab.rows(); ++r)
      for (std::size_t col = 0; col < ab.cols(); ++col) {
        oracle::Complex acc{};
        for (std::size_t k = 0; k < a.cols(); ++k)
          acc = acc + oracle::embed(a.at(r, k)) * oracle::embed(b.at(k, col));
        CHECK(oracle::embed(ab.at(r, col)) == acc);
      }
  }
}

TEST_CASE("psi and theta") {
  RingMatrix m = psi_matrix(RingMatrix::scalar(Cyclotomic::sqrt2()));
  Dyadic4x4 expect = psi_scalar(Cyclotomic::sqrt2());
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(m.at(r, c) == Cyclotomic(expect[r][c]));
  CHECK(psi_matrix(RingMatrix::identity(1)) == RingMatrix::identity(3));
  RingMatrix M(2, 2);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) M.at(r, c) = Cyclotomic(companion_matrix()[r][c]);
  CHECK(theta_recover(M, 0, 0) == RingMatrix::scalar(from_phase(1)));

  RingMatrix bad = RingMatrix::identity(2);
  bad.at(1, 2) = 1;
  CHECK_THROWS_AS(theta_recover(bad, 0, 0), std::domain_error);
  CHECK_THROWS_AS(theta_recover(RingMatrix::identity(2), 1, 0), DimensionError);

  std::mt19937_64 rng(13);
  RingMatrix theta = theta_vector();
  for (int i = 0; i < 30; ++i) {
    unsigned out = i % 4, in = (i / 4) % 4;
    RingMatrix x = random_matrix(rng, out, in, 8, 3, false);
    RingMatrix px = psi_matrix(x);
    CHECK(px.is_dyadic());
    CHECK(theta_recover(px, out, in) == x);
    // psi(X) (I (x) theta) = X (x) theta
    CHECK(compose(px, tensor(RingMatrix::identity(in), theta)) == tensor(x, theta));
    if (out == in) {
      RingMatrix y = random_matrix(rng, out, in, 8, 3, false);
      CHECK(psi_matrix(compose(x, y)) == compose(px, psi_matrix(y)));
    }
  }
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(21);
  RingMatrix x = random_matrix(rng, 2, 1, 8, 3, false);
  CHECK(matrix_from_json(to_json(x)) == x);
  CHECK(to_json(Cyclotomic::inv_sqrt2()).dump() == "[[0,0],[1,1],[0,0],[-1,1]]");
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"out":1,"in":0,"entries":[[[[1,0],[0,0],[0,0],[0,0]]]]})")),
                  std::invalid_argument);
}
