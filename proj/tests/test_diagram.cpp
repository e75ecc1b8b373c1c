#include <doctest.h>

#include "zxw/diagram.hpp"
#include "zxw/evaluator.hpp"
#include "zxw/random.hpp"

using namespace zxw;

namespace {

Diagram g(const std::string& s) { return to_graph(parse_term(s)); }

}  // namespace

TEST_CASE("parse and serialize") {
  Term t = parse_term("(Z 1 2 0)");
  CHECK(t.op == Term::Op::Gen);
  CHECK(t.gen.kind == Kind::Z);
  CHECK(t.in_wires() == 1);
  CHECK(t.out_wires() == 2);
  Term s = parse_term(" ( seq (Z 1 1 1)\n (H) ) ");
  CHECK(serialize(s) == "(seq (Z 1 1 1) (H))");
  CHECK(parse_term("(X 0 0 -1)").gen.phase == 7);
  CHECK(parse_term("(Z 0 0 9)").gen.phase == 1);
  CHECK_THROWS_AS(parse_term("(seq (Z 1 2 0) (H))"), ParseError);
  CHECK_THROWS_AS(parse_term("(foo)"), ParseError);
  CHECK_THROWS_AS(parse_term("(Z 1 2)"), ParseError);
  CHECK_THROWS_AS(parse_term("(Z 1 1 0) (H)"), ParseError);
  CHECK_THROWS_AS(parse_term("(Z -1 1 0)"), ParseError);
  try {
    parse_term("(seq (H) (bogus))");
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
  }
}

TEST_CASE("serialize inverts parse on random terms") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Term t = (i % 2) ? random_zx_term(rng, {4, 8, 4, true}) : random_zw_term(rng);
    Term u = parse_term(serialize(t));
    CHECK(u == t);
    CHECK(serialize(u) == serialize(t));
  }
}

TEST_CASE("wiring normalizes away") {
  Diagram id = g("(id)");
  CHECK(id.nodes.empty());
  REQUIRE(id.edges.size() == 1);
  CHECK(id.edges[0].first == Endpoint::in(0));
  CHECK(id.edges[0].second == Endpoint::out(0));
  // yanking, both bendings
  CHECK(graph_equal(g("(seq (par (cap) (id)) (par (id) (cup)))"), id));
  CHECK(graph_equal(g("(seq (par (id) (cap)) (par (cup) (id)))"), id));
  CHECK(graph_equal(g("(seq (swap) (swap))"), g("(par (id) (id))")));
  Diagram circle = g("(seq (cap) (cup))");
  CHECK(circle.free_loops == 1);
  CHECK(circle.edges.empty());
}

TEST_CASE("fermionic swap keeps its port order") {
  Diagram f = g("(fswap)");
  Diagram permuted = f;
  for (auto& [a, b] : permuted.edges)
    for (Endpoint* e : {&a, &b})
      if (e->type == Endpoint::Type::Port && e->index < 2) e->index = 1 - e->index;
  CHECK_FALSE(graph_equal(f, permuted));
  CHECK(graph_equal(f, f));
  for (const auto& [a, b] : f.edges) {
    const Endpoint& p = a.type == Endpoint::Type::Port ? a : b;
    const Endpoint& q = a.type == Endpoint::Type::Port ? b : a;
    if (q.type == Endpoint::Type::In) CHECK(p.index == q.index);
    if (q.type == Endpoint::Type::Out) CHECK(p.index == 2 + q.index);
  }
}

TEST_CASE("graph equality") {
  CHECK(graph_equal(g("(Z 2 1 0)"), g("(seq (swap) (Z 2 1 0))")));
  CHECK_FALSE(graph_equal(g("(Z 1 1 1)"), g("(Z 1 1 2)")));
  CHECK_FALSE(graph_equal(g("(par (Z 1 1 1) (id))"), g("(par (id) (Z 1 1 1))")));
  CHECK_FALSE(graph_equal(g("(tri)"), flip_updown(g("(tri)"))));
}

TEST_CASE("transforms") {
  Diagram z = negate_angles(g("(Z 1 1 1)"));
  CHECK(z.nodes.begin()->second.phase == 7);
  Diagram d = g("(seq (Z 1 2 3) (par (X 1 1 2) (H)))");
  CHECK(graph_equal(color_swap(color_swap(d)), d));
  CHECK(graph_equal(flip_updown(g("(cup)")), g("(cap)")));
  CHECK(graph_equal(flip_updown(flip_updown(d)), d));
  CHECK_THROWS_AS(color_swap(g("(wZ11)")), TypeError);
  CHECK_THROWS_AS(negate_angles(g("(bW12)")), TypeError);
}

TEST_CASE("triangle definition") {
  Diagram e = expand_triangle(g("(tri)"));
  CHECK(e.count(Kind::Tri) == 0);
  CHECK(evaluate(e) == RingMatrix::from_rows(1, 1, {{1, 1}, {0, 1}}));
  CHECK(evaluate(g("(tri)")) == evaluate(e));
  Diagram nested = g("(seq (tri) (par (Z 1 2 0)) (par (tri) (tri)))");
  Diagram ne = expand_triangle(nested);
  CHECK(ne.count(Kind::Tri) == 0);
  CHECK(evaluate(ne) == evaluate(nested));
  Diagram plain = g("(Z 1 1 2)");
  CHECK(graph_equal(expand_triangle(plain), plain));
}

TEST_CASE("generator semantics") {
  Cyclotomic s = Cyclotomic::inv_sqrt2();
  CHECK(evaluate(g("(H)")) == RingMatrix::from_rows(1, 1, {{s, s}, {s, -s}}));
  CHECK(evaluate(g("(Z 0 0 1)")) == RingMatrix::scalar(Cyclotomic(1) + from_phase(1)));
  CHECK(evaluate(g("(half)")) == RingMatrix::scalar(Cyclotomic(Dyadic(1, 1))));
  CHECK(evaluate(g("(empty)")) == RingMatrix::scalar(1));
  CHECK(evaluate(g("(seq (cap) (cup))")) == RingMatrix::scalar(2));
  CHECK(evaluate(g("(wZ11)")) == RingMatrix::from_rows(1, 1, {{1, 0}, {0, -1}}));
  CHECK(evaluate(g("(wZ21)")) == RingMatrix::from_rows(1, 2, {{1, 0, 0, 0}, {0, 0, 0, -1}}));
  CHECK(evaluate(g("(bW11)")) == RingMatrix::from_rows(1, 1, {{0, 1}, {1, 0}}));
  CHECK(evaluate(g("(bW12)")) == RingMatrix::from_rows(2, 1, {{0, 1}, {1, 0}, {1, 0}, {0, 0}}));
  CHECK(evaluate(g("(fswap)")) ==
        RingMatrix::from_rows(2, 2, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}}));
  CHECK(evaluate(g("(swap)")) ==
        RingMatrix::from_rows(2, 2, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));
  CHECK(evaluate(g("(cap)")) == RingMatrix::from_rows(2, 0, {{1}, {0}, {0}, {1}}));
  CHECK(evaluate(g("(cup)")) == RingMatrix::from_rows(0, 2, {{1, 0, 0, 1}}));
  // ordering: |0> (x) |1> is index 01
  RingMatrix k0 = RingMatrix::from_rows(1, 0, {{1}, {0}}), k1 = RingMatrix::from_rows(1, 0, {{0}, {1}});
  CHECK(tensor(k0, k1) == RingMatrix::from_rows(2, 0, {{0}, {1}, {0}, {0}}));
  for (int k = 0; k < 8; ++k) {
    RingMatrix x = evaluate(g("(X 1 1 " + std::to_string(k) + ")"));
    for (const auto& e : x.entries()) CHECK(e.denominator_exp() <= 1u);
  }
}

TEST_CASE("CNOT against brute force") {
  Diagram cnot = g("(seq (par (Z 1 2 0) (id)) (par (id) (X 2 1 0)))");
  Cyclotomic s = Cyclotomic::inv_sqrt2();
  RingMatrix expect = RingMatrix::from_rows(
      2, 2, {{s, 0, 0, 0}, {0, s, 0, 0}, {0, 0, 0, s}, {0, 0, s, 0}});
  CHECK(brute_force_contract(cnot) == expect);
  CHECK(evaluate(cnot) == expect);
}

TEST_CASE("mixed diagrams are refused") {
  CHECK_THROWS_AS(evaluate(g("(seq (H) (wZ11))")), EvalError);
}

TEST_CASE("random diagrams: all evaluation paths agree") {
  std::mt19937_64 rng(42);
  RandomShape shape{4, 8, 4, true};
  for (int i = 0; i < 200; ++i) {
    bool zw = i % 3 == 2;
    Term t = zw ? random_zw_term(rng, shape) : random_zx_term(rng, shape);
    Diagram d = to_graph(t);
    d.validate();
    RingMatrix m = evaluate(d);
    CHECK(m == evaluate(t));
    std::size_t internal = 0;
    for (const auto& [a, b] : d.edges) internal += !a.is_boundary() && !b.is_boundary();
    if (internal <= 10) CHECK(m == brute_force_contract(d));
    Diagram back = to_graph(to_term(d));
    CHECK(graph_equal(back, d));
    CHECK(evaluate(flip_updown(d)) == transpose(m));
    CHECK(graph_equal(diagram_from_json(to_json(d)), d));
    if (!zw) {
      CHECK(evaluate(negate_angles(d)) == conj_entrywise(m));
      RingMatrix h = hadamard_matrix();
      RingMatrix expect = compose(tensor_power(h, d.n_out), compose(m, tensor_power(h, d.n_in)));
      CHECK(evaluate(color_swap(d)) == expect);
    }
  }
}
