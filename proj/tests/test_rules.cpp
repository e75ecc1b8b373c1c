#include <doctest.h>

#include <algorithm>
#include <set>

#include "zxw/evaluator.hpp"
#include "zxw/random.hpp"
#include "zxw/rules.hpp"
#include "zxw/translate.hpp"

using namespace zxw;
using nlohmann::json;

namespace {

Sexpr read1(const std::string& text) {
  auto rules = parse_rule_file("rule t lhs " + text + " rhs (empty)", Calculus::ZX);
  return rules.at(0).lhs;
}

Term expand(const std::string& text, const Env& env = {}) {
  return expand_template(read1(text), env, MacroTable{});
}

/// Pads or trims the outputs of t to exactly `wires` with random spiders.
Term fit_out(Term t, int wires, std::mt19937_64& rng) {
  int have = t.out_wires();
  int k = static_cast<int>(rng() % 8);
  if (have < wires) return par({t, par(std::vector<Term>(wires - have, Zs(0, 1, k)))});
  if (have > wires) return seq({t, par({ids(wires), Xs(have - wires, 0, k)})});
  return t;
}

Term fit_in(Term t, int wires, std::mt19937_64& rng) {
  int have = t.in_wires();
  int k = static_cast<int>(rng() % 8);
  if (have < wires) return par({t, par(std::vector<Term>(wires - have, Xs(1, 0, k)))});
  if (have > wires) return seq({par({ids(wires), Zs(0, have - wires, k)}), t});
  return t;
}

std::vector<RewriteRule> with_variants(Calculus c) {
  std::vector<RewriteRule> all;
  for (const auto& r : catalog(c)) {
    all.push_back(r);
    for (auto& v : variants(r)) all.push_back(v);
  }
  return all;
}

}  // namespace

TEST_CASE("templates") {
  CHECK(expand("(Z {n} {m+1} {2*a-1})", {{"n", 2}, {"m", 0}, {"a", 3}}) == Zs(2, 1, 5));
  CHECK(expand("(X 1 1 {-(a+b)})", {{"a", 1}, {"b", 2}}) == Xs(1, 1, 5));
  CHECK(expand("(rep {n} (H))", {{"n", 3}}) == par({G(Kind::H), G(Kind::H), G(Kind::H)}));
  CHECK(expand("(rep 0 (H))") == G(Kind::Empty));
  CHECK(expand("(flip (bW12))").in_wires() == 2);
  CHECK(expand("(seq (cap) (wZ21))").out_wires() == 1);
  CHECK_THROWS_AS(expand("(Z {n} 1 0)"), TemplateError);
  CHECK_THROWS_AS(expand("(foo)"), TemplateError);
  CHECK_THROWS_AS(expand("(Z 1 1)"), TemplateError);
  CHECK_THROWS_AS(parse_rule_file("rule t lhs (Z 1 1 0", Calculus::ZX), TemplateError);
  CHECK_THROWS_AS(parse_rule_file("rule t lhs (Z 1 1 0)", Calculus::ZX), TemplateError);

  auto rs = parse_rule_file(
      "def twice k = (seq (Z 1 1 {k}) (Z 1 1 {k}))\n"
      "rule r ; comment\n  phase a\n  lhs (twice {a+1})\n  rhs (Z 1 1 {2*a+2})\n",
      Calculus::ZW);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].id == "ZW:r");
  CHECK(rs[0].instantiations(3).size() == 8);
  CHECK(soundness_check(rs[0]).sound);
}

TEST_CASE("catalog contents") {
  std::set<std::string> zx;
  for (const auto& r : catalog(Calculus::ZX)) zx.insert(r.id);
  for (const char* id : {"S1", "S2", "S3", "E", "B1", "B2", "K", "SUP", "EU", "H", "C", "BW", "BW'"})
    CHECK(zx.count(id) == 1);
  std::set<std::string> zw;
  for (const auto& r : catalog(Calculus::ZW)) zw.insert(r.id);
  for (const char* id : {"ZW:0a", "ZW:0b", "ZW:1a", "ZW:4", "ZW:7b", "ZW:R2", "ZW:R3", "ZW:X",
                         "ZW:iv", "ZW:half"})
    CHECK(zw.count(id) == 1);
  CHECK(find_rule("K~swap").variants == std::vector<Variant>{Variant::ColorSwap});
  CHECK(find_rule("Lemma 2").id == "Lemma 2");
  CHECK_THROWS_AS(find_rule("nope"), std::invalid_argument);
  CHECK(catalog(Calculus::ZX).front().instantiations(3).size() == 4 * 4 * 3 * 64);
  CHECK(find_rule("C").instantiations(3).size() == 512);
}

TEST_CASE("variants") {
  auto vs = variants(find_rule("K"));
  CHECK(std::any_of(vs.begin(), vs.end(), [](const RewriteRule& r) { return r.id == "K~swap"; }));
  CHECK(variants(find_rule("ZW:0a")).size() == 1);

  auto s3 = find_rule("S3").instantiate({});
  auto s3f = find_rule("S3~flip").instantiate({});
  CHECK_FALSE(graph_equal(s3.lhs, s3f.lhs));  // cap becomes cup
  CHECK(graph_equal(flip_updown(s3f.lhs), s3.lhs));
  // (Z 0 2 0) = cap and its flip (Z 2 0 0) = cup are the same rule up to flipping.
  CHECK(graph_equal(s3f.rhs, to_graph(G(Kind::Cup))));

  auto e = find_rule("E~neg");
  CHECK(soundness_check(e).sound);
  auto in = e.instantiate({});
  CHECK(in.lhs.nodes.begin()->second.phase == 7);
}

TEST_CASE("every rule and variant is sound") {
  for (Calculus c : {Calculus::ZX, Calculus::ZW})
    for (const auto& r : with_variants(c)) {
      auto rep = soundness_check(r, 3);
      INFO(r.id << ": " << rep.detail);
      CHECK(rep.sound);
      CHECK(rep.instances > 0);
    }
}

TEST_CASE("zw rules survive translation") {
  for (const auto& r : catalog(Calculus::ZW))
    for (const Env& env : r.instantiations(3)) {
      auto in = r.instantiate(env);
      INFO(r.id);
      CHECK(evaluate(wx(in.lhs)) == evaluate(wx(in.rhs)));
    }
}

TEST_CASE("corrupted rules are caught") {
  RewriteRule bad = find_rule("S1");
  bad.rhs = read1("(Z {n} {m} {a+b+1})");
  auto rep = soundness_check(bad, 2);
  CHECK_FALSE(rep.sound);
  REQUIRE(rep.witness.count("a") == 1);
  auto in = bad.instantiate(rep.witness);
  CHECK_FALSE(evaluate(in.lhs) == evaluate(in.rhs));

  RewriteRule typed = find_rule("S2");
  typed.rhs = read1("(cap)");
  CHECK_FALSE(soundness_check(typed).sound);
}

TEST_CASE("lemma corpus") {
  const auto& corpus = lemma_corpus();
  CHECK(corpus.size() >= 35);
  for (const auto& rep : verify_lemmas(corpus, 3)) {
    INFO(rep.id << ": " << rep.detail);
    CHECK(rep.sound);
  }
  auto hopf = std::find_if(corpus.begin(), corpus.end(), [](const LemmaEntry& e) { return e.id == "Lemma 2"; });
  REQUIRE(hopf != corpus.end());
  CHECK(hopf->name == "hopf");

  // Legless Z(pi/2) is 1 + i = sqrt2 * w.
  auto l13 = std::find_if(corpus.begin(), corpus.end(), [](const LemmaEntry& e) { return e.id == "Lemma 13"; });
  REQUIRE(l13 != corpus.end());
  auto v = evaluate(l13->statement.instantiate({}).lhs);
  CHECK(v == RingMatrix::scalar(Cyclotomic::sqrt2() * Cyclotomic::root_power(1)));

  LemmaEntry bad = *hopf;
  bad.statement.rhs = read1("(par (Z 1 0 0) (X 0 1 4) (halfzx))");
  CHECK_FALSE(verify_lemma(bad).sound);
  bad.statement.rhs = read1("(par (Z 1 0 0) (X 0 1 0))");
  CHECK_FALSE(verify_lemma(bad).sound);
}

TEST_CASE("matching") {
  Diagram host = to_graph(parse_term("(seq (Z 1 2 1) (par (Z 1 1 2) (H)) (Z 2 1 3))"));
  // The H wire of the first spider binds to a pattern input leg.
  auto s1 = find_rule("S1").instantiate({{"n", 2}, {"m", 1}, {"j", 1}, {"a", 1}, {"b", 2}});
  auto ms = find_matches(host, s1.lhs);
  REQUIRE(ms.size() == 1);
  Diagram fused = apply_rewrite(host, s1.lhs, s1.rhs, ms[0]);
  CHECK(fused.nodes.size() == 3);
  CHECK(evaluate(fused) == evaluate(host));
  CHECK(fused.count(Kind::Z) == 2);

  // Any two adjacent phase-free Z spiders.
  Diagram chain = to_graph(parse_term("(seq (Z 1 1 0) (Z 1 1 0) (Z 1 1 0))"));
  auto z2 = find_rule("S1").instantiate({{"n", 1}, {"m", 1}, {"j", 1}, {"a", 0}, {"b", 0}});
  auto cm = find_matches(chain, z2.lhs);
  CHECK(cm.size() == 4);  // two adjacent pairs, each in both orientations
  for (std::size_t i = 1; i < cm.size(); ++i) {
    std::vector<int> a, b;
    for (auto& [p, h] : cm[i - 1].nodes) a.push_back(h);
    for (auto& [p, h] : cm[i].nodes) b.push_back(h);
    CHECK(a < b);
  }

  CHECK(find_matches(host, Diagram{}).empty());
  CHECK(find_matches(to_graph(Zs(1, 1, 1)), s1.lhs).empty());
  CHECK(find_matches(to_graph(G(Kind::Tri)), to_graph(G(Kind::H))).empty());
  CHECK(find_matches(to_graph(parse_term("(seq (tri) (tri))")), to_graph(G(Kind::Tri))).size() == 2);

  CHECK_THROWS_AS(bind_nodes(host, s1.lhs, {{0, 0}}), BindingError);
  std::map<int, int> wrong;
  auto it = s1.lhs.nodes.begin();
  wrong[it->first] = 0;
  wrong[std::next(it)->first] = 3;
  CHECK_THROWS_AS(bind_nodes(host, s1.lhs, wrong), BindingError);
  CHECK_THROWS_AS(apply_rewrite(fused, s1.lhs, s1.rhs, ms[0]), BindingError);
}

TEST_CASE("rewrite there and back") {
  Diagram host = to_graph(parse_term("(seq (Z 1 1 1) (Z 1 1 2))"));
  const RewriteRule& s1 = find_rule("S1");
  Env env{{"n", 1}, {"m", 1}, {"j", 1}, {"a", 1}, {"b", 2}};
  auto ms = find_matches(host, s1.instantiate(env).lhs);
  REQUIRE(ms.size() == 1);
  Diagram one = apply_rule(host, s1, env, ms[0]);
  RewriteRule back = s1;
  back.reversed = true;
  auto bs = find_matches(one, back.instantiate(env).lhs);
  REQUIRE(bs.size() == 1);
  CHECK(graph_equal(apply_rule(one, back, env, bs[0]), host));
}

TEST_CASE("random rule applications preserve semantics") {
  std::mt19937_64 rng(2024);
  const auto zx = with_variants(Calculus::ZX);
  const auto zw = with_variants(Calculus::ZW);
  RandomShape shape;
  shape.max_nodes = 6;
  shape.max_wires = 3;
  int applied = 0;
  for (int trial = 0; trial < 200; ++trial) {
    bool use_zw = trial % 4 == 3;
    const auto& pool = use_zw ? zw : zx;
    const RewriteRule& r = pool[rng() % pool.size()];
    auto envs = r.instantiations(2);
    Env env = envs[rng() % envs.size()];
    auto in = r.instantiate(env);
    if (in.lhs.nodes.empty()) continue;

    int extra = static_cast<int>(rng() % 2);
    Term pre = use_zw ? random_zw_term(rng, shape) : random_zx_term(rng, shape);
    Term post = use_zw ? random_zw_term(rng, shape) : random_zx_term(rng, shape);
    Diagram host;
    if (use_zw) {
      // ZW has no spiders to pad with; keep the context to wires.
      host = graph_compose(graph_compose(to_graph(ids(in.lhs.n_in + extra)),
                                         graph_tensor(in.lhs, to_graph(ids(extra)))),
                           to_graph(ids(in.lhs.n_out + extra)));
      if (pre.in_wires() == 0 && pre.out_wires() == 0) host = graph_tensor(host, to_graph(pre));
    } else {
      pre = fit_out(pre, in.lhs.n_in + extra, rng);
      post = fit_in(post, in.lhs.n_out + extra, rng);
      host = graph_compose(graph_compose(to_graph(pre), graph_tensor(in.lhs, to_graph(ids(extra)))),
                           to_graph(post));
    }
    auto ms = find_matches(host, in.lhs, 50);
    INFO(r.id);
    REQUIRE(!ms.empty());
    const Binding& b = ms[rng() % ms.size()];
    Diagram out = apply_rewrite(host, in.lhs, in.rhs, b);
    out.validate();
    CHECK(evaluate(out) == evaluate(host));
    ++applied;
  }
  CHECK(applied >= 150);
}

TEST_CASE("proof scripts") {
  for (const auto& [name, script] : builtin_proofs()) {
    auto res = check_proof(script);
    INFO(name);
    CHECK(res.ok);
  }
  CHECK(builtin_proofs().size() >= 5);

  CHECK(check_proof(json{{"start", "(Z 1 1 3)"}, {"end", "(Z 1 1 3)"}, {"steps", json::array()}}).ok);
  auto diff = check_proof(json{{"start", "(Z 1 1 3)"}, {"end", "(Z 1 1 2)"}, {"steps", json::array()}});
  CHECK_FALSE(diff.ok);
  CHECK(diff.trace.back().find("does not match") != std::string::npos);

  json s = builtin_proofs().front().second;
  for (const auto& [name, script] : builtin_proofs())
    if (name == "s1_chain.json") s = script;
  json wrong_end = s;
  wrong_end["end"] = "(Z 1 1 5)";
  CHECK_FALSE(check_proof(wrong_end).ok);

  json bad_index = s;
  bad_index["steps"][1]["match"] = 4;
  auto r = check_proof(bad_index);
  CHECK_FALSE(r.ok);
  CHECK(r.trace.back().rfind("step 2", 0) == 0);

  json bad_rule = s;
  bad_rule["steps"][0]["rule"] = "S9";
  CHECK(check_proof(bad_rule).trace.back().rfind("step 1", 0) == 0);

  json by_nodes = {{"start", "(seq (Z 1 1 1) (Z 1 1 2))"},
                   {"end", "(Z 1 1 3)"},
                   {"steps", {{{"rule", "S1"}, {"params", {{"n", 1}, {"m", 1}, {"j", 1}, {"a", 1}, {"b", 2}}},
                               {"nodes", {0, 1}}}}}};
  CHECK(check_proof(by_nodes).ok);
  by_nodes["steps"][0]["nodes"] = {1, 0};
  CHECK_FALSE(check_proof(by_nodes).ok);
}
