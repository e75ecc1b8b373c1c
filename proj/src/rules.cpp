#include <mutex>

#include "data.hpp"
#include "zxw/evaluator.hpp"
#include "zxw/rules.hpp"

namespace zxw {

using nlohmann::json;

RewriteRule::Instance RewriteRule::instantiate(const Env& env) const {
  static const MacroTable kNoMacros;
  const MacroTable& mt = macros ? *macros : kNoMacros;
  Instance in{to_graph(expand_template(lhs, env, mt)), to_graph(expand_template(rhs, env, mt))};
  for (Variant v : variants) {
    switch (v) {
      case Variant::Flip:
        in.lhs = flip_updown(in.lhs);
        in.rhs = flip_updown(in.rhs);
        break;
      case Variant::ColorSwap:
        in.lhs = color_swap(in.lhs);
        in.rhs = color_swap(in.rhs);
        break;
      case Variant::Negate:
        in.lhs = negate_angles(in.lhs);
        in.rhs = negate_angles(in.rhs);
        break;
    }
  }
  if (reversed) std::swap(in.lhs, in.rhs);
  return in;
}

std::vector<Env> RewriteRule::instantiations(int bound) const {
  std::vector<Env> out{Env{}};
  for (const auto& a : arities) {
    std::vector<Env> next;
    for (const auto& e : out)
      for (int v = a.min; v <= std::max(bound, a.min); ++v) {
        Env f = e;
        f[a.name] = v;
        next.push_back(std::move(f));
      }
    out = std::move(next);
  }
  for (const auto& p : phases) {
    std::vector<Env> next;
    for (const auto& e : out)
      for (int v = 0; v < 8; ++v) {
        Env f = e;
        f[p] = v;
        next.push_back(std::move(f));
      }
    out = std::move(next);
  }
  return out;
}

std::string RewriteRule::base_id() const {
  auto t = id.find('~');
  return t == std::string::npos ? id : id.substr(0, t);
}

// ----------------------------------------------------------------- catalogs

const std::vector<RewriteRule>& catalog(Calculus c) {
  static const std::vector<RewriteRule> zx =
      parse_rule_file(std::string(detail::kZxMacros) + detail::kZxRules, Calculus::ZX);
  static const std::vector<RewriteRule> zw = parse_rule_file(detail::kZwRules, Calculus::ZW);
  if (c == Calculus::ZX) return zx;
  if (c == Calculus::ZW) return zw;
  throw std::invalid_argument("no catalog for calculus " + calculus_name(c));
}

const std::vector<LemmaEntry>& lemma_corpus() {
  static const std::vector<LemmaEntry> lemmas =
      parse_lemma_file(std::string(detail::kZxMacros) + detail::kLemmas);
  return lemmas;
}

const std::vector<std::pair<std::string, json>>& builtin_proofs() {
  static const std::vector<std::pair<std::string, json>> proofs = [] {
    std::vector<std::pair<std::string, json>> v;
    for (const auto& [name, text] : detail::kProofs) v.emplace_back(name, json::parse(text));
    return v;
  }();
  return proofs;
}

namespace {

const char* suffix(Variant v) {
  switch (v) {
    case Variant::Flip: return "flip";
    case Variant::ColorSwap: return "swap";
    case Variant::Negate: return "neg";
  }
  return "?";
}

}  // namespace

std::vector<RewriteRule> variants(const RewriteRule& r) {
  std::vector<Variant> kinds{Variant::Flip};
  if (r.calculus == Calculus::ZX) {
    kinds.push_back(Variant::ColorSwap);
    kinds.push_back(Variant::Negate);
  }
  std::vector<RewriteRule> out;
  for (Variant v : kinds) {
    RewriteRule c = r;
    c.variants.push_back(v);
    c.id += std::string("~") + suffix(v);
    out.push_back(std::move(c));
  }
  return out;
}

const RewriteRule& find_rule(const std::string& id) {
  static std::mutex mu;
  static std::map<std::string, RewriteRule> derived;
  for (Calculus c : {Calculus::ZX, Calculus::ZW})
    for (const auto& r : catalog(c))
      if (r.id == id) return r;
  for (const auto& l : lemma_corpus())
    if (l.id == id && !l.negation_shadow) return l.statement;

  std::lock_guard<std::mutex> lock(mu);
  if (auto it = derived.find(id); it != derived.end()) return it->second;
  auto tilde = id.rfind('~');
  if (tilde != std::string::npos) {
    const RewriteRule& base = find_rule(id.substr(0, tilde));
    for (auto& v : variants(base))
      if (v.id == id) return derived.emplace(id, std::move(v)).first->second;
  }
  throw std::invalid_argument("unknown rule '" + id + "'");
}

// ---------------------------------------------------------------- soundness

namespace {

std::string env_text(const Env& e) {
  std::string s;
  for (const auto& [k, v] : e) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return s;
}

}  // namespace

SoundnessReport soundness_check(const RewriteRule& r, int bound) {
  SoundnessReport rep;
  rep.id = r.id;
  for (const Env& env : r.instantiations(bound)) {
    ++rep.instances;
    try {
      auto in = r.instantiate(env);
      if (in.lhs.n_in != in.rhs.n_in || in.lhs.n_out != in.rhs.n_out) {
        rep.sound = false;
        rep.witness = env;
        rep.detail = "sides have different types at " + env_text(env);
        return rep;
      }
      if (!equal(evaluate(in.lhs), evaluate(in.rhs))) {
        rep.sound = false;
        rep.witness = env;
        rep.detail = "sides differ at " + env_text(env);
        return rep;
      }
    } catch (const std::exception& e) {
      rep.sound = false;
      rep.witness = env;
      rep.detail = std::string(e.what()) + " at " + env_text(env);
      return rep;
    }
  }
  return rep;
}

SoundnessReport verify_lemma(const LemmaEntry& e, int bound) {
  if (!e.negation_shadow) {
    SoundnessReport rep = soundness_check(e.statement, bound);
    rep.id = e.id;
    return rep;
  }
  SoundnessReport rep;
  rep.id = e.id;
  for (const Env& env : e.statement.instantiations(bound)) {
    ++rep.instances;
    try {
      Diagram d = e.statement.instantiate(env).lhs;
      if (!equal(evaluate(negate_angles(d)), conj_entrywise(evaluate(d)))) {
        rep.sound = false;
        rep.witness = env;
        rep.detail = "negated diagram is not the conjugate at " + env_text(env);
        return rep;
      }
    } catch (const std::exception& ex) {
      rep.sound = false;
      rep.witness = env;
      rep.detail = std::string(ex.what()) + " at " + env_text(env);
      return rep;
    }
  }
  return rep;
}

std::vector<SoundnessReport> verify_lemmas(const std::vector<LemmaEntry>& corpus, int bound) {
  std::vector<SoundnessReport> out;
  for (const auto& e : corpus) out.push_back(verify_lemma(e, bound));
  return out;
}

}  // namespace zxw
