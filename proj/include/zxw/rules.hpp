#pragma once

// Rule and lemma catalogs, soundness checking, located rewriting and proof
// scripts.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "zxw/diagram.hpp"

namespace zxw {

class TemplateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BindingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// S-expression with {expr} slots, as read from the data files.
struct Sexpr {
  std::string atom;  // empty for lists
  std::vector<Sexpr> items;
  bool is_list() const { return atom.empty(); }
};

using Env = std::map<std::string, long long>;

/// Macros shared by all entries of one data file.
struct MacroTable {
  struct Macro {
    std::vector<std::string> params;
    Sexpr body;
  };
  std::map<std::string, Macro> macros;
};

/// Expands a template to a term. Supports Z/X with {expr} arguments, every
/// generator, seq/par, (rep N T), (flip T), (wx T) and macros.
Term expand_template(const Sexpr& s, const Env& env, const MacroTable& macros);

struct ArityParam {
  std::string name;
  int min = 0;
};

enum class Variant { Flip, ColorSwap, Negate };

struct RewriteRule {
  std::string id;
  Calculus calculus = Calculus::ZX;
  std::vector<ArityParam> arities;
  std::vector<std::string> phases;
  Sexpr lhs, rhs;
  std::shared_ptr<const MacroTable> macros;
  std::vector<Variant> variants;  // applied in order after instantiation
  bool reversed = false;          // swaps the two sides

  struct Instance {
    Diagram lhs, rhs;
  };
  Instance instantiate(const Env& env) const;
  /// Every environment with arities in [min, bound] and phases in Z8.
  std::vector<Env> instantiations(int bound) const;
  std::string base_id() const;
};

struct LemmaEntry {
  std::string id;    // "Lemma 2"
  std::string name;  // label, e.g. "hopf"
  RewriteRule statement;
  bool negation_shadow = false;  // checks [[negate(lhs)]] = conj([[lhs]]) instead
};

/// Parses a rules or lemma file. Rules come back in file order.
std::vector<RewriteRule> parse_rule_file(const std::string& text, Calculus default_calculus);
std::vector<LemmaEntry> parse_lemma_file(const std::string& text);

/// Built-in catalogs (embedded data files).
const std::vector<RewriteRule>& catalog(Calculus c);
const RewriteRule& find_rule(const std::string& id);
const std::vector<LemmaEntry>& lemma_corpus();
/// Built-in proof scripts as (file name, json).
const std::vector<std::pair<std::string, nlohmann::json>>& builtin_proofs();

/// Upside-down, colour-swapped and angle-negated versions of a ZX rule.
std::vector<RewriteRule> variants(const RewriteRule& r);

struct SoundnessReport {
  std::string id;
  bool sound = true;
  std::size_t instances = 0;
  Env witness;        // first failing instantiation
  std::string detail;
};

SoundnessReport soundness_check(const RewriteRule& r, int bound = 3);
SoundnessReport verify_lemma(const LemmaEntry& e, int bound = 3);
std::vector<SoundnessReport> verify_lemmas(const std::vector<LemmaEntry>& corpus, int bound = 3);

// ---------------------------------------------------------------- rewriting

/// Image of a pattern in a host: node map plus, for every pattern port, the
/// host port it lands on.
struct Binding {
  std::map<int, int> nodes;                          // pattern node -> host node
  std::map<std::pair<int, int>, int> ports;          // (pattern node, port) -> host port
  friend bool operator==(const Binding& a, const Binding& b) { return a.nodes == b.nodes; }
};

/// Injective embeddings in lexicographic order of host node ids (pattern nodes
/// taken in id order). Patterns without nodes have no matches.
std::vector<Binding> find_matches(const Diagram& host, const Diagram& pattern,
                                  std::size_t limit = 10000);

/// Completes a node map into a binding; throws BindingError if it is not an embedding.
Binding bind_nodes(const Diagram& host, const Diagram& pattern, const std::map<int, int>& nodes);

/// Replaces the image of lhs by rhs (same boundary).
Diagram apply_rewrite(const Diagram& host, const Diagram& lhs, const Diagram& rhs, const Binding& b);
Diagram apply_rule(const Diagram& host, const RewriteRule& r, const Env& env, const Binding& b);

struct ProofResult {
  bool ok = false;
  std::vector<std::string> trace;
};

/// Script: {"start": term, "end": term, "steps": [{"rule", "dir": "lr"|"rl",
/// "params": {...}, "match": i | "nodes": [...]}]}.
ProofResult check_proof(const nlohmann::json& script);

}  // namespace zxw
