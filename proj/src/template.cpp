#include <cctype>
#include <set>

#include "zxw/rules.hpp"
#include "zxw/ring.hpp"
#include "zxw/translate.hpp"

namespace zxw {

namespace {

// ------------------------------------------------------------- s-expressions

class Reader {
 public:
  explicit Reader(const std::string& s) : s_(s) {}

  bool done() {
    skip();
    return pos_ >= s_.size();
  }

  bool peek_open() {
    skip();
    return pos_ < s_.size() && s_[pos_] == '(';
  }

  Sexpr read() {
    skip();
    if (pos_ >= s_.size()) throw TemplateError("unexpected end of input");
    if (s_[pos_] == '(') {
      ++pos_;
      Sexpr list;
      for (;;) {
        skip();
        if (pos_ >= s_.size()) throw TemplateError("unbalanced parentheses");
        if (s_[pos_] == ')') {
          ++pos_;
          return list;
        }
        list.items.push_back(read());
      }
    }
    if (s_[pos_] == ')') throw TemplateError("unexpected ')' at offset " + std::to_string(pos_));
    Sexpr a;
    if (s_[pos_] == '{') {
      std::size_t end = s_.find('}', pos_);
      if (end == std::string::npos) throw TemplateError("unterminated '{'");
      a.atom = s_.substr(pos_, end - pos_ + 1);
      pos_ = end + 1;
      return a;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
           s_[pos_] != '(' && s_[pos_] != ')')
      ++pos_;
    a.atom = s_.substr(start, pos_ - start);
    return a;
  }

 private:
  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_[pos_] == ';') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

// --------------------------------------------------------- {expr} evaluation

class ExprParser {
 public:
  ExprParser(const std::string& s, const Env& env) : s_(s), env_(env) {}

  long long parse() {
    long long v = sum();
    skip();
    if (pos_ != s_.size()) throw TemplateError("bad expression '" + s_ + "'");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long long sum() {
    long long v = product();
    for (;;) {
      if (eat('+'))
        v += product();
      else if (eat('-'))
        v -= product();
      else
        return v;
    }
  }
  long long product() {
    long long v = unary();
    while (eat('*')) v *= unary();
    return v;
  }
  long long unary() {
    if (eat('-')) return -unary();
    if (eat('(')) {
      long long v = sum();
      if (!eat(')')) throw TemplateError("missing ')' in '" + s_ + "'");
      return v;
    }
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return std::stoll(s_.substr(start, pos_ - start));
    }
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (name.empty()) throw TemplateError("bad expression '" + s_ + "'");
    auto it = env_.find(name);
    if (it == env_.end()) throw TemplateError("unbound slot '" + name + "'");
    return it->second;
  }

  const std::string& s_;
  const Env& env_;
  std::size_t pos_ = 0;
};

long long number(const Sexpr& s, const Env& env) {
  if (s.is_list()) throw TemplateError("expected a number, got a list");
  const std::string& a = s.atom;
  if (a.size() >= 2 && a.front() == '{') return ExprParser(a.substr(1, a.size() - 2), env).parse();
  try {
    std::size_t used = 0;
    long long v = std::stoll(a, &used);
    if (used == a.size()) return v;
  } catch (const std::exception&) {
  }
  auto it = env.find(a);
  if (it != env.end()) return it->second;
  throw TemplateError("expected a number, got '" + a + "'");
}

const std::set<std::string> kKeywords{"def", "rule", "lemma", "calculus", "arity",
                                      "phase", "lhs", "rhs", "shadow"};

}  // namespace

Term expand_template(const Sexpr& s, const Env& env, const MacroTable& macros) {
  if (!s.is_list() || s.items.empty() || s.items[0].is_list())
    throw TemplateError("expected a term like (name ...)");
  const std::string& head = s.items[0].atom;
  const std::size_t argc = s.items.size() - 1;
  auto kid = [&](std::size_t i) { return expand_template(s.items[i], env, macros); };

  if (head == "Z" || head == "X") {
    if (argc != 3) throw TemplateError(head + " takes three numbers");
    long long n = number(s.items[1], env), m = number(s.items[2], env), k = number(s.items[3], env);
    if (n < 0 || m < 0) throw TemplateError("negative spider arity");
    return head == "Z" ? Zs(static_cast<int>(n), static_cast<int>(m), mod8(k))
                       : Xs(static_cast<int>(n), static_cast<int>(m), mod8(k));
  }
  if (head == "seq" || head == "par") {
    std::vector<Term> kids;
    for (std::size_t i = 1; i <= argc; ++i) kids.push_back(kid(i));
    if (head == "par") return par(std::move(kids));
    if (kids.empty()) throw TemplateError("empty seq");
    return seq(std::move(kids));
  }
  if (head == "rep") {
    if (argc != 2) throw TemplateError("rep takes a count and a term");
    long long n = number(s.items[1], env);
    if (n < 0) throw TemplateError("negative repeat count");
    Term t = kid(2);
    return par(std::vector<Term>(static_cast<std::size_t>(n), t));
  }
  if (head == "flip" || head == "wx") {
    if (argc != 1) throw TemplateError(head + " takes one term");
    Diagram g = to_graph(kid(1));
    return to_term(head == "flip" ? flip_updown(g) : wx(g));
  }
  Kind k;
  if (kind_from_name(head, k)) {
    if (argc != 0) throw TemplateError(head + " takes no arguments");
    return G(k);
  }
  auto it = macros.macros.find(head);
  if (it == macros.macros.end()) throw TemplateError("unknown name '" + head + "'");
  const auto& mac = it->second;
  if (mac.params.size() != argc)
    throw TemplateError(head + " expects " + std::to_string(mac.params.size()) + " arguments");
  Env inner;
  for (std::size_t i = 0; i < argc; ++i) inner[mac.params[i]] = number(s.items[i + 1], env);
  return expand_template(mac.body, inner, macros);
}

namespace {

struct Entry {
  std::string kind;  // "rule" or "lemma"
  std::vector<std::string> header;
  std::map<std::string, std::vector<Sexpr>> clauses;
};

/// Splits a data file into macro definitions and rule/lemma entries.
std::vector<Entry> read_entries(const std::string& text, MacroTable& macros) {
  Reader r(text);
  std::vector<Entry> out;
  std::string clause;
  auto atom_or_throw = [&]() {
    Sexpr a = r.read();
    if (a.is_list()) throw TemplateError("expected a name");
    return a.atom;
  };
  while (!r.done()) {
    if (r.peek_open()) {
      if (out.empty() || clause.empty()) throw TemplateError("term outside a clause");
      out.back().clauses[clause].push_back(r.read());
      continue;
    }
    std::string word = atom_or_throw();
    if (word == "def") {
      std::string name = atom_or_throw();
      MacroTable::Macro m;
      for (std::string p = atom_or_throw(); p != "="; p = atom_or_throw()) m.params.push_back(p);
      m.body = r.read();
      macros.macros[name] = std::move(m);
      clause.clear();
    } else if (word == "rule" || word == "lemma") {
      Entry e;
      e.kind = word;
      e.header.push_back(atom_or_throw());
      if (word == "lemma") e.header.push_back(atom_or_throw());
      out.push_back(std::move(e));
      clause.clear();
    } else if (kKeywords.count(word)) {
      if (out.empty()) throw TemplateError("'" + word + "' outside a rule");
      clause = word;
      out.back().clauses[clause];
    } else {
      if (out.empty() || clause.empty()) throw TemplateError("stray word '" + word + "'");
      Sexpr a;
      a.atom = word;
      out.back().clauses[clause].push_back(a);
    }
  }
  return out;
}

RewriteRule to_rule(const Entry& e, const std::string& id, Calculus calc,
                    std::shared_ptr<const MacroTable> macros) {
  RewriteRule r;
  r.id = id;
  r.calculus = calc;
  r.macros = std::move(macros);
  auto get = [&](const char* name) -> const std::vector<Sexpr>* {
    auto it = e.clauses.find(name);
    return it == e.clauses.end() ? nullptr : &it->second;
  };
  if (auto* c = get("calculus")) {
    if (c->size() != 1) throw TemplateError(id + ": calculus takes one word");
    const std::string& w = (*c)[0].atom;
    if (w == "zx")
      r.calculus = Calculus::ZX;
    else if (w == "zw")
      r.calculus = Calculus::ZW;
    else
      throw TemplateError(id + ": unknown calculus '" + w + "'");
  }
  if (auto* a = get("arity")) {
    for (const auto& s : *a) {
      if (s.is_list()) throw TemplateError(id + ": bad arity slot");
      ArityParam p;
      auto colon = s.atom.find(':');
      p.name = s.atom.substr(0, colon);
      if (colon != std::string::npos) p.min = std::stoi(s.atom.substr(colon + 1));
      r.arities.push_back(p);
    }
  }
  if (auto* p = get("phase"))
    for (const auto& s : *p) {
      if (s.is_list()) throw TemplateError(id + ": bad phase slot");
      r.phases.push_back(s.atom);
    }
  auto one = [&](const char* name) {
    auto* v = get(name);
    if (!v || v->size() != 1 || !(*v)[0].is_list())
      throw TemplateError(id + ": needs exactly one " + name + " term");
    return (*v)[0];
  };
  if (get("shadow")) {
    r.lhs = one("shadow");
    r.rhs = r.lhs;
  } else {
    r.lhs = one("lhs");
    r.rhs = one("rhs");
  }
  return r;
}

}  // namespace

std::vector<RewriteRule> parse_rule_file(const std::string& text, Calculus default_calculus) {
  auto macros = std::make_shared<MacroTable>();
  auto entries = read_entries(text, *macros);
  std::vector<RewriteRule> out;
  for (const auto& e : entries) {
    if (e.kind != "rule") throw TemplateError("lemma entry in a rule file");
    std::string id = e.header[0];
    if (default_calculus == Calculus::ZW) id = "ZW:" + id;
    out.push_back(to_rule(e, id, default_calculus, macros));
  }
  return out;
}

std::vector<LemmaEntry> parse_lemma_file(const std::string& text) {
  auto macros = std::make_shared<MacroTable>();
  auto entries = read_entries(text, *macros);
  std::vector<LemmaEntry> out;
  for (const auto& e : entries) {
    if (e.kind != "lemma") throw TemplateError("rule entry in a lemma file");
    LemmaEntry l;
    l.id = "Lemma " + e.header[0];
    l.name = e.header[1];
    l.statement = to_rule(e, l.id, Calculus::ZX, macros);
    l.negation_shadow = e.clauses.count("shadow") > 0;
    out.push_back(std::move(l));
  }
  return out;
}

}  // namespace zxw
