#include <cctype>
#include <sstream>

#include "zxw/diagram.hpp"
#include "zxw/ring.hpp"

namespace zxw {

namespace {

struct KindInfo {
  Kind kind;
  const char* name;
  int n, m;
};

const KindInfo kKinds[] = {
    {Kind::Z, "Z", -1, -1},      {Kind::X, "X", -1, -1},       {Kind::H, "H", 1, 1},
    {Kind::Tri, "tri", 1, 1},    {Kind::WZ11, "wZ11", 1, 1},   {Kind::WZ21, "wZ21", 2, 1},
    {Kind::BW11, "bW11", 1, 1},  {Kind::BW12, "bW12", 1, 2},   {Kind::FSwap, "fswap", 2, 2},
    {Kind::Half, "half", 0, 0},  {Kind::Id, "id", 1, 1},       {Kind::Swap, "swap", 2, 2},
    {Kind::Cup, "cup", 2, 0},    {Kind::Cap, "cap", 0, 2},     {Kind::Empty, "empty", 0, 0},
};

const KindInfo& info(Kind k) {
  for (const auto& i : kKinds)
    if (i.kind == k) return i;
  throw std::logic_error("unknown kind");
}

}  // namespace

const char* kind_name(Kind k) { return info(k).name; }

bool kind_from_name(const std::string& name, Kind& out) {
  for (const auto& i : kKinds)
    if (i.n >= 0 && name == i.name) {
      out = i.kind;
      return true;
    }
  return false;
}

bool is_zx_kind(Kind k) { return k == Kind::Z || k == Kind::X || k == Kind::H || k == Kind::Tri; }

bool is_zw_kind(Kind k) {
  return k == Kind::WZ11 || k == Kind::WZ21 || k == Kind::BW11 || k == Kind::BW12 ||
         k == Kind::FSwap || k == Kind::Half;
}

bool is_wiring(Kind k) {
  return k == Kind::Id || k == Kind::Swap || k == Kind::Cup || k == Kind::Cap || k == Kind::Empty;
}

bool has_ordered_ports(Kind k) { return k == Kind::Tri || k == Kind::FSwap; }

std::string calculus_name(Calculus c) {
  switch (c) {
    case Calculus::None: return "none";
    case Calculus::ZX: return "zx";
    case Calculus::ZW: return "zw";
    case Calculus::Mixed: return "mixed";
  }
  return "?";
}

std::pair<int, int> gen_type(Kind k) {
  const KindInfo& i = info(k);
  if (i.n < 0) throw std::logic_error("spider type depends on arity");
  return {i.n, i.m};
}

void retype(Term& t) {
  switch (t.op) {
    case Term::Op::Gen:
      if (t.gen.kind == Kind::Z || t.gen.kind == Kind::X) {
        if (t.gen.n < 0 || t.gen.m < 0) throw TypeError("negative spider arity");
        t.gen.phase = mod8(t.gen.phase);
        t.in_ = t.gen.n;
        t.out_ = t.gen.m;
      } else {
        auto [n, m] = gen_type(t.gen.kind);
        t.gen.n = t.gen.m = t.gen.phase = 0;
        t.in_ = n;
        t.out_ = m;
      }
      break;
    case Term::Op::Par:
      t.in_ = t.out_ = 0;
      for (const auto& k : t.kids) {
        t.in_ += k.in_;
        t.out_ += k.out_;
      }
      break;
    case Term::Op::Seq:
      if (t.kids.empty()) throw TypeError("empty seq");
      for (std::size_t i = 1; i < t.kids.size(); ++i)
        if (t.kids[i].in_ != t.kids[i - 1].out_)
          throw TypeError("seq: " + std::to_string(t.kids[i - 1].out_) + " wires into " +
                          std::to_string(t.kids[i].in_));
      t.in_ = t.kids.front().in_;
      t.out_ = t.kids.back().out_;
      break;
  }
}

Term Term::gen_term(Gen g) {
  Term t;
  t.gen = g;
  retype(t);
  return t;
}

Term Term::seq(std::vector<Term> kids) {
  Term t;
  t.op = Op::Seq;
  t.kids = std::move(kids);
  retype(t);
  return t;
}

Term Term::par(std::vector<Term> kids) {
  Term t;
  t.op = Op::Par;
  t.kids = std::move(kids);
  retype(t);
  return t;
}

bool operator==(const Term& a, const Term& b) {
  if (a.op != b.op) return false;
  if (a.op == Term::Op::Gen)
    return a.gen.kind == b.gen.kind && a.gen.n == b.gen.n && a.gen.m == b.gen.m &&
           a.gen.phase == b.gen.phase;
  return a.kids == b.kids;
}

Term Zs(int n, int m, int phase) { return Term::gen_term({Kind::Z, n, m, phase}); }
Term Xs(int n, int m, int phase) { return Term::gen_term({Kind::X, n, m, phase}); }
Term G(Kind k) { return Term::gen_term({k, 0, 0, 0}); }

Term ids(int n) {
  if (n == 0) return G(Kind::Empty);
  if (n == 1) return G(Kind::Id);
  std::vector<Term> v(n, G(Kind::Id));
  return Term::par(std::move(v));
}

Term seq(std::vector<Term> kids) {
  if (kids.size() == 1) return kids.front();
  return Term::seq(std::move(kids));
}

Term par(std::vector<Term> kids) {
  if (kids.empty()) return G(Kind::Empty);
  if (kids.size() == 1) return kids.front();
  return Term::par(std::move(kids));
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Term parse_all() {
    Term t = term();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
    return t;
  }

 private:
  void skip_ws() {
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

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string atom() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
           s_[pos_] != '(' && s_[pos_] != ')')
      ++pos_;
    if (start == pos_) throw ParseError("expected a symbol", pos_);
    return s_.substr(start, pos_ - start);
  }

  long long integer(bool allow_negative) {
    skip_ws();
    std::size_t start = pos_;
    std::string a = atom();
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(a, &used);
    } catch (const std::exception&) {
      throw ParseError("expected an integer, got '" + a + "'", start);
    }
    if (used != a.size()) throw ParseError("expected an integer, got '" + a + "'", start);
    if (!allow_negative && v < 0) throw ParseError("arity must be non-negative", start);
    if (v > 1000000 || v < -1000000) throw ParseError("integer out of range", start);
    return v;
  }

  Term term() {
    skip_ws();
    std::size_t start = pos_;
    expect('(');
    std::string head = atom();
    if (head == "seq" || head == "par") {
      std::vector<Term> kids;
      skip_ws();
      while (pos_ < s_.size() && s_[pos_] == '(') {
        kids.push_back(term());
        skip_ws();
      }
      expect(')');
      try {
        if (head == "par") return Term::par(std::move(kids));
        if (kids.empty()) throw TypeError("seq needs at least one term");
        return Term::seq(std::move(kids));
      } catch (const TypeError& e) {
        throw ParseError(e.what(), start);
      }
    }
    if (head == "Z" || head == "X") {
      int n = static_cast<int>(integer(false));
      int m = static_cast<int>(integer(false));
      long long k = integer(true);
      expect(')');
      return Term::gen_term({head == "Z" ? Kind::Z : Kind::X, n, m, mod8(k)});
    }
    for (const auto& i : kKinds) {
      if (i.n >= 0 && head == i.name) {
        expect(')');
        return G(i.kind);
      }
    }
    throw ParseError("unknown generator '" + head + "'", start);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

void write(std::ostringstream& os, const Term& t) {
  switch (t.op) {
    case Term::Op::Gen:
      if (t.gen.kind == Kind::Z || t.gen.kind == Kind::X)
        os << '(' << kind_name(t.gen.kind) << ' ' << t.gen.n << ' ' << t.gen.m << ' '
           << t.gen.phase << ')';
      else
        os << '(' << kind_name(t.gen.kind) << ')';
      return;
    case Term::Op::Seq:
    case Term::Op::Par:
      os << (t.op == Term::Op::Seq ? "(seq" : "(par");
      for (const auto& k : t.kids) {
        os << ' ';
        write(os, k);
      }
      os << ')';
      return;
  }
}

}  // namespace

Term parse_term(const std::string& text) { return Parser(text).parse_all(); }

std::string serialize(const Term& t) {
  std::ostringstream os;
  write(os, t);
  return os.str();
}

}  // namespace zxw
