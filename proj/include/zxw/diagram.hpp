#pragma once

// Diagrams in two forms: a term AST (what users write) and an open graph
// (what the evaluator, the matcher and the transforms work on).

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace zxw {

enum class Kind {
  Z, X, H, Tri,                          // ZX
  WZ11, WZ21, BW11, BW12, FSwap, Half,   // ZW
  Id, Swap, Cup, Cap, Empty              // wiring, only in terms
};

enum class Calculus { None, ZX, ZW, Mixed };

const char* kind_name(Kind k);
/// Non-spider kinds by their term name ("tri", "wZ11", "cap", ...).
bool kind_from_name(const std::string& name, Kind& out);
bool is_zx_kind(Kind k);
bool is_zw_kind(Kind k);
bool is_wiring(Kind k);
/// Tri and FSwap have ordered ports; every other node kind is symmetric.
bool has_ordered_ports(Kind k);
std::string calculus_name(Calculus c);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class TypeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Gen {
  Kind kind = Kind::Empty;
  int n = 0, m = 0, phase = 0;  // n, m, phase only meaningful for spiders
};

/// Term AST. Seq children are applied left to right (first child first).
struct Term {
  enum class Op { Gen, Seq, Par } op = Op::Gen;
  Gen gen;
  std::vector<Term> kids;

  int in_wires() const { return in_; }
  int out_wires() const { return out_; }

  static Term gen_term(Gen g);
  static Term seq(std::vector<Term> kids);
  static Term par(std::vector<Term> kids);

  friend bool operator==(const Term& a, const Term& b);

 private:
  friend void retype(Term& t);
  int in_ = 0, out_ = 0;
};

Term parse_term(const std::string& text);
std::string serialize(const Term& t);

// Convenience constructors.
Term Zs(int n, int m, int phase);
Term Xs(int n, int m, int phase);
Term G(Kind k);
Term ids(int n);
Term seq(std::vector<Term> kids);
Term par(std::vector<Term> kids);

/// Generator type of a non-spider kind as (inputs, outputs).
std::pair<int, int> gen_type(Kind k);

// ------------------------------------------------------------------- graph

struct Endpoint {
  enum class Type { Port, In, Out, Junction } type = Type::Port;
  int node = 0;  // node id for Port
  int index = 0; // port number, boundary position, or junction id

  static Endpoint port(int node, int p) { return {Type::Port, node, p}; }
  static Endpoint in(int i) { return {Type::In, -1, i}; }
  static Endpoint out(int j) { return {Type::Out, -1, j}; }
  static Endpoint junction(int j) { return {Type::Junction, -1, j}; }
  bool is_boundary() const { return type == Type::In || type == Type::Out; }

  friend bool operator==(const Endpoint& a, const Endpoint& b) {
    return a.type == b.type && a.node == b.node && a.index == b.index;
  }
  friend bool operator<(const Endpoint& a, const Endpoint& b) {
    if (a.type != b.type) return a.type < b.type;
    if (a.node != b.node) return a.node < b.node;
    return a.index < b.index;
  }
};

struct Node {
  Kind kind = Kind::Z;
  int phase = 0;
  int arity = 0;
};

using Edge = std::pair<Endpoint, Endpoint>;

/// Open graph n -> m. Every node port and every boundary position appears in
/// exactly one edge. Closed wire loops are kept as a count.
struct Diagram {
  int n_in = 0, n_out = 0;
  std::map<int, Node> nodes;
  std::vector<Edge> edges;
  int free_loops = 0;

  Calculus calculus() const;
  int next_id() const { return nodes.empty() ? 0 : nodes.rbegin()->first + 1; }
  /// Throws std::logic_error when ports are missing or used twice.
  void validate() const;
  /// For every endpoint, the endpoint at the other side of its edge.
  std::map<Endpoint, Endpoint> partner_map() const;
  int count(Kind k) const;
};

/// Rebuilds edges after joining: every junction must occur exactly twice;
/// chains through junctions collapse, closed chains become free loops.
Diagram resolve_junctions(int n_in, int n_out, std::map<int, Node> nodes,
                          const std::vector<Edge>& raw, int loops);

Diagram generator_graph(const Gen& g);
Diagram graph_compose(const Diagram& first, const Diagram& second);
Diagram graph_tensor(const Diagram& a, const Diagram& b);
Diagram to_graph(const Term& t);

/// Generic graph -> term (states, a swap network, then cups).
Term to_term(const Diagram& d);

Diagram flip_updown(const Diagram& d);
Diagram color_swap(const Diagram& d);
Diagram negate_angles(const Diagram& d);
/// Replaces every Tri node by its ZX definition.
Diagram expand_triangle(const Diagram& d);
/// The definition itself, as a 1 -> 1 term.
const Term& triangle_definition();
const Diagram& triangle_graph();

/// Isomorphism respecting kinds, phases, boundary order and ordered ports.
bool graph_equal(const Diagram& a, const Diagram& b);

nlohmann::json to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

}  // namespace zxw
