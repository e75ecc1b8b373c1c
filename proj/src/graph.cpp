#include <algorithm>
#include <set>

#include "zxw/diagram.hpp"

namespace zxw {

Calculus Diagram::calculus() const {
  bool zx = false, zw = false;
  for (const auto& [id, n] : nodes) {
    zx |= is_zx_kind(n.kind);
    zw |= is_zw_kind(n.kind);
  }
  if (zx && zw) return Calculus::Mixed;
  if (zx) return Calculus::ZX;
  if (zw) return Calculus::ZW;
  return Calculus::None;
}

int Diagram::count(Kind k) const {
  int c = 0;
  for (const auto& [id, n] : nodes) c += n.kind == k;
  return c;
}

void Diagram::validate() const {
  std::set<Endpoint> seen;
  auto use = [&](const Endpoint& e) {
    switch (e.type) {
      case Endpoint::Type::Port: {
        auto it = nodes.find(e.node);
        if (it == nodes.end()) throw std::logic_error("edge names missing node " + std::to_string(e.node));
        if (e.index < 0 || e.index >= it->second.arity)
          throw std::logic_error("port out of range on node " + std::to_string(e.node));
        break;
      }
      case Endpoint::Type::In:
        if (e.index < 0 || e.index >= n_in) throw std::logic_error("input out of range");
        break;
      case Endpoint::Type::Out:
        if (e.index < 0 || e.index >= n_out) throw std::logic_error("output out of range");
        break;
      case Endpoint::Type::Junction:
        throw std::logic_error("unresolved junction");
    }
    if (!seen.insert(e).second) throw std::logic_error("endpoint used twice");
  };
  for (const auto& [a, b] : edges) {
    use(a);
    use(b);
  }
  std::size_t expected = static_cast<std::size_t>(n_in + n_out);
  for (const auto& [id, n] : nodes) expected += static_cast<std::size_t>(n.arity);
  if (seen.size() != expected) throw std::logic_error("dangling port or boundary");
}

std::map<Endpoint, Endpoint> Diagram::partner_map() const {
  std::map<Endpoint, Endpoint> m;
  for (const auto& [a, b] : edges) {
    m[a] = b;
    m[b] = a;
  }
  return m;
}

Diagram resolve_junctions(int n_in, int n_out, std::map<int, Node> nodes,
                          const std::vector<Edge>& raw, int loops) {
  Diagram d;
  d.n_in = n_in;
  d.n_out = n_out;
  d.nodes = std::move(nodes);
  d.free_loops = loops;

  // incidences of each junction: (edge index, side)
  std::map<int, std::vector<std::pair<std::size_t, int>>> inc;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].first.type == Endpoint::Type::Junction) inc[raw[i].first.index].push_back({i, 0});
    if (raw[i].second.type == Endpoint::Type::Junction) inc[raw[i].second.index].push_back({i, 1});
  }
  for (const auto& [j, v] : inc)
    if (v.size() != 2) throw std::logic_error("junction " + std::to_string(j) + " has degree " + std::to_string(v.size()));

  auto side = [&](std::size_t e, int s) -> const Endpoint& { return s == 0 ? raw[e].first : raw[e].second; };
  std::vector<bool> used(raw.size(), false);

  auto walk = [&](std::size_t e, int s) -> Endpoint {
    // Leave through side 1 - s of edge e, crossing junctions.
    while (true) {
      used[e] = true;
      const Endpoint& x = side(e, 1 - s);
      if (x.type != Endpoint::Type::Junction) return x;
      const auto& v = inc[x.index];
      auto next = (v[0].first == e && v[0].second == 1 - s) ? v[1] : v[0];
      if (used[next.first] && next.first != e) return x;  // closed chain
      e = next.first;
      s = next.second;
      if (used[e]) return x;
    }
  };

  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (used[i]) continue;
    for (int s = 0; s < 2; ++s) {
      if (side(i, s).type == Endpoint::Type::Junction) continue;
      Endpoint a = side(i, s);
      Endpoint b = walk(i, s);
      d.edges.push_back({a, b});
      break;
    }
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (used[i]) continue;
    // closed chain made only of junctions
    ++d.free_loops;
    walk(i, 0);
  }
  return d;
}

Diagram generator_graph(const Gen& g) {
  Diagram d;
  auto [n, m] = (g.kind == Kind::Z || g.kind == Kind::X) ? std::pair{g.n, g.m} : gen_type(g.kind);
  d.n_in = n;
  d.n_out = m;
  switch (g.kind) {
    case Kind::Id:
      d.edges.push_back({Endpoint::in(0), Endpoint::out(0)});
      return d;
    case Kind::Swap:
      d.edges.push_back({Endpoint::in(0), Endpoint::out(1)});
      d.edges.push_back({Endpoint::in(1), Endpoint::out(0)});
      return d;
    case Kind::Cup:
      d.edges.push_back({Endpoint::in(0), Endpoint::in(1)});
      return d;
    case Kind::Cap:
      d.edges.push_back({Endpoint::out(0), Endpoint::out(1)});
      return d;
    case Kind::Empty:
      return d;
    default:
      break;
  }
  Node node{g.kind, (g.kind == Kind::Z || g.kind == Kind::X) ? g.phase : 0, n + m};
  d.nodes[0] = node;
  for (int i = 0; i < n; ++i) d.edges.push_back({Endpoint::port(0, i), Endpoint::in(i)});
  for (int j = 0; j < m; ++j) d.edges.push_back({Endpoint::port(0, n + j), Endpoint::out(j)});
  return d;
}

namespace {

Endpoint shift(Endpoint e, int id_offset, int in_offset, int out_offset) {
  if (e.type == Endpoint::Type::Port) e.node += id_offset;
  if (e.type == Endpoint::Type::In) e.index += in_offset;
  if (e.type == Endpoint::Type::Out) e.index += out_offset;
  return e;
}

}  // namespace

Diagram graph_compose(const Diagram& first, const Diagram& second) {
  if (first.n_out != second.n_in)
    throw TypeError("compose: " + std::to_string(first.n_out) + " wires into " + std::to_string(second.n_in));
  int off = first.next_id();
  std::map<int, Node> nodes = first.nodes;
  for (const auto& [id, n] : second.nodes) nodes[id + off] = n;
  std::vector<Edge> raw;
  raw.reserve(first.edges.size() + second.edges.size());
  auto j_out = [](Endpoint e) {
    if (e.type == Endpoint::Type::Out) return Endpoint::junction(e.index);
    return e;
  };
  auto j_in = [&](Endpoint e) {
    if (e.type == Endpoint::Type::In) return Endpoint::junction(e.index);
    return shift(e, off, 0, 0);
  };
  for (const auto& [a, b] : first.edges) raw.push_back({j_out(a), j_out(b)});
  for (const auto& [a, b] : second.edges) raw.push_back({j_in(a), j_in(b)});
  return resolve_junctions(first.n_in, second.n_out, std::move(nodes), raw,
                           first.free_loops + second.free_loops);
}

Diagram graph_tensor(const Diagram& a, const Diagram& b) {
  Diagram d = a;
  int off = a.next_id();
  for (const auto& [id, n] : b.nodes) d.nodes[id + off] = n;
  for (const auto& [x, y] : b.edges)
    d.edges.push_back({shift(x, off, a.n_in, a.n_out), shift(y, off, a.n_in, a.n_out)});
  d.n_in += b.n_in;
  d.n_out += b.n_out;
  d.free_loops += b.free_loops;
  return d;
}

Diagram to_graph(const Term& t) {
  switch (t.op) {
    case Term::Op::Gen:
      return generator_graph(t.gen);
    case Term::Op::Par: {
      Diagram d;
      for (const auto& k : t.kids) d = graph_tensor(d, to_graph(k));
      return d;
    }
    case Term::Op::Seq: {
      Diagram d = to_graph(t.kids.front());
      for (std::size_t i = 1; i < t.kids.size(); ++i) d = graph_compose(d, to_graph(t.kids[i]));
      return d;
    }
  }
  return {};
}

// --------------------------------------------------------------- transforms

Diagram flip_updown(const Diagram& d) {
  Diagram r = d;
  std::swap(r.n_in, r.n_out);
  for (auto& [a, b] : r.edges) {
    for (Endpoint* e : {&a, &b}) {
      if (e->type == Endpoint::Type::In)
        e->type = Endpoint::Type::Out;
      else if (e->type == Endpoint::Type::Out)
        e->type = Endpoint::Type::In;
    }
  }
  return r;
}

Diagram color_swap(const Diagram& d) {
  Calculus c = d.calculus();
  if (c == Calculus::ZW || c == Calculus::Mixed) throw TypeError("color_swap needs a ZX diagram");
  Diagram r = expand_triangle(d);
  for (auto& [id, n] : r.nodes) {
    if (n.kind == Kind::Z)
      n.kind = Kind::X;
    else if (n.kind == Kind::X)
      n.kind = Kind::Z;
  }
  return r;
}

Diagram negate_angles(const Diagram& d) {
  Calculus c = d.calculus();
  if (c == Calculus::ZW || c == Calculus::Mixed) throw TypeError("negate_angles needs a ZX diagram");
  Diagram r = d;
  for (auto& [id, n] : r.nodes)
    if (n.kind == Kind::Z || n.kind == Kind::X) n.phase = (8 - n.phase) % 8;
  return r;
}

Diagram expand_triangle(const Diagram& d) {
  if (d.count(Kind::Tri) == 0) return d;
  const Diagram& tri = triangle_graph();
  std::map<int, Node> nodes;
  std::vector<Edge> raw;
  int next = d.next_id();
  // Triangle ports become junctions 2*id and 2*id+1.
  auto map_end = [&](Endpoint e) {
    if (e.type == Endpoint::Type::Port && d.nodes.at(e.node).kind == Kind::Tri)
      return Endpoint::junction(2 * e.node + e.index);
    return e;
  };
  for (const auto& [id, n] : d.nodes)
    if (n.kind != Kind::Tri) nodes[id] = n;
  for (const auto& [a, b] : d.edges) raw.push_back({map_end(a), map_end(b)});
  for (const auto& [id, n] : d.nodes) {
    if (n.kind != Kind::Tri) continue;
    int off = next;
    next += tri.next_id();
    for (const auto& [tid, tn] : tri.nodes) nodes[tid + off] = tn;
    auto inner = [&](Endpoint e) {
      if (e.type == Endpoint::Type::In) return Endpoint::junction(2 * id);
      if (e.type == Endpoint::Type::Out) return Endpoint::junction(2 * id + 1);
      e.node += off;
      return e;
    };
    for (const auto& [a, b] : tri.edges) raw.push_back({inner(a), inner(b)});
  }
  return resolve_junctions(d.n_in, d.n_out, std::move(nodes), raw, d.free_loops + tri.free_loops * d.count(Kind::Tri));
}

}  // namespace zxw
