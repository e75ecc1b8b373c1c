#include <algorithm>
#include <functional>
#include <set>

#include "zxw/diagram.hpp"

namespace zxw {

using nlohmann::json;

// ------------------------------------------------------------ graph -> term

namespace {

/// Wire permutation moving the wire at position p to position target[p].
std::vector<Term> permutation_layers(std::vector<int> target) {
  std::vector<Term> layers;
  const std::size_t n = target.size();
  bool sorted = false;
  for (std::size_t pass = 0; !sorted; ++pass) {
    sorted = true;
    std::vector<Term> pieces;
    bool any = false;
    std::size_t i = 0;
    if (pass % 2 == 1 && n > 0) {
      pieces.push_back(G(Kind::Id));
      i = 1;
    }
    for (; i < n; ++i) {
      if (i + 1 < n && target[i] > target[i + 1]) {
        std::swap(target[i], target[i + 1]);
        pieces.push_back(G(Kind::Swap));
        any = true;
        ++i;
      } else {
        pieces.push_back(G(Kind::Id));
      }
    }
    if (any) {
      layers.push_back(par(std::move(pieces)));
      sorted = false;
    } else {
      for (std::size_t k = 0; k + 1 < n; ++k)
        if (target[k] > target[k + 1]) sorted = false;
    }
  }
  return layers;
}

Term node_state(const Node& n) {
  switch (n.kind) {
    case Kind::Z: return Zs(0, n.arity, n.phase);
    case Kind::X: return Xs(0, n.arity, n.phase);
    case Kind::Half: return G(Kind::Half);
    default: break;
  }
  auto [ni, no] = gen_type(n.kind);
  if (ni == 0) return G(n.kind);
  std::vector<Term> caps(ni, G(Kind::Cap));
  std::vector<Term> parts{par(std::move(caps))};
  // (a1, a1', a2, a2', ...) -> (a1, a2, ..., a1', a2', ...)
  std::vector<int> target(2 * ni);
  for (int i = 0; i < ni; ++i) {
    target[2 * i] = i;
    target[2 * i + 1] = ni + i;
  }
  for (auto& l : permutation_layers(target)) parts.push_back(std::move(l));
  parts.push_back(par({ids(ni), G(n.kind)}));
  return seq(std::move(parts));
}

}  // namespace

Term to_term(const Diagram& d) {
  std::map<Endpoint, int> pos;
  std::vector<Term> top;
  int p = 0;
  top.push_back(ids(d.n_in));
  for (int i = 0; i < d.n_in; ++i) pos[Endpoint::in(i)] = p++;

  std::vector<std::pair<int, int>> to_out;  // (position, output index)
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [a, b] : d.edges) {
    if (a.type == Endpoint::Type::Out && b.type == Endpoint::Type::Out) {
      top.push_back(G(Kind::Cap));
      to_out.push_back({p++, a.index});
      to_out.push_back({p++, b.index});
    }
  }
  for (const auto& [id, n] : d.nodes) {
    top.push_back(node_state(n));
    for (int k = 0; k < n.arity; ++k) pos[Endpoint::port(id, k)] = p++;
  }
  for (int k = 0; k < d.free_loops; ++k) top.push_back(seq({G(Kind::Cap), G(Kind::Cup)}));
  for (const auto& [a, b] : d.edges) {
    bool ao = a.type == Endpoint::Type::Out, bo = b.type == Endpoint::Type::Out;
    if (ao && bo) continue;
    if (ao)
      to_out.push_back({pos.at(b), a.index});
    else if (bo)
      to_out.push_back({pos.at(a), b.index});
    else
      pairs.push_back({pos.at(a), pos.at(b)});
  }
  std::vector<int> target(p, -1);
  for (const auto& [q, j] : to_out) target[q] = j;
  int slot = d.n_out;
  for (const auto& [x, y] : pairs) {
    target[x] = slot++;
    target[y] = slot++;
  }
  std::vector<Term> parts{par(std::move(top))};
  for (auto& l : permutation_layers(target)) parts.push_back(std::move(l));
  if (!pairs.empty()) {
    std::vector<Term> bottom{ids(d.n_out)};
    for (std::size_t k = 0; k < pairs.size(); ++k) bottom.push_back(G(Kind::Cup));
    parts.push_back(par(std::move(bottom)));
  }
  return seq(std::move(parts));
}

// ------------------------------------------------------------ isomorphism

namespace {

struct Key {
  int type, node, cls;
  friend bool operator<(const Key& a, const Key& b) {
    return std::tie(a.type, a.node, a.cls) < std::tie(b.type, b.node, b.cls);
  }
  friend bool operator==(const Key& a, const Key& b) {
    return a.type == b.type && a.node == b.node && a.cls == b.cls;
  }
};

Key key_of(const Diagram& d, const Endpoint& e) {
  if (e.type == Endpoint::Type::Port) {
    int cls = has_ordered_ports(d.nodes.at(e.node).kind) ? e.index : 0;
    return {0, e.node, cls};
  }
  return {static_cast<int>(e.type), -1, e.index};
}

using KeyPair = std::pair<Key, Key>;

KeyPair norm(Key a, Key b) {
  if (b < a) std::swap(a, b);
  return {a, b};
}

}  // namespace

bool graph_equal(const Diagram& a, const Diagram& b) {
  if (a.n_in != b.n_in || a.n_out != b.n_out || a.free_loops != b.free_loops ||
      a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size())
    return false;

  // Boundary-to-boundary wires must agree exactly.
  std::multiset<KeyPair> ab, bb;
  for (const auto& [x, y] : a.edges)
    if (x.is_boundary() && y.is_boundary()) ab.insert(norm(key_of(a, x), key_of(a, y)));
  for (const auto& [x, y] : b.edges)
    if (x.is_boundary() && y.is_boundary()) bb.insert(norm(key_of(b, x), key_of(b, y)));
  if (ab != bb) return false;

  std::map<int, std::vector<Edge>> inc_a, inc_b;
  for (const auto& e : a.edges) {
    if (e.first.type == Endpoint::Type::Port) inc_a[e.first.node].push_back(e);
    if (e.second.type == Endpoint::Type::Port && !(e.second.node == e.first.node && e.first.type == Endpoint::Type::Port))
      inc_a[e.second.node].push_back(e);
  }
  for (const auto& e : b.edges) {
    if (e.first.type == Endpoint::Type::Port) inc_b[e.first.node].push_back(e);
    if (e.second.type == Endpoint::Type::Port && !(e.second.node == e.first.node && e.first.type == Endpoint::Type::Port))
      inc_b[e.second.node].push_back(e);
  }

  std::vector<int> order;
  for (const auto& [id, n] : a.nodes) order.push_back(id);
  std::map<int, int> fwd;
  std::set<int> used;

  // Edges of v whose other end is boundary, v itself, or already mapped.
  auto local = [](const Diagram& d, const std::map<int, std::vector<Edge>>& inc, int v,
                  const std::function<bool(int)>& known, const std::function<int(int)>& rename) {
    std::multiset<KeyPair> s;
    auto it = inc.find(v);
    if (it == inc.end()) return s;
    for (const auto& [x, y] : it->second) {
      auto ok = [&](const Endpoint& e) {
        return e.type != Endpoint::Type::Port || e.node == v || known(e.node);
      };
      if (!ok(x) || !ok(y)) continue;
      Key kx = key_of(d, x), ky = key_of(d, y);
      if (kx.type == 0) kx.node = rename(kx.node);
      if (ky.type == 0) ky.node = rename(ky.node);
      s.insert(norm(kx, ky));
    }
    return s;
  };

  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == order.size()) return true;
    int v = order[i];
    const Node& nv = a.nodes.at(v);
    auto sa = local(a, inc_a, v, [&](int u) { return fwd.count(u) > 0; },
                    [&](int u) { return u == v ? -2 : fwd.at(u); });
    for (const auto& [w, nw] : b.nodes) {
      if (used.count(w) || nw.kind != nv.kind || nw.phase != nv.phase || nw.arity != nv.arity) continue;
      std::set<int> image;
      for (const auto& [x, y] : fwd) image.insert(y);
      auto sb = local(b, inc_b, w, [&](int u) { return image.count(u) > 0; },
                      [&](int u) { return u == w ? -2 : u; });
      if (sa != sb) continue;
      fwd[v] = w;
      used.insert(w);
      if (rec(i + 1)) return true;
      fwd.erase(v);
      used.erase(w);
    }
    return false;
  };
  return rec(0);
}

// -------------------------------------------------------------------- JSON

namespace {

json endpoint_json(const Endpoint& e) {
  switch (e.type) {
    case Endpoint::Type::Port: return {{"node", std::to_string(e.node)}, {"port", e.index}};
    case Endpoint::Type::In: return {{"in", e.index}};
    case Endpoint::Type::Out: return {{"out", e.index}};
    default: throw std::logic_error("junction in diagram");
  }
}

Endpoint endpoint_from_json(const json& j) {
  if (j.contains("in")) return Endpoint::in(j["in"].get<int>());
  if (j.contains("out")) return Endpoint::out(j["out"].get<int>());
  return Endpoint::port(std::stoi(j.at("node").get<std::string>()), j.at("port").get<int>());
}

Kind kind_from_name(const std::string& s) {
  for (Kind k : {Kind::Z, Kind::X, Kind::H, Kind::Tri, Kind::WZ11, Kind::WZ21, Kind::BW11,
                 Kind::BW12, Kind::FSwap, Kind::Half})
    if (s == kind_name(k)) return k;
  throw std::invalid_argument("unknown node kind '" + s + "'");
}

}  // namespace

json to_json(const Diagram& d) {
  json nodes = json::array();
  for (const auto& [id, n] : d.nodes) {
    json jn = {{"id", std::to_string(id)}, {"kind", kind_name(n.kind)}, {"arity", n.arity}};
    if (n.kind == Kind::Z || n.kind == Kind::X) jn["phase"] = n.phase;
    nodes.push_back(jn);
  }
  json edges = json::array();
  for (const auto& [a, b] : d.edges) edges.push_back({endpoint_json(a), endpoint_json(b)});
  return {{"calculus", calculus_name(d.calculus())},
          {"inputs", d.n_in},
          {"outputs", d.n_out},
          {"free_loops", d.free_loops},
          {"nodes", nodes},
          {"edges", edges}};
}

Diagram diagram_from_json(const json& j) {
  Diagram d;
  d.n_in = j.at("inputs").get<int>();
  d.n_out = j.at("outputs").get<int>();
  d.free_loops = j.value("free_loops", 0);
  for (const auto& jn : j.at("nodes")) {
    Node n;
    n.kind = kind_from_name(jn.at("kind").get<std::string>());
    n.arity = jn.at("arity").get<int>();
    n.phase = (n.kind == Kind::Z || n.kind == Kind::X) ? ((jn.value("phase", 0) % 8) + 8) % 8 : 0;
    if (n.kind != Kind::Z && n.kind != Kind::X) {
      auto [ni, no] = gen_type(n.kind);
      if (n.arity != ni + no) throw std::invalid_argument("wrong arity for " + jn.at("kind").get<std::string>());
    }
    d.nodes[std::stoi(jn.at("id").get<std::string>())] = n;
  }
  for (const auto& je : j.at("edges")) d.edges.push_back({endpoint_from_json(je.at(0)), endpoint_from_json(je.at(1))});
  try {
    d.validate();
  } catch (const std::logic_error& e) {
    throw std::invalid_argument(e.what());
  }
  return d;
}

}  // namespace zxw
