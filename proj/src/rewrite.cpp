#include <algorithm>
#include <functional>
#include <set>

#include "zxw/evaluator.hpp"
#include "zxw/rules.hpp"

namespace zxw {

using nlohmann::json;

namespace {

using PortKey = std::pair<int, int>;  // (node, port)

struct Incidence {
  // For every node port, the endpoint at the other end of its wire.
  std::map<Endpoint, Endpoint> partner;
};

bool same_label(const Node& a, const Node& b) {
  return a.kind == b.kind && a.arity == b.arity && a.phase == b.phase;
}

/// Pattern edges between two node ports, each listed once.
std::vector<std::pair<PortKey, PortKey>> internal_edges(const Diagram& p) {
  std::vector<std::pair<PortKey, PortKey>> out;
  for (const auto& [a, b] : p.edges)
    if (a.type == Endpoint::Type::Port && b.type == Endpoint::Type::Port)
      out.push_back({{a.node, a.index}, {b.node, b.index}});
  return out;
}

bool has_boundary_wire(const Diagram& p) {
  for (const auto& [a, b] : p.edges)
    if (a.is_boundary() && b.is_boundary()) return true;
  return false;
}

/// Assigns host ports to pattern ports for a fixed node map; false if impossible.
bool assign_ports(const Diagram& host, const std::map<Endpoint, Endpoint>& hpart,
                  const Diagram& pat, const std::vector<std::pair<PortKey, PortKey>>& inner,
                  const std::map<int, int>& nodes, Binding& out) {
  std::map<PortKey, int> fwd;           // pattern port -> host port
  std::map<int, std::set<int>> taken;   // host node -> used host ports

  auto fits = [&](int pu, int pi, int hp) {
    int hu = nodes.at(pu);
    if (taken[hu].count(hp)) return false;
    if (has_ordered_ports(pat.nodes.at(pu).kind) && pi != hp) return false;
    return true;
  };

  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == inner.size()) return true;
    auto [pa, pb] = inner[k];
    int ha = nodes.at(pa.first), hb = nodes.at(pb.first);
    const Node& na = host.nodes.at(ha);
    for (int x = 0; x < na.arity; ++x) {
      if (!fits(pa.first, pa.second, x)) continue;
      const Endpoint& other = hpart.at(Endpoint::port(ha, x));
      if (other.type != Endpoint::Type::Port || other.node != hb) continue;
      int y = other.index;
      if (ha == hb && x == y) continue;
      taken[ha].insert(x);
      if (fits(pb.first, pb.second, y)) {
        taken[hb].insert(y);
        fwd[pa] = x;
        fwd[pb] = y;
        if (rec(k + 1)) return true;
        fwd.erase(pa);
        fwd.erase(pb);
        taken[hb].erase(y);
        taken[ha].erase(x);
        // Symmetric endpoints make every free parallel wire equivalent.
        if (!has_ordered_ports(na.kind) && !has_ordered_ports(host.nodes.at(hb).kind)) break;
        continue;
      }
      taken[ha].erase(x);
    }
    return false;
  };
  if (!rec(0)) return false;

  // Remaining pattern ports are boundary legs.
  for (const auto& [pu, hu] : nodes) {
    const Node& n = pat.nodes.at(pu);
    int next = 0;
    for (int i = 0; i < n.arity; ++i) {
      if (fwd.count({pu, i})) continue;
      if (has_ordered_ports(n.kind)) {
        if (taken[hu].count(i)) return false;
        fwd[{pu, i}] = i;
        taken[hu].insert(i);
        continue;
      }
      while (taken[hu].count(next)) ++next;
      fwd[{pu, i}] = next;
      taken[hu].insert(next);
    }
  }
  out.nodes = nodes;
  out.ports = std::move(fwd);
  return true;
}

/// Pattern nodes in breadth-first order with the already-placed neighbour
/// used to generate candidates (-1 starts a new component).
std::vector<std::pair<int, int>> search_order(const Diagram& pat,
                                              const std::vector<std::pair<PortKey, PortKey>>& inner) {
  std::map<int, std::set<int>> adj;
  for (const auto& [a, b] : inner) {
    adj[a.first].insert(b.first);
    adj[b.first].insert(a.first);
  }
  std::vector<std::pair<int, int>> order;
  std::set<int> seen;
  for (const auto& [id, n] : pat.nodes) {
    if (seen.count(id)) continue;
    seen.insert(id);
    order.push_back({id, -1});
    for (std::size_t k = order.size() - 1; k < order.size(); ++k) {
      int u = order[k].first;
      for (int v : adj[u])
        if (!seen.count(v)) {
          seen.insert(v);
          order.push_back({v, u});
        }
    }
  }
  return order;
}

std::map<std::pair<int, int>, int> wire_counts(const Diagram& d) {
  std::map<std::pair<int, int>, int> c;
  for (const auto& [a, b] : d.edges)
    if (a.type == Endpoint::Type::Port && b.type == Endpoint::Type::Port) {
      ++c[{std::min(a.node, b.node), std::max(a.node, b.node)}];
    }
  return c;
}

}  // namespace

std::vector<Binding> find_matches(const Diagram& host, const Diagram& pattern, std::size_t limit) {
  std::vector<Binding> out;
  if (pattern.nodes.empty() || pattern.nodes.size() > host.nodes.size()) return out;
  if (has_boundary_wire(pattern) || pattern.free_loops > host.free_loops) return out;

  const auto inner = internal_edges(pattern);
  const auto order = search_order(pattern, inner);
  const auto hpart = host.partner_map();
  const auto pcount = wire_counts(pattern), hcount = wire_counts(host);
  std::map<int, std::set<int>> hadj;
  for (const auto& [k, c] : hcount) {
    hadj[k.first].insert(k.second);
    hadj[k.second].insert(k.first);
  }

  std::map<int, int> nodes;
  std::set<int> used;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) {
      Binding b;
      if (assign_ports(host, hpart, pattern, inner, nodes, b)) out.push_back(std::move(b));
      return;
    }
    auto [u, parent] = order[k];
    const Node& pu = pattern.nodes.at(u);
    std::vector<int> cands;
    if (parent < 0) {
      for (const auto& [h, n] : host.nodes) cands.push_back(h);
    } else {
      const auto& s = hadj[nodes.at(parent)];
      cands.assign(s.begin(), s.end());
    }
    for (int h : cands) {
      if (used.count(h) || !same_label(pu, host.nodes.at(h))) continue;
      bool ok = true;
      nodes[u] = h;
      for (const auto& [w, hw] : nodes) {
        auto pk = std::make_pair(std::min(u, w), std::max(u, w));
        auto it = pcount.find(pk);
        if (it == pcount.end()) continue;
        auto hk = std::make_pair(std::min(h, hw), std::max(h, hw));
        auto jt = hcount.find(hk);
        if (jt == hcount.end() || jt->second < it->second) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used.insert(h);
        rec(k + 1);
        used.erase(h);
      }
      nodes.erase(u);
    }
  };
  rec(0);

  auto key = [](const Binding& b) {
    std::vector<int> v;
    for (const auto& [p, h] : b.nodes) v.push_back(h);
    return v;
  };
  std::sort(out.begin(), out.end(), [&](const Binding& a, const Binding& b) { return key(a) < key(b); });
  if (out.size() > limit) out.resize(limit);
  return out;
}

Binding bind_nodes(const Diagram& host, const Diagram& pattern, const std::map<int, int>& nodes) {
  if (has_boundary_wire(pattern)) throw BindingError("pattern has a bare boundary wire");
  if (pattern.free_loops > host.free_loops) throw BindingError("host lacks the pattern's loops");
  if (nodes.size() != pattern.nodes.size()) throw BindingError("binding must cover every pattern node");
  std::set<int> seen;
  for (const auto& [p, h] : nodes) {
    auto pit = pattern.nodes.find(p);
    auto hit = host.nodes.find(h);
    if (pit == pattern.nodes.end()) throw BindingError("no pattern node " + std::to_string(p));
    if (hit == host.nodes.end()) throw BindingError("no host node " + std::to_string(h));
    if (!same_label(pit->second, hit->second))
      throw BindingError("host node " + std::to_string(h) + " has the wrong kind, arity or phase");
    if (!seen.insert(h).second) throw BindingError("host node " + std::to_string(h) + " used twice");
  }
  Binding b;
  if (!assign_ports(host, host.partner_map(), pattern, internal_edges(pattern), nodes, b))
    throw BindingError("host wiring does not match the pattern");
  return b;
}

Diagram apply_rewrite(const Diagram& host, const Diagram& lhs, const Diagram& rhs, const Binding& b) {
  if (lhs.n_in != rhs.n_in || lhs.n_out != rhs.n_out)
    throw BindingError("rule sides have different boundaries");
  // Re-derive the port map so a stale binding cannot corrupt the host.
  Binding fresh = bind_nodes(host, lhs, b.nodes);

  std::map<PortKey, PortKey> back;  // host port -> pattern port
  for (const auto& [pp, hp] : fresh.ports) back[{fresh.nodes.at(pp.first), hp}] = pp;
  const auto ppart = lhs.partner_map();

  auto junction_of = [&](const Endpoint& pe) {
    return Endpoint::junction(pe.type == Endpoint::Type::In ? pe.index : lhs.n_in + pe.index);
  };

  std::map<int, Node> nodes;
  std::set<int> image;
  for (const auto& [p, h] : fresh.nodes) image.insert(h);
  for (const auto& [id, n] : host.nodes)
    if (!image.count(id)) nodes[id] = n;

  std::vector<Edge> raw;
  for (const auto& [a, c] : host.edges) {
    Endpoint ends[2] = {a, c};
    bool drop = false;
    for (auto& e : ends) {
      if (e.type != Endpoint::Type::Port || !image.count(e.node)) continue;
      const PortKey& pp = back.at({e.node, e.index});
      const Endpoint& pe = ppart.at(Endpoint::port(pp.first, pp.second));
      if (pe.type == Endpoint::Type::Port) {
        drop = true;
        break;
      }
      e = junction_of(pe);
    }
    if (!drop) raw.push_back({ends[0], ends[1]});
  }

  const int off = host.next_id();
  for (const auto& [id, n] : rhs.nodes) nodes[id + off] = n;
  auto lift = [&](Endpoint e) {
    if (e.type == Endpoint::Type::Port) return Endpoint::port(e.node + off, e.index);
    return junction_of(e);
  };
  for (const auto& [a, c] : rhs.edges) raw.push_back({lift(a), lift(c)});

  return resolve_junctions(host.n_in, host.n_out, std::move(nodes), raw,
                           host.free_loops - lhs.free_loops + rhs.free_loops);
}

Diagram apply_rule(const Diagram& host, const RewriteRule& r, const Env& env, const Binding& b) {
  auto in = r.instantiate(env);
  return apply_rewrite(host, in.lhs, in.rhs, b);
}

// ------------------------------------------------------------------- proofs

namespace {

Diagram diagram_of(const json& j) {
  if (j.is_string()) return to_graph(parse_term(j.get<std::string>()));
  return diagram_from_json(j);
}

}  // namespace

ProofResult check_proof(const json& script) {
  ProofResult res;
  Diagram cur, end;
  RingMatrix start_value;
  try {
    cur = diagram_of(script.at("start"));
    end = diagram_of(script.at("end"));
    start_value = evaluate(cur);
  } catch (const std::exception& e) {
    res.trace.push_back(std::string("bad endpoints: ") + e.what());
    return res;
  }
  res.trace.push_back("start: " + std::to_string(cur.nodes.size()) + " nodes");

  const json steps = script.value("steps", json::array());
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const std::string where = "step " + std::to_string(k + 1);
    try {
      const json& s = steps[k];
      const RewriteRule& rule = find_rule(s.at("rule").get<std::string>());
      const std::string dir = s.value("dir", "lr");
      if (dir != "lr" && dir != "rl") throw std::invalid_argument("direction must be lr or rl");
      Env env;
      if (s.contains("params"))
        for (const auto& [name, v] : s["params"].items()) env[name] = v.get<long long>();
      auto in = rule.instantiate(env);
      if (dir == "rl") std::swap(in.lhs, in.rhs);

      Binding b;
      if (s.contains("nodes")) {
        std::vector<int> hosts = s["nodes"].get<std::vector<int>>();
        if (hosts.size() != in.lhs.nodes.size())
          throw BindingError("expected " + std::to_string(in.lhs.nodes.size()) + " host nodes");
        std::map<int, int> m;
        std::size_t i = 0;
        for (const auto& [p, n] : in.lhs.nodes) m[p] = hosts[i++];
        b = bind_nodes(cur, in.lhs, m);
      } else {
        std::size_t idx = s.value("match", 0);
        auto ms = find_matches(cur, in.lhs, idx + 1);
        if (idx >= ms.size())
          throw BindingError("match " + std::to_string(idx) + " does not exist (" +
                             std::to_string(ms.size()) + " found)");
        b = ms[idx];
      }
      cur = apply_rewrite(cur, in.lhs, in.rhs, b);
      if (!equal(evaluate(cur), start_value)) {
        res.trace.push_back(where + ": semantics changed");
        return res;
      }
      res.trace.push_back(where + ": " + rule.id + " " + dir + " -> " +
                          std::to_string(cur.nodes.size()) + " nodes");
    } catch (const std::exception& e) {
      res.trace.push_back(where + ": " + e.what());
      return res;
    }
  }
  res.ok = graph_equal(cur, end);
  res.trace.push_back(res.ok ? "end matches" : "end does not match the claimed diagram");
  return res;
}

}  // namespace zxw
