#include "zxw/evaluator.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <tuple>
#include <unordered_map>

namespace zxw {

Cyclotomic node_value(const Node& n, const std::vector<int>& b) {
  auto ones = [&] {
    int c = 0;
    for (int x : b) c += x;
    return c;
  };
  switch (n.kind) {
    case Kind::Z: {
      if (n.arity == 0) return Cyclotomic(1) + Cyclotomic::root_power(n.phase);
      int c = ones();
      if (c == 0) return 1;
      if (c == n.arity) return Cyclotomic::root_power(n.phase);
      return 0;
    }
    case Kind::X: {
      // (1/sqrt2)^arity (1 + w^phase (-1)^|b|)
      Cyclotomic v = Cyclotomic(1) + (ones() % 2 ? -Cyclotomic::root_power(n.phase)
                                                 : Cyclotomic::root_power(n.phase));
      Cyclotomic s = 1;
      for (int i = 0; i < n.arity; ++i) s *= Cyclotomic::inv_sqrt2();
      return v * s;
    }
    case Kind::H: {
      Cyclotomic s = Cyclotomic::inv_sqrt2();
      return (b[0] && b[1]) ? -s : s;
    }
    case Kind::Tri:  // port 0 input, port 1 output; [[1,1],[0,1]]
      return (b[1] == 1 && b[0] == 0) ? 0 : 1;
    case Kind::WZ11:
    case Kind::WZ21: {
      int c = ones();
      if (c == 0) return 1;
      if (c == n.arity) return -1;
      return 0;
    }
    case Kind::BW11:
    case Kind::BW12:
      return ones() == 1 ? 1 : 0;
    case Kind::FSwap:  // ports in0 in1 out0 out1
      if (b[2] != b[1] || b[3] != b[0]) return 0;
      return (b[0] && b[1]) ? -1 : 1;
    case Kind::Half:
      return Cyclotomic(Dyadic(1, 1));
    default:
      throw std::logic_error("node_value on wiring kind");
  }
}

RingMatrix generator_matrix(const Gen& g) {
  return evaluate(generator_graph(g));
}

// ------------------------------------------------------------ sparse tensors

namespace {

struct Tensor {
  std::vector<int> labels;  // bit i of an index is labels[i]
  std::unordered_map<std::uint64_t, Cyclotomic> data;
};

constexpr std::size_t kMaxLegs = 64;

/// Tensor of one node: ports sharing a label (self-loops) are traced out.
Tensor node_tensor(const Node& n, const std::vector<int>& port_labels) {
  Tensor t;
  std::map<int, int> count;
  for (int l : port_labels) ++count[l];
  std::map<int, int> pos;
  for (int l : port_labels)
    if (count[l] == 1) {
      pos[l] = static_cast<int>(t.labels.size());
      t.labels.push_back(l);
    }
  if (t.labels.size() > kMaxLegs) throw EvalError("node with too many legs");
  auto emit = [&](const std::vector<int>& bits) {
    std::map<int, int> loop_val;
    std::uint64_t idx = 0;
    for (std::size_t p = 0; p < bits.size(); ++p) {
      int l = port_labels[p];
      if (count[l] == 2) {
        auto [it, fresh] = loop_val.insert({l, bits[p]});
        if (!fresh && it->second != bits[p]) return;
        continue;
      }
      if (bits[p]) idx |= std::uint64_t{1} << pos[l];
    }
    Cyclotomic v = node_value(n, bits);
    if (v.is_zero()) return;
    auto& slot = t.data[idx];
    slot += v;
    if (slot.is_zero()) t.data.erase(idx);
  };
  const int a = n.arity;
  if (n.kind == Kind::Z || n.kind == Kind::WZ11 || n.kind == Kind::WZ21) {
    emit(std::vector<int>(a, 0));
    if (a > 0) emit(std::vector<int>(a, 1));
  } else if (n.kind == Kind::BW11 || n.kind == Kind::BW12) {
    for (int i = 0; i < a; ++i) {
      std::vector<int> bits(a, 0);
      bits[i] = 1;
      emit(bits);
    }
  } else {
    if (a > 24) throw EvalError("dense node with too many legs");
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << a); ++x) {
      std::vector<int> bits(a);
      for (int i = 0; i < a; ++i) bits[i] = (x >> i) & 1;
      emit(bits);
    }
  }
  return t;
}

Tensor contract(const Tensor& A, const Tensor& B) {
  std::vector<std::pair<int, int>> shared;  // (bit in A, bit in B)
  std::vector<int> a_only, b_only;
  for (std::size_t i = 0; i < A.labels.size(); ++i) {
    auto it = std::find(B.labels.begin(), B.labels.end(), A.labels[i]);
    if (it != B.labels.end())
      shared.push_back({static_cast<int>(i), static_cast<int>(it - B.labels.begin())});
    else
      a_only.push_back(static_cast<int>(i));
  }
  for (std::size_t j = 0; j < B.labels.size(); ++j)
    if (std::find(A.labels.begin(), A.labels.end(), B.labels[j]) == A.labels.end())
      b_only.push_back(static_cast<int>(j));
  Tensor R;
  for (int i : a_only) R.labels.push_back(A.labels[i]);
  for (int j : b_only) R.labels.push_back(B.labels[j]);
  if (R.labels.size() > kMaxLegs) throw EvalError("intermediate tensor exceeds 64 legs");

  auto gather = [](std::uint64_t x, const std::vector<int>& bits) {
    std::uint64_t r = 0;
    for (std::size_t k = 0; k < bits.size(); ++k)
      if ((x >> bits[k]) & 1) r |= std::uint64_t{1} << k;
    return r;
  };
  std::vector<int> sa, sb;
  for (auto [i, j] : shared) {
    sa.push_back(i);
    sb.push_back(j);
  }
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, const Cyclotomic*>>> by_key;
  for (const auto& [x, v] : B.data) by_key[gather(x, sb)].push_back({gather(x, b_only), &v});
  const unsigned shift = static_cast<unsigned>(a_only.size());
  for (const auto& [x, v] : A.data) {
    auto it = by_key.find(gather(x, sa));
    if (it == by_key.end()) continue;
    std::uint64_t ra = gather(x, a_only);
    for (const auto& [rb, w] : it->second) {
      std::uint64_t idx = ra | (shift >= 64 ? 0 : (rb << shift));
      auto& slot = R.data[idx];
      slot += v * *w;
    }
  }
  for (auto it = R.data.begin(); it != R.data.end();) {
    if (it->second.is_zero())
      it = R.data.erase(it);
    else
      ++it;
  }
  return R;
}

std::size_t result_legs(const Tensor& A, const Tensor& B) {
  std::size_t shared = 0;
  for (int l : A.labels)
    if (std::find(B.labels.begin(), B.labels.end(), l) != B.labels.end()) ++shared;
  return A.labels.size() + B.labels.size() - 2 * shared;
}

/// Greedy contraction: repeatedly joins the connected pair whose result has
/// the fewest legs; disconnected pieces are multiplied together at the end.
Tensor contract_all(std::vector<Tensor> ts) {
  using Cand = std::tuple<std::size_t, std::size_t, std::size_t>;  // legs, i, j
  std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> pq;
  std::vector<bool> alive(ts.size(), true);
  std::unordered_map<int, std::vector<std::size_t>> owner;
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (int l : ts[i].labels) owner[l].push_back(i);
  auto push_neighbours = [&](std::size_t i) {
    std::set<std::size_t> seen;
    for (int l : ts[i].labels)
      for (std::size_t j : owner[l])
        if (j != i && alive[j] && seen.insert(j).second)
          pq.push({result_legs(ts[i], ts[j]), std::min(i, j), std::max(i, j)});
  };
  for (std::size_t i = 0; i < ts.size(); ++i) push_neighbours(i);
  while (!pq.empty()) {
    auto [legs, i, j] = pq.top();
    pq.pop();
    if (!alive[i] || !alive[j]) continue;
    Tensor r = contract(ts[i], ts[j]);
    alive[i] = alive[j] = false;
    for (std::size_t x : {i, j})
      for (int l : ts[x].labels) {
        auto& v = owner[l];
        v.erase(std::remove(v.begin(), v.end(), x), v.end());
      }
    ts[i] = Tensor{};
    ts[j] = Tensor{};
    std::size_t k = ts.size();
    for (int l : r.labels) owner[l].push_back(k);
    ts.push_back(std::move(r));
    alive.push_back(true);
    push_neighbours(k);
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < ts.size(); ++i)
    if (alive[i]) rest.push_back(i);
  std::sort(rest.begin(), rest.end(), [&](std::size_t x, std::size_t y) {
    return ts[x].labels.size() < ts[y].labels.size() ||
           (ts[x].labels.size() == ts[y].labels.size() && x < y);
  });
  Tensor fin;
  fin.data[0] = 1;
  for (std::size_t i : rest) fin = contract(fin, ts[i]);
  return fin;
}

void check_calculus(const Diagram& d) {
  if (d.calculus() == Calculus::Mixed) throw EvalError("diagram mixes ZX and ZW generators");
}

}  // namespace

RingMatrix evaluate(const Diagram& d) {
  check_calculus(d);
  if (d.n_in + d.n_out > 24) throw EvalError("too many open wires");
  // One label per edge; boundary endpoints get their own label joined by a
  // delta when an edge runs straight between two boundary positions.
  std::map<Endpoint, int> label;
  std::vector<Tensor> ts;
  int next = 0;
  for (const auto& [a, b] : d.edges) {
    if (a.is_boundary() && b.is_boundary()) {
      int la = next++, lb = next++;
      label[a] = la;
      label[b] = lb;
      Tensor delta;
      delta.labels = {la, lb};
      delta.data[0] = 1;
      delta.data[3] = 1;
      ts.push_back(std::move(delta));
    } else {
      int l = next++;
      label[a] = l;
      label[b] = l;
    }
  }
  for (const auto& [id, n] : d.nodes) {
    std::vector<int> pl(n.arity);
    for (int p = 0; p < n.arity; ++p) pl[p] = label.at(Endpoint::port(id, p));
    ts.push_back(node_tensor(n, pl));
  }

  Tensor fin = contract_all(std::move(ts));

  RingMatrix m(d.n_out, d.n_in);
  Cyclotomic loops = 1;
  for (int k = 0; k < d.free_loops; ++k) loops *= 2;
  // Row bit of Out j is (n_out-1-j); column bit of In i is (n_in-1-i).
  std::map<int, std::pair<bool, int>> role;
  for (int i = 0; i < d.n_in; ++i) role[label.at(Endpoint::in(i))] = {false, d.n_in - 1 - i};
  for (int j = 0; j < d.n_out; ++j) role[label.at(Endpoint::out(j))] = {true, d.n_out - 1 - j};
  for (const auto& [x, v] : fin.data) {
    std::size_t r = 0, c = 0;
    for (std::size_t k = 0; k < fin.labels.size(); ++k) {
      if (!((x >> k) & 1)) continue;
      auto [is_out, bit] = role.at(fin.labels[k]);
      if (is_out)
        r |= std::size_t{1} << bit;
      else
        c |= std::size_t{1} << bit;
    }
    m.at(r, c) = d.free_loops ? v * loops : v;
  }
  return m;
}

RingMatrix evaluate(const Term& t) {
  switch (t.op) {
    case Term::Op::Gen:
      return generator_matrix(t.gen);
    case Term::Op::Par: {
      RingMatrix m = RingMatrix::scalar(1);
      for (const auto& k : t.kids) m = tensor(m, evaluate(k));
      return m;
    }
    case Term::Op::Seq: {
      RingMatrix m = evaluate(t.kids.front());
      for (std::size_t i = 1; i < t.kids.size(); ++i) m = compose(evaluate(t.kids[i]), m);
      return m;
    }
  }
  return {};
}

RingMatrix brute_force_contract(const Diagram& d, int max_edges) {
  check_calculus(d);
  // Internal edges get free bits; boundary edges take their bit from the index.
  std::vector<Edge> internal;
  std::vector<Edge> bnd;
  for (const auto& e : d.edges) {
    if (e.first.is_boundary() || e.second.is_boundary())
      bnd.push_back(e);
    else
      internal.push_back(e);
  }
  if (static_cast<int>(internal.size()) > max_edges) throw EvalError("brute force: too many edges");
  RingMatrix m(d.n_out, d.n_in);
  Cyclotomic loops = 1;
  for (int k = 0; k < d.free_loops; ++k) loops *= 2;
  std::map<int, std::vector<int>> bits;
  for (const auto& [id, n] : d.nodes) bits[id].assign(n.arity, 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto bval = [&](const Endpoint& e) {
        if (e.type == Endpoint::Type::In) return static_cast<int>((c >> (d.n_in - 1 - e.index)) & 1);
        return static_cast<int>((r >> (d.n_out - 1 - e.index)) & 1);
      };
      bool consistent = true;
      for (const auto& [a, b] : bnd) {
        if (a.is_boundary() && b.is_boundary()) {
          if (bval(a) != bval(b)) consistent = false;
        } else {
          const Endpoint& p = a.is_boundary() ? b : a;
          bits[p.node][p.index] = bval(a.is_boundary() ? a : b);
        }
      }
      if (!consistent) continue;
      Cyclotomic sum = 0;
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << internal.size()); ++x) {
        for (std::size_t k = 0; k < internal.size(); ++k) {
          int v = (x >> k) & 1;
          bits[internal[k].first.node][internal[k].first.index] = v;
          bits[internal[k].second.node][internal[k].second.index] = v;
        }
        Cyclotomic prod = 1;
        for (const auto& [id, n] : d.nodes) {
          prod *= node_value(n, bits[id]);
          if (prod.is_zero()) break;
        }
        sum += prod;
      }
      m.at(r, c) = sum * loops;
    }
  return m;
}

}  // namespace zxw
