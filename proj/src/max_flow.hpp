#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace starlight::detail {

// Dinic's algorithm on an adjacency-list residual graph.
class MaxFlow {
 public:
  using Cap = std::int64_t;
  static constexpr Cap kInf = std::numeric_limits<Cap>::max() / 4;

  explicit MaxFlow(int n) : g_(static_cast<std::size_t>(n)), level_(g_.size()), it_(g_.size()) {}

  int add_node() {
    g_.emplace_back();
    level_.push_back(0);
    it_.push_back(0);
    return static_cast<int>(g_.size()) - 1;
  }

  // Returns an edge handle usable with flow().
  int add_edge(int u, int v, Cap cap) {
    edges_.push_back({v, cap, 0});
    g_[static_cast<std::size_t>(u)].push_back(static_cast<int>(edges_.size()) - 1);
    edges_.push_back({u, 0, 0});
    g_[static_cast<std::size_t>(v)].push_back(static_cast<int>(edges_.size()) - 1);
    return static_cast<int>(edges_.size()) - 2;
  }

  Cap flow(int handle) const { return edges_[static_cast<std::size_t>(handle)].flow; }

  Cap run(int s, int t) {
    Cap total = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (Cap f = dfs(s, t, kInf)) total += f;
    }
    return total;
  }

 private:
  struct Edge {
    int to;
    Cap cap;
    Cap flow;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int id : g_[static_cast<std::size_t>(u)]) {
        const Edge& e = edges_[static_cast<std::size_t>(id)];
        if (e.cap - e.flow > 0 && level_[static_cast<std::size_t>(e.to)] < 0) {
          level_[static_cast<std::size_t>(e.to)] = level_[static_cast<std::size_t>(u)] + 1;
          q.push(e.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  Cap dfs(int u, int t, Cap pushed) {
    if (u == t) return pushed;
    auto& adj = g_[static_cast<std::size_t>(u)];
    for (auto& i = it_[static_cast<std::size_t>(u)]; i < adj.size(); ++i) {
      int id = adj[i];
      Edge& e = edges_[static_cast<std::size_t>(id)];
      if (e.cap - e.flow <= 0 || level_[static_cast<std::size_t>(e.to)] != level_[static_cast<std::size_t>(u)] + 1)
        continue;
      if (Cap f = dfs(e.to, t, std::min(pushed, e.cap - e.flow))) {
        e.flow += f;
        edges_[static_cast<std::size_t>(id ^ 1)].flow -= f;
        return f;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> g_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

// Feasible s-t flow with lower bounds, via the usual circulation reduction.
class BoundedFlow {
 public:
  explicit BoundedFlow(int n) : net_(n), excess_(static_cast<std::size_t>(n), 0) {}

  int add_edge(int u, int v, MaxFlow::Cap lo, MaxFlow::Cap hi) {
    excess_[static_cast<std::size_t>(v)] += lo;
    excess_[static_cast<std::size_t>(u)] -= lo;
    lower_.push_back(lo);
    handles_.push_back(net_.add_edge(u, v, hi - lo));
    return static_cast<int>(handles_.size()) - 1;
  }

  // True iff some flow respects every bound; afterwards flow(edge) is valid.
  bool solve(int s, int t) {
    net_.add_edge(t, s, MaxFlow::kInf);
    int ss = net_.add_node(), tt = net_.add_node();
    MaxFlow::Cap need = 0;
    for (std::size_t v = 0; v < excess_.size(); ++v) {
      if (excess_[v] > 0) {
        net_.add_edge(ss, static_cast<int>(v), excess_[v]);
        need += excess_[v];
      } else if (excess_[v] < 0) {
        net_.add_edge(static_cast<int>(v), tt, -excess_[v]);
      }
    }
    return net_.run(ss, tt) == need;
  }

  MaxFlow::Cap flow(int edge) const {
    return lower_[static_cast<std::size_t>(edge)] + net_.flow(handles_[static_cast<std::size_t>(edge)]);
  }

 private:
  MaxFlow net_;
  std::vector<MaxFlow::Cap> excess_;
  std::vector<MaxFlow::Cap> lower_;
  std::vector<int> handles_;
};

}  // namespace starlight::detail
