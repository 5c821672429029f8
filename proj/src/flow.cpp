#include "flow.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

namespace ocp::detail {

int FlowNetwork::add_arc(int from, int to, int cap, int cost, int tag) {
  const int index = static_cast<int>(arcs_.size());
  arcs_.push_back({to, cap, cost, tag});
  arcs_.push_back({from, 0, -cost, -1});
  adj_[from].push_back(index);
  adj_[to].push_back(index + 1);
  return index;
}

void FlowNetwork::shuffle(std::mt19937_64& rng) {
  for (auto& list : adj_) std::shuffle(list.begin(), list.end(), rng);
}

bool FlowNetwork::build_levels(int source, int sink) {
  level_.assign(adj_.size(), -1);
  std::queue<int> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop();
    for (int index : adj_[x]) {
      const Arc& a = arcs_[index];
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[x] + 1;
        queue.push(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

int FlowNetwork::augment(int node, int sink, int pushed) {
  if (node == sink) return pushed;
  for (std::size_t& i = cursor_[node]; i < adj_[node].size(); ++i) {
    const int index = adj_[node][i];
    Arc& a = arcs_[index];
    if (a.cap <= 0 || level_[a.to] != level_[node] + 1) continue;
    const int got = augment(a.to, sink, std::min(pushed, a.cap));
    if (got > 0) {
      a.cap -= got;
      arcs_[index ^ 1].cap += got;
      return got;
    }
  }
  return 0;
}

int FlowNetwork::max_flow(int source, int sink, int limit) {
  int total = 0;
  while (total < limit && build_levels(source, sink)) {
    cursor_.assign(adj_.size(), 0);
    while (total < limit) {
      const int got = augment(source, sink, limit - total);
      if (got == 0) break;
      total += got;
    }
  }
  return total;
}

FlowNetwork::CostFlow FlowNetwork::min_cost_flow(int source, int sink,
                                                 int amount) {
  using Dist = std::int64_t;
  constexpr Dist kUnreached = std::numeric_limits<Dist>::max() / 4;
  const std::size_t n = adj_.size();
  std::vector<Dist> potential(n, 0);
  std::vector<Dist> dist(n);
  std::vector<int> via(n);
  CostFlow result;

  while (result.flow < amount) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::fill(via.begin(), via.end(), -1);
    using Item = std::pair<Dist, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[source] = 0;
    heap.push({0, source});
    while (!heap.empty()) {
      auto [d, x] = heap.top();
      heap.pop();
      if (d != dist[x]) continue;
      for (int index : adj_[x]) {
        const Arc& a = arcs_[index];
        if (a.cap <= 0) continue;
        const Dist nd = d + a.cost + potential[x] - potential[a.to];
        if (nd < dist[a.to]) {
          dist[a.to] = nd;
          via[a.to] = index;
          heap.push({nd, a.to});
        }
      }
    }
    if (dist[sink] >= kUnreached) break;
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] < kUnreached) potential[v] += dist[v];
    }
    int push = amount - result.flow;
    for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
      push = std::min(push, arcs_[via[v]].cap);
    }
    for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
      arcs_[via[v]].cap -= push;
      arcs_[via[v] ^ 1].cap += push;
      result.cost += static_cast<Dist>(push) * arcs_[via[v]].cost;
    }
    result.flow += push;
  }
  return result;
}

std::vector<char> FlowNetwork::residual_reachable(int source) const {
  std::vector<char> seen(adj_.size(), 0);
  std::vector<int> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int index : adj_[x]) {
      const Arc& a = arcs_[index];
      if (a.cap > 0 && !seen[a.to]) {
        seen[a.to] = 1;
        stack.push_back(a.to);
      }
    }
  }
  return seen;
}

}  // namespace ocp::detail
