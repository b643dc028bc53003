#include "fewpaths/traversal.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

namespace fewpaths {

std::optional<std::vector<Node>> topological_order(const DirectedGraph &g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> indegree(n, 0);
  for (Node u = 0; u < n; ++u) {
    for (Node v : g.successors(u)) {
      ++indegree[v];
    }
  }
  std::priority_queue<Node, std::vector<Node>, std::greater<>> ready;
  for (Node u = 0; u < n; ++u) {
    if (indegree[u] == 0) {
      ready.push(u);
    }
  }
  std::vector<Node> order;
  order.reserve(n);
  while (!ready.empty()) {
    Node u = ready.top();
    ready.pop();
    order.push_back(u);
    for (Node v : g.successors(u)) {
      if (--indegree[v] == 0) {
        ready.push(v);
      }
    }
  }
  if (order.size() != n) {
    return std::nullopt;
  }
  return order;
}

Condensation condense(const DirectedGraph &g) {
  // Iterative Tarjan. Components come out sinks-first; ids are flipped at the
  // end so that they follow a topological order of the condensation.
  constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.size();
  std::vector<std::size_t> index(n, unvisited);
  std::vector<std::size_t> lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Node> stack;
  std::vector<std::size_t> raw_component(n, 0);
  std::vector<std::size_t> raw_size;
  std::size_t next_index = 0;

  struct Frame {
    Node node;
    std::size_t next_child;
  };
  std::vector<Frame> call;

  for (Node root = 0; root < n; ++root) {
    if (index[root] != unvisited) {
      continue;
    }
    call.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      Frame &frame = call.back();
      Node u = frame.node;
      auto succ = g.successors(u);
      if (frame.next_child < succ.size()) {
        Node v = succ[frame.next_child++];
        if (index[v] == unvisited) {
          index[v] = lowlink[v] = next_index++;
          stack.push_back(v);
          on_stack[v] = true;
          call.push_back({v, 0});
        } else if (on_stack[v]) {
          lowlink[u] = std::min(lowlink[u], index[v]);
        }
        continue;
      }
      if (lowlink[u] == index[u]) {
        const std::size_t id = raw_size.size();
        std::size_t size = 0;
        Node w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          raw_component[w] = id;
          ++size;
        } while (w != u);
        raw_size.push_back(size);
      }
      call.pop_back();
      if (!call.empty()) {
        Node parent = call.back().node;
        lowlink[parent] = std::min(lowlink[parent], lowlink[u]);
      }
    }
  }

  Condensation out;
  out.component_count = raw_size.size();
  out.component.resize(n);
  out.cyclic.assign(out.component_count, false);
  for (Node v = 0; v < n; ++v) {
    out.component[v] = out.component_count - 1 - raw_component[v];
    if (raw_size[raw_component[v]] > 1 || g.has_edge(v, v)) {
      out.cyclic[out.component[v]] = true;
    }
  }
  return out;
}

std::vector<bool> reachable_from(const DirectedGraph &g, Node source) {
  std::vector<bool> seen(g.size(), false);
  std::vector<Node> todo{source};
  seen.at(source) = true;
  while (!todo.empty()) {
    Node u = todo.back();
    todo.pop_back();
    for (Node v : g.successors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        todo.push_back(v);
      }
    }
  }
  return seen;
}

} // namespace fewpaths
