#include "permutiple/mother_graph.hpp"

#include <algorithm>
#include <functional>

#include <fmt/format.h>

#include "permutiple/errors.hpp"

namespace permutiple {

std::string DigitPair::to_string() const { return fmt::format("({},{})", d1, d2); }

bool edge_allowed(DigitPair pair, const Params& p) {
  const long long n = p.multiplier();
  const long long b = p.base();
  if (pair.d1 < 0 || pair.d1 >= b || pair.d2 < 0 || pair.d2 >= b) return false;
  return least_residue(pair.d1 + (b - n) * pair.d2, b) <= n - 1;
}

MotherGraph::MotherGraph(Params p, std::vector<DigitPair> edges)
    : params_(p), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool MotherGraph::contains(DigitPair e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<int> MotherGraph::successors(int vertex) const {
  std::vector<int> out;
  auto lo = std::lower_bound(edges_.begin(), edges_.end(), DigitPair{vertex, 0});
  for (auto it = lo; it != edges_.end() && it->d1 == vertex; ++it) {
    out.push_back(it->d2);
  }
  return out;
}

MotherGraph build_mother_graph(const Params& p) {
  std::vector<DigitPair> edges;
  for (int d1 = 0; d1 < p.base(); ++d1) {
    for (int d2 = 0; d2 < p.base(); ++d2) {
      if (edge_allowed({d1, d2}, p)) edges.push_back({d1, d2});
    }
  }
  return MotherGraph(p, std::move(edges));
}

ClassGraph::ClassGraph(Params p, std::vector<DigitPair> edges)
    : params_(p), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (!edge_allowed(e, params_)) {
      throw RejectedInput(fmt::format("{} is not an edge of the ({},{}) mother graph",
                                      e.to_string(), p.multiplier(), p.base()));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool ClassGraph::contains(DigitPair e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool ClassGraph::is_subgraph_of(const ClassGraph& other) const {
  return params_ == other.params_ &&
         std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(),
                       edges_.end());
}

ClassGraph graph_of_witness(const PermutipleWitness& w) {
  if (w.digits.size() != w.permuted.size()) {
    throw InvalidDigits("witness digit vectors differ in length");
  }
  std::vector<DigitPair> edges;
  edges.reserve(w.digits.size());
  for (std::size_t j = 0; j < w.digits.size(); ++j) {
    edges.push_back({w.digits[j], w.permuted[j]});
  }
  return ClassGraph(w.params, std::move(edges));
}

bool is_in_class(const PermutipleWitness& w, const ClassGraph& g) {
  return graph_of_witness(w).is_subgraph_of(g);
}

// ---------------------------------------------------------------------------
// Cycle

Cycle Cycle::from_vertices(std::vector<int> vertices) {
  if (vertices.empty()) throw InvalidDigits("a cycle needs at least one vertex");
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidDigits("cycle repeats a vertex");
  }
  std::rotate(vertices.begin(), std::min_element(vertices.begin(), vertices.end()),
              vertices.end());
  return Cycle(std::move(vertices));
}

Cycle Cycle::from_edges(std::span<const DigitPair> edges) {
  if (edges.empty()) throw InvalidDigits("a cycle needs at least one edge");
  std::vector<int> vertices;
  vertices.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& next = edges[(i + 1) % edges.size()];
    if (edges[i].d2 != next.d1) {
      throw InvalidDigits(fmt::format("edges {} and {} are not incident",
                                      edges[i].to_string(), next.to_string()));
    }
    vertices.push_back(edges[i].d1);
  }
  return from_vertices(std::move(vertices));
}

std::vector<DigitPair> Cycle::edges() const {
  std::vector<DigitPair> out;
  out.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    out.push_back({vertices_[i], vertices_[(i + 1) % vertices_.size()]});
  }
  return out;
}

std::string Cycle::to_string() const {
  std::string s;
  for (const auto& e : edges()) s += e.to_string();
  return s;
}

std::strong_ordering operator<=>(const Cycle& a, const Cycle& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  // Same length: comparing edge sequences lexicographically is the same as
  // comparing the vertex sequences.
  return a.vertices_ <=> b.vertices_;
}

// ---------------------------------------------------------------------------
// Johnson's elementary circuit enumeration.

namespace {

using Adjacency = std::vector<std::vector<int>>;

// Vertices of the strongly connected component containing `root` within the
// subgraph induced by vertices >= root.
std::vector<bool> component_of(const Adjacency& adj, int root) {
  const int v_count = static_cast<int>(adj.size());
  std::vector<bool> forward(v_count, false);
  std::vector<bool> backward(v_count, false);

  std::vector<int> stack{root};
  forward[root] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (w >= root && !forward[w]) {
        forward[w] = true;
        stack.push_back(w);
      }
    }
  }

  Adjacency reverse(v_count);
  for (int v = root; v < v_count; ++v) {
    for (int w : adj[v]) {
      if (w >= root) reverse[w].push_back(v);
    }
  }
  stack.push_back(root);
  backward[root] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : reverse[v]) {
      if (!backward[w]) {
        backward[w] = true;
        stack.push_back(w);
      }
    }
  }

  std::vector<bool> in(v_count, false);
  for (int v = root; v < v_count; ++v) in[v] = forward[v] && backward[v];
  return in;
}

class CircuitFinder {
 public:
  CircuitFinder(const Adjacency& adj, std::size_t cap, std::vector<Cycle>& out)
      : adj_(adj),
        cap_(cap),
        out_(out),
        blocked_(adj.size(), false),
        blocked_by_(adj.size()) {}

  void run() {
    const int v_count = static_cast<int>(adj_.size());
    for (int s = 0; s < v_count; ++s) {
      in_component_ = component_of(adj_, s);
      for (int v = s; v < v_count; ++v) {
        blocked_[v] = false;
        blocked_by_[v].clear();
      }
      start_ = s;
      circuit(s);
    }
  }

 private:
  void unblock(int u) {
    blocked_[u] = false;
    auto pending = std::move(blocked_by_[u]);
    blocked_by_[u].clear();
    for (int w : pending) {
      if (blocked_[w]) unblock(w);
    }
  }

  bool circuit(int v) {
    bool found = false;
    path_.push_back(v);
    blocked_[v] = true;
    for (int w : adj_[v]) {
      if (!in_component_[w]) continue;
      if (w == start_) {
        emit();
        found = true;
      } else if (!blocked_[w] && circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (int w : adj_[v]) {
        if (!in_component_[w]) continue;
        auto& list = blocked_by_[w];
        if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
      }
    }
    path_.pop_back();
    return found;
  }

  void emit() {
    if (out_.size() >= cap_) {
      throw CapExceeded(fmt::format("more than {} elementary cycles", cap_));
    }
    out_.push_back(Cycle::from_vertices(path_));
  }

  const Adjacency& adj_;
  std::size_t cap_;
  std::vector<Cycle>& out_;
  std::vector<bool> blocked_;
  std::vector<std::vector<int>> blocked_by_;
  std::vector<bool> in_component_;
  std::vector<int> path_;
  int start_ = 0;
};

}  // namespace

std::vector<Cycle> enumerate_cycles(const MotherGraph& m, std::size_t max_cycles) {
  Adjacency adj(m.vertex_count());
  for (const auto& e : m.edges()) adj[e.d1].push_back(e.d2);

  std::vector<Cycle> cycles;
  CircuitFinder(adj, max_cycles, cycles).run();
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

std::optional<std::size_t> find_cycle(std::span<const Cycle> inventory,
                                      const Cycle& c) {
  auto it = std::lower_bound(inventory.begin(), inventory.end(), c);
  if (it == inventory.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - inventory.begin());
}

}  // namespace permutiple
