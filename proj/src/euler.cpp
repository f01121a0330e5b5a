#include "permutiple/euler.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <fmt/format.h>

#include "permutiple/errors.hpp"

namespace permutiple {

namespace {

std::vector<bool> reachable(const std::vector<std::vector<int>>& adj, int from) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<int> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

// Distinct labels of a multigraph with their remaining copies, grouped by
// source state in (to-state, label) order.
struct LabelTable {
  struct Entry {
    DigitPair label;
    int from;
    int to;
    int copies;
  };
  std::vector<Entry> entries;
  std::vector<std::vector<std::size_t>> by_state;
  std::size_t total = 0;

  explicit LabelTable(const HSMultigraph& g) : by_state(g.state_count()) {
    for (const auto& e : g.multiedges()) {
      if (!entries.empty() && entries.back().label == e.label) {
        ++entries.back().copies;
      } else {
        entries.push_back({e.label, e.from, e.to, 1});
      }
    }
    total = g.size();
    // multiedges() is sorted by (from, to, label), so each state's list is
    // already in (to, label) order.
    for (std::size_t i = 0; i < entries.size(); ++i) {
      by_state[entries[i].from].push_back(i);
    }
  }
};

// Depth-first walk over label-distinct Euler circuits from state 0. A move is
// taken only if every remaining edge stays reachable from the new state;
// with balanced degrees that guarantees the walk can still be completed, so
// the search never backtracks out of a dead end.
class CircuitWalker {
 public:
  explicit CircuitWalker(const HSMultigraph& g) : table_(g), states_(g.state_count()) {
    remaining_.reserve(table_.entries.size());
    for (const auto& e : table_.entries) remaining_.push_back(e.copies);
  }

  template <typename Visit>
  void for_each(Visit&& visit) {
    path_.clear();
    step(0, table_.total, visit);
  }

  std::vector<int>& remaining() { return remaining_; }
  const LabelTable& table() const { return table_; }

  bool can_finish(int state, std::size_t left) const {
    if (left == 0) return state == 0;
    std::vector<std::vector<int>> adj(states_);
    for (std::size_t i = 0; i < table_.entries.size(); ++i) {
      if (remaining_[i] > 0) adj[table_.entries[i].from].push_back(table_.entries[i].to);
    }
    const auto seen = reachable(adj, state);
    for (std::size_t i = 0; i < table_.entries.size(); ++i) {
      if (remaining_[i] > 0 && !seen[table_.entries[i].from]) return false;
    }
    return true;
  }

 private:
  template <typename Visit>
  void step(int state, std::size_t left, Visit& visit) {
    if (left == 0) {
      if (state == 0) visit(path_);
      return;
    }
    for (std::size_t i : table_.by_state[state]) {
      if (remaining_[i] == 0) continue;
      --remaining_[i];
      const int next = table_.entries[i].to;
      if (can_finish(next, left - 1)) {
        path_.push_back(i);
        step(next, left - 1, visit);
        path_.pop_back();
      }
      ++remaining_[i];
    }
  }

  LabelTable table_;
  int states_;
  std::vector<int> remaining_;
  std::vector<std::size_t> path_;
};

Natural factorial(int k) {
  Natural f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Fraction-free (Bareiss) determinant.
Natural determinant(std::vector<std::vector<Natural>> m) {
  const std::size_t size = m.size();
  if (size == 0) return 1;
  Natural sign = 1;
  Natural prev = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == size) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[size - 1][size - 1];
}

}  // namespace

ConditionReport condition_report(const HSMultigraph& g) {
  const int states = g.state_count();
  ConditionReport r;
  r.deltas.assign(states, 0);
  std::vector<bool> active(states, false);
  std::vector<std::vector<int>> adj(states);
  std::vector<std::vector<int>> radj(states);
  for (const auto& e : g.multiedges()) {
    ++r.deltas[e.to];
    --r.deltas[e.from];
    active[e.from] = active[e.to] = true;
    adj[e.from].push_back(e.to);
    radj[e.to].push_back(e.from);
  }
  r.contains_zero = active[0];
  r.balanced = std::all_of(r.deltas.begin(), r.deltas.end(), [](int d) { return d == 0; });

  auto first = std::find(active.begin(), active.end(), true);
  if (first == active.end()) {
    r.strongly_connected = true;
  } else {
    const int root = static_cast<int>(first - active.begin());
    const auto fwd = reachable(adj, root);
    const auto bwd = reachable(radj, root);
    r.strongly_connected = true;
    for (int s = 0; s < states; ++s) {
      if (active[s] && !(fwd[s] && bwd[s])) r.strongly_connected = false;
    }
  }
  return r;
}

std::vector<PermutipleString> enumerate_strings(const HSMultigraph& g,
                                                const EnumerationOptions& opts) {
  if (opts.max_results == 0) throw InvalidParams("result cap must be at least 1");
  std::vector<PermutipleString> out;
  if (!condition_report(g).verdict()) return out;

  CircuitWalker walker(g);
  const auto& entries = walker.table().entries;
  std::size_t generated = 0;
  std::set<Natural> seen_values;
  walker.for_each([&](const std::vector<std::size_t>& path) {
    if (++generated > opts.max_results) {
      throw CapExceeded(fmt::format("more than {} permutiple strings", opts.max_results));
    }
    PermutipleString s;
    s.pairs.reserve(path.size());
    for (std::size_t i : path) s.pairs.push_back(entries[i].label);
    if (opts.leading_zero == LeadingZero::kForbid && s.pairs.back().d1 == 0) return;
    if (opts.dedup == Dedup::kNumericallyDistinct) {
      Natural v = 0;
      for (auto it = s.pairs.rbegin(); it != s.pairs.rend(); ++it) {
        v = v * g.params().base() + it->d1;
      }
      if (!seen_values.insert(v).second) return;
    }
    out.push_back(std::move(s));
  });
  return out;
}

CircuitCounts count_circuits(const HSMultigraph& g) {
  CircuitCounts counts;
  if (!condition_report(g).verdict()) return counts;

  CircuitWalker walker(g);
  const auto& table = walker.table();
  auto& remaining = walker.remaining();

  // Memo key: remaining copies per label followed by the current state.
  std::map<std::vector<int>, CircuitCounts> memo;
  auto key_of = [&](int state) {
    std::vector<int> key = remaining;
    key.push_back(state);
    return key;
  };

  auto count = [&](auto& self, int state, std::size_t left) -> CircuitCounts {
    if (left == 0) return state == 0 ? CircuitCounts{1, 1} : CircuitCounts{};
    auto key = key_of(state);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    CircuitCounts acc;
    for (std::size_t i : table.by_state[state]) {
      if (remaining[i] == 0) continue;
      const int copies = remaining[i];
      --remaining[i];
      const int next = table.entries[i].to;
      if (walker.can_finish(next, left - 1)) {
        CircuitCounts sub = self(self, next, left - 1);
        acc.edge_sequences_from_zero += copies * sub.edge_sequences_from_zero;
        acc.label_distinct += sub.label_distinct;
      }
      ++remaining[i];
    }
    memo.emplace(std::move(key), acc);
    return acc;
  };
  return count(count, 0, table.total);
}

CircuitCounts count_circuits_best(const HSMultigraph& g) {
  CircuitCounts counts;
  if (!condition_report(g).verdict()) return counts;

  const int states = g.state_count();
  std::vector<int> outdeg(states, 0);
  for (const auto& e : g.multiedges()) ++outdeg[e.from];

  // Laplacian restricted to active non-root states; loops never enter it.
  std::vector<int> active;
  for (int s = 1; s < states; ++s) {
    if (outdeg[s] > 0) active.push_back(s);
  }
  std::vector<int> slot(states, -1);
  for (std::size_t i = 0; i < active.size(); ++i) slot[active[i]] = static_cast<int>(i);
  std::vector<std::vector<Natural>> lap(active.size(),
                                        std::vector<Natural>(active.size(), 0));
  for (const auto& e : g.multiedges()) {
    if (e.from == e.to || slot[e.from] < 0) continue;
    lap[slot[e.from]][slot[e.from]] += 1;
    if (slot[e.to] >= 0) lap[slot[e.from]][slot[e.to]] -= 1;
  }
  Natural circuits = determinant(std::move(lap));
  for (int s = 0; s < states; ++s) {
    if (outdeg[s] > 0) circuits *= factorial(outdeg[s] - 1);
  }
  counts.edge_sequences_from_zero = circuits * outdeg[0];

  Natural symmetry = 1;
  for (const auto& [label, copies] : g.label_multiplicities()) symmetry *= factorial(copies);
  counts.label_distinct = counts.edge_sequences_from_zero / symmetry;
  return counts;
}

std::optional<PermutipleString> hierholzer_circuit(const HSMultigraph& g) {
  if (g.empty()) return std::nullopt;
  const auto edges = g.multiedges();
  std::vector<std::vector<std::size_t>> out(g.state_count());
  for (std::size_t i = edges.size(); i-- > 0;) out[edges[i].from].push_back(i);

  // (state, edge used to reach it); the root has no edge.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::pair<int, std::size_t>> stack{{0, kNone}};
  std::vector<std::size_t> circuit;
  while (!stack.empty()) {
    auto [state, via] = stack.back();
    if (!out[state].empty()) {
      const std::size_t e = out[state].back();
      out[state].pop_back();
      stack.emplace_back(edges[e].to, e);
    } else {
      stack.pop_back();
      if (via != kNone) circuit.push_back(via);
    }
  }
  std::reverse(circuit.begin(), circuit.end());

  if (circuit.size() != edges.size()) return std::nullopt;
  int state = 0;
  PermutipleString s;
  for (std::size_t e : circuit) {
    if (edges[e].from != state) return std::nullopt;
    state = edges[e].to;
    s.pairs.push_back(edges[e].label);
  }
  if (state != 0) return std::nullopt;
  return s;
}

}  // namespace permutiple
