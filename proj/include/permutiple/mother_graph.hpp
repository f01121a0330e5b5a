#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permutiple/digits.hpp"

namespace permutiple {

// An ordered digit pair (d1, d2): a mother-graph edge, and an input symbol
// of the carry state machine.
struct DigitPair {
  int d1 = 0;
  int d2 = 0;

  friend auto operator<=>(const DigitPair&, const DigitPair&) = default;
  std::string to_string() const;  // "(d1,d2)"
};

// Least non-negative residue of x modulo m.
constexpr long long least_residue(long long x, long long m) {
  const long long r = x % m;
  return r < 0 ? r + m : r;
}

// True iff lambda(d1 + (b - n) * d2) <= n - 1. Digits outside [0, b) are
// never allowed.
bool edge_allowed(DigitPair pair, const Params& p);

class MotherGraph {
 public:
  MotherGraph(Params p, std::vector<DigitPair> edges);

  const Params& params() const noexcept { return params_; }
  // Sorted lexicographically, no duplicates.
  std::span<const DigitPair> edges() const noexcept { return edges_; }
  bool contains(DigitPair e) const;
  std::vector<int> successors(int vertex) const;
  int vertex_count() const noexcept { return params_.base(); }

 private:
  Params params_;
  std::vector<DigitPair> edges_;
};

MotherGraph build_mother_graph(const Params& p);

// The edge set of a permutiple graph (or any subgraph of a mother graph).
class ClassGraph {
 public:
  // Sorts and de-duplicates; throws RejectedInput if an edge fails
  // edge_allowed.
  ClassGraph(Params p, std::vector<DigitPair> edges);

  const Params& params() const noexcept { return params_; }
  std::span<const DigitPair> edges() const noexcept { return edges_; }
  bool contains(DigitPair e) const;
  bool is_subgraph_of(const ClassGraph& other) const;

 private:
  Params params_;
  std::vector<DigitPair> edges_;
};

// Edges {(digits[j], permuted[j])} of a witness.
ClassGraph graph_of_witness(const PermutipleWitness& w);

// True iff the witness's graph is a subgraph of `g`.
bool is_in_class(const PermutipleWitness& w, const ClassGraph& g);

// An elementary directed cycle, rotated so that it starts at its smallest
// vertex. Self-loops are cycles of length 1.
class Cycle {
 public:
  // Throws InvalidDigits if the vertices repeat or the list is empty.
  static Cycle from_vertices(std::vector<int> vertices);
  // Accepts the edges in any rotation; throws InvalidDigits if they do not
  // form an elementary cycle.
  static Cycle from_edges(std::span<const DigitPair> edges);

  std::size_t length() const noexcept { return vertices_.size(); }
  std::span<const int> vertices() const noexcept { return vertices_; }
  std::vector<DigitPair> edges() const;
  std::string to_string() const;  // "(0,2)(2,1)(1,0)"

  // Length first, then lexicographic on the canonical edge sequence.
  friend std::strong_ordering operator<=>(const Cycle& a, const Cycle& b);
  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  explicit Cycle(std::vector<int> v) : vertices_(std::move(v)) {}
  std::vector<int> vertices_;
};

inline constexpr std::size_t kDefaultMaxCycles = 1'000'000;

// Every elementary cycle of `m` exactly once, in canonical order; the
// position in the result is the cycle's index. Throws CapExceeded when the
// graph has more than `max_cycles` cycles.
std::vector<Cycle> enumerate_cycles(const MotherGraph& m,
                                    std::size_t max_cycles = kDefaultMaxCycles);

// Index of `c` in an inventory returned by enumerate_cycles.
std::optional<std::size_t> find_cycle(std::span<const Cycle> inventory,
                                      const Cycle& c);

}  // namespace permutiple
