#pragma once

// The carry state machine. States are the carries 0..n-1; each mother-graph
// edge (d1, d2) is an input that drives exactly one transition c1 -> c2 with
// b*c2 - c1 = n*d2 - d1.
//
// HSMultigraph stores one labeled multiedge per input occurrence. Built from
// the whole mother graph every label occurs once; built as a union of cycle
// multi-images a label occurs as often as its edge occurs in the cycle
// multiset.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "permutiple/digits.hpp"
#include "permutiple/mother_graph.hpp"

namespace permutiple {

struct Transition {
  int from = 0;
  int to = 0;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

// Throws RejectedInput unless edge_allowed(pair, p).
Transition transition(DigitPair pair, const Params& p);

struct LabeledMultiedge {
  int from = 0;
  int to = 0;
  DigitPair label;

  friend auto operator<=>(const LabeledMultiedge&, const LabeledMultiedge&) = default;
};

class HSMultigraph {
 public:
  explicit HSMultigraph(Params p) : params_(p) {}
  // Throws RejectedInput if a multiedge is not the transition of its label.
  HSMultigraph(Params p, std::vector<LabeledMultiedge> multiedges);

  const Params& params() const noexcept { return params_; }
  int state_count() const noexcept { return params_.multiplier(); }
  // Sorted by (from, to, label); equal multiedges are adjacent.
  std::span<const LabeledMultiedge> multiedges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  int outdegree(int state) const;
  int indegree(int state) const;
  // Label -> number of multiedges carrying it.
  std::map<DigitPair, int> label_multiplicities() const;
  // Grouped view: (c1, c2) -> labels on that transition, sorted, with
  // repeats. This is the collection-labeled state graph used for display.
  std::map<std::pair<int, int>, std::vector<DigitPair>> grouped() const;

  // Multiset union. Throws InvalidParams when the params differ.
  HSMultigraph& operator+=(const HSMultigraph& other);
  friend HSMultigraph operator+(HSMultigraph a, const HSMultigraph& b) {
    a += b;
    return a;
  }
  friend bool operator==(const HSMultigraph&, const HSMultigraph&) = default;

 private:
  Params params_;
  std::vector<LabeledMultiedge> edges_;
};

HSMultigraph build_hs_multigraph(const Params& p);

// One multiedge per edge of `c`. Throws RejectedInput if an edge of `c` is
// not a mother-graph edge.
HSMultigraph cycle_multi_image(const Cycle& c, const Params& p);

// Multiplicity per canonical cycle index.
struct CycleMultiset {
  std::map<std::size_t, std::size_t> counts;

  // {3, 3, 2} -> {2: 1, 3: 2}
  static CycleMultiset from_indices(std::span<const std::size_t> indices);
  std::size_t total_edges(std::span<const Cycle> inventory) const;
  std::string to_string() const;  // "2+3+3"
};

// Multiset union of the multi-images. Throws UnknownCycleIndex for an index
// outside `inventory`.
HSMultigraph union_images(const CycleMultiset& ms, std::span<const Cycle> inventory,
                          const Params& p);

// Digit pairs, least-significant position first.
struct PermutipleString {
  std::vector<DigitPair> pairs;

  std::string to_string() const;  // "(8,2)(8,2)(2,8)"
  // Parses "(8,2)(8,2)(2,8)"; whitespace is ignored. Throws InvalidDigits.
  static PermutipleString parse(const std::string& text);

  friend auto operator<=>(const PermutipleString&, const PermutipleString&) = default;
};

// States c_0 .. c_len visited by chaining transitions. Throws RejectedInput
// for a non-mother-graph pair and NotAnLWalk if the chain breaks.
std::vector<int> state_walk(const PermutipleString& s, const Params& p);

// digits[j] = s[j].d1, permuted[j] = s[j].d2, carries from the state walk.
// Throws NotAnLWalk unless the walk starts and ends at state 0.
PermutipleWitness string_to_witness(const PermutipleString& s, const Params& p);

}  // namespace permutiple
