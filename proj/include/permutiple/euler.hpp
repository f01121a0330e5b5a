#pragma once

// Eulerian-circuit side of the characterization: a cycle multiset can be
// ordered into a permutiple string iff its multi-image union contains state
// 0, is strongly connected, and is degree balanced. Every Eulerian circuit
// from state 0 spells one such string.

#include <cstddef>
#include <optional>
#include <vector>

#include "permutiple/digits.hpp"
#include "permutiple/state_machine.hpp"

namespace permutiple {

struct ConditionReport {
  bool contains_zero = false;
  // Evaluated on the states of positive degree; vacuously true when empty.
  bool strongly_connected = false;
  bool balanced = false;
  // indegree - outdegree, indexed by state.
  std::vector<int> deltas;

  bool verdict() const noexcept {
    return contains_zero && strongly_connected && balanced;
  }
};

ConditionReport condition_report(const HSMultigraph& g);

enum class Dedup { kLabelDistinct, kNumericallyDistinct };
enum class LeadingZero { kAllow, kForbid };

struct EnumerationOptions {
  Dedup dedup = Dedup::kLabelDistinct;
  // kForbid drops strings whose last (most significant) pair has d1 == 0.
  LeadingZero leading_zero = LeadingZero::kAllow;
  // Bound on label-distinct circuits generated, before filtering.
  std::size_t max_results = 100'000;
};

// All label-distinct Eulerian circuits from state 0, as strings, in
// depth-first order over multiedges sorted by (to-state, label). Empty when
// the condition report rejects `g`. Throws CapExceeded when more than
// opts.max_results circuits exist, and InvalidParams when max_results is 0.
std::vector<PermutipleString> enumerate_strings(const HSMultigraph& g,
                                                const EnumerationOptions& opts = {});

struct CircuitCounts {
  // Circuits from state 0 with every multiedge treated as distinct.
  Natural edge_sequences_from_zero = 0;
  // Circuits from state 0 up to swapping multiedges with equal labels.
  Natural label_distinct = 0;

  friend bool operator==(const CircuitCounts&, const CircuitCounts&) = default;
};

// Exhaustive (memoized) backtracking count. Both counts are 0 unless the
// condition report accepts `g`.
CircuitCounts count_circuits(const HSMultigraph& g);

// The same counts from the BEST theorem: arborescences into state 0 times
// prod (outdeg(v) - 1)!, times outdeg(0) rotations, divided by
// prod (label multiplicity)! for the label-distinct count.
CircuitCounts count_circuits_best(const HSMultigraph& g);

// One Eulerian circuit from state 0 found by Hierholzer's algorithm, with no
// appeal to the degree conditions. nullopt when `g` is empty or the walk it
// builds is not an Eulerian circuit from 0.
std::optional<PermutipleString> hierholzer_circuit(const HSMultigraph& g);

}  // namespace permutiple
