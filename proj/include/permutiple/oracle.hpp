#pragma once

// Brute-force ground truth, computed straight from the definition of a
// permutiple and independent of the graph pipeline.
//
// Scans count "numbers with exactly len digits": the leading digit of the
// product m is nonzero, while the multiplicand m / n is padded with leading
// zeros to len digits. The graph side uses LeadingZero::kForbid to match.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "permutiple/digits.hpp"
#include "permutiple/mother_graph.hpp"
#include "permutiple/state_machine.hpp"

namespace permutiple {

inline constexpr std::uint64_t kDefaultScanBudget = 10'000'000;

// Every len-digit (n, b)-permutiple, ascending by value. Throws
// BudgetExceeded when the scan would visit more than `budget` candidates.
std::vector<PermutipleWitness> brute_force_search(const Params& p, std::size_t len,
                                                  std::uint64_t budget = kDefaultScanBudget);

// Number of len-digit m with m = n * reverse(m), reversing the len-digit
// padding. Scans the multiplicand, so it visits about b^len / n candidates.
std::uint64_t palintiple_count(const Params& p, std::size_t len,
                               std::uint64_t budget = kDefaultScanBudget);

// All multisets of inventory cycles whose lengths sum to exactly `len`, in
// lexicographic order of their sorted index lists.
std::vector<CycleMultiset> cycle_multisets_of_length(std::span<const Cycle> inventory,
                                                     std::size_t len);

// Splits a multiset of mother-graph edges into elementary cycles, or nullopt
// if that is impossible (some vertex has unequal in- and out-multiplicity).
std::optional<std::vector<Cycle>> decompose_into_cycles(std::vector<DigitPair> edges);

struct EquivalenceOptions {
  std::uint64_t scan_budget = kDefaultScanBudget;
  std::size_t max_cycles = kDefaultMaxCycles;
  std::size_t max_strings = 100'000;
};

struct EquivalenceReport {
  std::size_t len = 0;
  std::size_t multisets_tried = 0;
  std::size_t multisets_accepted = 0;
  std::set<Natural> pipeline;     // values reached through Euler circuits
  std::set<Natural> brute_force;  // values from the exhaustive scan
  std::set<Natural> only_pipeline;
  std::set<Natural> only_brute_force;
  // Pipeline strings that failed verify_witness; should stay empty.
  std::size_t unsound = 0;

  bool equivalent() const noexcept {
    return only_pipeline.empty() && only_brute_force.empty() && unsound == 0;
  }
};

// Compares the graph pipeline (cycle multisets of total length len, filtered
// by the condition report, enumerated without leading zeros) against the
// brute-force scan.
EquivalenceReport equivalence_check(const Params& p, std::size_t len,
                                    const EquivalenceOptions& opts = {});

}  // namespace permutiple
