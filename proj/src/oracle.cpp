#include "permutiple/oracle.hpp"

#include <algorithm>
#include <iterator>

#include <fmt/format.h>

#include "permutiple/errors.hpp"
#include "permutiple/euler.hpp"

namespace permutiple {

namespace {

// b^len, or BudgetExceeded if it is larger than `budget`.
std::uint64_t checked_power(const Params& p, std::size_t len, std::uint64_t budget) {
  if (len == 0) throw InvalidDigits("length must be at least 1");
  const std::uint64_t b = static_cast<std::uint64_t>(p.base());
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (power > budget / b) {
      throw BudgetExceeded(fmt::format("{}^{} exceeds the scan budget {}", p.base(),
                                       len, budget));
    }
    power *= b;
  }
  return power;
}

// Writes the len-digit padding of x, least significant first.
void fill_digits(std::uint64_t x, std::uint64_t b, std::vector<int>& out) {
  for (auto& d : out) {
    d = static_cast<int>(x % b);
    x /= b;
  }
}

}  // namespace

std::vector<PermutipleWitness> brute_force_search(const Params& p, std::size_t len,
                                                  std::uint64_t budget) {
  const std::uint64_t top = checked_power(p, len, budget);
  const std::uint64_t b = static_cast<std::uint64_t>(p.base());
  const std::uint64_t n = static_cast<std::uint64_t>(p.multiplier());
  const std::uint64_t bottom = top / b;  // smallest len-digit number; 1 when len == 1

  std::vector<PermutipleWitness> out;
  std::vector<int> m_digits(len);
  std::vector<int> q_digits(len);
  std::vector<int> tally(p.base());
  for (std::uint64_t q = (bottom + n - 1) / n; q * n < top; ++q) {
    const std::uint64_t m = q * n;
    fill_digits(m, b, m_digits);
    fill_digits(q, b, q_digits);
    std::fill(tally.begin(), tally.end(), 0);
    for (int d : m_digits) ++tally[d];
    bool same = true;
    for (int d : q_digits) {
      if (--tally[d] < 0) {
        same = false;
        break;
      }
    }
    if (!same) continue;
    DigitVec digits(m_digits, p.base());
    DigitVec permuted(q_digits, p.base());
    auto sigma = find_sigma(digits, permuted);
    out.push_back(PermutipleWitness::assemble(p, std::move(digits), std::move(permuted),
                                              std::move(sigma)));
  }
  return out;
}

std::uint64_t palintiple_count(const Params& p, std::size_t len, std::uint64_t budget) {
  if (len < 2) throw InvalidDigits("palintiple length must be at least 2");
  const std::uint64_t top = checked_power(p, len, budget);
  const std::uint64_t b = static_cast<std::uint64_t>(p.base());
  const std::uint64_t n = static_cast<std::uint64_t>(p.multiplier());
  const std::uint64_t bottom = top / b;

  std::uint64_t count = 0;
  std::vector<int> m_digits(len);
  std::vector<int> q_digits(len);
  for (std::uint64_t q = (bottom + n - 1) / n; q * n < top; ++q) {
    fill_digits(q * n, b, m_digits);
    fill_digits(q, b, q_digits);
    if (std::equal(m_digits.begin(), m_digits.end(), q_digits.rbegin())) ++count;
  }
  return count;
}

std::vector<CycleMultiset> cycle_multisets_of_length(std::span<const Cycle> inventory,
                                                     std::size_t len) {
  std::vector<CycleMultiset> out;
  std::vector<std::size_t> chosen;
  auto extend = [&](auto& self, std::size_t from, std::size_t left) -> void {
    if (left == 0) {
      out.push_back(CycleMultiset::from_indices(chosen));
      return;
    }
    for (std::size_t i = from; i < inventory.size(); ++i) {
      if (inventory[i].length() > left) continue;
      chosen.push_back(i);
      self(self, i, left - inventory[i].length());
      chosen.pop_back();
    }
  };
  if (len > 0) extend(extend, 0, len);
  return out;
}

std::optional<std::vector<Cycle>> decompose_into_cycles(std::vector<DigitPair> edges) {
  std::sort(edges.begin(), edges.end());
  std::vector<bool> used(edges.size(), false);
  std::size_t left = edges.size();

  auto take_from = [&](int v) -> std::optional<int> {
    auto it = std::lower_bound(edges.begin(), edges.end(), DigitPair{v, 0});
    for (; it != edges.end() && it->d1 == v; ++it) {
      auto idx = static_cast<std::size_t>(it - edges.begin());
      if (!used[idx]) {
        used[idx] = true;
        --left;
        return it->d2;
      }
    }
    return std::nullopt;
  };

  std::vector<Cycle> cycles;
  std::vector<int> path;
  while (left > 0 || path.size() > 1) {
    if (path.empty()) {
      auto first = std::find(used.begin(), used.end(), false);
      path.push_back(edges[static_cast<std::size_t>(first - used.begin())].d1);
    }
    auto next = take_from(path.back());
    if (!next) return std::nullopt;
    auto pos = std::find(path.begin(), path.end(), *next);
    if (pos == path.end()) {
      path.push_back(*next);
      continue;
    }
    cycles.push_back(Cycle::from_vertices(std::vector<int>(pos, path.end())));
    path.erase(pos + 1, path.end());
    if (path.size() == 1) path.clear();
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

EquivalenceReport equivalence_check(const Params& p, std::size_t len,
                                    const EquivalenceOptions& opts) {
  EquivalenceReport r;
  r.len = len;

  for (const auto& w : brute_force_search(p, len, opts.scan_budget)) {
    r.brute_force.insert(value(w.digits));
  }

  const auto inventory = enumerate_cycles(build_mother_graph(p), opts.max_cycles);
  EnumerationOptions enum_opts;
  enum_opts.leading_zero = LeadingZero::kForbid;
  enum_opts.max_results = opts.max_strings;
  for (const auto& ms : cycle_multisets_of_length(inventory, len)) {
    ++r.multisets_tried;
    const HSMultigraph g = union_images(ms, inventory, p);
    if (!condition_report(g).verdict()) continue;
    ++r.multisets_accepted;
    for (const auto& s : enumerate_strings(g, enum_opts)) {
      const PermutipleWitness w = string_to_witness(s, p);
      if (!verify_witness(w).is_permutiple()) {
        ++r.unsound;
        continue;
      }
      r.pipeline.insert(value(w.digits));
    }
  }

  std::set_difference(r.pipeline.begin(), r.pipeline.end(), r.brute_force.begin(),
                      r.brute_force.end(),
                      std::inserter(r.only_pipeline, r.only_pipeline.end()));
  std::set_difference(r.brute_force.begin(), r.brute_force.end(), r.pipeline.begin(),
                      r.pipeline.end(),
                      std::inserter(r.only_brute_force, r.only_brute_force.end()));
  return r;
}

}  // namespace permutiple
