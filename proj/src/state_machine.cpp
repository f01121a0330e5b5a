#include "permutiple/state_machine.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include <fmt/format.h>

#include "permutiple/errors.hpp"

namespace permutiple {

Transition transition(DigitPair pair, const Params& p) {
  if (!edge_allowed(pair, p)) {
    throw RejectedInput(fmt::format("{} is not an edge of the ({},{}) mother graph",
                                    pair.to_string(), p.multiplier(), p.base()));
  }
  const long long n = p.multiplier();
  const long long b = p.base();
  // c1 == d1 - n*d2 (mod b), and edge_allowed puts that residue in [0, n-1].
  const long long c1 = least_residue(pair.d1 - n * pair.d2, b);
  const long long c2 = (n * pair.d2 - pair.d1 + c1) / b;
  return {static_cast<int>(c1), static_cast<int>(c2)};
}

HSMultigraph::HSMultigraph(Params p, std::vector<LabeledMultiedge> multiedges)
    : params_(p), edges_(std::move(multiedges)) {
  for (const auto& e : edges_) {
    const Transition t = transition(e.label, params_);
    if (t.from != e.from || t.to != e.to) {
      throw RejectedInput(fmt::format("label {} drives {}->{}, not {}->{}",
                                      e.label.to_string(), t.from, t.to, e.from,
                                      e.to));
    }
  }
  std::sort(edges_.begin(), edges_.end());
}

int HSMultigraph::outdegree(int state) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [state](const auto& e) { return e.from == state; }));
}

int HSMultigraph::indegree(int state) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [state](const auto& e) { return e.to == state; }));
}

std::map<DigitPair, int> HSMultigraph::label_multiplicities() const {
  std::map<DigitPair, int> out;
  for (const auto& e : edges_) ++out[e.label];
  return out;
}

std::map<std::pair<int, int>, std::vector<DigitPair>> HSMultigraph::grouped() const {
  std::map<std::pair<int, int>, std::vector<DigitPair>> out;
  for (const auto& e : edges_) out[{e.from, e.to}].push_back(e.label);
  return out;
}

HSMultigraph& HSMultigraph::operator+=(const HSMultigraph& other) {
  if (!(params_ == other.params_)) {
    throw InvalidParams("cannot unite multigraphs with different (n, b)");
  }
  std::vector<LabeledMultiedge> merged;
  merged.reserve(edges_.size() + other.edges_.size());
  std::merge(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end(),
             std::back_inserter(merged));
  edges_ = std::move(merged);
  return *this;
}

HSMultigraph build_hs_multigraph(const Params& p) {
  const MotherGraph m = build_mother_graph(p);
  std::vector<LabeledMultiedge> edges;
  edges.reserve(m.edges().size());
  for (const auto& label : m.edges()) {
    const Transition t = transition(label, p);
    edges.push_back({t.from, t.to, label});
  }
  return HSMultigraph(p, std::move(edges));
}

HSMultigraph cycle_multi_image(const Cycle& c, const Params& p) {
  std::vector<LabeledMultiedge> edges;
  edges.reserve(c.length());
  for (const auto& label : c.edges()) {
    const Transition t = transition(label, p);
    edges.push_back({t.from, t.to, label});
  }
  return HSMultigraph(p, std::move(edges));
}

CycleMultiset CycleMultiset::from_indices(std::span<const std::size_t> indices) {
  CycleMultiset ms;
  for (std::size_t i : indices) ++ms.counts[i];
  return ms;
}

std::size_t CycleMultiset::total_edges(std::span<const Cycle> inventory) const {
  std::size_t total = 0;
  for (const auto& [index, count] : counts) {
    if (index >= inventory.size()) {
      throw UnknownCycleIndex(fmt::format("no cycle with index {}", index));
    }
    total += count * inventory[index].length();
  }
  return total;
}

std::string CycleMultiset::to_string() const {
  std::string s;
  for (const auto& [index, count] : counts) {
    for (std::size_t k = 0; k < count; ++k) {
      if (!s.empty()) s += '+';
      s += std::to_string(index);
    }
  }
  return s;
}

HSMultigraph union_images(const CycleMultiset& ms, std::span<const Cycle> inventory,
                          const Params& p) {
  HSMultigraph out(p);
  for (const auto& [index, count] : ms.counts) {
    if (index >= inventory.size()) {
      throw UnknownCycleIndex(fmt::format("no cycle with index {} (inventory has {})",
                                          index, inventory.size()));
    }
    const HSMultigraph image = cycle_multi_image(inventory[index], p);
    for (std::size_t k = 0; k < count; ++k) out += image;
  }
  return out;
}

std::string PermutipleString::to_string() const {
  std::string s;
  for (const auto& pr : pairs) s += pr.to_string();
  return s;
}

PermutipleString PermutipleString::parse(const std::string& text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  PermutipleString out;
  std::size_t pos = 0;
  auto fail = [&] {
    throw InvalidDigits(fmt::format("cannot parse permutiple string '{}'", text));
  };
  auto read_int = [&](int& x) {
    const char* first = compact.data() + pos;
    const char* last = compact.data() + compact.size();
    auto [ptr, ec] = std::from_chars(first, last, x);
    if (ec != std::errc() || ptr == first) fail();
    pos += static_cast<std::size_t>(ptr - first);
  };
  auto expect = [&](char ch) {
    if (pos >= compact.size() || compact[pos] != ch) fail();
    ++pos;
  };
  while (pos < compact.size()) {
    DigitPair pr;
    expect('(');
    read_int(pr.d1);
    expect(',');
    read_int(pr.d2);
    expect(')');
    out.pairs.push_back(pr);
  }
  return out;
}

std::vector<int> state_walk(const PermutipleString& s, const Params& p) {
  std::vector<int> states;
  states.reserve(s.pairs.size() + 1);
  for (std::size_t j = 0; j < s.pairs.size(); ++j) {
    const Transition t = transition(s.pairs[j], p);
    if (j == 0) {
      states.push_back(t.from);
    } else if (states.back() != t.from) {
      throw NotAnLWalk(fmt::format("position {}: {} leaves state {} but the walk is at {}",
                                   j, s.pairs[j].to_string(), t.from, states.back()));
    }
    states.push_back(t.to);
  }
  return states;
}

PermutipleWitness string_to_witness(const PermutipleString& s, const Params& p) {
  if (s.pairs.empty()) throw NotAnLWalk("empty string");
  std::vector<int> states = state_walk(s, p);
  if (states.front() != 0) {
    throw NotAnLWalk(fmt::format("walk starts at state {}", states.front()));
  }
  if (states.back() != 0) {
    throw NotAnLWalk(fmt::format("walk ends at state {}", states.back()));
  }
  std::vector<int> digits;
  std::vector<int> permuted;
  digits.reserve(s.pairs.size());
  permuted.reserve(s.pairs.size());
  for (const auto& pr : s.pairs) {
    digits.push_back(pr.d1);
    permuted.push_back(pr.d2);
  }
  DigitVec d(std::move(digits), p.base());
  DigitVec q(std::move(permuted), p.base());
  auto sigma = find_sigma(d, q);
  return PermutipleWitness{p, std::move(d), std::move(q), CarrySeq{std::move(states)},
                           std::move(sigma)};
}

}  // namespace permutiple
