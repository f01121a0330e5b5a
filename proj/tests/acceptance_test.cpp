// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "permutiple/errors.hpp"
#include "permutiple/euler.hpp"
#include "permutiple/oracle.hpp"

using namespace permutiple;

namespace {

struct Check {
  bool ok = true;
  std::string why;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

std::vector<DigitPair> edge_list(std::span<const DigitPair> xs) { return {xs.begin(), xs.end()}; }

std::vector<DigitPair> sorted(std::vector<DigitPair> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

std::size_t index_of(const std::vector<Cycle>& inv, std::vector<int> vertices) {
  const auto idx = find_cycle(inv, Cycle::from_vertices(std::move(vertices)));
  if (!idx) throw Error("cycle missing from inventory");
  return *idx;
}

HSMultigraph union_of(const Params& p, const std::vector<Cycle>& inv,
                      std::vector<std::size_t> idx) {
  return union_images(CycleMultiset::from_indices(idx), inv, p);
}

std::map<std::string, std::string> string_table(const HSMultigraph& g, const Params& p) {
  std::map<std::string, std::string> out;
  for (const auto& s : enumerate_strings(g)) {
    out[s.to_string()] = string_to_witness(s, p).to_string();
  }
  return out;
}

void criterion1(Check& c) {
  c.expect(edge_list(build_mother_graph(Params(2, 4)).edges()) ==
               sorted({{0, 0}, {0, 2}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 1}, {3, 3}}),
           "(2,4) edge set");
  c.expect(edge_list(build_mother_graph(Params(3, 4)).edges()) ==
               sorted({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 3}, {2, 0}, {2, 2}, {2, 3},
                       {3, 1}, {3, 2}, {3, 3}}),
           "(3,4) edge set");
  std::vector<DigitPair> expected;
  for (int d1 = 0; d1 < 10; ++d1) {
    for (int d2 = 0; d2 < 10; ++d2) {
      // d1 - 4 d2 mod 10 in {0..3}
      if (((d1 - 4 * d2) % 10 + 10) % 10 < 4) expected.push_back({d1, d2});
    }
  }
  const auto m410 = edge_list(build_mother_graph(Params(4, 10)).edges());
  c.expect(m410.size() == 40 && m410 == expected, "(4,10) edge set");
}

void criterion2(Check& c) {
  auto content = [](const std::vector<Cycle>& inv) {
    std::set<std::vector<DigitPair>> out;
    for (const auto& cy : inv) out.insert(sorted(cy.edges()));
    return out;
  };
  auto expect_of = [](std::vector<std::vector<DigitPair>> cycles) {
    std::set<std::vector<DigitPair>> out;
    for (auto& e : cycles) out.insert(sorted(e));
    return out;
  };
  const auto inv24 = enumerate_cycles(build_mother_graph(Params(2, 4)));
  c.expect(inv24.size() == 6 &&
               content(inv24) == expect_of({{{0, 0}},
                                            {{3, 3}},
                                            {{1, 2}, {2, 1}},
                                            {{0, 2}, {2, 1}, {1, 0}},
                                            {{1, 2}, {2, 3}, {3, 1}},
                                            {{0, 2}, {2, 3}, {3, 1}, {1, 0}}}),
           "(2,4) cycles");
  const auto inv34 = enumerate_cycles(build_mother_graph(Params(3, 4)));
  c.expect(inv34.size() == 10 &&
               content(inv34) == expect_of({{{0, 0}},
                                            {{1, 1}},
                                            {{2, 2}},
                                            {{3, 3}},
                                            {{0, 1}, {1, 0}},
                                            {{0, 2}, {2, 0}},
                                            {{1, 3}, {3, 1}},
                                            {{2, 3}, {3, 2}},
                                            {{0, 1}, {1, 3}, {3, 2}, {2, 0}},
                                            {{0, 2}, {2, 3}, {3, 1}, {1, 0}}}),
           "(3,4) cycles");
}

void criterion3(Check& c) {
  using Grouped = std::map<std::pair<int, int>, std::vector<DigitPair>>;
  const Grouped fig4{
      {{0, 0}, {{0, 0}, {4, 1}, {8, 2}}}, {{0, 1}, {{2, 3}, {6, 4}}},
      {{0, 2}, {{0, 5}, {4, 6}, {8, 7}}}, {{0, 3}, {{2, 8}, {6, 9}}},
      {{1, 0}, {{1, 0}, {5, 1}, {9, 2}}}, {{1, 1}, {{3, 3}, {7, 4}}},
      {{1, 2}, {{1, 5}, {5, 6}, {9, 7}}}, {{1, 3}, {{3, 8}, {7, 9}}},
      {{2, 0}, {{2, 0}, {6, 1}}},         {{2, 1}, {{0, 2}, {4, 3}, {8, 4}}},
      {{2, 2}, {{2, 5}, {6, 6}}},         {{2, 3}, {{0, 7}, {4, 8}, {8, 9}}},
      {{3, 0}, {{3, 0}, {7, 1}}},         {{3, 1}, {{1, 2}, {5, 3}, {9, 4}}},
      {{3, 2}, {{3, 5}, {7, 6}}},         {{3, 3}, {{1, 7}, {5, 8}, {9, 9}}}};
  c.expect(build_hs_multigraph(Params(4, 10)).grouped() == fig4, "(4,10) grouping");
  const Grouped fig6{{{0, 0}, {{0, 0}, {2, 1}}},
                     {{0, 1}, {{0, 2}, {2, 3}}},
                     {{1, 0}, {{1, 0}, {3, 1}}},
                     {{1, 1}, {{1, 2}, {3, 3}}}};
  const auto d24 = build_hs_multigraph(Params(2, 4));
  c.expect(d24.grouped() == fig6 && d24.size() == 8, "(2,4) multigraph");
}

void criterion4(Check& c) {
  const Params p(2, 4);
  const auto inv = enumerate_cycles(build_mother_graph(p));
  // C_0..C_5 of the (2,4) cycle table, by content.
  const std::size_t c0 = index_of(inv, {0});
  const std::size_t c2 = index_of(inv, {1, 2});
  const std::size_t c3 = index_of(inv, {0, 2, 1});
  const std::size_t c4 = index_of(inv, {1, 2, 3});
  const std::size_t c5 = index_of(inv, {0, 2, 3, 1});
  using Table = std::map<std::string, std::string>;
  c.expect(string_table(union_of(p, inv, {c2, c3}), p) ==
               Table{{"(2,1)(0,2)(1,2)(1,0)(2,1)", "(2,1,1,0,2)_4 = 2*(1,0,2,2,1)_4"},
                     {"(2,1)(2,1)(0,2)(1,2)(1,0)", "(1,1,0,2,2)_4 = 2*(0,2,2,1,1)_4"},
                     {"(0,2)(1,2)(1,0)(2,1)(2,1)", "(2,2,1,1,0)_4 = 2*(1,1,0,2,2)_4"}},
           "two-cycle table");
  c.expect(string_table(union_of(p, inv, {c3, c3}), p) ==
               Table{{"(2,1)(0,2)(1,0)(2,1)(0,2)(1,0)", "(1,0,2,1,0,2)_4 = 2*(0,2,1,0,2,1)_4"},
                     {"(0,2)(1,0)(2,1)(0,2)(1,0)(2,1)", "(2,1,0,2,1,0)_4 = 2*(1,0,2,1,0,2)_4"},
                     {"(2,1)(0,2)(1,0)(0,2)(1,0)(2,1)", "(2,1,0,1,0,2)_4 = 2*(1,0,2,0,2,1)_4"},
                     {"(2,1)(2,1)(0,2)(1,0)(0,2)(1,0)", "(1,0,1,0,2,2)_4 = 2*(0,2,0,2,1,1)_4"},
                     {"(0,2)(1,0)(0,2)(1,0)(2,1)(2,1)", "(2,2,1,0,1,0)_4 = 2*(1,1,0,2,0,2)_4"},
                     {"(0,2)(1,0)(2,1)(2,1)(0,2)(1,0)", "(1,0,2,2,1,0)_4 = 2*(0,2,1,1,0,2)_4"}},
           "doubled-cycle table");
  c.expect(string_table(union_of(p, inv, {c0}), p) == Table{{"(0,0)", "(0)_4 = 2*(0)_4"}},
           "single cycle 0");
  c.expect(string_table(union_of(p, inv, {c3}), p) ==
               Table{{"(2,1)(0,2)(1,0)", "(1,0,2)_4 = 2*(0,2,1)_4"},
                     {"(0,2)(1,0)(2,1)", "(2,1,0)_4 = 2*(1,0,2)_4"}},
           "single cycle 3");
  c.expect(string_table(union_of(p, inv, {c4}), p) ==
               Table{{"(2,3)(1,2)(3,1)", "(3,1,2)_4 = 2*(1,2,3)_4"}},
           "single cycle 4");
  c.expect(string_table(union_of(p, inv, {c5}), p) ==
               Table{{"(0,2)(1,0)(2,3)(3,1)", "(3,2,1,0)_4 = 2*(1,3,0,2)_4"},
                     {"(0,2)(3,1)(2,3)(1,0)", "(1,2,3,0)_4 = 2*(0,3,1,2)_4"},
                     {"(2,3)(1,0)(0,2)(3,1)", "(3,0,1,2)_4 = 2*(1,2,0,3)_4"},
                     {"(2,3)(3,1)(0,2)(1,0)", "(1,0,3,2)_4 = 2*(0,2,1,3)_4"}},
           "single cycle 5");
}

void criterion5(Check& c) {
  const Params p(4, 10);
  const auto inv = enumerate_cycles(build_mother_graph(p));
  const std::size_t c0 = index_of(inv, {9});
  const std::size_t c1 = index_of(inv, {2, 8});
  const std::size_t c2 = index_of(inv, {1, 7});
  const auto g = union_of(p, inv, {c0, c1, c1, c2, c2});
  c.expect(condition_report(g).verdict(), "class union rejected");
  const auto table = string_table(g, p);
  for (auto [s, m, q] : {std::tuple{"(8,2)(8,2)(2,8)(9,9)(1,7)(1,7)(7,1)(2,8)(7,1)", 727119288,
                                    181779822},
                         std::tuple{"(8,2)(2,8)(1,7)(7,1)(2,8)(9,9)(1,7)(7,1)(8,2)", 871927128,
                                    217981782}}) {
    c.expect(table.count(s) == 1, std::string("missing ") + s);
    const auto w = string_to_witness(PermutipleString::parse(s), p);
    c.expect(verify_witness(w).is_permutiple() && value(w.digits) == m &&
                 value(w.permuted) == q && m == 4 * q,
             std::string("witness ") + s);
  }
  const auto bad = condition_report(union_of(p, inv, {c1, c1, c2}));
  c.expect(!bad.balanced && !bad.verdict(), "unbalanced union accepted");
}

void criterion6(Check& c) {
  const Params p(3, 4);
  const auto s = PermutipleString::parse("(1,3)(0,2)(1,1)(1,0)(3,1)(2,2)(2,3)(0,2)(2,0)(3,1)");
  const auto w = string_to_witness(s, p);
  c.expect(w.digits.msd_first() == std::vector<int>{3, 2, 0, 2, 2, 3, 1, 1, 0, 1}, "digits");
  c.expect(w.permuted.msd_first() == std::vector<int>{1, 0, 2, 3, 2, 1, 0, 1, 2, 3},
           "permuted digits");
  c.expect(verify_witness(w).is_permutiple(), "does not verify");
  c.expect(value(w.digits) == 928593 && value(w.permuted) == 309531, "values");
  // The same string is one of the circuits of its multi-image union.
  const auto inv = enumerate_cycles(build_mother_graph(p));
  std::vector<std::size_t> idx;
  for (auto v : std::vector<std::vector<int>>{{1}, {2}, {0, 2}, {1, 3}, {0, 2, 3, 1}}) {
    idx.push_back(index_of(inv, v));
  }
  c.expect(string_table(union_of(p, inv, idx), p).count(s.to_string()) == 1,
           "not among enumerated circuits");
}

void criterion7(Check& c) {
  for (auto [n, b, max_len] : {std::tuple{2, 4, 6}, std::tuple{3, 4, 6}, std::tuple{2, 5, 5},
                               std::tuple{3, 5, 5}}) {
    for (std::size_t len = 1; len <= static_cast<std::size_t>(max_len); ++len) {
      const auto r = equivalence_check(Params(n, b), len);
      c.expect(r.equivalent(), "(" + std::to_string(n) + "," + std::to_string(b) + ") len " +
                                   std::to_string(len));
    }
  }
}

void criterion8(Check& c) {
  const Params p(4, 10);
  // F_1 = F_2 = 1, F_3 = 2.
  const std::uint64_t fib[] = {0, 1, 1, 2};
  for (std::size_t len = 4; len <= 8; ++len) {
    const std::uint64_t budget = len == 8 ? 100'000'000 : kDefaultScanBudget;
    const std::uint64_t got = palintiple_count(p, len, budget);
    c.expect(got == fib[len / 2 - 1], "len " + std::to_string(len) + " count " +
                                          std::to_string(got));
  }
}

// A random elementary cycle: walk the mother graph until a vertex repeats.
Cycle random_cycle(const MotherGraph& m, std::mt19937& rng, int start) {
  std::vector<int> path{start};
  std::vector<int> pos(m.vertex_count(), -1);
  pos[start] = 0;
  for (;;) {
    const auto next = m.successors(path.back());
    const int v = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
    if (pos[v] >= 0) return Cycle::from_vertices({path.begin() + pos[v], path.end()});
    pos[v] = static_cast<int>(path.size());
    path.push_back(v);
  }
}

void criterion9(Check& c) {
  std::mt19937 rng(2024);
  std::size_t samples = 0, accepted = 0, strings_checked = 0;
  for (int b = 3; b <= 12; ++b) {
    for (int n = 2; n < b; ++n) {
      const Params p(n, b);
      const MotherGraph m = build_mother_graph(p);
      const HSMultigraph full = build_hs_multigraph(p);
      c.expect(full.size() == m.edges().size(), "multiedge count");
      std::set<DigitPair> labels;
      for (const auto& e : full.multiedges()) {
        labels.insert(e.label);
        c.expect(e.from >= 0 && e.from < n && e.to >= 0 && e.to < n, "state range");
      }
      c.expect(labels.size() == full.size(), "duplicate label");

      for (int trial = 0; trial < 25; ++trial) {
        std::vector<Cycle> picked;
        const int k = std::uniform_int_distribution<int>(1, 4)(rng);
        for (int i = 0; i < k; ++i) {
          const int start = std::uniform_int_distribution<int>(0, b - 1)(rng);
          picked.push_back(random_cycle(m, rng, start));
        }
        std::sort(picked.begin(), picked.end());
        std::vector<std::size_t> idx(picked.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        const auto g = union_images(CycleMultiset::from_indices(idx), picked, p);
        const bool verdict = condition_report(g).verdict();
        const auto circuit = hierholzer_circuit(g);
        ++samples;
        c.expect(circuit.has_value() == verdict, "Hierholzer disagrees with verdict");
        if (!verdict) continue;
        ++accepted;
        EnumerationOptions opts;
        opts.max_results = 5000;
        std::vector<PermutipleString> strings;
        try {
          strings = enumerate_strings(g, opts);
        } catch (const CapExceeded&) {
          strings = {*circuit};
        }
        for (const auto& s : strings) {
          const auto w = string_to_witness(s, p);
          const auto r = verify_witness(w);
          const auto& cs = w.carries.carries;
          bool bounded = true;
          for (int x : cs) bounded = bounded && x >= 0 && x <= n - 1;
          c.expect(r.is_permutiple() && cs.front() == 0 && cs.back() == 0 && bounded &&
                       value(w.digits) == n * value(w.permuted),
                   "string fails to verify: " + s.to_string());
          ++strings_checked;
        }
      }
    }
  }
  c.expect(samples >= 1000, "too few samples");
  c.expect(accepted > 0, "no accepted samples");
  std::printf("  (%zu multisets sampled, %zu accepted, %zu strings verified)\n", samples,
              accepted, strings_checked);
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {"1 mother graph exactness", 1, criterion1},
      {"2 cycle inventories", 1, criterion2},
      {"3 multigraph labeling", 1, criterion3},
      {"4 table reproduction", 1, criterion4},
      {"5 class union round trip", 10, criterion5},
      {"6 three-four witness", 1, criterion6},
      {"7 oracle equivalence", 60, criterion7},
      {"8 palintiple counts", 300, criterion8},
      {"9 property suites", 120, criterion9},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(secs < cr.limit_s, "over time limit");
    if (!c.ok) ++failures;
    std::printf("%s  criterion %s  (%.3f s, limit %.0f s)%s%s\n", c.ok ? "PASS" : "FAIL",
                cr.name, secs, cr.limit_s, c.ok ? "" : "  ", c.why.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
