#include "permutiple/export.hpp"

#include <cstdint>
#include <limits>

#include <fmt/format.h>

#include "permutiple/errors.hpp"

namespace permutiple {

Json to_json(const Params& p) {
  return Json{{"n", p.multiplier()}, {"b", p.base()}};
}

Json to_json(const DigitPair& e) { return Json::array({e.d1, e.d2}); }

namespace {

Json edges_json(std::span<const DigitPair> edges) {
  Json arr = Json::array();
  for (const auto& e : edges) arr.push_back(to_json(e));
  return arr;
}

Json ints_json(std::span<const int> xs) {
  Json arr = Json::array();
  for (int x : xs) arr.push_back(x);
  return arr;
}

}  // namespace

Json natural_to_json(const Natural& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
    return Json(static_cast<std::uint64_t>(v));
  }
  return Json(v.str());
}

Json to_json(const MotherGraph& m) {
  Json doc;
  doc["params"] = to_json(m.params());
  doc["edges"] = edges_json(m.edges());
  return doc;
}

Json to_json(const ClassGraph& g) {
  Json doc;
  doc["params"] = to_json(g.params());
  doc["edges"] = edges_json(g.edges());
  return doc;
}

Json cycles_to_json(const Params& p, std::span<const Cycle> inventory) {
  Json doc;
  doc["params"] = to_json(p);
  Json arr = Json::array();
  for (std::size_t i = 0; i < inventory.size(); ++i) {
    const auto edges = inventory[i].edges();
    arr.push_back(Json{{"index", i},
                       {"length", inventory[i].length()},
                       {"edges", edges_json(edges)}});
  }
  doc["cycles"] = std::move(arr);
  return doc;
}

Json to_json(const HSMultigraph& g) {
  Json doc;
  doc["params"] = to_json(g.params());
  Json states = Json::array();
  for (int s = 0; s < g.state_count(); ++s) states.push_back(s);
  doc["states"] = std::move(states);
  Json arr = Json::array();
  const auto edges = g.multiedges();
  int copy = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    copy = (i > 0 && edges[i] == edges[i - 1]) ? copy + 1 : 0;
    arr.push_back(Json{{"from", edges[i].from},
                       {"to", edges[i].to},
                       {"label", to_json(edges[i].label)},
                       {"copy", copy}});
  }
  doc["multiedges"] = std::move(arr);
  return doc;
}

Json to_json(const ConditionReport& r) {
  Json doc;
  doc["contains_zero"] = r.contains_zero;
  doc["strongly_connected"] = r.strongly_connected;
  doc["balanced"] = r.balanced;
  doc["deltas"] = ints_json(r.deltas);
  doc["verdict"] = r.verdict();
  return doc;
}

Json to_json(const PermutipleWitness& w) {
  Json doc;
  const auto digits = w.digits.msd_first();
  const auto permuted = w.permuted.msd_first();
  doc["digits"] = ints_json(digits);
  doc["permuted"] = ints_json(permuted);
  doc["value"] = natural_to_json(value(w.digits));
  doc["permuted_value"] = natural_to_json(value(w.permuted));
  doc["carries"] = ints_json(w.carries.carries);
  return doc;
}

Json to_json(const PermutipleWitness& w, const WitnessReport& r) {
  Json doc = to_json(w);
  doc["multiset_equal"] = r.multiset_equal;
  doc["value_relation"] = r.value_relation;
  doc["recurrence_consistent"] = r.recurrence_consistent;
  doc["initial_carry_zero"] = r.initial_carry_zero;
  doc["final_carry_zero"] = r.final_carry_zero;
  doc["carries_bounded"] = r.carries_bounded;
  doc["sigma_valid"] = r.sigma_valid;
  doc["is_permutiple"] = r.is_permutiple();
  return doc;
}

Json to_json(const EquivalenceReport& r) {
  auto values = [](const std::set<Natural>& xs) {
    Json arr = Json::array();
    for (const auto& x : xs) arr.push_back(natural_to_json(x));
    return arr;
  };
  Json doc;
  doc["len"] = r.len;
  doc["multisets_tried"] = r.multisets_tried;
  doc["multisets_accepted"] = r.multisets_accepted;
  doc["pipeline_count"] = r.pipeline.size();
  doc["brute_force_count"] = r.brute_force.size();
  doc["only_pipeline"] = values(r.only_pipeline);
  doc["only_brute_force"] = values(r.only_brute_force);
  doc["unsound"] = r.unsound;
  doc["equivalent"] = r.equivalent();
  return doc;
}

HSMultigraph multigraph_from_json(const Json& doc) {
  try {
    const Params p(doc.at("params").at("n").get<int>(), doc.at("params").at("b").get<int>());
    std::vector<LabeledMultiedge> edges;
    for (const auto& e : doc.at("multiedges")) {
      const auto& label = e.at("label");
      if (!label.is_array() || label.size() != 2) {
        throw InvalidDigits("multiedge label must be a two-element array");
      }
      edges.push_back({e.at("from").get<int>(), e.at("to").get<int>(),
                       DigitPair{label[0].get<int>(), label[1].get<int>()}});
    }
    return HSMultigraph(p, std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidDigits(fmt::format("malformed multigraph document: {}", ex.what()));
  }
}

std::string to_dot(const MotherGraph& m, const ClassGraph* highlight) {
  std::string out = fmt::format("digraph mother_{}_{} {{\n  node [shape=circle];\n",
                                m.params().multiplier(), m.params().base());
  for (int v = 0; v < m.vertex_count(); ++v) {
    bool marked = false;
    if (highlight) {
      for (const auto& e : highlight->edges()) marked = marked || e.d1 == v || e.d2 == v;
    }
    out += marked ? fmt::format("  {} [color=red];\n", v) : fmt::format("  {};\n", v);
  }
  for (const auto& e : m.edges()) {
    if (highlight && highlight->contains(e)) {
      out += fmt::format("  {} -> {} [color=red];\n", e.d1, e.d2);
    } else {
      out += fmt::format("  {} -> {};\n", e.d1, e.d2);
    }
  }
  out += "}\n";
  return out;
}

std::string to_dot(const ClassGraph& g) {
  std::string out = fmt::format("digraph class_{}_{} {{\n  node [shape=circle];\n",
                                g.params().multiplier(), g.params().base());
  for (int v = 0; v < g.params().base(); ++v) out += fmt::format("  {};\n", v);
  for (const auto& e : g.edges()) out += fmt::format("  {} -> {};\n", e.d1, e.d2);
  out += "}\n";
  return out;
}

std::string to_dot(const HSMultigraph& g) {
  std::string out = fmt::format(
      "digraph hs_{}_{} {{\n  rankdir=LR;\n  node [shape=circle];\n"
      "  start [shape=point];\n",
      g.params().multiplier(), g.params().base());
  for (int s = 0; s < g.state_count(); ++s) {
    out += s == 0 ? "  0 [shape=doublecircle];\n" : fmt::format("  {};\n", s);
  }
  out += "  start -> 0;\n";
  for (const auto& e : g.multiedges()) {
    out += fmt::format("  {} -> {} [label=\"{},{}\"];\n", e.from, e.to, e.label.d1,
                       e.label.d2);
  }
  out += "}\n";
  return out;
}

}  // namespace permutiple
