#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "CLI11.hpp"
#include "permutiple/digits.hpp"
#include "permutiple/errors.hpp"
#include "permutiple/euler.hpp"
#include "permutiple/export.hpp"
#include "permutiple/mother_graph.hpp"
#include "permutiple/oracle.hpp"
#include "permutiple/state_machine.hpp"

namespace permutiple::cli {

namespace {

enum class Format { kTable, kJson, kDot };

// Everything one invocation needs, filled in by the argument parser.
struct CommandSpec {
  std::string name;
  int n = 0;
  int b = 0;
  Format format = Format::kTable;
  std::size_t cycle = 0;
  std::vector<std::size_t> cycles;
  std::vector<std::size_t> highlight;
  std::string digits;
  std::string permuted;
  std::string string;
  std::size_t len = 0;
  std::size_t max_cycles = kDefaultMaxCycles;
  std::size_t max_strings = 100'000;
  std::uint64_t max_scan = kDefaultScanBudget;
  Dedup dedup = Dedup::kLabelDistinct;
  LeadingZero leading_zero = LeadingZero::kAllow;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

void require_not_dot(const CommandSpec& cmd) {
  if (cmd.format == Format::kDot) {
    throw UsageError(fmt::format("'{}' has no DOT rendering", cmd.name));
  }
}

Json indices_json(const std::vector<std::size_t>& xs) {
  Json arr = Json::array();
  for (auto x : xs) arr.push_back(x);
  return arr;
}

std::string multigraph_table(const HSMultigraph& g) {
  std::string out;
  for (const auto& [edge, labels] : g.grouped()) {
    std::vector<std::string> text;
    for (const auto& l : labels) text.push_back(l.to_string());
    out += fmt::format("{} -> {} : {}\n", edge.first, edge.second, fmt::join(text, " "));
  }
  return out;
}

std::string witness_line(const PermutipleWitness& w) {
  return fmt::format("{}  [{} = {}*{}]", w.to_string(), value(w.digits).str(),
                     w.params.multiplier(), value(w.permuted).str());
}

// Resolves --cycles against the canonical inventory.
HSMultigraph selected_union(const CommandSpec& cmd, const Params& p) {
  if (cmd.cycles.empty()) throw UsageError("--cycles needs at least one index");
  const auto inventory = enumerate_cycles(build_mother_graph(p), cmd.max_cycles);
  return union_images(CycleMultiset::from_indices(cmd.cycles), inventory, p);
}

void cmd_mother(const CommandSpec& cmd, const Params& p, std::ostream& out) {
  const MotherGraph m = build_mother_graph(p);
  std::optional<ClassGraph> highlight;
  if (!cmd.highlight.empty()) {
    const auto inventory = enumerate_cycles(m, cmd.max_cycles);
    std::vector<DigitPair> edges;
    for (auto i : cmd.highlight) {
      if (i >= inventory.size()) {
        throw UnknownCycleIndex(fmt::format("no cycle with index {}", i));
      }
      for (const auto& e : inventory[i].edges()) edges.push_back(e);
    }
    highlight.emplace(p, std::move(edges));
  }
  switch (cmd.format) {
    case Format::kJson: {
      Json doc = to_json(m);
      if (highlight) doc["highlight"] = to_json(*highlight)["edges"];
      out << dump(doc);
      break;
    }
    case Format::kDot:
      out << to_dot(m, highlight ? &*highlight : nullptr);
      break;
    case Format::kTable:
      out << fmt::format("({},{}) mother graph: {} edges\n", p.multiplier(), p.base(),
                         m.edges().size());
      for (int v = 0; v < m.vertex_count(); ++v) {
        out << fmt::format("{} -> {}\n", v, fmt::join(m.successors(v), " "));
      }
      break;
  }
}

void cmd_cycles(const CommandSpec& cmd, const Params& p, std::ostream& out) {
  require_not_dot(cmd);
  const auto inventory = enumerate_cycles(build_mother_graph(p), cmd.max_cycles);
  if (cmd.format == Format::kJson) {
    out << dump(cycles_to_json(p, inventory));
    return;
  }
  out << fmt::format("({},{}) mother graph: {} elementary cycles\n", p.multiplier(),
                     p.base(), inventory.size());
  for (std::size_t i = 0; i < inventory.size(); ++i) {
    out << fmt::format("C{:<4} len {:<3} {}\n", i, inventory[i].length(),
                       inventory[i].to_string());
  }
}

void emit_multigraph(const CommandSpec& cmd, const HSMultigraph& g,
                     const std::vector<std::size_t>& cycles, std::ostream& out) {
  switch (cmd.format) {
    case Format::kJson: {
      Json doc = to_json(g);
      if (!cycles.empty()) {
        Json with_cycles;
        with_cycles["params"] = doc["params"];
        with_cycles["cycles"] = indices_json(cycles);
        with_cycles["states"] = doc["states"];
        with_cycles["multiedges"] = doc["multiedges"];
        doc = std::move(with_cycles);
      }
      out << dump(doc);
      break;
    }
    case Format::kDot:
      out << to_dot(g);
      break;
    case Format::kTable:
      out << fmt::format("{} multiedges over states 0..{}\n", g.size(),
                         g.state_count() - 1);
      out << multigraph_table(g);
      break;
  }
}

void cmd_multigraph(const CommandSpec& cmd, const Params& p, std::ostream& out) {
  emit_multigraph(cmd, build_hs_multigraph(p), {}, out);
}

void cmd_image(const CommandSpec& cmd, const Params& p, std::ostream& out) {
  const auto inventory = enumerate_cycles(build_mother_graph(p), cmd.max_cycles);
  if (cmd.cycle >= inventory.size()) {
    throw UnknownCycleIndex(fmt::format("no cycle with index {} (inventory has {})",
                                        cmd.cycle, inventory.size()));
  }
  emit_multigraph(cmd, cycle_multi_image(inventory[cmd.cycle], p), {cmd.cycle}, out);
}

void cmd_check(const CommandSpec& cmd, const Params& p, std::ostream& out) {
  const HSMultigraph g = selected_union(cmd, p);
  const ConditionReport r = condition_report(g);
  switch (cmd.format) {
    case Format::kJson: {
      Json doc;
      doc["params"] = to_json(p);
      doc["cycles"] = indices_json(cmd.cycles);
      doc.update(to_json(r));
      out << dump(doc);
      break;
    }
    case Format::kDot:
      out << to_dot(g);
      break;
    case Format::kTable:
      out << fmt::format("contains_zero       {}\n", r.contains_zero);
      out << fmt::format("strongly_connected  {}\n", r.strongly_connected);
      out << fmt::format("balanced            {}  (in-out per state: {})\n", r.balanced,
                         fmt::join(r.deltas, " "));
      out << fmt::format("verdict             {}\n", r.verdict());
      break;
  }
}

void cmd_strings(const CommandSpec& cmd, const Params& p, std::ostream& out) {
  require_not_dot(cmd);
  const HSMultigraph g = selected_union(cmd, p);
  EnumerationOptions opts;
  opts.dedup = cmd.dedup;
  opts.leading_zero = cmd.leading_zero;
  opts.max_results = cmd.max_strings;
  const auto strings = enumerate_strings(g, opts);
  if (cmd.format == Format::kJson) {
    Json doc;
    doc["params"] = to_json(p);
    doc["cycles"] = indices_json(cmd.cycles);
    doc["count"] = strings.size();
    Json arr = Json::array();
    for (const auto& s : strings) {
      Json item;
      item["string"] = s.to_string();
      item.update(to_json(string_to_witness(s, p)));
      arr.push_back(std::move(item));
    }
    doc["strings"] = std::move(arr);
    out << dump(doc);
    return;
  }
  out << fmt::format("{} permutiple strings\n", strings.size());
  for (const auto& s : strings) {
    out << fmt::format("{}  ->  {}\n", s.to_string(), string_to_witness(s, p).to_string());
  }
}

void cmd_convert(const CommandSpec& cmd, const Params& p, std::ostream& out) {
  require_not_dot(cmd);
  const PermutipleString s = PermutipleString::parse(cmd.string);
  const PermutipleWitness w = string_to_witness(s, p);
  const WitnessReport r = verify_witness(w);
  if (cmd.format == Format::kJson) {
    Json doc;
    doc["params"] = to_json(p);
    doc["string"] = s.to_string();
    doc.update(to_json(w, r));
    out << dump(doc);
    return;
  }
  out << witness_line(w) << "\n";
  out << fmt::format("carries {}\nis_permutiple {}\n", fmt::join(w.carries.carries, ","),
                     r.is_permutiple());
}

void cmd_verify(const CommandSpec& cmd, const Params& p, std::ostream& out) {
  require_not_dot(cmd);
  DigitVec digits = parse_msd_first(cmd.digits, p.base());
  DigitVec permuted = parse_msd_first(cmd.permuted, p.base());
  const auto w = PermutipleWitness::assemble(p, std::move(digits), std::move(permuted));
  const WitnessReport r = verify_witness(w);
  if (cmd.format == Format::kJson) {
    Json doc;
    doc["params"] = to_json(p);
    doc.update(to_json(w, r));
    out << dump(doc);
    return;
  }
  out << w.to_string() << "\n";
  out << fmt::format("multiset_equal         {}\n", r.multiset_equal);
  out << fmt::format("value_relation         {}\n", r.value_relation);
  out << fmt::format("recurrence_consistent  {}\n", r.recurrence_consistent);
  out << fmt::format("final_carry_zero       {}\n", r.final_carry_zero);
  out << fmt::format("carries_bounded        {}\n", r.carries_bounded);
  out << fmt::format("carries                {}\n", fmt::join(w.carries.carries, ","));
  out << (r.is_permutiple() ? "valid\n" : "invalid\n");
}

void cmd_search(const CommandSpec& cmd, const Params& p, std::ostream& out) {
  require_not_dot(cmd);
  const auto found = brute_force_search(p, cmd.len, cmd.max_scan);
  if (cmd.format == Format::kJson) {
    Json doc;
    doc["params"] = to_json(p);
    doc["len"] = cmd.len;
    doc["count"] = found.size();
    Json arr = Json::array();
    for (const auto& w : found) arr.push_back(to_json(w));
    doc["witnesses"] = std::move(arr);
    out << dump(doc);
    return;
  }
  out << fmt::format("{} permutiples with {} digits\n", found.size(), cmd.len);
  for (const auto& w : found) out << witness_line(w) << "\n";
}

void cmd_palintiples(const CommandSpec& cmd, const Params& p, std::ostream& out) {
  require_not_dot(cmd);
  const std::uint64_t count = palintiple_count(p, cmd.len, cmd.max_scan);
  if (cmd.format == Format::kJson) {
    Json doc;
    doc["params"] = to_json(p);
    doc["len"] = cmd.len;
    doc["count"] = count;
    out << dump(doc);
    return;
  }
  out << fmt::format("{} palintiples with {} digits\n", count, cmd.len);
}

void cmd_equiv(const CommandSpec& cmd, const Params& p, std::ostream& out) {
  require_not_dot(cmd);
  EquivalenceOptions opts;
  opts.scan_budget = cmd.max_scan;
  opts.max_cycles = cmd.max_cycles;
  opts.max_strings = cmd.max_strings;
  const EquivalenceReport r = equivalence_check(p, cmd.len, opts);
  if (cmd.format == Format::kJson) {
    Json doc;
    doc["params"] = to_json(p);
    doc.update(to_json(r));
    out << dump(doc);
    return;
  }
  out << fmt::format("length {}: {} cycle multisets, {} accepted\n", r.len,
                     r.multisets_tried, r.multisets_accepted);
  out << fmt::format("graph pipeline {} values, brute force {} values\n",
                     r.pipeline.size(), r.brute_force.size());
  out << fmt::format("only in pipeline {}, only in brute force {}, unsound {}\n",
                     r.only_pipeline.size(), r.only_brute_force.size(), r.unsound);
  out << (r.equivalent() ? "equivalent\n" : "MISMATCH\n");
}

using Handler = std::function<void(const CommandSpec&, const Params&, std::ostream&)>;

int exit_code_for(const std::exception_ptr& ex, std::ostream& err) {
  try {
    std::rethrow_exception(ex);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidParams;
  } catch (const InvalidDigits& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidDigits;
  } catch (const RejectedInput& e) {
    err << "error: " << e.what() << "\n";
    return kRejectedInput;
  } catch (const NotAnLWalk& e) {
    err << "error: not an L-walk: " << e.what() << "\n";
    return kNotAnLWalk;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise the cap)\n";
    return kCapExceeded;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --max-scan)\n";
    return kBudgetExceeded;
  } catch (const UnknownCycleIndex& e) {
    err << "error: " << e.what() << "\n";
    return kUnknownCycleIndex;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kOverflow;
  } catch (const InvalidAlignment& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidAlignment;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recognize and generate permutiple numbers", "permutiple"};
  app.require_subcommand(1);
  CommandSpec cmd;
  std::map<CLI::App*, Handler> handlers;

  const std::map<std::string, Format> formats{
      {"table", Format::kTable}, {"json", Format::kJson}, {"dot", Format::kDot}};
  const std::map<std::string, Dedup> dedups{{"label", Dedup::kLabelDistinct},
                                            {"numeric", Dedup::kNumericallyDistinct}};
  const std::map<std::string, LeadingZero> zeros{{"allow", LeadingZero::kAllow},
                                                 {"forbid", LeadingZero::kForbid}};

  auto add = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--n", cmd.n, "Multiplier n, 1 < n < b")->required();
    sub->add_option("--b", cmd.b, "Base b")->required();
    sub->add_option("--format", cmd.format, "table | json | dot")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    handlers[sub] = std::move(h);
    return sub;
  };

  auto* mother = add("mother", "The (n,b) mother graph", cmd_mother);
  mother->add_option("--highlight", cmd.highlight, "Cycle indices to highlight")
      ->delimiter(',');
  mother->add_option("--max-cycles", cmd.max_cycles, "Cycle enumeration cap");

  add("cycles", "Elementary cycles of the mother graph, with indices", cmd_cycles)
      ->add_option("--max-cycles", cmd.max_cycles, "Cycle enumeration cap");

  add("multigraph", "The carry-state multigraph", cmd_multigraph);

  auto* image = add("image", "Multi-image of one cycle", cmd_image);
  image->add_option("--cycle", cmd.cycle, "Cycle index")->required();
  image->add_option("--max-cycles", cmd.max_cycles, "Cycle enumeration cap");

  for (auto [name, help, handler] :
       {std::tuple{"check", "Condition report for a union of cycle multi-images",
                   Handler(cmd_check)},
        std::tuple{"strings", "Permutiple strings of a union of cycle multi-images",
                   Handler(cmd_strings)}}) {
    auto* sub = add(name, help, handler);
    sub->add_option("--cycles", cmd.cycles, "Comma-separated cycle indices")
        ->required()
        ->delimiter(',');
    sub->add_option("--max-cycles", cmd.max_cycles, "Cycle enumeration cap");
    if (std::string(name) == "strings") {
      sub->add_option("--max-strings", cmd.max_strings, "Enumeration cap");
      sub->add_option("--dedup", cmd.dedup, "label | numeric")
          ->transform(CLI::CheckedTransformer(dedups, CLI::ignore_case));
      sub->add_option("--leading-zero", cmd.leading_zero, "allow | forbid")
          ->transform(CLI::CheckedTransformer(zeros, CLI::ignore_case));
    }
  }

  auto* convert = add("convert", "Turn a permutiple string into a witness", cmd_convert);
  convert->add_option("--string", cmd.string, "Pairs, least significant first")
      ->required();

  auto* verify = add("verify", "Verify digits = n * permuted", cmd_verify);
  verify->add_option("--digits", cmd.digits, "Digits, most significant first")
      ->required();
  verify->add_option("--permuted", cmd.permuted, "Permuted digits, most significant first")
      ->required();

  for (auto [name, help, handler] :
       {std::tuple{"search", "Brute-force search for permutiples", Handler(cmd_search)},
        std::tuple{"palintiples", "Count palintiples by brute force",
                   Handler(cmd_palintiples)},
        std::tuple{"equiv", "Compare the graph pipeline with brute force",
                   Handler(cmd_equiv)}}) {
    auto* sub = add(name, help, handler);
    sub->add_option("--len", cmd.len, "Number of digits")->required()->check(
        CLI::PositiveNumber);
    sub->add_option("--max-scan", cmd.max_scan, "Largest b^len the scan may visit");
    if (std::string(name) == "equiv") {
      sub->add_option("--max-cycles", cmd.max_cycles, "Cycle enumeration cap");
      sub->add_option("--max-strings", cmd.max_strings, "Enumeration cap per multiset");
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  for (const auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    cmd.name = sub->get_name();
    try {
      const Params p(cmd.n, cmd.b);
      std::ostringstream buffer;
      handler(cmd, p, buffer);
      out << buffer.str();
      return kOk;
    } catch (...) {
      return exit_code_for(std::current_exception(), err);
    }
  }
  err << "error: no subcommand\n";
  return kUsageError;
}

}  // namespace permutiple::cli
