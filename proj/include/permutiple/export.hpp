#pragma once

// JSON and Graphviz DOT renderings. All output is deterministic: edges and
// multiedges appear in their canonical sorted order.
//
// JSON objects start with "params" ({"n", "b"}); edges are [d1, d2] arrays
// and multiedges are {"from", "to", "label", "copy"} objects, where "copy"
// numbers repeated (from, to, label) multiedges from 0.

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "permutiple/digits.hpp"
#include "permutiple/euler.hpp"
#include "permutiple/mother_graph.hpp"
#include "permutiple/oracle.hpp"
#include "permutiple/state_machine.hpp"

namespace permutiple {

using Json = nlohmann::ordered_json;

Json to_json(const Params& p);
Json to_json(const DigitPair& e);
Json to_json(const MotherGraph& m);
Json to_json(const ClassGraph& g);
Json cycles_to_json(const Params& p, std::span<const Cycle> inventory);
Json to_json(const HSMultigraph& g);
Json to_json(const ConditionReport& r);
Json to_json(const PermutipleWitness& w);
Json to_json(const PermutipleWitness& w, const WitnessReport& r);
Json to_json(const EquivalenceReport& r);

// A natural as a JSON number when it fits in 64 bits, else a decimal string.
Json natural_to_json(const Natural& v);

// Inverse of to_json(HSMultigraph). Throws InvalidDigits on a malformed
// document and RejectedInput on a multiedge inconsistent with its label.
HSMultigraph multigraph_from_json(const Json& doc);

// `highlight`, when given, is drawn in red on top of the mother graph.
std::string to_dot(const MotherGraph& m, const ClassGraph* highlight = nullptr);
std::string to_dot(const ClassGraph& g);
// State 0 is drawn as the initial and accepting state.
std::string to_dot(const HSMultigraph& g);

}  // namespace permutiple
