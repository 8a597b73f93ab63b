// Copyright 2026 The fescheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FESCHECK_GRAPH_HPP
#define FESCHECK_GRAPH_HPP

#include <unordered_map>

#include <nlohmann/json_fwd.hpp>

#include "fescheck/semantics.hpp"

namespace fescheck {

// Finite labeled transition graph: reachable states, event-instance edges,
// a stutter self-loop on every state, and the registry of weak-fairness
// demands (one per instance of every event whose fairness clause is not the
// literal false).
struct TransitionGraph {
  static constexpr int kStutter = -1;

  TypedSystemPtr sys;
  std::vector<State> states;  // BFS discovery order, deterministic
  std::unordered_map<State, int, StateHash> index;
  std::vector<int> init;

  struct Edge {
    int src;
    int label;  // instance id, or kStutter
    int dst;
  };
  std::vector<Edge> edges;            // sorted by (src, label, dst)
  std::vector<std::vector<int>> out;  // edge ids per source state

  std::vector<EventInstance> instances;            // global registry
  std::vector<std::pair<int, int>> event_instances;  // [begin,end) per event
  std::vector<int> fairness;  // instance ids with a fairness demand

  const EventInstance& label(int instance_id) const {
    return instances[static_cast<size_t>(instance_id)];
  }
  std::string edge_str(const Edge& e) const;
  size_t labeled_edge_count() const;

  // Fairness predicate of a registered instance at a state.
  TriResult fair_holds(int instance_id, int state_idx) const;
};

struct GraphResult {
  std::optional<TransitionGraph> graph;
  std::optional<Fault> fault;
  std::vector<std::string> warnings;
  bool ok() const { return graph.has_value(); }
};

struct InitialResult {
  std::vector<State> states;  // canonical order
  std::optional<Fault> fault;
  std::vector<std::string> warnings;
};

// All carrier-typed valuations satisfying the initial condition. Conjuncts
// of shape v = expr / v \in expr are solved directly, the rest enumerated.
InitialResult initial_states(const TypedSystem& sys, const Limits& limits);

// BFS closure of the initial states under all event instances.
GraphResult build_graph(TypedSystemPtr sys, const Limits& limits);

// Streams all carrier-typed valuations satisfying the invariant, in
// deterministic order. Returns a fault on evaluation failure.
std::optional<Fault> enumerate_invariant_states(
    const TypedSystem& sys, const Limits& limits,
    const std::function<bool(const State&)>& yield);

nlohmann::json state_to_json(const TypedSystem& sys, const State& s);
nlohmann::json graph_to_json(const TransitionGraph& g);
std::string graph_to_dot(const TransitionGraph& g, bool include_stutter);

}  // namespace fescheck

#endif
