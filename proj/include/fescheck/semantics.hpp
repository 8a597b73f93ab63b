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

#ifndef FESCHECK_SEMANTICS_HPP
#define FESCHECK_SEMANTICS_HPP

#include "fescheck/enumerate.hpp"
#include "fescheck/eval.hpp"

namespace fescheck {

struct EventInstance {
  int event = -1;
  std::vector<Value> args;

  std::string str(const TypedSystem& sys) const;
  friend bool operator==(const EventInstance& a, const EventInstance& b) {
    return a.event == b.event && a.args == b.args;
  }
};

// Cartesian product of the event's parameter domains, in deterministic
// (domain-sorted, lexicographic) order.
std::vector<EventInstance> enumerate_instances(const TypedSystem& sys,
                                               int event_index);

struct SuccessorResult {
  std::vector<State> states;  // canonical order, deduplicated
  std::optional<Fault> fault;
};

// All next states t with BA true of (state, t). Directly-defined variables
// (v' = e, v' \in e) are solved; the rest are enumerated from their type
// carriers under the budget and filtered by the residual conjuncts.
SuccessorResult successors(const TypedSystem& sys, const State& state,
                           const EventInstance& inst, EnumBudget& budget,
                           bool first_only = false);

// Feasibility: successors(state, inst) nonempty.
TriResult fis(const TypedSystem& sys, const State& state,
              const EventInstance& inst, EnumBudget& budget);

// Evaluates one of the event's clause predicates (fairness, permission,
// prohibition, right, obligation) at a state with the instance's arguments.
TriResult eval_clause(const TypedSystem& sys, const ExprPtr& clause,
                      const State& state, const EventInstance& inst);

// State predicate without event context (invariant, initial).
TriResult eval_state_pred(const TypedSystem& sys, const ExprPtr& pred,
                          const State& state);

// Before-after predicate over a state pair with arguments.
TriResult eval_ba(const TypedSystem& sys, const EventDecl& ev,
                  const State& state, const State& next,
                  std::span<const Value> args);

}  // namespace fescheck

#endif
