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

#include "fescheck/semantics.hpp"

#include <algorithm>

namespace fescheck {

std::string EventInstance::str(const TypedSystem& sys) const {
  std::string s = sys.spec.events[event].name + "(";
  for (size_t i = 0; i < args.size(); ++i) {
    if (i > 0) s += ", ";
    s += args[i].str();
  }
  return s + ")";
}

std::vector<EventInstance> enumerate_instances(const TypedSystem& sys,
                                               int event_index) {
  const auto& domains = sys.events[event_index].param_domains;
  std::vector<EventInstance> out;
  std::vector<size_t> idx(domains.size(), 0);
  for (;;) {
    EventInstance inst;
    inst.event = event_index;
    for (size_t i = 0; i < domains.size(); ++i) {
      if (domains[i].empty()) return out;  // empty domain: no instances
      inst.args.push_back(domains[i][idx[i]]);
    }
    out.push_back(std::move(inst));
    // advance odometer, last parameter fastest
    size_t i = domains.size();
    while (i-- > 0) {
      if (++idx[i] < domains[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (domains.empty()) return out;  // zero-parameter event: singleton
  }
}

SuccessorResult successors(const TypedSystem& sys, const State& state,
                           const EventInstance& inst, EnumBudget& budget,
                           bool first_only) {
  const ActionPlan& plan = sys.plans[inst.event];
  SuccessorResult out;

  EvalEnv env(sys);
  env.state_vals = &state.values();
  env.args = inst.args;

  // guards first: they mention no primed variables
  for (const auto& g : plan.guards) {
    TriResult r = eval_pred(*g, env);
    if (r.is_fault()) {
      out.fault = r.fault;
      out.fault->message += " (in " + inst.str(sys) + ")";
      return out;
    }
    if (!r.is_true()) return out;
  }

  ValuationProblem problem;
  problem.primed = true;
  problem.conjuncts = plan.residual;
  for (const auto& def : plan.defs)
    problem.slots.push_back(Slot{def.var,
                                 def.member ? Slot::Source::EvalSet
                                            : Slot::Source::EvalOne,
                                 def.rhs});
  for (int v : plan.open_vars)
    problem.slots.push_back(Slot{v, Slot::Source::Carrier, nullptr});
  std::sort(problem.slots.begin(), problem.slots.end(),
            [](const Slot& a, const Slot& b) { return a.var < b.var; });

  std::vector<Value> work(sys.spec.variables.size());
  env.next_vals = &work;
  EnumOutcome res = enumerate_valuations(
      sys, problem, env, work, budget, [&](const std::vector<Value>& vals) {
        out.states.emplace_back(vals);
        return !first_only;
      });
  if (res.fault) {
    out.fault = res.fault;
    out.fault->message += " (in " + inst.str(sys) + ")";
    return out;
  }
  std::sort(out.states.begin(), out.states.end());
  out.states.erase(std::unique(out.states.begin(), out.states.end()),
                   out.states.end());
  return out;
}

TriResult fis(const TypedSystem& sys, const State& state,
              const EventInstance& inst, EnumBudget& budget) {
  SuccessorResult r = successors(sys, state, inst, budget, /*first_only=*/true);
  if (r.fault) return TriResult::fail(*r.fault);
  return TriResult::of(!r.states.empty());
}

TriResult eval_clause(const TypedSystem& sys, const ExprPtr& clause,
                      const State& state, const EventInstance& inst) {
  EvalEnv env(sys, state);
  env.args = inst.args;
  return eval_pred(*clause, env);
}

TriResult eval_state_pred(const TypedSystem& sys, const ExprPtr& pred,
                          const State& state) {
  EvalEnv env(sys, state);
  return eval_pred(*pred, env);
}

TriResult eval_ba(const TypedSystem& sys, const EventDecl& ev,
                  const State& state, const State& next,
                  std::span<const Value> args) {
  EvalEnv env(sys, state, next);
  env.args = args;
  return eval_pred(*ev.ba, env);
}

}  // namespace fescheck
