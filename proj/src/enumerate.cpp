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

#include "fescheck/enumerate.hpp"

#include <algorithm>

namespace fescheck {

namespace {

// Collect the target-variable indices an expression reads (primed or
// unprimed occurrences, depending on mode).
void target_vars(const Expr& e, bool primed, std::vector<int>& out) {
  if (primed) {
    if (e.kind == ExprKind::Primed && e.ref_index >= 0)
      out.push_back(e.ref_index);
  } else {
    if (e.kind == ExprKind::Ident && e.ref == RefKind::Variable)
      out.push_back(e.ref_index);
  }
  for (const auto& k : e.kids) target_vars(*k, primed, out);
}

struct Search {
  const TypedSystem& sys;
  const ValuationProblem& problem;
  EvalEnv& env;
  std::vector<Value>& work;
  EnumBudget& budget;
  const std::function<bool(const std::vector<Value>&)>& yield;
  // scheduled[i]: conjuncts evaluable once slot i has been assigned
  std::vector<std::vector<const Expr*>> scheduled;
  EnumOutcome outcome;

  bool done() const { return outcome.fault || outcome.stopped; }

  // true = keep searching siblings, false = branch pruned or aborted
  bool passes(size_t slot_idx) {
    for (const Expr* c : scheduled[slot_idx]) {
      TriResult r = eval_pred(*c, env);
      if (r.is_fault()) {
        outcome.fault = r.fault;
        return false;
      }
      if (!r.is_true()) return false;
    }
    return true;
  }

  void go(size_t i) {
    if (done()) return;
    if (i == problem.slots.size()) {
      if (!yield(work)) outcome.stopped = true;
      return;
    }
    const Slot& slot = problem.slots[i];
    auto try_value = [&](const Value& v) {
      budget.charge(1, "valuation enumeration");
      work[slot.var] = v;
      if (passes(i)) go(i + 1);
    };
    switch (slot.source) {
      case Slot::Source::EvalOne: {
        EvalResult r = eval_expr(*slot.rhs, env);
        if (r.fault) {
          outcome.fault = r.fault;
          return;
        }
        try_value(*r.value);
        return;
      }
      case Slot::Source::EvalSet: {
        EvalResult r = eval_expr(*slot.rhs, env);
        if (r.fault) {
          outcome.fault = r.fault;
          return;
        }
        if (!r.value->is_set()) {
          outcome.fault =
              Fault{"membership bound is not a set", slot.rhs->loc};
          return;
        }
        for (const auto& v : r.value->elems()) {
          try_value(v);
          if (done()) return;
        }
        return;
      }
      case Slot::Source::Carrier: {
        const TypePtr& t = sys.spec.variables[slot.var].second;
        const auto& values = sys.carrier(t, budget);
        for (const auto& v : values) {
          try_value(v);
          if (done()) return;
        }
        return;
      }
    }
  }
};

}  // namespace

EnumOutcome enumerate_valuations(
    const TypedSystem& sys, const ValuationProblem& problem, EvalEnv& env,
    std::vector<Value>& work, EnumBudget& budget,
    const std::function<bool(const std::vector<Value>&)>& yield) {
  Search s{sys, problem, env, work, budget, yield, {}, {}};
  s.scheduled.resize(problem.slots.size());

  std::vector<int> slot_of(sys.spec.variables.size(), -1);
  for (size_t i = 0; i < problem.slots.size(); ++i)
    slot_of[problem.slots[i].var] = static_cast<int>(i);

  std::vector<const Expr*> prechecks;
  for (const auto& c : problem.conjuncts) {
    std::vector<int> vars;
    target_vars(*c, problem.primed, vars);
    int latest = -1;
    for (int v : vars) latest = std::max(latest, slot_of[v]);
    if (latest < 0)
      prechecks.push_back(c.get());
    else
      s.scheduled[static_cast<size_t>(latest)].push_back(c.get());
  }

  for (const Expr* c : prechecks) {
    TriResult r = eval_pred(*c, env);
    if (r.is_fault()) return {r.fault, false};
    if (!r.is_true()) return {};
  }
  s.go(0);
  return s.outcome;
}

bool value_in_carrier(const TypedSystem& sys, const Value& v, const Type& t) {
  switch (t.kind) {
    case TypeKind::Bool:
      return v.is_bool();
    case TypeKind::Rat: {
      if (!v.is_rat()) return false;
      const auto& d = sys.rat_domain;
      return std::binary_search(d.begin(), d.end(), v);
    }
    case TypeKind::Nat: {
      if (!v.is_rat()) return false;
      const auto& d = sys.nat_domain;
      return std::binary_search(d.begin(), d.end(), v);
    }
    case TypeKind::Atom: {
      if (!v.is_atom()) return false;
      auto it = sys.sorts.find(t.sort);
      if (it == sys.sorts.end()) return false;
      return std::binary_search(it->second.begin(), it->second.end(), v);
    }
    case TypeKind::Set: {
      if (!v.is_set()) return false;
      for (const auto& e : v.elems())
        if (!value_in_carrier(sys, e, *t.a)) return false;
      return true;
    }
    case TypeKind::Map: {
      if (!v.is_map()) return false;
      for (const auto& [k, val] : v.entries())
        if (!value_in_carrier(sys, k, *t.a) ||
            !value_in_carrier(sys, val, *t.b))
          return false;
      return true;
    }
    case TypeKind::Pair:
      return v.is_pair() && value_in_carrier(sys, v.first(), *t.a) &&
             value_in_carrier(sys, v.second(), *t.b);
  }
  return false;
}

}  // namespace fescheck
