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

#ifndef FESCHECK_ENUMERATE_HPP
#define FESCHECK_ENUMERATE_HPP

#include <functional>

#include "fescheck/eval.hpp"
#include "fescheck/limits.hpp"
#include "fescheck/typecheck.hpp"

namespace fescheck {

// One assignment target in a constrained valuation search.
struct Slot {
  enum class Source : uint8_t {
    Carrier,  // all values of the variable's type carrier
    EvalSet,  // elements of rhs (a set expression)
    EvalOne,  // the single value of rhs
  };
  int var = -1;
  Source source = Source::Carrier;
  ExprPtr rhs;  // EvalSet / EvalOne
};

// Backtracking enumeration of valuations: slots are assigned in order, and
// every conjunct is evaluated at the earliest point all its target variables
// are assigned, pruning failing branches. `primed` selects whether slots
// fill the primed or the unprimed side of the environment. Candidates tried
// are charged to the budget. The first evaluation fault aborts enumeration
// and is reported; yield may return false to stop early.
struct ValuationProblem {
  std::vector<Slot> slots;
  std::vector<ExprPtr> conjuncts;
  bool primed = false;
};

struct EnumOutcome {
  std::optional<Fault> fault;
  bool stopped = false;  // yield requested an early stop
};

EnumOutcome enumerate_valuations(
    const TypedSystem& sys, const ValuationProblem& problem, EvalEnv& env,
    std::vector<Value>& work, EnumBudget& budget,
    const std::function<bool(const std::vector<Value>&)>& yield);

// Membership in the induced (bounds-restricted) carrier of a type.
bool value_in_carrier(const TypedSystem& sys, const Value& v, const Type& t);

}  // namespace fescheck

#endif
