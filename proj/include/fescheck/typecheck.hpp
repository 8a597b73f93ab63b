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

#ifndef FESCHECK_TYPECHECK_HPP
#define FESCHECK_TYPECHECK_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fescheck/ast.hpp"
#include "fescheck/limits.hpp"

namespace fescheck {

// Successor-computation strategy for one event, derived syntactically from
// its before-after predicate: prime-free conjuncts are guards; conjuncts of
// shape v' = expr or v' \in set-expr (expr prime-free, one per variable)
// define that variable directly; everything else is residual and is checked
// against enumerated candidates. Variables with no defining conjunct range
// over their full type carrier.
struct ActionPlan {
  std::vector<ExprPtr> guards;
  struct Def {
    int var = -1;
    bool member = false;  // v' \in rhs (else v' = rhs)
    ExprPtr rhs;
  };
  std::vector<Def> defs;          // ordered by variable index
  std::vector<int> open_vars;     // variables enumerated from their carrier
  std::vector<ExprPtr> residual;  // primed conjuncts of other shapes
  bool direct() const { return residual.empty() && open_vars.empty(); }
};

class TypedSystem;
using TypedSystemPtr = std::shared_ptr<const TypedSystem>;

// A typechecked, bounded system: every expression annotated with its type,
// identifiers resolved, constants valued, parameter instantiation domains
// materialized, and per-event successor plans prepared.
class TypedSystem {
 public:
  SystemSpec spec;    // private clone; annotations belong to this instance
  BoundsDecl bounds;

  std::map<std::string, std::vector<Value>> sorts;  // carrier per atom sort
  std::vector<Value> rat_domain;                    // sorted
  std::vector<Value> nat_domain;                    // rat_domain restricted
  std::vector<Value> const_values;                  // by constant index

  struct EventInfo {
    std::vector<std::vector<Value>> param_domains;
    uint64_t instance_count = 0;
  };
  std::vector<EventInfo> events;   // aligned with spec.events
  std::vector<ActionPlan> plans;   // aligned with spec.events

  int var_index(const std::string& name) const;
  int const_index(const std::string& name) const;
  int num_vars() const { return static_cast<int>(spec.variables.size()); }

  // Carrier of a type under the declared bounds, materialized on demand and
  // cached. Throws ExplosionError when the carrier exceeds the budget.
  const std::vector<Value>& carrier(const TypePtr& t, EnumBudget& budget) const;
  BigInt carrier_size(const TypePtr& t) const;

 private:
  mutable std::mutex cache_mu_;
  mutable std::map<std::string, std::vector<Value>> carrier_cache_;
};

struct TypecheckResult {
  TypedSystemPtr sys;
  std::vector<Diagnostic> diags;
  bool ok() const { return sys != nullptr && !has_errors(diags); }
};

TypecheckResult typecheck(const SystemSpec& spec, const BoundsDecl& bounds,
                          const Limits& limits);

// Structural membership of a value in a type's carrier-free reading (NAT
// additionally requires a nonnegative integer).
bool value_has_type(const TypedSystem& sys, const Value& v, const Type& t);

ExprPtr expr_clone(const ExprPtr& e);

}  // namespace fescheck

#endif
