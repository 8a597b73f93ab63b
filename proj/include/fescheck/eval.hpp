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

#ifndef FESCHECK_EVAL_HPP
#define FESCHECK_EVAL_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fescheck/ast.hpp"
#include "fescheck/typecheck.hpp"
#include "fescheck/value.hpp"

namespace fescheck {

// Total valuation of the system variables, in declaration order.
class State {
 public:
  State() = default;
  explicit State(std::vector<Value> vals);

  const Value& at(int i) const { return vals_[static_cast<size_t>(i)]; }
  const std::vector<Value>& values() const { return vals_; }
  size_t size() const { return vals_.size(); }
  size_t hash() const { return hash_; }

  friend int compare(const State& a, const State& b);
  friend bool operator==(const State& a, const State& b) {
    return a.hash_ == b.hash_ && compare(a, b) == 0;
  }
  friend bool operator!=(const State& a, const State& b) { return !(a == b); }
  friend bool operator<(const State& a, const State& b) {
    return compare(a, b) < 0;
  }

  std::string str(const TypedSystem& sys) const;

 private:
  std::vector<Value> vals_;
  size_t hash_ = 0;
};

struct StateHash {
  size_t operator()(const State& s) const { return s.hash(); }
};

// Evaluation faults (partial function application, division by zero, ...)
// are surfaced, never coerced to false.
struct Fault {
  std::string message;
  SourceLoc loc;
};

struct EvalResult {
  std::optional<Value> value;
  std::optional<Fault> fault;
  static EvalResult ok(Value v) { return {std::move(v), std::nullopt}; }
  static EvalResult fail(Fault f) { return {std::nullopt, std::move(f)}; }
};

// Two-valued predicate result with an explicit fault channel.
struct TriResult {
  enum class V : uint8_t { True, False, Fault };
  V v = V::Fault;
  std::optional<Fault> fault;

  static TriResult yes() { return {V::True, std::nullopt}; }
  static TriResult no() { return {V::False, std::nullopt}; }
  static TriResult of(bool b) { return b ? yes() : no(); }
  static TriResult fail(Fault f) { return {V::Fault, std::move(f)}; }
  bool is_true() const { return v == V::True; }
  bool is_false() const { return v == V::False; }
  bool is_fault() const { return v == V::Fault; }
};

// Binding of constants, parameters, state variables and (optionally) primed
// variables for one evaluation.
struct EvalEnv {
  const TypedSystem* sys;
  const std::vector<Value>* state_vals = nullptr;
  const std::vector<Value>* next_vals = nullptr;
  std::span<const Value> args;
  std::vector<Value> binders;  // quantifier bindings, innermost at back

  explicit EvalEnv(const TypedSystem& s) : sys(&s) {}
  EvalEnv(const TypedSystem& s, const State& st)
      : sys(&s), state_vals(&st.values()) {}
  EvalEnv(const TypedSystem& s, const State& st, const State& nx)
      : sys(&s), state_vals(&st.values()), next_vals(&nx.values()) {}
};

EvalResult eval_expr(const Expr& e, EvalEnv& env);
TriResult eval_pred(const Expr& e, EvalEnv& env);

}  // namespace fescheck

#endif
