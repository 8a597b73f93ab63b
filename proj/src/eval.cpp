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

#include "fescheck/eval.hpp"

#include <algorithm>

namespace fescheck {

State::State(std::vector<Value> vals) : vals_(std::move(vals)) {
  size_t h = 0x84222325cbf29ce4ULL;
  for (const auto& v : vals_)
    h ^= v.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  hash_ = h;
}

int compare(const State& a, const State& b) {
  size_t n = std::min(a.vals_.size(), b.vals_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = compare(a.vals_[i], b.vals_[i]);
    if (c != 0) return c;
  }
  if (a.vals_.size() != b.vals_.size())
    return a.vals_.size() < b.vals_.size() ? -1 : 1;
  return 0;
}

std::string State::str(const TypedSystem& sys) const {
  std::string s = "[";
  for (size_t i = 0; i < vals_.size(); ++i) {
    if (i > 0) s += ", ";
    s += sys.spec.variables[i].first + " = " + vals_[i].str();
  }
  return s + "]";
}

namespace {

EvalResult fault_at(const Expr& e, std::string msg) {
  return EvalResult::fail(Fault{std::move(msg), e.loc});
}

bool set_contains(const Value& set, const Value& v) {
  const auto& es = set.elems();
  auto it = std::lower_bound(es.begin(), es.end(), v);
  return it != es.end() && *it == v;
}

}  // namespace

EvalResult eval_expr(const Expr& e, EvalEnv& env) {
  switch (e.kind) {
    case ExprKind::BoolLit:
      return EvalResult::ok(Value::boolean(e.bval));
    case ExprKind::IntLit:
      return EvalResult::ok(Value::rat(Rational(e.num)));
    case ExprKind::Ident:
      switch (e.ref) {
        case RefKind::Constant:
          return EvalResult::ok(env.sys->const_values[e.ref_index]);
        case RefKind::Variable:
          if (!env.state_vals)
            return fault_at(e, "no state bound for variable '" + e.name + "'");
          return EvalResult::ok((*env.state_vals)[e.ref_index]);
        case RefKind::Param:
          if (e.ref_index >= static_cast<int>(env.args.size()))
            return fault_at(e, "no argument bound for parameter '" + e.name +
                                   "'");
          return EvalResult::ok(env.args[e.ref_index]);
        case RefKind::Binder: {
          size_t i = env.binders.size() - 1 - e.ref_index;
          return EvalResult::ok(env.binders[i]);
        }
        case RefKind::AtomLit:
          return EvalResult::ok(Value::atom(e.name));
        case RefKind::SortSet:
          return EvalResult::ok(Value::set(env.sys->sorts.at(e.name)));
        case RefKind::RatSet:
          return EvalResult::ok(Value::set(env.sys->rat_domain));
        case RefKind::NatSet:
          return EvalResult::ok(Value::set(env.sys->nat_domain));
        case RefKind::BoolSet:
          return EvalResult::ok(
              Value::set({Value::boolean(false), Value::boolean(true)}));
        default:
          return fault_at(e, "unresolved identifier '" + e.name + "'");
      }
    case ExprKind::Primed:
      if (!env.next_vals)
        return fault_at(e, "no next state bound for '" + e.name + "''");
      return EvalResult::ok((*env.next_vals)[e.ref_index]);
    case ExprKind::Not: {
      EvalResult a = eval_expr(*e.kids[0], env);
      if (a.fault) return a;
      return EvalResult::ok(Value::boolean(!a.value->as_bool()));
    }
    case ExprKind::And:
    case ExprKind::Or:
    case ExprKind::Implies: {
      EvalResult a = eval_expr(*e.kids[0], env);
      if (a.fault) return a;
      bool av = a.value->as_bool();
      if (e.kind == ExprKind::And && !av)
        return EvalResult::ok(Value::boolean(false));
      if (e.kind == ExprKind::Or && av)
        return EvalResult::ok(Value::boolean(true));
      if (e.kind == ExprKind::Implies && !av)
        return EvalResult::ok(Value::boolean(true));
      return eval_expr(*e.kids[1], env);
    }
    case ExprKind::Eq:
    case ExprKind::Ne: {
      EvalResult a = eval_expr(*e.kids[0], env);
      if (a.fault) return a;
      EvalResult b = eval_expr(*e.kids[1], env);
      if (b.fault) return b;
      bool eq = *a.value == *b.value;
      return EvalResult::ok(Value::boolean(e.kind == ExprKind::Eq ? eq : !eq));
    }
    case ExprKind::Lt:
    case ExprKind::Le:
    case ExprKind::Gt:
    case ExprKind::Ge: {
      EvalResult a = eval_expr(*e.kids[0], env);
      if (a.fault) return a;
      EvalResult b = eval_expr(*e.kids[1], env);
      if (b.fault) return b;
      const Rational& x = a.value->as_rat();
      const Rational& y = b.value->as_rat();
      bool r = e.kind == ExprKind::Lt   ? x < y
               : e.kind == ExprKind::Le ? x <= y
               : e.kind == ExprKind::Gt ? x > y
                                        : x >= y;
      return EvalResult::ok(Value::boolean(r));
    }
    case ExprKind::InSet:
    case ExprKind::NotInSet: {
      EvalResult a = eval_expr(*e.kids[0], env);
      if (a.fault) return a;
      EvalResult b = eval_expr(*e.kids[1], env);
      if (b.fault) return b;
      bool in = set_contains(*b.value, *a.value);
      return EvalResult::ok(
          Value::boolean(e.kind == ExprKind::InSet ? in : !in));
    }
    case ExprKind::Subseteq: {
      EvalResult a = eval_expr(*e.kids[0], env);
      if (a.fault) return a;
      EvalResult b = eval_expr(*e.kids[1], env);
      if (b.fault) return b;
      for (const auto& x : a.value->elems())
        if (!set_contains(*b.value, x))
          return EvalResult::ok(Value::boolean(false));
      return EvalResult::ok(Value::boolean(true));
    }
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div: {
      EvalResult a = eval_expr(*e.kids[0], env);
      if (a.fault) return a;
      EvalResult b = eval_expr(*e.kids[1], env);
      if (b.fault) return b;
      const Rational& x = a.value->as_rat();
      const Rational& y = b.value->as_rat();
      switch (e.kind) {
        case ExprKind::Add:
          return EvalResult::ok(Value::rat(x + y));
        case ExprKind::Sub:
          return EvalResult::ok(Value::rat(x - y));
        case ExprKind::Mul:
          return EvalResult::ok(Value::rat(x * y));
        default:
          if (y == 0) return fault_at(e, "division by zero");
          return EvalResult::ok(Value::rat(x / y));
      }
    }
    case ExprKind::Neg: {
      EvalResult a = eval_expr(*e.kids[0], env);
      if (a.fault) return a;
      return EvalResult::ok(Value::rat(-a.value->as_rat()));
    }
    case ExprKind::Union: {
      EvalResult a = eval_expr(*e.kids[0], env);
      if (a.fault) return a;
      EvalResult b = eval_expr(*e.kids[1], env);
      if (b.fault) return b;
      if (a.value->is_set()) {
        std::vector<Value> elems = a.value->elems();
        elems.insert(elems.end(), b.value->elems().begin(),
                     b.value->elems().end());
        return EvalResult::ok(Value::set(std::move(elems)));
      }
      std::vector<std::pair<Value, Value>> entries = a.value->entries();
      entries.insert(entries.end(), b.value->entries().begin(),
                     b.value->entries().end());
      auto m = Value::map(std::move(entries));
      if (!m)
        return fault_at(e, "map union joins conflicting values for a key");
      return EvalResult::ok(*m);
    }
    case ExprKind::SetMinus: {
      EvalResult a = eval_expr(*e.kids[0], env);
      if (a.fault) return a;
      EvalResult b = eval_expr(*e.kids[1], env);
      if (b.fault) return b;
      std::vector<Value> elems;
      for (const auto& x : a.value->elems())
        if (!set_contains(*b.value, x)) elems.push_back(x);
      return EvalResult::ok(Value::set(std::move(elems)));
    }
    case ExprKind::Cross: {
      EvalResult a = eval_expr(*e.kids[0], env);
      if (a.fault) return a;
      EvalResult b = eval_expr(*e.kids[1], env);
      if (b.fault) return b;
      std::vector<Value> elems;
      for (const auto& x : a.value->elems())
        for (const auto& y : b.value->elems())
          elems.push_back(Value::pair(x, y));
      return EvalResult::ok(Value::set(std::move(elems)));
    }
    case ExprKind::Override: {
      EvalResult a = eval_expr(*e.kids[0], env);
      if (a.fault) return a;
      EvalResult b = eval_expr(*e.kids[1], env);
      if (b.fault) return b;
      std::vector<std::pair<Value, Value>> entries;
      for (const auto& [k, v] : a.value->entries()) {
        if (!b.value->apply(k)) entries.emplace_back(k, v);
      }
      for (const auto& [k, v] : b.value->entries()) entries.emplace_back(k, v);
      return EvalResult::ok(*Value::map(std::move(entries)));
    }
    case ExprKind::Maplet: {
      EvalResult a = eval_expr(*e.kids[0], env);
      if (a.fault) return a;
      EvalResult b = eval_expr(*e.kids[1], env);
      if (b.fault) return b;
      return EvalResult::ok(Value::pair(*a.value, *b.value));
    }
    case ExprKind::Tuple: {
      std::vector<Value> vs;
      for (const auto& k : e.kids) {
        EvalResult r = eval_expr(*k, env);
        if (r.fault) return r;
        vs.push_back(*r.value);
      }
      Value v = vs.back();
      for (size_t i = vs.size() - 1; i-- > 0;) v = Value::pair(vs[i], v);
      return EvalResult::ok(v);
    }
    case ExprKind::SetLit: {
      if (e.type && e.type->kind == TypeKind::Map) {
        std::vector<std::pair<Value, Value>> entries;
        for (const auto& kid : e.kids) {
          EvalResult k = eval_expr(*kid->kids[0], env);
          if (k.fault) return k;
          EvalResult v = eval_expr(*kid->kids[1], env);
          if (v.fault) return v;
          entries.emplace_back(*k.value, *v.value);
        }
        auto m = Value::map(std::move(entries));
        if (!m)
          return fault_at(e, "map literal repeats a key with different values");
        return EvalResult::ok(*m);
      }
      std::vector<Value> elems;
      for (const auto& kid : e.kids) {
        EvalResult r = eval_expr(*kid, env);
        if (r.fault) return r;
        elems.push_back(*r.value);
      }
      return EvalResult::ok(Value::set(std::move(elems)));
    }
    case ExprKind::Apply: {
      EvalResult f = eval_expr(*e.kids[0], env);
      if (f.fault) return f;
      std::vector<Value> as;
      for (size_t i = 1; i < e.kids.size(); ++i) {
        EvalResult r = eval_expr(*e.kids[i], env);
        if (r.fault) return r;
        as.push_back(*r.value);
      }
      Value key = as.back();
      for (size_t i = as.size() - 1; i-- > 0;) key = Value::pair(as[i], key);
      auto v = f.value->apply(key);
      if (!v)
        return fault_at(e, "application outside domain: argument " +
                               key.str());
      return EvalResult::ok(*v);
    }
    case ExprKind::Dom: {
      EvalResult m = eval_expr(*e.kids[0], env);
      if (m.fault) return m;
      std::vector<Value> keys;
      for (const auto& [k, v] : m.value->entries()) {
        (void)v;
        keys.push_back(k);
      }
      return EvalResult::ok(Value::set(std::move(keys)));
    }
    case ExprKind::Sum: {
      EvalResult dom = eval_expr(*e.kids[0], env);
      if (dom.fault) return dom;
      Rational total = 0;
      for (const auto& x : dom.value->elems()) {
        env.binders.push_back(x);
        if (e.kids.size() > 2) {
          EvalResult c = eval_expr(*e.kids[2], env);
          if (c.fault) {
            env.binders.pop_back();
            return c;
          }
          if (!c.value->as_bool()) {
            env.binders.pop_back();
            continue;
          }
        }
        EvalResult b = eval_expr(*e.kids[1], env);
        env.binders.pop_back();
        if (b.fault) return b;
        total += b.value->as_rat();
      }
      return EvalResult::ok(Value::rat(total));
    }
    case ExprKind::Forall:
    case ExprKind::Exists: {
      EvalResult dom = eval_expr(*e.kids[0], env);
      if (dom.fault) return dom;
      bool is_forall = e.kind == ExprKind::Forall;
      for (const auto& x : dom.value->elems()) {
        env.binders.push_back(x);
        EvalResult b = eval_expr(*e.kids[1], env);
        env.binders.pop_back();
        if (b.fault) return b;
        if (is_forall && !b.value->as_bool())
          return EvalResult::ok(Value::boolean(false));
        if (!is_forall && b.value->as_bool())
          return EvalResult::ok(Value::boolean(true));
      }
      return EvalResult::ok(Value::boolean(is_forall));
    }
  }
  return fault_at(e, "unevaluable expression");
}

TriResult eval_pred(const Expr& e, EvalEnv& env) {
  EvalResult r = eval_expr(e, env);
  if (r.fault) return TriResult::fail(*r.fault);
  if (!r.value->is_bool())
    return TriResult::fail(
        Fault{"predicate evaluated to a non-boolean value", e.loc});
  return TriResult::of(r.value->as_bool());
}

}  // namespace fescheck
