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

#include "fescheck/typecheck.hpp"

#include <algorithm>

#include "fescheck/eval.hpp"

namespace fescheck {

int TypedSystem::var_index(const std::string& name) const {
  for (size_t i = 0; i < spec.variables.size(); ++i)
    if (spec.variables[i].first == name) return static_cast<int>(i);
  return -1;
}

int TypedSystem::const_index(const std::string& name) const {
  for (size_t i = 0; i < spec.constants.size(); ++i)
    if (spec.constants[i].first == name) return static_cast<int>(i);
  return -1;
}

BigInt TypedSystem::carrier_size(const TypePtr& t) const {
  switch (t->kind) {
    case TypeKind::Bool:
      return 2;
    case TypeKind::Rat:
      return static_cast<long>(rat_domain.size());
    case TypeKind::Nat:
      return static_cast<long>(nat_domain.size());
    case TypeKind::Atom: {
      auto it = sorts.find(t->sort);
      return it == sorts.end() ? BigInt(0)
                               : BigInt(static_cast<long>(it->second.size()));
    }
    case TypeKind::Set: {
      BigInt n = carrier_size(t->a);
      if (n > 64) return BigInt(1) << 64;  // plainly over any sane limit
      return BigInt(1) << static_cast<unsigned>(n);
    }
    case TypeKind::Map: {
      BigInt k = carrier_size(t->a), v = carrier_size(t->b);
      BigInt total = 1;
      for (BigInt i = 0; i < k; ++i) {
        total *= (v + 1);
        if (total > BigInt(1) << 64) return total;
      }
      return total;
    }
    case TypeKind::Pair:
      return carrier_size(t->a) * carrier_size(t->b);
  }
  return 0;
}

const std::vector<Value>& TypedSystem::carrier(const TypePtr& t,
                                               EnumBudget& budget) const {
  std::string key = t->str();
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = carrier_cache_.find(key);
    if (it != carrier_cache_.end()) return it->second;
  }
  BigInt size = carrier_size(t);
  if (size > budget.limit - std::min<uint64_t>(budget.used, budget.limit))
    throw ExplosionError("carrier of " + key + " has " + size.str() +
                         " values; refusing to enumerate");
  budget.charge(static_cast<uint64_t>(size), "carrier materialization");

  std::vector<Value> out;
  switch (t->kind) {
    case TypeKind::Bool:
      out = {Value::boolean(false), Value::boolean(true)};
      break;
    case TypeKind::Rat:
      out = rat_domain;
      break;
    case TypeKind::Nat:
      out = nat_domain;
      break;
    case TypeKind::Atom: {
      auto it = sorts.find(t->sort);
      if (it != sorts.end()) out = it->second;
      break;
    }
    case TypeKind::Set: {
      const auto& base = carrier(t->a, budget);
      size_t n = base.size();
      for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        std::vector<Value> elems;
        for (size_t i = 0; i < n; ++i)
          if (mask & (uint64_t{1} << i)) elems.push_back(base[i]);
        out.push_back(Value::set(std::move(elems)));
      }
      break;
    }
    case TypeKind::Map: {
      const auto& keys = carrier(t->a, budget);
      const auto& vals = carrier(t->b, budget);
      // mixed-radix counter: digit 0 = absent, 1..|vals| = that value
      std::vector<size_t> digit(keys.size(), 0);
      for (;;) {
        std::vector<std::pair<Value, Value>> entries;
        for (size_t i = 0; i < keys.size(); ++i)
          if (digit[i] > 0) entries.emplace_back(keys[i], vals[digit[i] - 1]);
        out.push_back(*Value::map(std::move(entries)));
        size_t i = 0;
        while (i < keys.size() && digit[i] == vals.size()) digit[i++] = 0;
        if (i == keys.size()) break;
        ++digit[i];
      }
      break;
    }
    case TypeKind::Pair: {
      const auto& xs = carrier(t->a, budget);
      const auto& ys = carrier(t->b, budget);
      for (const auto& x : xs)
        for (const auto& y : ys) out.push_back(Value::pair(x, y));
      break;
    }
  }
  std::sort(out.begin(), out.end());
  std::lock_guard<std::mutex> lock(cache_mu_);
  return carrier_cache_.emplace(std::move(key), std::move(out)).first->second;
}

ExprPtr expr_clone(const ExprPtr& e) {
  if (!e) return nullptr;
  auto c = std::make_shared<Expr>();
  c->kind = e->kind;
  c->loc = e->loc;
  c->bval = e->bval;
  c->num = e->num;
  c->name = e->name;
  for (const auto& k : e->kids) c->kids.push_back(expr_clone(k));
  return c;
}

namespace {

SystemSpec clone_spec(const SystemSpec& s) {
  SystemSpec c = s;  // copies decl lists; now detach the expressions
  c.assumption = expr_clone(s.assumption);
  c.invariant = expr_clone(s.invariant);
  c.initial = expr_clone(s.initial);
  for (size_t i = 0; i < s.events.size(); ++i) {
    c.events[i].ba = expr_clone(s.events[i].ba);
    c.events[i].fairness = expr_clone(s.events[i].fairness);
    c.events[i].permission = expr_clone(s.events[i].permission);
    c.events[i].prohibition = expr_clone(s.events[i].prohibition);
    c.events[i].right = expr_clone(s.events[i].right);
    c.events[i].obligation = expr_clone(s.events[i].obligation);
  }
  return c;
}

class Checker {
 public:
  Checker(TypedSystem& sys, const Limits& limits)
      : sys_(sys), limits_(limits) {}

  std::vector<Diagnostic> diags;

  void error(SourceLoc loc, std::string msg) {
    diags.push_back({Diagnostic::Severity::Error, sys_.spec.name, loc,
                     std::move(msg)});
  }
  void warn(SourceLoc loc, std::string msg) {
    diags.push_back({Diagnostic::Severity::Warning, sys_.spec.name, loc,
                     std::move(msg)});
  }

  // ----------------------------------------------------------- carriers

  bool type_is_bounded(const TypePtr& t, SourceLoc loc) {
    switch (t->kind) {
      case TypeKind::Bool:
        return true;
      case TypeKind::Rat:
      case TypeKind::Nat:
        if (sys_.rat_domain.empty()) {
          error(loc, "unbounded carrier RAT (declare a rational domain in "
                     "the bounds file)");
          return false;
        }
        return true;
      case TypeKind::Atom:
        if (!sys_.sorts.count(t->sort)) {
          error(loc, "unbounded carrier " + t->sort +
                         " (declare 'atoms " + t->sort +
                         " = {...}' in the bounds file)");
          return false;
        }
        return true;
      case TypeKind::Set:
        return type_is_bounded(t->a, loc);
      case TypeKind::Map:
      case TypeKind::Pair:
        return type_is_bounded(t->a, loc) && type_is_bounded(t->b, loc);
    }
    return false;
  }

  // -------------------------------------------------- expression checking

  struct Ctx {
    const EventDecl* event = nullptr;  // params in scope
    bool allow_vars = true;
    bool allow_primed = false;
    std::vector<std::pair<std::string, TypePtr>> binders;  // innermost last
  };

  TypePtr resolve_ident(const Expr& e, Ctx& ctx) {
    // binders, innermost first
    for (int i = static_cast<int>(ctx.binders.size()) - 1; i >= 0; --i) {
      if (ctx.binders[i].first == e.name) {
        e.ref = RefKind::Binder;
        e.ref_index = static_cast<int>(ctx.binders.size()) - 1 - i;
        return ctx.binders[i].second;
      }
    }
    if (ctx.event) {
      for (size_t i = 0; i < ctx.event->params.size(); ++i) {
        if (ctx.event->params[i].first == e.name) {
          e.ref = RefKind::Param;
          e.ref_index = static_cast<int>(i);
          return ctx.event->params[i].second;
        }
      }
    }
    if (ctx.allow_vars) {
      int vi = sys_.var_index(e.name);
      if (vi >= 0) {
        e.ref = RefKind::Variable;
        e.ref_index = vi;
        return sys_.spec.variables[vi].second;
      }
    }
    int ci = sys_.const_index(e.name);
    if (ci >= 0) {
      e.ref = RefKind::Constant;
      e.ref_index = ci;
      return sys_.spec.constants[ci].second;
    }
    // atom literal?
    const std::string* owner = nullptr;
    for (const auto& [sort, lits] : sys_.bounds.atom_sets) {
      if (std::find(lits.begin(), lits.end(), e.name) != lits.end()) {
        if (owner) {
          error(e.loc, "atom '" + e.name + "' belongs to several sorts ('" +
                           *owner + "', '" + sort + "')");
          break;
        }
        owner = &sort;
      }
    }
    if (owner) {
      e.ref = RefKind::AtomLit;
      return Type::atom(*owner);
    }
    if (sys_.sorts.count(e.name)) {
      e.ref = RefKind::SortSet;
      return Type::set(Type::atom(e.name));
    }
    if (e.name == "RAT") {
      e.ref = RefKind::RatSet;
      return Type::set(Type::rat());
    }
    if (e.name == "NAT") {
      e.ref = RefKind::NatSet;
      return Type::set(Type::nat());
    }
    if (e.name == "BOOL") {
      e.ref = RefKind::BoolSet;
      return Type::set(Type::boolean());
    }
    error(e.loc, "unresolved identifier '" + e.name + "'");
    return nullptr;
  }

  bool is_rat_like(const TypePtr& t) {
    return t && (t->kind == TypeKind::Rat || t->kind == TypeKind::Nat);
  }

  // Returns the (possibly expected) type, annotating e; nullptr on failure.
  TypePtr check(const ExprPtr& ep, TypePtr expected, Ctx& ctx) {
    Expr& e = *ep;
    TypePtr t = infer(ep, expected, ctx);
    if (t && expected && !Type::same(t, expected)) {
      error(e.loc, "type mismatch: expected " + expected->str() + ", found " +
                       t->str());
      t = expected;
    }
    e.type = t ? t : (expected ? expected : Type::boolean());
    return t;
  }

  TypePtr infer(const ExprPtr& ep, TypePtr expected, Ctx& ctx) {
    Expr& e = *ep;
    switch (e.kind) {
      case ExprKind::BoolLit:
        return Type::boolean();
      case ExprKind::IntLit:
        return Type::rat();
      case ExprKind::Ident:
        return resolve_ident(e, ctx);
      case ExprKind::Primed: {
        if (!ctx.allow_primed) {
          error(e.loc, "primed variable '" + e.name +
                           "' in non-action context");
          return nullptr;
        }
        int vi = sys_.var_index(e.name);
        if (vi < 0) {
          error(e.loc, "unresolved primed variable '" + e.name + "'");
          return nullptr;
        }
        e.ref = RefKind::Variable;
        e.ref_index = vi;
        return sys_.spec.variables[vi].second;
      }
      case ExprKind::Not:
        check(e.kids[0], Type::boolean(), ctx);
        return Type::boolean();
      case ExprKind::And:
      case ExprKind::Or:
      case ExprKind::Implies:
        check(e.kids[0], Type::boolean(), ctx);
        check(e.kids[1], Type::boolean(), ctx);
        return Type::boolean();
      case ExprKind::Eq:
      case ExprKind::Ne: {
        // prefer synthesizing from the side that is not a bare brace literal
        const ExprPtr& a = e.kids[0];
        const ExprPtr& b = e.kids[1];
        bool a_lit = a->kind == ExprKind::SetLit;
        TypePtr ta = a_lit ? nullptr : check(a, nullptr, ctx);
        if (ta) {
          check(b, ta, ctx);
        } else {
          TypePtr tb = check(b, nullptr, ctx);
          if (tb) check(a, tb, ctx);
        }
        return Type::boolean();
      }
      case ExprKind::Lt:
      case ExprKind::Le:
      case ExprKind::Gt:
      case ExprKind::Ge: {
        TypePtr ta = check(e.kids[0], nullptr, ctx);
        if (ta && !is_rat_like(ta))
          error(e.kids[0]->loc,
                "ordering requires rational operands, found " + ta->str());
        check(e.kids[1], Type::rat(), ctx);
        return Type::boolean();
      }
      case ExprKind::InSet:
      case ExprKind::NotInSet: {
        TypePtr ts = check(e.kids[1], nullptr, ctx);
        if (ts) {
          if (ts->kind != TypeKind::Set) {
            error(e.kids[1]->loc, "membership requires a set, found " +
                                      ts->str());
            return Type::boolean();
          }
          check(e.kids[0], ts->a, ctx);
        } else {
          TypePtr ta = check(e.kids[0], nullptr, ctx);
          if (ta) check(e.kids[1], Type::set(ta), ctx);
        }
        return Type::boolean();
      }
      case ExprKind::Subseteq: {
        TypePtr tb = check(e.kids[1], nullptr, ctx);
        if (tb && tb->kind == TypeKind::Set) {
          check(e.kids[0], tb, ctx);
        } else if (tb) {
          error(e.kids[1]->loc,
                "subset requires set operands, found " + tb->str());
        } else {
          TypePtr ta = check(e.kids[0], nullptr, ctx);
          if (ta) check(e.kids[1], ta, ctx);
        }
        return Type::boolean();
      }
      case ExprKind::Add:
      case ExprKind::Sub:
      case ExprKind::Mul:
      case ExprKind::Div: {
        TypePtr ta = check(e.kids[0], nullptr, ctx);
        if (ta && !is_rat_like(ta))
          error(e.kids[0]->loc,
                "arithmetic requires rational operands, found " + ta->str());
        check(e.kids[1], Type::rat(), ctx);
        return Type::rat();
      }
      case ExprKind::Neg:
        check(e.kids[0], Type::rat(), ctx);
        return Type::rat();
      case ExprKind::Union: {
        TypePtr ta = e.kids[0]->kind == ExprKind::SetLit && !expected
                         ? nullptr
                         : check(e.kids[0], expected, ctx);
        if (!ta) {
          TypePtr tb = check(e.kids[1], nullptr, ctx);
          if (tb) ta = check(e.kids[0], tb, ctx);
          if (!tb) return nullptr;
          ta = tb;
        } else {
          check(e.kids[1], ta, ctx);
        }
        if (ta && ta->kind != TypeKind::Set && ta->kind != TypeKind::Map)
          error(e.loc, "union requires sets or maps, found " + ta->str());
        return ta;
      }
      case ExprKind::SetMinus: {
        TypePtr ta = check(e.kids[0], expected, ctx);
        if (!ta) return nullptr;
        if (ta->kind != TypeKind::Set)
          error(e.loc, "set difference requires sets, found " + ta->str());
        check(e.kids[1], ta, ctx);
        return ta;
      }
      case ExprKind::Cross: {
        TypePtr ta = check(e.kids[0], nullptr, ctx);
        TypePtr tb = check(e.kids[1], nullptr, ctx);
        if (!ta || !tb) return nullptr;
        if (ta->kind != TypeKind::Set || tb->kind != TypeKind::Set) {
          error(e.loc, "cartesian product requires sets");
          return nullptr;
        }
        return Type::set(Type::pair(ta->a, tb->a));
      }
      case ExprKind::Override: {
        TypePtr ta = check(e.kids[0], expected, ctx);
        if (!ta) return nullptr;
        if (ta->kind != TypeKind::Map)
          error(e.loc, "override requires maps, found " + ta->str());
        check(e.kids[1], ta, ctx);
        return ta;
      }
      case ExprKind::Maplet: {
        if (expected && expected->kind == TypeKind::Pair) {
          check(e.kids[0], expected->a, ctx);
          check(e.kids[1], expected->b, ctx);
          return expected;
        }
        TypePtr ta = check(e.kids[0], nullptr, ctx);
        TypePtr tb = check(e.kids[1], nullptr, ctx);
        if (!ta || !tb) return nullptr;
        return Type::pair(ta, tb);
      }
      case ExprKind::Tuple: {
        // (a, b, c) is a right-nested pair
        if (expected) {
          TypePtr t = expected;
          for (size_t i = 0; i + 1 < e.kids.size(); ++i) {
            if (t->kind != TypeKind::Pair) {
              error(e.loc, "tuple does not match expected type " +
                               expected->str());
              return nullptr;
            }
            check(e.kids[i], t->a, ctx);
            t = t->b;
          }
          check(e.kids.back(), t, ctx);
          return expected;
        }
        TypePtr t = check(e.kids.back(), nullptr, ctx);
        for (size_t i = e.kids.size() - 1; i-- > 0;) {
          TypePtr ta = check(e.kids[i], nullptr, ctx);
          if (!ta || !t) return nullptr;
          t = Type::pair(ta, t);
        }
        return t;
      }
      case ExprKind::SetLit: {
        if (expected && expected->kind == TypeKind::Map) {
          for (const auto& kid : e.kids) {
            if (kid->kind != ExprKind::Maplet) {
              error(kid->loc, "map literal entries must be maplets");
              kid->type = expected;
              continue;
            }
            check(kid->kids[0], expected->a, ctx);
            check(kid->kids[1], expected->b, ctx);
            kid->type = Type::pair(expected->a, expected->b);
          }
          return expected;
        }
        if (expected && expected->kind == TypeKind::Set) {
          for (const auto& kid : e.kids) check(kid, expected->a, ctx);
          return expected;
        }
        if (e.kids.empty()) {
          if (!expected)
            error(e.loc, "cannot infer the type of an empty {} literal here");
          return expected;
        }
        bool all_maplets = std::all_of(
            e.kids.begin(), e.kids.end(),
            [](const ExprPtr& k) { return k->kind == ExprKind::Maplet; });
        if (all_maplets) {
          TypePtr tk = check(e.kids[0]->kids[0], nullptr, ctx);
          TypePtr tv = check(e.kids[0]->kids[1], nullptr, ctx);
          if (!tk || !tv) return nullptr;
          TypePtr m = Type::map(tk, tv);
          // re-check all entries against the inferred map type
          return check(ep, m, ctx) ? m : nullptr;
        }
        TypePtr te = check(e.kids[0], nullptr, ctx);
        if (!te) return nullptr;
        TypePtr s = Type::set(te);
        for (size_t i = 1; i < e.kids.size(); ++i) check(e.kids[i], te, ctx);
        return s;
      }
      case ExprKind::Apply: {
        TypePtr tf = check(e.kids[0], nullptr, ctx);
        if (!tf) return nullptr;
        if (tf->kind != TypeKind::Map) {
          error(e.loc, "application requires a map, found " + tf->str());
          return nullptr;
        }
        // multi-argument application targets right-nested pair keys
        TypePtr key = tf->a;
        size_t nargs = e.kids.size() - 1;
        for (size_t i = 0; i + 1 < nargs; ++i) {
          if (key->kind != TypeKind::Pair) {
            error(e.loc, "too many arguments for key type " + tf->a->str());
            return nullptr;
          }
          check(e.kids[1 + i], key->a, ctx);
          key = key->b;
        }
        if (nargs > 0) check(e.kids[nargs], key, ctx);
        return tf->b;
      }
      case ExprKind::Dom: {
        TypePtr tm = check(e.kids[0], nullptr, ctx);
        if (!tm) return nullptr;
        if (tm->kind != TypeKind::Map) {
          error(e.loc, "dom requires a map, found " + tm->str());
          return nullptr;
        }
        return Type::set(tm->a);
      }
      case ExprKind::Sum: {
        TypePtr td = check(e.kids[0], nullptr, ctx);
        TypePtr elem = td && td->kind == TypeKind::Set ? td->a : nullptr;
        if (td && !elem)
          error(e.kids[0]->loc, "SUM binder domain must be a set");
        ctx.binders.emplace_back(e.name, elem ? elem : Type::boolean());
        check(e.kids[1], Type::rat(), ctx);
        if (e.kids.size() > 2) check(e.kids[2], Type::boolean(), ctx);
        ctx.binders.pop_back();
        return Type::rat();
      }
      case ExprKind::Forall:
      case ExprKind::Exists: {
        TypePtr td = check(e.kids[0], nullptr, ctx);
        TypePtr elem = td && td->kind == TypeKind::Set ? td->a : nullptr;
        if (td && !elem)
          error(e.kids[0]->loc, "quantifier domain must be a set");
        ctx.binders.emplace_back(e.name, elem ? elem : Type::boolean());
        check(e.kids[1], Type::boolean(), ctx);
        ctx.binders.pop_back();
        return Type::boolean();
      }
    }
    return nullptr;
  }

  // ------------------------------------------------------------ plans

  void collect_conjuncts(const ExprPtr& e, std::vector<ExprPtr>& out) {
    if (e->kind == ExprKind::And) {
      collect_conjuncts(e->kids[0], out);
      collect_conjuncts(e->kids[1], out);
    } else {
      out.push_back(e);
    }
  }

  ActionPlan build_plan(const EventDecl& ev) {
    ActionPlan plan;
    std::vector<ExprPtr> conjuncts;
    collect_conjuncts(ev.ba, conjuncts);
    std::vector<bool> defined(sys_.spec.variables.size(), false);
    for (const auto& c : conjuncts) {
      if (!mentions_primed(*c)) {
        plan.guards.push_back(c);
        continue;
      }
      bool matched = false;
      if ((c->kind == ExprKind::Eq || c->kind == ExprKind::InSet) &&
          c->kids[0]->kind == ExprKind::Primed &&
          !mentions_primed(*c->kids[1])) {
        int vi = c->kids[0]->ref_index;
        if (vi >= 0 && !defined[vi]) {
          defined[vi] = true;
          plan.defs.push_back(
              {vi, c->kind == ExprKind::InSet, c->kids[1]});
          matched = true;
        }
      }
      if (!matched) plan.residual.push_back(c);
    }
    std::sort(plan.defs.begin(), plan.defs.end(),
              [](const auto& a, const auto& b) { return a.var < b.var; });
    for (size_t i = 0; i < defined.size(); ++i)
      if (!defined[i]) plan.open_vars.push_back(static_cast<int>(i));
    return plan;
  }

  const Limits& limits() const { return limits_; }

 private:
  TypedSystem& sys_;
  const Limits& limits_;
};

}  // namespace

bool value_has_type(const TypedSystem& sys, const Value& v, const Type& t) {
  switch (t.kind) {
    case TypeKind::Bool:
      return v.is_bool();
    case TypeKind::Rat:
      return v.is_rat();
    case TypeKind::Nat:
      return v.is_rat() && denominator(v.as_rat()) == 1 && v.as_rat() >= 0;
    case TypeKind::Atom: {
      if (!v.is_atom()) return false;
      auto it = sys.sorts.find(t.sort);
      if (it == sys.sorts.end()) return false;
      for (const auto& a : it->second)
        if (a == v) return true;
      return false;
    }
    case TypeKind::Set: {
      if (!v.is_set()) return false;
      for (const auto& e : v.elems())
        if (!value_has_type(sys, e, *t.a)) return false;
      return true;
    }
    case TypeKind::Map: {
      if (!v.is_map()) return false;
      for (const auto& [k, val] : v.entries())
        if (!value_has_type(sys, k, *t.a) || !value_has_type(sys, val, *t.b))
          return false;
      return true;
    }
    case TypeKind::Pair:
      return v.is_pair() && value_has_type(sys, v.first(), *t.a) &&
             value_has_type(sys, v.second(), *t.b);
  }
  return false;
}

TypecheckResult typecheck(const SystemSpec& spec, const BoundsDecl& bounds,
                          const Limits& limits) {
  auto sys = std::make_shared<TypedSystem>();
  sys->spec = clone_spec(spec);
  sys->bounds = bounds;

  Checker ck(*sys, limits);

  // sorts and domains
  for (const auto& [sort, lits] : bounds.atom_sets) {
    std::vector<Value> vs;
    for (const auto& a : lits) vs.push_back(Value::atom(a));
    std::sort(vs.begin(), vs.end());
    sys->sorts.emplace(sort, std::move(vs));
  }
  for (const auto& r : bounds.rat_domain) sys->rat_domain.push_back(Value::rat(r));
  std::sort(sys->rat_domain.begin(), sys->rat_domain.end());
  for (const auto& v : sys->rat_domain)
    if (denominator(v.as_rat()) == 1 && v.as_rat() >= 0)
      sys->nat_domain.push_back(v);

  // declared types must be bounded
  for (const auto& [n, t] : sys->spec.variables) {
    (void)n;
    ck.type_is_bounded(t, spec.loc);
  }
  for (const auto& ev : sys->spec.events)
    for (const auto& [n, t] : ev.params) {
      (void)n;
      ck.type_is_bounded(t, ev.loc);
    }

  // constant values: from bounds, or the full carrier for a constant that
  // names its own atom sort (Fig-style carrier constants)
  sys->const_values.resize(sys->spec.constants.size());
  {
    Checker::Ctx cctx;
    cctx.allow_vars = false;
    for (size_t i = 0; i < sys->spec.constants.size(); ++i) {
      const auto& [name, ctype] = sys->spec.constants[i];
      const ExprPtr* bound_expr = nullptr;
      for (const auto& [n, e] : bounds.constants)
        if (n == name) bound_expr = &e;
      if (!bound_expr) {
        if (ctype->kind == TypeKind::Set && ctype->a->kind == TypeKind::Atom &&
            ctype->a->sort == name && sys->sorts.count(name)) {
          sys->const_values[i] = Value::set(sys->sorts.at(name));
          continue;
        }
        ck.error(spec.loc, "no value for constant '" + name +
                               "' in the bounds file");
        sys->const_values[i] = Value::boolean(false);
        continue;
      }
      // temporarily limit the constant table to the prefix already valued
      ExprPtr ce = expr_clone(*bound_expr);
      size_t nvalued = i;
      auto saved = sys->spec.constants;
      sys->spec.constants.resize(nvalued);
      TypePtr t = ck.check(ce, ctype, cctx);
      sys->spec.constants = saved;
      if (!t) {
        sys->const_values[i] = Value::boolean(false);
        continue;
      }
      EvalEnv env(*sys);
      EvalResult r = eval_expr(*ce, env);
      if (r.fault) {
        ck.error(ce->loc, "cannot evaluate value for constant '" + name +
                              "': " + r.fault->message);
        sys->const_values[i] = Value::boolean(false);
        continue;
      }
      if (!value_has_type(*sys, *r.value, *ctype)) {
        ck.error(ce->loc, "value for constant '" + name +
                              "' does not inhabit type " + ctype->str());
        sys->const_values[i] = Value::boolean(false);
        continue;
      }
      sys->const_values[i] = *r.value;
    }
    for (const auto& [n, e] : bounds.constants) {
      (void)e;
      if (sys->const_index(n) < 0)
        ck.warn(spec.loc,
                "bounds file values unknown constant '" + n + "'");
    }
  }

  // constant assumption
  {
    Checker::Ctx cctx;
    cctx.allow_vars = false;
    if (ck.check(sys->spec.assumption, Type::boolean(), cctx)) {
      EvalEnv env(*sys);
      EvalResult r = eval_expr(*sys->spec.assumption, env);
      if (r.fault)
        ck.error(sys->spec.assumption->loc,
                 "constant assumption cannot be evaluated: " +
                     r.fault->message);
      else if (!r.value->as_bool())
        ck.error(sys->spec.assumption->loc,
                 "constant assumption is violated by the bounds");
    }
  }

  // state predicates
  {
    Checker::Ctx sctx;
    ck.check(sys->spec.invariant, Type::boolean(), sctx);
    ck.check(sys->spec.initial, Type::boolean(), sctx);
  }

  // events
  sys->events.resize(sys->spec.events.size());
  for (size_t ei = 0; ei < sys->spec.events.size(); ++ei) {
    EventDecl& ev = sys->spec.events[ei];
    Checker::Ctx ectx;
    ectx.event = &ev;
    ectx.allow_primed = true;
    ck.check(ev.ba, Type::boolean(), ectx);
    ectx.allow_primed = false;
    ck.check(ev.fairness, Type::boolean(), ectx);
    ck.check(ev.permission, Type::boolean(), ectx);
    ck.check(ev.prohibition, Type::boolean(), ectx);
    ck.check(ev.right, Type::boolean(), ectx);
    if (ev.obligation) ck.check(ev.obligation, Type::boolean(), ectx);
    for (const ExprPtr& cl :
         {ev.fairness, ev.permission, ev.prohibition, ev.right}) {
      if (cl && mentions_primed(*cl))
        ck.error(cl->loc, "primed variable in non-action context");
    }
    if (ev.obligation && mentions_primed(*ev.obligation))
      ck.error(ev.obligation->loc, "primed variable in non-action context");

    // instantiation domains
    auto& info = sys->events[ei];
    BigInt count = 1;
    for (const auto& [pname, ptype] : ev.params) {
      auto ov = bounds.param_overrides.find({ev.name, pname});
      std::vector<Value> domain;
      if (ov != bounds.param_overrides.end()) {
        Checker::Ctx cctx;
        cctx.allow_vars = false;
        for (const auto& vexpr : ov->second) {
          ExprPtr ve = expr_clone(vexpr);
          if (!ck.check(ve, ptype, cctx)) continue;
          EvalEnv env(*sys);
          EvalResult r = eval_expr(*ve, env);
          if (r.fault) {
            ck.error(ve->loc, "cannot evaluate override value for " +
                                  ev.name + "." + pname + ": " +
                                  r.fault->message);
            continue;
          }
          if (!value_has_type(*sys, *r.value, *ptype)) {
            ck.error(ve->loc, "override value " + r.value->str() +
                                  " does not inhabit " + ptype->str());
            continue;
          }
          domain.push_back(*r.value);
        }
        std::sort(domain.begin(), domain.end());
        domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
      } else {
        BigInt size = sys->carrier_size(ptype);
        if (size > limits.enum_limit) {
          ck.error(ev.loc, "parameter '" + pname + "' of event '" + ev.name +
                               "' has " + size.str() +
                               " candidate values; refusing to enumerate");
        } else {
          try {
            EnumBudget budget(limits);
            domain = sys->carrier(ptype, budget);
          } catch (const ExplosionError& ex) {
            ck.error(ev.loc, ex.what());
          }
        }
      }
      count *= static_cast<long>(domain.size());
      info.param_domains.push_back(std::move(domain));
    }
    if (count > limits.enum_limit) {
      ck.error(ev.loc, "event '" + ev.name + "' has " + count.str() +
                           " instances; refusing to enumerate");
      info.instance_count = 0;
    } else {
      info.instance_count = static_cast<uint64_t>(count);
    }
  }

  // successor plans (meaningful only when typechecking succeeded)
  if (!has_errors(ck.diags)) {
    for (const auto& ev : sys->spec.events)
      sys->plans.push_back(ck.build_plan(ev));
  }

  TypecheckResult out;
  out.diags = std::move(ck.diags);
  if (!has_errors(out.diags)) out.sys = sys;
  return out;
}

}  // namespace fescheck
