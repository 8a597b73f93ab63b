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

#include "fescheck/ast.hpp"

namespace fescheck {

TypePtr Type::boolean() {
  static TypePtr t = std::make_shared<Type>(Type{TypeKind::Bool, "", nullptr, nullptr});
  return t;
}
TypePtr Type::rat() {
  static TypePtr t = std::make_shared<Type>(Type{TypeKind::Rat, "", nullptr, nullptr});
  return t;
}
TypePtr Type::nat() {
  static TypePtr t = std::make_shared<Type>(Type{TypeKind::Nat, "", nullptr, nullptr});
  return t;
}
TypePtr Type::atom(std::string sort) {
  return std::make_shared<Type>(Type{TypeKind::Atom, std::move(sort), nullptr, nullptr});
}
TypePtr Type::set(TypePtr elem) {
  return std::make_shared<Type>(Type{TypeKind::Set, "", std::move(elem), nullptr});
}
TypePtr Type::map(TypePtr key, TypePtr val) {
  return std::make_shared<Type>(Type{TypeKind::Map, "", std::move(key), std::move(val)});
}
TypePtr Type::pair(TypePtr x, TypePtr y) {
  return std::make_shared<Type>(Type{TypeKind::Pair, "", std::move(x), std::move(y)});
}

bool Type::same(const TypePtr& x, const TypePtr& y) {
  if (!x || !y) return x == y;
  TypeKind kx = x->kind == TypeKind::Nat ? TypeKind::Rat : x->kind;
  TypeKind ky = y->kind == TypeKind::Nat ? TypeKind::Rat : y->kind;
  if (kx != ky) return false;
  switch (kx) {
    case TypeKind::Bool:
    case TypeKind::Rat:
      return true;
    case TypeKind::Atom:
      return x->sort == y->sort;
    case TypeKind::Set:
      return same(x->a, y->a);
    case TypeKind::Map:
    case TypeKind::Pair:
      return same(x->a, y->a) && same(x->b, y->b);
    default:
      return false;
  }
}

std::string Type::str() const {
  switch (kind) {
    case TypeKind::Bool: return "BOOL";
    case TypeKind::Rat: return "RAT";
    case TypeKind::Nat: return "NAT";
    case TypeKind::Atom: return sort;
    case TypeKind::Set: return "SET of " + a->str();
    case TypeKind::Map: {
      auto side = [](const TypePtr& t) {
        return t->kind == TypeKind::Pair ? "(" + t->str() + ")" : t->str();
      };
      return "MAP " + side(a) + " to " + side(b);
    }
    case TypeKind::Pair: {
      auto side = [](const TypePtr& t) {
        return t->kind == TypeKind::Pair || t->kind == TypeKind::Map ||
                       t->kind == TypeKind::Set
                   ? "(" + t->str() + ")"
                   : t->str();
      };
      return side(a) + " * " + side(b);
    }
  }
  return "?";
}

ExprPtr Expr::make(ExprKind k, SourceLoc loc) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->loc = loc;
  return e;
}

ExprPtr Expr::boolean(bool b, SourceLoc loc) {
  auto e = make(ExprKind::BoolLit, loc);
  e->bval = b;
  return e;
}

ExprPtr Expr::integer(long n, SourceLoc loc) {
  auto e = make(ExprKind::IntLit, loc);
  e->num = n;
  return e;
}

ExprPtr Expr::ident(std::string name, SourceLoc loc) {
  auto e = make(ExprKind::Ident, loc);
  e->name = std::move(name);
  return e;
}

ExprPtr Expr::unary(ExprKind k, ExprPtr a) {
  auto e = make(k, a->loc);
  e->kids = {std::move(a)};
  return e;
}

ExprPtr Expr::binary(ExprKind k, ExprPtr a, ExprPtr b) {
  auto e = make(k, a->loc);
  e->kids = {std::move(a), std::move(b)};
  return e;
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  if (a.bval != b.bval || a.num != b.num || a.name != b.name) return false;
  if (a.kids.size() != b.kids.size()) return false;
  for (size_t i = 0; i < a.kids.size(); ++i)
    if (!expr_equal(*a.kids[i], *b.kids[i])) return false;
  return true;
}

bool mentions_primed(const Expr& e) {
  if (e.kind == ExprKind::Primed) return true;
  for (const auto& k : e.kids)
    if (mentions_primed(*k)) return true;
  return false;
}

bool EventDecl::fairness_is_false() const {
  return fairness && fairness->kind == ExprKind::BoolLit && !fairness->bval;
}

const EventDecl* SystemSpec::find_event(const std::string& n) const {
  for (const auto& e : events)
    if (e.name == n) return &e;
  return nullptr;
}

int SystemSpec::event_index(const std::string& n) const {
  for (size_t i = 0; i < events.size(); ++i)
    if (events[i].name == n) return static_cast<int>(i);
  return -1;
}

std::optional<std::string> RefinementSpec::refines_target(
    const std::string& conc) const {
  for (const auto& [c, a] : refines)
    if (c == conc) return a;
  return std::nullopt;
}

const std::vector<std::string>* BoundsDecl::find_sort(
    const std::string& name) const {
  for (const auto& [n, lits] : atom_sets)
    if (n == name) return &lits;
  return nullptr;
}

}  // namespace fescheck
