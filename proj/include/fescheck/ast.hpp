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

#ifndef FESCHECK_AST_HPP
#define FESCHECK_AST_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fescheck/diagnostics.hpp"
#include "fescheck/value.hpp"

namespace fescheck {

// ---------------------------------------------------------------- types

enum class TypeKind : uint8_t { Bool, Rat, Nat, Atom, Set, Map, Pair };

class Type;
using TypePtr = std::shared_ptr<const Type>;

class Type {
 public:
  TypeKind kind;
  std::string sort;   // Atom: the atom-sort name
  TypePtr a, b;       // Set: a; Map: a -> b; Pair: a * b

  static TypePtr boolean();
  static TypePtr rat();
  static TypePtr nat();
  static TypePtr atom(std::string sort);
  static TypePtr set(TypePtr elem);
  static TypePtr map(TypePtr key, TypePtr val);
  static TypePtr pair(TypePtr x, TypePtr y);

  // Structural equality with NAT and RAT identified (values of both are
  // rationals; NAT only restricts the induced carrier).
  static bool same(const TypePtr& x, const TypePtr& y);
  std::string str() const;
};

// ----------------------------------------------------------- expressions

enum class ExprKind : uint8_t {
  BoolLit,   // value in `bval`
  IntLit,    // value in `num`
  Ident,     // name
  Primed,    // name'  (only legal inside a before-after predicate)
  Not,
  And,
  Or,
  Implies,
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  InSet,
  NotInSet,
  Subseteq,
  Add,
  Sub,
  Mul,
  Div,
  Neg,
  Union,
  SetMinus,
  Cross,     // \times : SET a -> SET b -> SET (a*b)
  Override,  // (+)
  Maplet,    // a |-> b : map entry or pair, decided by type
  Tuple,     // (a, b, ...) right-nested pairs
  SetLit,    // { e1, ... } : set or map literal, decided by type
  Apply,     // f(a, ...) : map application
  Dom,       // dom(m)
  Sum,       // SUM{ body : x \in dom | cond }  kids = [dom, body, cond?]
  Forall,    // forall x \in dom : body         kids = [dom, body]
  Exists,
};

struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

// How a typechecked identifier resolves.
enum class RefKind : uint8_t {
  Unresolved,
  Constant,   // index into SystemSpec::constants
  Variable,   // index into SystemSpec::variables
  Param,      // index into the enclosing event's params
  Binder,     // de-Bruijn-ish: index counts enclosing binders, innermost = 0
  AtomLit,    // an atom literal from the bounds enumerations
  SortSet,    // an atom-sort name used as a set expression (full carrier)
  RatSet,     // RAT used as a set expression (declared rational domain)
  NatSet,     // NAT used as a set expression (domain restricted to naturals)
  BoolSet,    // BOOL used as a set expression
};

struct Expr {
  ExprKind kind;
  SourceLoc loc;
  bool bval = false;            // BoolLit
  BigInt num;                   // IntLit
  std::string name;             // Ident / Primed / binder name
  std::vector<ExprPtr> kids;

  // Typecheck annotations (written once per typecheck pass).
  mutable TypePtr type;
  mutable RefKind ref = RefKind::Unresolved;
  mutable int ref_index = -1;

  static ExprPtr make(ExprKind k, SourceLoc loc = {});
  static ExprPtr boolean(bool b, SourceLoc loc = {});
  static ExprPtr integer(long n, SourceLoc loc = {});
  static ExprPtr ident(std::string name, SourceLoc loc = {});
  static ExprPtr unary(ExprKind k, ExprPtr a);
  static ExprPtr binary(ExprKind k, ExprPtr a, ExprPtr b);
};

// Structural equality (ignores locations and annotations).
bool expr_equal(const Expr& a, const Expr& b);
// True if any primed identifier occurs in the expression.
bool mentions_primed(const Expr& e);

// ----------------------------------------------------------- declarations

struct EventDecl {
  std::string name;
  SourceLoc loc;
  std::vector<std::pair<std::string, TypePtr>> params;
  ExprPtr ba;           // before-after predicate (may mention primed vars)
  ExprPtr fairness;     // defaults to literal false
  ExprPtr permission;   // defaults to literal true
  ExprPtr prohibition;  // defaults to literal false
  ExprPtr right;        // defaults to literal false
  enum class OblMode : uint8_t { None, Strict, Weak };
  OblMode obl_mode = OblMode::None;
  ExprPtr obligation;   // present iff obl_mode != None

  bool has_permission = false;   // clause textually declared
  bool has_prohibition = false;
  bool has_right = false;
  bool fairness_is_false() const;
};

struct SystemSpec {
  std::string name;
  SourceLoc loc;
  std::vector<std::pair<std::string, TypePtr>> constants;
  std::vector<std::pair<std::string, TypePtr>> variables;
  ExprPtr assumption;  // defaults to true
  ExprPtr invariant;   // defaults to true
  ExprPtr initial;     // defaults to true
  std::vector<EventDecl> events;

  const EventDecl* find_event(const std::string& n) const;
  int event_index(const std::string& n) const;
};

struct RefinementSpec {
  std::string name;
  SourceLoc loc;
  std::string abstract_name;
  std::string concrete_name;
  ExprPtr gluing;
  // concrete event -> abstract event; concrete events absent here are new.
  std::vector<std::pair<std::string, std::string>> refines;
  // abstract event -> concrete witness events (each must declare a right).
  std::vector<std::pair<std::string, std::vector<std::string>>> right_witnesses;

  std::optional<std::string> refines_target(const std::string& conc) const;
};

// Finite bounds making every carrier enumerable: atom enumerations, the
// rational domain, constant values, and per-parameter overrides.
struct BoundsDecl {
  std::vector<std::pair<std::string, std::vector<std::string>>> atom_sets;
  std::vector<Rational> rat_domain;
  std::vector<std::pair<std::string, ExprPtr>> constants;
  std::map<std::pair<std::string, std::string>, std::vector<ExprPtr>>
      param_overrides;  // (event, param) -> literal list

  const std::vector<std::string>* find_sort(const std::string& name) const;
};

}  // namespace fescheck

#endif
