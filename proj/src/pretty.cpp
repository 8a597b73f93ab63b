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

#include "fescheck/pretty.hpp"

#include <sstream>

namespace fescheck {

namespace {

// Precedence levels, mirroring the parser (tighter binds higher).
int prec(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Implies:
    case ExprKind::Forall:
    case ExprKind::Exists:
      return 1;
    case ExprKind::Or:
      return 2;
    case ExprKind::And:
      return 3;
    case ExprKind::Not:
      return 4;
    case ExprKind::Eq:
    case ExprKind::Ne:
    case ExprKind::Lt:
    case ExprKind::Le:
    case ExprKind::Gt:
    case ExprKind::Ge:
    case ExprKind::InSet:
    case ExprKind::NotInSet:
    case ExprKind::Subseteq:
      return 5;
    case ExprKind::Maplet:
      return 6;
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Union:
    case ExprKind::SetMinus:
    case ExprKind::Cross:
    case ExprKind::Override:
      return 7;
    case ExprKind::Mul:
    case ExprKind::Div:
      return 8;
    case ExprKind::Neg:
      return 9;
    case ExprKind::Apply:
      return 10;
    default:
      return 11;
  }
}

const char* binop_text(ExprKind k) {
  switch (k) {
    case ExprKind::Implies: return " => ";
    case ExprKind::Or: return " \\/ ";
    case ExprKind::And: return " /\\ ";
    case ExprKind::Eq: return " = ";
    case ExprKind::Ne: return " /= ";
    case ExprKind::Lt: return " < ";
    case ExprKind::Le: return " <= ";
    case ExprKind::Gt: return " > ";
    case ExprKind::Ge: return " >= ";
    case ExprKind::InSet: return " \\in ";
    case ExprKind::NotInSet: return " \\notin ";
    case ExprKind::Subseteq: return " \\subseteq ";
    case ExprKind::Maplet: return " |-> ";
    case ExprKind::Add: return " + ";
    case ExprKind::Sub: return " - ";
    case ExprKind::Union: return " \\union ";
    case ExprKind::SetMinus: return " \\setminus ";
    case ExprKind::Cross: return " \\times ";
    case ExprKind::Override: return " (+) ";
    case ExprKind::Mul: return " * ";
    case ExprKind::Div: return " / ";
    default: return " ? ";
  }
}

void print(std::ostream& os, const Expr& e, int required);

void child(std::ostream& os, const Expr& e, int required) {
  if (prec(e) < required) {
    os << "(";
    print(os, e, 1);
    os << ")";
  } else {
    print(os, e, required);
  }
}

void print(std::ostream& os, const Expr& e, int required) {
  (void)required;
  switch (e.kind) {
    case ExprKind::BoolLit:
      os << (e.bval ? "true" : "false");
      return;
    case ExprKind::IntLit:
      os << e.num;
      return;
    case ExprKind::Ident:
      os << e.name;
      return;
    case ExprKind::Primed:
      os << e.name << "'";
      return;
    case ExprKind::Not:
      os << "not ";
      child(os, *e.kids[0], 4);
      return;
    case ExprKind::Implies:
      child(os, *e.kids[0], 2);
      os << binop_text(e.kind);
      child(os, *e.kids[1], 1);
      return;
    case ExprKind::Or:
      child(os, *e.kids[0], 2);
      os << binop_text(e.kind);
      child(os, *e.kids[1], 3);
      return;
    case ExprKind::And:
      child(os, *e.kids[0], 3);
      os << binop_text(e.kind);
      child(os, *e.kids[1], 4);
      return;
    case ExprKind::Eq:
    case ExprKind::Ne:
    case ExprKind::Lt:
    case ExprKind::Le:
    case ExprKind::Gt:
    case ExprKind::Ge:
    case ExprKind::InSet:
    case ExprKind::NotInSet:
    case ExprKind::Subseteq:
      child(os, *e.kids[0], 6);
      os << binop_text(e.kind);
      child(os, *e.kids[1], 6);
      return;
    case ExprKind::Maplet:
      child(os, *e.kids[0], 7);
      os << binop_text(e.kind);
      child(os, *e.kids[1], 7);
      return;
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Union:
    case ExprKind::SetMinus:
    case ExprKind::Cross:
    case ExprKind::Override:
      child(os, *e.kids[0], 7);
      os << binop_text(e.kind);
      child(os, *e.kids[1], 8);
      return;
    case ExprKind::Mul:
    case ExprKind::Div:
      child(os, *e.kids[0], 8);
      os << binop_text(e.kind);
      child(os, *e.kids[1], 9);
      return;
    case ExprKind::Neg:
      os << "-";
      child(os, *e.kids[0], 9);
      return;
    case ExprKind::Apply:
      child(os, *e.kids[0], 11);
      os << "(";
      for (size_t i = 1; i < e.kids.size(); ++i) {
        if (i > 1) os << ", ";
        print(os, *e.kids[i], 1);
      }
      os << ")";
      return;
    case ExprKind::Dom:
      os << "dom(";
      print(os, *e.kids[0], 1);
      os << ")";
      return;
    case ExprKind::Tuple:
      os << "(";
      for (size_t i = 0; i < e.kids.size(); ++i) {
        if (i > 0) os << ", ";
        print(os, *e.kids[i], 1);
      }
      os << ")";
      return;
    case ExprKind::SetLit:
      os << "{";
      for (size_t i = 0; i < e.kids.size(); ++i) {
        if (i > 0) os << ", ";
        print(os, *e.kids[i], 1);
      }
      os << "}";
      return;
    case ExprKind::Sum:
      os << "SUM{ ";
      print(os, *e.kids[1], 1);
      os << " : " << e.name << " \\in ";
      child(os, *e.kids[0], 6);
      if (e.kids.size() > 2) {
        os << " | ";
        print(os, *e.kids[2], 1);
      }
      os << " }";
      return;
    case ExprKind::Forall:
    case ExprKind::Exists:
      os << (e.kind == ExprKind::Forall ? "forall " : "exists ") << e.name
         << " \\in ";
      child(os, *e.kids[0], 6);
      os << " : ";
      print(os, *e.kids[1], 1);
      return;
  }
}

}  // namespace

std::string pretty_expr(const Expr& e) {
  std::ostringstream os;
  print(os, e, 1);
  return os.str();
}

std::string pretty_system(const SystemSpec& sys) {
  std::ostringstream os;
  os << "system " << sys.name << "\n";
  if (!sys.constants.empty()) {
    os << "  constants\n";
    for (size_t i = 0; i < sys.constants.size(); ++i)
      os << "    " << sys.constants[i].first << " : "
         << sys.constants[i].second->str()
         << (i + 1 < sys.constants.size() ? "," : "") << "\n";
  }
  os << "  assumption " << pretty_expr(*sys.assumption) << "\n";
  if (!sys.variables.empty()) {
    os << "  variables\n";
    for (size_t i = 0; i < sys.variables.size(); ++i)
      os << "    " << sys.variables[i].first << " : "
         << sys.variables[i].second->str()
         << (i + 1 < sys.variables.size() ? "," : "") << "\n";
  }
  os << "  invariant " << pretty_expr(*sys.invariant) << "\n";
  os << "  initial " << pretty_expr(*sys.initial) << "\n";
  for (const auto& ev : sys.events) {
    os << "  event " << ev.name << "(";
    for (size_t i = 0; i < ev.params.size(); ++i) {
      if (i > 0) os << ", ";
      os << ev.params[i].first << " : " << ev.params[i].second->str();
    }
    os << ") =\n    " << pretty_expr(*ev.ba) << "\n";
    os << "  fairness " << pretty_expr(*ev.fairness) << "\n";
    if (ev.has_permission)
      os << "  permission " << pretty_expr(*ev.permission) << "\n";
    if (ev.has_prohibition)
      os << "  prohibition " << pretty_expr(*ev.prohibition) << "\n";
    if (ev.has_right) os << "  right " << pretty_expr(*ev.right) << "\n";
    if (ev.obl_mode != EventDecl::OblMode::None)
      os << "  obligation "
         << (ev.obl_mode == EventDecl::OblMode::Strict ? "strict " : "weak ")
         << pretty_expr(*ev.obligation) << "\n";
  }
  os << "end\n";
  return os.str();
}

std::string pretty_refinement(const RefinementSpec& r) {
  std::ostringstream os;
  os << "refinement " << r.name << "\n";
  os << "  abstract " << r.abstract_name << "\n";
  os << "  concrete " << r.concrete_name << "\n";
  os << "  gluing " << pretty_expr(*r.gluing) << "\n";
  for (const auto& [c, a] : r.refines)
    os << "  refines " << c << " -> " << a << "\n";
  for (const auto& [a, ws] : r.right_witnesses) {
    os << "  rightwitness " << a << " : ";
    for (size_t i = 0; i < ws.size(); ++i) {
      if (i > 0) os << ", ";
      os << ws[i];
    }
    os << "\n";
  }
  os << "end\n";
  return os.str();
}

}  // namespace fescheck
