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

#include "fescheck/parser.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "fescheck/lexer.hpp"

namespace fescheck {

namespace {

constexpr int kMaxDiags = 100;

class Parser {
 public:
  Parser(std::string_view text, std::string file)
      : file_(std::move(file)) {
    toks_ = lex(text, file_, diags_);
  }

  std::vector<Diagnostic> take_diags() { return std::move(diags_); }

  // ------------------------------------------------------------ helpers

  const Token& cur() const { return toks_[pos_]; }
  const Token& peek(size_t off = 1) const {
    return toks_[std::min(pos_ + off, toks_.size() - 1)];
  }
  bool at(Tok k) const { return cur().kind == k; }
  bool eat(Tok k) {
    if (at(k)) {
      ++pos_;
      return true;
    }
    return false;
  }
  Token expect(Tok k, const char* what) {
    if (at(k)) return toks_[pos_++];
    error(cur().loc, std::string("expected ") + what + ", found '" +
                         (cur().kind == Tok::End ? "end of input" : cur().text) +
                         "'");
    return Token{k, "", cur().loc};
  }
  void error(SourceLoc loc, std::string msg) {
    if (static_cast<int>(diags_.size()) < kMaxDiags)
      diags_.push_back({Diagnostic::Severity::Error, file_, loc, std::move(msg)});
    else
      pos_ = toks_.size() - 1;  // too many errors: give up quietly
  }

  bool at_section_start() const {
    switch (cur().kind) {
      case Tok::KwConstants:
      case Tok::KwAssumption:
      case Tok::KwVariables:
      case Tok::KwInvariant:
      case Tok::KwInitial:
      case Tok::KwEvent:
      case Tok::KwFairness:
      case Tok::KwPermission:
      case Tok::KwProhibition:
      case Tok::KwRight:
      case Tok::KwObligation:
      case Tok::KwEnd:
      case Tok::KwGluing:
      case Tok::KwRefines:
      case Tok::KwRightWitness:
      case Tok::KwAbstract:
      case Tok::KwConcrete:
      case Tok::End:
        return true;
      default:
        return false;
    }
  }

  void synchronize() {
    while (!at_section_start()) ++pos_;
  }

  // -------------------------------------------------------------- types

  TypePtr parse_type() {
    TypePtr t = parse_type_atom();
    while (at(Tok::Star)) {
      ++pos_;
      TypePtr u = parse_type_atom();
      t = Type::pair(t, u);
    }
    return t;
  }

  TypePtr parse_type_atom() {
    SourceLoc l = cur().loc;
    if (eat(Tok::KwBool)) return Type::boolean();
    if (eat(Tok::KwRat)) return Type::rat();
    if (eat(Tok::KwNat)) return Type::nat();
    if (eat(Tok::KwSet)) {
      expect(Tok::KwOf, "'of'");
      return Type::set(parse_type_atom());
    }
    if (eat(Tok::KwMap)) {
      TypePtr k = parse_type_atom();
      expect(Tok::KwTo, "'to'");
      TypePtr v = parse_type_atom();
      return Type::map(k, v);
    }
    if (at(Tok::Ident)) {
      std::string n = cur().text;
      ++pos_;
      return Type::atom(n);
    }
    if (eat(Tok::LParen)) {
      TypePtr t = parse_type();
      expect(Tok::RParen, "')'");
      return t;
    }
    error(l, "expected a type");
    if (!at(Tok::End)) ++pos_;
    return Type::boolean();
  }

  // -------------------------------------------------------- expressions

  // Precedence (loose to tight):
  //   =>  |  \/  |  /\  |  not/forall/exists  |  relational  |  |->
  //   |  + - \union \setminus \times (+)  |  * /  |  unary -  |  apply

  ExprPtr parse_expr() { return parse_implies(); }

  ExprPtr parse_implies() {
    ExprPtr a = parse_or();
    if (at(Tok::ImpliesOp)) {
      ++pos_;
      ExprPtr b = parse_implies();
      return Expr::binary(ExprKind::Implies, a, b);
    }
    return a;
  }

  ExprPtr parse_or() {
    ExprPtr a = parse_and();
    while (at(Tok::OrOp)) {
      ++pos_;
      a = Expr::binary(ExprKind::Or, a, parse_and());
    }
    return a;
  }

  ExprPtr parse_and() {
    ExprPtr a = parse_prefix();
    while (at(Tok::AndOp)) {
      ++pos_;
      a = Expr::binary(ExprKind::And, a, parse_prefix());
    }
    return a;
  }

  ExprPtr parse_prefix() {
    SourceLoc l = cur().loc;
    if (eat(Tok::KwNot)) return Expr::unary(ExprKind::Not, parse_prefix());
    if (at(Tok::KwForall) || at(Tok::KwExists)) {
      ExprKind k = at(Tok::KwForall) ? ExprKind::Forall : ExprKind::Exists;
      ++pos_;
      Token v = expect(Tok::Ident, "bound variable");
      expect(Tok::In, "'\\in'");
      ExprPtr dom = parse_rel();
      expect(Tok::Colon, "':'");
      ExprPtr body = parse_implies();  // body extends maximally
      ExprPtr q = Expr::make(k, l);
      q->name = v.text;
      q->kids = {dom, body};
      return q;
    }
    return parse_rel();
  }

  ExprPtr parse_rel() {
    ExprPtr a = parse_maplet();
    ExprKind k;
    switch (cur().kind) {
      case Tok::Eq: k = ExprKind::Eq; break;
      case Tok::Ne: k = ExprKind::Ne; break;
      case Tok::Lt: k = ExprKind::Lt; break;
      case Tok::Le: k = ExprKind::Le; break;
      case Tok::Gt: k = ExprKind::Gt; break;
      case Tok::Ge: k = ExprKind::Ge; break;
      case Tok::In: k = ExprKind::InSet; break;
      case Tok::NotIn: k = ExprKind::NotInSet; break;
      case Tok::Subseteq: k = ExprKind::Subseteq; break;
      default:
        return a;
    }
    ++pos_;
    ExprPtr b = parse_maplet();
    return Expr::binary(k, a, b);
  }

  ExprPtr parse_maplet() {
    ExprPtr a = parse_additive();
    if (at(Tok::Maplet)) {
      ++pos_;
      ExprPtr b = parse_additive();
      return Expr::binary(ExprKind::Maplet, a, b);
    }
    return a;
  }

  ExprPtr parse_additive() {
    ExprPtr a = parse_multiplicative();
    for (;;) {
      ExprKind k;
      switch (cur().kind) {
        case Tok::Plus: k = ExprKind::Add; break;
        case Tok::Minus: k = ExprKind::Sub; break;
        case Tok::Union: k = ExprKind::Union; break;
        case Tok::SetMinus: k = ExprKind::SetMinus; break;
        case Tok::Times: k = ExprKind::Cross; break;
        case Tok::Oplus: k = ExprKind::Override; break;
        default:
          return a;
      }
      ++pos_;
      a = Expr::binary(k, a, parse_multiplicative());
    }
  }

  ExprPtr parse_multiplicative() {
    ExprPtr a = parse_unary();
    for (;;) {
      ExprKind k;
      switch (cur().kind) {
        case Tok::Star: k = ExprKind::Mul; break;
        case Tok::Slash: k = ExprKind::Div; break;
        default:
          return a;
      }
      ++pos_;
      a = Expr::binary(k, a, parse_unary());
    }
  }

  ExprPtr parse_unary() {
    if (at(Tok::Minus)) {
      SourceLoc l = cur().loc;
      ++pos_;
      ExprPtr e = Expr::unary(ExprKind::Neg, parse_unary());
      e->loc = l;
      return e;
    }
    return parse_postfix();
  }

  ExprPtr parse_postfix() {
    ExprPtr a = parse_primary();
    while (at(Tok::LParen)) {
      SourceLoc l = cur().loc;
      ++pos_;
      ExprPtr app = Expr::make(ExprKind::Apply, l);
      app->kids.push_back(a);
      if (!at(Tok::RParen)) {
        do {
          app->kids.push_back(parse_expr());
        } while (eat(Tok::Comma));
      }
      expect(Tok::RParen, "')'");
      a = app;
    }
    return a;
  }

  ExprPtr parse_primary() {
    SourceLoc l = cur().loc;
    switch (cur().kind) {
      case Tok::KwTrue:
        ++pos_;
        return Expr::boolean(true, l);
      case Tok::KwFalse:
        ++pos_;
        return Expr::boolean(false, l);
      case Tok::Int: {
        ExprPtr e = Expr::make(ExprKind::IntLit, l);
        e->num = BigInt(cur().text);
        ++pos_;
        return e;
      }
      case Tok::Ident: {
        ExprPtr e = Expr::ident(cur().text, l);
        ++pos_;
        return e;
      }
      case Tok::KwRat:
      case Tok::KwNat:
      case Tok::KwBool: {
        // type name used as a set expression (its induced carrier)
        ExprPtr e = Expr::ident(cur().text, l);
        ++pos_;
        return e;
      }
      case Tok::PrimedIdent: {
        if (!allow_primed_)
          error(l, "primed variable '" + cur().text +
                       "' in non-action context");
        ExprPtr e = Expr::make(ExprKind::Primed, l);
        e->name = cur().text;
        ++pos_;
        return e;
      }
      case Tok::KwDom: {
        ++pos_;
        expect(Tok::LParen, "'('");
        ExprPtr e = Expr::make(ExprKind::Dom, l);
        e->kids.push_back(parse_expr());
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::KwSum: {
        ++pos_;
        expect(Tok::LBrace, "'{'");
        ExprPtr body = parse_expr();
        expect(Tok::Colon, "':'");
        Token v = expect(Tok::Ident, "bound variable");
        expect(Tok::In, "'\\in'");
        ExprPtr dom = parse_rel();
        ExprPtr cond;
        if (eat(Tok::Bar)) cond = parse_expr();
        expect(Tok::RBrace, "'}'");
        ExprPtr e = Expr::make(ExprKind::Sum, l);
        e->name = v.text;
        e->kids = {dom, body};
        if (cond) e->kids.push_back(cond);
        return e;
      }
      case Tok::LParen: {
        ++pos_;
        ExprPtr first = parse_expr();
        if (at(Tok::Comma)) {
          ExprPtr tup = Expr::make(ExprKind::Tuple, l);
          tup->kids.push_back(first);
          while (eat(Tok::Comma)) tup->kids.push_back(parse_expr());
          expect(Tok::RParen, "')'");
          return tup;
        }
        expect(Tok::RParen, "')'");
        return first;
      }
      case Tok::LBrace: {
        ++pos_;
        ExprPtr e = Expr::make(ExprKind::SetLit, l);
        if (!at(Tok::RBrace)) {
          do {
            e->kids.push_back(parse_expr());
          } while (eat(Tok::Comma));
        }
        expect(Tok::RBrace, "'}'");
        return e;
      }
      default:
        error(l, "expected an expression, found '" +
                     (cur().kind == Tok::End ? "end of input" : cur().text) +
                     "'");
        if (!at(Tok::End) && !at_section_start()) ++pos_;
        return Expr::boolean(false, l);
    }
  }

  // ------------------------------------------------------- declarations

  void parse_typed_list(std::vector<std::pair<std::string, TypePtr>>& out,
                        const char* what,
                        std::set<std::string>& names) {
    do {
      Token n = expect(Tok::Ident, what);
      expect(Tok::Colon, "':'");
      TypePtr t = parse_type();
      if (!n.text.empty()) {
        if (!names.insert(n.text).second)
          error(n.loc, std::string("duplicate ") + what + " '" + n.text + "'");
        out.emplace_back(n.text, t);
      }
    } while (eat(Tok::Comma));
  }

  EventDecl parse_event(std::set<std::string>& event_names) {
    EventDecl ev;
    ev.loc = cur().loc;
    expect(Tok::KwEvent, "'event'");
    Token n = expect(Tok::Ident, "event name");
    ev.name = n.text;
    if (!ev.name.empty() && !event_names.insert(ev.name).second)
      error(n.loc, "duplicate event '" + ev.name + "'");
    expect(Tok::LParen, "'('");
    std::set<std::string> pnames;
    if (!at(Tok::RParen)) parse_typed_list(ev.params, "parameter", pnames);
    expect(Tok::RParen, "')'");
    expect(Tok::Eq, "'='");
    allow_primed_ = true;
    ev.ba = parse_expr();
    allow_primed_ = false;
    for (;;) {
      if (eat(Tok::KwFairness)) {
        if (ev.fairness) error(cur().loc, "duplicate fairness clause");
        ev.fairness = parse_expr();
      } else if (eat(Tok::KwPermission)) {
        if (ev.has_permission) error(cur().loc, "duplicate permission clause");
        ev.permission = parse_expr();
        ev.has_permission = true;
      } else if (eat(Tok::KwProhibition)) {
        if (ev.has_prohibition)
          error(cur().loc, "duplicate prohibition clause");
        ev.prohibition = parse_expr();
        ev.has_prohibition = true;
      } else if (eat(Tok::KwRight)) {
        if (ev.has_right) error(cur().loc, "duplicate right clause");
        ev.right = parse_expr();
        ev.has_right = true;
      } else if (at(Tok::KwObligation)) {
        SourceLoc l = cur().loc;
        ++pos_;
        if (ev.obl_mode != EventDecl::OblMode::None)
          error(l, "duplicate obligation clause");
        if (eat(Tok::KwStrict))
          ev.obl_mode = EventDecl::OblMode::Strict;
        else if (eat(Tok::KwWeak))
          ev.obl_mode = EventDecl::OblMode::Weak;
        else {
          error(cur().loc, "expected 'strict' or 'weak' after 'obligation'");
          ev.obl_mode = EventDecl::OblMode::Weak;
        }
        ev.obligation = parse_expr();
      } else {
        break;
      }
    }
    // clause defaults: permission true, prohibition false, right false
    if (!ev.fairness) ev.fairness = Expr::boolean(false, ev.loc);
    if (!ev.permission) ev.permission = Expr::boolean(true, ev.loc);
    if (!ev.prohibition) ev.prohibition = Expr::boolean(false, ev.loc);
    if (!ev.right) ev.right = Expr::boolean(false, ev.loc);
    return ev;
  }

  SystemSpec parse_system_decl() {
    SystemSpec sys;
    expect(Tok::KwSystem, "'system'");
    sys.loc = cur().loc;
    sys.name = expect(Tok::Ident, "system name").text;
    std::set<std::string> const_names, var_names, event_names;
    bool saw_inv = false, saw_init = false, saw_hyp = false;
    while (!at(Tok::KwEnd) && !at(Tok::End)) {
      switch (cur().kind) {
        case Tok::KwConstants:
          ++pos_;
          parse_typed_list(sys.constants, "constant", const_names);
          break;
        case Tok::KwVariables:
          ++pos_;
          parse_typed_list(sys.variables, "variable", var_names);
          break;
        case Tok::KwAssumption:
          ++pos_;
          if (saw_hyp) error(cur().loc, "duplicate assumption section");
          saw_hyp = true;
          sys.assumption = parse_expr();
          break;
        case Tok::KwInvariant:
          ++pos_;
          if (saw_inv) error(cur().loc, "duplicate invariant section");
          saw_inv = true;
          sys.invariant = parse_expr();
          break;
        case Tok::KwInitial:
          ++pos_;
          if (saw_init) error(cur().loc, "duplicate initial section");
          saw_init = true;
          sys.initial = parse_expr();
          break;
        case Tok::KwEvent:
          sys.events.push_back(parse_event(event_names));
          break;
        default:
          error(cur().loc, "expected a section keyword, found '" +
                               cur().text + "'");
          ++pos_;
          synchronize();
          break;
      }
    }
    expect(Tok::KwEnd, "'end'");
    if (!sys.assumption) sys.assumption = Expr::boolean(true, sys.loc);
    if (!sys.invariant) sys.invariant = Expr::boolean(true, sys.loc);
    if (!sys.initial) sys.initial = Expr::boolean(true, sys.loc);
    // cross-namespace collision between constants and variables is confusing
    // enough to reject outright
    for (const auto& [n, t] : sys.variables) {
      (void)t;
      if (const_names.count(n))
        error(sys.loc, "'" + n + "' declared both as constant and variable");
    }
    return sys;
  }

  RefinementSpec parse_refinement_decl() {
    RefinementSpec r;
    expect(Tok::KwRefinement, "'refinement'");
    r.loc = cur().loc;
    r.name = expect(Tok::Ident, "refinement name").text;
    std::set<std::string> refined_conc;
    while (!at(Tok::KwEnd) && !at(Tok::End)) {
      switch (cur().kind) {
        case Tok::KwAbstract:
          ++pos_;
          r.abstract_name = expect(Tok::Ident, "abstract system name").text;
          break;
        case Tok::KwConcrete:
          ++pos_;
          r.concrete_name = expect(Tok::Ident, "concrete system name").text;
          break;
        case Tok::KwGluing:
          ++pos_;
          if (r.gluing) error(cur().loc, "duplicate gluing section");
          r.gluing = parse_expr();
          break;
        case Tok::KwRefines: {
          ++pos_;
          Token c = expect(Tok::Ident, "concrete event name");
          expect(Tok::Arrow, "'->'");
          Token a = expect(Tok::Ident, "abstract event name");
          if (!c.text.empty()) {
            if (!refined_conc.insert(c.text).second)
              error(c.loc, "duplicate refines entry for '" + c.text + "'");
            r.refines.emplace_back(c.text, a.text);
          }
          break;
        }
        case Tok::KwRightWitness: {
          ++pos_;
          Token a = expect(Tok::Ident, "abstract event name");
          expect(Tok::Colon, "':'");
          std::vector<std::string> ws;
          do {
            Token w = expect(Tok::Ident, "witness event name");
            if (!w.text.empty()) ws.push_back(w.text);
          } while (eat(Tok::Comma));
          r.right_witnesses.emplace_back(a.text, std::move(ws));
          break;
        }
        default:
          error(cur().loc,
                "expected a refinement section keyword, found '" + cur().text +
                    "'");
          ++pos_;
          synchronize();
          break;
      }
    }
    expect(Tok::KwEnd, "'end'");
    if (!r.gluing) r.gluing = Expr::boolean(true, r.loc);
    if (r.abstract_name.empty())
      error(r.loc, "refinement lacks an 'abstract' declaration");
    if (r.concrete_name.empty())
      error(r.loc, "refinement lacks a 'concrete' declaration");
    return r;
  }

  BoundsDecl parse_bounds_decl() {
    BoundsDecl b;
    std::set<std::string> sort_names, const_names;
    std::set<Rational> rat_seen;
    while (!at(Tok::End)) {
      switch (cur().kind) {
        case Tok::KwAtoms: {
          ++pos_;
          Token n = expect(Tok::Ident, "atom-set name");
          expect(Tok::Eq, "'='");
          expect(Tok::LBrace, "'{'");
          std::vector<std::string> lits;
          std::set<std::string> seen;
          if (!at(Tok::RBrace)) {
            do {
              Token a = expect(Tok::Ident, "atom literal");
              if (!a.text.empty()) {
                if (!seen.insert(a.text).second)
                  error(a.loc, "duplicate atom '" + a.text + "'");
                lits.push_back(a.text);
              }
            } while (eat(Tok::Comma));
          }
          expect(Tok::RBrace, "'}'");
          if (!n.text.empty()) {
            if (!sort_names.insert(n.text).second)
              error(n.loc, "duplicate atom-set '" + n.text + "'");
            std::sort(lits.begin(), lits.end());
            b.atom_sets.emplace_back(n.text, std::move(lits));
          }
          break;
        }
        case Tok::KwRats: {
          ++pos_;
          expect(Tok::Eq, "'='");
          expect(Tok::LBrace, "'{'");
          if (!at(Tok::RBrace)) {
            do {
              bool neg = eat(Tok::Minus);
              Token n = expect(Tok::Int, "rational");
              Rational v = n.text.empty() ? Rational(0) : Rational(BigInt(n.text));
              if (eat(Tok::Slash)) {
                Token d = expect(Tok::Int, "denominator");
                if (!d.text.empty() && BigInt(d.text) != 0)
                  v /= Rational(BigInt(d.text));
                else
                  error(d.loc, "zero denominator in rational domain");
              }
              if (neg) v = -v;
              if (!rat_seen.insert(v).second)
                error(n.loc, "duplicate rational " + rat_str(v) +
                                 " in domain");
              else
                b.rat_domain.push_back(v);
            } while (eat(Tok::Comma));
          }
          expect(Tok::RBrace, "'}'");
          std::sort(b.rat_domain.begin(), b.rat_domain.end());
          break;
        }
        case Tok::KwConst: {
          ++pos_;
          Token n = expect(Tok::Ident, "constant name");
          expect(Tok::Eq, "'='");
          ExprPtr v = parse_expr();
          if (!n.text.empty()) {
            if (!const_names.insert(n.text).second)
              error(n.loc, "duplicate constant value for '" + n.text + "'");
            b.constants.emplace_back(n.text, v);
          }
          break;
        }
        case Tok::KwParam: {
          ++pos_;
          Token ev = expect(Tok::Ident, "event name");
          expect(Tok::Dot, "'.'");
          Token p = expect(Tok::Ident, "parameter name");
          expect(Tok::Eq, "'='");
          expect(Tok::LBrace, "'{'");
          std::vector<ExprPtr> vals;
          if (!at(Tok::RBrace)) {
            do {
              vals.push_back(parse_expr());
            } while (eat(Tok::Comma));
          }
          expect(Tok::RBrace, "'}'");
          auto key = std::make_pair(ev.text, p.text);
          if (b.param_overrides.count(key))
            error(ev.loc, "duplicate override for " + ev.text + "." + p.text);
          else
            b.param_overrides.emplace(key, std::move(vals));
          break;
        }
        default:
          error(cur().loc, "expected 'atoms', 'rats', 'const' or 'param'");
          ++pos_;
          break;
      }
    }
    return b;
  }

 private:
  std::string file_;
  std::vector<Token> toks_;
  size_t pos_ = 0;
  std::vector<Diagnostic> diags_;
  bool allow_primed_ = false;
};

}  // namespace

ParsedFile parse_system(std::string_view text, const std::string& file) {
  Parser p(text, file);
  ParsedFile out;
  SystemSpec sys = p.parse_system_decl();
  out.diags = p.take_diags();
  if (!has_errors(out.diags)) out.system = std::move(sys);
  return out;
}

ParsedFile parse_refinement(std::string_view text, const std::string& file) {
  Parser p(text, file);
  ParsedFile out;
  RefinementSpec r = p.parse_refinement_decl();
  out.diags = p.take_diags();
  if (!has_errors(out.diags)) out.refinement = std::move(r);
  return out;
}

ParsedFile parse_any(std::string_view text, const std::string& file) {
  // cheap lookahead on the first token
  std::vector<Diagnostic> scratch;
  auto toks = lex(text, file, scratch);
  if (!toks.empty() && toks[0].kind == Tok::KwRefinement)
    return parse_refinement(text, file);
  return parse_system(text, file);
}

ParsedBounds parse_bounds(std::string_view text, const std::string& file) {
  Parser p(text, file);
  ParsedBounds out;
  BoundsDecl b = p.parse_bounds_decl();
  out.diags = p.take_diags();
  if (!has_errors(out.diags)) out.bounds = std::move(b);
  return out;
}

std::vector<Diagnostic> validate_refinement(const RefinementSpec& r,
                                            const SystemSpec& abs,
                                            const SystemSpec& conc) {
  std::vector<Diagnostic> ds;
  auto err = [&](const std::string& m) {
    ds.push_back({Diagnostic::Severity::Error, r.name, r.loc, m});
  };
  // variable namespaces must be disjoint
  std::unordered_set<std::string> abs_vars;
  for (const auto& [n, t] : abs.variables) {
    (void)t;
    abs_vars.insert(n);
  }
  for (const auto& [n, t] : conc.variables) {
    (void)t;
    if (abs_vars.count(n))
      err("variable '" + n + "' is declared in both systems (abstract and "
          "concrete variables must be disjoint)");
  }
  for (const auto& [cn, an] : r.refines) {
    const EventDecl* ce = conc.find_event(cn);
    const EventDecl* ae = abs.find_event(an);
    if (!ce) {
      err("refines entry names unknown concrete event '" + cn + "'");
      continue;
    }
    if (!ae) {
      err("refines entry names unknown abstract event '" + an + "'");
      continue;
    }
    // the abstract parameter list must be a prefix of the concrete one
    bool ok = ce->params.size() >= ae->params.size();
    for (size_t i = 0; ok && i < ae->params.size(); ++i)
      ok = ce->params[i].first == ae->params[i].first &&
           Type::same(ce->params[i].second, ae->params[i].second);
    if (!ok)
      err("event '" + cn + "' refines '" + an +
          "' but does not carry its parameters as a prefix");
  }
  for (const auto& [an, ws] : r.right_witnesses) {
    const EventDecl* ae = abs.find_event(an);
    if (!ae) {
      err("rightwitness entry names unknown abstract event '" + an + "'");
      continue;
    }
    if (!ae->has_right)
      err("rightwitness declared for '" + an +
          "' which has no right clause");
    for (const auto& w : ws) {
      const EventDecl* we = conc.find_event(w);
      if (!we) {
        err("rightwitness names unknown concrete event '" + w + "'");
        continue;
      }
      if (!we->has_right)
        err("witness event '" + w + "' declares no right clause");
      bool ok = we->params.size() >= ae->params.size();
      for (size_t i = 0; ok && i < ae->params.size(); ++i)
        ok = we->params[i].first == ae->params[i].first &&
             Type::same(we->params[i].second, ae->params[i].second);
      if (!ok)
        err("witness event '" + w + "' does not carry the parameters of '" +
            an + "' as a prefix");
    }
  }
  return ds;
}

}  // namespace fescheck
