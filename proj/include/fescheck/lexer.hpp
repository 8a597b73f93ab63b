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

#ifndef FESCHECK_LEXER_HPP
#define FESCHECK_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fescheck/diagnostics.hpp"

namespace fescheck {

enum class Tok : uint8_t {
  End,
  Ident,
  PrimedIdent,  // foo'
  Int,
  // keywords
  KwSystem, KwEnd, KwConstants, KwAssumption, KwVariables, KwInvariant,
  KwInitial, KwEvent, KwFairness, KwPermission, KwProhibition, KwRight,
  KwObligation, KwStrict, KwWeak,
  KwRefinement, KwAbstract, KwConcrete, KwGluing, KwRefines, KwRightWitness,
  KwForall, KwExists, KwNot, KwTrue, KwFalse, KwSum, KwDom,
  KwBool, KwRat, KwNat, KwSet, KwMap, KwOf, KwTo,
  KwAtoms, KwRats, KwConst, KwParam,
  // symbols
  LParen, RParen, LBrace, RBrace, Comma, Colon, Bar, Arrow, Maplet, Oplus,
  AndOp, OrOp, ImpliesOp, Eq, Ne, Lt, Le, Gt, Ge,
  In, NotIn, Subseteq, Union, SetMinus, Times,
  Plus, Minus, Star, Slash, Dot,
  Error,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceLoc loc;
};

// Tokenizes the whole input. Never throws: unknown characters become Error
// tokens with a diagnostic.
std::vector<Token> lex(std::string_view text, const std::string& file,
                       std::vector<Diagnostic>& diags);

const char* tok_name(Tok t);

}  // namespace fescheck

#endif
