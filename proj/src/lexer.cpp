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

#include "fescheck/lexer.hpp"

#include <cctype>
#include <unordered_map>

namespace fescheck {

namespace {

const std::unordered_map<std::string_view, Tok>& keywords() {
  static const std::unordered_map<std::string_view, Tok> kw = {
      {"system", Tok::KwSystem},
      {"end", Tok::KwEnd},
      {"constants", Tok::KwConstants},
      {"assumption", Tok::KwAssumption},
      {"variables", Tok::KwVariables},
      {"invariant", Tok::KwInvariant},
      {"initial", Tok::KwInitial},
      {"event", Tok::KwEvent},
      {"fairness", Tok::KwFairness},
      {"permission", Tok::KwPermission},
      {"prohibition", Tok::KwProhibition},
      {"right", Tok::KwRight},
      {"obligation", Tok::KwObligation},
      {"strict", Tok::KwStrict},
      {"weak", Tok::KwWeak},
      {"refinement", Tok::KwRefinement},
      {"abstract", Tok::KwAbstract},
      {"concrete", Tok::KwConcrete},
      {"gluing", Tok::KwGluing},
      {"refines", Tok::KwRefines},
      {"rightwitness", Tok::KwRightWitness},
      {"forall", Tok::KwForall},
      {"exists", Tok::KwExists},
      {"not", Tok::KwNot},
      {"true", Tok::KwTrue},
      {"false", Tok::KwFalse},
      {"SUM", Tok::KwSum},
      {"dom", Tok::KwDom},
      {"BOOL", Tok::KwBool},
      {"RAT", Tok::KwRat},
      {"NAT", Tok::KwNat},
      {"SET", Tok::KwSet},
      {"MAP", Tok::KwMap},
      {"of", Tok::KwOf},
      {"to", Tok::KwTo},
      {"atoms", Tok::KwAtoms},
      {"rats", Tok::KwRats},
      {"const", Tok::KwConst},
      {"param", Tok::KwParam},
  };
  return kw;
}

// Backslash-spelled set-theory operators.
const std::unordered_map<std::string_view, Tok>& backslash_ops() {
  static const std::unordered_map<std::string_view, Tok> ops = {
      {"in", Tok::In},           {"notin", Tok::NotIn},
      {"subseteq", Tok::Subseteq}, {"union", Tok::Union},
      {"setminus", Tok::SetMinus}, {"times", Tok::Times},
  };
  return ops;
}

}  // namespace

std::vector<Token> lex(std::string_view text, const std::string& file,
                       std::vector<Diagnostic>& diags) {
  std::vector<Token> out;
  size_t i = 0;
  int line = 1, col = 1;
  auto loc = [&]() { return SourceLoc{line, col}; };
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto peek = [&](size_t off = 0) -> char {
    return i + off < text.size() ? text[i + off] : '\0';
  };
  auto push = [&](Tok k, SourceLoc l, std::string s) {
    out.push_back(Token{k, std::move(s), l});
  };

  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '-' && peek(1) == '-') {  // line comment
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    SourceLoc l = loc();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      std::string word(text.substr(i, j - i));
      advance(j - i);
      auto kw = keywords().find(word);
      if (kw != keywords().end()) {
        push(kw->second, l, word);
      } else if (peek() == '\'') {
        advance(1);
        push(Tok::PrimedIdent, l, word);
      } else {
        push(Tok::Ident, l, word);
      }
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      std::string word(text.substr(i, j - i));
      advance(j - i);
      push(Tok::Int, l, word);
      continue;
    }
    if (c == '\\') {
      size_t j = i + 1;
      while (j < text.size() &&
             std::isalpha(static_cast<unsigned char>(text[j])))
        ++j;
      std::string word(text.substr(i + 1, j - i - 1));
      auto op = backslash_ops().find(word);
      if (op != backslash_ops().end()) {
        advance(j - i);
        push(op->second, l, "\\" + word);
      } else {
        diags.push_back({Diagnostic::Severity::Error, file, l,
                         "unknown operator \\" + word});
        advance(j - i == 0 ? 1 : j - i);
        push(Tok::Error, l, "\\" + word);
      }
      continue;
    }
    // multi-char symbols, longest first
    auto try3 = [&](const char* s, Tok k) {
      if (peek() == s[0] && peek(1) == s[1] && peek(2) == s[2]) {
        advance(3);
        push(k, l, s);
        return true;
      }
      return false;
    };
    auto try2 = [&](const char* s, Tok k) {
      if (peek() == s[0] && peek(1) == s[1]) {
        advance(2);
        push(k, l, s);
        return true;
      }
      return false;
    };
    if (try3("|->", Tok::Maplet)) continue;
    if (try3("(+)", Tok::Oplus)) continue;
    if (try2("/\\", Tok::AndOp)) continue;
    if (try2("\\/", Tok::OrOp)) continue;
    if (try2("=>", Tok::ImpliesOp)) continue;
    if (try2("/=", Tok::Ne)) continue;
    if (try2("<=", Tok::Le)) continue;
    if (try2(">=", Tok::Ge)) continue;
    if (try2("->", Tok::Arrow)) continue;
    switch (c) {
      case '(': advance(1); push(Tok::LParen, l, "("); continue;
      case ')': advance(1); push(Tok::RParen, l, ")"); continue;
      case '{': advance(1); push(Tok::LBrace, l, "{"); continue;
      case '}': advance(1); push(Tok::RBrace, l, "}"); continue;
      case ',': advance(1); push(Tok::Comma, l, ","); continue;
      case ':': advance(1); push(Tok::Colon, l, ":"); continue;
      case '|': advance(1); push(Tok::Bar, l, "|"); continue;
      case '=': advance(1); push(Tok::Eq, l, "="); continue;
      case '<': advance(1); push(Tok::Lt, l, "<"); continue;
      case '>': advance(1); push(Tok::Gt, l, ">"); continue;
      case '+': advance(1); push(Tok::Plus, l, "+"); continue;
      case '-': advance(1); push(Tok::Minus, l, "-"); continue;
      case '*': advance(1); push(Tok::Star, l, "*"); continue;
      case '/': advance(1); push(Tok::Slash, l, "/"); continue;
      case '.': advance(1); push(Tok::Dot, l, "."); continue;
      default:
        diags.push_back({Diagnostic::Severity::Error, file, l,
                         std::string("unexpected character '") + c + "'"});
        advance(1);
        push(Tok::Error, l, std::string(1, c));
        continue;
    }
  }
  out.push_back(Token{Tok::End, "", loc()});
  return out;
}

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::PrimedIdent: return "primed identifier";
    case Tok::Int: return "integer";
    default: return "token";
  }
}

}  // namespace fescheck
