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

#ifndef FESCHECK_PRETTY_HPP
#define FESCHECK_PRETTY_HPP

#include <string>

#include "fescheck/ast.hpp"

namespace fescheck {

// Canonical concrete syntax; parse(pretty(ast)) reproduces the AST.
std::string pretty_expr(const Expr& e);
std::string pretty_system(const SystemSpec& sys);
std::string pretty_refinement(const RefinementSpec& r);

}  // namespace fescheck

#endif
