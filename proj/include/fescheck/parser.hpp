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

#ifndef FESCHECK_PARSER_HPP
#define FESCHECK_PARSER_HPP

#include <optional>
#include <string>
#include <string_view>

#include "fescheck/ast.hpp"

namespace fescheck {

// Parsing is total: any byte stream yields either an AST or diagnostics.
struct ParsedFile {
  std::optional<SystemSpec> system;
  std::optional<RefinementSpec> refinement;
  std::vector<Diagnostic> diags;
  bool ok() const { return !has_errors(diags); }
};

struct ParsedBounds {
  std::optional<BoundsDecl> bounds;
  std::vector<Diagnostic> diags;
  bool ok() const { return !has_errors(diags); }
};

ParsedFile parse_system(std::string_view text, const std::string& file);
ParsedFile parse_refinement(std::string_view text, const std::string& file);
// Dispatches on the leading keyword (`system` or `refinement`).
ParsedFile parse_any(std::string_view text, const std::string& file);

ParsedBounds parse_bounds(std::string_view text, const std::string& file);

// Cross-file refinement validations: event names in the refines map exist,
// refining events carry the abstract parameters as a prefix, variable
// namespaces of the two systems are disjoint, witnesses declare rights.
std::vector<Diagnostic> validate_refinement(const RefinementSpec& r,
                                            const SystemSpec& abs,
                                            const SystemSpec& conc);

}  // namespace fescheck

#endif
