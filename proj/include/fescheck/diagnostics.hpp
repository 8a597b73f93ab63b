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

#ifndef FESCHECK_DIAGNOSTICS_HPP
#define FESCHECK_DIAGNOSTICS_HPP

#include <string>
#include <vector>

namespace fescheck {

struct SourceLoc {
  int line = 0;  // 1-based; 0 = unknown
  int col = 0;
};

struct Diagnostic {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  std::string file;
  SourceLoc loc;
  std::string message;

  // Rendered as "file:line:col: severity: message".
  std::string str() const {
    std::string s = file.empty() ? "<input>" : file;
    s += ":" + std::to_string(loc.line) + ":" + std::to_string(loc.col) + ": ";
    s += severity == Severity::Error ? "error: " : "warning: ";
    s += message;
    return s;
  }
};

inline bool has_errors(const std::vector<Diagnostic>& ds) {
  for (const auto& d : ds)
    if (d.severity == Diagnostic::Severity::Error) return true;
  return false;
}

}  // namespace fescheck

#endif
