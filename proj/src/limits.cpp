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

#include "fescheck/limits.hpp"

#include <cstdlib>

namespace fescheck {

Limits Limits::from_env() {
  Limits lim;
  if (const char* s = std::getenv("FESCHECK_STATE_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) lim.state_limit = v;
  }
  if (const char* s = std::getenv("FESCHECK_ENUM_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) lim.enum_limit = v;
  }
  return lim;
}

}  // namespace fescheck
