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

#ifndef FESCHECK_LIMITS_HPP
#define FESCHECK_LIMITS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fescheck {

// Resource caps. Defaults can be overridden by the environment variables
// FESCHECK_STATE_LIMIT and FESCHECK_ENUM_LIMIT, and by CLI flags.
struct Limits {
  uint64_t state_limit = 200000;    // max states in a transition graph
  uint64_t enum_limit = 5000000;    // max candidates tried per enumeration
  int jobs = 1;                     // worker threads for parallel checks

  static Limits from_env();
};

// Thrown when an enumeration would exceed enum_limit ("refuse to enumerate").
struct ExplosionError : std::runtime_error {
  explicit ExplosionError(const std::string& what) : std::runtime_error(what) {}
};

// Per-enumeration work budget.
struct EnumBudget {
  uint64_t limit;
  uint64_t used = 0;

  explicit EnumBudget(const Limits& lim) : limit(lim.enum_limit) {}
  explicit EnumBudget(uint64_t n) : limit(n) {}

  void charge(uint64_t n, const char* what) {
    used += n;
    if (used > limit)
      throw ExplosionError(std::string(what) +
                           ": enumeration limit exceeded (" +
                           std::to_string(limit) + ")");
  }
};

}  // namespace fescheck

#endif
