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

#ifndef FESCHECK_VALUE_HPP
#define FESCHECK_VALUE_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace fescheck {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Closed set-theoretic value universe: booleans, exact rationals, atoms,
// finite sets, finite maps, pairs. Canonical form is unique: sets and maps
// are kept sorted and duplicate-free, rationals reduced. Equality is
// structural and a total order is defined over all values.
class Value {
 public:
  enum class Kind : uint8_t { Bool, Rat, Atom, Set, Map, Pair };

  Value() : Value(boolean(false)) {}

  static Value boolean(bool b);
  static Value rat(Rational r);
  static Value rat(long num, long den = 1);
  static Value atom(std::string name);
  // Sorts and deduplicates.
  static Value set(std::vector<Value> elems);
  // Sorts by key. Returns nullopt if two entries share a key with different
  // attached values (duplicate identical entries are merged).
  static std::optional<Value> map(std::vector<std::pair<Value, Value>> entries);
  static Value empty_map();
  static Value pair(Value a, Value b);

  Kind kind() const { return node_->kind; }
  bool is_bool() const { return kind() == Kind::Bool; }
  bool is_rat() const { return kind() == Kind::Rat; }
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_set() const { return kind() == Kind::Set; }
  bool is_map() const { return kind() == Kind::Map; }
  bool is_pair() const { return kind() == Kind::Pair; }

  bool as_bool() const { return node_->b; }
  const Rational& as_rat() const { return node_->rat; }
  const std::string& atom_name() const { return node_->name; }
  const std::vector<Value>& elems() const { return node_->elems; }  // Set
  const std::vector<std::pair<Value, Value>>& entries() const {     // Map
    return node_->entries;
  }
  const Value& first() const { return node_->elems[0]; }   // Pair
  const Value& second() const { return node_->elems[1]; }  // Pair

  size_t hash() const { return node_->hash; }

  // Total order: kinds ordered Bool < Rat < Atom < Set < Map < Pair, then
  // structurally (lexicographic for aggregates).
  friend int compare(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b) {
    return a.node_ == b.node_ || compare(a, b) == 0;
  }
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
  friend bool operator<(const Value& a, const Value& b) {
    return compare(a, b) < 0;
  }

  // Map lookup; nullopt when the key is outside the domain.
  std::optional<Value> apply(const Value& key) const;

  std::string str() const;
  nlohmann::json to_json() const;

 private:
  struct Node {
    Kind kind;
    bool b = false;
    Rational rat;
    std::string name;
    std::vector<Value> elems;                        // Set elements / Pair(2)
    std::vector<std::pair<Value, Value>> entries;    // Map
    size_t hash = 0;
  };
  explicit Value(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct ValueHash {
  size_t operator()(const Value& v) const { return v.hash(); }
};

std::string rat_str(const Rational& r);

}  // namespace fescheck

#endif
