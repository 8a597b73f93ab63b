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

#include "fescheck/value.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fescheck {

namespace {

inline size_t mix(size_t h, size_t v) {
  // 64-bit FNV-ish combine
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

size_t hash_rat(const Rational& r) {
  std::ostringstream os;
  os << r;
  return std::hash<std::string>{}(os.str());
}

}  // namespace

std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Value Value::boolean(bool b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bool;
  n->b = b;
  n->hash = mix(1, b ? 2 : 1);
  return Value(std::move(n));
}

Value Value::rat(Rational r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Rat;
  n->rat = std::move(r);
  n->hash = mix(2, hash_rat(n->rat));
  return Value(std::move(n));
}

Value Value::rat(long num, long den) { return rat(Rational(num, den)); }

Value Value::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(name);
  n->hash = mix(3, std::hash<std::string>{}(n->name));
  return Value(std::move(n));
}

Value Value::set(std::vector<Value> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  auto n = std::make_shared<Node>();
  n->kind = Kind::Set;
  size_t h = 4;
  for (const auto& e : elems) h = mix(h, e.hash());
  n->elems = std::move(elems);
  n->hash = h;
  return Value(std::move(n));
}

std::optional<Value> Value::map(std::vector<std::pair<Value, Value>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) {
              int c = compare(a.first, b.first);
              if (c != 0) return c < 0;
              return compare(a.second, b.second) < 0;
            });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const auto& a, const auto& b) {
                              return a.first == b.first && a.second == b.second;
                            }),
                entries.end());
  for (size_t i = 1; i < entries.size(); ++i)
    if (entries[i].first == entries[i - 1].first) return std::nullopt;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Map;
  size_t h = 5;
  for (const auto& [k, v] : entries) {
    h = mix(h, k.hash());
    h = mix(h, v.hash());
  }
  n->entries = std::move(entries);
  n->hash = h;
  return Value(std::move(n));
}

Value Value::empty_map() { return *map({}); }

Value Value::pair(Value a, Value b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pair;
  n->hash = mix(mix(6, a.hash()), b.hash());
  n->elems = {std::move(a), std::move(b)};
  return Value(std::move(n));
}

int compare(const Value& a, const Value& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind())
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case Value::Kind::Bool:
      return a.as_bool() == b.as_bool() ? 0 : (a.as_bool() ? 1 : -1);
    case Value::Kind::Rat: {
      if (a.as_rat() < b.as_rat()) return -1;
      if (b.as_rat() < a.as_rat()) return 1;
      return 0;
    }
    case Value::Kind::Atom:
      return a.atom_name().compare(b.atom_name()) < 0
                 ? -1
                 : (a.atom_name() == b.atom_name() ? 0 : 1);
    case Value::Kind::Set: {
      const auto& xs = a.node_->elems;
      const auto& ys = b.node_->elems;
      size_t n = std::min(xs.size(), ys.size());
      for (size_t i = 0; i < n; ++i) {
        int c = compare(xs[i], ys[i]);
        if (c != 0) return c;
      }
      if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
      return 0;
    }
    case Value::Kind::Map: {
      const auto& xs = a.node_->entries;
      const auto& ys = b.node_->entries;
      size_t n = std::min(xs.size(), ys.size());
      for (size_t i = 0; i < n; ++i) {
        int c = compare(xs[i].first, ys[i].first);
        if (c != 0) return c;
        c = compare(xs[i].second, ys[i].second);
        if (c != 0) return c;
      }
      if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
      return 0;
    }
    case Value::Kind::Pair: {
      int c = compare(a.first(), b.first());
      if (c != 0) return c;
      return compare(a.second(), b.second());
    }
  }
  return 0;
}

std::optional<Value> Value::apply(const Value& key) const {
  const auto& es = node_->entries;
  auto it = std::lower_bound(
      es.begin(), es.end(), key,
      [](const auto& e, const Value& k) { return compare(e.first, k) < 0; });
  if (it != es.end() && it->first == key) return it->second;
  return std::nullopt;
}

std::string Value::str() const {
  switch (kind()) {
    case Kind::Bool:
      return as_bool() ? "true" : "false";
    case Kind::Rat:
      return rat_str(as_rat());
    case Kind::Atom:
      return atom_name();
    case Kind::Set: {
      std::string s = "{";
      bool sep = false;
      for (const auto& e : elems()) {
        if (sep) s += ", ";
        s += e.str();
        sep = true;
      }
      return s + "}";
    }
    case Kind::Map: {
      std::string s = "{";
      bool sep = false;
      for (const auto& [k, v] : entries()) {
        if (sep) s += ", ";
        s += k.str() + " |-> " + v.str();
        sep = true;
      }
      return s + "}";
    }
    case Kind::Pair:
      return "(" + first().str() + ", " + second().str() + ")";
  }
  return "?";
}

nlohmann::json Value::to_json() const {
  using nlohmann::json;
  switch (kind()) {
    case Kind::Bool:
      return as_bool();
    case Kind::Rat:
      return rat_str(as_rat());
    case Kind::Atom:
      return atom_name();
    case Kind::Set: {
      json a = json::array();
      for (const auto& e : elems()) a.push_back(e.to_json());
      return json{{"set", a}};
    }
    case Kind::Map: {
      json a = json::array();
      for (const auto& [k, v] : entries())
        a.push_back(json::array({k.to_json(), v.to_json()}));
      return json{{"map", a}};
    }
    case Kind::Pair:
      return json{{"pair", json::array({first().to_json(), second().to_json()})}};
  }
  return nullptr;
}

}  // namespace fescheck
