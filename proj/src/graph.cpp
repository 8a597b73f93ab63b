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

#include "fescheck/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fescheck {

std::string TransitionGraph::edge_str(const Edge& e) const {
  std::string l = e.label == kStutter ? "STUTTER" : label(e.label).str(*sys);
  return "s" + std::to_string(e.src) + " --" + l + "--> s" +
         std::to_string(e.dst);
}

size_t TransitionGraph::labeled_edge_count() const {
  size_t n = 0;
  for (const auto& e : edges)
    if (e.label != kStutter) ++n;
  return n;
}

TriResult TransitionGraph::fair_holds(int instance_id, int state_idx) const {
  const EventInstance& inst = label(instance_id);
  const EventDecl& ev = sys->spec.events[inst.event];
  return eval_clause(*sys, ev.fairness, states[state_idx], inst);
}

namespace {

// Split a state predicate into conjuncts and derive assignment slots for
// conjuncts of shape `v = expr` / `v \in expr` where expr reads only
// already-assigned (earlier) variables.
void state_slots(const TypedSystem& sys, const ExprPtr& pred,
                 ValuationProblem& problem) {
  std::vector<ExprPtr> conjuncts;
  std::function<void(const ExprPtr&)> collect = [&](const ExprPtr& e) {
    if (e->kind == ExprKind::And) {
      collect(e->kids[0]);
      collect(e->kids[1]);
    } else {
      conjuncts.push_back(e);
    }
  };
  collect(pred);

  size_t nvars = sys.spec.variables.size();
  std::vector<bool> defined(nvars, false);
  std::vector<const ExprPtr*> def_rhs(nvars, nullptr);
  std::vector<bool> def_member(nvars, false);
  std::vector<ExprPtr> filters;

  std::function<void(const Expr&, std::vector<int>&)> vars_of =
      [&](const Expr& e, std::vector<int>& out) {
        if (e.kind == ExprKind::Ident && e.ref == RefKind::Variable)
          out.push_back(e.ref_index);
        for (const auto& k : e.kids) vars_of(*k, out);
      };

  for (const auto& c : conjuncts) {
    bool matched = false;
    if ((c->kind == ExprKind::Eq || c->kind == ExprKind::InSet) &&
        c->kids[0]->kind == ExprKind::Ident &&
        c->kids[0]->ref == RefKind::Variable) {
      int vi = c->kids[0]->ref_index;
      std::vector<int> rhs_vars;
      vars_of(*c->kids[1], rhs_vars);
      bool rhs_ok = std::all_of(rhs_vars.begin(), rhs_vars.end(),
                                [&](int v) { return v < vi; });
      if (!defined[vi] && rhs_ok) {
        defined[vi] = true;
        def_rhs[vi] = &c->kids[1];
        def_member[vi] = c->kind == ExprKind::InSet;
        matched = true;
      }
    }
    if (!matched) filters.push_back(c);
  }

  for (size_t v = 0; v < nvars; ++v) {
    Slot s;
    s.var = static_cast<int>(v);
    if (defined[v]) {
      s.source = def_member[v] ? Slot::Source::EvalSet : Slot::Source::EvalOne;
      s.rhs = *def_rhs[v];
    } else {
      s.source = Slot::Source::Carrier;
    }
    problem.slots.push_back(std::move(s));
  }
  problem.conjuncts = std::move(filters);
  problem.primed = false;
}

// Solved slots may produce values outside the declared carriers; those
// valuations are not "type-correct" and are excluded here.
bool solved_in_carrier(const TypedSystem& sys, const std::vector<Value>& vals,
                       const ValuationProblem& problem) {
  for (const auto& slot : problem.slots) {
    if (slot.source == Slot::Source::Carrier) continue;
    if (!value_in_carrier(sys, vals[slot.var],
                          *sys.spec.variables[slot.var].second))
      return false;
  }
  return true;
}

}  // namespace

InitialResult initial_states(const TypedSystem& sys, const Limits& limits) {
  InitialResult out;
  ValuationProblem problem;
  state_slots(sys, sys.spec.initial, problem);

  EvalEnv env(sys);
  std::vector<Value> work(sys.spec.variables.size());
  env.state_vals = &work;
  EnumBudget budget(limits);
  try {
    EnumOutcome res = enumerate_valuations(
        sys, problem, env, work, budget, [&](const std::vector<Value>& vals) {
          if (solved_in_carrier(sys, vals, problem))
            out.states.emplace_back(vals);
          return true;
        });
    if (res.fault) {
      out.fault = res.fault;
      return out;
    }
  } catch (const ExplosionError& ex) {
    out.fault = Fault{ex.what(), sys.spec.initial->loc};
    return out;
  }
  std::sort(out.states.begin(), out.states.end());
  out.states.erase(std::unique(out.states.begin(), out.states.end()),
                   out.states.end());
  if (out.states.empty()) out.warnings.push_back("no initial states");
  return out;
}

GraphResult build_graph(TypedSystemPtr sys, const Limits& limits) {
  GraphResult out;
  TransitionGraph g;
  g.sys = sys;

  // instance registry
  for (size_t ei = 0; ei < sys->spec.events.size(); ++ei) {
    int begin = static_cast<int>(g.instances.size());
    auto insts = enumerate_instances(*sys, static_cast<int>(ei));
    for (auto& inst : insts) g.instances.push_back(std::move(inst));
    g.event_instances.emplace_back(begin,
                                   static_cast<int>(g.instances.size()));
    if (!sys->spec.events[ei].fairness_is_false()) {
      for (int k = begin; k < static_cast<int>(g.instances.size()); ++k)
        g.fairness.push_back(k);
    }
  }

  InitialResult init = initial_states(*sys, limits);
  if (init.fault) {
    out.fault = init.fault;
    return out;
  }
  out.warnings = init.warnings;

  std::deque<int> frontier;
  auto intern = [&](const State& s) {
    auto it = g.index.find(s);
    if (it != g.index.end()) return it->second;
    int idx = static_cast<int>(g.states.size());
    g.states.push_back(s);
    g.index.emplace(s, idx);
    frontier.push_back(idx);
    return idx;
  };

  for (const auto& s : init.states) g.init.push_back(intern(s));

  EnumBudget succ_budget(limits.enum_limit);
  while (!frontier.empty()) {
    int si = frontier.front();
    frontier.pop_front();
    if (g.states.size() > limits.state_limit) {
      out.fault = Fault{
          "state limit exceeded (" + std::to_string(limits.state_limit) +
              "); partial graph discarded",
          {}};
      return out;
    }
    State s = g.states[si];  // copy: interning may reallocate the vector
    for (int inst_id = 0; inst_id < static_cast<int>(g.instances.size());
         ++inst_id) {
      succ_budget.used = 0;
      SuccessorResult succ;
      try {
        succ = successors(*sys, s, g.instances[inst_id], succ_budget);
      } catch (const ExplosionError& ex) {
        out.fault = Fault{ex.what(), {}};
        return out;
      }
      if (succ.fault) {
        out.fault = succ.fault;
        out.fault->message +=
            " (exploring from state " + s.str(*sys) + ")";
        return out;
      }
      for (const auto& t : succ.states) {
        int ti = intern(t);
        g.edges.push_back({si, inst_id, ti});
        if (g.states.size() > limits.state_limit) {
          out.fault = Fault{
              "state limit exceeded (" + std::to_string(limits.state_limit) +
                  "); partial graph discarded",
              {}};
          return out;
        }
      }
    }
  }

  // stutter self-loops everywhere
  for (int i = 0; i < static_cast<int>(g.states.size()); ++i)
    g.edges.push_back({i, TransitionGraph::kStutter, i});

  std::sort(g.edges.begin(), g.edges.end(),
            [](const TransitionGraph::Edge& a, const TransitionGraph::Edge& b) {
              if (a.src != b.src) return a.src < b.src;
              if (a.label != b.label) return a.label < b.label;
              return a.dst < b.dst;
            });
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end(),
                            [](const auto& a, const auto& b) {
                              return a.src == b.src && a.label == b.label &&
                                     a.dst == b.dst;
                            }),
                g.edges.end());
  g.out.resize(g.states.size());
  for (size_t i = 0; i < g.edges.size(); ++i)
    g.out[g.edges[i].src].push_back(static_cast<int>(i));

  out.graph = std::move(g);
  return out;
}

std::optional<Fault> enumerate_invariant_states(
    const TypedSystem& sys, const Limits& limits,
    const std::function<bool(const State&)>& yield) {
  ValuationProblem problem;
  state_slots(sys, sys.spec.invariant, problem);

  EvalEnv env(sys);
  std::vector<Value> work(sys.spec.variables.size());
  env.state_vals = &work;
  EnumBudget budget(limits);
  try {
    EnumOutcome res = enumerate_valuations(
        sys, problem, env, work, budget, [&](const std::vector<Value>& vals) {
          if (!solved_in_carrier(sys, vals, problem)) return true;
          return yield(State(vals));
        });
    if (res.fault) return res.fault;
  } catch (const ExplosionError& ex) {
    return Fault{ex.what(), sys.spec.invariant->loc};
  }
  return std::nullopt;
}

nlohmann::json state_to_json(const TypedSystem& sys, const State& s) {
  nlohmann::json j;
  for (size_t i = 0; i < s.size(); ++i)
    j[sys.spec.variables[i].first] = s.at(static_cast<int>(i)).to_json();
  return j;
}

nlohmann::json graph_to_json(const TransitionGraph& g) {
  using nlohmann::json;
  json j;
  j["system"] = g.sys->spec.name;
  json states = json::array();
  for (const auto& s : g.states) states.push_back(state_to_json(*g.sys, s));
  j["states"] = states;
  j["init"] = g.init;
  json edges = json::array();
  for (const auto& e : g.edges) {
    json je;
    je["src"] = e.src;
    je["dst"] = e.dst;
    if (e.label == TransitionGraph::kStutter) {
      je["stutter"] = true;
    } else {
      const EventInstance& inst = g.label(e.label);
      je["event"] = g.sys->spec.events[inst.event].name;
      json args = json::array();
      for (const auto& a : inst.args) args.push_back(a.to_json());
      je["args"] = args;
    }
    edges.push_back(je);
  }
  j["edges"] = edges;
  json fair = json::array();
  for (int id : g.fairness) {
    const EventInstance& inst = g.label(id);
    json jf;
    jf["event"] = g.sys->spec.events[inst.event].name;
    json args = json::array();
    for (const auto& a : inst.args) args.push_back(a.to_json());
    jf["args"] = args;
    fair.push_back(jf);
  }
  j["fairness"] = fair;
  return j;
}

std::string graph_to_dot(const TransitionGraph& g, bool include_stutter) {
  std::ostringstream os;
  os << "digraph \"" << g.sys->spec.name << "\" {\n";
  os << "  rankdir=LR;\n";
  for (size_t i = 0; i < g.states.size(); ++i) {
    bool is_init =
        std::find(g.init.begin(), g.init.end(), static_cast<int>(i)) !=
        g.init.end();
    os << "  s" << i << " [label=\"s" << i << "\""
       << (is_init ? ", shape=doublecircle" : "") << "];\n";
  }
  for (const auto& e : g.edges) {
    if (e.label == TransitionGraph::kStutter && !include_stutter) continue;
    std::string l = e.label == TransitionGraph::kStutter
                        ? "stutter"
                        : g.label(e.label).str(*g.sys);
    os << "  s" << e.src << " -> s" << e.dst << " [label=\"" << l << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace fescheck
