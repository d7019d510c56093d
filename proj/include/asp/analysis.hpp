/*
 *  Copyright 2026 The asp authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "engine.hpp"
#include "grounder.hpp"
#include "syntax.hpp"

namespace asp {

// Levels per ground atom; explicitly negated literals rank as atoms of their
// own, so the keys are literals.
using LevelMapping = std::map<Literal, std::size_t>;

// A level mapping witnesses stratification when every rule has
// level(head) >= level of each positive body member and
// level(head) >  level of each negative body member.
//
// Built from the atom dependency graph: strongly connected components in
// dependency-first order, component index as level. A witness exists iff no
// cycle runs through a negative edge.
inline std::optional<LevelMapping> stratify(const GroundProgram& p) {
    std::set<Literal> node_set;
    for (const Atom& a : p.base) node_set.insert(Literal{false, a});
    for (const std::vector<Rule>* group : {&p.rules, &p.constraints})
        for (const Rule& r : *group)
            detail::for_each_literal(r, [&](const Literal& l) { node_set.insert(l); });

    std::vector<Literal> nodes(node_set.begin(), node_set.end());
    std::map<Literal, int> id;
    for (std::size_t i = 0; i < nodes.size(); ++i) id[nodes[i]] = static_cast<int>(i);
    const int n = static_cast<int>(nodes.size());

    struct Edge {
        int to;
        bool strict;  // through negation as failure
    };
    std::vector<std::vector<Edge>> out(n);
    for (const Rule& r : p.rules) {
        int head = id[*r.head];
        for (const Literal& l : r.pos) out[head].push_back({id[l], false});
        for (const Literal& l : r.neg) out[head].push_back({id[l], true});
    }

    // Tarjan; components complete dependencies-first, so the completion
    // index is already a valid level.
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    int next_index = 0, next_comp = 0;
    auto dfs = [&](auto&& self, int v) -> void {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = 1;
        for (const Edge& e : out[v]) {
            if (index[e.to] == -1) {
                self(self, e.to);
                low[v] = std::min(low[v], low[e.to]);
            } else if (on_stack[e.to]) {
                low[v] = std::min(low[v], index[e.to]);
            }
        }
        if (low[v] == index[v]) {
            for (;;) {
                int w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                comp[w] = next_comp;
                if (w == v) break;
            }
            ++next_comp;
        }
    };
    for (int v = 0; v < n; ++v)
        if (index[v] == -1) dfs(dfs, v);

    for (int v = 0; v < n; ++v)
        for (const Edge& e : out[v])
            if (e.strict && comp[v] == comp[e.to]) return std::nullopt;

    LevelMapping levels;
    for (int v = 0; v < n; ++v) levels[nodes[v]] = static_cast<std::size_t>(comp[v]);
    return levels;
}

// True iff the program has exactly one answer set. Stratified programs
// without explicit negation and without constraints are categorical without
// enumeration; the shortcut does not extend to extended programs.
inline bool is_categorical(const GroundProgram& p, const EnumOptions& opt = {}) {
    if (!has_explicit_negation(p) && p.constraints.empty() && stratify(p).has_value())
        return true;
    return enumerate_answer_sets(p, opt).size() == 1;
}

inline bool supports(const Rule& r, const Literal& l) { return r.head && *r.head == l; }

// The unique rule with head l, if there is exactly one.
inline std::optional<Rule> supported_only_by(const GroundProgram& p, const Literal& l) {
    const Rule* found = nullptr;
    for (const Rule& r : p.rules) {
        if (!supports(r, l)) continue;
        if (found) return std::nullopt;
        found = &r;
    }
    if (!found) return std::nullopt;
    return *found;
}

struct Justification {
    Literal literal;
    Rule rule;
    std::vector<Literal> pos_witness;  // verified members of the answer set
    std::vector<Literal> neg_witness;  // verified absent from the answer set
};

// For a member of a consistent answer set, a rule with that head whose
// positive body lies inside the set and negative body outside it. Such a
// rule always exists; ties break on canonical rule order.
inline std::optional<Justification> justify(const GroundProgram& p, const AnswerSet& a,
                                            const Literal& l) {
    if (!a.consistent || !consistent(a.literals))
        throw std::invalid_argument("justify: answer set is inconsistent");
    if (!is_stable(p, a.literals))
        throw std::invalid_argument("justify: candidate is not an answer set of the program");
    if (!contains(a.literals, l)) return std::nullopt;

    std::vector<Rule> order = p.rules;
    std::sort(order.begin(), order.end(), rule_less);
    for (const Rule& r : order) {
        if (!supports(r, l)) continue;
        if (!body_satisfied(r, a.literals)) continue;
        return Justification{l, r, r.pos, r.neg};
    }
    throw std::logic_error("justify: stable model member lacks a justifying rule");
}

// Checks the two halves of the supportedness property:
//  - closure: every rule whose body is satisfied has its head in the set;
//  - support: every member of a consistent set has a justifying rule.
// Returns one diagnostic per violation, in deterministic order.
inline std::vector<std::string> support_violations(const GroundProgram& p, const AnswerSet& a) {
    std::vector<std::string> out;
    for (const Rule& r : p.rules) {
        if (body_satisfied(r, a.literals) && !contains(a.literals, *r.head))
            out.push_back("closure violated: rule '" + to_string(r) + "' fires but head '" +
                          to_string(*r.head) + "' is missing");
    }
    if (consistent(a.literals)) {
        for (const Literal& l : sorted_literals(a.literals)) {
            bool justified = std::any_of(p.rules.begin(), p.rules.end(), [&](const Rule& r) {
                return supports(r, l) && body_satisfied(r, a.literals);
            });
            if (!justified)
                out.push_back("support violated: literal '" + to_string(l) +
                              "' has no justifying rule");
        }
    }
    return out;
}

inline bool verify_supportedness(const GroundProgram& p, const AnswerSet& a) {
    return support_violations(p, a).empty();
}

}  // namespace asp
