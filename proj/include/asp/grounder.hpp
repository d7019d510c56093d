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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "syntax.hpp"

namespace asp {

struct GroundProgram {
    std::vector<Rule> rules;        // ground, duplicates removed, deterministic order
    std::vector<Rule> constraints;  // ground
    std::set<Atom> base;            // Herbrand base
};

inline bool has_explicit_negation(const GroundProgram& p) {
    return detail::any_negated(p.rules) || detail::any_negated(p.constraints);
}

// All ground atoms formable from the program's predicates and constants.
// Arity-0 predicates contribute themselves even when there are no constants.
inline std::set<Atom> herbrand_base(const Program& p) {
    std::set<Atom> base;
    std::vector<std::string> consts(p.constants.begin(), p.constants.end());
    for (const auto& [pred, arity] : p.predicates) {
        if (arity == 0) {
            base.insert(Atom{pred, {}});
            continue;
        }
        if (consts.empty()) continue;
        std::vector<std::size_t> idx(arity, 0);
        for (;;) {
            Atom a;
            a.predicate = pred;
            for (std::size_t i : idx) a.args.push_back(constant(consts[i]));
            base.insert(std::move(a));
            std::size_t k = arity;
            while (k > 0 && ++idx[k - 1] == consts.size()) idx[--k] = 0;
            if (k == 0) break;
        }
    }
    return base;
}

struct GroundOptions {
    // Drop ground rules whose positive body mentions a literal that heads no
    // rule; such literals can never enter any answer set. Off by default so
    // grounding stays a pure cross-product.
    bool prune = false;
};

namespace detail {

inline std::vector<std::string> rule_variables(const Rule& r) {
    std::vector<std::string> vars;
    std::set<std::string> seen;
    for_each_literal(r, [&](const Literal& l) {
        for (const Term& t : l.atom.args)
            if (t.is_variable() && seen.insert(t.name).second) vars.push_back(t.name);
    });
    return vars;
}

inline Rule substitute(const Rule& r, const std::map<std::string, std::string>& binding) {
    Rule out = r;
    auto apply = [&](Literal& l) {
        for (Term& t : l.atom.args)
            if (t.is_variable()) t = constant(binding.at(t.name));
    };
    if (out.head) apply(*out.head);
    for (Literal& l : out.pos) apply(l);
    for (Literal& l : out.neg) apply(l);
    dedupe_body(out);  // distinct variables may collapse onto one constant
    return out;
}

}  // namespace detail

// Full cross-product instantiation: a rule with v distinct variables over c
// constants yields c^v ground instances.
inline GroundProgram ground(const Program& p, GroundOptions opt = {}) {
    GroundProgram g;
    g.base = herbrand_base(p);
    std::vector<std::string> consts(p.constants.begin(), p.constants.end());

    std::set<std::string> seen_rules;
    std::set<std::string> seen_constraints;
    auto emit = [&](Rule r) {
        std::string key = to_string(r);
        if (r.is_constraint()) {
            if (seen_constraints.insert(key).second) g.constraints.push_back(std::move(r));
        } else {
            if (seen_rules.insert(key).second) g.rules.push_back(std::move(r));
        }
    };
    auto instantiate = [&](const Rule& r) {
        std::vector<std::string> vars = detail::rule_variables(r);
        if (vars.empty()) {
            emit(r);
            return;
        }
        if (consts.empty()) return;  // vacuous shorthand: nothing to instantiate over
        std::vector<std::size_t> idx(vars.size(), 0);
        for (;;) {
            std::map<std::string, std::string> binding;
            for (std::size_t i = 0; i < vars.size(); ++i) binding[vars[i]] = consts[idx[i]];
            emit(detail::substitute(r, binding));
            std::size_t k = vars.size();
            while (k > 0 && ++idx[k - 1] == consts.size()) idx[--k] = 0;
            if (k == 0) break;
        }
    };

    for (const Rule& r : p.rules) instantiate(r);
    for (const Rule& c : p.constraints) instantiate(c);

    if (opt.prune) {
        std::set<Literal> heads;
        for (const Rule& r : g.rules) heads.insert(*r.head);
        auto keep = [&](const Rule& r) {
            for (const Literal& l : r.pos)
                if (!heads.count(l)) return false;
            return true;
        };
        std::erase_if(g.rules, [&](const Rule& r) { return !keep(r); });
        std::erase_if(g.constraints, [&](const Rule& c) { return !keep(c); });
    }
    return g;
}

}  // namespace asp
