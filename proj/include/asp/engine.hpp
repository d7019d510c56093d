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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "grounder.hpp"
#include "syntax.hpp"

namespace asp {

using CandidateSet = std::unordered_set<Literal>;

struct AnswerSet {
    CandidateSet literals;
    bool consistent = true;  // false: literals is the saturated all-literal set
};

struct SearchLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OracleLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultNodeCap = 1'000'000;

struct EnumOptions {
    std::optional<std::size_t> max_models{};
    std::size_t node_cap = kDefaultNodeCap;
    bool forbid_inconsistent = false;
};

inline bool contains(const CandidateSet& s, const Literal& l) { return s.find(l) != s.end(); }

inline bool consistent(const CandidateSet& s) {
    for (const Literal& l : s)
        if (l.negated && contains(s, l.complement())) return false;
    return true;
}

// Body satisfaction under a candidate: positive literals present, negated
// (as failure) literals absent. Also the firing condition for constraints.
inline bool body_satisfied(const Rule& r, const CandidateSet& s) {
    for (const Literal& l : r.pos)
        if (!contains(s, l)) return false;
    for (const Literal& l : r.neg)
        if (contains(s, l)) return false;
    return true;
}

inline std::vector<Literal> sorted_literals(const CandidateSet& s) {
    std::vector<Literal> out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string to_string(const CandidateSet& s) {
    std::string out = "{";
    bool first = true;
    for (const Literal& l : sorted_literals(s)) {
        if (!first) out += ", ";
        out += to_string(l);
        first = false;
    }
    return out + "}";
}

// A set containing a complementary pair collapses to the set of all literals
// over the base; anything else passes through unchanged.
inline CandidateSet saturate_inconsistent(const CandidateSet& s, const std::set<Atom>& base) {
    if (consistent(s)) return s;
    CandidateSet all;
    for (const Atom& a : base) {
        all.insert(Literal{false, a});
        all.insert(Literal{true, a});
    }
    return all;
}

// One application of the immediate consequence operator: add the head of
// every rule whose positive body is contained in s. Monotone in s.
inline CandidateSet tp_step(const GroundProgram& p, const CandidateSet& s) {
    for (const Rule& r : p.rules)
        if (!r.neg.empty()) throw std::logic_error("tp_step: program is not positive");
    for (const Rule& c : p.constraints)
        if (!c.neg.empty()) throw std::logic_error("tp_step: program is not positive");
    CandidateSet out = s;
    for (const Rule& r : p.rules) {
        bool fires = std::all_of(r.pos.begin(), r.pos.end(),
                                 [&](const Literal& l) { return contains(s, l); });
        if (fires) out.insert(*r.head);
    }
    return out;
}

// Least set closed under the rules of a positive program, computed as the
// limit of tp_step iterated from the empty set. If the closure derives a
// complementary pair it saturates to the all-literal set.
inline CandidateSet minimal_model(const GroundProgram& p, std::size_t* steps = nullptr) {
    CandidateSet cur;
    std::size_t n = 0;
    for (;;) {
        CandidateSet next = tp_step(p, cur);
        ++n;
        if (next == cur) break;
        cur = std::move(next);
    }
    if (steps) *steps = n;
    return saturate_inconsistent(cur, p.base);
}

// Gelfond-Lifschitz transform: drop every rule blocked by s via a negative
// body literal, erase the negative bodies of the rest. Constraints are
// reduced the same way and kept separate.
inline GroundProgram reduct(const GroundProgram& p, const CandidateSet& s) {
    GroundProgram out;
    out.base = p.base;
    auto blocked = [&](const Rule& r) {
        return std::any_of(r.neg.begin(), r.neg.end(),
                           [&](const Literal& l) { return contains(s, l); });
    };
    for (const Rule& r : p.rules) {
        if (blocked(r)) continue;
        Rule kept = r;
        kept.neg.clear();
        out.rules.push_back(std::move(kept));
    }
    for (const Rule& c : p.constraints) {
        if (blocked(c)) continue;
        Rule kept = c;
        kept.neg.clear();
        out.constraints.push_back(std::move(kept));
    }
    return out;
}

// s is stable iff it reproduces itself as the minimal model of its own
// reduct and no constraint body is satisfied by it.
inline bool is_stable(const GroundProgram& p, const CandidateSet& s) {
    if (minimal_model(reduct(p, s)) != s) return false;
    for (const Rule& c : p.constraints)
        if (body_satisfied(c, s)) return false;
    return true;
}

inline AnswerSet make_answer_set(CandidateSet s) {
    bool c = consistent(s);
    return AnswerSet{std::move(s), c};
}

// Canonical order: cardinality first, then lexicographic on the sorted
// literal sequence.
inline bool answer_set_less(const AnswerSet& a, const AnswerSet& b) {
    if (a.literals.size() != b.literals.size()) return a.literals.size() < b.literals.size();
    return sorted_literals(a.literals) < sorted_literals(b.literals);
}

// All literals a candidate may range over: the base, both signs when the
// program mentions explicit negation. For programs without it no explicitly
// negated literal can head a rule, so only plain atoms can ever be derived.
inline std::vector<Literal> literal_universe(const GroundProgram& p) {
    std::vector<Literal> out;
    for (const Atom& a : p.base) out.push_back(Literal{false, a});
    if (has_explicit_negation(p))
        for (const Atom& a : p.base) out.push_back(Literal{true, a});
    std::sort(out.begin(), out.end());
    return out;
}

// Backtracking enumeration. The negative body literals of the rules are the
// sole source of nondeterminism: every stable model is the minimal model of
// the reduct induced by its intersection with them. The search walks all
// assumption subsets, rebuilds the candidate, and keeps it only when it
// reproduces its own assumptions and passes the stability check.
inline std::vector<AnswerSet> enumerate_answer_sets(const GroundProgram& p,
                                                    const EnumOptions& opt = {}) {
    std::vector<Literal> neg_occ;
    {
        std::set<Literal> acc;
        for (const Rule& r : p.rules) acc.insert(r.neg.begin(), r.neg.end());
        neg_occ.assign(acc.begin(), acc.end());
    }

    std::vector<AnswerSet> found;
    CandidateSet assumed;
    std::size_t nodes = 0;

    auto visit = [&](auto&& self, std::size_t idx) -> void {
        if (++nodes > opt.node_cap)
            throw SearchLimitError("search node cap exceeded (" + std::to_string(opt.node_cap) +
                                   " nodes)");
        if (idx == neg_occ.size()) {
            CandidateSet model = minimal_model(reduct(p, assumed));
            for (const Literal& l : neg_occ)
                if (contains(model, l) != contains(assumed, l)) return;
            if (!is_stable(p, model)) return;
            found.push_back(make_answer_set(std::move(model)));
            return;
        }
        self(self, idx + 1);
        assumed.insert(neg_occ[idx]);
        self(self, idx + 1);
        assumed.erase(neg_occ[idx]);
    };
    visit(visit, 0);

    std::sort(found.begin(), found.end(), answer_set_less);
    if (opt.forbid_inconsistent)
        for (const AnswerSet& a : found)
            if (!a.consistent)
                throw InconsistencyError("program has an inconsistent (saturated) answer set");
    if (opt.max_models && found.size() > *opt.max_models) found.resize(*opt.max_models);
    return found;
}

// Differential oracle: test stability on every subset of the literal
// universe. Same output contract as enumerate_answer_sets.
inline std::vector<AnswerSet> brute_force_answer_sets(const GroundProgram& p,
                                                      std::size_t universe_bound = 20) {
    std::vector<Literal> universe = literal_universe(p);
    if (universe.size() > universe_bound)
        throw OracleLimitError("literal universe has " + std::to_string(universe.size()) +
                               " members, oracle bound is " + std::to_string(universe_bound));
    std::vector<AnswerSet> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe.size()); ++mask) {
        CandidateSet s;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (mask >> i & 1) s.insert(universe[i]);
        if (is_stable(p, s)) found.push_back(make_answer_set(std::move(s)));
    }
    std::sort(found.begin(), found.end(), answer_set_less);
    return found;
}

}  // namespace asp
