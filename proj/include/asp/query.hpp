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
#include <string>
#include <vector>

#include "engine.hpp"
#include "grounder.hpp"
#include "syntax.hpp"

namespace asp {

enum class Verdict { Yes, No, Unknown };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

inline bool holds(const AnswerSet& s, const Literal& l) { return contains(s.literals, l); }

// A literal is entailed when it holds in every answer set; vacuously true
// when there are none.
inline bool entails(const Program& p, const Literal& l, const EnumOptions& opt = {}) {
    std::vector<AnswerSet> models = enumerate_answer_sets(ground(p), opt);
    return std::all_of(models.begin(), models.end(),
                       [&](const AnswerSet& s) { return holds(s, l); });
}

// Three-valued answer over all answer sets: yes when the query holds in all
// of them, no when its negation holds in all of them, unknown otherwise.
//
// For a program with explicit negation a literal is false in a model only
// when its complement is a member; without explicit negation absence itself
// reads as falsity. Negation-as-failure conjuncts are non-membership tests
// either way. A program with zero answer sets answers yes vacuously;
// *no_answer_sets flags that case for the caller.
inline Verdict answer_query(const Program& p, const Query& q, const EnumOptions& opt = {},
                            bool* no_answer_sets = nullptr) {
    std::vector<AnswerSet> models = enumerate_answer_sets(ground(p), opt);
    if (no_answer_sets) *no_answer_sets = models.empty();
    if (models.empty()) return Verdict::Yes;

    const bool extended = has_explicit_negation(p);
    auto lit_true = [&](const AnswerSet& s, const Literal& l) {
        if (extended) return holds(s, l);
        return l.negated ? !contains(s.literals, Literal{false, l.atom})
                         : contains(s.literals, l);
    };
    auto lit_false = [&](const AnswerSet& s, const Literal& l) {
        if (extended) return holds(s, l.complement());
        return !lit_true(s, l);
    };
    auto query_true = [&](const AnswerSet& s) {
        return std::all_of(q.pos.begin(), q.pos.end(),
                           [&](const Literal& l) { return lit_true(s, l); }) &&
               std::none_of(q.neg.begin(), q.neg.end(),
                            [&](const Literal& l) { return contains(s.literals, l); });
    };
    auto query_false = [&](const AnswerSet& s) {
        return std::any_of(q.pos.begin(), q.pos.end(),
                           [&](const Literal& l) { return lit_false(s, l); }) ||
               std::any_of(q.neg.begin(), q.neg.end(),
                           [&](const Literal& l) { return contains(s.literals, l); });
    };

    if (std::all_of(models.begin(), models.end(), query_true)) return Verdict::Yes;
    if (std::all_of(models.begin(), models.end(), query_false)) return Verdict::No;
    return Verdict::Unknown;
}

}  // namespace asp
