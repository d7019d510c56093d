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
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace asp {

// ------------------------------------------------------------------ terms

enum class TermKind { Constant, Variable };

struct Term {
    TermKind kind = TermKind::Constant;
    std::string name;

    bool is_variable() const { return kind == TermKind::Variable; }

    friend auto operator<=>(const Term&, const Term&) = default;
};

inline Term constant(std::string name) { return Term{TermKind::Constant, std::move(name)}; }
inline Term variable(std::string name) { return Term{TermKind::Variable, std::move(name)}; }

// ------------------------------------------------------------------ atoms

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    bool ground() const {
        return std::none_of(args.begin(), args.end(),
                            [](const Term& t) { return t.is_variable(); });
    }

    friend auto operator<=>(const Atom&, const Atom&) = default;
};

// A literal is an atom or its explicit negation. Negation as failure is not
// part of the literal; it lives in Rule::neg.
struct Literal {
    bool negated = false;
    Atom atom;

    Literal complement() const { return Literal{!negated, atom}; }
    bool ground() const { return atom.ground(); }

    friend bool operator==(const Literal&, const Literal&) = default;

    // Explicitly negated literals sort first so the ordering agrees with the
    // printed form ('-' precedes every identifier character).
    friend bool operator<(const Literal& a, const Literal& b) {
        if (a.negated != b.negated) return a.negated;
        return a.atom < b.atom;
    }
};

// ------------------------------------------------------------------ rules

struct SourceLoc {
    std::size_t line = 0;  // 1-based; 0 marks a synthesized rule
    std::size_t col = 0;
};

// head == nullopt makes this rule shape a constraint (or a query shell).
struct Rule {
    std::optional<Literal> head;
    std::vector<Literal> pos;
    std::vector<Literal> neg;
    SourceLoc origin{};

    bool is_constraint() const { return !head.has_value(); }
    bool is_fact() const { return head.has_value() && pos.empty() && neg.empty(); }
    bool positive() const { return neg.empty(); }
    bool ground() const {
        if (head && !head->ground()) return false;
        auto g = [](const Literal& l) { return l.ground(); };
        return std::all_of(pos.begin(), pos.end(), g) && std::all_of(neg.begin(), neg.end(), g);
    }

    // Source locations are bookkeeping, not identity.
    friend bool operator==(const Rule& a, const Rule& b) {
        return a.head == b.head && a.pos == b.pos && a.neg == b.neg;
    }
};

using SignatureMap = std::map<std::string, std::size_t>;  // predicate -> arity

struct Program {
    std::vector<Rule> rules;        // non-empty heads, source order, duplicates removed
    std::vector<Rule> constraints;  // empty heads
    std::set<std::string> constants;
    SignatureMap predicates;

    friend bool operator==(const Program& a, const Program& b) {
        return a.rules == b.rules && a.constraints == b.constraints;
    }
};

// Ground conjunctive query: pos literals must hold, neg literals are under
// negation as failure.
struct Query {
    std::vector<Literal> pos;
    std::vector<Literal> neg;
};

namespace detail {

// Bodies are sets: drop repeated literals, keeping first occurrences.
inline void dedupe_body(Rule& r) {
    auto dedupe = [](std::vector<Literal>& ls) {
        std::vector<Literal> out;
        for (Literal& l : ls)
            if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(std::move(l));
        ls = std::move(out);
    };
    dedupe(r.pos);
    dedupe(r.neg);
}

template <typename Fn>
void for_each_literal(const Rule& r, Fn&& fn) {
    if (r.head) fn(*r.head);
    for (const Literal& l : r.pos) fn(l);
    for (const Literal& l : r.neg) fn(l);
}

inline bool any_negated(const std::vector<Rule>& rules) {
    for (const Rule& r : rules) {
        bool found = false;
        for_each_literal(r, [&](const Literal& l) { found = found || l.negated; });
        if (found) return true;
    }
    return false;
}

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace detail

inline bool has_explicit_negation(const Program& p) {
    return detail::any_negated(p.rules) || detail::any_negated(p.constraints);
}

// --------------------------------------------------------------- printing

inline std::string to_string(const Term& t) { return t.name; }

inline std::string to_string(const Atom& a) {
    if (a.args.empty()) return a.predicate;
    std::string out = a.predicate;
    out += '(';
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (i) out += ',';
        out += a.args[i].name;
    }
    out += ')';
    return out;
}

inline std::string to_string(const Literal& l) {
    return l.negated ? "-" + to_string(l.atom) : to_string(l.atom);
}

inline std::string to_string(const Rule& r) {
    std::string out;
    if (r.head) out = to_string(*r.head);
    if (!r.pos.empty() || !r.neg.empty()) {
        out += out.empty() ? ":- " : " :- ";
        bool first = true;
        for (const Literal& l : r.pos) {
            if (!first) out += ", ";
            out += to_string(l);
            first = false;
        }
        for (const Literal& l : r.neg) {
            if (!first) out += ", ";
            out += "not " + to_string(l);
            first = false;
        }
    }
    return out + ".";
}

inline std::string to_string(const Query& q) {
    std::string out = "?- ";
    bool first = true;
    for (const Literal& l : q.pos) {
        if (!first) out += ", ";
        out += to_string(l);
        first = false;
    }
    for (const Literal& l : q.neg) {
        if (!first) out += ", ";
        out += "not " + to_string(l);
        first = false;
    }
    return out + ".";
}

// Canonical form: rules in source order, one per line, then constraints.
inline std::string print_program(const Program& p) {
    std::string out;
    for (const Rule& r : p.rules) {
        out += to_string(r);
        out += '\n';
    }
    for (const Rule& c : p.constraints) {
        out += to_string(c);
        out += '\n';
    }
    return out;
}

// Lexicographic order on the printed form; used for ground output and as the
// tie-break order for justifications.
inline bool rule_less(const Rule& a, const Rule& b) {
    return to_string(a) < to_string(b);
}

// Assemble a Program from parsed or generated statements: splits rules from
// constraints, derives the constant set and predicate signature, and drops
// exact duplicates.
inline Program finalize_program(std::vector<Rule> statements) {
    Program p;
    std::set<std::string> seen_rules;
    std::set<std::string> seen_constraints;
    for (Rule& r : statements) {
        detail::dedupe_body(r);
        detail::for_each_literal(r, [&](const Literal& l) {
            auto [it, inserted] = p.predicates.emplace(l.atom.predicate, l.atom.args.size());
            if (!inserted && it->second != l.atom.args.size())
                throw std::invalid_argument("arity clash for predicate '" + l.atom.predicate + "'");
            for (const Term& t : l.atom.args)
                if (!t.is_variable()) p.constants.insert(t.name);
        });
        std::string key = to_string(r);
        if (r.is_constraint()) {
            if (seen_constraints.insert(key).second) p.constraints.push_back(std::move(r));
        } else {
            if (seen_rules.insert(key).second) p.rules.push_back(std::move(r));
        }
    }
    return p;
}

}  // namespace asp

template <>
struct std::hash<asp::Literal> {
    std::size_t operator()(const asp::Literal& l) const {
        std::size_t h = std::hash<std::string>{}(l.atom.predicate);
        for (const asp::Term& t : l.atom.args) {
            h = asp::detail::hash_combine(h, std::hash<std::string>{}(t.name));
            h = asp::detail::hash_combine(h, t.is_variable() ? 2u : 1u);
        }
        return asp::detail::hash_combine(h, l.negated ? 0x9dc5u : 0x811cu);
    }
};
