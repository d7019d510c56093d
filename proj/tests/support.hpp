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

// Shared helpers for the unit and acceptance suites: corpus loading, random
// program generators, independent oracles, and a runner for the CLI binary.

#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <asp/asp.hpp>

namespace asptest {

inline std::string corpus_path(const std::string& name) {
    return std::string(ASP_CORPUS_DIR) + "/" + name + ".lp";
}

inline std::string corpus_text(const std::string& name) {
    std::ifstream in(corpus_path(name), std::ios::binary);
    if (!in) throw std::runtime_error("missing corpus file: " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline asp::Program corpus_program(const std::string& name) {
    return asp::parse_program(corpus_text(name));
}

inline asp::GroundProgram gp(const std::string& text) {
    return asp::ground(asp::parse_program(text));
}

inline asp::GroundProgram corpus_gp(const std::string& name) {
    return asp::ground(corpus_program(name));
}

inline asp::Literal lit(const std::string& text) { return asp::parse_ground_literal(text); }

inline asp::CandidateSet lits(const std::vector<std::string>& names) {
    asp::CandidateSet out;
    for (const std::string& n : names) out.insert(lit(n));
    return out;
}

// Answer sets as sorted literal-string lists, convenient for comparisons.
inline std::vector<std::vector<std::string>> model_strings(
    const std::vector<asp::AnswerSet>& models) {
    std::vector<std::vector<std::string>> out;
    for (const asp::AnswerSet& a : models) {
        std::vector<std::string> m;
        for (const asp::Literal& l : asp::sorted_literals(a.literals))
            m.push_back(asp::to_string(l));
        out.push_back(std::move(m));
    }
    return out;
}

// ------------------------------------------------------- random programs

struct GenOptions {
    int max_atoms = 8;
    int max_rules = 12;
    bool naf = true;            // negation as failure in bodies
    bool explicit_neg = false;  // explicitly negated literals
    double constraint_prob = 0.0;
};

inline asp::Literal make_lit(int idx, bool negated) {
    static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
    return asp::Literal{negated, asp::Atom{names[idx], {}}};
}

inline asp::Program random_ground_program(std::mt19937& rng, const GenOptions& o) {
    std::uniform_int_distribution<int> atom_count(1, o.max_atoms);
    std::uniform_int_distribution<int> rule_count(0, o.max_rules);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const int atoms = atom_count(rng);
    std::uniform_int_distribution<int> pick(0, atoms - 1);
    std::uniform_int_distribution<int> body_len(0, 2);

    auto random_lit = [&] {
        bool neg = o.explicit_neg && coin(rng) < 0.25;
        return make_lit(pick(rng), neg);
    };
    auto fill_body = [&](std::vector<asp::Literal>& out, int len) {
        for (int i = 0; i < len; ++i) {
            asp::Literal l = random_lit();
            if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
        }
    };

    std::vector<asp::Rule> statements;
    const int rules = rule_count(rng);
    for (int i = 0; i < rules; ++i) {
        asp::Rule r;
        bool constraint = coin(rng) < o.constraint_prob;
        if (!constraint) r.head = random_lit();
        fill_body(r.pos, body_len(rng));
        if (o.naf) fill_body(r.neg, body_len(rng));
        if (constraint && r.pos.empty() && r.neg.empty()) continue;  // no empty-body constraints
        statements.push_back(std::move(r));
    }
    return asp::finalize_program(std::move(statements));
}

inline asp::Program random_positive_program(std::mt19937& rng, int max_atoms = 8,
                                            int max_rules = 12) {
    GenOptions o;
    o.max_atoms = max_atoms;
    o.max_rules = max_rules;
    o.naf = false;
    return random_ground_program(rng, o);
}

// Stratified by construction: atoms get levels up front, positive body
// members come from the head's level or below, negative ones from strictly
// below. No constraints, no explicit negation.
inline asp::Program random_stratified_program(std::mt19937& rng, int max_atoms = 8,
                                              int max_rules = 12) {
    std::uniform_int_distribution<int> atom_count(1, max_atoms);
    std::uniform_int_distribution<int> rule_count(0, max_rules);
    std::uniform_int_distribution<int> level_of(0, 3);
    std::uniform_int_distribution<int> body_len(0, 2);
    const int atoms = atom_count(rng);
    std::uniform_int_distribution<int> pick(0, atoms - 1);

    std::vector<int> level(atoms);
    for (int& l : level) l = level_of(rng);

    std::vector<asp::Rule> statements;
    const int rules = rule_count(rng);
    for (int i = 0; i < rules; ++i) {
        int head = pick(rng);
        asp::Rule r;
        r.head = make_lit(head, false);
        for (int k = body_len(rng); k > 0; --k) {
            int b = pick(rng);
            if (level[b] > level[head]) continue;
            asp::Literal l = make_lit(b, false);
            if (std::find(r.pos.begin(), r.pos.end(), l) == r.pos.end()) r.pos.push_back(l);
        }
        for (int k = body_len(rng); k > 0; --k) {
            int b = pick(rng);
            if (level[b] >= level[head]) continue;
            asp::Literal l = make_lit(b, false);
            if (std::find(r.neg.begin(), r.neg.end(), l) == r.neg.end()) r.neg.push_back(l);
        }
        statements.push_back(std::move(r));
    }
    return asp::finalize_program(std::move(statements));
}

inline asp::CandidateSet random_candidate(std::mt19937& rng, const asp::GroundProgram& p) {
    std::vector<asp::Literal> universe = asp::literal_universe(p);
    asp::CandidateSet out;
    for (const asp::Literal& l : universe)
        if (rng() & 1) out.insert(l);
    return out;
}

// --------------------------------------------------- independent oracles

// Smallest set closed under the rules of a positive plain program, found as
// the intersection of all closed subsets of the literal universe. Kept free
// of tp_step so it can check the fixpoint path.
inline asp::CandidateSet oracle_minimal_model(const asp::GroundProgram& p) {
    if (asp::has_explicit_negation(p))
        throw std::logic_error("oracle_minimal_model: plain programs only");
    std::vector<asp::Literal> universe = asp::literal_universe(p);
    if (universe.size() > 20) throw std::logic_error("oracle_minimal_model: universe too large");

    auto closed = [&](const asp::CandidateSet& s) {
        for (const asp::Rule& r : p.rules) {
            bool fires = true;
            for (const asp::Literal& l : r.pos)
                if (!s.count(l)) {
                    fires = false;
                    break;
                }
            if (fires && !s.count(*r.head)) return false;
        }
        return true;
    };

    asp::CandidateSet inter(universe.begin(), universe.end());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe.size()); ++mask) {
        asp::CandidateSet s;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (mask >> i & 1) s.insert(universe[i]);
        if (!closed(s)) continue;
        std::erase_if(inter, [&](const asp::Literal& l) { return !s.count(l); });
    }
    if (!closed(inter)) throw std::logic_error("oracle_minimal_model: intersection not closed");
    return inter;
}

// Exhaustive search over all level assignments with levels below the node
// count; answers whether any witnesses stratification.
inline bool oracle_stratifiable(const asp::GroundProgram& p) {
    std::set<asp::Literal> node_set;
    for (const asp::Atom& a : p.base) node_set.insert(asp::Literal{false, a});
    for (const std::vector<asp::Rule>* group : {&p.rules, &p.constraints})
        for (const asp::Rule& r : *group) {
            if (r.head) node_set.insert(*r.head);
            for (const asp::Literal& l : r.pos) node_set.insert(l);
            for (const asp::Literal& l : r.neg) node_set.insert(l);
        }
    std::vector<asp::Literal> nodes(node_set.begin(), node_set.end());
    const std::size_t n = nodes.size();
    if (n == 0) return true;
    if (n > 6) throw std::logic_error("oracle_stratifiable: too many atoms");

    std::map<asp::Literal, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[nodes[i]] = i;

    std::vector<std::size_t> level(n, 0);
    for (;;) {
        bool ok = true;
        for (const asp::Rule& r : p.rules) {
            std::size_t head = level[index[*r.head]];
            for (const asp::Literal& l : r.pos)
                if (head < level[index[l]]) ok = false;
            for (const asp::Literal& l : r.neg)
                if (head <= level[index[l]]) ok = false;
            if (!ok) break;
        }
        if (ok) return true;
        std::size_t k = n;
        while (k > 0 && ++level[k - 1] == n) level[--k] = 0;
        if (k == 0) return false;
    }
}

// -------------------------------------------------------------- CLI runs

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    out += "'";
    return out;
}

// Runs the built binary through the shell; env_prefix may carry variable
// assignments like "ASP_NODE_CAP=1".
inline CliResult run_cli(const std::vector<std::string>& args, const std::string& env_prefix = "") {
    static int counter = 0;
    std::string err_file =
        "/tmp/asp_cli_err_" + std::to_string(::getpid()) + "_" + std::to_string(counter++);
    std::string cmd = env_prefix.empty() ? "" : env_prefix + " ";
    cmd += shell_quote(ASP_BIN_PATH);
    for (const std::string& a : args) cmd += " " + shell_quote(a);
    cmd += " 2>" + err_file;

    CliResult result;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    char buf[4096];
    std::size_t n;
    while ((n = ::fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
    int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

    std::ifstream err(err_file, std::ios::binary);
    std::ostringstream err_buf;
    err_buf << err.rdbuf();
    result.err = err_buf.str();
    std::remove(err_file.c_str());
    return result;
}

inline std::string write_temp_lp(const std::string& text) {
    static int counter = 0;
    std::string path =
        "/tmp/asp_tmp_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".lp";
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path;
}

}  // namespace asptest
