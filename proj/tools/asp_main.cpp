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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <asp/asp.hpp>

namespace {

// Exit codes are part of the scripting contract: 0 success / query yes,
// 1 query no / not stable, 2 query unknown, 3 usage or parse error,
// 4 resource cap exceeded, 5 inconsistency rejected by --forbid-inconsistent.
enum ExitCode {
    kOk = 0,
    kNo = 1,
    kUnknown = 2,
    kUsage = 3,
    kResourceCap = 4,
    kInconsistent = 5,
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Multiple input files are concatenated into one program text (union of
// rules) before parsing.
asp::Program load_program(const std::vector<std::string>& paths) {
    std::string text;
    for (const std::string& path : paths) {
        text += read_file(path);
        text += '\n';
    }
    return asp::parse_program(text);
}

asp::CandidateSet parse_model_string(const std::string& text, const asp::GroundProgram& gp) {
    asp::CandidateSet model;
    for (const asp::Literal& l : asp::parse_literal_list(text)) {
        if (!gp.base.count(l.atom))
            throw UsageError("unknown literal in model string: '" + asp::to_string(l) + "'");
        model.insert(l);
    }
    return model;
}

std::string model_line(const asp::AnswerSet& a) {
    std::string line = asp::to_string(a.literals);
    if (!a.consistent) line += " (inconsistent)";
    return line;
}

void forbid_inconsistent(const std::vector<asp::AnswerSet>& models) {
    for (const asp::AnswerSet& a : models)
        if (!a.consistent)
            throw asp::InconsistencyError("program has an inconsistent (saturated) answer set");
}

int run_solve(const std::vector<std::string>& files, std::optional<std::size_t> max_models,
              bool json, bool oracle, bool forbid, std::size_t node_cap) {
    asp::GroundProgram gp = asp::ground(load_program(files));
    std::vector<asp::AnswerSet> models;
    if (oracle) {
        models = asp::brute_force_answer_sets(gp);
        if (forbid) forbid_inconsistent(models);
        if (max_models && models.size() > *max_models) models.resize(*max_models);
    } else {
        asp::EnumOptions opt;
        opt.max_models = max_models;
        opt.node_cap = node_cap;
        opt.forbid_inconsistent = forbid;
        models = asp::enumerate_answer_sets(gp, opt);
    }

    if (json) {
        nlohmann::json out;
        out["answer_sets"] = nlohmann::json::array();
        out["consistent"] = nlohmann::json::array();
        for (const asp::AnswerSet& a : models) {
            nlohmann::json lits = nlohmann::json::array();
            for (const asp::Literal& l : asp::sorted_literals(a.literals))
                lits.push_back(asp::to_string(l));
            out["answer_sets"].push_back(std::move(lits));
            out["consistent"].push_back(a.consistent);
        }
        out["count"] = models.size();
        std::cout << out.dump() << "\n";
        return kOk;
    }

    for (const asp::AnswerSet& a : models) std::cout << model_line(a) << "\n";
    std::cout << models.size() << (models.size() == 1 ? " answer set" : " answer sets") << "\n";
    return kOk;
}

int run_check(const std::vector<std::string>& files, const std::string& model_text) {
    asp::GroundProgram gp = asp::ground(load_program(files));
    asp::CandidateSet model = parse_model_string(model_text, gp);
    if (asp::is_stable(gp, model)) {
        std::cout << "stable\n";
        return kOk;
    }
    asp::CandidateSet reproduced = asp::minimal_model(asp::reduct(gp, model));
    asp::CandidateSet mismatch;
    for (const asp::Literal& l : model)
        if (!asp::contains(reproduced, l)) mismatch.insert(l);
    for (const asp::Literal& l : reproduced)
        if (!asp::contains(model, l)) mismatch.insert(l);
    std::cout << "not stable\n";
    std::cout << "mismatch: " << asp::to_string(mismatch) << "\n";
    return kNo;
}

int run_query(const std::vector<std::string>& files, const std::string& query_text,
              std::size_t node_cap) {
    asp::Program p = load_program(files);
    asp::Query q = asp::parse_query(query_text, &p.predicates);
    asp::EnumOptions opt;
    opt.node_cap = node_cap;
    bool vacuous = false;
    asp::Verdict v = asp::answer_query(p, q, opt, &vacuous);
    if (vacuous) std::cerr << "warning: program has no answer sets; query is vacuously yes\n";
    std::cout << asp::to_string(v) << "\n";
    switch (v) {
        case asp::Verdict::Yes: return kOk;
        case asp::Verdict::No: return kNo;
        case asp::Verdict::Unknown: return kUnknown;
    }
    return kUsage;
}

int run_ground(const std::vector<std::string>& files, bool prune) {
    asp::GroundProgram gp = asp::ground(load_program(files), asp::GroundOptions{prune});
    std::vector<asp::Rule> rules = gp.rules;
    std::vector<asp::Rule> constraints = gp.constraints;
    std::sort(rules.begin(), rules.end(), asp::rule_less);
    std::sort(constraints.begin(), constraints.end(), asp::rule_less);
    for (const asp::Rule& r : rules) std::cout << asp::to_string(r) << "\n";
    for (const asp::Rule& c : constraints) std::cout << asp::to_string(c) << "\n";
    return kOk;
}

int run_analyze(const std::vector<std::string>& files, std::size_t node_cap) {
    asp::GroundProgram gp = asp::ground(load_program(files));
    asp::EnumOptions opt;
    opt.node_cap = node_cap;

    if (std::optional<asp::LevelMapping> levels = asp::stratify(gp)) {
        std::cout << "stratified: yes\n";
        for (const auto& [lit, level] : *levels)
            std::cout << "  " << asp::to_string(lit) << " -> " << level << "\n";
    } else {
        std::cout << "stratified: no\n";
    }
    std::cout << "categorical: " << (asp::is_categorical(gp, opt) ? "yes" : "no") << "\n";

    std::vector<asp::AnswerSet> models = asp::enumerate_answer_sets(gp, opt);
    std::cout << "answer sets: " << models.size() << "\n";
    for (const asp::AnswerSet& a : models) {
        std::vector<std::string> violations = asp::support_violations(gp, a);
        std::cout << model_line(a)
                  << (violations.empty() ? ": supportedness ok" : ": supportedness FAILED")
                  << "\n";
        for (const std::string& v : violations) std::cout << "  " << v << "\n";
    }
    return kOk;
}

int run_explain(const std::vector<std::string>& files, const std::string& model_text,
                const std::string& literal_text) {
    asp::GroundProgram gp = asp::ground(load_program(files));
    asp::CandidateSet model = parse_model_string(model_text, gp);
    asp::Literal lit = asp::parse_ground_literal(literal_text);
    if (!gp.base.count(lit.atom))
        throw UsageError("unknown literal: '" + asp::to_string(lit) + "'");

    std::optional<asp::Justification> j;
    try {
        j = asp::justify(gp, asp::make_answer_set(model), lit);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!j) {
        std::cout << "literal " << asp::to_string(lit)
                  << " is not in the model; nothing to justify\n";
        return kNo;
    }
    auto list = [](const std::vector<asp::Literal>& ls) {
        if (ls.empty()) return std::string("(none)");
        std::string out;
        for (std::size_t i = 0; i < ls.size(); ++i) {
            if (i) out += ", ";
            out += asp::to_string(ls[i]);
        }
        return out;
    };
    std::cout << "literal " << asp::to_string(lit) << " justified by: " << asp::to_string(j->rule)
              << "\n";
    std::cout << "  positive witnesses: " << list(j->pos_witness) << "\n";
    std::cout << "  negative witnesses: " << list(j->neg_witness) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t node_cap = asp::kDefaultNodeCap;
    if (const char* env = std::getenv("ASP_NODE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0) {
            std::cerr << "error: invalid ASP_NODE_CAP value '" << env << "'\n";
            return kUsage;
        }
        node_cap = static_cast<std::size_t>(v);
    }

    CLI::App app{"answer set programming kernel"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::optional<std::size_t> max_models;
    bool json = false, oracle = false, forbid = false, prune = false;
    std::string model_text, query_text, literal_text;

    auto add_files = [&](CLI::App* cmd) {
        cmd->add_option("files", files, "program files (.lp)")->required()->expected(-1);
    };
    auto add_node_cap = [&](CLI::App* cmd) {
        cmd->add_option("--node-cap", node_cap, "search node cap")->check(CLI::PositiveNumber);
    };

    CLI::App* solve = app.add_subcommand("solve", "enumerate answer sets");
    add_files(solve);
    solve->add_option("--max-models", max_models, "stop after this many answer sets")
        ->check(CLI::PositiveNumber);
    solve->add_flag("--json", json, "emit JSON instead of text");
    solve->add_flag("--oracle", oracle, "use the brute-force subset oracle");
    solve->add_flag("--forbid-inconsistent", forbid,
                    "report an error instead of a saturated answer set");
    add_node_cap(solve);

    CLI::App* check = app.add_subcommand("check", "test whether a literal set is stable");
    add_files(check);
    check->add_option("--model", model_text, "comma-separated ground literals")->required();

    // files and the query share the positional list; the last entry is the query
    std::vector<std::string> query_args;
    CLI::App* query = app.add_subcommand("query", "answer a ground query (yes/no/unknown)");
    query->add_option("args", query_args, "program files followed by a query, e.g. \"?- drinks.\"")
        ->required()
        ->expected(-2);
    add_node_cap(query);

    CLI::App* ground = app.add_subcommand("ground", "print the ground program");
    add_files(ground);
    ground->add_flag("--prune", prune, "drop rules with unsupportable positive bodies");

    CLI::App* analyze = app.add_subcommand("analyze", "stratification, categoricity, support");
    add_files(analyze);
    add_node_cap(analyze);

    CLI::App* explain = app.add_subcommand("explain", "justify a literal of an answer set");
    add_files(explain);
    explain->add_option("--model", model_text, "comma-separated ground literals")->required();
    explain->add_option("--literal", literal_text, "literal to justify")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*solve) return run_solve(files, max_models, json, oracle, forbid, node_cap);
        if (*check) return run_check(files, model_text);
        if (*query) {
            query_text = query_args.back();
            query_args.pop_back();
            return run_query(query_args, query_text, node_cap);
        }
        if (*ground) return run_ground(files, prune);
        if (*analyze) return run_analyze(files, node_cap);
        if (*explain) return run_explain(files, model_text, literal_text);
    } catch (const asp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const asp::SearchLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResourceCap;
    } catch (const asp::OracleLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResourceCap;
    } catch (const asp::InconsistencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInconsistent;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
