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

// Surface syntax:
//   head :- body.        rule          (head.  for facts)
//   :- body.             constraint
//   ?- body.             query (query parser only)
//   not L                negation as failure, -a explicit negation
//   % line comment; variables start uppercase, constants/predicates lowercase

#pragma once

#include <cctype>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "syntax.hpp"

namespace asp {

struct ParseError : std::runtime_error {
    std::size_t line;
    std::size_t col;
    ParseError(std::size_t line, std::size_t col, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + msg),
          line(line),
          col(col) {}
};

namespace detail {

enum class Tok { Ident, Var, Not, If, QueryIf, Minus, Comma, Dot, LParen, RParen, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    SourceLoc loc;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_trivia();
        SourceLoc loc{line_, col_};
        if (pos_ >= src_.size()) return {Tok::End, "", loc};
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (pos_ < src_.size() && is_ident_char(src_[pos_])) {
                word += src_[pos_];
                advance();
            }
            if (word == "not") return {Tok::Not, word, loc};
            bool var = std::isupper(static_cast<unsigned char>(word[0]));
            return {var ? Tok::Var : Tok::Ident, std::move(word), loc};
        }
        switch (c) {
            case ':':
                advance();
                if (pos_ >= src_.size() || src_[pos_] != '-')
                    throw ParseError(loc.line, loc.col, "expected ':-'");
                advance();
                return {Tok::If, ":-", loc};
            case '?':
                advance();
                if (pos_ >= src_.size() || src_[pos_] != '-')
                    throw ParseError(loc.line, loc.col, "expected '?-'");
                advance();
                return {Tok::QueryIf, "?-", loc};
            case '-': advance(); return {Tok::Minus, "-", loc};
            case ',': advance(); return {Tok::Comma, ",", loc};
            case '.': advance(); return {Tok::Dot, ".", loc};
            case '(': advance(); return {Tok::LParen, "(", loc};
            case ')': advance(); return {Tok::RParen, ")", loc};
            default:
                throw ParseError(loc.line, loc.col,
                                 std::string("unexpected character '") + c + "'");
        }
    }

private:
    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_trivia() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

inline const char* describe(Tok t) {
    switch (t) {
        case Tok::Ident: return "identifier";
        case Tok::Var: return "variable";
        case Tok::Not: return "'not'";
        case Tok::If: return "':-'";
        case Tok::QueryIf: return "'?-'";
        case Tok::Minus: return "'-'";
        case Tok::Comma: return "','";
        case Tok::Dot: return "'.'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::End: return "end of input";
    }
    return "?";
}

struct VarOcc {
    std::string name;
    SourceLoc loc;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { cur_ = lexer_.next(); }

    Program parse_program() {
        std::vector<Rule> statements;
        while (cur_.kind != Tok::End) {
            if (cur_.kind == Tok::QueryIf)
                throw ParseError(cur_.loc.line, cur_.loc.col,
                                 "queries ('?-') are not allowed in program input");
            statements.push_back(parse_statement());
        }
        return finalize_program(std::move(statements));
    }

    Query parse_query(const SignatureMap* program_signature) {
        if (program_signature) signature_ = *program_signature;
        ground_only_ = true;
        expect(Tok::QueryIf);
        Query q;
        parse_body(q.pos, q.neg, nullptr, nullptr);
        expect(Tok::Dot);
        expect(Tok::End);
        return q;
    }

    std::vector<Literal> parse_literal_list() {
        ground_only_ = true;
        std::vector<Literal> out;
        if (cur_.kind == Tok::End) return out;
        out.push_back(parse_literal(nullptr));
        while (cur_.kind == Tok::Comma) {
            take();
            out.push_back(parse_literal(nullptr));
        }
        expect(Tok::End);
        return out;
    }

    Literal parse_single_literal() {
        ground_only_ = true;
        Literal l = parse_literal(nullptr);
        expect(Tok::End);
        return l;
    }

private:
    Token take() {
        Token t = std::move(cur_);
        cur_ = lexer_.next();
        return t;
    }

    void expect(Tok kind) {
        if (cur_.kind != kind)
            throw ParseError(cur_.loc.line, cur_.loc.col,
                             std::string("expected ") + describe(kind) + ", found " +
                                 describe(cur_.kind));
        take();
    }

    Rule parse_statement() {
        SourceLoc origin = cur_.loc;
        Rule r;
        r.origin = origin;
        std::vector<VarOcc> head_vars;
        std::vector<VarOcc> neg_vars;
        std::set<std::string> pos_vars;

        if (cur_.kind == Tok::If) {
            take();
            parse_body(r.pos, r.neg, &pos_vars, &neg_vars);
        } else {
            r.head = parse_literal(&head_vars);
            if (cur_.kind == Tok::If) {
                take();
                parse_body(r.pos, r.neg, &pos_vars, &neg_vars);
            }
        }
        expect(Tok::Dot);

        // Safety: every variable of the head or the negative body must occur
        // in the positive body, otherwise grounding would be unbounded.
        for (const auto& group : {head_vars, neg_vars})
            for (const VarOcc& v : group)
                if (!pos_vars.count(v.name))
                    throw ParseError(v.loc.line, v.loc.col,
                                     "unsafe rule: variable '" + v.name +
                                         "' does not occur in any positive body literal");
        return r;
    }

    void parse_body(std::vector<Literal>& pos, std::vector<Literal>& neg,
                    std::set<std::string>* pos_vars, std::vector<VarOcc>* neg_vars) {
        for (;;) {
            if (cur_.kind == Tok::Not) {
                take();
                std::vector<VarOcc> occ;
                Literal l = parse_literal(&occ);
                if (neg_vars)
                    neg_vars->insert(neg_vars->end(), occ.begin(), occ.end());
                neg.push_back(std::move(l));
            } else {
                std::vector<VarOcc> occ;
                Literal l = parse_literal(&occ);
                if (pos_vars)
                    for (const VarOcc& v : occ) pos_vars->insert(v.name);
                pos.push_back(std::move(l));
            }
            if (cur_.kind != Tok::Comma) break;
            take();
        }
    }

    Literal parse_literal(std::vector<VarOcc>* vars) {
        bool negated = false;
        if (cur_.kind == Tok::Minus) {
            take();
            negated = true;
        }
        return Literal{negated, parse_atom(vars)};
    }

    Atom parse_atom(std::vector<VarOcc>* vars) {
        if (cur_.kind != Tok::Ident)
            throw ParseError(cur_.loc.line, cur_.loc.col,
                             std::string("expected predicate, found ") + describe(cur_.kind));
        Token name = take();
        Atom a;
        a.predicate = name.text;
        if (cur_.kind == Tok::LParen) {
            take();
            a.args.push_back(parse_term(vars));
            while (cur_.kind == Tok::Comma) {
                take();
                a.args.push_back(parse_term(vars));
            }
            expect(Tok::RParen);
        }
        auto [it, inserted] = signature_.emplace(a.predicate, a.args.size());
        if (!inserted && it->second != a.args.size())
            throw ParseError(name.loc.line, name.loc.col,
                             "arity clash for predicate '" + a.predicate + "': used with arity " +
                                 std::to_string(a.args.size()) + ", previously " +
                                 std::to_string(it->second));
        return a;
    }

    Term parse_term(std::vector<VarOcc>* vars) {
        if (cur_.kind == Tok::Ident) return constant(take().text);
        if (cur_.kind == Tok::Var) {
            Token t = take();
            if (ground_only_)
                throw ParseError(t.loc.line, t.loc.col,
                                 "non-ground input: variable '" + t.text + "' is not allowed here");
            if (vars) vars->push_back({t.text, t.loc});
            return variable(t.text);
        }
        throw ParseError(cur_.loc.line, cur_.loc.col,
                         std::string("expected term, found ") + describe(cur_.kind));
    }

    Lexer lexer_;
    Token cur_;
    SignatureMap signature_;
    bool ground_only_ = false;
};

}  // namespace detail

inline Program parse_program(std::string_view text) {
    return detail::Parser(text).parse_program();
}

// Queries must be ground; the program signature, when supplied, is used for
// arity checking (unknown predicates are allowed and simply never hold).
inline Query parse_query(std::string_view text, const SignatureMap* program_signature = nullptr) {
    return detail::Parser(text).parse_query(program_signature);
}

// Comma-separated ground literals, e.g. "drinks,happy" or "b,-a".
inline std::vector<Literal> parse_literal_list(std::string_view text) {
    return detail::Parser(text).parse_literal_list();
}

inline Literal parse_ground_literal(std::string_view text) {
    return detail::Parser(text).parse_single_literal();
}

}  // namespace asp
