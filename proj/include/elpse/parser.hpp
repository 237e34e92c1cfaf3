//
// Copyright (c) 2026 The elpse authors
//
// This file is part of elpse.
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//
#pragma once

#include <elpse/error.hpp>
#include <elpse/syntax.hpp>

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace elpse {

/// ELP mode rejects `~ ~ a` (no double default negation slot in ELP rules);
/// plain mode accepts it.
enum class ParseMode { elp, plain };

struct ParseOptions {
    ParseMode mode           = ParseMode::elp;
    bool      allow_reserved = false; ///< accept `__w...` atoms (re-reading emitted witnesses)
};

/// Body element as written: `~`* [ `not` `~`* ] atom.
struct RawBodyElem {
    std::size_t outer_neg{0};
    bool        epistemic{false};
    std::size_t inner_neg{0};
    std::string atom;
    std::size_t line{0};
    std::size_t column{0};
};

struct RawRule {
    std::vector<std::string> head;
    std::vector<RawBodyElem> body;
    std::size_t              line{0};
    std::size_t              column{0};
};

[[nodiscard]] inline bool operator==(const NamedRule& a, const NamedRule& b) { return a.slots == b.slots; }

/// Maps a raw rule onto the normal-form slots. Duplicates are removed and
/// default-negation chains of length >= 3 collapse by parity.
[[nodiscard]] inline NamedRule normalize_rule(const RawRule& raw, ParseMode mode = ParseMode::elp) {
    NamedRule out;
    for (const auto& h : raw.head) {
        out.add(Slot::head, h);
    }
    for (const auto& e : raw.body) {
        auto fail = [&](const std::string& msg) { throw ParseError(e.line, e.column, msg); };
        if (!e.epistemic) {
            if (e.outer_neg == 0) {
                out.add(Slot::pos, e.atom);
            }
            else if (e.outer_neg % 2 == 1) {
                out.add(Slot::neg, e.atom);
            }
            else if (mode == ParseMode::plain) {
                out.add(Slot::dneg, e.atom);
            }
            else {
                fail("double default negation '~ ~ " + e.atom + "' is not allowed in ELP rules");
            }
            continue;
        }
        if (e.outer_neg > 1 || e.inner_neg > 1) {
            fail("unsupported negation chain around 'not " + e.atom + "'");
        }
        static constexpr Slot epistemic_slot[2][2] = {{Slot::epi, Slot::epi_neg}, {Slot::neg_epi, Slot::neg_epi_neg}};
        out.add(epistemic_slot[e.outer_neg][e.inner_neg], e.atom);
    }
    for (auto& s : out.slots) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    return out;
}

/// Inverse of normalize_rule on normalized input.
[[nodiscard]] inline RawRule to_raw(const NamedRule& r) {
    RawRule raw;
    raw.head = r.slots[static_cast<std::size_t>(Slot::head)];
    auto add = [&](Slot s, std::size_t outer, bool epi, std::size_t inner) {
        for (const auto& a : r.slots[static_cast<std::size_t>(s)]) {
            raw.body.push_back({outer, epi, inner, a, 0, 0});
        }
    };
    add(Slot::pos, 0, false, 0);
    add(Slot::neg, 1, false, 0);
    add(Slot::dneg, 2, false, 0);
    add(Slot::epi, 0, true, 0);
    add(Slot::epi_neg, 0, true, 1);
    add(Slot::neg_epi, 1, true, 0);
    add(Slot::neg_epi_neg, 1, true, 1);
    return raw;
}

namespace detail {

enum class Tok { ident, kw_not, tilde, bar, comma, dot, if_, dir_atoms, dir_elits, end };

struct Token {
    Tok         kind{Tok::end};
    std::string text;
    std::size_t line{1};
    std::size_t column{1};
};

class Lexer {
public:
    Lexer(std::string_view src, bool allow_reserved) : src_(src), allow_reserved_(allow_reserved) {}

    Token next() {
        skip_space();
        Token t;
        t.line   = line_;
        t.column = col_;
        if (pos_ >= src_.size()) {
            return t;
        }
        char c = src_[pos_];
        if (std::islower(static_cast<unsigned char>(c))) {
            t.text = ident_tail();
            t.kind = t.text == "not" ? Tok::kw_not : Tok::ident;
            return t;
        }
        if (c == '_') {
            t.text = ident_tail();
            if (!t.text.starts_with(reserved_prefix)) {
                throw ParseError(t.line, t.column, "identifiers must start with a lowercase letter");
            }
            if (!allow_reserved_) {
                throw ParseError(t.line, t.column, "atom '" + t.text + "' uses the reserved prefix '__w'");
            }
            t.kind = Tok::ident;
            return t;
        }
        if (c == '#') {
            advance();
            std::string word = ident_tail();
            if (word == "atoms") {
                t.kind = Tok::dir_atoms;
            }
            else if (word == "elits") {
                t.kind = Tok::dir_elits;
            }
            else {
                throw ParseError(t.line, t.column, "unknown directive '#" + word + "'");
            }
            return t;
        }
        advance();
        switch (c) {
            case '~': t.kind = Tok::tilde; return t;
            case '|': t.kind = Tok::bar; return t;
            case ',': t.kind = Tok::comma; return t;
            case '.': t.kind = Tok::dot; return t;
            case ':':
                if (pos_ < src_.size() && src_[pos_] == '-') {
                    advance();
                    t.kind = Tok::if_;
                    return t;
                }
                break;
            default: break;
        }
        throw ParseError(t.line, t.column, std::string("unexpected character '") + c + "'");
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        }
        else if (src_[pos_] != '\r') {
            ++col_;
        }
        ++pos_;
    }
    void skip_space() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            }
            else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            }
            else {
                break;
            }
        }
    }
    std::string ident_tail() {
        std::size_t start = pos_;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') {
                break;
            }
            advance();
        }
        return std::string(src_.substr(start, pos_ - start));
    }

    std::string_view src_;
    bool             allow_reserved_;
    std::size_t      pos_{0};
    std::size_t      line_{1};
    std::size_t      col_{1};
};

class Parser {
public:
    Parser(std::string_view text, ParseOptions opts) : lex_(text, opts.allow_reserved), opts_(opts) { shift(); }

    Program run() {
        ProgramBuilder           builder;
        std::vector<std::string> declared;
        std::vector<Token>       elit_atoms;
        std::vector<NamedElit>   elits;
        while (cur_.kind != Tok::end) {
            if (cur_.kind == Tok::dir_atoms) {
                shift();
                do {
                    declared.push_back(expect_ident().text);
                } while (accept(Tok::comma));
                expect(Tok::dot, "'.'");
            }
            else if (cur_.kind == Tok::dir_elits) {
                shift();
                do {
                    expect(Tok::kw_not, "'not'");
                    bool negated = accept(Tok::tilde);
                    auto id      = expect_ident();
                    elits.push_back({id.text, negated});
                    elit_atoms.push_back(id);
                } while (accept(Tok::comma));
                expect(Tok::dot, "'.'");
            }
            else {
                auto nr = normalize_rule(rule(), opts_.mode);
                for (const auto& s : nr.slots) {
                    declared.insert(declared.end(), s.begin(), s.end());
                }
                builder.rule(std::move(nr));
            }
        }
        std::sort(declared.begin(), declared.end());
        for (std::size_t i = 0; i != elits.size(); ++i) {
            if (!std::binary_search(declared.begin(), declared.end(), elits[i].atom)) {
                throw ParseError(elit_atoms[i].line, elit_atoms[i].column,
                                 "epistemic literal over undeclared atom '" + elits[i].atom + "'");
            }
            builder.elit(elits[i].atom, elits[i].negated);
        }
        for (auto& a : declared) {
            builder.atom(std::move(a));
        }
        try {
            return builder.build();
        }
        catch (const std::invalid_argument& e) {
            throw ParseError(cur_.line, cur_.column, e.what());
        }
    }

private:
    RawRule rule() {
        RawRule r;
        r.line   = cur_.line;
        r.column = cur_.column;
        if (cur_.kind == Tok::ident) {
            do {
                r.head.push_back(expect_ident().text);
            } while (accept(Tok::bar));
        }
        bool has_body = accept(Tok::if_);
        if (!has_body && r.head.empty()) {
            fail("expected a rule");
        }
        if (has_body && cur_.kind != Tok::dot) {
            do {
                r.body.push_back(body_elem());
            } while (accept(Tok::comma));
        }
        expect(Tok::dot, "'.'");
        return r;
    }

    RawBodyElem body_elem() {
        RawBodyElem e;
        e.line   = cur_.line;
        e.column = cur_.column;
        while (accept(Tok::tilde)) {
            ++e.outer_neg;
        }
        if (accept(Tok::kw_not)) {
            e.epistemic = true;
            while (accept(Tok::tilde)) {
                ++e.inner_neg;
            }
        }
        e.atom = expect_ident().text;
        return e;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(cur_.line, cur_.column, msg); }

    void shift() { cur_ = lex_.next(); }
    bool accept(Tok k) {
        if (cur_.kind == k) {
            shift();
            return true;
        }
        return false;
    }
    void expect(Tok k, const char* what) {
        if (!accept(k)) {
            fail(std::string("expected ") + what);
        }
    }
    Token expect_ident() {
        if (cur_.kind != Tok::ident) {
            fail("expected an atom");
        }
        Token t = cur_;
        shift();
        return t;
    }

    Lexer        lex_;
    ParseOptions opts_;
    Token        cur_;
};

} // namespace detail

/// Parses `.elp` source. Domains are the atoms and epistemic literals
/// occurring in rules, extended by `#atoms` / `#elits` directives.
[[nodiscard]] inline Program parse_program(std::string_view text, ParseOptions opts = {}) {
    return detail::Parser(text, opts).run();
}

} // namespace elpse
