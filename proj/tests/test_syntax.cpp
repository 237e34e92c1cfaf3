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
// Parsing, normalization, rendering and domain handling.

#include <catch_amalgamated.hpp>

#include "support/common.hpp"
#include "support/oracle.hpp"

using namespace elpse;
using testing::rule_of;

namespace {

AtomSet ids(const Program& p, std::initializer_list<const char*> names) { return testing::interp(p, names); }

} // namespace

TEST_CASE("parse strong-introspection rule", "[syntax]") {
    auto p = parse_program("p' :- ~ not ~ p.");
    REQUIRE(p.atoms() == std::vector<std::string>{"p", "p'"});
    REQUIRE(p.rules().size() == 1);
    const auto& r = p.rules()[0];
    CHECK(r.head() == ids(p, {"p'"}));
    CHECK(r.neg_epi_neg() == ids(p, {"p"}));
    for (auto s : {Slot::pos, Slot::neg, Slot::dneg, Slot::epi, Slot::epi_neg, Slot::neg_epi}) {
        CHECK(r[s].empty());
    }
    CHECK(p.elits() == std::vector<Elit>{{0, true}});
}

TEST_CASE("parse epistemic default rule", "[syntax]") {
    auto p = parse_program("p' :- not p.");
    const auto& r = p.rules().at(0);
    CHECK(r.head() == ids(p, {"p'"}));
    CHECK(r.epi() == ids(p, {"p"}));
    CHECK(r.atoms() == (r.head() | r.epi()));
    CHECK(p.elits() == std::vector<Elit>{{0, false}});
}

TEST_CASE("empty input", "[syntax]") {
    auto p = parse_program("");
    CHECK(p.atoms().empty());
    CHECK(p.elits().empty());
    CHECK(p.rules().empty());
    CHECK(render_program(p).empty());
    CHECK(parse_program("  % only a comment\n\n") == p);
}

TEST_CASE("every body form lands in its slot", "[syntax]") {
    auto p = parse_program("h | k :- b, ~c, not d, not ~e, ~ not f, ~ not ~g.");
    const auto& r = p.rules().at(0);
    CHECK(r.head() == ids(p, {"h", "k"}));
    CHECK(r.pos() == ids(p, {"b"}));
    CHECK(r.neg() == ids(p, {"c"}));
    CHECK(r.epi() == ids(p, {"d"}));
    CHECK(r.epi_neg() == ids(p, {"e"}));
    CHECK(r.neg_epi() == ids(p, {"f"}));
    CHECK(r.neg_epi_neg() == ids(p, {"g"}));
    CHECK(r.dneg().empty());
}

TEST_CASE("normalization", "[syntax]") {
    SECTION("triple negation collapses in plain mode") {
        auto a = parse_program("a :- ~ ~ ~ b.", {ParseMode::plain, false});
        auto b = parse_program("a :- ~ b.", {ParseMode::plain, false});
        CHECK(a == b);
        CHECK(a.rules()[0].neg() == ids(a, {"b"}));
        auto c = parse_program("a :- ~ ~ ~ ~ b.", {ParseMode::plain, false});
        CHECK(c.rules()[0].dneg() == ids(c, {"b"}));
    }
    SECTION("duplicates are removed") {
        auto p = parse_program("p | p :- q, q.");
        CHECK(p.rules()[0].head() == ids(p, {"p"}));
        CHECK(p.rules()[0].pos() == ids(p, {"q"}));
    }
    SECTION("contradictory bodies are kept") {
        auto p = parse_program(":- p, ~ p.");
        CHECK(p.rules()[0].head().empty());
        CHECK(p.rules()[0].pos() == ids(p, {"p"}));
        CHECK(p.rules()[0].neg() == ids(p, {"p"}));
        CHECK(render_program(p) == "#atoms p.\n:- p, ~p.");
    }
    SECTION("double default negation needs plain mode") {
        CHECK_THROWS_AS(parse_program("a :- ~ ~ b."), ParseError);
        auto p = parse_program("a :- ~ ~ b.", {ParseMode::plain, false});
        CHECK(p.rules()[0].dneg() == ids(p, {"b"}));
    }
    SECTION("idempotent") {
        oracle::Gen gen(7);
        for (int i = 0; i != 200; ++i) {
            auto nr = oracle::Gen::named(gen.elp_rule(4, 0.3));
            auto once  = normalize_rule(to_raw(nr));
            auto twice = normalize_rule(to_raw(once));
            CHECK(once == twice);
        }
    }
}

TEST_CASE("render", "[syntax]") {
    auto p = parse_program("p' :- not p.");
    CHECK(render_program(p) == "#atoms p, p'.\n#elits not p.\np' :- not p.");
    CHECK(render_program(parse_program("a.")) == "#atoms a.\na.");
    CHECK(render_program(parse_program(":- .")) == ":- .");
    CHECK(render_program(parse_program("a | b :- ~ ~ c.", {ParseMode::plain, false})) ==
          "#atoms a, b, c.\na | b :- ~ ~c.");
}

TEST_CASE("fixture round trip is byte for byte", "[syntax]") {
    for (const char* f : {"neg_guard.elp", "epi_guard.elp"}) {
        auto text = testing::read(f);
        auto p    = parse_program(text);
        CHECK(render_program(p) + "\n" == text);
    }
}

TEST_CASE("random round trip", "[syntax]") {
    oracle::Gen gen(11);
    for (int i = 0; i != 300; ++i) {
        bool plain = gen.chance(0.3);
        auto p     = gen.program(1 + gen.below(5), gen.below(5), !plain, 0.25);
        auto mode  = plain ? ParseMode::plain : ParseMode::elp;
        auto back  = parse_program(render_program(p), {mode, false});
        REQUIRE(back == p);
    }
}

TEST_CASE("directives extend domains", "[syntax]") {
    auto p = parse_program("#atoms z.\n#elits not ~q.\np :- not q.");
    CHECK(p.atoms() == std::vector<std::string>{"p", "q", "z"});
    CHECK(p.elits() == std::vector<Elit>{{1, false}, {1, true}});
    CHECK_THROWS_AS(parse_program("#elits not q."), ParseError);
}

TEST_CASE("parse errors carry a position", "[syntax]") {
    try {
        (void)parse_program("a :- b.\nc :- ,d.");
        FAIL("expected a parse error");
    }
    catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 6);
    }
    CHECK_THROWS_AS(parse_program("a :- b"), ParseError);
    CHECK_THROWS_AS(parse_program("A."), ParseError);
    CHECK_THROWS_AS(parse_program("a :- not not b."), ParseError);
    CHECK_THROWS_AS(parse_program("a :- ~ ~ not b."), ParseError);
}

TEST_CASE("reserved prefix", "[syntax]") {
    CHECK_THROWS_AS(parse_program("__w1."), ParseError);
    CHECK_THROWS_AS(parse_program("a :- __w1."), ParseError);
    auto p = parse_program("__w1.", {ParseMode::plain, true});
    CHECK(p.atoms() == std::vector<std::string>{"__w1"});
}

TEST_CASE("CRLF input", "[syntax]") {
    CHECK(parse_program("a :- b.\r\nc.\r\n") == parse_program("a :- b.\nc.\n"));
}

TEST_CASE("align domains", "[syntax]") {
    auto g = testing::load("neg_guard.elp");
    auto s = parse_program("p' :- not p.");
    auto [a, b] = align_domains(s, parse_program("p' :- ~ not ~ p."));
    CHECK(a.elits() == std::vector<Elit>{{0, false}, {0, true}});
    CHECK(b.elits() == a.elits());
    CHECK(a.atoms() == b.atoms());
    CHECK(a.rules() == s.rules());

    auto [x, y] = align_domains(g, g);
    CHECK(x == g);
    CHECK(y == g);
}

TEST_CASE("align domains keeps candidate world views", "[syntax]") {
    oracle::Gen gen(23);
    for (int i = 0; i != 20; ++i) {
        auto p      = gen.program(1 + gen.below(3), 1 + gen.below(3), true);
        auto q      = gen.program(1 + gen.below(4), 1 + gen.below(3), true);
        auto [a, b] = align_domains(p, q);
        CHECK(project(cwvs(a)) == project(cwvs(p)));
        CHECK(project(cwvs(b)) == project(cwvs(q)));
        CHECK(project(wvs(a)) == project(wvs(p)));
    }
}

TEST_CASE("is_plain", "[syntax]") {
    CHECK(is_plain(testing::load("bridge.elp")));
    CHECK_FALSE(is_plain(testing::load("epi_guard.elp")));
    CHECK(is_plain(Program{}));
}

TEST_CASE("domain closure", "[syntax]") {
    oracle::Gen gen(5);
    for (int i = 0; i != 100; ++i) {
        auto p = parse_program(render_program(gen.program(4, 3, true)));
        for (const auto& r : p.rules()) {
            CHECK(r.atoms().subset_of(p.universe()));
            for (auto e : elits_of(r)) {
                CHECK(p.find_elit(e).has_value());
            }
        }
    }
}

TEST_CASE("union joins domains and rules", "[syntax]") {
    auto u = unite(testing::load("neg_guard.elp"), testing::load("bridge.elp"));
    CHECK(u.rules().size() == 2);
    CHECK(u.elits().size() == 2);
    CHECK(render_program(u) == "#atoms p, p'.\n#elits not p, not ~p.\np' :- ~ not ~p.\np :- ~p'.");
}
