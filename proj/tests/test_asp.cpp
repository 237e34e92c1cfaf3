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
// Models, answer sets and SE-models of plain programs.

#include <catch_amalgamated.hpp>

#include "support/common.hpp"
#include "support/oracle.hpp"

using namespace elpse;
using testing::interp;

namespace {

Program plain(const std::string& text) { return parse_program(text, {ParseMode::plain, false}); }

InterpretationSet sets(const Program& p, std::initializer_list<std::initializer_list<const char*>> ms) {
    InterpretationSet out;
    for (auto m : ms) {
        out.push_back(interp(p, m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

oracle::Interps as_oracle(const InterpretationSet& s) { return {s.begin(), s.end()}; }

} // namespace

TEST_CASE("satisfies", "[asp]") {
    auto p = plain("p' :- ~p.\n:- p.");
    CHECK(satisfies(interp(p, {"p'"}), p.rules()[0]));
    CHECK(satisfies(interp(p, {"p"}), p.rules()[0]));
    CHECK_FALSE(satisfies(interp(p, {"p"}), p.rules()[1]));
    CHECK_FALSE(satisfies(interp(p, {}), p.rules()[0]));
}

TEST_CASE("models", "[asp]") {
    auto p = plain("#atoms p.\np'.");
    CHECK(models(p) == sets(p, {{"p'"}, {"p", "p'"}}));
    auto e = plain("#atoms p.");
    CHECK(models(e) == sets(e, {{}, {"p"}}));
    CHECK(models(plain(":- .")).empty());
}

TEST_CASE("gl reduct", "[asp]") {
    auto p = plain("p' :- ~p.");
    CHECK(gl_reduct(p, interp(p, {"p"})).rules().empty());
    auto r = gl_reduct(p, interp(p, {"p'"}));
    REQUIRE(r.rules().size() == 1);
    CHECK(render_rule(r.rules()[0], r.atoms()) == "p'.");

    auto q  = plain("a :- b, ~ ~c.");
    auto rq = gl_reduct(q, interp(q, {"b", "c"}));
    REQUIRE(rq.rules().size() == 1);
    CHECK(render_rule(rq.rules()[0], rq.atoms()) == "a :- b.");
    CHECK(gl_reduct(q, interp(q, {"b"})).rules().empty());
}

TEST_CASE("answer sets", "[asp]") {
    auto p = plain("p' :- ~p.\np :- ~p'.");
    CHECK(answer_sets(p) == sets(p, {{"p"}, {"p'"}}));
    CHECK(answer_sets(plain("p :- ~p.")).empty());
    auto f = plain("p.");
    CHECK(answer_sets(f) == sets(f, {{"p"}}));
    auto d = plain("a | b.");
    CHECK(answer_sets(d) == sets(d, {{"a"}, {"b"}}));
}

TEST_CASE("se models", "[asp]") {
    auto p = plain("#atoms p.\np'.");
    auto s = se_models(p);
    std::vector<SEPair> want{{interp(p, {"p'"}), interp(p, {"p'"})},
                             {interp(p, {"p'"}), interp(p, {"p", "p'"})},
                             {interp(p, {"p", "p'"}), interp(p, {"p", "p'"})}};
    std::sort(want.begin(), want.end());
    CHECK(s.pairs == want);

    auto e = plain("#atoms p.");
    CHECK(se_models(e) == full_pair_set(e.universe()));
    CHECK(full_pair_set(e.universe()).size() == 3);

    auto n = plain("p :- ~p.");
    CHECK(se_models(n).pairs == std::vector<SEPair>{{interp(n, {}), interp(n, {"p"})}, {interp(n, {"p"}), interp(n, {"p"})}});
}

TEST_CASE("full pair set has 3^n pairs", "[asp]") {
    for (std::size_t n = 0; n != 7; ++n) {
        std::size_t want = 1;
        for (std::size_t i = 0; i != n; ++i) want *= 3;
        CHECK(full_pair_set(AtomSet::first_n(n)).size() == want);
    }
}

TEST_CASE("asp strong equivalence", "[asp]") {
    CHECK(asp_strong_equiv(plain("p :- p."), plain("#atoms p.")));
    CHECK_FALSE(asp_strong_equiv(plain("p."), plain("p :- ~p.")));
    auto p = plain("a :- ~b.\nb :- ~a.");
    CHECK(asp_strong_equiv(p, p));
    CHECK(asp_strong_equiv(plain("a :- ~b."), plain("a | b.")) == false);
}

TEST_CASE("caps", "[asp]") {
    ProgramBuilder b;
    for (int i = 0; i != 16; ++i) b.atom("a" + std::to_string(i));
    auto p = b.build();
    CHECK_THROWS_AS(se_models(p), ResourceLimit);
    CHECK_NOTHROW(models(p));
    CHECK_THROWS_AS(models(p, {10, 10, 10}), ResourceLimit);
    CHECK_THROWS_AS(models(parse_program("p :- not p.")), PreconditionError);
}

TEST_CASE("asp agrees with the naive oracle", "[asp][oracle]") {
    oracle::Gen gen(101);
    for (int i = 0; i != 400; ++i) {
        auto p = gen.program(1 + gen.below(5), gen.below(5), false, 0.3);
        auto u = p.universe();
        REQUIRE(as_oracle(models(p)) == oracle::models(p.rules(), u));
        REQUIRE(as_oracle(answer_sets(p)) == oracle::answer_sets(p.rules(), u));
        REQUIRE(oracle::to_pairs(se_models(p)) == oracle::se_models(p.rules(), u));
    }
}

TEST_CASE("asp invariants", "[asp]") {
    oracle::Gen gen(202);
    for (int i = 0; i != 200; ++i) {
        auto a = gen.program(1 + gen.below(4), gen.below(4), false, 0.3);
        auto b = gen.program(1 + gen.below(4), gen.below(4), false, 0.3);
        auto [x, y] = align_domains(a, b);

        auto se = se_models(x);
        for (auto m : models(x)) {
            CHECK(se.contains({m, m}));
        }
        auto ms = models(x);
        for (auto m : answer_sets(x)) {
            CHECK(std::binary_search(ms.begin(), ms.end(), m));
        }
        CHECK(se_models(unite(x, y)) == intersect(se_models(x), se_models(y)));
    }
}

TEST_CASE("positive programs", "[asp]") {
    oracle::Gen gen(303);
    for (int i = 0; i != 200; ++i) {
        elpse::ProgramBuilder b;
        for (std::size_t a = 0; a != 4; ++a) b.atom(oracle::Gen::name(a));
        for (int k = 0; k != 3; ++k) {
            b.rule(oracle::Gen::named(gen.rule(4, {Slot::head, Slot::pos}, 0.3)));
        }
        auto p  = b.build();
        auto ms = models(p);
        InterpretationSet minimal;
        for (auto m : ms) {
            bool min = std::none_of(ms.begin(), ms.end(), [&](Interpretation o) { return o.proper_subset_of(m); });
            if (min) minimal.push_back(m);
        }
        CHECK(answer_sets(p) == minimal);
        for (auto m : ms) {
            CHECK(gl_reduct(p, m) == p);
        }
    }
}

TEST_CASE("strong equivalence is sound for sampled extensions", "[asp][extension]") {
    oracle::Gen gen(404);
    int         found = 0;
    for (int tries = 0; found != 200 && tries != 200000; ++tries) {
        auto a = gen.program(3, 1 + gen.below(2), false, 0.3);
        auto b = gen.program(3, 1 + gen.below(2), false, 0.3);
        auto [x, y] = align_domains(a, b);
        if (!asp_strong_equiv(x, y)) continue;
        ++found;
        for (int k = 0; k != 50; ++k) {
            auto q = gen.program(3, 1 + gen.below(3), false, 0.3);
            REQUIRE(answer_sets(unite(x, q)) == answer_sets(unite(y, q)));
        }
    }
    CHECK(found == 200);
}
