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

#include <elpse/asp.hpp>
#include <elpse/elp.hpp>
#include <elpse/error.hpp>
#include <elpse/syntax.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace elpse {

struct TautologyReport {
    std::size_t              index{0};
    bool                     verdict{false};
    std::vector<std::string> fired;
};

struct SubsumptionReport {
    std::size_t              subsumer{0};
    std::size_t              subsumee{0};
    bool                     verdict{false};
    bool                     rhd{false};
    bool                     RHD{false};
    bool                     subsumee_tautological{false};
    std::vector<std::string> failed;
};

namespace detail {

inline void require_elp_rule(const Rule& r) {
    if (!r.dneg().empty()) {
        throw PreconditionError("ELP rules have no double default negation");
    }
}

inline void require_plain_rule(const Rule& r) {
    if (!r.is_plain()) {
        throw PreconditionError("ASP rule expected, found epistemic literals");
    }
}

/// Program ({r...}) over exactly the atoms and elits occurring in the rules.
struct RuleProgram {
    std::vector<Rule> rules;
    std::vector<Elit> elits;
    AtomSet           universe;

    [[nodiscard]] ProgramView view(std::size_t count) const {
        return {std::span<const Rule>(rules).first(count), universe, elits};
    }
};

inline RuleProgram rule_program(std::vector<Rule> rules) {
    RuleProgram rp{std::move(rules), {}, {}};
    for (const auto& r : rp.rules) {
        rp.universe |= r.atoms();
        auto e = elits_of(r);
        rp.elits.insert(rp.elits.end(), e.begin(), e.end());
    }
    std::sort(rp.elits.begin(), rp.elits.end());
    rp.elits.erase(std::unique(rp.elits.begin(), rp.elits.end()), rp.elits.end());
    return rp;
}

} // namespace detail

/// A <- B, ~C, ~~D is tautological iff (alpha) A and B, (beta) B and C, or
/// (gamma) C and D share an atom.
[[nodiscard]] inline TautologyReport asp_tautological(const Rule& r, std::size_t index = 0) {
    detail::require_plain_rule(r);
    TautologyReport rep{index, false, {}};
    if (r.head().intersects(r.pos())) {
        rep.fired.emplace_back("alpha");
    }
    if (r.pos().intersects(r.neg())) {
        rep.fired.emplace_back("beta");
    }
    if (r.neg().intersects(r.dneg())) {
        rep.fired.emplace_back("gamma");
    }
    rep.verdict = !rep.fired.empty();
    return rep;
}

/// A <- B, ~C, not D, not ~E, ~not F, ~not ~G is tautological iff one of
/// (a) A&B, (b) B&(C|G), (c) C&F, (d) D&F, (e) E&G, (f) F&G is non-empty.
[[nodiscard]] inline TautologyReport elp_tautological(const Rule& r, std::size_t index = 0) {
    detail::require_elp_rule(r);
    TautologyReport rep{index, false, {}};
    auto            fire = [&](bool c, const char* label) {
        if (c) {
            rep.fired.emplace_back(label);
        }
    };
    fire(r.head().intersects(r.pos()), "a");
    fire(r.pos().intersects(r.neg() | r.neg_epi_neg()), "b");
    fire(r.neg().intersects(r.neg_epi()), "c");
    fire(r.epi().intersects(r.neg_epi()), "d");
    fire(r.epi_neg().intersects(r.neg_epi_neg()), "e");
    fire(r.neg_epi().intersects(r.neg_epi_neg()), "f");
    rep.verdict = !rep.fired.empty();
    return rep;
}

/// The SE-function of {r} is the full pair set at every consistent guess.
[[nodiscard]] inline bool semantic_tautological(const Rule& r, const Limits& limits = {}) {
    auto rp = detail::rule_program({r});
    auto f  = se_function(rp.view(1), limits);
    auto s  = full_pair_set(rp.universe);
    for (std::size_t bits = 0; bits != f.entries.size(); ++bits) {
        Guess phi{bits};
        if (consistent_guess(phi, rp.elits) && f[phi] != s) {
            return false;
        }
    }
    return true;
}

/// r = A <- B, ~C, ~~D subsumes a non-tautological s = A' <- B', ~C', ~~D'.
[[nodiscard]] inline bool asp_subsumes(const Rule& r, const Rule& s) {
    detail::require_plain_rule(r);
    if (asp_tautological(s).verdict) {
        throw PreconditionError("subsumee is tautological");
    }
    auto [a, b, c, d]     = std::array{r.head(), r.pos(), r.neg(), r.dneg()};
    auto [a2, b2, c2, d2] = std::array{s.head(), s.pos(), s.neg(), s.dneg()};
    return a.subset_of(a2 | c2) && b.subset_of(b2 | d2) && (!a.intersects(a2 - c2) || b.subset_of(b2)) &&
           c.subset_of(c2) && d.subset_of(b2 | d2);
}

/// semods({r}) is contained in semods({s}) over the atoms of both rules.
[[nodiscard]] inline bool semantic_asp_subsumes(const Rule& r, const Rule& s, const Limits& limits = {}) {
    detail::require_plain_rule(r);
    detail::require_plain_rule(s);
    auto rp = detail::rule_program({r, s});
    detail::require_atoms(rp.universe.size(), limits.max_pair_atoms, "SE-model enumeration");
    return detail::se_models(std::span<const Rule>(rp.rules).first(1), rp.universe)
        .subset_of(detail::se_models(std::span<const Rule>(rp.rules).subspan(1), rp.universe));
}

/// |(A u C u D) \ G'| > 1 or (B u E) \ F' non-empty.
[[nodiscard]] constexpr bool rhd(const Rule& r, const Rule& s) noexcept {
    return ((r.head() | r.neg() | r.epi()) - s.neg_epi_neg()).size() > 1 ||
           !((r.pos() | r.epi_neg()) - s.neg_epi()).empty();
}

/// (A u C u D) \ G' non-empty or |(B u E) \ F'| > 1.
[[nodiscard]] constexpr bool RHD(const Rule& r, const Rule& s) noexcept {
    return !((r.head() | r.neg() | r.epi()) - s.neg_epi_neg()).empty() ||
           ((r.pos() | r.epi_neg()) - s.neg_epi()).size() > 1;
}

/// Syntactic subsumption test for ELP rules. A tautological subsumee is
/// subsumed by every rule and reported as such without testing conditions.
[[nodiscard]] inline SubsumptionReport elp_subsumes(const Rule& r, const Rule& s, std::size_t ri = 0,
                                                    std::size_t si = 0) {
    detail::require_elp_rule(r);
    SubsumptionReport rep;
    rep.subsumer = ri;
    rep.subsumee = si;
    rep.rhd      = rhd(r, s);
    rep.RHD      = RHD(r, s);
    if (elp_tautological(s).verdict) {
        rep.verdict               = true;
        rep.subsumee_tautological = true;
        return rep;
    }
    auto a = r.head(), b = r.pos(), c = r.neg(), d = r.epi(), e = r.epi_neg(), f = r.neg_epi(), g = r.neg_epi_neg();
    auto a2 = s.head(), b2 = s.pos(), c2 = s.neg(), d2 = s.epi(), e2 = s.epi_neg(), f2 = s.neg_epi(),
         g2 = s.neg_epi_neg();
    auto check = [&](bool ok, const char* label) {
        if (!ok) {
            rep.failed.emplace_back(label);
        }
    };
    check(a.subset_of(a2 | c2 | d2 | g2), "a");
    check(!rep.rhd || a.subset_of(a2 | c2 | g2), "a*");
    check(b.subset_of(b2 | e2 | f2), "b");
    check(!rep.RHD || b.subset_of(b2 | f2), "b*");
    check(!a.intersects(a2 - (c2 | d2 | g2)) || b.subset_of(b2), "b'");
    check(!(rep.rhd && a.intersects(a2 - (c2 | g2))) || b.subset_of(b2), "b*'");
    check((c | d).subset_of(c2 | d2 | g2), "c");
    check(!rep.rhd || c.subset_of(c2 | g2), "c*");
    check(e.subset_of(b2 | e2 | f2), "d");
    check(f.subset_of(f2) && g.subset_of(g2), "e");
    rep.verdict = rep.failed.empty();
    return rep;
}

/// SE-function of {r} is entrywise contained in that of {s}, both over the
/// atoms and elits occurring in r and s.
[[nodiscard]] inline bool semantic_subsumes(const Rule& r, const Rule& s, const Limits& limits = {}) {
    auto rp = detail::rule_program({r, s});
    auto fr = se_function(rp.view(1), limits);
    auto fs = se_function({std::span<const Rule>(rp.rules).subspan(1), rp.universe, rp.elits}, limits);
    for (std::size_t i = 0; i != fr.entries.size(); ++i) {
        if (!fr.entries[i].subset_of(fs.entries[i])) {
            return false;
        }
    }
    return true;
}

struct SimplifyStep {
    enum class Kind { tautology, subsumed };
    Kind                     kind{Kind::tautology};
    std::size_t              removed{0}; ///< index in the input program
    std::size_t              by{0};      ///< subsumer index in the input program
    std::vector<std::string> conditions;
};

/// Removes tautological rules, then rules subsumed by another remaining
/// rule, until nothing changes. Of two rules subsuming each other the one
/// with the smaller index is kept. Domains are kept as they are.
[[nodiscard]] inline Program simplify_program(const Program& p, std::vector<SimplifyStep>* trace = nullptr) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i != p.rules().size(); ++i) {
        auto rep = elp_tautological(p.rules()[i], i);
        if (rep.verdict) {
            if (trace) {
                trace->push_back({SimplifyStep::Kind::tautology, i, i, rep.fired});
            }
        }
        else {
            keep.push_back(i);
        }
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t pos = 0; pos != keep.size(); ++pos) {
            auto        si = keep[pos];
            const auto& s  = p.rules()[si];
            auto        by = std::find_if(keep.begin(), keep.end(), [&](std::size_t ri) {
                if (ri == si || !elp_subsumes(p.rules()[ri], s).verdict) {
                    return false;
                }
                return ri < si || !elp_subsumes(s, p.rules()[ri]).verdict;
            });
            if (by != keep.end()) {
                if (trace) {
                    trace->push_back({SimplifyStep::Kind::subsumed, si, *by, {}});
                }
                keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(pos));
                changed = true;
                break;
            }
        }
    }
    std::vector<Rule> rules;
    for (auto i : keep) {
        rules.push_back(p.rules()[i]);
    }
    return Program(p.atoms(), p.elits(), std::move(rules));
}

} // namespace elpse
