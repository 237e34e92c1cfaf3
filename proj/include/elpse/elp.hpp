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
#include <elpse/error.hpp>
#include <elpse/syntax.hpp>

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

namespace elpse {

/// A guess over an elit domain, split into atom masks:
/// `guessed_*` are the atoms a with `not a` / `not ~a` in the guess,
/// `free_*` those whose literal is in the domain but not guessed.
struct GuessSplit {
    AtomSet guessed_pos;
    AtomSet guessed_neg;
    AtomSet free_pos;
    AtomSet free_neg;
};

[[nodiscard]] inline GuessSplit split_guess(std::span<const Elit> elits, Guess phi) {
    GuessSplit s;
    for (std::size_t i = 0; i != elits.size(); ++i) {
        const auto& e      = elits[i];
        bool        picked = phi.contains(i);
        (e.negated ? (picked ? s.guessed_neg : s.free_neg) : (picked ? s.guessed_pos : s.free_pos)).insert(e.atom);
    }
    return s;
}

namespace detail {

/// r under the guess: guessed literals become true, remaining `not` become
/// default negation, and `~~~a` collapses to `~a`. Empty when a guessed
/// literal occurs under `~ not`.
[[nodiscard]] constexpr std::optional<Rule> epistemic_reduct_rule(const Rule& r, const GuessSplit& g) noexcept {
    if (r.neg_epi().intersects(g.guessed_pos) || r.neg_epi_neg().intersects(g.guessed_neg)) {
        return std::nullopt;
    }
    Rule out;
    out[Slot::head] = r.head();
    out[Slot::pos]  = r.pos();
    out[Slot::neg]  = r.neg() | (r.epi() - g.guessed_pos) | r.neg_epi_neg();
    out[Slot::dneg] = r.dneg() | (r.epi_neg() - g.guessed_neg) | r.neg_epi();
    return out;
}

[[nodiscard]] inline std::vector<Rule> epistemic_reduct_rules(std::span<const Rule> rules, const GuessSplit& g) {
    std::vector<Rule> out;
    out.reserve(rules.size());
    for (const auto& r : rules) {
        if (auto k = epistemic_reduct_rule(r, g)) {
            out.push_back(*k);
        }
    }
    return out;
}

/// Interpretations meeting condition 3 of compatibility for every unguessed
/// literal.
[[nodiscard]] inline InterpretationSet filter_unguessed(std::span<const Interpretation> ms, const GuessSplit& g) {
    InterpretationSet out;
    for (auto i : ms) {
        if (g.free_pos.subset_of(i) && !g.free_neg.intersects(i)) {
            out.push_back(i);
        }
    }
    return out;
}

/// Condition 2: every guessed literal is falsified by some interpretation.
[[nodiscard]] inline bool witnesses_guessed(std::span<const Interpretation> ms, const GuessSplit& g, AtomSet universe) {
    AtomSet somewhere_false;
    AtomSet somewhere_true;
    for (auto i : ms) {
        somewhere_true |= i;
        somewhere_false |= universe - i;
    }
    return g.guessed_pos.subset_of(somewhere_false) && g.guessed_neg.subset_of(somewhere_true);
}

inline void require_guess(Guess phi, std::span<const Elit> elits) {
    if (!phi.subset_of(Guess::first_n(elits.size()))) {
        throw PreconditionError("guess refers to epistemic literals outside the domain");
    }
}

} // namespace detail

/// Plain program obtained by replacing guessed epistemic literals by true
/// and all other epistemic negations by default negation.
[[nodiscard]] inline Program epistemic_reduct(const Program& p, Guess phi) {
    detail::require_guess(phi, p.elits());
    return Program(p.atoms(), {}, detail::epistemic_reduct_rules(p.rules(), split_guess(p.elits(), phi)));
}

/// Phi-compatibility of an interpretation set w.r.t. the elit domain:
/// (1) non-empty, (2) each guessed `not l` has a witness falsifying l,
/// (3) each unguessed `not l` has l true everywhere.
[[nodiscard]] inline bool compatible(std::span<const Interpretation> ms, Guess phi, std::span<const Elit> elits) {
    if (ms.empty()) {
        return false;
    }
    auto g = split_guess(elits, phi);
    if (detail::filter_unguessed(ms, g).size() != ms.size()) {
        return false;
    }
    return detail::witnesses_guessed(ms, g, AtomSet{~AtomSet::word_type{0}});
}

/// Some subset of ms is Phi-compatible. Decided on the largest candidate,
/// the interpretations meeting condition 3.
[[nodiscard]] inline bool realizable(Guess phi, std::span<const Interpretation> ms, std::span<const Elit> elits) {
    auto g     = split_guess(elits, phi);
    auto fstar = detail::filter_unguessed(ms, g);
    return !fstar.empty() && detail::witnesses_guessed(fstar, g, AtomSet{~AtomSet::word_type{0}});
}

/// Compatible subset of ms with at most max(|Phi|, 1) elements: the
/// smallest witness per guessed literal, or the smallest candidate when the
/// guess is empty.
[[nodiscard]] inline InterpretationSet minimal_compatible_witness(Guess phi, std::span<const Interpretation> ms,
                                                                  std::span<const Elit> elits) {
    auto g     = split_guess(elits, phi);
    auto fstar = detail::filter_unguessed(ms, g);
    std::sort(fstar.begin(), fstar.end());
    if (fstar.empty()) {
        throw PreconditionError("guess is not realizable in the given interpretations");
    }
    InterpretationSet out;
    for (auto i : phi) {
        const auto& e   = elits[i];
        auto        hit = std::find_if(fstar.begin(), fstar.end(),
                                       [&](Interpretation m) { return m.contains(e.atom) == e.negated; });
        if (hit == fstar.end()) {
            throw PreconditionError("guess is not realizable in the given interpretations");
        }
        out.push_back(*hit);
    }
    if (phi.empty()) {
        out.push_back(fstar.front());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Whenever both `not a` and `not ~a` are in the domain, the guess contains
/// at least one of them.
[[nodiscard]] inline bool consistent_guess(Guess phi, std::span<const Elit> elits) {
    auto g = split_guess(elits, phi);
    return !g.free_pos.intersects(g.free_neg);
}

/// All guesses over n literals, by cardinality and then lexicographically
/// on the sorted index lists.
[[nodiscard]] inline std::vector<Guess> guesses_in_order(std::size_t n) {
    std::vector<Guess> out;
    out.reserve(std::size_t{1} << n);
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k <= n; ++k) {
        idx.resize(k);
        for (std::size_t i = 0; i != k; ++i) {
            idx[i] = i;
        }
        for (;;) {
            Guess g;
            for (auto i : idx) {
                g.insert(i);
            }
            out.push_back(g);
            std::size_t pos = k;
            while (pos > 0 && idx[pos - 1] == n - k + pos - 1) {
                --pos;
            }
            if (pos == 0) {
                break;
            }
            ++idx[pos - 1];
            for (std::size_t j = pos; j != k; ++j) {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    return out;
}

/// Total map from guesses to SE-model sets; entries are indexed by the
/// guess bits.
struct SEFunction {
    AtomSet                 universe;
    std::vector<Elit>       elits;
    std::vector<SEModelSet> entries;

    [[nodiscard]] const SEModelSet& operator[](Guess g) const { return entries.at(g.bits()); }

    friend bool operator==(const SEFunction&, const SEFunction&) = default;
};

namespace detail {
inline SEModelSet se_entry(ProgramView p, Guess phi) {
    auto reduct = epistemic_reduct_rules(p.rules, split_guess(p.elits, phi));
    auto se     = se_models(reduct, p.universe);
    if (!realizable(phi, se.there_models(), p.elits)) {
        se.pairs.clear();
    }
    return se;
}
} // namespace detail

/// semods(P^Phi) if Phi is realizable in P, the empty set otherwise.
[[nodiscard]] inline SEModelSet se_entry(ProgramView p, Guess phi, const Limits& limits = {}) {
    detail::require_guess(phi, p.elits);
    detail::require_atoms(p.universe.size(), limits.max_pair_atoms, "SE-function");
    return detail::se_entry(p, phi);
}

/// se_entry for every guess.
[[nodiscard]] inline SEFunction se_function(ProgramView p, const Limits& limits = {}) {
    detail::require_elits(p.elits.size(), limits.max_elits);
    detail::require_atoms(p.universe.size(), limits.max_pair_atoms, "SE-function");
    SEFunction f{p.universe, {p.elits.begin(), p.elits.end()}, {}};
    std::size_t n = std::size_t{1} << p.elits.size();
    f.entries.reserve(n);
    for (std::size_t bits = 0; bits != n; ++bits) {
        f.entries.push_back(detail::se_entry(p, Guess{bits}));
    }
    return f;
}
[[nodiscard]] inline SEFunction se_function(const Program& p, const Limits& limits = {}) {
    return se_function(p.view(), limits);
}

/// Candidate world view together with the guess it arises from.
struct WorldView {
    Guess             guess;
    InterpretationSet interpretations;

    friend bool operator==(const WorldView&, const WorldView&) = default;
};

/// All (Phi, AS(P^Phi)) with AS(P^Phi) Phi-compatible, guesses in canonical
/// order.
[[nodiscard]] inline std::vector<WorldView> cwvs(ProgramView p, const Limits& limits = {}) {
    detail::require_elits(p.elits.size(), limits.max_elits);
    detail::require_atoms(p.universe.size(), limits.max_model_atoms, "world-view enumeration");
    std::vector<WorldView> out;
    for (auto phi : guesses_in_order(p.elits.size())) {
        auto reduct = detail::epistemic_reduct_rules(p.rules, split_guess(p.elits, phi));
        auto as     = detail::answer_sets(reduct, p.universe);
        if (compatible(as, phi, p.elits)) {
            out.push_back({phi, std::move(as)});
        }
    }
    return out;
}
[[nodiscard]] inline std::vector<WorldView> cwvs(const Program& p, const Limits& limits = {}) {
    return cwvs(p.view(), limits);
}

/// Candidate world views whose guess is subset-maximal.
[[nodiscard]] inline std::vector<WorldView> maximal_guess_views(const std::vector<WorldView>& candidates) {
    std::vector<WorldView> out;
    for (const auto& c : candidates) {
        bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                     [&](const WorldView& o) { return c.guess.proper_subset_of(o.guess); });
        if (!dominated) {
            out.push_back(c);
        }
    }
    return out;
}

[[nodiscard]] inline std::vector<WorldView> wvs(ProgramView p, const Limits& limits = {}) {
    return maximal_guess_views(cwvs(p, limits));
}
[[nodiscard]] inline std::vector<WorldView> wvs(const Program& p, const Limits& limits = {}) {
    return wvs(p.view(), limits);
}

/// The candidate world view for phi read off the SE-function: the Y with
/// (Y, Y) in the entry and no (X, Y) for X strictly below Y, provided that
/// set is compatible.
[[nodiscard]] inline std::optional<InterpretationSet> cwv_from_se(const SEFunction& f, Guess phi,
                                                                  std::span<const Elit> elits) {
    const auto&       entry = f[phi];
    InterpretationSet m;
    for (std::size_t i = 0; i != entry.pairs.size();) {
        std::size_t j = i;
        while (j != entry.pairs.size() && entry.pairs[j].y == entry.pairs[i].y) {
            ++j;
        }
        if (j - i == 1 && entry.pairs[i].x == entry.pairs[i].y) {
            m.push_back(entry.pairs[i].y);
        }
        i = j;
    }
    if (!compatible(m, phi, elits)) {
        return std::nullopt;
    }
    return m;
}

/// Deduplicated, sorted interpretation sets of the given views.
[[nodiscard]] inline std::vector<InterpretationSet> project(std::span<const WorldView> views) {
    std::vector<InterpretationSet> out;
    for (const auto& v : views) {
        out.push_back(v.interpretations);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace elpse
