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
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace elpse {

enum class EquivMode { strong, cwv, wv };

enum class DifferenceKind { pair_mismatch, realizability_mismatch, cwv_mismatch };

enum class Side { left, right };

[[nodiscard]] constexpr const char* to_string(EquivMode m) noexcept {
    switch (m) {
        case EquivMode::strong: return "strong";
        case EquivMode::cwv: return "cwv";
        case EquivMode::wv: return "wv";
    }
    return "";
}
[[nodiscard]] constexpr const char* to_string(DifferenceKind k) noexcept {
    switch (k) {
        case DifferenceKind::pair_mismatch: return "pair-mismatch";
        case DifferenceKind::realizability_mismatch: return "realizability-mismatch";
        case DifferenceKind::cwv_mismatch: return "cwv-mismatch";
    }
    return "";
}
[[nodiscard]] constexpr const char* to_string(Side s) noexcept { return s == Side::left ? "left" : "right"; }

/// Evidence that two programs differ. Guess indices and atom ids refer to
/// the aligned domains carried by the enclosing verdict.
///
/// pair_mismatch: both programs realize the guess and `pair` is an SE-model
/// of exactly one reduct. realizability_mismatch: only `side` realizes the
/// guess and `pair` is one of its SE-models. cwv_mismatch: `world_view` is a
/// (candidate) world view of `side` only.
struct DifferenceWitness {
    Guess                            guess;
    DifferenceKind                   kind{DifferenceKind::pair_mismatch};
    std::optional<SEPair>            pair;
    Side                             side{Side::left};
    std::optional<InterpretationSet> world_view;

    friend bool operator==(const DifferenceWitness&, const DifferenceWitness&) = default;
};

struct EquivVerdict {
    bool                             equivalent{true};
    EquivMode                        mode{EquivMode::strong};
    std::optional<DifferenceWitness> difference;
    std::vector<std::string>         atoms;
    std::vector<Elit>                elits;
};

namespace detail {

inline std::optional<SEPair> first_only_in(const SEModelSet& a, const SEModelSet& b) {
    for (auto p : a.pairs) {
        if (!b.contains(p)) {
            return p;
        }
    }
    return std::nullopt;
}

/// Difference between two entries of an SE-function at one guess.
inline std::optional<DifferenceWitness> entry_difference(Guess phi, const SEModelSet& l, const SEModelSet& r) {
    if (l == r) {
        return std::nullopt;
    }
    if (l.empty() || r.empty()) {
        bool left = !l.empty();
        return DifferenceWitness{phi, DifferenceKind::realizability_mismatch, (left ? l : r).pairs.front(),
                                 left ? Side::left : Side::right, std::nullopt};
    }
    auto pl = first_only_in(l, r);
    auto pr = first_only_in(r, l);
    bool left = pl && (!pr || *pl < *pr);
    return DifferenceWitness{phi, DifferenceKind::pair_mismatch, left ? pl : pr, left ? Side::left : Side::right,
                             std::nullopt};
}

inline EquivVerdict verdict_for(EquivMode mode, const Program& aligned) {
    EquivVerdict v;
    v.mode  = mode;
    v.atoms = aligned.atoms();
    v.elits = aligned.elits();
    return v;
}

} // namespace detail

/// Compares the deduplicated interpretation-set projections of the
/// candidate world views (cwv) or world views (wv) after aligning domains.
[[nodiscard]] inline EquivVerdict ordinary_equiv(const Program& a, const Program& b, EquivMode mode,
                                                 const Limits& limits = {}) {
    if (mode == EquivMode::strong) {
        throw std::invalid_argument("ordinary_equiv compares cwv or wv only");
    }
    auto [x, y] = align_domains(a, b);
    auto v      = detail::verdict_for(mode, x);
    auto vx     = mode == EquivMode::wv ? wvs(x, limits) : cwvs(x, limits);
    auto vy     = mode == EquivMode::wv ? wvs(y, limits) : cwvs(y, limits);
    auto px     = project(vx);
    auto py     = project(vy);
    if (px == py) {
        return v;
    }
    auto missing = [](const std::vector<WorldView>& views, const std::vector<InterpretationSet>& other) {
        return std::find_if(views.begin(), views.end(), [&](const WorldView& w) {
            return !std::binary_search(other.begin(), other.end(), w.interpretations);
        });
    };
    auto ix = missing(vx, py);
    auto iy = missing(vy, px);
    auto order = guesses_in_order(x.elits().size());
    auto rank  = [&](Guess g) { return std::find(order.begin(), order.end(), g) - order.begin(); };
    bool left  = ix != vx.end() && (iy == vy.end() || rank(ix->guess) <= rank(iy->guess));
    const auto& w = left ? *ix : *iy;
    v.equivalent  = false;
    v.difference  = DifferenceWitness{w.guess, DifferenceKind::cwv_mismatch, std::nullopt,
                                      left ? Side::left : Side::right, w.interpretations};
    return v;
}

/// Entrywise SE-function comparison; reports the first differing guess in
/// canonical order.
[[nodiscard]] inline EquivVerdict strong_equiv(const Program& a, const Program& b, const Limits& limits = {}) {
    auto [x, y] = align_domains(a, b);
    auto v      = detail::verdict_for(EquivMode::strong, x);
    auto fx     = se_function(x, limits);
    auto fy     = se_function(y, limits);
    for (auto phi : guesses_in_order(x.elits().size())) {
        if (auto d = detail::entry_difference(phi, fx[phi], fy[phi])) {
            v.equivalent = false;
            v.difference = d;
            return v;
        }
    }
    return v;
}

/// Guess-by-guess search for an SE-function difference: for each guess,
/// build a small compatible witness set per program, check it against the
/// models of the reducts and look for a pair in one reduct's SE-models
/// only. A guess realized by one program only is reported as such.
[[nodiscard]] inline std::optional<DifferenceWitness> find_se_difference(const Program& a, const Program& b,
                                                                          const Limits& limits = {}) {
    auto [x, y] = align_domains(a, b);
    detail::require_elits(x.elits().size(), limits.max_elits);
    detail::require_atoms(x.atoms().size(), limits.max_pair_atoms, "SE-function");
    auto universe = x.universe();
    const auto& elits = x.elits();
    for (auto phi : guesses_in_order(elits.size())) {
        auto g  = split_guess(elits, phi);
        auto rx = detail::epistemic_reduct_rules(x.rules(), g);
        auto ry = detail::epistemic_reduct_rules(y.rules(), g);
        auto mx = detail::models(rx, universe);
        auto my = detail::models(ry, universe);
        std::optional<InterpretationSet> cx;
        std::optional<InterpretationSet> cy;
        if (realizable(phi, mx, elits)) {
            cx = minimal_compatible_witness(phi, mx, elits);
        }
        if (realizable(phi, my, elits)) {
            cy = minimal_compatible_witness(phi, my, elits);
        }
        if (!cx && !cy) {
            continue;
        }
        auto sx = detail::se_models(rx, universe);
        auto sy = detail::se_models(ry, universe);
        if (!cx || !cy) {
            bool left = cx.has_value();
            const auto& s = left ? sx : sy;
            return DifferenceWitness{phi, DifferenceKind::realizability_mismatch, s.pairs.front(),
                                     left ? Side::left : Side::right, std::nullopt};
        }
        if (auto d = detail::entry_difference(phi, sx, sy)) {
            return d;
        }
    }
    return std::nullopt;
}

namespace detail {

inline std::string witness_atom(std::size_t i) { return std::string(reserved_prefix) + std::to_string(i); }

} // namespace detail

/// Plain program W such that the world views of a with W and b with W
/// differ, built from an SE-function difference. The result is checked
/// before it is returned.
///
/// One fresh atom y_i per interpretation Y_i over the atom domain selects
/// Y_i. The members of a compatible set C drawn from the owning side's
/// reduct models are realized as answer sets, all other interpretations are
/// excluded, and the interpretation Y of the differing pair is handled so
/// that it is an answer set of exactly one of the two extended reducts.
[[nodiscard]] inline Program construct_witness(const Program& a, const Program& b, const DifferenceWitness& d,
                                               const Limits& limits = {}) {
    auto [x, y] = align_domains(a, b);
    if (d.kind == DifferenceKind::cwv_mismatch || !d.pair) {
        throw NoDifference("witness construction needs an SE-pair difference");
    }
    if (!d.guess.subset_of(Guess::first_n(x.elits().size()))) {
        throw NoDifference("guess refers to epistemic literals outside the domain");
    }
    const auto& one = d.side == Side::left ? x : y;
    const auto& two = d.side == Side::left ? y : x;
    auto        phi = d.guess;
    auto        n_atoms = one.atoms().size();
    detail::require_atoms(n_atoms, limits.max_pair_atoms, "witness construction");
    if (n_atoms >= 6 || n_atoms + (std::size_t{1} << n_atoms) > limits.max_model_atoms) {
        throw ResourceLimit("witness construction: " + std::to_string(n_atoms) + " atoms need " +
                            std::to_string(std::size_t{1} << n_atoms) + " selector atoms, exceeding cap of " +
                            std::to_string(limits.max_model_atoms) + " atoms in total");
    }
    auto e1 = detail::se_entry(one.view(), phi);
    auto e2 = detail::se_entry(two.view(), phi);
    auto [px, py] = *d.pair;
    if (!e1.contains(*d.pair) || e2.contains(*d.pair)) {
        throw NoDifference("pair is not in exactly the owning program's SE-function entry");
    }

    auto        universe = one.universe();
    const auto& elits    = one.elits();
    auto        g        = split_guess(elits, phi);
    auto        m1       = e1.there_models();
    auto        m2       = detail::models(detail::epistemic_reduct_rules(two.rules(), g), universe);
    auto        cset     = minimal_compatible_witness(phi, m1, elits);

    // Y_1..Y_m = C, Y_{m+1}..Y_n = the remaining interpretations; 0-based here.
    std::vector<Interpretation> ys(cset.begin(), cset.end());
    for_each_subset(universe, [&](AtomSet i) {
        if (!std::binary_search(cset.begin(), cset.end(), i)) {
            ys.push_back(i);
        }
        return true;
    });
    auto m = cset.size();
    auto n = ys.size();
    auto k = static_cast<std::size_t>(std::find(ys.begin(), ys.end(), py) - ys.begin());

    ProgramBuilder wb;
    for (const auto& name : one.atoms()) {
        wb.atom(name);
    }
    auto name = [&](std::size_t atom) { return one.atoms()[atom]; };
    auto sel  = [](std::size_t i) { return detail::witness_atom(i + 1); };

    NamedRule choice;
    for (std::size_t i = 0; i != n; ++i) {
        choice.add(Slot::head, sel(i));
    }
    wb.rule(choice);
    for (std::size_t i = 0; i != n; ++i) {
        for (auto a : universe) {
            NamedRule pin;
            pin.add(Slot::pos, sel(i));
            pin.add(ys[i].contains(a) ? Slot::neg : Slot::pos, name(a));
            wb.rule(pin);
        }
    }
    auto realize = [&](std::size_t i) {
        if (i < m) {
            for (auto a : ys[i]) {
                wb.rule(NamedRule{}.add(Slot::head, name(a)).add(Slot::pos, sel(i)));
            }
        }
        else {
            wb.rule(NamedRule{}.add(Slot::pos, sel(i)));
        }
    };
    for (std::size_t i = 0; i != n; ++i) {
        if (i != k) {
            realize(i);
        }
    }
    bool c_in_two = std::all_of(cset.begin(), cset.end(),
                                [&](Interpretation i) { return std::binary_search(m2.begin(), m2.end(), i); });
    if (!c_in_two) {
        realize(k);
    }
    else if (!std::binary_search(m2.begin(), m2.end(), py)) {
        for (auto a : py) {
            wb.rule(NamedRule{}.add(Slot::head, name(a)).add(Slot::pos, sel(k)));
        }
    }
    else {
        for (auto a : px) {
            wb.rule(NamedRule{}.add(Slot::head, name(a)).add(Slot::pos, sel(k)));
        }
        for (auto a : py - px) {
            for (auto b2 : py - px) {
                if (a != b2) {
                    wb.rule(NamedRule{}.add(Slot::head, name(a)).add(Slot::pos, name(b2)).add(Slot::pos, sel(k)));
                }
            }
        }
    }
    auto w = wb.build();

    Limits check = limits;
    check.max_model_atoms = std::max(check.max_model_atoms, w.atoms().size());
    auto lw = project(wvs(unite(x, w), check));
    auto rw = project(wvs(unite(y, w), check));
    if (lw == rw) {
        throw WitnessVerificationError("constructed program does not separate the world views");
    }
    return w;
}

} // namespace elpse
