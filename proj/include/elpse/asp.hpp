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
#include <array>
#include <compare>
#include <iterator>
#include <span>
#include <vector>

namespace elpse {

/// Interpretations in canonical (ascending numeric) order, no duplicates.
using InterpretationSet = std::vector<Interpretation>;

/// SE-model candidate (X, Y) with X subset of Y. Ordered by Y, then X.
struct SEPair {
    AtomSet x;
    AtomSet y;

    friend constexpr bool                 operator==(SEPair, SEPair) noexcept = default;
    friend constexpr std::strong_ordering operator<=>(SEPair a, SEPair b) noexcept {
        if (auto c = a.y <=> b.y; c != 0) {
            return c;
        }
        return a.x <=> b.x;
    }
};

/// Set of SE-pairs over a fixed universe, sorted.
struct SEModelSet {
    AtomSet             universe;
    std::vector<SEPair> pairs;

    [[nodiscard]] bool        empty() const noexcept { return pairs.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return pairs.size(); }
    [[nodiscard]] bool        contains(SEPair p) const { return std::binary_search(pairs.begin(), pairs.end(), p); }
    [[nodiscard]] bool        subset_of(const SEModelSet& o) const {
        return std::includes(o.pairs.begin(), o.pairs.end(), pairs.begin(), pairs.end());
    }
    /// { Y | (X, Y) in S }
    [[nodiscard]] InterpretationSet there_models() const {
        InterpretationSet out;
        for (auto p : pairs) {
            if (out.empty() || out.back() != p.y) {
                out.push_back(p.y);
            }
        }
        return out;
    }

    friend bool operator==(const SEModelSet&, const SEModelSet&) = default;
};

/// All pairs X subset Y subset universe; 3^|universe| elements.
[[nodiscard]] inline SEModelSet full_pair_set(AtomSet universe) {
    SEModelSet s{universe, {}};
    for_each_subset(universe, [&](AtomSet y) {
        for_each_subset(y, [&](AtomSet x) {
            s.pairs.push_back({x, y});
            return true;
        });
        return true;
    });
    return s;
}

[[nodiscard]] inline SEModelSet intersect(const SEModelSet& a, const SEModelSet& b) {
    SEModelSet out{a.universe, {}};
    std::set_intersection(a.pairs.begin(), a.pairs.end(), b.pairs.begin(), b.pairs.end(), std::back_inserter(out.pairs));
    return out;
}

/// I |= r for a plain rule: body false in I, or some head atom in I.
[[nodiscard]] constexpr bool satisfies(Interpretation i, const Rule& r) noexcept {
    bool body = r.pos().subset_of(i) && r.dneg().subset_of(i) && !r.neg().intersects(i);
    return !body || r.head().intersects(i);
}

[[nodiscard]] inline bool satisfies(Interpretation i, std::span<const Rule> rules) noexcept {
    return std::all_of(rules.begin(), rules.end(), [i](const Rule& r) { return satisfies(i, r); });
}

namespace detail {

inline void require_plain(std::span<const Rule> rules) {
    for (const auto& r : rules) {
        if (!r.is_plain()) {
            throw PreconditionError("operation requires a plain program without epistemic literals");
        }
    }
}

/// Rule is false under every completion of the partial assignment.
[[nodiscard]] constexpr bool falsified(const Rule& r, AtomSet t, AtomSet f) noexcept {
    return (r.pos() | r.dneg()).subset_of(t) && r.neg().subset_of(f) && r.head().subset_of(f);
}

/// Enumerates all X subset universe with X |= rules in ascending order by
/// deciding atoms from the highest id down and pruning on falsified rules.
/// Atoms outside the universe are false. Stops when fn returns false.
template <typename Fn>
bool for_each_model(std::span<const Rule> rules, AtomSet universe, Fn&& fn) {
    std::array<std::size_t, AtomSet::capacity> order{};
    std::size_t                                n = 0;
    for (auto a : universe) {
        order[n++] = a;
    }
    std::reverse(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n));
    AtomSet t;
    AtomSet f{~universe.bits()};
    auto    rec = [&](auto& self, std::size_t depth) -> bool {
        for (const auto& r : rules) {
            if (falsified(r, t, f)) {
                return true;
            }
        }
        if (depth == n) {
            return fn(t);
        }
        auto a = order[depth];
        f.insert(a);
        if (!self(self, depth + 1)) {
            return false;
        }
        f.erase(a);
        t.insert(a);
        bool go = self(self, depth + 1);
        t.erase(a);
        return go;
    };
    return rec(rec, 0);
}

/// GL-reduct of plain rules: keep head <- pos where every negated body
/// element holds in i.
[[nodiscard]] inline std::vector<Rule> gl_reduct_rules(std::span<const Rule> rules, Interpretation i) {
    std::vector<Rule> out;
    for (const auto& r : rules) {
        if (!r.neg().intersects(i) && r.dneg().subset_of(i)) {
            Rule k;
            k[Slot::head] = r.head();
            k[Slot::pos]  = r.pos();
            out.push_back(k);
        }
    }
    return out;
}

/// No X strictly below m models the reduct of rules w.r.t. m.
[[nodiscard]] inline bool reduct_minimal(std::span<const Rule> rules, Interpretation m) {
    auto reduct = gl_reduct_rules(rules, m);
    bool smaller = false;
    for_each_model(reduct, m, [&](AtomSet x) {
        if (x != m) {
            smaller = true;
            return false;
        }
        return true;
    });
    return !smaller;
}

inline InterpretationSet models(std::span<const Rule> rules, AtomSet universe) {
    InterpretationSet out;
    for_each_model(rules, universe, [&](AtomSet m) {
        out.push_back(m);
        return true;
    });
    return out;
}

inline InterpretationSet answer_sets(std::span<const Rule> rules, AtomSet universe) {
    InterpretationSet out;
    for_each_model(rules, universe, [&](AtomSet m) {
        if (reduct_minimal(rules, m)) {
            out.push_back(m);
        }
        return true;
    });
    return out;
}

inline SEModelSet se_models(std::span<const Rule> rules, AtomSet universe) {
    SEModelSet out{universe, {}};
    for_each_model(rules, universe, [&](AtomSet y) {
        auto reduct = gl_reduct_rules(rules, y);
        for_each_model(reduct, y, [&](AtomSet x) {
            out.pairs.push_back({x, y});
            return true;
        });
        return true;
    });
    return out;
}

} // namespace detail

/// mods(P): every interpretation over the atom domain satisfying all rules.
[[nodiscard]] inline InterpretationSet models(ProgramView p, const Limits& limits = {}) {
    detail::require_plain(p.rules);
    detail::require_atoms(p.universe.size(), limits.max_model_atoms, "model enumeration");
    return detail::models(p.rules, p.universe);
}
[[nodiscard]] inline InterpretationSet models(const Program& p, const Limits& limits = {}) {
    return models(p.view(), limits);
}

[[nodiscard]] inline Program gl_reduct(const Program& p, Interpretation i) {
    detail::require_plain(p.rules());
    return Program(p.atoms(), p.elits(), detail::gl_reduct_rules(p.rules(), i));
}

/// Models M such that no proper subset of M models the GL-reduct w.r.t. M.
[[nodiscard]] inline InterpretationSet answer_sets(ProgramView p, const Limits& limits = {}) {
    detail::require_plain(p.rules);
    detail::require_atoms(p.universe.size(), limits.max_model_atoms, "answer-set enumeration");
    return detail::answer_sets(p.rules, p.universe);
}
[[nodiscard]] inline InterpretationSet answer_sets(const Program& p, const Limits& limits = {}) {
    return answer_sets(p.view(), limits);
}

/// Pairs (X, Y) with Y |= P and X |= P^Y.
[[nodiscard]] inline SEModelSet se_models(ProgramView p, const Limits& limits = {}) {
    detail::require_plain(p.rules);
    detail::require_atoms(p.universe.size(), limits.max_pair_atoms, "SE-model enumeration");
    return detail::se_models(p.rules, p.universe);
}
[[nodiscard]] inline SEModelSet se_models(const Program& p, const Limits& limits = {}) {
    return se_models(p.view(), limits);
}

/// Plain programs are strongly equivalent iff their SE-models coincide.
/// Domains are aligned first.
[[nodiscard]] inline bool asp_strong_equiv(const Program& a, const Program& b, const Limits& limits = {}) {
    auto [x, y] = align_domains(a, b);
    return se_models(x, limits) == se_models(y, limits);
}

} // namespace elpse
