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

#include <elpse/bitset.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace elpse {

/// Prefix reserved for atoms introduced by witness construction.
inline constexpr std::string_view reserved_prefix = "__w";

/// Epistemic literal `not a` (negated == false) or `not ~a` (negated == true).
struct Elit {
    std::uint32_t atom{0};
    bool          negated{false};

    friend constexpr auto operator<=>(const Elit&, const Elit&) = default;
};

/// Body and head slots of a rule in normal form:
///
///     A <- B, ~C, ~~N, not D, not ~E, ~not F, ~not ~G
///
/// N (double default negation) only occurs in plain programs, e.g. in
/// epistemic reducts; ELP source rules leave it empty.
enum class Slot : std::uint8_t {
    head,        ///< A
    pos,         ///< B
    neg,         ///< C   ~c
    dneg,        ///< N   ~ ~n
    epi,         ///< D   not d
    epi_neg,     ///< E   not ~e
    neg_epi,     ///< F   ~ not f
    neg_epi_neg, ///< G   ~ not ~g
};
inline constexpr std::size_t slot_count = 8;

inline constexpr std::array<Slot, slot_count> all_slots = {Slot::head,    Slot::pos,     Slot::neg,     Slot::dneg,
                                                           Slot::epi,     Slot::epi_neg, Slot::neg_epi, Slot::neg_epi_neg};

/// A ground rule as one atom set per slot. An empty head is a constraint,
/// an empty body is the fact body.
struct Rule {
    std::array<AtomSet, slot_count> slots{};

    [[nodiscard]] constexpr AtomSet& operator[](Slot s) noexcept { return slots[static_cast<std::size_t>(s)]; }
    [[nodiscard]] constexpr AtomSet  operator[](Slot s) const noexcept { return slots[static_cast<std::size_t>(s)]; }

    [[nodiscard]] constexpr AtomSet head() const noexcept { return (*this)[Slot::head]; }
    [[nodiscard]] constexpr AtomSet pos() const noexcept { return (*this)[Slot::pos]; }
    [[nodiscard]] constexpr AtomSet neg() const noexcept { return (*this)[Slot::neg]; }
    [[nodiscard]] constexpr AtomSet dneg() const noexcept { return (*this)[Slot::dneg]; }
    [[nodiscard]] constexpr AtomSet epi() const noexcept { return (*this)[Slot::epi]; }
    [[nodiscard]] constexpr AtomSet epi_neg() const noexcept { return (*this)[Slot::epi_neg]; }
    [[nodiscard]] constexpr AtomSet neg_epi() const noexcept { return (*this)[Slot::neg_epi]; }
    [[nodiscard]] constexpr AtomSet neg_epi_neg() const noexcept { return (*this)[Slot::neg_epi_neg]; }

    [[nodiscard]] constexpr AtomSet atoms() const noexcept {
        AtomSet all;
        for (auto s : slots) {
            all |= s;
        }
        return all;
    }
    [[nodiscard]] constexpr bool is_plain() const noexcept {
        return (epi() | epi_neg() | neg_epi() | neg_epi_neg()).empty();
    }

    friend constexpr bool operator==(const Rule&, const Rule&) = default;
};

/// Epistemic literals occurring in r, sorted.
[[nodiscard]] inline std::vector<Elit> elits_of(const Rule& r) {
    std::vector<Elit> out;
    for (auto a : r.epi() | r.neg_epi()) {
        out.push_back({static_cast<std::uint32_t>(a), false});
    }
    for (auto a : r.epi_neg() | r.neg_epi_neg()) {
        out.push_back({static_cast<std::uint32_t>(a), true});
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Non-owning view of rules together with the atom and elit domains they
/// are evaluated over. The atom domain need not be a prefix of the ids.
struct ProgramView {
    std::span<const Rule> rules;
    AtomSet               universe;
    std::span<const Elit> elits;
};

/// Ground ELP (atom domain, epistemic-literal domain, rules). Atom ids are
/// ranks of the names in lexicographic order; elits are sorted by
/// (atom, negated). Immutable after construction.
class Program {
public:
    Program() = default;
    Program(std::vector<std::string> atoms, std::vector<Elit> elits, std::vector<Rule> rules)
        : atoms_(std::move(atoms))
        , elits_(std::move(elits))
        , rules_(std::move(rules)) {
        validate();
    }

    [[nodiscard]] const std::vector<std::string>& atoms() const noexcept { return atoms_; }
    [[nodiscard]] const std::vector<Elit>&        elits() const noexcept { return elits_; }
    [[nodiscard]] const std::vector<Rule>&        rules() const noexcept { return rules_; }
    [[nodiscard]] AtomSet universe() const noexcept { return AtomSet::first_n(atoms_.size()); }
    [[nodiscard]] ProgramView view() const noexcept { return {rules_, universe(), elits_}; }

    [[nodiscard]] std::optional<std::uint32_t> find_atom(std::string_view name) const {
        auto it = std::lower_bound(atoms_.begin(), atoms_.end(), name);
        if (it == atoms_.end() || *it != name) {
            return std::nullopt;
        }
        return static_cast<std::uint32_t>(it - atoms_.begin());
    }
    [[nodiscard]] std::optional<std::size_t> find_elit(Elit e) const {
        auto it = std::lower_bound(elits_.begin(), elits_.end(), e);
        if (it == elits_.end() || *it != e) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - elits_.begin());
    }

    friend bool operator==(const Program&, const Program&) = default;

private:
    void validate() const {
        if (atoms_.size() > AtomSet::capacity) {
            throw std::invalid_argument("program has more than 64 atoms");
        }
        if (elits_.size() > Guess::capacity) {
            throw std::invalid_argument("program has more than 64 epistemic literals");
        }
        if (!std::is_sorted(atoms_.begin(), atoms_.end()) ||
            std::adjacent_find(atoms_.begin(), atoms_.end()) != atoms_.end()) {
            throw std::invalid_argument("atom domain must be sorted and duplicate free");
        }
        if (!std::is_sorted(elits_.begin(), elits_.end()) ||
            std::adjacent_find(elits_.begin(), elits_.end()) != elits_.end()) {
            throw std::invalid_argument("elit domain must be sorted and duplicate free");
        }
        for (const auto& e : elits_) {
            if (e.atom >= atoms_.size()) {
                throw std::invalid_argument("epistemic literal over an atom outside the domain");
            }
        }
        for (const auto& r : rules_) {
            if (!r.atoms().subset_of(universe())) {
                throw std::invalid_argument("rule mentions an atom outside the domain");
            }
            for (const auto& e : elits_of(r)) {
                if (!find_elit(e)) {
                    throw std::invalid_argument("rule mentions an epistemic literal outside the domain");
                }
            }
        }
    }

    std::vector<std::string> atoms_;
    std::vector<Elit>        elits_;
    std::vector<Rule>        rules_;
};

/// Epistemic literal identified by atom name.
struct NamedElit {
    std::string atom;
    bool        negated{false};

    friend auto operator<=>(const NamedElit&, const NamedElit&) = default;
};

/// Rule over atom names, one name list per slot.
struct NamedRule {
    std::array<std::vector<std::string>, slot_count> slots;

    NamedRule& add(Slot s, std::string atom) {
        slots[static_cast<std::size_t>(s)].push_back(std::move(atom));
        return *this;
    }
};

/// Collects atoms, elits and rules by name; build() infers the domains from
/// rule occurrences and merges the explicitly declared symbols.
class ProgramBuilder {
public:
    ProgramBuilder& atom(std::string name) {
        atoms_.push_back(std::move(name));
        return *this;
    }
    ProgramBuilder& elit(std::string atom, bool negated) {
        elits_.push_back({std::move(atom), negated});
        return *this;
    }
    ProgramBuilder& rule(NamedRule r) {
        rules_.push_back(std::move(r));
        return *this;
    }

    [[nodiscard]] Program build() const {
        std::vector<std::string> names = atoms_;
        for (const auto& r : rules_) {
            for (const auto& s : r.slots) {
                names.insert(names.end(), s.begin(), s.end());
            }
        }
        std::sort(names.begin(), names.end());
        names.erase(std::unique(names.begin(), names.end()), names.end());
        if (names.size() > AtomSet::capacity) {
            throw std::invalid_argument("program has more than 64 atoms");
        }
        auto id = [&](const std::string& n) {
            return static_cast<std::uint32_t>(std::lower_bound(names.begin(), names.end(), n) - names.begin());
        };
        std::vector<Elit> elits;
        for (const auto& e : elits_) {
            if (!std::binary_search(names.begin(), names.end(), e.atom)) {
                throw std::invalid_argument("epistemic literal over undeclared atom '" + e.atom + "'");
            }
            elits.push_back({id(e.atom), e.negated});
        }
        std::vector<Rule> rules;
        rules.reserve(rules_.size());
        for (const auto& nr : rules_) {
            Rule r;
            for (std::size_t i = 0; i != slot_count; ++i) {
                for (const auto& n : nr.slots[i]) {
                    r.slots[i].insert(id(n));
                }
            }
            auto re = elits_of(r);
            elits.insert(elits.end(), re.begin(), re.end());
            rules.push_back(r);
        }
        std::sort(elits.begin(), elits.end());
        elits.erase(std::unique(elits.begin(), elits.end()), elits.end());
        return Program(std::move(names), std::move(elits), std::move(rules));
    }

private:
    std::vector<std::string> atoms_;
    std::vector<NamedElit>   elits_;
    std::vector<NamedRule>   rules_;
};

[[nodiscard]] inline std::vector<NamedElit> named_elits(const Program& p) {
    std::vector<NamedElit> out;
    out.reserve(p.elits().size());
    for (const auto& e : p.elits()) {
        out.push_back({p.atoms()[e.atom], e.negated});
    }
    return out;
}

/// Same rules over a domain extended by the given atoms and elits.
[[nodiscard]] inline Program extend_domain(const Program& p, std::span<const std::string> extra_atoms,
                                           std::span<const NamedElit> extra_elits) {
    std::vector<std::string> names = p.atoms();
    names.insert(names.end(), extra_atoms.begin(), extra_atoms.end());
    for (const auto& e : extra_elits) {
        names.push_back(e.atom);
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    if (names.size() > AtomSet::capacity) {
        throw std::invalid_argument("program has more than 64 atoms");
    }
    auto id = [&](const std::string& n) {
        return static_cast<std::uint32_t>(std::lower_bound(names.begin(), names.end(), n) - names.begin());
    };
    std::vector<std::uint32_t> remap(p.atoms().size());
    for (std::size_t i = 0; i != p.atoms().size(); ++i) {
        remap[i] = id(p.atoms()[i]);
    }
    std::vector<Elit> elits;
    for (const auto& e : p.elits()) {
        elits.push_back({remap[e.atom], e.negated});
    }
    for (const auto& e : extra_elits) {
        elits.push_back({id(e.atom), e.negated});
    }
    std::sort(elits.begin(), elits.end());
    elits.erase(std::unique(elits.begin(), elits.end()), elits.end());
    std::vector<Rule> rules;
    rules.reserve(p.rules().size());
    for (const auto& r : p.rules()) {
        Rule out;
        for (std::size_t i = 0; i != slot_count; ++i) {
            for (auto a : r.slots[i]) {
                out.slots[i].insert(remap[a]);
            }
        }
        rules.push_back(out);
    }
    return Program(std::move(names), std::move(elits), std::move(rules));
}

/// Program union: domains and rule lists are joined.
[[nodiscard]] inline Program unite(const Program& a, const Program& b) {
    auto ea = extend_domain(a, b.atoms(), named_elits(b));
    auto eb = extend_domain(b, a.atoms(), named_elits(a));
    std::vector<Rule> rules = ea.rules();
    rules.insert(rules.end(), eb.rules().begin(), eb.rules().end());
    return Program(ea.atoms(), ea.elits(), std::move(rules));
}

/// Both programs over the union of their atom and elit domains; rules are
/// unchanged. Domain extension does not change candidate world views.
[[nodiscard]] inline std::pair<Program, Program> align_domains(const Program& a, const Program& b) {
    return {extend_domain(a, b.atoms(), named_elits(b)), extend_domain(b, a.atoms(), named_elits(a))};
}

[[nodiscard]] inline bool is_plain(const Program& p) {
    return std::all_of(p.rules().begin(), p.rules().end(), [](const Rule& r) { return r.is_plain(); });
}

} // namespace elpse
