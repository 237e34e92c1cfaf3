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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace elpse {

/// Fixed-width set of small indices (at most 64), one bit per element.
///
/// The tag keeps atom sets and epistemic-literal sets from being mixed up.
/// Ordering is the numeric order of the underlying word, which is the
/// canonical order used for interpretations and guesses throughout.
template <typename Tag>
class BitSet {
public:
    using word_type                       = std::uint64_t;
    static constexpr std::size_t capacity = 64;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type        = std::size_t;
        using difference_type   = std::ptrdiff_t;
        using pointer           = void;
        using reference         = std::size_t;

        constexpr iterator() noexcept = default;
        constexpr explicit iterator(word_type rest) noexcept : rest_(rest) {}

        constexpr std::size_t operator*() const noexcept { return static_cast<std::size_t>(std::countr_zero(rest_)); }
        constexpr iterator&   operator++() noexcept {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) noexcept {
            auto t = *this;
            ++*this;
            return t;
        }
        constexpr bool operator==(const iterator&) const noexcept = default;

    private:
        word_type rest_{0};
    };

    constexpr BitSet() noexcept = default;
    constexpr explicit BitSet(word_type bits) noexcept : bits_(bits) {}

    [[nodiscard]] static constexpr BitSet single(std::size_t i) noexcept { return BitSet{word_type{1} << i}; }
    [[nodiscard]] static constexpr BitSet first_n(std::size_t n) noexcept {
        return n >= capacity ? BitSet{~word_type{0}} : BitSet{(word_type{1} << n) - 1};
    }

    [[nodiscard]] constexpr word_type   bits() const noexcept { return bits_; }
    [[nodiscard]] constexpr bool        empty() const noexcept { return bits_ == 0; }
    [[nodiscard]] constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    [[nodiscard]] constexpr bool contains(std::size_t i) const noexcept { return i < capacity && ((bits_ >> i) & 1u); }
    [[nodiscard]] constexpr bool subset_of(BitSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }
    [[nodiscard]] constexpr bool proper_subset_of(BitSet o) const noexcept { return subset_of(o) && bits_ != o.bits_; }
    [[nodiscard]] constexpr bool intersects(BitSet o) const noexcept { return (bits_ & o.bits_) != 0; }

    constexpr BitSet& insert(std::size_t i) noexcept {
        bits_ |= word_type{1} << i;
        return *this;
    }
    constexpr BitSet& erase(std::size_t i) noexcept {
        bits_ &= ~(word_type{1} << i);
        return *this;
    }

    [[nodiscard]] constexpr iterator begin() const noexcept { return iterator{bits_}; }
    [[nodiscard]] constexpr iterator end() const noexcept { return iterator{}; }

    constexpr BitSet& operator|=(BitSet o) noexcept {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr BitSet& operator&=(BitSet o) noexcept {
        bits_ &= o.bits_;
        return *this;
    }
    /// Set difference.
    constexpr BitSet& operator-=(BitSet o) noexcept {
        bits_ &= ~o.bits_;
        return *this;
    }

    friend constexpr BitSet operator|(BitSet a, BitSet b) noexcept { return a |= b; }
    friend constexpr BitSet operator&(BitSet a, BitSet b) noexcept { return a &= b; }
    friend constexpr BitSet operator-(BitSet a, BitSet b) noexcept { return a -= b; }

    friend constexpr bool                 operator==(BitSet, BitSet) noexcept = default;
    friend constexpr std::strong_ordering operator<=>(BitSet a, BitSet b) noexcept { return a.bits_ <=> b.bits_; }

private:
    word_type bits_{0};
};

struct AtomTag;
struct ElitTag;

/// Set of atom ids; an interpretation is the set of atoms it makes true.
using AtomSet        = BitSet<AtomTag>;
using Interpretation = AtomSet;
/// Set of indices into a program's epistemic-literal domain.
using Guess = BitSet<ElitTag>;

/// Calls fn(sub) for every subset of `set` in increasing numeric order.
/// Stops early and returns false as soon as fn returns false.
template <typename Tag, typename Fn>
constexpr bool for_each_subset(BitSet<Tag> set, Fn&& fn) {
    using W = typename BitSet<Tag>::word_type;
    W full  = set.bits();
    for (W sub = 0;; sub = (sub - full) & full) {
        if (!fn(BitSet<Tag>{sub})) {
            return false;
        }
        if (sub == full) {
            return true;
        }
    }
}

} // namespace elpse
