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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace elpse {

/// Syntax or domain error in `.elp` input, with 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what)
        , line_(line)
        , column_(column) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// An exhaustive enumeration would exceed the configured caps.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-side precondition does not hold (e.g. an unrealizable guess
/// passed to the witness selector).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Witness construction was asked for programs without an SE-function
/// difference at the given guess and pair.
class NoDifference : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A constructed distinguishing program failed its own post-check.
class WitnessVerificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Enumeration caps on domain sizes.
struct Limits {
    std::size_t max_model_atoms = 20; ///< 2^n interpretation space
    std::size_t max_pair_atoms  = 14; ///< 3^n SE-pair space
    std::size_t max_elits       = 12; ///< 2^n guess space
};

namespace detail {
inline void require_atoms(std::size_t n, std::size_t cap, const char* what) {
    if (n > cap) {
        throw ResourceLimit(std::string(what) + ": " + std::to_string(n) + " atoms exceed cap of " + std::to_string(cap));
    }
}
inline void require_elits(std::size_t n, std::size_t cap) {
    if (n > cap) {
        throw ResourceLimit("guess enumeration: " + std::to_string(n) + " epistemic literals exceed cap of " +
                            std::to_string(cap));
    }
}
} // namespace detail

} // namespace elpse
