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

#include <elpse/elpse.hpp>

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace testing {

inline std::string fixture(const std::string& name) { return std::string(ELPSE_FIXTURES) + "/" + name; }

inline std::string read(const std::string& name) {
    std::ifstream in(fixture(name), std::ios::binary);
    if (!in) {
        throw std::runtime_error("missing fixture " + name);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline elpse::Program load(const std::string& name) { return elpse::parse_program(read(name)); }

inline elpse::Guess guess_of(const elpse::Program& p, std::initializer_list<std::pair<const char*, bool>> lits) {
    elpse::Guess g;
    for (auto [atom, neg] : lits) {
        auto a = p.find_atom(atom);
        auto i = a ? p.find_elit({*a, neg}) : std::nullopt;
        if (!i) {
            throw std::runtime_error(std::string("no epistemic literal over ") + atom);
        }
        g.insert(*i);
    }
    return g;
}

inline elpse::Interpretation interp(const elpse::Program& p, std::initializer_list<const char*> atoms) {
    elpse::Interpretation i;
    for (auto a : atoms) {
        auto id = p.find_atom(a);
        if (!id) {
            throw std::runtime_error(std::string("unknown atom ") + a);
        }
        i.insert(*id);
    }
    return i;
}

/// First rule of a one-rule ELP text.
inline elpse::Rule rule_of(const std::string& text, elpse::ParseMode mode = elpse::ParseMode::elp) {
    return elpse::parse_program(text, {mode, false}).rules().at(0);
}

} // namespace testing
