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

#include <elpse/syntax.hpp>

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace elpse {

[[nodiscard]] inline std::string render_elit(Elit e, std::span<const std::string> atoms) {
    return (e.negated ? "not ~" : "not ") + atoms[e.atom];
}

[[nodiscard]] inline std::string render_rule(const Rule& r, std::span<const std::string> atoms) {
    std::string out;
    const char* sep = "";
    for (auto a : r.head()) {
        out.append(std::exchange(sep, " | ")).append(atoms[a]);
    }
    static constexpr std::pair<Slot, const char*> body_slots[] = {
        {Slot::pos, ""},         {Slot::neg, "~"},        {Slot::dneg, "~ ~"},        {Slot::epi, "not "},
        {Slot::epi_neg, "not ~"}, {Slot::neg_epi, "~ not "}, {Slot::neg_epi_neg, "~ not ~"},
    };
    bool has_body = false;
    for (auto [slot, prefix] : body_slots) {
        has_body = has_body || !r[slot].empty();
    }
    if (has_body || r.head().empty()) {
        out.append(r.head().empty() ? ":-" : " :-");
        sep = " ";
        for (auto [slot, prefix] : body_slots) {
            for (auto a : r[slot]) {
                out.append(std::exchange(sep, ", ")).append(prefix).append(atoms[a]);
            }
        }
        if (!has_body) {
            out.append(" ");
        }
    }
    out.push_back('.');
    return out;
}

/// Canonical text: directives first, then rules in stored order; lines are
/// separated by '\n' without a trailing newline. Inverse of parse_program.
[[nodiscard]] inline std::string render_program(const Program& p) {
    std::vector<std::string> lines;
    if (!p.atoms().empty()) {
        std::string l = "#atoms ";
        const char* sep = "";
        for (const auto& a : p.atoms()) {
            l.append(std::exchange(sep, ", ")).append(a);
        }
        lines.push_back(l + ".");
    }
    if (!p.elits().empty()) {
        std::string l = "#elits ";
        const char* sep = "";
        for (auto e : p.elits()) {
            l.append(std::exchange(sep, ", ")).append(render_elit(e, p.atoms()));
        }
        lines.push_back(l + ".");
    }
    for (const auto& r : p.rules()) {
        lines.push_back(render_rule(r, p.atoms()));
    }
    std::string out;
    for (std::size_t i = 0; i != lines.size(); ++i) {
        if (i) {
            out.push_back('\n');
        }
        out.append(lines[i]);
    }
    return out;
}

[[nodiscard]] inline std::vector<std::string> atom_names(AtomSet s, std::span<const std::string> atoms) {
    std::vector<std::string> out;
    for (auto a : s) {
        out.push_back(atoms[a]);
    }
    return out;
}

[[nodiscard]] inline std::string render_set(AtomSet s, std::span<const std::string> atoms) {
    std::string out = "{";
    const char* sep = "";
    for (auto a : s) {
        out.append(std::exchange(sep, ", ")).append(atoms[a]);
    }
    return out + "}";
}

[[nodiscard]] inline std::vector<std::string> elit_names(Guess g, std::span<const Elit> elits,
                                                         std::span<const std::string> atoms) {
    std::vector<std::string> out;
    for (auto i : g) {
        out.push_back(render_elit(elits[i], atoms));
    }
    return out;
}

[[nodiscard]] inline std::string render_guess(Guess g, std::span<const Elit> elits, std::span<const std::string> atoms) {
    std::string out = "{";
    const char* sep = "";
    for (const auto& e : elit_names(g, elits, atoms)) {
        out.append(std::exchange(sep, ", ")).append(e);
    }
    return out + "}";
}

} // namespace elpse
