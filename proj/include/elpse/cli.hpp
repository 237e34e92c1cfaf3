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
#include <elpse/equivalence.hpp>
#include <elpse/error.hpp>
#include <elpse/parser.hpp>
#include <elpse/render.hpp>
#include <elpse/simplify.hpp>
#include <elpse/syntax.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace elpse::cli {

enum ExitCode : int { holds = 0, fails = 1, usage = 2, limit = 3, internal = 4 };

struct RunConfig {
    std::size_t max_atoms = 14;
    std::size_t max_elits = 12;
    bool        json      = false;
    bool        verify    = false;
    bool        plain     = false;

    [[nodiscard]] Limits limits() const {
        Limits l;
        l.max_pair_atoms  = max_atoms;
        l.max_model_atoms = std::max(l.max_model_atoms, max_atoms);
        l.max_elits       = max_elits;
        return l;
    }
};

namespace detail {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Program load(const std::string& path, const RunConfig& cfg, bool allow_reserved = false) {
    ParseOptions opts{cfg.plain ? ParseMode::plain : ParseMode::elp, allow_reserved};
    try {
        return parse_program(read_file(path), opts);
    }
    catch (const ParseError& e) {
        throw UsageError(path + ":" + e.what());
    }
}

inline json atoms_json(AtomSet s, const std::vector<std::string>& atoms) { return atom_names(s, atoms); }

inline json interpretations_json(const InterpretationSet& ms, const std::vector<std::string>& atoms) {
    json out = json::array();
    for (auto i : ms) {
        out.push_back(atoms_json(i, atoms));
    }
    return out;
}

inline std::string render_interpretations(const InterpretationSet& ms, const std::vector<std::string>& atoms) {
    std::string out = "{";
    const char* sep = "";
    for (auto i : ms) {
        out.append(std::exchange(sep, ", ")).append(render_set(i, atoms));
    }
    return out + "}";
}

inline json report(const char* command) {
    json j;
    j["command"] = command;
    return j;
}

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct Context {
    RunConfig     cfg;
    std::ostream& out;
    std::ostream& err;
};

inline int cmd_parse(Context& cx, const std::string& file) {
    auto p    = load(file, cx.cfg);
    auto text = render_program(p);
    if (cx.cfg.json) {
        auto j       = report("parse");
        j["verdict"] = true;
        j["program"] = text;
        emit(cx.out, j);
    }
    else {
        cx.out << text << (text.empty() ? "" : "\n");
    }
    return holds;
}

inline int cmd_enumerate(Context& cx, const std::vector<std::string>& files, const std::string& what) {
    Program p;
    for (const auto& f : files) {
        p = unite(p, load(f, cx.cfg, true));
    }
    auto        limits = cx.cfg.limits();
    const auto& atoms  = p.atoms();
    auto        j      = report("enumerate");
    j["mode"]          = what;
    if (what == "models" || what == "answersets") {
        auto ms = what == "models" ? models(p, limits) : answer_sets(p, limits);
        if (cx.cfg.json) {
            j["verdict"]         = !ms.empty();
            j["interpretations"] = interpretations_json(ms, atoms);
            emit(cx.out, j);
        }
        else {
            for (auto m : ms) {
                cx.out << render_set(m, atoms) << '\n';
            }
            cx.out << (what == "models" ? "models: " : "answer sets: ") << ms.size() << '\n';
        }
        return holds;
    }
    if (what == "sefunction") {
        auto f       = se_function(p, limits);
        json entries = json::array();
        for (auto phi : guesses_in_order(p.elits().size())) {
            const auto& e = f[phi];
            if (cx.cfg.json) {
                json pairs = json::array();
                for (auto pr : e.pairs) {
                    pairs.push_back({{"x", atoms_json(pr.x, atoms)}, {"y", atoms_json(pr.y, atoms)}});
                }
                entries.push_back({{"guess", elit_names(phi, p.elits(), atoms)},
                                   {"realizable", !e.empty()},
                                   {"pairs", pairs}});
            }
            else {
                cx.out << "guess " << render_guess(phi, p.elits(), atoms) << ": "
                       << (e.empty() ? "unrealizable" : "realizable") << '\n';
                for (auto pr : e.pairs) {
                    cx.out << "  (" << render_set(pr.x, atoms) << ", " << render_set(pr.y, atoms) << ")\n";
                }
            }
        }
        if (cx.cfg.json) {
            j["verdict"]     = true;
            j["se_function"] = entries;
            emit(cx.out, j);
        }
        return holds;
    }
    auto views = what == "cwv" ? cwvs(p, limits) : wvs(p, limits);
    if (cx.cfg.json) {
        json list = json::array();
        for (const auto& w : views) {
            list.push_back({{"guess", elit_names(w.guess, p.elits(), atoms)},
                            {"interpretations", interpretations_json(w.interpretations, atoms)}});
        }
        j["verdict"]     = !views.empty();
        j["world_views"] = list;
        emit(cx.out, j);
    }
    else {
        for (const auto& w : views) {
            cx.out << "guess " << render_guess(w.guess, p.elits(), atoms) << ": "
                   << render_interpretations(w.interpretations, atoms) << '\n';
        }
        cx.out << (what == "cwv" ? "candidate world views: " : "world views: ") << views.size() << '\n';
    }
    return holds;
}

inline json witness_json(const DifferenceWitness& d, const EquivVerdict& v) {
    json w;
    w["guess"] = elit_names(d.guess, v.elits, v.atoms);
    w["kind"]  = to_string(d.kind);
    if (d.pair) {
        w["pair"] = {{"x", atoms_json(d.pair->x, v.atoms)}, {"y", atoms_json(d.pair->y, v.atoms)}};
    }
    else {
        w["pair"] = nullptr;
    }
    w["side"] = to_string(d.side);
    if (d.world_view) {
        w["interpretations"] = interpretations_json(*d.world_view, v.atoms);
    }
    return w;
}

inline int cmd_check(Context& cx, const std::string& f1, const std::string& f2, const std::string& mode,
                     const std::string& witness_out) {
    auto a      = load(f1, cx.cfg);
    auto b      = load(f2, cx.cfg);
    auto limits = cx.cfg.limits();
    auto v      = mode == "strong" ? strong_equiv(a, b, limits)
                                   : ordinary_equiv(a, b, mode == "cwv" ? EquivMode::cwv : EquivMode::wv, limits);
    std::string witness_text;
    if (!witness_out.empty() && !v.equivalent) {
        auto sv = mode == "strong" ? v : strong_equiv(a, b, limits);
        if (!sv.equivalent) {
            witness_text = render_program(construct_witness(a, b, *sv.difference, limits));
            std::ofstream o(witness_out, std::ios::binary);
            if (!o) {
                throw UsageError("cannot write '" + witness_out + "'");
            }
            o << witness_text << '\n';
        }
    }
    if (cx.cfg.json) {
        auto j       = report("check");
        j["mode"]    = mode;
        j["verdict"] = v.equivalent;
        j["witness"] = v.difference ? witness_json(*v.difference, v) : json(nullptr);
        if (!witness_text.empty()) {
            j["witness_program"] = witness_out;
        }
        emit(cx.out, j);
    }
    else {
        cx.out << (v.equivalent ? "equivalent" : "not equivalent") << " (" << mode << ")\n";
        if (const auto& d = v.difference) {
            cx.out << "kind: " << to_string(d->kind) << '\n';
            cx.out << "guess: " << render_guess(d->guess, v.elits, v.atoms) << '\n';
            if (d->pair) {
                cx.out << "pair: (" << render_set(d->pair->x, v.atoms) << ", " << render_set(d->pair->y, v.atoms)
                       << ")\n";
            }
            if (d->world_view) {
                cx.out << "world view: " << render_interpretations(*d->world_view, v.atoms) << '\n';
            }
            cx.out << "side: " << to_string(d->side) << '\n';
        }
        if (!witness_text.empty()) {
            cx.out << "witness written to " << witness_out << '\n';
        }
    }
    return v.equivalent ? holds : fails;
}

inline int cmd_taut(Context& cx, const std::string& file) {
    auto p   = load(file, cx.cfg);
    bool any = false;
    json reports = json::array();
    for (std::size_t i = 0; i != p.rules().size(); ++i) {
        auto rep = elp_tautological(p.rules()[i], i);
        any      = any || rep.verdict;
        if (cx.cfg.json) {
            reports.push_back({{"rule", i}, {"verdict", rep.verdict}, {"fired", rep.fired}});
        }
        else {
            cx.out << "rule " << i << ": " << render_rule(p.rules()[i], p.atoms()) << " ";
            if (rep.verdict) {
                cx.out << "tautological (";
                const char* sep = "";
                for (const auto& l : rep.fired) {
                    cx.out << std::exchange(sep, ", ") << l;
                }
                cx.out << ")\n";
            }
            else {
                cx.out << "not tautological\n";
            }
        }
    }
    if (cx.cfg.json) {
        auto j       = report("rule taut");
        j["verdict"] = any;
        j["reports"] = reports;
        emit(cx.out, j);
    }
    return any ? holds : fails;
}

inline int cmd_subsume(Context& cx, const std::string& file, std::size_t ri, std::size_t si) {
    auto p = load(file, cx.cfg);
    if (ri >= p.rules().size() || si >= p.rules().size()) {
        throw UsageError("rule index out of range (program has " + std::to_string(p.rules().size()) + " rules)");
    }
    auto rep = elp_subsumes(p.rules()[ri], p.rules()[si], ri, si);
    if (cx.cfg.json) {
        auto j       = report("rule subsume");
        j["verdict"] = rep.verdict;
        j["reports"] = json::array({{{"subsumer", ri},
                                     {"subsumee", si},
                                     {"verdict", rep.verdict},
                                     {"rhd", rep.rhd},
                                     {"RHD", rep.RHD},
                                     {"subsumee_tautological", rep.subsumee_tautological},
                                     {"failed", rep.failed}}});
        emit(cx.out, j);
    }
    else {
        cx.out << "r = " << render_rule(p.rules()[ri], p.atoms()) << '\n';
        cx.out << "s = " << render_rule(p.rules()[si], p.atoms()) << '\n';
        cx.out << "rhd: " << (rep.rhd ? "true" : "false") << ", RHD: " << (rep.RHD ? "true" : "false") << '\n';
        if (rep.subsumee_tautological) {
            cx.out << "s is tautological\n";
        }
        cx.out << (rep.verdict ? "r subsumes s" : "r does not subsume s");
        if (!rep.failed.empty()) {
            cx.out << " (failed:";
            for (const auto& l : rep.failed) {
                cx.out << ' ' << l;
            }
            cx.out << ')';
        }
        cx.out << '\n';
    }
    return rep.verdict ? holds : fails;
}

inline int cmd_simplify(Context& cx, const std::string& file, const std::string& out_file, bool explain) {
    auto                      p = load(file, cx.cfg);
    std::vector<SimplifyStep> steps;
    auto                      q    = simplify_program(p, &steps);
    auto                      text = render_program(q);
    bool                      ok   = true;
    if (cx.cfg.verify) {
        ok = strong_equiv(p, q, cx.cfg.limits()).equivalent;
    }
    if (!out_file.empty()) {
        std::ofstream o(out_file, std::ios::binary);
        if (!o) {
            throw UsageError("cannot write '" + out_file + "'");
        }
        o << text << (text.empty() ? "" : "\n");
    }
    auto describe = [&](const SimplifyStep& s) {
        std::string line = "removed rule " + std::to_string(s.removed) + " (" + render_rule(p.rules()[s.removed], p.atoms()) + "): ";
        if (s.kind == SimplifyStep::Kind::tautology) {
            line += "tautological (";
            const char* sep = "";
            for (const auto& l : s.conditions) {
                line.append(std::exchange(sep, ", ")).append(l);
            }
            return line + ")";
        }
        return line + "subsumed by rule " + std::to_string(s.by);
    };
    if (cx.cfg.json) {
        auto j       = report("simplify");
        j["verdict"] = ok;
        j["program"] = text;
        json reports = json::array();
        for (const auto& s : steps) {
            json r{{"rule", s.removed},
                   {"reason", s.kind == SimplifyStep::Kind::tautology ? "tautological" : "subsumed"}};
            if (s.kind == SimplifyStep::Kind::tautology) {
                r["fired"] = s.conditions;
            }
            else {
                r["by"] = s.by;
            }
            reports.push_back(r);
        }
        j["reports"] = reports;
        if (cx.cfg.verify) {
            j["verified"] = ok;
        }
        emit(cx.out, j);
    }
    else {
        if (explain) {
            for (const auto& s : steps) {
                cx.out << "% " << describe(s) << '\n';
            }
        }
        if (out_file.empty()) {
            cx.out << text << (text.empty() ? "" : "\n");
        }
        if (cx.cfg.verify) {
            cx.out << "% verify: " << (ok ? "strongly equivalent" : "NOT strongly equivalent") << '\n';
        }
    }
    return ok ? holds : fails;
}

} // namespace detail

/// Runs the command line given without the program name. Output goes to
/// `out`, diagnostics to `err`; the return value is the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ground epistemic logic programs: world views, strong equivalence, simplification", "elpse"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_flag("--json", cfg.json, "Print a JSON report");
    app.add_option("--max-atoms", cfg.max_atoms, "Atom cap for SE-pair enumeration")->check(CLI::PositiveNumber);
    app.add_option("--max-elits", cfg.max_elits, "Cap on epistemic literals")->check(CLI::PositiveNumber);
    app.add_flag("--plain", cfg.plain, "Accept double default negation '~ ~ a' in rule bodies");

    std::string file;
    std::string file2;
    auto*       parse = app.add_subcommand("parse", "Validate a program and print it canonically");
    parse->add_option("file", file, "Input program")->required();

    std::vector<std::string> files;
    std::string              what = "wv";
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate semantics of the union of the inputs");
    enumerate->add_option("files", files, "Input programs")->required();
    auto* kinds = enumerate->add_option_group("kind");
    kinds->add_flag_callback("--models", [&] { what = "models"; }, "Classical models (plain programs)");
    kinds->add_flag_callback("--answersets", [&] { what = "answersets"; }, "Answer sets (plain programs)");
    kinds->add_flag_callback("--cwv", [&] { what = "cwv"; }, "Candidate world views");
    kinds->add_flag_callback("--wv", [&] { what = "wv"; }, "World views (default)");
    kinds->add_flag_callback("--sefunction", [&] { what = "sefunction"; }, "SE-function per guess");
    kinds->require_option(0, 1);

    std::string mode = "strong";
    std::string witness;
    auto*       check = app.add_subcommand("check", "Decide equivalence of two programs");
    check->add_option("file1", file, "First program")->required();
    check->add_option("file2", file2, "Second program")->required();
    check->add_option("--mode", mode, "strong, cwv or wv")->check(CLI::IsMember({"strong", "cwv", "wv"}));
    check->add_option("--witness", witness, "Write a distinguishing plain program");

    auto* rule = app.add_subcommand("rule", "Single-rule checks");
    rule->require_subcommand(1);
    auto* taut = rule->add_subcommand("taut", "Tautology report per rule");
    taut->add_option("file", file, "Input program")->required();
    std::size_t ri = 0;
    std::size_t si = 0;
    auto*       sub = rule->add_subcommand("subsume", "Does rule I subsume rule J");
    sub->add_option("file", file, "Input program")->required();
    sub->add_option("I", ri, "Subsumer index")->required();
    sub->add_option("J", si, "Subsumee index")->required();

    std::string out_file;
    bool        explain = false;
    auto*       simp    = app.add_subcommand("simplify", "Remove tautological and subsumed rules");
    simp->add_option("file", file, "Input program")->required();
    simp->add_option("-o,--output", out_file, "Write the result to a file");
    simp->add_flag("--explain", explain, "List removed rules");
    simp->add_flag("--verify", cfg.verify, "Check strong equivalence of input and output");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return holds;
    }
    catch (const CLI::ParseError& e) {
        err << "elpse: " << e.what() << '\n';
        return usage;
    }

    detail::Context cx{cfg, out, err};
    try {
        if (*parse) {
            return detail::cmd_parse(cx, file);
        }
        if (*enumerate) {
            return detail::cmd_enumerate(cx, files, what);
        }
        if (*check) {
            return detail::cmd_check(cx, file, file2, mode, witness);
        }
        if (*taut) {
            return detail::cmd_taut(cx, file);
        }
        if (*sub) {
            return detail::cmd_subsume(cx, file, ri, si);
        }
        if (*simp) {
            return detail::cmd_simplify(cx, file, out_file, explain);
        }
    }
    catch (const ParseError& e) {
        err << "elpse: parse error: " << e.what() << '\n';
        return usage;
    }
    catch (const detail::UsageError& e) {
        err << "elpse: " << e.what() << '\n';
        return usage;
    }
    catch (const PreconditionError& e) {
        err << "elpse: " << e.what() << '\n';
        return usage;
    }
    catch (const ResourceLimit& e) {
        err << "elpse: resource limit: " << e.what() << '\n';
        return limit;
    }
    catch (const std::exception& e) {
        err << "elpse: internal error: " << e.what() << '\n';
        return internal;
    }
    return usage;
}

} // namespace elpse::cli
