#pragma once

// Command-line front end. Every command writes to the given streams and
// returns the process exit code: 0 ok, 1 a check failed, 2 bad input.

#include <CLI11.hpp>

#include <functional>
#include <future>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "report_json.hpp"

namespace acm::cli {

enum class Format { Json, Text };

enum Exit : int { Ok = 0, CheckFailed = 1, BadInput = 2 };

/// Fixed-width table; each column is as wide as its widest cell.
class Table {
public:
    explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& out) const {
        std::vector<std::size_t> w(rows_.front().size(), 0);
        for (const auto& r : rows_)
            for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
        for (const auto& r : rows_) {
            std::string line;
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) line += "  ";
                line += r[i];
                if (i + 1 < r.size()) line.append(w[i] - r[i].size(), ' ');
            }
            out << line << '\n';
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

inline std::string str(Int v) { return std::to_string(v); }
inline std::string str(const std::optional<Int>& v) { return v ? std::to_string(*v) : "-"; }
inline std::string str(bool b) { return b ? "yes" : "no"; }

/// Evaluates f(s) for every s in [lo, hi] on up to `jobs` threads; results
/// come back in s order whatever the scheduling.
template <class F>
auto map_over_s(Int lo, Int hi, Int jobs, F f) -> std::vector<decltype(f(lo))> {
    using R = decltype(f(lo));
    const Int n = hi - lo + 1;
    std::vector<R> out(static_cast<std::size_t>(std::max<Int>(n, 0)));
    if (n <= 0) return out;
    const Int workers = std::clamp<Int>(jobs, 1, n);
    std::vector<std::future<void>> tasks;
    for (Int w = 0; w < workers; ++w)
        tasks.push_back(std::async(std::launch::async, [&, w] {
            for (Int i = w; i < n; i += workers) out[static_cast<std::size_t>(i)] = f(lo + i);
        }));
    for (auto& t : tasks) t.get();
    return out;
}

// ---- analyze ---------------------------------------------------------------

inline void print_report_text(const GonalityReport& r, std::ostream& out) {
    const auto& inv = r.inv;
    out << "h-vector        {" << format_hvector(r.h) << "}\n";
    out << "d g s t e       " << inv.d << ' ' << inv.g << ' ' << inv.s << ' ' << str(inv.t) << ' '
        << (inv.e.is_neg_infinity() ? std::string("-inf") : str(inv.e.value())) << '\n';
    out << "lambda          " << (r.h.empty() ? "()" : format_lambda(lambda_from_h(r.h))) << '\n';
    out << "decreasing type " << str(r.decreasing_type) << '\n';
    if (r.model) {
        const auto& m = *r.model;
        out << "linked          {" << format_hvector(m.linked) << "}  lambda_Gamma " << format_lambda(m.lambda_gamma)
            << '\n';
        Table t({"i", "lambda_i", "d_i", "q_i", "b_i"});
        for (std::size_t i = 0; i < m.rank(); ++i)
            t.add({str(static_cast<Int>(i + 1)), format_lambda(m.components[i].lambda), str(m.components[i].degree),
                   str(m.components[i].q), str(m.b(i))});
        t.print(out);
        for (std::size_t i = 0; i < m.rank(); ++i)
            for (std::size_t j = i + 1; j < m.rank(); ++j)
                out << "phi_" << i + 1 << j + 1 << "          " << m.phi(i, j) << '\n';
        out << "phi(C,C)        " << phi_from_dg(m.d, m.g, m.s) << '\n';
        out << "C^2             " << c_squared(m.d, m.g, m.s) << '\n';
    }
    out << "case            " << secant_tag_name(r.secant.tag) << '\n';
    out << "l               " << str(r.secant.l) << '\n';
    out << "gonality        " << str(r.gonality) << '\n';
    out << "clifford        " << str(r.clifford) << '\n';
    out << "unique pencil   " << str(r.secant.unique_pencil) << '\n';
    out << "flags           thm1_undecided=" << str(r.flags.thm1_undecided)
        << " thm3_undecided=" << str(r.flags.thm3_undecided)
        << " elliptic_quartic_extra_pencil=" << str(r.flags.elliptic_quartic_extra_pencil) << '\n';
    auto cands = [&](const char* label, const CandidateList& list) {
        out << label;
        if (!list) {
            out << "n/a (Delta <= 0)\n";
            return;
        }
        out << list->size() << '\n';
        for (const auto& c : *list)
            out << "  c=" << c.cls.c << " a=(" << join_ints(c.cls.a) << ") x=" << c.cls.x << " phiAA=" << c.phiAA
                << " phiAC=" << c.phiAC << ' ' << destabilizer_kind_name(c.kind) << '\n';
    };
    if (r.gonality) {
        cands("candidates@gon  ", r.candidates_at_gon);
        cands("candidates@gon-1 ", r.candidates_below_gon);
    }
}

inline int analyze_one(const std::string& text, Format fmt, std::ostream& out, std::ostream& err) {
    try {
        const auto rep = predict_gonality(parse_hvector_text(text));
        if (fmt == Format::Json)
            out << to_json(rep).dump() << '\n';
        else
            print_report_text(rep, out);
        return Ok;
    } catch (const Error& e) {
        err << e.what() << " [input '" << text << "']\n";
        return BadInput;
    }
}

/// Inputs are analyzed in order; the worst exit code wins.
inline int cmd_analyze(const std::vector<std::string>& inputs, Format fmt, std::ostream& out, std::ostream& err) {
    int code = Ok;
    for (const auto& text : inputs) code = std::max(code, analyze_one(text, fmt, out, err));
    return code;
}

// ---- link / destabilize / enumerate / table --------------------------------

inline int cmd_link(const std::string& text, Int a, Int b, Format fmt, std::ostream& out) {
    const HVector h = parse_hvector_text(text);
    const HVector res = link_hvector(h, a, b);
    if (fmt == Format::Json) {
        json j{{"input", to_json(h)}, {"a", a}, {"b", b}, {"linked", to_json(res)}};
        j["invariants"] = to_json(invariants(res));
        out << j.dump() << '\n';
    } else {
        out << "{" << format_hvector(res) << "}\n";
    }
    return Ok;
}

inline int cmd_destabilize(const std::string& text, Int k, Format fmt, std::ostream& out) {
    const auto m = picard_model(parse_hvector_text(text));
    const auto cands = destabilizer_search(m, k);
    if (fmt == Format::Json) {
        out << to_json(CandidateList{cands}).dump() << '\n';
    } else {
        Table t({"c", "a", "x", "phiAA", "phiAC", "class"});
        for (const auto& c : cands)
            t.add({str(c.cls.c), "(" + join_ints(c.cls.a) + ")", str(c.cls.x), str(c.phiAA), str(c.phiAC),
                   std::string(destabilizer_kind_name(c.kind))});
        t.print(out);
    }
    return Ok;
}

inline int cmd_enumerate(Int s, const std::string& kind, Int d_max, Format fmt, std::ostream& out) {
    json arr = json::array();
    std::vector<std::string> lines;
    if (kind == "minimal") {
        for (const auto& l : enumerate_s_minimal(s)) {
            arr.push_back({{"lambda", to_json(l)}, {"q", q_lambda(l, s)}});
            lines.push_back(format_lambda(l));
        }
    } else if (kind == "basic") {
        for (const auto& h : enumerate_s_basic(s)) {
            arr.push_back(to_json(h));
            lines.push_back("{" + format_hvector(h) + "}");
        }
    } else if (kind == "decreasing") {
        for (const auto& h : enumerate_decreasing_type(s, d_max)) {
            arr.push_back(to_json(h));
            lines.push_back("{" + format_hvector(h) + "}");
        }
    } else {
        throw Error(ErrorCode::Syntax, "unknown kind '" + kind + "'");
    }
    if (fmt == Format::Json)
        out << arr.dump() << '\n';
    else
        for (const auto& l : lines) out << l << '\n';
    return Ok;
}

/// s-basic h-vectors beside the s-minimal types of their (s,s)-links.
inline int cmd_table(Int s, Format fmt, std::ostream& out) {
    if (s < 2 || s > 12) throw Error(ErrorCode::OutOfRange, "table needs 2 <= s <= 12");
    json arr = json::array();
    Table t({"h_basic", "h_linked", "lambda", "d", "q"});
    for (const auto& h : enumerate_s_basic(s)) {
        const HVector linked = link_hvector(h, s, s);
        const auto lam = lambda_from_h(linked);
        const Int q = q_lambda(lam, s);
        arr.push_back({{"hvector", to_json(h)}, {"linked", to_json(linked)}, {"lambda", to_json(lam)},
                       {"d", lam.degree()}, {"q", q}});
        t.add({"{" + format_hvector(h) + "}", "{" + format_hvector(linked) + "}", format_lambda(lam),
               str(lam.degree()), str(q)});
    }
    if (fmt == Format::Json)
        out << arr.dump() << '\n';
    else
        t.print(out);
    return Ok;
}

// ---- verify / scan ---------------------------------------------------------

inline int cmd_verify(Int s_min, Int s_max, Int jobs, Format fmt, std::ostream& out) {
    if (s_min < 4 || s_max > 12 || s_min > s_max) throw Error(ErrorCode::OutOfRange, "verify needs 4 <= s <= 12");
    const auto reports = map_over_s(s_min, s_max, jobs, [](Int s) { return verify_quadform_bounds(s); });
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.all_passed();
    if (fmt == Format::Json) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        out << json{{"pass", ok}, {"reports", arr}}.dump() << '\n';
    } else {
        Table t({"s", "check", "cases", "result", "witness"});
        for (const auto& r : reports)
            for (const auto& c : r.checks)
                t.add({str(r.s), c.name, std::to_string(c.cases), c.passed ? "pass" : "FAIL", c.witness});
        t.print(out);
        out << (ok ? "all checks passed" : "some checks FAILED") << '\n';
    }
    return ok ? Ok : CheckFailed;
}

/// Regenerates the Delta <= 0 list and compares it with the stored table.
inline int cmd_scan(Int s_min, Int s_max, Int d_max, Int k_offset, Int jobs, Format fmt, std::ostream& out) {
    if (k_offset != 4 && k_offset != 5) throw Error(ErrorCode::OutOfRange, "k_offset must be 4 or 5");
    if (s_min < 4 || s_max < s_min) throw Error(ErrorCode::OutOfRange, "need 4 <= s_min <= s_max");
    const auto parts = map_over_s(s_min, s_max, jobs, [&](Int s) { return scan_exceptions(s, s, d_max, k_offset); });
    std::vector<SDG> found;
    for (const auto& p : parts) found.insert(found.end(), p.begin(), p.end());

    const auto& table = k_offset == 5 ? delta_exceptions_k_d_minus_5() : delta_exceptions_k_d_minus_4();
    std::vector<SDG> expected;
    for (const auto& x : table)
        if (x.s >= s_min && x.s <= s_max && x.d <= d_max) expected.push_back(x);
    const bool ok = found == expected;

    if (fmt == Format::Json) {
        json arr = json::array();
        for (const auto& x : found) arr.push_back(to_json(x));
        out << json{{"k_offset", k_offset}, {"d_max", d_max}, {"matches_table", ok}, {"exceptions", arr}}.dump()
            << '\n';
    } else {
        Table t({"s", "d", "g"});
        for (const auto& x : found) t.add({str(x.s), str(x.d), str(x.g)});
        t.print(out);
        out << found.size() << " exceptions; " << (ok ? "matches" : "DIFFERS FROM") << " the stored list\n";
    }
    return ok ? Ok : CheckFailed;
}

// ---- examples --------------------------------------------------------------

/// Recomputes both worked examples number by number.
inline int cmd_examples(Format fmt, std::ostream& out) {
    struct Line {
        std::string what;
        std::string got, want;
    };
    std::vector<Line> lines;
    auto expect = [&](std::string what, const auto& got, const auto& want) {
        std::ostringstream g, w;
        g << got;
        w << want;
        lines.push_back({std::move(what), g.str(), w.str()});
    };
    auto cand_str = [](const CandidateList& l) {
        if (!l) return std::string("n/a");
        std::string s = "[";
        for (const auto& c : *l)
            s += "(c=" + std::to_string(c.cls.c) + ";a=" + join_ints(c.cls.a) + ";x=" + std::to_string(c.cls.x) + ")";
        return s + "]";
    };

    {
        const auto h = HVector::parse({1, 2, 3, 4, 5, 6, 7, 4, 3});
        const auto rep = predict_gonality(h);
        const auto& m = *rep.model;
        const std::string p = "[35-7] ";
        expect(p + "d", rep.inv.d, 35);
        expect(p + "g", rep.inv.g, 130);
        expect(p + "s", rep.inv.s, 7);
        expect(p + "e", rep.inv.e.value(), 6);
        expect(p + "linked", format_hvector(m.linked), "1,2,3,4,2,2");
        expect(p + "components", m.rank(), 2);
        expect(p + "d_T", m.components.at(0).degree, 3);
        expect(p + "d_D", m.components.at(1).degree, 11);
        expect(p + "phi(T,T)", m.components.at(0).q, 86);
        expect(p + "phi(D,D)", m.components.at(1).q, 86);
        expect(p + "phi(T,D)", m.phi(0, 1), -9);
        expect(p + "phi(C,C)", phi_from_dg(m.d, m.g, m.s), 154);
        expect(p + "C^2", c_squared(m.d, m.g, m.s), 153);
        expect(p + "phi(A,C) weight", m.weight(0), 77);
        expect(p + "C^2-4k at k=31", c_squared(m.d, m.g, m.s) - 4 * 31, 29);
        expect(p + "search k=31", cand_str(try_destabilizer_search(m, 31)), "[(c=-1;a=0,0;x=-7)]");
        Int x_low = 0;
        while ((x_low - 1) * (x_low - 1) + 35 * (x_low - 1) + 217 >= 0 && x_low - 1 > -35) --x_low;
        expect(p + "x lower bound", x_low, -8);
        expect(p + "case", secant_tag_name(rep.secant.tag), "Generic");
        expect(p + "l", str(rep.secant.l), "4");
        expect(p + "gonality", str(rep.gonality), "31");
    }
    {
        const auto h = HVector::parse({1, 2, 3, 4, 5, 3, 2});
        const auto rep = predict_gonality(h);
        const auto& m = *rep.model;
        const std::string p = "[20-5] ";
        expect(p + "d", rep.inv.d, 20);
        expect(p + "g", rep.inv.g, 48);
        expect(p + "s", rep.inv.s, 5);
        expect(p + "e", rep.inv.e.value(), 4);
        expect(p + "h(e+1)", h(5), 3);
        expect(p + "h(e+2)", h(6), 2);
        expect(p + "linked", format_hvector(m.linked), "1,2,1,1");
        const auto gi = invariants(m.linked);
        expect(p + "d_Gamma", gi.d, 5);
        expect(p + "g_Gamma", gi.g, 3);
        expect(p + "components", m.rank(), 2);
        expect(p + "L", format_lambda(m.components.at(0).lambda), "(1)");
        expect(p + "P", format_lambda(m.components.at(1).lambda), "(4)");
        expect(p + "phi(L,L)", m.components.at(0).q, 16);
        expect(p + "phi(P,P)", m.components.at(1).q, 16);
        expect(p + "phi(L,P)", m.phi(0, 1), -1);
        expect(p + "phi(C,C)", phi_from_dg(m.d, m.g, m.s), 30);
        expect(p + "phi(C,L)", -m.weight(0), -15);
        expect(p + "C.L", secant_degree(m, rep.secant), 7);
        expect(p + "C^2", c_squared(m.d, m.g, m.s), 74);
        expect(p + "C^2-4k at k=13", c_squared(m.d, m.g, m.s) - 4 * 13, 22);
        expect(p + "search k=13", cand_str(try_destabilizer_search(m, 13)), "[(c=-1;a=1,0;x=-4)]");
        const auto at13 = try_destabilizer_search(m, 13);
        expect(p + "A = L - H", at13 && at13->size() == 1 ? destabilizer_kind_name(at13->front().kind) : "?",
               "LineMinusH");
        expect(p + "search k=12", cand_str(try_destabilizer_search(m, 12)), "[]");
        expect(p + "case", secant_tag_name(rep.secant.tag), "A");
        expect(p + "l", str(rep.secant.l), "7");
        expect(p + "gonality", str(rep.gonality), "13");
        expect(p + "unique pencil", str(rep.secant.unique_pencil), "yes");
        expect(p + "clifford", str(rep.clifford), "11");
    }

    bool ok = true;
    for (const auto& l : lines) ok = ok && l.got == l.want;
    if (fmt == Format::Json) {
        json arr = json::array();
        for (const auto& l : lines) arr.push_back({{"value", l.what}, {"got", l.got}, {"expected", l.want}, {"pass", l.got == l.want}});
        out << json{{"pass", ok}, {"values", arr}}.dump() << '\n';
    } else {
        Table t({"value", "got", "expected", "result"});
        for (const auto& l : lines) t.add({l.what, l.got, l.want, l.got == l.want ? "ok" : "MISMATCH"});
        t.print(out);
    }
    return ok ? Ok : CheckFailed;
}

// ---- dispatch --------------------------------------------------------------

inline std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(line);
    }
    return out;
}

/// Parses argv and runs the selected command. `in` supplies h-vectors to
/// `analyze` when none are given on the command line.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants, liaison and gonality of ACM space curves"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    Int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for verify and scan")->check(CLI::PositiveNumber);

    std::vector<std::string> hs;
    auto* analyze = app.add_subcommand("analyze", "gonality report for h-vectors (stdin, one per line, if none given)");
    analyze->add_option("hvector", hs, "h-vector such as 1,2,3,4,5,3,2");

    std::string h1;
    Int a = 0, b = 0, k = 0, s = 0;
    auto* link = app.add_subcommand("link", "h-vector residual in a complete intersection (a,b)");
    link->add_option("hvector", h1)->required();
    link->add_option("a", a)->required();
    link->add_option("b", b)->required();

    std::string kind = "minimal";
    Int d_max = 45;
    auto* enumerate = app.add_subcommand("enumerate", "list s-minimal types, s-basic or decreasing-type h-vectors");
    enumerate->add_option("s", s)->required();
    enumerate->add_option("--kind", kind)->check(CLI::IsMember({"minimal", "basic", "decreasing"}));
    enumerate->add_option("--d-max", d_max, "degree cap for --kind decreasing");

    auto* table = app.add_subcommand("table", "s-basic h-vectors with their linked s-minimal types and q");
    table->add_option("s", s)->required();

    Int s_min = 4, s_max = 10;
    auto* verify = app.add_subcommand("verify", "exhaustive check of the identities and bounds for q");
    verify->add_option("--s-min", s_min);
    verify->add_option("--s-max", s_max);

    Int k_offset = 5, scan_s_max = 8;
    auto* scan = app.add_subcommand("scan", "regenerate the (s,d,g) with Delta <= 0 at k = d - k_offset");
    scan->add_option("--k-offset", k_offset)->check(CLI::IsMember({4, 5}));
    scan->add_option("--d-max", d_max);
    scan->add_option("--s-max", scan_s_max);

    auto* destabilize = app.add_subcommand("destabilize", "enumerate destabilizing classes for a degree-k pencil");
    destabilize->add_option("hvector", h1)->required();
    destabilize->add_option("--k", k)->required();

    auto* examples = app.add_subcommand("examples", "recompute both worked examples");

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << e.get_name() << ": " << e.what() << '\n';
        return BadInput;
    }
    const Format fmt = format == "text" ? Format::Text : Format::Json;

    try {
        if (*analyze) return cmd_analyze(hs.empty() ? read_lines(in) : hs, fmt, out, err);
        if (*link) return cmd_link(h1, a, b, fmt, out);
        if (*enumerate) return cmd_enumerate(s, kind, d_max, fmt, out);
        if (*table) return cmd_table(s, fmt, out);
        if (*verify) return cmd_verify(s_min, s_max, jobs, fmt, out);
        if (*scan) return cmd_scan(4, scan_s_max, d_max, k_offset, jobs, fmt, out);
        if (*destabilize) return cmd_destabilize(h1, k, fmt, out);
        if (*examples) return cmd_examples(fmt, out);
    } catch (const Error& e) {
        err << e.what() << '\n';
        return BadInput;
    }
    return BadInput;
}

} // namespace acm::cli
