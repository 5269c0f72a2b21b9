// Command-line driver: construct the character-code convolutional codes,
// verify records, reproduce the published comparison table, run distance
// oracles and sweep parameter grids.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 bad parameters or a
// violated precondition, 3 malformed file, 4 budget exhausted.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "charconvo/charcode.hpp"
#include "charconvo/convo.hpp"
#include "charconvo/distance.hpp"
#include "charconvo/errors.hpp"
#include "charconvo/published.hpp"
#include "charconvo/record_io.hpp"
#include "charconvo/report.hpp"

using namespace charconvo;

namespace {

struct CommonOpts {
    int q = 3;
    int l = 2;
    int m = 0;
    int r = -1;
    int u = -1;
    int v = -1;
    std::vector<int> cuts;
    std::string format = "text";
    bool strict = false;
    long long weight_cap = -1;
    int degree_cap = 4;
    SearchBudget budget;
};

void add_format_flag(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json", "json-like-structured"}))
        ->default_val("text");
}

void add_budget_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--codeword-budget", o.budget.codewords, "enumeration budget");
    cmd->add_option("--subset-budget", o.budget.column_subsets, "column-subset budget");
    cmd->add_option("--node-budget", o.budget.search_nodes, "search-node budget");
}

void emit(const RunReport& rep, const std::string& format) {
    if (format == "text")
        std::cout << render_text(rep);
    else
        std::cout << render_json(rep);
}

std::string tuple_string(const ConvRecord& rec) {
    std::ostringstream os;
    os << '(' << rec.n << ", " << rec.k << ", " << rec.delta << "; "
       << (rec.memory ? std::to_string(*rec.memory) : "mu") << ", d_f >= " << rec.df_lower << ")_"
       << rec.prov.q;
    return os.str();
}

std::string cuts_string(const std::vector<int>& cuts) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (i) os << ',';
        os << cuts[i];
    }
    return os.str();
}

void append_condition_fields(RunReport& rep, const DesignedTuple& t, bool strict) {
    std::ostringstream cond;
    cond << t.condition_lhs << " >= " << t.condition_rhs << " holds";
    rep.add("rank condition", cond.str());
    if (strict) {
        std::ostringstream s1;
        s1 << t.condition_lhs << " > " << t.condition_rhs << (t.condition_lhs > t.condition_rhs ? " holds" : " fails");
        rep.add("rank condition, strict form", s1.str());
        if (t.published_condition)
            rep.add("rank condition, as-published upper limit m",
                    *t.published_condition ? "holds" : "fails");
    }
}

int run_construct(const std::string& theorem, CommonOpts& o, const std::string& out_path,
                  const std::string& emit_code_path) {
    Provenance prov;
    prov.theorem = theorem;
    prov.q = o.q;
    prov.l = theorem == "t4" || (theorem == "multi" && o.l >= 3) ? o.l : 2;
    prov.m = o.m;
    prov.r = o.r;
    prov.u = o.u;
    if (o.v >= 0) prov.v = o.v;
    prov.cuts = o.cuts;
    if (theorem == "multi" && o.cuts.empty()) throw parameter_error("multi needs --cuts");
    if (theorem == "multi") {
        prov.r = o.cuts.back();
        prov.u = o.cuts.front();
        prov.l = o.l;
    }

    ConvRecord rec = construct_from_provenance(prov);
    VerifyReport vr = verify_record(rec, o.budget, true);

    RunReport rep;
    std::ostringstream echo;
    echo << "construct " << theorem << " --q " << o.q;
    if (rec.prov.l != 2) echo << " --l " << rec.prov.l;
    echo << " --m " << o.m;
    if (theorem == "multi")
        echo << " --cuts " << cuts_string(o.cuts);
    else {
        echo << " --r " << prov.r << " --u " << prov.u;
        if (prov.v) echo << " --v " << *prov.v;
    }
    rep.command = echo.str();
    rep.add("construction", rec.prov.theorem);
    rep.add("parameters", tuple_string(rec));
    rep.add("kappa", std::to_string(rec.kappa));
    std::ostringstream sl;
    for (auto [b, e] : rec.slice_ranges) sl << b << ':' << e << ' ';
    rep.add("slices", sl.str());
    DesignedTuple t = params_for(rec.prov.theorem, rec.prov.q, rec.prov.l, rec.prov.m, rec.prov.r, rec.prov.u,
                                 rec.prov.v, rec.prov.cuts);
    append_condition_fields(rep, t, o.strict);
    rep.checks = vr.checks;
    rep.annotations = vr.annotations;
    for (const Annotation& a : published_annotations(rec)) rep.annotations.push_back(a);

    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw format_error("cannot write " + out_path);
        f << record_to_text(rec, vr);
        rep.add("record written to", out_path);
    } else {
        rep.lines.push_back("record:");
        std::istringstream is(record_to_text(rec, vr));
        std::string line;
        while (std::getline(is, line)) rep.lines.push_back("  " + line);
    }
    if (!emit_code_path.empty()) {
        CharCode code = build_char_code(rec.field, rec.prov.l, rec.prov.m, rec.prov.r);
        std::ofstream f(emit_code_path);
        if (!f) throw format_error("cannot write " + emit_code_path);
        f << charcode_to_text(code);
        rep.add("block code written to", emit_code_path);
    }
    emit(rep, o.format);
    return rep.all_checks_pass() ? 0 : 1;
}

int run_table1(const CommonOpts& o) {
    RunReport rep;
    rep.command = "table1";
    auto table = recompute_table();
    int mismatches = 0;
    int current_q = 0;
    int row_in_block = 0;
    for (const RowComparison& c : table) {
        if (c.row->section_q != current_q) {
            current_q = c.row->section_q;
            row_in_block = 0;
            rep.lines.push_back("q = " + std::to_string(current_q) + " block:");
        }
        ++row_in_block;
        std::ostringstream line;
        line << "  row " << row_in_block << ": published " << c.row->printed << "  computed " << c.computed_str
             << "  " << (c.match ? "match" : "MISMATCH") << "  | reference (not recomputed): " << c.row->reference;
        if (!c.row->note.empty()) line << "  [note: " << c.row->note << "]";
        rep.lines.push_back(line.str());
        if (!c.match) {
            ++mismatches;
            Annotation a;
            a.subject = "row " + std::to_string(row_in_block) + " dimension k";
            a.computed = std::to_string(c.ck);
            a.published = std::to_string(c.row->pk);
            a.locus = "published comparison table, q=" + std::to_string(c.row->section_q) + " block, row " +
                      std::to_string(row_in_block);
            a.agrees = false;
            rep.annotations.push_back(a);
        }
    }
    rep.add("rows", std::to_string(table.size()));
    rep.add("mismatched rows", std::to_string(mismatches));
    emit(rep, o.format);
    return 0;  // mismatches are findings, not failures
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw format_error("cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

int run_verify(const std::string& path, const CommonOpts& o) {
    ParsedRecord parsed = record_from_text(read_file(path));
    ConvRecord rebuilt = construct_from_provenance(parsed.prov);

    RunReport rep;
    rep.command = "verify " + path;
    rep.add("construction", parsed.prov.theorem);
    rep.add("parameters", tuple_string(rebuilt));

    bool fields_ok = parsed.n == rebuilt.n && parsed.k == rebuilt.k && parsed.delta == rebuilt.delta &&
                     parsed.memory == rebuilt.memory && parsed.df_lower == rebuilt.df_lower &&
                     parsed.kappa == rebuilt.kappa && parsed.slice_ranges == rebuilt.slice_ranges;
    rep.checks.push_back({"stored parameters match the provenance rebuild", fields_ok, ""});
    bool gen_ok = true;
    if (parsed.generator_text.has_value() != rebuilt.G.has_value())
        gen_ok = false;
    else if (parsed.generator_text)
        gen_ok = *parsed.generator_text == to_text(*rebuilt.G);
    rep.checks.push_back({"stored generator matches the provenance rebuild", gen_ok, ""});

    VerifyReport vr = verify_record(rebuilt, o.budget, true);
    for (const CheckResult& c : vr.checks) rep.checks.push_back(c);
    rep.annotations = vr.annotations;
    emit(rep, o.format);
    return rep.all_checks_pass() ? 0 : 1;
}

int run_encode(const std::string& path, const std::vector<std::string>& message, const CommonOpts& o) {
    ParsedRecord parsed = record_from_text(read_file(path));
    if (!parsed.generator_text) throw parameter_error("record carries no generator (dual parameter certificate)");
    PolyMatrix g = polymat_from_text(*parsed.generator_text);
    if (message.size() != g.rows())
        throw parameter_error("message needs " + std::to_string(g.rows()) + " polynomial components, got " +
                              std::to_string(message.size()));
    std::vector<Poly> u(g.rows());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = poly_from_string(g.field(), message[i]);
    std::vector<Poly> cw = encode(u, g);

    RunReport rep;
    rep.command = "encode " + path;
    std::ostringstream os;
    for (std::size_t j = 0; j < cw.size(); ++j) {
        if (j) os << ' ';
        os << poly_to_string(cw[j]);
    }
    rep.add("codeword", os.str());
    rep.add("weight", std::to_string(poly_vector_weight(cw)));
    emit(rep, o.format);
    return 0;
}

int run_mindist(const std::string& method, const std::string& record_path, CommonOpts& o) {
    RunReport rep;
    DistanceResult res;
    if (method == "free") {
        if (record_path.empty()) throw parameter_error("--method free needs --record");
        ParsedRecord parsed = record_from_text(read_file(record_path));
        if (!parsed.generator_text) throw parameter_error("record carries no generator");
        PolyMatrix g = polymat_from_text(*parsed.generator_text);
        long long cap = o.weight_cap > 0 ? o.weight_cap : static_cast<long long>(g.cols()) * 3;
        res = free_distance_search(g, cap, o.degree_cap, o.budget);
        rep.command = "mindist --record " + record_path + " --method free";
    } else {
        Field f = Field::from_q(static_cast<std::uint32_t>(o.q));
        CharCode code = build_char_code(f, o.l, o.m, o.r);
        std::ostringstream echo;
        echo << "mindist --code char --q " << o.q;
        if (o.l != 2) echo << " --l " << o.l;
        echo << " --m " << o.m << " --r " << o.r << " --method " << method;
        rep.command = echo.str();
        rep.add("designed", "(" + std::to_string(code.n) + ", " + std::to_string(code.k) + ", " +
                                std::to_string(code.d) + ")_" + std::to_string(o.q));
        if (method == "enum")
            res = min_distance_enumeration(code.G, o.budget);
        else if (method == "columns")
            res = min_dependent_columns(code.H, o.weight_cap > 0 ? static_cast<int>(o.weight_cap) : code.n,
                                        o.budget);
        else
            throw parameter_error("unknown method '" + method + "'");
    }
    rep.add("value", std::to_string(res.value));
    rep.add("exact", res.exact ? "true" : "false");
    rep.add("method", method_name(res.method));
    if (res.weight_cap) rep.add("weight cap", std::to_string(*res.weight_cap));
    if (res.degree_cap) rep.add("degree cap", std::to_string(*res.degree_cap));
    emit(rep, o.format);
    return 0;
}

int run_params(const std::string& theorem, CommonOpts& o, int max_m) {
    std::ostringstream csv;
    csv << "theorem,q,l,m,r,u,v,n,k,delta,mu,df_lower,condition_lhs,condition_rhs";
    if (o.strict) csv << ",strict_holds,published_limit_holds";
    csv << '\n';
    auto emit_row = [&](const DesignedTuple& t) {
        csv << t.theorem << ',' << t.q << ',' << t.l << ',' << t.m << ',' << t.r << ',' << t.u << ','
            << (t.v ? std::to_string(*t.v) : "") << ',' << t.n << ',' << t.k << ',' << t.delta << ','
            << (t.memory ? std::to_string(*t.memory) : "unknown") << ',' << t.df_lower << ','
            << t.condition_lhs << ',' << t.condition_rhs;
        if (o.strict) {
            csv << ',' << (t.condition_lhs > t.condition_rhs ? "yes" : "no") << ','
                << (t.published_condition ? (*t.published_condition ? "yes" : "no") : "");
        }
        csv << '\n';
    };
    auto try_emit = [&](int m, int r, int u, std::optional<int> v) {
        try {
            emit_row(params_for(theorem, o.q, o.l, m, r, u, v, o.cuts));
        } catch (const parameter_error&) {
        }
    };
    if (theorem == "multi") {
        if (o.cuts.empty()) throw parameter_error("multi needs --cuts");
        emit_row(params_for(theorem, o.q, o.l, o.m, o.cuts.back(), o.cuts.front(), std::nullopt, o.cuts));
    } else {
        const int wlimit_factor = (theorem == "t4") ? o.l - 1 : 1;
        for (int m = (o.m > 0 ? o.m : 3); m <= (o.m > 0 ? o.m : max_m); ++m) {
            long long group = 1;
            bool fits = true;
            for (int i = 0; i < m; ++i) {
                group *= o.l;
                if (group > group_size_guard) fits = false;
            }
            if (!fits) continue;
            int wmax = m * wlimit_factor;
            for (int r = (o.r >= 0 ? o.r : 1); r <= (o.r >= 0 ? o.r : wmax - 1); ++r)
                for (int u = (o.u >= 0 ? o.u : r + 1); u <= (o.u >= 0 ? o.u : wmax - 1); ++u) {
                    if (theorem == "t3") {
                        for (int v = (o.v >= 0 ? o.v : r + 1); v <= (o.v >= 0 ? o.v : u - 1); ++v)
                            try_emit(m, r, u, v);
                    } else {
                        try_emit(m, r, u, std::nullopt);
                    }
                }
        }
    }
    std::cout << csv.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"group character codes and the convolutional codes split from their parity checks"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string theorem, out_path, emit_code_path, record_path, method = "enum", verify_path;
    std::vector<std::string> message;
    int max_m = 8;

    CLI::App* construct = app.add_subcommand("construct", "build and verify a record");
    construct->add_option("theorem", theorem, "t2|cor1|t3|t4|multi")->required();
    construct->add_option("--q", o.q)->required();
    construct->add_option("--l", o.l);
    construct->add_option("--m", o.m);
    construct->add_option("--r", o.r);
    construct->add_option("--u", o.u);
    construct->add_option("--v", o.v);
    construct->add_option("--cuts", o.cuts)->delimiter(',');
    construct->add_option("--out", out_path, "write the record document here");
    construct->add_option("--emit-code", emit_code_path, "write the underlying block-code document here");
    construct->add_flag("--strict-paper-conditions", o.strict,
                        "also report the strict and as-published precondition forms");
    add_format_flag(construct, o);
    add_budget_flags(construct, o);

    CLI::App* table1 = app.add_subcommand("table1", "recompute the published comparison table");
    add_format_flag(table1, o);

    CLI::App* verify = app.add_subcommand("verify", "re-verify a record document");
    verify->add_option("path", verify_path)->required();
    add_format_flag(verify, o);
    add_budget_flags(verify, o);

    CLI::App* encode_cmd = app.add_subcommand("encode", "encode a message with a record's generator");
    encode_cmd->add_option("path", verify_path)->required();
    encode_cmd->add_option("message", message, "one comma-separated coefficient list per component");
    add_format_flag(encode_cmd, o);

    CLI::App* mindist = app.add_subcommand("mindist", "distance oracles");
    std::string code_kind = "char";
    mindist->add_option("--code", code_kind)->check(CLI::IsMember({"char"}));
    mindist->add_option("--q", o.q);
    mindist->add_option("--l", o.l);
    mindist->add_option("--m", o.m);
    mindist->add_option("--r", o.r);
    mindist->add_option("--method", method)->check(CLI::IsMember({"enum", "columns", "free"}));
    mindist->add_option("--record", record_path);
    mindist->add_option("--weight-cap", o.weight_cap);
    mindist->add_option("--degree-cap", o.degree_cap);
    add_format_flag(mindist, o);
    add_budget_flags(mindist, o);

    CLI::App* params = app.add_subcommand("params", "designed parameters over a grid, CSV");
    params->add_option("theorem", theorem, "t2|cor1|t3|t4|multi")->required();
    params->add_option("--q", o.q);
    params->add_option("--l", o.l);
    params->add_option("--m", o.m);
    params->add_option("--r", o.r);
    params->add_option("--u", o.u);
    params->add_option("--v", o.v);
    params->add_option("--cuts", o.cuts)->delimiter(',');
    params->add_option("--max-m", max_m);
    params->add_flag("--strict-paper-conditions", o.strict);

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return run_construct(theorem, o, out_path, emit_code_path);
        if (table1->parsed()) return run_table1(o);
        if (verify->parsed()) return run_verify(verify_path, o);
        if (encode_cmd->parsed()) return run_encode(verify_path, message, o);
        if (mindist->parsed()) return run_mindist(method, record_path, o);
        if (params->parsed()) return run_params(theorem, o, max_m);
    } catch (const parameter_error& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return 2;
    } catch (const format_error& e) {
        std::cerr << "format error: " << e.what() << '\n';
        return 3;
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    }
    return 2;
}
