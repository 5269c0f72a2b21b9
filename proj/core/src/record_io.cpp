#include "charconvo/record_io.hpp"

#include <sstream>

#include "charconvo/errors.hpp"

namespace charconvo {

namespace {

std::string cuts_to_string(const std::vector<int>& cuts) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (i) os << ',';
        os << cuts[i];
    }
    return os.str();
}

std::vector<int> cuts_from_string(const std::string& s) {
    std::vector<int> cuts;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw format_error("empty cut value");
        cuts.push_back(std::stoi(tok));
    }
    return cuts;
}

}  // namespace

std::string record_to_text(const ConvRecord& rec) {
    std::ostringstream os;
    os << "convrecord v1\n";
    os << "theorem " << rec.prov.theorem << '\n';
    os << "q " << rec.prov.q << '\n';
    os << "l " << rec.prov.l << '\n';
    os << "m " << rec.prov.m << '\n';
    os << "r " << rec.prov.r << '\n';
    os << "u " << rec.prov.u << '\n';
    if (rec.prov.v) os << "v " << *rec.prov.v << '\n';
    os << "cuts " << cuts_to_string(rec.prov.cuts) << '\n';
    os << "bound " << (rec.bound == BoundKind::primal ? "primal" : "dual") << '\n';
    os << "n " << rec.n << '\n';
    os << "k " << rec.k << '\n';
    os << "delta " << rec.delta << '\n';
    if (rec.memory)
        os << "mu " << *rec.memory << '\n';
    else
        os << "mu unknown\n";
    os << "df_lower " << rec.df_lower << '\n';
    os << "kappa " << rec.kappa << '\n';
    os << "slices";
    for (auto [b, e] : rec.slice_ranges) os << ' ' << b << ':' << e;
    os << '\n';
    for (const Annotation& a : rec.annotations)
        os << "note " << a.subject << " computed " << a.computed << " published " << a.published << " locus "
           << a.locus << '\n';
    if (rec.G) {
        os << "generator\n";
        os << to_text(*rec.G);
    }
    os << "end\n";
    return os.str();
}

std::string record_to_text(const ConvRecord& rec, const VerifyReport& report) {
    std::string body = record_to_text(rec);
    body.erase(body.rfind("end\n"));
    std::ostringstream os;
    os << body << "verification\n";
    for (const CheckResult& c : report.checks) {
        os << (c.pass ? "check pass " : "check FAIL ") << c.name;
        if (!c.detail.empty()) os << " -- " << c.detail;
        os << '\n';
    }
    os << "end\n";
    return os.str();
}

ParsedRecord record_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "convrecord v1") throw format_error("not a record document");
    ParsedRecord r;
    bool have_mu = false;
    while (std::getline(is, line)) {
        if (line == "end") break;
        if (line == "generator") {
            // remainder until "end" is the polynomial matrix text
            std::ostringstream gen;
            while (std::getline(is, line)) {
                if (line == "end" || line == "verification") break;
                gen << line << '\n';
            }
            r.generator_text = gen.str();
            if (line == "verification") {
                while (std::getline(is, line) && line != "end") {
                }
            }
            break;
        }
        if (line == "verification") {
            while (std::getline(is, line) && line != "end") {
            }
            break;
        }
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "theorem")
            ls >> r.prov.theorem;
        else if (key == "q")
            ls >> r.prov.q;
        else if (key == "l")
            ls >> r.prov.l;
        else if (key == "m")
            ls >> r.prov.m;
        else if (key == "r")
            ls >> r.prov.r;
        else if (key == "u")
            ls >> r.prov.u;
        else if (key == "v") {
            int v;
            ls >> v;
            r.prov.v = v;
        } else if (key == "cuts") {
            std::string s;
            ls >> s;
            r.prov.cuts = cuts_from_string(s);
        } else if (key == "bound") {
            std::string s;
            ls >> s;
            if (s == "primal")
                r.bound = BoundKind::primal;
            else if (s == "dual")
                r.bound = BoundKind::dual;
            else
                throw format_error("bad bound kind '" + s + "'");
        } else if (key == "n")
            ls >> r.n;
        else if (key == "k")
            ls >> r.k;
        else if (key == "delta")
            ls >> r.delta;
        else if (key == "mu") {
            std::string s;
            ls >> s;
            have_mu = true;
            if (s != "unknown") r.memory = std::stoi(s);
        } else if (key == "df_lower")
            ls >> r.df_lower;
        else if (key == "kappa")
            ls >> r.kappa;
        else if (key == "slices") {
            std::string tok;
            while (ls >> tok) {
                auto colon = tok.find(':');
                if (colon == std::string::npos) throw format_error("bad slice range '" + tok + "'");
                r.slice_ranges.emplace_back(std::stoi(tok.substr(0, colon)), std::stoi(tok.substr(colon + 1)));
            }
        } else if (key == "note" || key.empty()) {
            // informational
        } else {
            throw format_error("unknown record key '" + key + "'");
        }
    }
    if (r.prov.theorem.empty() || r.n == 0 || !have_mu) throw format_error("incomplete record document");
    return r;
}

std::string charcode_to_text(const CharCode& c) {
    std::ostringstream os;
    os << "charcode q " << c.field.q() << " l " << c.l << " m " << c.m << " r " << c.r << '\n';
    os << "designed " << c.n << ' ' << c.k << ' ' << c.d << '\n';
    os << "H\n" << to_text(c.H);
    os << "G\n" << to_text(c.G);
    os << "end\n";
    return os.str();
}

ParsedCharCode charcode_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    is >> tok;
    if (tok != "charcode") throw format_error("not a character-code document");
    std::uint32_t q = 0;
    int l = 0, m = 0, r = 0, n = 0, k = 0;
    long long d = 0;
    is >> tok >> q >> tok >> l >> tok >> m >> tok >> r;
    is >> tok;
    if (tok != "designed") throw format_error("expected designed triple");
    is >> n >> k >> d;
    is >> tok;
    if (tok != "H") throw format_error("expected H section");
    std::size_t rows, cols;
    std::uint32_t mq;
    auto read_matrix = [&]() {
        if (!(is >> rows >> cols >> mq)) throw format_error("bad matrix header");
        std::ostringstream ms;
        ms << rows << ' ' << cols << ' ' << mq << '\n';
        for (std::size_t i = 0; i < rows * cols; ++i) {
            std::string e;
            if (!(is >> e)) throw format_error("matrix body too short");
            ms << e << (i % cols == cols - 1 ? '\n' : ' ');
        }
        return matrix_from_text(ms.str());
    };
    MatrixFq H = read_matrix();
    is >> tok;
    if (tok != "G") throw format_error("expected G section");
    MatrixFq G = read_matrix();
    return ParsedCharCode{q, l, m, r, n, k, d, std::move(H), std::move(G)};
}

}  // namespace charconvo
