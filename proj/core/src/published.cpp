#include "charconvo/published.hpp"

#include <sstream>

namespace charconvo {

namespace {

PublishedRow row(int section_q, int printed_q, const char* family, int m, int r, int u, int pn, int pk,
                 long long pdelta, bool mu_known, long long pdf, const char* reference, const char* note = "") {
    PublishedRow w;
    w.section_q = section_q;
    w.printed_q = printed_q;
    w.family = family;
    w.m = m;
    w.r = r;
    w.u = u;
    w.pn = pn;
    w.pk = pk;
    w.pdelta = pdelta;
    w.mu_known = mu_known;
    w.pdf = pdf;
    std::ostringstream os;
    os << '(' << pn << ", " << pk << ", " << pdelta << "; " << (mu_known ? "1" : "mu") << ", d_f >= " << pdf
       << ")_" << printed_q;
    w.printed = os.str();
    w.reference = reference;
    w.note = note;
    return w;
}

std::vector<PublishedRow> make_rows() {
    std::vector<PublishedRow> rows;
    // q = 3 block
    rows.push_back(row(3, 3, "cor1", 5, 1, 2, 32, 15, 10, false, 9, "(32, 16, gamma; 1, d_f >= 5)_3"));
    rows.push_back(row(3, 3, "t2", 6, 1, 2, 64, 42, 15, true, 4, "(64, 32, gamma; 1, d_f >= 6)_3"));
    rows.push_back(row(3, 3, "cor1", 6, 1, 2, 64, 22, 15, false, 17, "(64, 16, gamma; 1, d_f >= 8)_3"));
    rows.push_back(row(3, 3, "t2", 7, 2, 3, 128, 64, 35, true, 8, "(128, 64, gamma; 1, d_f >= 6)_3"));
    rows.push_back(row(3, 3, "t2", 7, 2, 3, 128, 64, 35, true, 8, "(128, 32, gamma; 1, d_f >= 8)_3"));
    rows.push_back(row(3, 3, "cor1", 7, 2, 3, 128, 64, 35, false, 17, "(128, 32, gamma; 1, d_f >= 8)_3"));
    // q = 5 block
    rows.push_back(row(5, 5, "cor1", 5, 1, 2, 32, 15, 10, false, 9, "(32, 16, gamma; 1, d_f >= 5)_5"));
    rows.push_back(row(5, 5, "t2", 6, 1, 2, 64, 42, 15, true, 4, "(64, 32, gamma; 1, d_f >= 5)_5"));
    rows.push_back(row(5, 5, "cor1", 6, 1, 2, 64, 22, 15, false, 17, "(64, 16, gamma; 1, d_f >= 6)_5"));
    rows.push_back(row(5, 5, "t2", 7, 2, 3, 128, 64, 35, true, 8, "(128, 64, gamma; 1, d_f >= 5)_5"));
    rows.push_back(row(5, 5, "t2", 7, 2, 3, 128, 64, 35, true, 8, "(128, 32, gamma; 1, d_f >= 6)_5"));
    rows.push_back(row(5, 5, "cor1", 7, 2, 3, 128, 64, 35, false, 17, "----"));
    // q = 7 block
    rows.push_back(row(7, 7, "cor1", 5, 1, 2, 32, 15, 10, false, 9, "(32, 16, gamma; 1, d_f >= 8)_7"));
    rows.push_back(row(7, 7, "t2", 6, 1, 2, 64, 42, 15, true, 4, "(64, 48, gamma; 1, d_f >= 5)_7"));
    rows.push_back(row(7, 7, "cor1", 6, 1, 2, 64, 22, 15, false, 17, "(64, 8, gamma; 1, d_f >= 14)_7"));
    rows.push_back(row(7, 7, "cor1", 7, 2, 3, 128, 64, 35, false, 17, "(128, 64, gamma; 1, d_f >= 8)_7"));
    rows.push_back(row(7, 7, "cor1", 7, 2, 3, 128, 64, 35, false, 17, "(128, 16, gamma; 1, d_f >= 14)_7"));
    // q = 9 block; the last two rows print subscript 7 inside this block
    rows.push_back(row(9, 9, "cor1", 5, 1, 2, 32, 15, 10, false, 9, "(32, 16, gamma; 1, d_f >= 8)_9"));
    rows.push_back(row(9, 9, "t2", 6, 1, 2, 64, 42, 15, true, 4, "(64, 48, gamma; 1, d_f >= 5)_9"));
    rows.push_back(row(9, 9, "cor1", 6, 1, 2, 64, 22, 15, false, 17, "(64, 8, gamma; 1, d_f >= 12)_9"));
    rows.push_back(row(9, 7, "cor1", 7, 2, 3, 128, 64, 35, false, 17, "(128, 64, gamma; 1, d_f >= 8)_7",
                       "row prints subscript 7 inside the q=9 block"));
    rows.push_back(row(9, 7, "cor1", 7, 2, 3, 128, 64, 35, false, 17, "(128, 16, gamma; 1, d_f >= 12)_7",
                       "row prints subscript 7 inside the q=9 block"));
    // q = 11 block
    rows.push_back(row(11, 11, "cor1", 5, 1, 2, 32, 15, 10, false, 9, "(32, 8, gamma; 1, d_f >= 6)_11"));
    rows.push_back(row(11, 11, "t2", 6, 1, 2, 64, 42, 15, true, 4, "(64, 32, gamma; 1, d_f >= 5)_11"));
    rows.push_back(row(11, 11, "cor1", 6, 1, 2, 64, 22, 15, false, 17, "(64, 16, gamma; 1, d_f >= 6)_11"));
    rows.push_back(row(11, 11, "t2", 7, 2, 3, 128, 64, 35, true, 8, "(128, 64, gamma; 1, d_f >= 5)_11"));
    rows.push_back(row(11, 11, "cor1", 7, 2, 3, 128, 64, 35, false, 17, "(128, 32, gamma; 1, d_f >= 6)_11"));
    return rows;
}

}  // namespace

const std::vector<PublishedRow>& published_rows() {
    static const std::vector<PublishedRow> rows = make_rows();
    return rows;
}

RowComparison recompute_row(const PublishedRow& r) {
    DesignedTuple t = params_for(r.family, r.printed_q, 2, r.m, r.r, r.u);
    RowComparison c;
    c.row = &r;
    c.cn = t.n;
    c.ck = t.k;
    c.cdelta = t.delta;
    c.cmu = t.memory;
    c.cdf = t.df_lower;
    c.match = (c.cn == r.pn) && (c.ck == r.pk) && (c.cdelta == r.pdelta) && (c.cdf == r.pdf) &&
              (r.mu_known ? (c.cmu && *c.cmu == 1) : !c.cmu);
    std::ostringstream os;
    os << '(' << c.cn << ", " << c.ck << ", " << c.cdelta << "; " << (c.cmu ? std::to_string(*c.cmu) : "mu")
       << ", d_f >= " << c.cdf << ")_" << r.printed_q;
    c.computed_str = os.str();
    return c;
}

std::vector<RowComparison> recompute_table() {
    std::vector<RowComparison> out;
    for (const PublishedRow& r : published_rows()) out.push_back(recompute_row(r));
    return out;
}

namespace {

std::vector<PublishedExample> make_examples() {
    std::vector<PublishedExample> ex;
    ex.push_back({"t2", 3, 5, 1, 2, 32, 17, 10, 4, "published worked example (q=3, m=5)"});
    ex.push_back({"cor1", 3, 5, 1, 2, 32, 15, 10, 9, "published worked example (q=3, m=5)"});
    ex.push_back({"t2", 3, 6, 1, 2, 64, 42, 15, 4, "published worked example (q=3, m=6)"});
    ex.push_back({"cor1", 3, 6, 1, 2, 64, 22, 15, 17, "published worked example (q=3, m=6)"});
    return ex;
}

}  // namespace

std::optional<PublishedExample> published_example_for(const Provenance& prov, BoundKind bound) {
    static const std::vector<PublishedExample> examples = make_examples();
    const std::string family = bound == BoundKind::dual ? "cor1" : prov.theorem;
    for (const PublishedExample& e : examples)
        if (e.family == family && e.q == prov.q && e.m == prov.m && e.r == prov.r && e.u == prov.u) return e;
    return std::nullopt;
}

std::vector<Annotation> published_annotations(const ConvRecord& rec) {
    std::vector<Annotation> out;
    auto ex = published_example_for(rec.prov, rec.bound);
    if (!ex) return out;
    auto compare = [&](const std::string& subject, long long computed, long long published) {
        Annotation a;
        a.subject = subject;
        a.computed = std::to_string(computed);
        a.published = std::to_string(published);
        a.locus = ex->locus;
        a.agrees = computed == published;
        out.push_back(a);
    };
    compare("length n", rec.n, ex->pn);
    compare("dimension k", rec.k, ex->pk);
    compare("degree delta", rec.delta, ex->pdelta);
    compare("distance bound", rec.df_lower, ex->pdf);
    return out;
}

}  // namespace charconvo
