#include "charconvo/convo.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "charconvo/distance.hpp"
#include "charconvo/errors.hpp"

namespace charconvo {

namespace {

long long ipow(int base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

void validate_q(int q) {
    if (q < 3 || q % 2 == 0) throw parameter_error("q must be an odd prime power, got " + std::to_string(q));
    int p = q;
    for (int d = 3; d * d <= q; d += 2)
        if (q % d == 0) {
            p = d;
            break;
        }
    int t = q;
    while (t % p == 0) t /= p;
    if (t != 1) throw parameter_error("q must be an odd prime power, got " + std::to_string(q));
}

// Rows of the weight-w class of Z_l^m, summed over a half-open weight
// interval (lo, hi].
long long band_rows(int m, int l, int lo, int hi) {
    long long s = 0;
    for (int w = lo + 1; w <= hi; ++w) s += weight_count(m, w, l);
    return s;
}

std::string sum_str(int lo, int hi) {
    return "sum_{i=" + std::to_string(lo) + "}^{" + std::to_string(hi) + "}";
}

void validate_cuts(const std::vector<int>& cuts, int m, int l) {
    if (cuts.empty()) throw parameter_error("need at least one weight cut");
    const int wmax = m * (l - 1);
    if (cuts.front() >= wmax) throw parameter_error("first cut must be below the maximal weight " + std::to_string(wmax));
    if (cuts.back() < 0) throw parameter_error("last cut (the threshold r) must be >= 0");
    for (std::size_t i = 1; i < cuts.size(); ++i)
        if (cuts[i] >= cuts[i - 1]) throw parameter_error("weight cuts must be strictly descending");
}

}  // namespace

DesignedTuple params_for(const std::string& theorem, int q, int l, int m, int r, int u,
                         std::optional<int> v, const std::vector<int>& cuts_in) {
    validate_q(q);
    if (l < 2) throw parameter_error("l must be >= 2");
    if ((q - 1) % l != 0) throw parameter_error("l must divide q-1");
    if (m < 1) throw parameter_error("m must be >= 1");
    const int wmax = m * (l - 1);

    DesignedTuple t;
    t.theorem = theorem;
    t.q = q;
    t.l = l;
    t.m = m;

    std::vector<int> cuts;
    if (theorem == "t2" || theorem == "cor1") {
        if (l != 2) throw parameter_error(theorem + " applies to the binary group only (l = 2)");
        if (m < 3) throw parameter_error("m must be >= 3");
        if (r < 1) throw parameter_error("r must be >= 1");
        if (!(r < u)) throw parameter_error("require r < u");
        if (!(u < m)) throw parameter_error("require u < m");
        cuts = {u, r};
    } else if (theorem == "t3") {
        if (l != 2) throw parameter_error("t3 applies to the binary group only (l = 2)");
        if (m < 4) throw parameter_error("m must be >= 4");
        if (!v) throw parameter_error("t3 needs the middle cut v");
        if (r < 1) throw parameter_error("r must be >= 1");
        if (!(r < *v)) throw parameter_error("require r < v");
        if (!(*v < u)) throw parameter_error("require v < u");
        if (!(u < m)) throw parameter_error("require u < m");
        cuts = {u, *v, r};
        t.v = v;
    } else if (theorem == "t4") {
        if (l < 3) throw parameter_error("l must be >= 3");
        if (m < 3) throw parameter_error("m must be >= 3");
        if (r < 1) throw parameter_error("r must be >= 1");
        if (!(r < u)) throw parameter_error("require r < u");
        if (!(u < wmax)) throw parameter_error("require u < m(l-1) = " + std::to_string(wmax));
        cuts = {u, r};
    } else if (theorem == "multi") {
        cuts = cuts_in;
        validate_cuts(cuts, m, l);
    } else {
        throw parameter_error("unknown construction '" + theorem + "'");
    }

    t.cuts = cuts;
    t.r = cuts.back();
    t.u = cuts.front();

    // Slice row counts: weights above cuts[0], then each band down to the
    // threshold.
    std::vector<long long> rows(cuts.size());
    rows[0] = band_rows(m, l, cuts[0], wmax);
    for (std::size_t j = 1; j < cuts.size(); ++j) rows[j] = band_rows(m, l, cuts[j], cuts[j - 1]);

    t.condition_lhs = rows[0];
    t.condition_rhs = 0;
    for (std::size_t j = 1; j < rows.size(); ++j) t.condition_rhs = std::max(t.condition_rhs, rows[j]);

    if (rows[0] < t.condition_rhs)
        throw parameter_error("rank condition violated: " + sum_str(cuts[0] + 1, wmax) + " = " +
                              std::to_string(rows[0]) + " < " + std::to_string(t.condition_rhs) +
                              " rows in a later slice");
    if (theorem == "t3") {
        // additional chain of the two-memory statement
        if (rows[2] < rows[1])
            throw parameter_error("rank condition violated: " + sum_str(cuts[2] + 1, cuts[1]) + " = " +
                                  std::to_string(rows[2]) + " < " + sum_str(cuts[1] + 1, cuts[0]) + " = " +
                                  std::to_string(rows[1]));
    }

    if (l >= 3) {
        // as-published condition with upper summation limit m instead of m(l-1)
        long long lhs = band_rows(m, l, std::min(t.u, m), m);
        long long rhs = band_rows(m, l, t.r, t.u);
        t.published_condition = lhs >= rhs;
    }

    t.n = static_cast<int>(ipow(l, m));
    t.k = static_cast<int>(rows[0]);

    // Row degrees of the assembled generator: row j formally carries
    // degree max{ i >= 1 : j < rows[i] }.
    long long delta = 0;
    for (long long j = 0; j < rows[0]; ++j) {
        int d = 0;
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (j < rows[i]) d = static_cast<int>(i);
        delta += d;
    }
    t.delta = delta;
    t.memory = static_cast<int>(cuts.size()) - 1;

    RadixSplit sp = split_r(t.r, l);
    t.df_lower = (sp.b + 2) * ipow(l, sp.a);
    if (l == 2) t.df_lower = ipow(2, t.r + 1);

    if (theorem == "t3") {
        long long published = rows[2];
        if (published != t.delta) t.published_delta = published;
    }

    if (theorem == "cor1") {
        t.k = static_cast<int>(weight_partial_sum_binary(m, t.u));
        t.memory.reset();
        t.df_lower = ipow(2, m - t.u) + 1;
    }
    return t;
}

std::vector<MatrixFq> split_parity_check(const MatrixFq& h, const std::vector<int>& row_counts) {
    long long total = 0;
    for (int c : row_counts) {
        if (c < 1) throw parameter_error("each slice needs at least one row");
        total += c;
    }
    if (total != static_cast<long long>(h.rows()))
        throw parameter_error("slice row counts sum to " + std::to_string(total) + ", matrix has " +
                              std::to_string(h.rows()) + " rows");
    std::vector<MatrixFq> slices;
    std::size_t start = 0;
    for (int c : row_counts) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(c));
        for (int i = 0; i < c; ++i) idx[static_cast<std::size_t>(i)] = start + static_cast<std::size_t>(i);
        slices.push_back(take_rows(h, idx));
        start += static_cast<std::size_t>(c);
    }
    return slices;
}

PolyMatrix assemble_generator(const std::vector<MatrixFq>& slices) {
    if (slices.empty()) throw parameter_error("no slices to assemble");
    const Field& f = slices.front().field();
    const std::size_t n = slices.front().cols();
    const std::size_t kappa = slices.front().rows();
    for (std::size_t i = 1; i < slices.size(); ++i) {
        if (slices[i].field() != f) throw parameter_error("field mismatch among slices");
        if (slices[i].cols() != n) throw parameter_error("column count mismatch among slices");
    }
    if (rank(slices[0]) != kappa)
        throw parameter_error("rank condition violated: slice 0 has rank " + std::to_string(rank(slices[0])) +
                              " < " + std::to_string(kappa) + " rows");
    for (std::size_t i = 1; i < slices.size(); ++i) {
        if (slices[i].rows() > kappa)
            throw parameter_error("rank condition violated: slice " + std::to_string(i) + " has " +
                                  std::to_string(slices[i].rows()) + " rows, kappa = " + std::to_string(kappa));
    }
    PolyMatrix g(f, kappa, n);
    for (std::size_t i = 0; i < kappa; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly p;
            for (std::size_t t = 0; t < slices.size(); ++t) {
                std::uint32_t c = i < slices[t].rows() ? slices[t].at(i, j) : 0;
                p.push_back(c);
            }
            poly_trim(p);
            g.set(i, j, std::move(p));
        }
    return g;
}

namespace {

ConvRecord build_record(const DesignedTuple& t) {
    Field f = Field::from_q(static_cast<std::uint32_t>(t.q));
    CharCode code = build_char_code(f, t.l, t.m, t.cuts.back());

    const int wmax = t.m * (t.l - 1);
    std::vector<int> counts(t.cuts.size());
    counts[0] = static_cast<int>(band_rows(t.m, t.l, t.cuts[0], wmax));
    for (std::size_t j = 1; j < t.cuts.size(); ++j)
        counts[j] = static_cast<int>(band_rows(t.m, t.l, t.cuts[j], t.cuts[j - 1]));

    std::vector<MatrixFq> slices = split_parity_check(code.H, counts);
    PolyMatrix g = assemble_generator(slices);

    if (static_cast<int>(g.rows()) != t.k || static_cast<int>(g.cols()) != t.n)
        throw std::logic_error("assembled generator shape disagrees with designed parameters");

    ConvRecord rec(f);
    rec.prov.theorem = t.theorem;
    rec.prov.q = t.q;
    rec.prov.l = t.l;
    rec.prov.m = t.m;
    rec.prov.r = t.r;
    rec.prov.u = t.u;
    rec.prov.v = t.v;
    rec.prov.cuts = t.cuts;
    rec.bound = BoundKind::primal;
    rec.n = t.n;
    rec.k = t.k;
    rec.delta = t.delta;
    rec.memory = t.memory;
    rec.df_lower = t.df_lower;
    rec.kappa = t.k;
    int start = 0;
    for (int c : counts) {
        rec.slice_ranges.emplace_back(start, start + c);
        start += c;
    }
    rec.H = code.H;
    rec.G = std::move(g);
    if (t.published_delta) {
        Annotation a;
        a.subject = "degree delta";
        a.computed = std::to_string(t.delta);
        a.published = std::to_string(*t.published_delta);
        a.locus = "published two-memory parameter formula";
        a.agrees = false;
        rec.annotations.push_back(a);
    }
    return rec;
}

bool tuple_valid(const std::string& theorem, int q, int l, int m, int r, int u, std::optional<int> v) {
    try {
        params_for(theorem, q, l, m, r, u, v);
        return true;
    } catch (const parameter_error&) {
        return false;
    }
}

}  // namespace

ConvRecord construct_unit_memory_binary(int q, int m, int r, int u) {
    return build_record(params_for("t2", q, 2, m, r, u));
}

ConvRecord construct_two_memory_binary(int q, int m, int r, int v, int u) {
    return build_record(params_for("t3", q, 2, m, r, u, v));
}

ConvRecord construct_unit_memory_lary(int q, int l, int m, int r, int u) {
    return build_record(params_for("t4", q, l, m, r, u));
}

ConvRecord construct_multi_memory(int q, int l, int m, const std::vector<int>& cuts) {
    validate_cuts(cuts, m, l);
    // Promote to the named construction when its preconditions hold, so the
    // two-cut form is indistinguishable from the unit-memory constructors.
    std::string label = "multi";
    if (cuts.size() == 2 && l == 2 && tuple_valid("t2", q, l, m, cuts[1], cuts[0], std::nullopt))
        label = "t2";
    else if (cuts.size() == 2 && l >= 3 && tuple_valid("t4", q, l, m, cuts[1], cuts[0], std::nullopt))
        label = "t4";
    else if (cuts.size() == 3 && l == 2 && tuple_valid("t3", q, l, m, cuts[2], cuts[0], cuts[1]))
        label = "t3";
    std::optional<int> v;
    if (label == "t3") v = cuts[1];
    if (label == "multi")
        return build_record(params_for("multi", q, l, m, cuts.back(), cuts.front(), std::nullopt, cuts));
    return build_record(params_for(label, q, l, m, cuts.back(), cuts.front(), v));
}

ConvRecord dual_record(const ConvRecord& rec) {
    if (rec.prov.theorem != "t2" || rec.bound != BoundKind::primal)
        throw parameter_error("dual records are defined for unit-memory binary (t2) records only");
    DesignedTuple t = params_for("cor1", rec.prov.q, 2, rec.prov.m, rec.prov.r, rec.prov.u);
    ConvRecord d(rec.field);
    d.prov = rec.prov;
    d.prov.theorem = "cor1";
    d.bound = BoundKind::dual;
    d.n = t.n;
    d.k = t.k;
    d.delta = t.delta;
    d.memory = std::nullopt;
    d.df_lower = t.df_lower;
    d.kappa = rec.kappa;
    d.slice_ranges = rec.slice_ranges;
    d.H = rec.H;
    d.G = std::nullopt;
    return d;
}

ConvRecord construct_from_provenance(const Provenance& prov) {
    if (prov.theorem == "t2") return construct_unit_memory_binary(prov.q, prov.m, prov.r, prov.u);
    if (prov.theorem == "cor1") return dual_record(construct_unit_memory_binary(prov.q, prov.m, prov.r, prov.u));
    if (prov.theorem == "t3") {
        if (!prov.v) throw parameter_error("t3 provenance needs v");
        return construct_two_memory_binary(prov.q, prov.m, prov.r, *prov.v, prov.u);
    }
    if (prov.theorem == "t4") return construct_unit_memory_lary(prov.q, prov.l, prov.m, prov.r, prov.u);
    if (prov.theorem == "multi") return construct_multi_memory(prov.q, prov.l, prov.m, prov.cuts);
    throw parameter_error("unknown construction '" + prov.theorem + "'");
}

namespace {

std::vector<MatrixFq> record_slices(const ConvRecord& rec) {
    std::vector<MatrixFq> slices;
    for (auto [b, e] : rec.slice_ranges) {
        std::vector<std::size_t> idx;
        for (int i = b; i < e; ++i) idx.push_back(static_cast<std::size_t>(i));
        slices.push_back(take_rows(*rec.H, idx));
    }
    return slices;
}

void check(VerifyReport& rep, const std::string& name, bool pass, const std::string& detail = "") {
    rep.checks.push_back({name, pass, detail});
}

}  // namespace

VerifyReport verify_record(const ConvRecord& rec) { return verify_record(rec, SearchBudget{}, true); }

VerifyReport verify_record(const ConvRecord& rec, const SearchBudget& budget, bool certify) {
    VerifyReport rep;
    rep.annotations = rec.annotations;

    if (!rec.H) {
        check(rep, "split matrix present", false, "record carries no parity-check matrix");
        return rep;
    }
    std::vector<MatrixFq> slices = record_slices(rec);
    if (slices.empty()) {
        check(rep, "slices present", false);
        return rep;
    }

    std::size_t kappa_rank = rank(slices[0]);
    check(rep, "kappa equals rank of slice 0",
          kappa_rank == slices[0].rows() && static_cast<int>(kappa_rank) == rec.kappa,
          "rank " + std::to_string(kappa_rank) + ", kappa " + std::to_string(rec.kappa));
    bool bounded = true;
    for (std::size_t i = 1; i < slices.size(); ++i)
        if (rank(slices[i]) > static_cast<std::size_t>(rec.kappa)) bounded = false;
    check(rep, "later slice ranks bounded by kappa", bounded);

    DesignedTuple t = params_for(rec.prov.theorem, rec.prov.q, rec.prov.l, rec.prov.m, rec.prov.r, rec.prov.u,
                                 rec.prov.v, rec.prov.cuts);
    bool params_ok = t.n == rec.n && t.k == rec.k && t.delta == rec.delta && t.df_lower == rec.df_lower &&
                     t.memory == rec.memory;
    check(rep, "parameters match construction formulas", params_ok);

    if (rec.bound == BoundKind::primal) {
        if (!rec.G) {
            check(rep, "generator present", false);
            return rep;
        }
        ConvParams cp = conv_params(*rec.G);
        check(rep, "generator row degrees consistent",
              cp.n == static_cast<std::size_t>(rec.n) && cp.k == static_cast<std::size_t>(rec.k) &&
                  cp.degree == rec.delta && rec.memory && cp.memory == *rec.memory,
              "degree " + std::to_string(cp.degree) + ", memory " + std::to_string(cp.memory));

        BasicCheck bc = is_basic(*rec.G);
        bool inverse_ok = false;
        if (bc.basic && bc.right_inverse) {
            PolyMatrix prod = polymat_mul(*rec.G, *bc.right_inverse);
            inverse_ok = prod == PolyMatrix::identity(rec.G->field(), rec.G->rows());
        }
        check(rep, "generator is basic (right inverse verified)", bc.basic && inverse_ok,
              bc.basic ? "" : "nonunit invariant factor " + poly_to_string(bc.offending_factor.value_or(Poly{})));
        check(rep, "generator is reduced", is_reduced(*rec.G));
    } else {
        check(rep, "primal and dual dimensions partition n", rec.kappa + rec.k == rec.n);
        // Window orthogonality: every block-code codeword, placed at any block
        // offset of the window, is orthogonal to the rows of the primal
        // generator; equivalently each slice annihilates the kernel of H.
        MatrixFq block_code = kernel_basis(*rec.H);
        bool ortho = true;
        for (const MatrixFq& s : slices)
            if (!is_zero(matmul(s, transpose(block_code)))) ortho = false;
        check(rep, "window orthogonality of the block code", ortho);
    }

    if (certify) {
        CertifyReport cr = certify_bound(rec, budget);
        std::string detail = cr.detail;
        check(rep, "distance bound certificate", cr.status != CertifyStatus::mismatch, detail);
    }
    return rep;
}

}  // namespace charconvo
