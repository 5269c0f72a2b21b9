#include "charconvo/polymat.hpp"

#include <algorithm>
#include <sstream>

#include "charconvo/errors.hpp"

namespace charconvo {

PolyMatrix::PolyMatrix(Field f, std::size_t k, std::size_t n, std::vector<Poly> entries)
    : f_(std::move(f)), k_(k), n_(n), e_(std::move(entries)) {
    if (e_.size() != k_ * n_) throw parameter_error("entry count does not match polynomial matrix shape");
    for (Poly& p : e_) {
        poly_trim(p);
        for (std::uint32_t c : p)
            if (c >= f_.q()) throw parameter_error("polynomial coefficient out of field range");
    }
}

PolyMatrix PolyMatrix::identity(const Field& f, std::size_t n) {
    PolyMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Poly{1});
    return m;
}

ConvParams conv_params(const PolyMatrix& g) {
    ConvParams p;
    p.n = g.cols();
    p.k = g.rows();
    p.row_degrees.resize(g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        int d = -1;
        for (std::size_t j = 0; j < g.cols(); ++j) d = std::max(d, poly_deg(g.at(i, j)));
        if (d < 0) throw parameter_error("generator matrix has an all-zero row (row " + std::to_string(i) + ")");
        p.row_degrees[i] = d;
        p.degree += d;
        p.memory = std::max(p.memory, d);
    }
    return p;
}

MatrixFq coefficient_matrix(const PolyMatrix& g, int d) {
    std::vector<std::uint32_t> a(g.rows() * g.cols(), 0);
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) {
            const Poly& p = g.at(i, j);
            if (d >= 0 && d < static_cast<int>(p.size())) a[i * g.cols() + j] = p[d];
        }
    return MatrixFq(g.field(), g.rows(), g.cols(), std::move(a));
}

MatrixFq high_order_matrix(const PolyMatrix& g) {
    ConvParams p = conv_params(g);
    std::vector<std::uint32_t> a(g.rows() * g.cols(), 0);
    for (std::size_t i = 0; i < g.rows(); ++i) {
        int d = p.row_degrees[i];
        for (std::size_t j = 0; j < g.cols(); ++j) {
            const Poly& e = g.at(i, j);
            if (d < static_cast<int>(e.size())) a[i * g.cols() + j] = e[d];
        }
    }
    return MatrixFq(g.field(), g.rows(), g.cols(), std::move(a));
}

bool is_reduced(const PolyMatrix& g) { return rank(high_order_matrix(g)) == g.rows(); }

namespace {

// t -= q * s without temporaries; the workhorse of the elimination.
void poly_submul(const Field& f, Poly& t, const Poly& q, const Poly& s) {
    if (poly_is_zero(q) || poly_is_zero(s)) return;
    std::size_t need = q.size() + s.size() - 1;
    if (t.size() < need) t.resize(need, 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        if (q[i] == 1) {
            for (std::size_t j = 0; j < s.size(); ++j)
                if (s[j] != 0) t[i + j] = f.sub(t[i + j], s[j]);
        } else {
            for (std::size_t j = 0; j < s.size(); ++j)
                if (s[j] != 0) t[i + j] = f.sub(t[i + j], f.mul(q[i], s[j]));
        }
    }
    poly_trim(t);
}

// Mutable elimination state for the Smith form, tracking S = U * G * W.
struct SmithState {
    const Field& f;
    std::size_t k, n;
    std::vector<Poly> s;
    std::vector<Poly> u;  // k x k
    std::vector<Poly> w;  // n x n

    Poly& S(std::size_t i, std::size_t j) { return s[i * n + j]; }
    Poly& U(std::size_t i, std::size_t j) { return u[i * k + j]; }
    Poly& W(std::size_t i, std::size_t j) { return w[i * n + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(S(a, j), S(b, j));
        for (std::size_t j = 0; j < k; ++j) std::swap(U(a, j), U(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < k; ++i) std::swap(S(i, a), S(i, b));
        for (std::size_t i = 0; i < n; ++i) std::swap(W(i, a), W(i, b));
    }
    // row a -= q * row b
    void row_axpy(std::size_t a, const Poly& q, std::size_t b) {
        if (poly_is_zero(q)) return;
        for (std::size_t j = 0; j < n; ++j) poly_submul(f, S(a, j), q, S(b, j));
        for (std::size_t j = 0; j < k; ++j) poly_submul(f, U(a, j), q, U(b, j));
    }
    // col a -= q * col b
    void col_axpy(std::size_t a, const Poly& q, std::size_t b) {
        if (poly_is_zero(q)) return;
        for (std::size_t i = 0; i < k; ++i) poly_submul(f, S(i, a), q, S(i, b));
        for (std::size_t i = 0; i < n; ++i) poly_submul(f, W(i, a), q, W(i, b));
    }
    void scale_row(std::size_t a, std::uint32_t c) {
        for (std::size_t j = 0; j < n; ++j) S(a, j) = poly_scale(f, c, S(a, j));
        for (std::size_t j = 0; j < k; ++j) U(a, j) = poly_scale(f, c, U(a, j));
    }
    void add_row(std::size_t a, std::size_t b) {  // row a += row b
        for (std::size_t j = 0; j < n; ++j) S(a, j) = poly_add(f, S(a, j), S(b, j));
        for (std::size_t j = 0; j < k; ++j) U(a, j) = poly_add(f, U(a, j), U(b, j));
    }
};

}  // namespace

SmithResult smith_normal_form(const PolyMatrix& g) {
    const Field& f = g.field();
    const std::size_t k = g.rows(), n = g.cols();

    SmithState st{f, k, n, {}, {}, {}};
    st.s.resize(k * n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) st.S(i, j) = g.at(i, j);
    st.u.resize(k * k);
    for (std::size_t i = 0; i < k; ++i) st.U(i, i) = Poly{1};
    st.w.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) st.W(i, i) = Poly{1};

    const std::size_t steps = std::min(k, n);
    std::size_t t = 0;
    for (; t < steps; ++t) {
        for (;;) {
            // minimal-degree nonzero entry of the trailing submatrix
            std::size_t pi = k, pj = n;
            int best = -1;
            for (std::size_t i = t; i < k; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    int d = poly_deg(st.S(i, j));
                    if (d >= 0 && (best < 0 || d < best)) {
                        best = d;
                        pi = i;
                        pj = j;
                    }
                }
            if (best < 0) goto done;  // submatrix entirely zero
            st.swap_rows(t, pi);
            st.swap_cols(t, pj);
            if (st.S(t, t).back() != 1) st.scale_row(t, f.inv(st.S(t, t).back()));

            if (best == 0) {
                // unit pivot: one clean sweep, everything divides
                for (std::size_t i = t + 1; i < k; ++i)
                    if (!poly_is_zero(st.S(i, t))) {
                        Poly q = st.S(i, t);  // copy: the sweep rewrites this entry
                        st.row_axpy(i, q, t);
                    }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!poly_is_zero(st.S(t, j))) {
                        Poly q = st.S(t, j);
                        st.col_axpy(j, q, t);
                    }
                break;
            }

            bool clean = true;
            for (std::size_t i = t + 1; i < k; ++i) {
                if (poly_is_zero(st.S(i, t))) continue;
                PolyDivMod dm = poly_divmod(f, st.S(i, t), st.S(t, t));
                st.row_axpy(i, dm.quot, t);
                if (!poly_is_zero(st.S(i, t))) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (poly_is_zero(st.S(t, j))) continue;
                PolyDivMod dm = poly_divmod(f, st.S(t, j), st.S(t, t));
                st.col_axpy(j, dm.quot, t);
                if (!poly_is_zero(st.S(t, j))) clean = false;
            }
            if (!clean) continue;  // smaller-degree remainders appeared

            // pivot must divide the rest of the submatrix
            bool divides_all = true;
            for (std::size_t i = t + 1; i < k && divides_all; ++i)
                for (std::size_t j = t + 1; j < n && divides_all; ++j) {
                    if (poly_is_zero(st.S(i, j))) continue;
                    if (!poly_is_zero(poly_divmod(f, st.S(i, j), st.S(t, t)).rem)) {
                        st.add_row(t, i);
                        divides_all = false;
                    }
                }
            if (divides_all) break;
        }
    }
done:

    SmithResult r{{}, PolyMatrix(f, k, k), PolyMatrix(f, n, n), 0};
    for (std::size_t i = 0; i < std::min(k, n); ++i)
        if (!poly_is_zero(st.S(i, i))) r.factors.push_back(st.S(i, i));
    r.rank = r.factors.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) r.U.set(i, j, st.U(i, j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.W.set(i, j, st.W(i, j));
    return r;
}

BasicCheck is_basic(const PolyMatrix& g) {
    if (g.rows() > g.cols()) throw parameter_error("generator matrix must have k <= n");
    conv_params(g);  // rejects zero rows
    SmithResult s = smith_normal_form(g);
    if (s.rank < g.rows())
        throw parameter_error("generator matrix is rank-deficient over the rational function field");
    BasicCheck r;
    for (const Poly& d : s.factors)
        if (!poly_is_one(d)) {
            r.basic = false;
            r.offending_factor = d;
            return r;
        }
    r.basic = true;
    // S = U G W = [I | 0], so R = W [I;0] U satisfies G R = I.
    const std::size_t k = g.rows(), n = g.cols();
    PolyMatrix wik(g.field(), n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) wik.set(i, j, s.W.at(i, j));
    r.right_inverse = polymat_mul(wik, s.U);
    return r;
}

PolyMatrix polymat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.field() != b.field()) throw parameter_error("field mismatch in polynomial matrix product");
    if (a.cols() != b.rows()) throw parameter_error("shape mismatch in polynomial matrix product");
    const Field& f = a.field();
    PolyMatrix c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t t = 0; t < a.cols(); ++t) {
            const Poly& x = a.at(i, t);
            if (poly_is_zero(x)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (poly_is_zero(b.at(t, j))) continue;
                c.set(i, j, poly_add(f, c.at(i, j), poly_mul(f, x, b.at(t, j))));
            }
        }
    return c;
}

std::vector<Poly> encode(const std::vector<Poly>& u, const PolyMatrix& g) {
    if (u.size() != g.rows()) throw parameter_error("message length does not match generator rows");
    const Field& f = g.field();
    std::vector<Poly> v(g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (poly_is_zero(u[i])) continue;
        for (std::size_t j = 0; j < g.cols(); ++j) {
            if (poly_is_zero(g.at(i, j))) continue;
            v[j] = poly_add(f, v[j], poly_mul(f, u[i], g.at(i, j)));
        }
    }
    return v;
}

long long poly_vector_weight(const std::vector<Poly>& v) {
    long long w = 0;
    for (const Poly& p : v) w += poly_weight(p);
    return w;
}

std::string to_text(const PolyMatrix& g) {
    int maxdeg = 0;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) maxdeg = std::max(maxdeg, poly_deg(g.at(i, j)));
    std::ostringstream os;
    os << g.rows() << ' ' << g.cols() << ' ' << g.field().q() << ' ' << maxdeg << '\n';
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) {
            if (j) os << ' ';
            os << poly_to_string(g.at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

PolyMatrix polymat_from_text(const std::string& text) {
    std::istringstream is(text);
    std::size_t k, n;
    std::uint32_t q;
    int maxdeg;
    if (!(is >> k >> n >> q >> maxdeg)) throw format_error("polynomial matrix header: expected 'k n q maxdeg'");
    Field f = Field::from_q(q);
    std::vector<Poly> e(k * n);
    for (std::size_t i = 0; i < k * n; ++i) {
        std::string tok;
        if (!(is >> tok)) throw format_error("polynomial matrix body: too few entries");
        e[i] = poly_from_string(f, tok);
    }
    return PolyMatrix(f, k, n, std::move(e));
}

}  // namespace charconvo
