#include "charconvo/matrix.hpp"

#include <sstream>

#include "charconvo/errors.hpp"

namespace charconvo {

MatrixFq::MatrixFq(Field f, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> entries)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw parameter_error("entry count does not match matrix shape");
    for (std::uint32_t x : a_)
        if (x >= f_.q()) throw parameter_error("matrix entry out of field range");
}

MatrixFq MatrixFq::identity(const Field& f, std::size_t n) {
    MatrixFq m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
    return m;
}

MatrixFq MatrixFq::from_rows(const Field& f, const std::vector<std::vector<std::uint32_t>>& rows) {
    if (rows.empty()) return MatrixFq(f, 0, 0);
    std::size_t cols = rows.front().size();
    std::vector<std::uint32_t> a;
    a.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw parameter_error("ragged rows");
        a.insert(a.end(), r.begin(), r.end());
    }
    return MatrixFq(f, rows.size(), cols, std::move(a));
}

struct MatrixOps {
    // Gaussian elimination to reduced echelon form. Pivot rule: scan columns
    // left to right, take the first nonzero entry from the current row down.
    static RrefResult rref(const MatrixFq& m) {
        const Field& f = m.f_;
        std::vector<std::uint32_t> a = m.a_;
        const std::size_t rows = m.rows_, cols = m.cols_;
        std::vector<std::size_t> pivots;
        std::size_t pr = 0;
        for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
            std::size_t sel = pr;
            while (sel < rows && a[sel * cols + pc] == 0) ++sel;
            if (sel == rows) continue;
            if (sel != pr)
                for (std::size_t j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[pr * cols + j]);
            std::uint32_t piv = a[pr * cols + pc];
            if (piv != 1) {
                std::uint32_t pinv = f.inv(piv);
                for (std::size_t j = pc; j < cols; ++j) a[pr * cols + j] = f.mul(a[pr * cols + j], pinv);
            }
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == pr) continue;
                std::uint32_t c = a[i * cols + pc];
                if (c == 0) continue;
                for (std::size_t j = pc; j < cols; ++j)
                    a[i * cols + j] = f.sub(a[i * cols + j], f.mul(c, a[pr * cols + j]));
            }
            pivots.push_back(pc);
            ++pr;
        }
        return RrefResult{MatrixFq(f, rows, cols, std::move(a)), std::move(pivots)};
    }
};

RrefResult rref(const MatrixFq& m) { return MatrixOps::rref(m); }

std::size_t rank(const MatrixFq& m) { return MatrixOps::rref(m).pivots.size(); }

MatrixFq kernel_basis(const MatrixFq& m) {
    const Field& f = m.field();
    RrefResult r = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(cols, 0);
        v[free] = 1;
        for (std::size_t t = 0; t < r.pivots.size(); ++t) v[r.pivots[t]] = f.neg(r.m.at(t, free));
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return MatrixFq(f, 0, cols);
    return MatrixFq::from_rows(f, basis);
}

MatrixFq take_rows(const MatrixFq& m, const std::vector<std::size_t>& idx) {
    std::vector<std::uint32_t> a;
    a.reserve(idx.size() * m.cols());
    for (std::size_t i : idx) {
        if (i >= m.rows()) throw parameter_error("row index out of range");
        for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(m.at(i, j));
    }
    return MatrixFq(m.field(), idx.size(), m.cols(), std::move(a));
}

MatrixFq vstack(const std::vector<MatrixFq>& parts) {
    if (parts.empty()) throw parameter_error("vstack of nothing");
    const Field& f = parts.front().field();
    std::size_t cols = parts.front().cols();
    std::size_t rows = 0;
    for (const MatrixFq& p : parts) {
        if (p.field() != f) throw parameter_error("field mismatch in vstack");
        if (p.cols() != cols) throw parameter_error("column count mismatch in vstack");
        rows += p.rows();
    }
    std::vector<std::uint32_t> a;
    a.reserve(rows * cols);
    for (const MatrixFq& p : parts) a.insert(a.end(), p.entries().begin(), p.entries().end());
    return MatrixFq(f, rows, cols, std::move(a));
}

MatrixFq pad_zero_rows(const MatrixFq& m, std::size_t target_rows) {
    if (target_rows < m.rows()) throw parameter_error("pad target smaller than matrix");
    std::vector<std::uint32_t> a = m.entries();
    a.resize(target_rows * m.cols(), 0);
    return MatrixFq(m.field(), target_rows, m.cols(), std::move(a));
}

MatrixFq matmul(const MatrixFq& a, const MatrixFq& b) {
    if (a.field() != b.field()) throw parameter_error("field mismatch in matmul");
    if (a.cols() != b.rows()) throw parameter_error("shape mismatch in matmul");
    const Field& f = a.field();
    std::vector<std::uint32_t> c(a.rows() * b.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t t = 0; t < a.cols(); ++t) {
            std::uint32_t x = a.at(i, t);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c[i * b.cols() + j] = f.add(c[i * b.cols() + j], f.mul(x, b.at(t, j)));
        }
    return MatrixFq(f, a.rows(), b.cols(), std::move(c));
}

MatrixFq transpose(const MatrixFq& m) {
    std::vector<std::uint32_t> a(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[j * m.rows() + i] = m.at(i, j);
    return MatrixFq(m.field(), m.cols(), m.rows(), std::move(a));
}

bool is_zero(const MatrixFq& m) {
    for (std::uint32_t x : m.entries())
        if (x != 0) return false;
    return true;
}

std::string to_text(const MatrixFq& m) {
    std::ostringstream os;
    os << m.rows() << ' ' << m.cols() << ' ' << m.field().q() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m.at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

MatrixFq matrix_from_text(const std::string& text) {
    std::istringstream is(text);
    std::size_t rows, cols;
    std::uint32_t q;
    if (!(is >> rows >> cols >> q)) throw format_error("matrix header: expected 'rows cols q'");
    Field f = Field::from_q(q);
    std::vector<std::uint32_t> a(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i)
        if (!(is >> a[i])) throw format_error("matrix body: too few entries");
    return MatrixFq(f, rows, cols, std::move(a));
}

}  // namespace charconvo
