#ifndef CHARCONVO_MATRIX_HPP
#define CHARCONVO_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "charconvo/field.hpp"

namespace charconvo {

// Dense matrix over GF(q), entries stored row-major as canonical encodings.
// Matrices are values: operations return new matrices, inputs are never
// modified.
class MatrixFq {
  public:
    MatrixFq(Field f, std::size_t rows, std::size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    MatrixFq(Field f, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> entries);

    static MatrixFq identity(const Field& f, std::size_t n);
    static MatrixFq from_rows(const Field& f, const std::vector<std::vector<std::uint32_t>>& rows);

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<std::uint32_t>& entries() const { return a_; }

    bool operator==(const MatrixFq& o) const {
        return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

  private:
    friend struct MatrixOps;
    Field f_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

struct RrefResult {
    MatrixFq m;
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

std::size_t rank(const MatrixFq& m);
RrefResult rref(const MatrixFq& m);

// Basis of the right kernel {v : M v^T = 0}, one vector per row;
// rows() == cols(m) - rank(m).
MatrixFq kernel_basis(const MatrixFq& m);

MatrixFq take_rows(const MatrixFq& m, const std::vector<std::size_t>& idx);
MatrixFq vstack(const std::vector<MatrixFq>& parts);
MatrixFq pad_zero_rows(const MatrixFq& m, std::size_t target_rows);
MatrixFq matmul(const MatrixFq& a, const MatrixFq& b);
MatrixFq transpose(const MatrixFq& m);
bool is_zero(const MatrixFq& m);

// Text format: first line "rows cols q", then one line per row of decimal
// canonical encodings. The field is reconstructed with its canonical modulus.
std::string to_text(const MatrixFq& m);
MatrixFq matrix_from_text(const std::string& text);

}  // namespace charconvo

#endif
