#ifndef CHARCONVO_POLYMAT_HPP
#define CHARCONVO_POLYMAT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "charconvo/matrix.hpp"
#include "charconvo/poly.hpp"

namespace charconvo {

// k x n matrix of polynomials in D over GF(q).
class PolyMatrix {
  public:
    PolyMatrix(Field f, std::size_t k, std::size_t n)
        : f_(std::move(f)), k_(k), n_(n), e_(k * n) {}
    PolyMatrix(Field f, std::size_t k, std::size_t n, std::vector<Poly> entries);

    static PolyMatrix identity(const Field& f, std::size_t n);

    const Field& field() const { return f_; }
    std::size_t rows() const { return k_; }
    std::size_t cols() const { return n_; }
    const Poly& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, Poly p) { e_[i * n_ + j] = std::move(p); }

    bool operator==(const PolyMatrix& o) const {
        return f_ == o.f_ && k_ == o.k_ && n_ == o.n_ && e_ == o.e_;
    }

  private:
    Field f_;
    std::size_t k_, n_;
    std::vector<Poly> e_;
};

struct ConvParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<int> row_degrees;
    long long degree = 0;  // sum of row degrees
    int memory = 0;        // max row degree
};

// Row degrees, degree and memory of a generator matrix. A matrix with an
// all-zero row is rejected.
ConvParams conv_params(const PolyMatrix& g);

// Coefficient matrix of D^d across all entries.
MatrixFq coefficient_matrix(const PolyMatrix& g, int d);

// Entry (i, j) = coefficient of D^(row degree i) in g_ij. Full row rank of
// this matrix is the reducedness test.
MatrixFq high_order_matrix(const PolyMatrix& g);

bool is_reduced(const PolyMatrix& g);

// Smith normal form over GF(q)[D]: S = U * G * W with U, W products of
// unimodular row/column operations and S diagonal with monic invariant
// factors d_1 | d_2 | ...
struct SmithResult {
    std::vector<Poly> factors;  // nonzero invariant factors, in chain order
    PolyMatrix U;               // k x k
    PolyMatrix W;               // n x n
    std::size_t rank = 0;
};
SmithResult smith_normal_form(const PolyMatrix& g);

// Basicness: the matrix has a polynomial right inverse iff every invariant
// factor is 1. On success carries the inverse R with G * R = I; on failure
// the first nonunit invariant factor.
struct BasicCheck {
    bool basic = false;
    std::optional<PolyMatrix> right_inverse;
    std::optional<Poly> offending_factor;
};
BasicCheck is_basic(const PolyMatrix& g);

PolyMatrix polymat_mul(const PolyMatrix& a, const PolyMatrix& b);

std::vector<Poly> encode(const std::vector<Poly>& u, const PolyMatrix& g);
long long poly_vector_weight(const std::vector<Poly>& v);

// Text format: header "k n q maxdeg", then one line per row with the n
// comma-separated coefficient lists, space-separated.
std::string to_text(const PolyMatrix& g);
PolyMatrix polymat_from_text(const std::string& text);

}  // namespace charconvo

#endif
